#pragma once

#include <array>
#include <functional>
#include <map>

#include "grk/ratfunc.hpp"
#include "grk/weyl.hpp"

namespace grk {

/* Element of the group algebra of W_af with fraction-field coefficients:
   finitely supported map x -> f, meaning sum f ox x. */
using SmashElt = std::map<AffElt, RatFunc>;

/* Element of the commutative subalgebra spanned by translations:
   coordinate gamma -> coefficient of t_gamma. */
using GrClass = std::map<Coweight, RatFunc>;

struct Config {
	int64_t bruhat_window = 20;   // max length admitted in Bruhat comparisons
	int si_n_start = 2;           // first depth multiplier for the semi-infinite order
	int si_n_cap = 6;             // give up past this depth
	int deep_n = 2;               // deep-translation multiplier: beta = -deep_n * 2rho^vee
	int window_radius = 4;        // max |coordinate| of translations in user-facing expansions
	int64_t support_window = 64;  // max element length inside smash products
	bool cache = true;
};

/* One computation context: root datum, Weyl tables, knobs, caches. The caches
   are transparent (disabling them changes nothing but speed). */
struct Ctx {
	RootDatum rd;
	WeylGroup W;
	Config cfg;

	explicit Ctx(Type t, Config c = {}) : rd(t), W(rd), cfg(c) {}
	Ctx(const Ctx&) = delete;
	Ctx& operator=(const Ctx&) = delete;

	uint8_t rank8() const { return static_cast<uint8_t>(rd.rank()); }

	/* Strictly antidominant probe translation: n times the shortest integer
	   coweight pairing negatively with every simple root. */
	Coweight deep(int n) const { return static_cast<int32_t>(n) * deep_dir(); }
	Coweight deep() const { return deep(cfg.deep_n); }

	Coweight deep_dir() const {
		if (deep_dir_.v.rank) return deep_dir_;
		const int r = rd.rank();
		Coweight best;
		int64_t best_len = -1;
		Coweight b;
		b.v.rank = static_cast<uint8_t>(r);
		std::array<int32_t, kMaxRank> c{};
		std::function<void(int)> rec = [&](int k) {
			if (k == r) {
				for (int i = 0; i < r; ++i) b.v[i] = c[static_cast<size_t>(i)];
				int64_t len = 0;
				for (int i = 1; i <= r; ++i) {
					int64_t p = pairing(b, rd.simple_root(i));
					if (p >= 0) return;
				}
				for (const Root& rt : rd.positive_roots()) len -= pairing(b, rt.root);
				if (best_len < 0 || len < best_len || (len == best_len && b.v < best.v)) {
					best_len = len;
					best = b;
				}
				return;
			}
			for (int32_t v = -4; v <= 4; ++v) {
				c[static_cast<size_t>(k)] = v;
				rec(k + 1);
			}
		};
		rec(0);
		if (best_len < 0) throw config_error("no strictly antidominant coweight in search box");
		deep_dir_ = best;
		return deep_dir_;
	}

	mutable Coweight deep_dir_;

	mutable std::map<AffElt, SmashElt> d_cache;
	mutable std::map<AffElt, GrClass> class_cache;
	mutable std::map<Coweight, AffElt> minrep_cache;

	void clear_caches() const {
		d_cache.clear();
		class_cache.clear();
		minrep_cache.clear();
	}
};

// minimal-length representative of the coset with coordinate delta
inline AffElt coset_minrep(const Ctx& ctx, const Coweight& delta) {
	if (ctx.cfg.cache) {
		auto it = ctx.minrep_cache.find(delta);
		if (it != ctx.minrep_cache.end()) return it->second;
	}
	AffElt m = ctx.W.min_coset_rep(ctx.W.translation(delta));
	if (ctx.cfg.cache) ctx.minrep_cache.emplace(delta, m);
	return m;
}

}  // namespace grk
