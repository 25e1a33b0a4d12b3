#pragma once

#include <vector>

#include "grk/context.hpp"

namespace grk {

/* Action of a finite Weyl element on coefficients. Translations act trivially
   on the coefficient field (level zero), so affine elements act through their
   finite part. */
inline RatFunc rf_act(const Ctx& ctx, WIdx u, const RatFunc& f) {
	if (u == ctx.W.id()) return f;
	const WeylGroup& W = ctx.W;
	return rf_map_exponents(f, [&](const IntVec& m) {
		Weight lm{m};
		return W.act(u, lm).v;
	});
}

inline void sm_add_term(SmashElt& a, const AffElt& x, const RatFunc& f) {
	if (f.is_zero()) return;
	auto it = a.find(x);
	if (it == a.end()) {
		a.emplace(x, f);
		return;
	}
	it->second = it->second + f;
	if (it->second.is_zero()) a.erase(it);
}

inline SmashElt sm_one(const Ctx& ctx) {
	SmashElt a;
	a.emplace(ctx.W.aff_id(), rf_one(ctx.rank8()));
	return a;
}

inline SmashElt sm_term(const AffElt& x, const RatFunc& f) {
	SmashElt a;
	if (!f.is_zero()) a.emplace(x, f);
	return a;
}

inline SmashElt sm_add(const SmashElt& a, const SmashElt& b) {
	SmashElt c = a;
	for (const auto& [x, f] : b) sm_add_term(c, x, f);
	return c;
}

inline SmashElt sm_neg(const SmashElt& a) {
	SmashElt c;
	for (const auto& [x, f] : a) c.emplace(x, -f);
	return c;
}

inline SmashElt sm_sub(const SmashElt& a, const SmashElt& b) { return sm_add(a, sm_neg(b)); }

inline SmashElt sm_scale(const RatFunc& f, const SmashElt& a) {
	SmashElt c;
	if (f.is_zero()) return c;
	for (const auto& [x, g] : a) {
		RatFunc h = f * g;
		if (!h.is_zero()) c.emplace(x, h);
	}
	return c;
}

/* (f ox x)(g ox y) = f * x(g) ox xy. */
inline SmashElt sm_mul(const Ctx& ctx, const SmashElt& a, const SmashElt& b) {
	SmashElt c;
	for (const auto& [x, f] : a) {
		for (const auto& [y, g] : b) {
			AffElt z = ctx.W.aff_mul(x, y);
			if (ctx.W.aff_len(z) > ctx.cfg.support_window)
				throw window_error("product support exceeds the length window");
			sm_add_term(c, z, f * rf_act(ctx, x.u, g));
		}
	}
	return c;
}

inline bool sm_equal(const SmashElt& a, const SmashElt& b) {
	if (a.size() != b.size()) {
		// sizes can differ only through stored zeros; maps never hold them
		return false;
	}
	auto it = a.begin();
	auto jt = b.begin();
	for (; it != a.end(); ++it, ++jt) {
		if (!(it->first == jt->first)) return false;
		if (!rf_equal(it->second, jt->second)) return false;
	}
	return true;
}

/* Images of the Demazure generators inside the smash product:
     i in I:  1/(1-e^{a_i}) ox 1  -  e^{a_i}/(1-e^{a_i}) ox s_i
     i = 0:   1/(1-e^{-th}) ox 1  -  e^{-th}/(1-e^{-th}) ox s_0
   with s_0 = s_th t_{-th^vee}. */
inline SmashElt gen_image(const Ctx& ctx, int i) {
	const uint8_t r = ctx.rank8();
	LaurentPoly one = lp_one(r);
	Weight al = (i == 0) ? -ctx.rd.theta().root : ctx.rd.simple_root(i);
	LaurentPoly den = one - lp_exp(al);
	SmashElt a;
	sm_add_term(a, ctx.W.aff_id(), rf_fraction(one, den));
	sm_add_term(a, ctx.W.aff_gen(i), rf_fraction(-lp_exp(al), den));
	return a;
}

/* D_x as a product of generator images along a reduced word, with suffix
   sharing through the cache. */
inline SmashElt d_op(const Ctx& ctx, const AffElt& x) {
	if (ctx.W.is_aff_id(x)) return sm_one(ctx);
	if (ctx.cfg.cache) {
		auto it = ctx.d_cache.find(x);
		if (it != ctx.d_cache.end()) return it->second;
	}
	std::vector<uint8_t> word = ctx.W.reduced_word(x);
	AffElt rest = ctx.W.aff_mul(ctx.W.aff_gen(word[0]), x);
	SmashElt res = sm_mul(ctx, gen_image(ctx, word[0]), d_op(ctx, rest));
	if (ctx.cfg.cache) ctx.d_cache.emplace(x, res);
	return res;
}

inline AffElt finite_elt(const Ctx& ctx, WIdx u) { return AffElt{u, ctx.rd.zero_coweight()}; }

inline SmashElt d_op_finite(const Ctx& ctx, WIdx u) { return d_op(ctx, finite_elt(ctx, u)); }

/* The polynomial representation: x acts on coefficients through its finite
   part, so  (sum f_x ox x) . g = sum f_x * x(g). */
inline RatFunc poly_rep_apply(const Ctx& ctx, const SmashElt& a, const RatFunc& g) {
	RatFunc res = rf_zero(ctx.rank8());
	for (const auto& [x, f] : a) res = res + f * rf_act(ctx, x.u, g);
	return res;
}

/* Closed form of the longest Demazure operator:
     D_{w_0} = sum_{w in W} w( 1/prod_{a>0}(1-e^a) ) ox w. */
inline SmashElt d_w0_closed(const Ctx& ctx) {
	const uint8_t r = ctx.rank8();
	RatFunc base = rf_one(r);
	for (const Root& rt : ctx.rd.positive_roots())
		base = base * rf_fraction(lp_one(r), lp_one(r) - lp_exp(rt.root));
	SmashElt res;
	for (WIdx w = 0; w < ctx.W.size(); ++w)
		sm_add_term(res, finite_elt(ctx, w), rf_act(ctx, w, base));
	return res;
}

/* Character of the irreducible with dominant highest weight la. In this
   convention the generators lower rather than raise, so the full character is
   D_{w_0} applied to the lowest weight e^{w_0(la)}. */
inline RatFunc full_character(const Ctx& ctx, const Weight& la) {
	return poly_rep_apply(ctx, d_op_finite(ctx, ctx.W.w0()), rf_monomial(ctx.W.act(ctx.W.w0(), la).v));
}

}  // namespace grk
