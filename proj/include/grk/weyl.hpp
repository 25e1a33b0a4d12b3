#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <vector>

#include "grk/root_datum.hpp"

namespace grk {

using WIdx = uint8_t;

// x = u * t_beta with u finite and beta in the coroot lattice.
struct AffElt {
	WIdx u = 0;
	Coweight b;
	friend auto operator<=>(const AffElt&, const AffElt&) = default;
};

/* Finite Weyl group enumerated once per root datum, together with the affine
   extension W_af = W x Q^vee acting at level zero. Affine lengths come from
   the closed form sum_{alpha>0} |<beta,alpha> + [u.alpha < 0]|; tests check it
   against breadth-first search. */
class WeylGroup {
	using Mat = std::array<std::array<int32_t, kMaxRank>, kMaxRank>;

	struct Elt {
		Mat mw{};        // action on weight coordinates
		Mat mc{};        // action on coweight coordinates
		WIdx inv = 0;
		int len = 0;
		std::vector<uint8_t> word;  // lex-least reduced word, 1-based letters
		uint16_t neg = 0;           // bitmask: positive roots sent negative
	};

public:
	explicit WeylGroup(const RootDatum& rd) : rd_(&rd) { build(); }

	const RootDatum& datum() const { return *rd_; }
	int rank() const { return rd_->rank(); }
	size_t size() const { return elts_.size(); }
	WIdx id() const { return 0; }
	WIdx w0() const { return w0_; }
	WIdx s_theta() const { return s_theta_; }

	int len(WIdx u) const { return elts_[u].len; }
	WIdx inv(WIdx u) const { return elts_[u].inv; }
	const std::vector<uint8_t>& word(WIdx u) const { return elts_[u].word; }

	// left and right multiplication by the simple reflection s_i (1-based i)
	WIdx lmul(int i, WIdx u) const { return lmul_[static_cast<size_t>(i - 1)][u]; }
	WIdx rmul(WIdx u, int i) const { return rmul_[static_cast<size_t>(i - 1)][u]; }

	WIdx mult(WIdx u, WIdx v) const { return mult_[u][v]; }

	Weight act(WIdx u, const Weight& lam) const { return {apply(elts_[u].mw, lam.v)}; }
	Coweight act(WIdx u, const Coweight& beta) const { return {apply(elts_[u].mc, beta.v)}; }

	bool sends_negative(WIdx u, size_t pos_root_index) const {
		return (elts_[u].neg >> pos_root_index) & 1;
	}

	// order of s_i s_j in the finite group
	int pair_order(int i, int j) const {
		WIdx p = mult(lmul(i, id()), lmul(j, id()));
		WIdx x = p;
		for (int m = 1; m <= 8; ++m) {
			if (x == id()) return m;
			x = mult(x, p);
		}
		throw config_error("pair order exceeds 8");
	}

	// order of s_i s_j in the affine group; index 0 is the affine node,
	// 0 means infinite order
	int aff_pair_order(int i, int j) const {
		if (i == j) return 1;
		auto root_of = [&](int k) -> Weight {
			return k == 0 ? -rd_->theta().root : rd_->simple_root(k);
		};
		auto coroot_of = [&](int k) -> Coweight {
			return k == 0 ? -rd_->theta().coroot : rd_->simple_coroot(k);
		};
		int64_t cij = pairing(coroot_of(i), root_of(j));
		int64_t cji = pairing(coroot_of(j), root_of(i));
		switch (cij * cji) {
			case 0: return 2;
			case 1: return 3;
			case 2: return 4;
			case 3: return 6;
			default: return 0;
		}
	}

	// ---- affine elements ----

	AffElt aff_id() const { return {id(), rd_->zero_coweight()}; }
	AffElt translation(const Coweight& b) const { return {id(), b}; }

	// s_0 written in the canonical form (s_theta, -theta^vee)
	AffElt aff_gen(int i) const {
		if (i == 0) return {s_theta_, -rd_->theta().coroot};
		return {lmul(i, id()), rd_->zero_coweight()};
	}

	// (u, b)(v, c) = (uv, v^{-1} b + c)
	AffElt aff_mul(const AffElt& x, const AffElt& y) const {
		return {mult(x.u, y.u), act(inv(y.u), x.b) + y.b};
	}
	AffElt aff_inv(const AffElt& x) const { return {inv(x.u), -act(x.u, x.b)}; }

	// level-zero action on weights: the translation part acts trivially
	Weight aff_act(const AffElt& x, const Weight& lam) const { return act(x.u, lam); }

	int64_t aff_len(const AffElt& x) const {
		int64_t total = 0;
		const auto& pos = rd_->positive_roots();
		for (size_t k = 0; k < pos.size(); ++k) {
			int64_t p = pairing(x.b, pos[k].root);
			if (sends_negative(x.u, k)) p += 1;
			total += p < 0 ? -p : p;
		}
		return total;
	}

	bool is_aff_id(const AffElt& x) const { return x.u == id() && x.b.is_zero(); }

	// index of the W_af/W coset: u t_b W = t_{u b} W
	Coweight coset_coord(const AffElt& x) const { return act(x.u, x.b); }

	// greedy least-descent reduced word over I_af = {0, 1, ..., rank}
	std::vector<uint8_t> reduced_word(AffElt x) const {
		std::vector<uint8_t> w;
		int64_t l = aff_len(x);
		while (l > 0) {
			bool found = false;
			for (int i = 0; i <= rank(); ++i) {
				AffElt y = aff_mul(aff_gen(i), x);
				int64_t ly = aff_len(y);
				if (ly < l) {
					w.push_back(static_cast<uint8_t>(i));
					x = y;
					l = ly;
					found = true;
					break;
				}
			}
			if (!found) throw arith_error("no descent found for a non-identity element");
		}
		if (!is_aff_id(x)) throw arith_error("reduced word extraction did not reach the identity");
		return w;
	}

	bool is_min_coset_rep(const AffElt& x) const {
		int64_t l = aff_len(x);
		for (int i = 1; i <= rank(); ++i)
			if (aff_len(aff_mul(x, aff_gen(i))) < l) return false;
		return true;
	}

	AffElt min_coset_rep(AffElt x) const {
		int64_t l = aff_len(x);
		for (int i = 1; i <= rank();) {
			AffElt y = aff_mul(x, aff_gen(i));
			int64_t ly = aff_len(y);
			if (ly < l) {
				x = y;
				l = ly;
				i = 1;
			} else {
				++i;
			}
		}
		return x;
	}

	/* Bruhat order via the lifting property: with i a left descent of y,
	   x <= y iff (s_i x <= s_i y when s_i x < x) else (x <= s_i y). */
	bool bruhat_leq(const AffElt& x, const AffElt& y, int64_t window = 20) const {
		if (aff_len(y) > window)
			throw window_error("bruhat comparison outside the configured length window (" +
			                   std::to_string(window) + ")");
		return bruhat_rec(x, y);
	}

	/* Semi-infinite order, evaluated through deep translations: x <=_{inf/2} y
	   iff x t_B <= y t_B in Bruhat order for every deep antidominant B. The
	   evaluation uses B_N = -N * (2 rho^vee) and requires two consecutive N
	   to agree; it retries deeper until the cap. */
	bool si_leq(const AffElt& x, const AffElt& y, int n_start = 2, int n_cap = 6) const {
		std::optional<bool> prev;
		for (int n = n_start; n <= n_cap; ++n) {
			Coweight bn = static_cast<int32_t>(-n) * rd_->two_rho_covee();
			bool r = bruhat_rec(aff_mul(x, translation(bn)), aff_mul(y, translation(bn)));
			if (prev && *prev == r) return r;
			prev = r;
		}
		throw window_error("semi-infinite comparison did not stabilize by N = " + std::to_string(n_cap));
	}

	// breadth-first-search length, an independent oracle for aff_len
	int64_t aff_len_bfs(const AffElt& x, int64_t cap = 12) const {
		if (is_aff_id(x)) return 0;
		std::map<AffElt, int64_t> dist;
		std::deque<AffElt> q;
		dist[aff_id()] = 0;
		q.push_back(aff_id());
		while (!q.empty()) {
			AffElt c = q.front();
			q.pop_front();
			int64_t d = dist[c];
			if (d >= cap) break;
			for (int i = 0; i <= rank(); ++i) {
				AffElt y = aff_mul(aff_gen(i), c);
				if (dist.emplace(y, d + 1).second) {
					if (y == x) return d + 1;
					q.push_back(y);
				}
			}
		}
		throw window_error("element not reached within the search cap");
	}

private:
	bool bruhat_rec(const AffElt& x, const AffElt& y) const {
		int64_t lx = aff_len(x), ly = aff_len(y);
		if (lx > ly) return false;
		if (lx == 0 && is_aff_id(x)) return true;
		if (lx == 0) return false;  // only the identity has length zero
		auto key = std::pair(x, y);
		if (auto it = bruhat_memo_.find(key); it != bruhat_memo_.end()) return it->second;
		int i = 0;
		AffElt ys;
		for (;; ++i) {
			if (i > rank()) throw arith_error("no descent for a positive-length element");
			ys = aff_mul(aff_gen(i), y);
			if (aff_len(ys) < ly) break;
		}
		AffElt xs = aff_mul(aff_gen(i), x);
		bool r = aff_len(xs) < lx ? bruhat_rec(xs, ys) : bruhat_rec(x, ys);
		bruhat_memo_.emplace(key, r);
		return r;
	}

	static IntVec apply(const Mat& m, const IntVec& v) {
		IntVec r;
		r.rank = v.rank;
		for (int i = 0; i < v.rank; ++i) {
			int64_t s = 0;
			for (int j = 0; j < v.rank; ++j) s += int64_t{m[static_cast<size_t>(i)][static_cast<size_t>(j)]} * v[j];
			r[i] = static_cast<int32_t>(s);
		}
		return r;
	}

	static Mat matmul(const Mat& a, const Mat& b, int n) {
		Mat r{};
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j) {
				int64_t s = 0;
				for (int k = 0; k < n; ++k)
					s += int64_t{a[static_cast<size_t>(i)][static_cast<size_t>(k)]} * b[static_cast<size_t>(k)][static_cast<size_t>(j)];
				r[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<int32_t>(s);
			}
		return r;
	}

	void build() {
		const int n = rank();
		// reflection matrices in both coordinate systems
		std::vector<Mat> sw(static_cast<size_t>(n)), sc(static_cast<size_t>(n));
		for (int i = 0; i < n; ++i) {
			Mat& W = sw[static_cast<size_t>(i)];
			Mat& C = sc[static_cast<size_t>(i)];
			for (int j = 0; j < n; ++j) {
				Weight e;
				e.v.rank = static_cast<uint8_t>(n);
				e.v[j] = 1;
				Weight r = rd_->reflect_weight(i + 1, e);
				Coweight f;
				f.v.rank = static_cast<uint8_t>(n);
				f.v[j] = 1;
				Coweight rc = rd_->reflect_coweight(i + 1, f);
				for (int k = 0; k < n; ++k) {
					W[static_cast<size_t>(k)][static_cast<size_t>(j)] = r.v[k];
					C[static_cast<size_t>(k)][static_cast<size_t>(j)] = rc.v[k];
				}
			}
		}
		Mat idm{};
		for (int i = 0; i < n; ++i) idm[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;

		std::map<Mat, WIdx> index;
		elts_.push_back({idm, idm, 0, 0, {}, 0});
		index[idm] = 0;
		lmul_.assign(static_cast<size_t>(n), {});
		rmul_.assign(static_cast<size_t>(n), {});
		std::deque<WIdx> q{0};
		while (!q.empty()) {
			WIdx u = q.front();
			q.pop_front();
			for (int i = 0; i < n; ++i) {
				Mat m = matmul(sw[static_cast<size_t>(i)], elts_[u].mw, n);
				auto [it, fresh] = index.emplace(m, static_cast<WIdx>(elts_.size()));
				if (fresh) {
					Elt e;
					e.mw = m;
					e.mc = matmul(sc[static_cast<size_t>(i)], elts_[u].mc, n);
					e.len = elts_[u].len + 1;
					elts_.push_back(e);
					q.push_back(it->second);
				}
			}
		}
		for (auto& col : lmul_) col.resize(elts_.size());
		for (auto& col : rmul_) col.resize(elts_.size());
		mult_.assign(elts_.size(), std::vector<WIdx>(elts_.size()));
		for (WIdx u = 0; u < elts_.size(); ++u)
			for (int i = 0; i < n; ++i) {
				lmul_[static_cast<size_t>(i)][u] = index.at(matmul(sw[static_cast<size_t>(i)], elts_[u].mw, n));
				rmul_[static_cast<size_t>(i)][u] = index.at(matmul(elts_[u].mw, sw[static_cast<size_t>(i)], n));
			}
		// lengths are BFS depths; fix words (lex-least via least left descent), inverses, products
		for (WIdx u = 0; u < elts_.size(); ++u) {
			WIdx c = u;
			auto& w = elts_[u].word;
			while (elts_[c].len > 0)
				for (int i = 1; i <= n; ++i) {
					WIdx d = lmul(i, c);
					if (elts_[d].len < elts_[c].len) {
						w.push_back(static_cast<uint8_t>(i));
						c = d;
						break;
					}
				}
		}
		for (WIdx u = 0; u < elts_.size(); ++u) {
			for (WIdx v = 0; v < elts_.size(); ++v) {
				WIdx p = v;
				const auto& w = elts_[u].word;
				for (auto it = w.rbegin(); it != w.rend(); ++it) p = lmul(*it, p);
				mult_[u][v] = p;
			}
		}
		for (WIdx u = 0; u < elts_.size(); ++u)
			for (WIdx v = 0; v < elts_.size(); ++v)
				if (mult_[u][v] == 0) elts_[u].inv = v;
		for (WIdx u = 0; u < elts_.size(); ++u)
			if (elts_[u].len > elts_[w0_].len) w0_ = u;
		// inversion sets
		const auto& pos = rd_->positive_roots();
		std::map<Weight, size_t> pos_index;
		for (size_t k = 0; k < pos.size(); ++k) pos_index[pos[k].root] = k;
		for (WIdx u = 0; u < elts_.size(); ++u)
			for (size_t k = 0; k < pos.size(); ++k) {
				Weight img = act(u, pos[k].root);
				if (!pos_index.count(img)) {
					if (!pos_index.count(-img)) throw config_error("image of a root is not a root");
					elts_[u].neg |= static_cast<uint16_t>(1u << k);
				}
			}
		// locate s_theta
		{
			Mat m{};
			for (int j = 0; j < n; ++j) {
				Weight e;
				e.v.rank = static_cast<uint8_t>(n);
				e.v[j] = 1;
				Weight r = rd_->reflect_weight(rd_->theta(), e);
				for (int k = 0; k < n; ++k) m[static_cast<size_t>(k)][static_cast<size_t>(j)] = r.v[k];
			}
			s_theta_ = index.at(m);
		}
	}

	const RootDatum* rd_;
	std::vector<Elt> elts_;
	std::vector<std::vector<WIdx>> lmul_, rmul_, mult_;
	WIdx w0_ = 0, s_theta_ = 0;
	mutable std::map<std::pair<AffElt, AffElt>, bool> bruhat_memo_;
};

}  // namespace grk
