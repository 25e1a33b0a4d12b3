#pragma once

#include <functional>
#include <sstream>
#include <tuple>
#include <vector>

#include "grk/smash.hpp"

namespace grk {

inline void gr_add_term(GrClass& a, const Coweight& g, const RatFunc& f) {
	if (f.is_zero()) return;
	auto it = a.find(g);
	if (it == a.end()) {
		a.emplace(g, f);
		return;
	}
	it->second = it->second + f;
	if (it->second.is_zero()) a.erase(it);
}

inline GrClass gr_add(const GrClass& a, const GrClass& b) {
	GrClass c = a;
	for (const auto& [g, f] : b) gr_add_term(c, g, f);
	return c;
}

inline GrClass gr_neg(const GrClass& a) {
	GrClass c;
	for (const auto& [g, f] : a) c.emplace(g, -f);
	return c;
}

inline GrClass gr_sub(const GrClass& a, const GrClass& b) { return gr_add(a, gr_neg(b)); }

inline GrClass gr_scale(const RatFunc& f, const GrClass& a) {
	GrClass c;
	if (f.is_zero()) return c;
	for (const auto& [g, h] : a) {
		RatFunc p = f * h;
		if (!p.is_zero()) c.emplace(g, p);
	}
	return c;
}

inline bool gr_equal(const GrClass& a, const GrClass& b) {
	if (a.size() != b.size()) return false;
	auto it = a.begin();
	auto jt = b.begin();
	for (; it != a.end(); ++it, ++jt) {
		if (!(it->first == jt->first)) return false;
		if (!rf_equal(it->second, jt->second)) return false;
	}
	return true;
}

inline GrClass identity_class(const Ctx& ctx) {
	GrClass a;
	a.emplace(ctx.rd.zero_coweight(), rf_one(ctx.rank8()));
	return a;
}

/* Collapse onto the translation coordinates: f ox u t_b contributes f at the
   coordinate u(b). */
inline GrClass pr(const Ctx& ctx, const SmashElt& a) {
	GrClass c;
	for (const auto& [x, f] : a) gr_add_term(c, ctx.W.act(x.u, x.b), f);
	return c;
}

/* Convolution (Pontryagin) product: coordinates add, coefficients multiply. */
inline GrClass pontryagin(const Ctx& ctx, const GrClass& a, const GrClass& b) {
	(void)ctx;
	GrClass c;
	for (const auto& [g, f] : a)
		for (const auto& [h, e] : b) gr_add_term(c, g + h, f * e);
	return c;
}

/* The Demazure action transported through pr:
     i in I:  f at b  ->  f/(1-e^{a_i}) at b  -  e^{a_i} s_i(f)/(1-e^{a_i}) at s_i(b)
     i = 0:   f at b  ->  f/(1-e^{-th}) at b  -  e^{-th} s_th(f)/(1-e^{-th}) at s_th(b) + th^vee
   so that d_sharp(i, pr(x)) = pr(gen_image(i) * x) for every smash element x. */
inline GrClass d_sharp(const Ctx& ctx, int i, const GrClass& a) {
	const uint8_t r = ctx.rank8();
	const bool aff = (i == 0);
	Weight al = aff ? -ctx.rd.theta().root : ctx.rd.simple_root(i);
	RatFunc stay = rf_fraction(lp_one(r), lp_one(r) - lp_exp(al));
	RatFunc move = rf_fraction(-lp_exp(al), lp_one(r) - lp_exp(al));
	GrClass c;
	for (const auto& [b, f] : a) {
		gr_add_term(c, b, stay * f);
		Coweight nb;
		RatFunc sf;
		if (aff) {
			nb = ctx.rd.reflect_coweight(ctx.rd.theta(), b) + ctx.rd.theta().coroot;
			sf = rf_map_exponents(f, [&](const IntVec& m) { return ctx.rd.reflect_weight(ctx.rd.theta(), Weight{m}).v; });
		} else {
			nb = ctx.rd.reflect_coweight(i, b);
			sf = rf_map_exponents(f, [&](const IntVec& m) { return ctx.rd.reflect_weight(i, Weight{m}).v; });
		}
		gr_add_term(c, nb, move * sf);
	}
	return c;
}

/* Structure sheaf class of the Schubert variety indexed by the coset of x,
   computed by peeling one reflection at a time off a reduced word of the
   minimal representative. Base case: the identity coset has class 1 at 0. */
inline GrClass gr_schubert_class(const Ctx& ctx, const AffElt& x) {
	AffElt m = ctx.W.min_coset_rep(x);
	if (ctx.W.is_aff_id(m)) return identity_class(ctx);
	if (ctx.cfg.cache) {
		auto it = ctx.class_cache.find(m);
		if (it != ctx.class_cache.end()) return it->second;
	}
	std::vector<uint8_t> word = ctx.W.reduced_word(m);
	AffElt rest = ctx.W.aff_mul(ctx.W.aff_gen(word[0]), m);
	GrClass res = d_sharp(ctx, word[0], gr_schubert_class(ctx, rest));
	if (ctx.cfg.cache) ctx.class_cache.emplace(m, res);
	return res;
}

// same class through the regular route: collapse D_x D_{w_0}
inline GrClass gr_schubert_class_direct(const Ctx& ctx, const AffElt& x) {
	AffElt m = ctx.W.min_coset_rep(x);
	SmashElt prod = sm_mul(ctx, d_op(ctx, m), d_op_finite(ctx, ctx.W.w0()));
	return pr(ctx, prod);
}

inline std::string gr_to_string(const GrClass& a) {
	if (a.empty()) return "0";
	std::ostringstream os;
	bool first = true;
	for (const auto& [g, f] : a) {
		if (!first) os << "  +  ";
		first = false;
		os << "(" << rf_to_string(f) << ") t" << vec_to_string(g.v);
	}
	return os.str();
}

/* ----- expansion in the Schubert basis ----- */

namespace detail {

// antidominant representative of the W-orbit of a coweight
inline Coweight antidominant_rep(const Ctx& ctx, Coweight d) {
	bool moved = true;
	while (moved) {
		moved = false;
		for (int i = 1; i <= ctx.rd.rank(); ++i)
			if (pairing(d, ctx.rd.simple_root(i)) > 0) {
				d = ctx.rd.reflect_coweight(i, d);
				moved = true;
			}
	}
	return d;
}

/* Elimination key. Deeper orbits first; within an orbit depth, coordinates
   whose coset representative has a shorter finite part dominate. The key
   ranks every support coordinate of a Schubert class strictly below the
   class's own coset coordinate, which is what back-substitution needs. */
struct ElimKey {
	int64_t depth;
	int neg_ulen;
	IntVec tie;
	auto operator<=>(const ElimKey&) const = default;
};

inline ElimKey elim_key(const Ctx& ctx, const Coweight& d) {
	Coweight g = antidominant_rep(ctx, d);
	AffElt m = coset_minrep(ctx, d);
	return ElimKey{-pairing(g, ctx.rd.rho()), -static_cast<int>(ctx.W.len(m.u)), d.v};
}

}  // namespace detail

/* Result of expanding a class over the Schubert basis. Keys are minimal
   coset representatives. */
using SchubertCoeffs = std::map<AffElt, RatFunc>;

inline GrClass schubert_combination(const Ctx& ctx, const SchubertCoeffs& coeff) {
	GrClass acc;
	for (const auto& [x, c] : coeff) acc = gr_add(acc, gr_scale(c, gr_schubert_class(ctx, x)));
	return acc;
}

/* Write a class as a finite combination of Schubert classes by repeatedly
   clearing the highest remaining coordinate in the elimination order. The
   radius caps how far coordinates may reach; past it the leftover is reported
   inside a window error. */
inline SchubertCoeffs expand_in_schubert_basis(const Ctx& ctx, const GrClass& a, int radius) {
	SchubertCoeffs coeff;
	GrClass residual = a;
	bool have_prev = false;
	detail::ElimKey prev{};
	while (!residual.empty()) {
		auto best = residual.begin();
		detail::ElimKey bk = detail::elim_key(ctx, best->first);
		for (auto it = std::next(residual.begin()); it != residual.end(); ++it) {
			detail::ElimKey k = detail::elim_key(ctx, it->first);
			if (bk < k) {
				bk = k;
				best = it;
			}
		}
		const Coweight d = best->first;
		for (int j = 0; j < ctx.rd.rank(); ++j)
			if (d.v[j] > radius || d.v[j] < -radius)
				throw window_error("expansion ran past the coordinate window; leftover: " + gr_to_string(residual));
		if (have_prev && !(bk < prev))
			throw arith_error("expansion is not triangular at coordinate " + vec_to_string(d.v));
		prev = bk;
		have_prev = true;
		AffElt piv = coset_minrep(ctx, d);
		GrClass cls = gr_schubert_class(ctx, piv);
		auto pit = cls.find(d);
		if (pit == cls.end())
			throw arith_error("pivot class misses its own coordinate " + vec_to_string(d.v));
		RatFunc c = best->second / pit->second;
		auto cit = coeff.find(piv);
		if (cit == coeff.end())
			coeff.emplace(piv, c);
		else {
			cit->second = cit->second + c;
			if (cit->second.is_zero()) coeff.erase(cit);
		}
		residual = gr_sub(residual, gr_scale(c, cls));
		if (residual.count(d))
			throw arith_error("elimination failed to clear coordinate " + vec_to_string(d.v));
	}
	return coeff;
}

/* ----- localized classes: a class divided by a deep translation class ----- */

struct LocClass {
	GrClass num;
	Coweight den;  // strictly antidominant; value = num (.) class(t_den)^{-1}
};

inline LocClass loc_mul(const Ctx& ctx, const LocClass& a, const LocClass& b) {
	return LocClass{pontryagin(ctx, a.num, b.num), a.den + b.den};
}

// cross-multiplied equality: a.num (.) class(t_{b.den}) = b.num (.) class(t_{a.den})
inline bool loc_equal(const Ctx& ctx, const LocClass& a, const LocClass& b) {
	if (a.den == b.den) return gr_equal(a.num, b.num);
	GrClass lhs = pontryagin(ctx, a.num, gr_schubert_class(ctx, ctx.W.translation(b.den)));
	GrClass rhs = pontryagin(ctx, b.num, gr_schubert_class(ctx, ctx.W.translation(a.den)));
	return gr_equal(lhs, rhs);
}

/* Divisor generator h_i = class(s_i t_b) (.) class(t_b)^{-1} for a deep
   strictly antidominant b; independent of the choice. */
inline LocClass h_class(const Ctx& ctx, int i, int n = 0) {
	if (n == 0) n = ctx.cfg.deep_n;
	Coweight b = ctx.deep(n);
	AffElt sit{ctx.W.lmul(i, ctx.W.id()), b};
	return LocClass{gr_schubert_class(ctx, sit), b};
}

/* Translation element t_g = class(t_{b+g}) (.) class(t_b)^{-1}, b deep enough
   that both subscripts are strictly antidominant. */
inline LocClass translation_elt(const Ctx& ctx, const Coweight& g, int n = 0) {
	if (n == 0) n = ctx.cfg.deep_n;
	Coweight b = ctx.deep(n);
	for (int extra = 0; extra < 64; ++extra) {
		Coweight bg = b + g;
		bool ok = true;
		for (int i = 1; i <= ctx.rd.rank(); ++i)
			if (pairing(bg, ctx.rd.simple_root(i)) >= 0 || pairing(b, ctx.rd.simple_root(i)) >= 0) ok = false;
		if (ok) return LocClass{gr_schubert_class(ctx, ctx.W.translation(bg)), b};
		b = b + ctx.deep(1);
	}
	throw window_error("translation element: no deep enough base point");
}

}  // namespace grk
