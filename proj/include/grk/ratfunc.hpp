#pragma once

#include <algorithm>
#include <vector>

#include "grk/errors.hpp"
#include "grk/laurent.hpp"

namespace grk {

/* Rational function with the denominator kept as a multiset of canonical
   irreducible-ish factors rather than a single expanded polynomial.
   Cancellation only ever happens through exact division of the numerator by
   a stored factor, so no polynomial gcd is needed. A canonical factor has
   lex-least monomial e^0, integer coprime coefficients, and positive
   constant term; the discarded unit (sign, content, monomial) is pushed
   into the numerator. */
struct Factor {
	LaurentPoly poly;
	int exp = 1;
};

struct RatFunc {
	LaurentPoly num;
	std::vector<Factor> den;

	bool is_zero() const { return num.is_zero(); }
	bool is_poly() const { return den.empty(); }
};

// splits p as unit_coeff * e^unit_mono * canon with canon canonical
struct UnitSplit {
	Rat unit_coeff;
	IntVec unit_mono;
	LaurentPoly canon;
};

inline UnitSplit lp_canonicalize(const LaurentPoly& p) {
	if (p.is_zero()) throw arith_error("cannot canonicalize zero polynomial");
	UnitSplit u;
	u.unit_mono = p.terms.begin()->first;
	u.unit_mono.rank = p.rank;
	Int g = 0, l = 1;
	for (auto& [m, c] : p.terms) {
		g = gcd(g, numerator(c));
		l = lcm(l, denominator(c));
	}
	u.unit_coeff = Rat(g, l);
	if (p.terms.begin()->second < 0) u.unit_coeff = -u.unit_coeff;
	u.canon = LaurentPoly{{}, p.rank};
	for (auto& [m, c] : p.terms) u.canon.add_term(m - u.unit_mono, c / u.unit_coeff);
	return u;
}

namespace detail {

inline void den_insert(std::vector<Factor>& den, const LaurentPoly& f, int exp) {
	if (exp == 0) return;
	for (auto& fac : den)
		if (fac.poly == f) {
			fac.exp += exp;
			return;
		}
	auto it = std::lower_bound(den.begin(), den.end(), f,
	                           [](const Factor& a, const LaurentPoly& b) { return lp_less(a.poly, b); });
	den.insert(it, Factor{f, exp});
}

inline void rf_cancel(RatFunc& a) {
	if (a.num.is_zero()) {
		a.den.clear();
		return;
	}
	for (auto& fac : a.den)
		while (fac.exp > 0) {
			auto q = lp_exact_divide(a.num, fac.poly);
			if (!q) break;
			a.num = std::move(*q);
			--fac.exp;
		}
	std::erase_if(a.den, [](const Factor& f) { return f.exp == 0; });
}

}  // namespace detail

inline RatFunc rf_from_poly(LaurentPoly p) { return {std::move(p), {}}; }
inline RatFunc rf_zero(uint8_t rank) { return {lp_zero(rank), {}}; }
inline RatFunc rf_one(uint8_t rank) { return {lp_one(rank), {}}; }
inline RatFunc rf_const(uint8_t rank, const Rat& c) { return {lp_const(rank, c), {}}; }
inline RatFunc rf_monomial(const IntVec& m, const Rat& c = 1) { return {lp_monomial(m, c), {}}; }

/* p / f with the factor stored, not divided out eagerly beyond cancel(). */
inline RatFunc rf_fraction(LaurentPoly p, const LaurentPoly& f) {
	RatFunc r{std::move(p), {}};
	if (f.is_zero()) throw arith_error("division by zero polynomial");
	UnitSplit u = lp_canonicalize(f);
	r.num = Rat(1) / u.unit_coeff * lp_map_exponents(r.num, [&](const IntVec& m) { return m - u.unit_mono; });
	r.num.rank = std::max(r.num.rank, f.rank);
	if (!(u.canon == lp_one(u.canon.rank))) detail::den_insert(r.den, u.canon, 1);
	detail::rf_cancel(r);
	return r;
}

inline LaurentPoly rf_den_expanded(const RatFunc& a) {
	LaurentPoly d = lp_one(a.num.rank);
	for (auto& fac : a.den)
		for (int i = 0; i < fac.exp; ++i) d = d * fac.poly;
	return d;
}

inline RatFunc operator-(const RatFunc& a) { return {-a.num, a.den}; }

inline RatFunc operator+(const RatFunc& a, const RatFunc& b) {
	if (a.is_zero()) return b;
	if (b.is_zero()) return a;
	RatFunc r;
	r.num = lp_zero(std::max(a.num.rank, b.num.rank));
	for (auto& fac : a.den) detail::den_insert(r.den, fac.poly, fac.exp);
	for (auto& fac : b.den) {
		int have = 0;
		for (auto& f : r.den)
			if (f.poly == fac.poly) have = f.exp;
		if (fac.exp > have) detail::den_insert(r.den, fac.poly, fac.exp - have);
	}
	auto scaled = [&](const RatFunc& x) {
		LaurentPoly p = x.num;
		for (auto& f : r.den) {
			int need = f.exp;
			for (auto& fx : x.den)
				if (fx.poly == f.poly) need -= fx.exp;
			for (int i = 0; i < need; ++i) p = p * f.poly;
		}
		return p;
	};
	r.num = scaled(a) + scaled(b);
	detail::rf_cancel(r);
	return r;
}

inline RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

inline RatFunc operator*(const RatFunc& a, const RatFunc& b) {
	if (a.is_zero() || b.is_zero()) return rf_zero(std::max(a.num.rank, b.num.rank));
	RatFunc r;
	r.num = a.num * b.num;
	r.den = a.den;
	for (auto& fac : b.den) detail::den_insert(r.den, fac.poly, fac.exp);
	detail::rf_cancel(r);
	return r;
}

inline RatFunc operator*(const Rat& c, const RatFunc& a) {
	if (c == 0) return rf_zero(a.num.rank);
	return {c * a.num, a.den};
}

inline RatFunc rf_inv(const RatFunc& a) {
	if (a.is_zero()) throw arith_error("division by zero");
	UnitSplit u = lp_canonicalize(a.num);
	RatFunc r;
	r.num = lp_monomial(-u.unit_mono, Rat(1) / u.unit_coeff);
	r.num.rank = a.num.rank;
	for (auto& fac : a.den)
		for (int i = 0; i < fac.exp; ++i) r.num = r.num * fac.poly;
	if (!(u.canon == lp_one(u.canon.rank))) detail::den_insert(r.den, u.canon, 1);
	detail::rf_cancel(r);
	return r;
}

inline RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * rf_inv(b); }

inline RatFunc rf_pow(const RatFunc& a, int n) {
	if (n < 0) return rf_pow(rf_inv(a), -n);
	RatFunc r = rf_one(a.num.rank);
	for (int i = 0; i < n; ++i) r = r * a;
	return r;
}

inline bool rf_equal(const RatFunc& a, const RatFunc& b) {
	if (a.num == b.num) {
		bool same = a.den.size() == b.den.size();
		for (size_t i = 0; same && i < a.den.size(); ++i)
			same = a.den[i].exp == b.den[i].exp && a.den[i].poly == b.den[i].poly;
		if (same) return true;
	}
	return a.num * rf_den_expanded(b) == b.num * rf_den_expanded(a);
}

inline const LaurentPoly& rf_as_poly(const RatFunc& a) {
	if (!a.is_poly()) throw arith_error("rational function is not polynomial: (" + lp_to_string(a.num) +
	                                    ") / (" + lp_to_string(rf_den_expanded(a)) + ")");
	return a.num;
}

inline RatFunc rf_map_exponents(const RatFunc& a, const std::function<IntVec(const IntVec&)>& f) {
	RatFunc r;
	r.num = lp_map_exponents(a.num, f);
	if (r.num.is_zero()) return rf_zero(a.num.rank);
	for (auto& fac : a.den) {
		LaurentPoly p = lp_map_exponents(fac.poly, f);
		if (p.is_zero()) throw arith_error("exponent map annihilated a denominator factor");
		UnitSplit u = lp_canonicalize(p);
		Rat cu = 1;
		IntVec mu;
		mu.rank = r.num.rank;
		for (int i = 0; i < fac.exp; ++i) {
			cu /= u.unit_coeff;
			mu = mu - u.unit_mono;
		}
		r.num = cu * lp_map_exponents(r.num, [&](const IntVec& m) { return m + mu; });
		if (!(u.canon == lp_one(u.canon.rank))) detail::den_insert(r.den, u.canon, fac.exp);
	}
	detail::rf_cancel(r);
	return r;
}

// set variable k to 1; throws if an uncancellable denominator factor vanishes there
inline RatFunc rf_collapse_var(const RatFunc& a, int k) {
	RatFunc r;
	r.num = lp_collapse_var(a.num, k);
	for (auto& fac : a.den) {
		LaurentPoly p = lp_collapse_var(fac.poly, k);
		if (p.is_zero()) throw arith_error("pole when specializing variable " + std::to_string(k));
		UnitSplit u = lp_canonicalize(p);
		Rat cu = 1;
		IntVec mu;
		mu.rank = std::max(r.num.rank, fac.poly.rank);
		for (int i = 0; i < fac.exp; ++i) {
			cu /= u.unit_coeff;
			mu = mu - u.unit_mono;
		}
		r.num = cu * lp_map_exponents(r.num, [&](const IntVec& m) { return m + mu; });
		if (!(u.canon == lp_one(u.canon.rank))) detail::den_insert(r.den, u.canon, fac.exp);
	}
	detail::rf_cancel(r);
	return r;
}

inline std::string rf_to_string(const RatFunc& a) {
	if (a.is_poly()) return lp_to_string(a.num);
	return "(" + lp_to_string(a.num) + ") / (" + lp_to_string(rf_den_expanded(a)) + ")";
}

}  // namespace grk
