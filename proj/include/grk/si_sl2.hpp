#pragma once

#include "grk/ratfunc.hpp"

namespace grk::sl2 {

/* Rank-1 semi-infinite flag model over the field in three symbols:
   exponent slot 0 = q (loop rotation), slot 1 = t (translation by the simple
   coroot), slot 2 = y = e^w (torus weight). Classes are coordinate vectors
   over the basis [O(e)], [O(s)]. */

inline constexpr uint8_t kRank3 = 3;
inline constexpr int kQ = 0, kT = 1, kY = 2;

inline IntVec mono(int32_t q, int32_t t, int32_t y) { return int_vec(kRank3, {q, t, y}); }

inline RatFunc sym_q(int32_t k = 1) { return rf_monomial(mono(k, 0, 0)); }
inline RatFunc sym_t(int32_t k = 1) { return rf_monomial(mono(0, k, 0)); }
inline RatFunc sym_y(int32_t k = 1) { return rf_monomial(mono(0, 0, k)); }

using Vec2 = std::array<RatFunc, 2>;   // components over [O(e)], [O(s)]
using Mat2 = std::array<Vec2, 2>;      // m[row][col]

inline Vec2 vec_zero() { return {rf_zero(kRank3), rf_zero(kRank3)}; }

inline Vec2 basis(int w) {
	Vec2 v = vec_zero();
	v[static_cast<size_t>(w)] = rf_one(kRank3);
	return v;
}

inline Vec2 vec_add(const Vec2& a, const Vec2& b) { return {a[0] + b[0], a[1] + b[1]}; }
inline Vec2 vec_sub(const Vec2& a, const Vec2& b) { return {a[0] - b[0], a[1] - b[1]}; }
inline Vec2 vec_scale(const RatFunc& c, const Vec2& a) { return {c * a[0], c * a[1]}; }
inline bool vec_equal(const Vec2& a, const Vec2& b) { return rf_equal(a[0], b[0]) && rf_equal(a[1], b[1]); }

inline Vec2 mat_apply(const Mat2& m, const Vec2& v) {
	return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
}

inline Mat2 mat_mul(const Mat2& a, const Mat2& b) {
	Mat2 c;
	for (int i = 0; i < 2; ++i)
		for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
	return c;
}

inline Mat2 mat_identity() {
	return Mat2{Vec2{rf_one(kRank3), rf_zero(kRank3)}, Vec2{rf_zero(kRank3), rf_one(kRank3)}};
}

inline bool mat_equal(const Mat2& a, const Mat2& b) {
	for (int i = 0; i < 2; ++i)
		for (int j = 0; j < 2; ++j)
			if (!rf_equal(a[i][j], b[i][j])) return false;
	return true;
}

inline Mat2 mat_inverse(const Mat2& m) {
	RatFunc det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
	RatFunc di = rf_inv(det);
	return Mat2{Vec2{di * m[1][1], di * (-m[0][1])}, Vec2{di * (-m[1][0]), di * m[0][0]}};
}

/* Twist by the line with weight +w:
     [O(e)(w)] = (y [O(e)] + y^{-1} [O(s)]) / (1 - q^{-1} t)
     [O(s)(w)] = (q^{-1} y t [O(e)] + y^{-1} [O(s)]) / (1 - q^{-1} t)
   Columns are the images of the basis. The -w twist is the exact inverse. */
inline Mat2 pieri_chevalley_matrix(int sign) {
	LaurentPoly den = lp_one(kRank3) - lp_monomial(mono(-1, 1, 0));
	RatFunc c = rf_fraction(lp_one(kRank3), den);
	Mat2 plus;
	plus[0][0] = c * sym_y(1);
	plus[0][1] = c * sym_q(-1) * sym_y(1) * sym_t(1);
	plus[1][0] = c * sym_y(-1);
	plus[1][1] = c * sym_y(-1);
	if (sign > 0) return plus;
	return mat_inverse(plus);
}

// forget the loop rotation: q -> 1
inline RatFunc at_q1(const RatFunc& f) { return rf_collapse_var(f, kQ); }
inline Vec2 at_q1(const Vec2& v) { return {at_q1(v[0]), at_q1(v[1])}; }
inline Mat2 at_q1(const Mat2& m) { return {at_q1(m[0]), at_q1(m[1])}; }

/* Divisor operator H = id - y * (twist by -w). */
inline Mat2 h_matrix() {
	Mat2 minus = pieri_chevalley_matrix(-1);
	Mat2 h;
	for (int i = 0; i < 2; ++i)
		for (int j = 0; j < 2; ++j) {
			h[i][j] = -(sym_y(1) * minus[i][j]);
			if (i == j) h[i][j] = h[i][j] + rf_one(kRank3);
		}
	return h;
}

// translation by k copies of the simple coroot: multiply by t^k
inline Vec2 translate(const Vec2& v, int32_t k) { return vec_scale(sym_t(k), v); }

/* Embed a one-variable coefficient (exponents of e^w) into the y slot. */
inline LaurentPoly embed_y(const LaurentPoly& p) {
	LaurentPoly g = lp_zero(kRank3);
	for (const auto& [m, c] : p.terms) g.add_term(mono(0, 0, m[0]), c);
	return g;
}

inline RatFunc embed_y(const RatFunc& f) {
	RatFunc g{embed_y(f.num), {}};
	for (const auto& fac : f.den) detail::den_insert(g.den, embed_y(fac.poly), fac.exp);
	return g;
}

}  // namespace grk::sl2
