#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "grk/rational.hpp"
#include "grk/weight.hpp"

namespace grk {

/* Sparse Laurent polynomial: exponent vector -> nonzero rational coefficient.
   Keys are compared lexicographically, which doubles as the monomial order
   for division and for canonical printing. */
struct LaurentPoly {
	std::map<IntVec, Rat> terms;
	uint8_t rank = 0;

	bool is_zero() const { return terms.empty(); }

	void add_term(const IntVec& m, const Rat& c) {
		if (c == 0) return;
		auto [it, fresh] = terms.emplace(m, c);
		if (!fresh) {
			it->second += c;
			if (it->second == 0) terms.erase(it);
		}
	}

	friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms == b.terms; }
};

inline LaurentPoly lp_zero(uint8_t rank) { return {{}, rank}; }

inline LaurentPoly lp_monomial(const IntVec& m, const Rat& c = 1) {
	LaurentPoly p{{}, m.rank};
	p.add_term(m, c);
	return p;
}

inline LaurentPoly lp_const(uint8_t rank, const Rat& c) {
	IntVec z;
	z.rank = rank;
	LaurentPoly p{{}, rank};
	p.add_term(z, c);
	return p;
}

inline LaurentPoly lp_one(uint8_t rank) { return lp_const(rank, 1); }

inline LaurentPoly lp_exp(const Weight& lam, const Rat& c = 1) { return lp_monomial(lam.v, c); }

inline LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
	LaurentPoly r = a;
	r.rank = std::max(a.rank, b.rank);
	for (auto& [m, c] : b.terms) r.add_term(m, c);
	return r;
}

inline LaurentPoly operator-(const LaurentPoly& a) {
	LaurentPoly r = a;
	for (auto& [m, c] : r.terms) c = -c;
	return r;
}

inline LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
	LaurentPoly r = a;
	r.rank = std::max(a.rank, b.rank);
	for (auto& [m, c] : b.terms) r.add_term(m, -c);
	return r;
}

inline LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
	LaurentPoly r{{}, std::max(a.rank, b.rank)};
	for (auto& [ma, ca] : a.terms)
		for (auto& [mb, cb] : b.terms) r.add_term(ma + mb, ca * cb);
	return r;
}

inline LaurentPoly operator*(const Rat& c, const LaurentPoly& a) {
	if (c == 0) return lp_zero(a.rank);
	LaurentPoly r = a;
	for (auto& [m, v] : r.terms) v *= c;
	return r;
}

inline Rat lp_eval_at_one(const LaurentPoly& a) {
	Rat s = 0;
	for (auto& [m, c] : a.terms) s += c;
	return s;
}

inline LaurentPoly lp_map_exponents(const LaurentPoly& a, const std::function<IntVec(const IntVec&)>& f) {
	LaurentPoly r{{}, a.rank};
	for (auto& [m, c] : a.terms) r.add_term(f(m), c);
	return r;
}

// set variable k to 1 (drop that exponent slot)
inline LaurentPoly lp_collapse_var(const LaurentPoly& a, int k) {
	LaurentPoly r{{}, a.rank};
	for (auto& [m, c] : a.terms) {
		IntVec m2 = m;
		m2[k] = 0;
		r.add_term(m2, c);
	}
	return r;
}

/* Exact division in the Laurent ring. Quotient monomials are confined to the
   coordinate box given by Newton-polytope support bounds; the running lead
   strictly decreases in lex order, so the loop terminates. Returns nothing
   when b does not divide a. */
inline std::optional<LaurentPoly> lp_exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
	if (b.is_zero()) return std::nullopt;
	if (a.is_zero()) return lp_zero(a.rank);
	IntVec lo, hi;
	lo.rank = hi.rank = kMaxRank;
	for (int c = 0; c < kMaxRank; ++c) {
		auto cmin = [&](const LaurentPoly& p) {
			int32_t v = p.terms.begin()->first[c];
			for (auto& [m, x] : p.terms) v = std::min(v, m[c]);
			return v;
		};
		auto cmax = [&](const LaurentPoly& p) {
			int32_t v = p.terms.begin()->first[c];
			for (auto& [m, x] : p.terms) v = std::max(v, m[c]);
			return v;
		};
		lo[c] = cmin(a) - cmin(b);
		hi[c] = cmax(a) - cmax(b);
		if (lo[c] > hi[c]) return std::nullopt;
	}
	const auto& [mb, cb] = *b.terms.rbegin();
	LaurentPoly q{{}, a.rank}, r = a;
	while (!r.is_zero()) {
		const auto& [mr, cr] = *r.terms.rbegin();
		IntVec t = mr - mb;
		for (int c = 0; c < kMaxRank; ++c)
			if (t[c] < lo[c] || t[c] > hi[c]) return std::nullopt;
		Rat tc = cr / cb;
		q.add_term(t, tc);
		for (auto& [m, c] : b.terms) r.add_term(t + m, -(tc * c));
	}
	return q;
}

inline std::string lp_to_string(const LaurentPoly& a) {
	if (a.is_zero()) return "0";
	std::string s;
	bool first = true;
	for (auto& [m, c] : a.terms) {
		Rat v = c;
		if (first) {
			if (v < 0) {
				s += "-";
				v = -v;
			}
			first = false;
		} else if (v < 0) {
			s += " - ";
			v = -v;
		} else {
			s += " + ";
		}
		IntVec mm = m;
		mm.rank = a.rank;
		s += rat_to_string(v) + "*e" + vec_to_string(mm);
	}
	return s;
}

// strict total order on polynomials (used to keep factor lists sorted)
inline bool lp_less(const LaurentPoly& a, const LaurentPoly& b) {
	auto ia = a.terms.begin(), ib = b.terms.begin();
	for (; ia != a.terms.end() && ib != b.terms.end(); ++ia, ++ib) {
		if (ia->first != ib->first) return ia->first < ib->first;
		if (ia->second != ib->second) return ia->second < ib->second;
	}
	return ib != b.terms.end();
}

}  // namespace grk
