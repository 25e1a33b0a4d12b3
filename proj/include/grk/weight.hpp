#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

#include "grk/errors.hpp"

namespace grk {

inline constexpr int kMaxRank = 3;

/* Fixed-capacity integer coordinate vector. Unused slots stay zero, so
   comparison and hashing can ignore the rank. */
struct IntVec {
	std::array<int32_t, kMaxRank> c{};
	uint8_t rank = 0;

	int32_t operator[](int i) const { return c[static_cast<size_t>(i)]; }
	int32_t& operator[](int i) { return c[static_cast<size_t>(i)]; }

	bool is_zero() const {
		for (auto v : c)
			if (v != 0) return false;
		return true;
	}

	friend IntVec operator+(IntVec a, const IntVec& b) {
		for (int i = 0; i < kMaxRank; ++i) a.c[static_cast<size_t>(i)] += b.c[static_cast<size_t>(i)];
		return a;
	}
	friend IntVec operator-(IntVec a, const IntVec& b) {
		for (int i = 0; i < kMaxRank; ++i) a.c[static_cast<size_t>(i)] -= b.c[static_cast<size_t>(i)];
		return a;
	}
	friend IntVec operator-(IntVec a) {
		for (auto& v : a.c) v = -v;
		return a;
	}
	friend IntVec operator*(int32_t k, IntVec a) {
		for (auto& v : a.c) v *= k;
		return a;
	}

	friend auto operator<=>(const IntVec& a, const IntVec& b) { return a.c <=> b.c; }
	friend bool operator==(const IntVec& a, const IntVec& b) { return a.c == b.c; }
};

inline IntVec int_vec(uint8_t rank, std::initializer_list<int32_t> vals) {
	IntVec v;
	v.rank = rank;
	int i = 0;
	for (auto x : vals) v[i++] = x;
	return v;
}

inline std::string vec_to_string(const IntVec& v) {
	std::string s = "[";
	for (int i = 0; i < v.rank; ++i) {
		if (i) s += ",";
		s += std::to_string(v[i]);
	}
	return s += "]";
}

// A weight written in fundamental-weight coordinates: lambda = sum c_i varpi_i.
struct Weight {
	IntVec v;
	friend Weight operator+(Weight a, const Weight& b) { return {a.v + b.v}; }
	friend Weight operator-(Weight a, const Weight& b) { return {a.v - b.v}; }
	friend Weight operator-(Weight a) { return {-a.v}; }
	friend Weight operator*(int32_t k, Weight a) { return {k * a.v}; }
	friend auto operator<=>(const Weight&, const Weight&) = default;
	bool is_zero() const { return v.is_zero(); }
};

// A coweight written in simple-coroot coordinates: beta = sum b_i alpha_i^vee.
struct Coweight {
	IntVec v;
	friend Coweight operator+(Coweight a, const Coweight& b) { return {a.v + b.v}; }
	friend Coweight operator-(Coweight a, const Coweight& b) { return {a.v - b.v}; }
	friend Coweight operator-(Coweight a) { return {-a.v}; }
	friend Coweight operator*(int32_t k, Coweight a) { return {k * a.v}; }
	friend auto operator<=>(const Coweight&, const Coweight&) = default;
	bool is_zero() const { return v.is_zero(); }
};

/* <beta, lambda> for beta in coroot coordinates and lambda in fundamental
   coordinates is a plain dot product: <alpha_i^vee, varpi_j> = delta_ij. */
inline int64_t pairing(const Coweight& beta, const Weight& lambda) {
	if (beta.v.rank != lambda.v.rank) throw config_error("pairing: rank mismatch");
	int64_t s = 0;
	for (int i = 0; i < beta.v.rank; ++i) s += int64_t{beta.v[i]} * lambda.v[i];
	return s;
}

}  // namespace grk
