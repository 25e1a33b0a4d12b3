#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "grk/errors.hpp"
#include "grk/weight.hpp"

namespace grk {

enum class Type : uint8_t { A1, A2, A3, B2, C2, B3, C3, G2 };

inline Type parse_type(const std::string& s) {
	if (s == "A1") return Type::A1;
	if (s == "A2") return Type::A2;
	if (s == "A3") return Type::A3;
	if (s == "B2") return Type::B2;
	if (s == "C2") return Type::C2;
	if (s == "B3") return Type::B3;
	if (s == "C3") return Type::C3;
	if (s == "G2") return Type::G2;
	throw config_error("unsupported root system type '" + s + "' (supported: A1 A2 A3 B2 C2 B3 C3 G2)");
}

inline std::string type_name(Type t) {
	switch (t) {
		case Type::A1: return "A1";
		case Type::A2: return "A2";
		case Type::A3: return "A3";
		case Type::B2: return "B2";
		case Type::C2: return "C2";
		case Type::B3: return "B3";
		case Type::C3: return "C3";
		case Type::G2: return "G2";
	}
	throw config_error("bad type tag");
}

struct Root {
	Weight root;        // fundamental-weight coordinates
	Coweight coroot;    // simple-coroot coordinates
	IntVec simple;      // expansion in simple roots
	int height = 0;     // sum of simple-root coefficients
};

/* Root datum of a simple type of rank <= 3. Carries the Cartan matrix
   a[i][j] = <alpha_i^vee, alpha_j>, the positive roots (closed under the
   simple reflections, found by orbit search), the highest root theta with
   its coroot, and rho = sum of fundamental weights. */
class RootDatum {
public:
	explicit RootDatum(Type t) : type_(t) {
		switch (t) {
			case Type::A1: init({{2}}); break;
			case Type::A2: init({{2, -1}, {-1, 2}}); break;
			case Type::A3: init({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}); break;
			case Type::B2: init({{2, -1}, {-2, 2}}); break;
			case Type::C2: init({{2, -2}, {-1, 2}}); break;
			case Type::B3: init({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}); break;
			case Type::C3: init({{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}); break;
			case Type::G2: init({{2, -3}, {-1, 2}}); break;
		}
	}

	Type type() const { return type_; }
	int rank() const { return rank_; }

	/* Simple roots and reflections are numbered 1..rank; index 0 is reserved
	   for the affine node throughout. */
	int cartan(int i, int j) const { return a_[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]; }

	Weight simple_root(int i) const {
		Weight w;
		w.v.rank = static_cast<uint8_t>(rank_);
		for (int j = 0; j < rank_; ++j) w.v[j] = a_[static_cast<size_t>(j)][static_cast<size_t>(i - 1)];
		return w;
	}
	Coweight simple_coroot(int i) const {
		Coweight b;
		b.v.rank = static_cast<uint8_t>(rank_);
		b.v[i - 1] = 1;
		return b;
	}

	Weight rho() const {
		Weight w;
		w.v.rank = static_cast<uint8_t>(rank_);
		for (int i = 0; i < rank_; ++i) w.v[i] = 1;
		return w;
	}

	Weight zero_weight() const {
		Weight w;
		w.v.rank = static_cast<uint8_t>(rank_);
		return w;
	}
	Coweight zero_coweight() const {
		Coweight b;
		b.v.rank = static_cast<uint8_t>(rank_);
		return b;
	}

	const std::vector<Root>& positive_roots() const { return positive_; }
	const Root& theta() const { return positive_[theta_index_]; }

	// Sum of all positive coroots, i.e. 2 rho^vee.
	Coweight two_rho_covee() const { return two_rho_covee_; }

	Weight reflect_weight(int i, const Weight& lambda) const {
		return lambda - static_cast<int32_t>(lambda.v[i - 1]) * simple_root(i);
	}
	Coweight reflect_coweight(int i, const Coweight& beta) const {
		int64_t p = pairing(beta, simple_root(i));
		return beta - static_cast<int32_t>(p) * simple_coroot(i);
	}

	// Reflection in an arbitrary root (used for s_theta).
	Weight reflect_weight(const Root& r, const Weight& lambda) const {
		return lambda - static_cast<int32_t>(pairing(r.coroot, lambda)) * r.root;
	}
	Coweight reflect_coweight(const Root& r, const Coweight& beta) const {
		return beta - static_cast<int32_t>(pairing(beta, r.root)) * r.coroot;
	}

private:
	void init(std::initializer_list<std::initializer_list<int>> rows) {
		rank_ = static_cast<int>(rows.size());
		int i = 0;
		for (auto& row : rows) {
			int j = 0;
			for (auto v : row) a_[static_cast<size_t>(i)][static_cast<size_t>(j++)] = v;
			++i;
		}
		build_roots();
	}

	void build_roots() {
		std::set<Weight> seen;
		std::vector<std::pair<Weight, Coweight>> frontier, all;
		for (int i = 1; i <= rank_; ++i) {
			frontier.emplace_back(simple_root(i), simple_coroot(i));
			seen.insert(simple_root(i));
		}
		all = frontier;
		while (!frontier.empty()) {
			std::vector<std::pair<Weight, Coweight>> next;
			for (auto& [w, cv] : frontier)
				for (int i = 1; i <= rank_; ++i) {
					Weight w2 = reflect_weight(i, w);
					if (seen.insert(w2).second) {
						next.emplace_back(w2, reflect_coweight(i, cv));
						all.push_back(next.back());
					}
				}
			frontier = std::move(next);
		}
		for (auto& [w, cv] : all) {
			IntVec d = simple_coords(w);
			bool pos = true, neg = true;
			for (int i = 0; i < rank_; ++i) {
				if (d[i] > 0) neg = false;
				if (d[i] < 0) pos = false;
			}
			if (!pos && !neg) throw config_error("root neither positive nor negative");
			if (!pos) continue;
			Root r{w, cv, d, 0};
			for (int i = 0; i < rank_; ++i) r.height += d[i];
			positive_.push_back(r);
		}
		std::sort(positive_.begin(), positive_.end(),
		          [](const Root& x, const Root& y) { return std::pair(x.height, x.simple) < std::pair(y.height, y.simple); });
		theta_index_ = positive_.size() - 1;
		if (positive_.size() >= 2 && positive_[theta_index_ - 1].height == positive_[theta_index_].height)
			throw config_error("highest root is not unique");
		two_rho_covee_ = zero_coweight();
		for (auto& r : positive_) two_rho_covee_ = two_rho_covee_ + r.coroot;
	}

	// Solve cartan * d = c exactly (rank <= 3, Cramer).
	IntVec simple_coords(const Weight& w) const {
		auto det2 = [](int64_t m00, int64_t m01, int64_t m10, int64_t m11) { return m00 * m11 - m01 * m10; };
		IntVec d;
		d.rank = static_cast<uint8_t>(rank_);
		const auto& A = a_;
		if (rank_ == 1) {
			divide(d[0], w.v[0], A[0][0]);
		} else if (rank_ == 2) {
			int64_t det = det2(A[0][0], A[0][1], A[1][0], A[1][1]);
			divide(d[0], det2(w.v[0], A[0][1], w.v[1], A[1][1]), det);
			divide(d[1], det2(A[0][0], w.v[0], A[1][0], w.v[1]), det);
		} else {
			// cyclic cofactor expansion along the first row
			int64_t det = 0;
			for (int j = 0; j < 3; ++j)
				det += A[0][static_cast<size_t>(j)] *
				       det2(A[1][static_cast<size_t>((j + 1) % 3)], A[1][static_cast<size_t>((j + 2) % 3)],
				            A[2][static_cast<size_t>((j + 1) % 3)], A[2][static_cast<size_t>((j + 2) % 3)]);
			for (int k = 0; k < 3; ++k) {
				int64_t M[3][3];
				for (int r = 0; r < 3; ++r)
					for (int c = 0; c < 3; ++c) M[r][c] = (c == k) ? w.v[r] : A[static_cast<size_t>(r)][static_cast<size_t>(c)];
				int64_t dk = 0;
				for (int j = 0; j < 3; ++j)
					dk += M[0][j] * det2(M[1][(j + 1) % 3], M[1][(j + 2) % 3], M[2][(j + 1) % 3], M[2][(j + 2) % 3]);
				divide(d[k], dk, det);
			}
		}
		return d;
	}

	static void divide(int32_t& out, int64_t num, int64_t den) {
		if (den == 0 || num % den != 0) throw config_error("non-integral simple-root coordinates");
		out = static_cast<int32_t>(num / den);
	}

	Type type_;
	int rank_ = 0;
	std::array<std::array<int, kMaxRank>, kMaxRank> a_{};
	std::vector<Root> positive_;
	size_t theta_index_ = 0;
	Coweight two_rho_covee_;
};

}  // namespace grk
