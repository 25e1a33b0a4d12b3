#include <catch2/catch_amalgamated.hpp>

#include "grk/si_sl2.hpp"
#include "grk/verify.hpp"

using namespace grk;

TEST_CASE("two-dimensional model identities", "[sl2]") {
	for (const auto& r : suite_sl2()) {
		INFO(r.label << ": " << r.detail);
		REQUIRE(r.pass);
	}
}

TEST_CASE("matrix algebra on the rank-one model", "[sl2]") {
	sl2::Mat2 p = sl2::pieri_chevalley_matrix(+1);
	sl2::Mat2 m = sl2::pieri_chevalley_matrix(-1);
	sl2::Mat2 id = sl2::mat_identity();
	REQUIRE(sl2::mat_equal(sl2::mat_mul(p, sl2::mat_inverse(p)), id));
	REQUIRE(sl2::mat_equal(sl2::mat_mul(sl2::mat_inverse(m), m), id));
	REQUIRE_FALSE(sl2::mat_equal(p, m));
	// mat_apply is linear
	sl2::Vec2 v{sl2::sym_y(2), sl2::sym_t(1)};
	sl2::Vec2 w{sl2::sym_q(1), rf_one(sl2::kRank3)};
	REQUIRE(sl2::vec_equal(sl2::mat_apply(p, sl2::vec_add(v, w)),
	                       sl2::vec_add(sl2::mat_apply(p, v), sl2::mat_apply(p, w))));
}

TEST_CASE("h operator commutes with the translation symbol", "[sl2]") {
	sl2::Mat2 h = sl2::h_matrix();
	for (int w = 0; w < 2; ++w)
		for (int k : {-2, -1, 1}) {
			sl2::Vec2 a = sl2::mat_apply(h, sl2::translate(sl2::basis(w), k));
			sl2::Vec2 b = sl2::translate(sl2::mat_apply(h, sl2::basis(w)), k);
			REQUIRE(sl2::vec_equal(a, b));
		}
}

TEST_CASE("q specialization is a homomorphism where defined", "[sl2]") {
	RatFunc f = sl2::sym_q(2) * sl2::sym_y(1) + sl2::sym_t(1);
	RatFunc g = sl2::sym_q(-1) + sl2::sym_y(-1);
	REQUIRE(rf_equal(sl2::at_q1(f * g), sl2::at_q1(f) * sl2::at_q1(g)));
	REQUIRE(rf_equal(sl2::at_q1(f + g), sl2::at_q1(f) + sl2::at_q1(g)));
	// 1/(1-q) has a pole at q = 1
	RatFunc pole = rf_fraction(lp_one(sl2::kRank3),
	                           lp_one(sl2::kRank3) - lp_monomial(sl2::mono(1, 0, 0)));
	REQUIRE_THROWS_AS(sl2::at_q1(pole), arith_error);
}
