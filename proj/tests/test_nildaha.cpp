#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "grk/smash.hpp"
#include "grk/verify.hpp"

using namespace grk;

TEST_CASE("generator relations hold in the smash product", "[nildaha]") {
	for (Type t : {Type::A1, Type::A2, Type::B2, Type::G2}) {
		Ctx ctx(t);
		for (const auto& r : suite_nildaha(ctx)) {
			INFO(type_name(t) << ": " << r.label << ": " << r.detail);
			REQUIRE(r.pass);
		}
	}
}

TEST_CASE("divided difference formula in the polynomial representation", "[nildaha]") {
	for (Type t : {Type::A2, Type::C2}) {
		Ctx ctx(t);
		const uint8_t r = ctx.rank8();
		std::mt19937 rng(9001);
		std::uniform_int_distribution<int> expo(-2, 2);
		for (int i = 1; i <= ctx.rd.rank(); ++i) {
			SmashElt di = gen_image(ctx, i);
			WIdx si = ctx.W.lmul(i, ctx.W.id());
			RatFunc ea = rf_monomial(ctx.rd.simple_root(i).v);
			for (int trial = 0; trial < 10; ++trial) {
				IntVec m;
				m.rank = r;
				for (int k = 0; k < r; ++k) m[k] = expo(rng);
				RatFunc f = rf_monomial(m);
				RatFunc got = poly_rep_apply(ctx, di, f);
				RatFunc want = (f - ea * rf_act(ctx, si, f)) / (rf_one(r) - ea);
				REQUIRE(rf_equal(got, want));
			}
		}
	}
}

TEST_CASE("descent recursion is word independent for affine elements", "[nildaha]") {
	for (Type t : {Type::A1, Type::B2}) {
		Ctx ctx(t);
		const auto& W = ctx.W;
		// every element of affine length <= 4 near the origin
		for (const auto& v : vdetail::coord_box(ctx.rank8(), -1, 1)) {
			for (WIdx u = 0; u < W.size(); ++u) {
				AffElt x{u, Coweight{v}};
				int64_t l = W.aff_len(x);
				if (l < 2 || l > 4) continue;
				SmashElt ref = d_op(ctx, x);
				for (int i = 0; i <= W.rank(); ++i) {
					AffElt y = W.aff_mul(W.aff_gen(i), x);
					if (W.aff_len(y) != l - 1) continue;
					SmashElt alt = sm_mul(ctx, gen_image(ctx, i), d_op(ctx, y));
					REQUIRE(sm_equal(ref, alt));
				}
			}
		}
	}
}

TEST_CASE("longest operator kills every generator from the right", "[nildaha]") {
	Ctx ctx(Type::A2);
	SmashElt dw0 = d_op_finite(ctx, ctx.W.w0());
	for (int i = 1; i <= ctx.rd.rank(); ++i)
		REQUIRE(sm_equal(sm_mul(ctx, dw0, gen_image(ctx, i)), dw0));
}

TEST_CASE("characters of small representations", "[nildaha]") {
	// A1: character of the m-th symmetric power has m+1 monomials
	Ctx a1(Type::A1);
	for (int m = 1; m <= 4; ++m) {
		RatFunc ch = full_character(a1, Weight{int_vec(1, {m})});
		REQUIRE(ch.is_poly());
		REQUIRE(rf_as_poly(ch).terms.size() == static_cast<size_t>(m + 1));
		REQUIRE(lp_eval_at_one(rf_as_poly(ch)) == m + 1);
	}
	// A2: adjoint representation of sl3 has dimension 8
	Ctx a2(Type::A2);
	RatFunc adj = full_character(a2, Weight{int_vec(2, {1, 1})});
	REQUIRE(adj.is_poly());
	REQUIRE(lp_eval_at_one(rf_as_poly(adj)) == 8);
	// G2: the 7-dimensional fundamental representation
	Ctx g2(Type::G2);
	RatFunc seven = full_character(g2, Weight{int_vec(2, {1, 0})});
	REQUIRE(seven.is_poly());
	REQUIRE(lp_eval_at_one(rf_as_poly(seven)) == 7);
}
