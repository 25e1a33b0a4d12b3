#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "grk/context.hpp"
#include "grk/verify.hpp"

using namespace grk;

TEST_CASE("finite group sizes") {
	auto order = [](Type t) { return WeylGroup(RootDatum(t)).size(); };
	REQUIRE(order(Type::A1) == 2);
	REQUIRE(order(Type::A2) == 6);
	REQUIRE(order(Type::A3) == 24);
	REQUIRE(order(Type::B2) == 8);
	REQUIRE(order(Type::C2) == 8);
	REQUIRE(order(Type::B3) == 48);
	REQUIRE(order(Type::C3) == 48);
	REQUIRE(order(Type::G2) == 12);
}

TEST_CASE("group laws and words", "[weyl]") {
	for (Type t : {Type::A2, Type::B2, Type::G2}) {
		RootDatum rd(t);
		WeylGroup W(rd);
		for (WIdx u = 0; u < W.size(); ++u) {
			REQUIRE(W.mult(u, W.inv(u)) == W.id());
			REQUIRE(W.mult(W.inv(u), u) == W.id());
			REQUIRE(static_cast<int>(W.word(u).size()) == W.len(u));
			// the stored word multiplies out to u
			WIdx p = W.id();
			for (uint8_t i : W.word(u)) p = W.rmul(p, i);
			REQUIRE(p == u);
			REQUIRE(W.len(W.inv(u)) == W.len(u));
		}
		// w0 is the unique longest element and an involution
		REQUIRE(W.inv(W.w0()) == W.w0());
		for (WIdx u = 0; u < W.size(); ++u)
			if (u != W.w0()) REQUIRE(W.len(u) < W.len(W.w0()));
	}
}

TEST_CASE("pair orders match the classification") {
	Ctx a2(Type::A2), b2(Type::B2), g2(Type::G2);
	REQUIRE(a2.W.pair_order(1, 2) == 3);
	REQUIRE(b2.W.pair_order(1, 2) == 4);
	REQUIRE(g2.W.pair_order(1, 2) == 6);
	// affine orders: A1 has the infinite dihedral tilde A_1
	Ctx a1(Type::A1);
	REQUIRE(a1.W.aff_pair_order(0, 1) == 0);
	REQUIRE(a2.W.aff_pair_order(0, 1) == 3);
	REQUIRE(a2.W.aff_pair_order(0, 2) == 3);
	REQUIRE(b2.W.aff_pair_order(0, 1) == 2);
	REQUIRE(b2.W.aff_pair_order(0, 2) == 4);
	REQUIRE(g2.W.aff_pair_order(0, 1) == 2);
	REQUIRE(g2.W.aff_pair_order(0, 2) == 3);
}

TEST_CASE("translations are a homomorphism", "[weyl]") {
	for (Type t : {Type::A2, Type::C2}) {
		Ctx ctx(t);
		const auto& W = ctx.W;
		auto box = vdetail::coord_box(ctx.rank8(), -2, 2);
		for (const auto& b : box)
			for (const auto& c : box) {
				AffElt lhs = W.aff_mul(W.translation(Coweight{b}), W.translation(Coweight{c}));
				REQUIRE(lhs == W.translation(Coweight{b + c}));
			}
		// conjugation: u t_b u^{-1} = t_{u b}
		for (WIdx u = 0; u < W.size(); ++u)
			for (const auto& b : box) {
				AffElt ut = W.aff_mul(AffElt{u, ctx.rd.zero_coweight()}, W.translation(Coweight{b}));
				AffElt conj = W.aff_mul(ut, AffElt{W.inv(u), ctx.rd.zero_coweight()});
				REQUIRE(conj == W.translation(W.act(u, Coweight{b})));
			}
	}
}

TEST_CASE("affine inverse and generator involutions", "[weyl]") {
	for (Type t : {Type::A2, Type::B2}) {
		Ctx ctx(t);
		const auto& W = ctx.W;
		for (int i = 0; i <= W.rank(); ++i) {
			AffElt s = W.aff_gen(i);
			REQUIRE(W.is_aff_id(W.aff_mul(s, s)));
			REQUIRE(W.aff_inv(s) == s);
			REQUIRE(W.aff_len(s) == 1);
		}
		for (const auto& b : vdetail::coord_box(ctx.rank8(), -1, 1)) {
			AffElt x{1, Coweight{b}};
			REQUIRE(W.is_aff_id(W.aff_mul(x, W.aff_inv(x))));
			REQUIRE(W.is_aff_id(W.aff_mul(W.aff_inv(x), x)));
		}
	}
}

TEST_CASE("closed-form length agrees with breadth-first search", "[weyl]") {
	for (Type t : {Type::A1, Type::A2, Type::B2, Type::G2}) {
		Ctx ctx(t);
		auto r = check_length_formula(ctx);
		INFO(r.detail);
		REQUIRE(r.pass);
	}
}

TEST_CASE("reduced words and coset minimization", "[weyl]") {
	for (Type t : {Type::A1, Type::A2, Type::B2}) {
		Ctx ctx(t);
		for (auto* f : {check_reduced_words, check_coset_minimization}) {
			auto r = f(ctx);
			INFO(r.label << ": " << r.detail);
			REQUIRE(r.pass);
		}
	}
}

TEST_CASE("bruhat order matches the subword characterization", "[weyl]") {
	for (Type t : {Type::A1, Type::A2}) {
		Ctx ctx(t);
		auto r = check_bruhat_subword(ctx);
		INFO(r.detail);
		REQUIRE(r.pass);
	}
}

TEST_CASE("bruhat basics", "[weyl]") {
	Ctx ctx(Type::A2);
	const auto& W = ctx.W;
	AffElt e = W.aff_id();
	REQUIRE(W.bruhat_leq(e, e));
	for (int i = 0; i <= 2; ++i) {
		REQUIRE(W.bruhat_leq(e, W.aff_gen(i)));
		REQUIRE_FALSE(W.bruhat_leq(W.aff_gen(i), e));
	}
	// distinct generators are incomparable
	REQUIRE_FALSE(W.bruhat_leq(W.aff_gen(0), W.aff_gen(1)));
	REQUIRE_FALSE(W.bruhat_leq(W.aff_gen(1), W.aff_gen(0)));
	// window guard
	Coweight big{int_vec(2, {9, 9})};
	REQUIRE_THROWS_AS(W.bruhat_leq(e, W.translation(big), 10), window_error);
}

TEST_CASE("semi-infinite order is stable in the translation direction", "[weyl]") {
	Ctx ctx(Type::A2);
	const auto& W = ctx.W;
	// x <= x t_b for antidominant b, in the semi-infinite preorder
	Coweight anti = -ctx.rd.two_rho_covee();
	for (const auto& v : vdetail::coord_box(ctx.rank8(), -1, 1)) {
		AffElt x{0, Coweight{v}};
		REQUIRE(W.si_leq(x, W.aff_mul(x, W.translation(anti))));
		REQUIRE_FALSE(W.si_leq(W.aff_mul(x, W.translation(anti)), x));
	}
}
