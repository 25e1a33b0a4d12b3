#include <catch2/catch_amalgamated.hpp>

#include "grk/parse.hpp"
#include "grk/verify.hpp"

using namespace grk;

TEST_CASE("grammar examples", "[parse]") {
	Ctx a1(Type::A1);
	REQUIRE(parse_aff_elt(a1, "e") == a1.W.aff_id());
	REQUIRE(parse_aff_elt(a1, "s1") == a1.W.aff_gen(1));
	REQUIRE(parse_aff_elt(a1, "s1 t[-1]") ==
	        a1.W.aff_mul(a1.W.aff_gen(1), a1.W.translation(Coweight{int_vec(1, {-1})})));
	REQUIRE(parse_aff_elt(a1, "t[3]") == a1.W.translation(Coweight{int_vec(1, {3})}));

	Ctx a2(Type::A2);
	AffElt x = parse_aff_elt(a2, "s1 s2 t[-1,-2]");
	AffElt want = a2.W.aff_mul(a2.W.aff_mul(a2.W.aff_gen(1), a2.W.aff_gen(2)),
	                           a2.W.translation(Coweight{int_vec(2, {-1, -2})}));
	REQUIRE(x == want);
	// s0 folds into the canonical (finite, translation) form
	REQUIRE(parse_aff_elt(a2, "s0") == a2.W.aff_gen(0));
}

TEST_CASE("canonical printing round-trips", "[parse]") {
	for (Type t : {Type::A1, Type::A2, Type::B2}) {
		Ctx ctx(t);
		for (const auto& v : vdetail::coord_box(ctx.rank8(), -1, 1))
			for (WIdx u = 0; u < ctx.W.size(); ++u) {
				AffElt x{u, Coweight{v}};
				REQUIRE(parse_aff_elt(ctx, print_aff_elt(ctx, x)) == x);
			}
	}
}

TEST_CASE("words fold to group elements, not free words", "[parse]") {
	Ctx ctx(Type::A2);
	REQUIRE(parse_aff_elt(ctx, "s1 s1") == ctx.W.aff_id());
	REQUIRE(print_aff_elt(ctx, parse_aff_elt(ctx, "s1 s1")) == "e");
	REQUIRE(parse_aff_elt(ctx, "s1 s2 s1") == parse_aff_elt(ctx, "s2 s1 s2"));
}

TEST_CASE("parse errors carry positions", "[parse]") {
	Ctx ctx(Type::A2);
	auto pos_of = [&](const std::string& text) {
		try {
			parse_aff_elt(ctx, text);
		} catch (const parse_error& e) {
			return static_cast<long>(e.position);
		}
		return -1L;
	};
	REQUIRE(pos_of("") >= 0);
	REQUIRE(pos_of("s9") == 1);        // index exceeds the rank
	REQUIRE(pos_of("s") == 1);         // missing index
	REQUIRE(pos_of("t[1,2") == 5);     // missing bracket
	REQUIRE(pos_of("t[1]") >= 0);      // wrong arity for rank two
	REQUIRE(pos_of("e s1") >= 0);      // identity must stand alone
	REQUIRE(pos_of("s1 x") >= 0);      // trailing garbage
	REQUIRE(pos_of("t[99999999]") >= 0);
	REQUIRE(pos_of("s1 t[1,1] s2") >= 0);  // translation must come last
}
