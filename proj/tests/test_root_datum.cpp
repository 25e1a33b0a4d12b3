#include <catch2/catch_amalgamated.hpp>

#include "grk/root_datum.hpp"

using namespace grk;

static const Type kAllTypes[] = {Type::A1, Type::A2, Type::A3, Type::B2,
                                 Type::C2, Type::B3, Type::C3, Type::G2};

TEST_CASE("cartan pairings match the matrix") {
	for (Type t : kAllTypes) {
		RootDatum rd(t);
		for (int i = 1; i <= rd.rank(); ++i)
			for (int j = 1; j <= rd.rank(); ++j)
				REQUIRE(pairing(rd.simple_coroot(i), rd.simple_root(j)) == rd.cartan(i, j));
	}
}

TEST_CASE("positive root counts") {
	auto count = [](Type t) { return RootDatum(t).positive_roots().size(); };
	REQUIRE(count(Type::A1) == 1);
	REQUIRE(count(Type::A2) == 3);
	REQUIRE(count(Type::A3) == 6);
	REQUIRE(count(Type::B2) == 4);
	REQUIRE(count(Type::C2) == 4);
	REQUIRE(count(Type::B3) == 9);
	REQUIRE(count(Type::C3) == 9);
	REQUIRE(count(Type::G2) == 6);
}

TEST_CASE("theta is the highest root") {
	for (Type t : kAllTypes) {
		RootDatum rd(t);
		const Root& th = rd.theta();
		int best = 0;
		bool found = false;
		for (const auto& r : rd.positive_roots()) {
			best = std::max(best, r.height);
			if (r.root == th.root) {
				found = true;
				REQUIRE(r.coroot == th.coroot);
			}
		}
		REQUIRE(found);
		REQUIRE(th.height == best);
		// theta is dominant
		for (int i = 1; i <= rd.rank(); ++i)
			REQUIRE(pairing(rd.simple_coroot(i), th.root) >= 0);
	}
}

TEST_CASE("coroots pair to 2 with their roots") {
	for (Type t : kAllTypes) {
		RootDatum rd(t);
		for (const auto& r : rd.positive_roots()) REQUIRE(pairing(r.coroot, r.root) == 2);
	}
}

TEST_CASE("two rho covee pairs the height of theta plus one on theta") {
	for (Type t : kAllTypes) {
		RootDatum rd(t);
		Coweight sum = rd.zero_coweight();
		for (const auto& r : rd.positive_roots()) sum = sum + r.coroot;
		REQUIRE(sum == rd.two_rho_covee());
		// <2 rho^vee, alpha_i> = 2 for every simple root
		for (int i = 1; i <= rd.rank(); ++i)
			REQUIRE(pairing(rd.two_rho_covee(), rd.simple_root(i)) == 2);
	}
}

TEST_CASE("type names round-trip") {
	for (Type t : kAllTypes) REQUIRE(parse_type(type_name(t)) == t);
	REQUIRE_THROWS_AS(parse_type("E8"), config_error);
}

TEST_CASE("B2 and C2 are dual not equal") {
	RootDatum b(Type::B2), c(Type::C2);
	REQUIRE(b.cartan(1, 2) == c.cartan(2, 1));
	REQUIRE(b.cartan(2, 1) == c.cartan(1, 2));
	REQUIRE(pairing(b.theta().coroot, b.simple_root(1)) != pairing(c.theta().coroot, c.simple_root(1)));
}
