#include <catch2/catch_amalgamated.hpp>

#include "grk/qk.hpp"
#include "grk/verify.hpp"

using namespace grk;

TEST_CASE("rank one divisor products in closed form", "[quantum]") {
	Ctx ctx(Type::A1);
	auto r = check_chevalley_rank_one_values(ctx);
	INFO(r.detail);
	REQUIRE(r.pass);
}

TEST_CASE("divisor product is depth stable", "[quantum]") {
	for (Type t : {Type::A1, Type::A2}) {
		Ctx ctx(t);
		for (int i = 1; i <= ctx.rd.rank(); ++i)
			for (WIdx u = 0; u < ctx.W.size(); ++u) {
				QKClass p1 = quantum_divisor_product_probe(ctx, i, u, 1);
				QKClass p2 = quantum_divisor_product_probe(ctx, i, u, 2);
				REQUIRE(qk_equal(p1, p2));
			}
	}
}

TEST_CASE("tables are finite and classically normalized", "[quantum]") {
	for (Type t : {Type::A1, Type::A2}) {
		Ctx ctx(t);
		for (auto* f : {check_chevalley_table, check_chevalley_classical_part}) {
			auto r = f(ctx);
			INFO(type_name(t) << ": " << r.label << ": " << r.detail);
			REQUIRE(r.pass);
		}
	}
}

TEST_CASE("identity column is the divisor class itself", "[quantum]") {
	for (Type t : {Type::A2, Type::B2}) {
		Ctx ctx(t);
		for (int i = 1; i <= ctx.rd.rank(); ++i) {
			QKClass p = quantum_divisor_product(ctx, i, ctx.W.id());
			QKClass want;
			want.emplace(QKKey{ctx.W.lmul(i, ctx.W.id()), ctx.rd.zero_coweight()},
			             rf_one(ctx.rank8()));
			REQUIRE(qk_equal(p, want));
		}
	}
}
