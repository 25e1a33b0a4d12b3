#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "grk/grclass.hpp"
#include "grk/verify.hpp"

using namespace grk;

TEST_CASE("schubert classes do not depend on the coset representative", "[gr]") {
	for (Type t : {Type::A1, Type::A2}) {
		Ctx ctx(t);
		for (const auto& v : vdetail::coord_box(ctx.rank8(), -1, 1)) {
			AffElt m = coset_minrep(ctx, Coweight{v});
			GrClass ref = gr_schubert_class(ctx, m);
			for (WIdx u = 0; u < ctx.W.size(); ++u) {
				AffElt x = ctx.W.aff_mul(m, AffElt{u, ctx.rd.zero_coweight()});
				REQUIRE(gr_equal(gr_schubert_class(ctx, x), ref));
			}
		}
	}
}

TEST_CASE("peeled classes agree with the collapse of the full operator", "[gr]") {
	for (Type t : {Type::A1, Type::A2, Type::B2}) {
		Ctx ctx(t);
		for (const auto& v : vdetail::coord_box(ctx.rank8(), -1, 1)) {
			AffElt m = coset_minrep(ctx, Coweight{v});
			if (ctx.W.aff_len(m) > 5) continue;
			REQUIRE(gr_equal(gr_schubert_class(ctx, m), gr_schubert_class_direct(ctx, m)));
		}
	}
}

TEST_CASE("pontryagin product is commutative and associative", "[gr]") {
	Ctx ctx(Type::A2);
	std::mt19937 rng(11001);
	auto pool = vdetail::window_minreps(ctx, 2);
	for (int trial = 0; trial < 25; ++trial) {
		GrClass a = vdetail::random_gr_combo(ctx, rng, pool);
		GrClass b = vdetail::random_gr_combo(ctx, rng, pool);
		GrClass c = vdetail::random_gr_combo(ctx, rng, pool);
		REQUIRE(gr_equal(pontryagin(ctx, a, b), pontryagin(ctx, b, a)));
		REQUIRE(gr_equal(pontryagin(ctx, pontryagin(ctx, a, b), c),
		                 pontryagin(ctx, a, pontryagin(ctx, b, c))));
		REQUIRE(gr_equal(pontryagin(ctx, a, identity_class(ctx)), a));
	}
}

TEST_CASE("translation elements invert pairwise", "[gr]") {
	for (Type t : {Type::A1, Type::A2}) {
		Ctx ctx(t);
		LocClass unit{identity_class(ctx), ctx.rd.zero_coweight()};
		for (const auto& v : vdetail::coord_box(ctx.rank8(), -1, 1)) {
			Coweight g{v};
			if (g.is_zero()) continue;
			LocClass fwd = translation_elt(ctx, g), bwd = translation_elt(ctx, -g);
			REQUIRE(loc_equal(ctx, loc_mul(ctx, fwd, bwd), unit));
		}
	}
}

TEST_CASE("expansion picks out the basis element itself", "[gr]") {
	for (Type t : {Type::A1, Type::A2}) {
		Ctx ctx(t);
		for (const AffElt& m : vdetail::window_minreps(ctx, 2)) {
			SchubertCoeffs co = expand_in_schubert_basis(ctx, gr_schubert_class(ctx, m), 2);
			REQUIRE(co.size() == 1);
			REQUIRE(co.begin()->first == m);
			REQUIRE(rf_equal(co.begin()->second, rf_one(ctx.rank8())));
		}
	}
}

TEST_CASE("expansion round-trips random combinations", "[gr]") {
	Ctx ctx(Type::A2);
	std::mt19937 rng(11002);
	auto pool = vdetail::window_minreps(ctx, 1);
	for (int trial = 0; trial < 20; ++trial) {
		GrClass a = vdetail::random_gr_combo(ctx, rng, pool);
		SchubertCoeffs co = expand_in_schubert_basis(ctx, a, detail::orbit_radius(ctx, a));
		REQUIRE(gr_equal(schubert_combination(ctx, co), a));
	}
}

TEST_CASE("expansion refuses classes outside its window", "[gr]") {
	Ctx ctx(Type::A1);
	GrClass far;
	gr_add_term(far, Coweight{int_vec(1, {-9})}, rf_one(1));
	REQUIRE_THROWS_AS(expand_in_schubert_basis(ctx, far, 2), window_error);
}

TEST_CASE("rank one product rule in closed form", "[gr]") {
	Ctx ctx(Type::A1);
	auto tcw = [](int k) { return Coweight{int_vec(1, {k})}; };
	WIdx s = ctx.W.lmul(1, ctx.W.id());
	for (int m = 1; m <= 3; ++m)
		for (int n = 1; n <= 3; ++n) {
			GrClass lhs = pontryagin(ctx, gr_schubert_class(ctx, AffElt{s, tcw(-m)}),
			                         gr_schubert_class(ctx, ctx.W.translation(tcw(-n))));
			REQUIRE(gr_equal(lhs, gr_schubert_class(ctx, AffElt{s, tcw(-m - n)})));
		}
}

TEST_CASE("projection intertwines the divisor operators", "[gr]") {
	for (Type t : {Type::A1, Type::A2}) {
		Ctx ctx(t);
		auto pool = vdetail::window_minreps(ctx, 1);
		for (const AffElt& m : pool) {
			SmashElt lift = sm_mul(ctx, d_op(ctx, m), d_op_finite(ctx, ctx.W.w0()));
			GrClass cls = pr(ctx, lift);
			REQUIRE(gr_equal(cls, gr_schubert_class(ctx, m)));
			for (int i = 0; i <= ctx.rd.rank(); ++i)
				REQUIRE(gr_equal(pr(ctx, sm_mul(ctx, gen_image(ctx, i), lift)), d_sharp(ctx, i, cls)));
		}
	}
}

TEST_CASE("divisor and translation generators are depth independent", "[gr]") {
	Ctx ctx(Type::A1);
	for (int i : {1}) {
		LocClass a = h_class(ctx, i, 1), b = h_class(ctx, i, 2);
		REQUIRE(loc_equal(ctx, a, b));
	}
	Coweight g = -ctx.rd.simple_coroot(1);
	REQUIRE(loc_equal(ctx, translation_elt(ctx, g, 1), translation_elt(ctx, g, 2)));
}

TEST_CASE("product rule across the window", "[gr]") {
	for (Type t : {Type::A1, Type::A2}) {
		Ctx ctx(t);
		auto r = check_translation_product_rule(ctx);
		INFO(type_name(t) << ": " << r.detail);
		REQUIRE(r.pass);
	}
}
