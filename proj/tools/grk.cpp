#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "grk/grk.hpp"

using ordered_json = nlohmann::ordered_json;

namespace {

grk::SessionConfig g_session;
std::optional<std::string> g_type_flag;
bool g_no_cache = false;

std::unique_ptr<grk::Ctx> make_ctx(const std::optional<grk::Type>& fallback = std::nullopt) {
	grk::SessionConfig sc = g_session;
	sc.cache = !g_no_cache;
	try {
		sc.type = grk::resolve_type(g_type_flag);
	} catch (const grk::config_error&) {
		if (!fallback) throw;
		sc.type = *fallback;
	}
	grk::validate(sc);
	g_session = sc;
	return std::make_unique<grk::Ctx>(sc.type, grk::make_config(sc));
}

ordered_json terms_json(const grk::Ctx& ctx, const grk::SchubertCoeffs& co,
                        const grk::Coweight* offset = nullptr) {
	ordered_json terms = ordered_json::array();
	for (const auto& [x, c] : co) {
		ordered_json t;
		t["finite_part"] = grk::print_aff_elt(ctx, grk::AffElt{x.u, ctx.rd.zero_coweight()});
		ordered_json tr = ordered_json::array();
		for (int j = 0; j < ctx.rd.rank(); ++j)
			tr.push_back(x.b.v[j] - (offset ? offset->v[j] : 0));
		t["translation"] = tr;
		t["coefficient"] = grk::rf_to_string(c);
		terms.push_back(t);
	}
	return terms;
}

void render_terms_table(const ordered_json& doc, std::ostream& os) {
	for (const auto& [key, val] : doc.items()) {
		if (key == "terms" || key == "entries" || key == "checks") continue;
		os << key << ": " << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
	}
	if (doc.contains("terms")) {
		os << "\n  finite_part      translation        coefficient\n";
		for (const auto& t : doc["terms"])
			os << "  " << t["finite_part"].get<std::string>() << std::string(17 - std::min<size_t>(16, t["finite_part"].get<std::string>().size()), ' ')
			   << t["translation"].dump() << std::string(19 - std::min<size_t>(18, t["translation"].dump().size()), ' ')
			   << t["coefficient"].get<std::string>() << "\n";
	}
}

void emit(const ordered_json& doc) {
	if (g_session.format == "table")
		render_terms_table(doc, std::cout);
	else
		std::cout << doc.dump(2) << "\n";
	std::cout.flush();
}

ordered_json result_shell(const grk::Ctx& ctx, const std::string& op,
                          const std::vector<std::string>& inputs) {
	ordered_json doc;
	doc["root_system"] = grk::type_name(ctx.rd.type());
	doc["operation"] = op;
	doc["inputs"] = inputs;
	return doc;
}

int cmd_product(const std::string& xs, const std::string& ys) {
	auto ctx = make_ctx();
	grk::AffElt x = grk::parse_aff_elt(*ctx, xs);
	grk::AffElt y = grk::parse_aff_elt(*ctx, ys);
	grk::GrClass p = grk::pontryagin(*ctx, grk::gr_schubert_class(*ctx, x),
	                                 grk::gr_schubert_class(*ctx, y));
	grk::SchubertCoeffs co = grk::expand_in_schubert_basis(*ctx, p, ctx->cfg.window_radius);
	ordered_json doc = result_shell(*ctx, "product",
	                                {grk::print_aff_elt(*ctx, x), grk::print_aff_elt(*ctx, y)});
	doc["terms"] = terms_json(*ctx, co);
	emit(doc);
	return 0;
}

int cmd_expand(const std::string& xs) {
	auto ctx = make_ctx();
	grk::AffElt x = grk::parse_aff_elt(*ctx, xs);
	grk::GrClass a = grk::gr_schubert_class(*ctx, x);
	grk::SchubertCoeffs co = grk::expand_in_schubert_basis(*ctx, a, ctx->cfg.window_radius);
	ordered_json doc = result_shell(*ctx, "expand", {grk::print_aff_elt(*ctx, x)});
	doc["terms"] = terms_json(*ctx, co);
	emit(doc);
	return 0;
}

/* h_i applied to a class; the result is reported relative to the divisor
   element's reference offset, so entries are depth-independent. */
int cmd_hop(int i, const std::string& xs) {
	auto ctx = make_ctx();
	if (i < 1 || i > ctx->rd.rank()) throw grk::config_error("divisor index out of range");
	grk::AffElt x = grk::parse_aff_elt(*ctx, xs);
	grk::LocClass h = grk::h_class(*ctx, i);
	grk::GrClass p = grk::pontryagin(*ctx, h.num, grk::gr_schubert_class(*ctx, x));
	grk::SchubertCoeffs co =
	    grk::expand_in_schubert_basis(*ctx, p, grk::detail::orbit_radius(*ctx, p));
	ordered_json doc =
	    result_shell(*ctx, "hop", {"h" + std::to_string(i), grk::print_aff_elt(*ctx, x)});
	doc["terms"] = terms_json(*ctx, co, &h.den);
	emit(doc);
	return 0;
}

ordered_json chevalley_entry_json(const grk::Ctx& ctx, int i, grk::WIdx u,
                                  const grk::QKClass& cls) {
	ordered_json e;
	e["i"] = i;
	e["w"] = grk::print_aff_elt(ctx, grk::AffElt{u, ctx.rd.zero_coweight()});
	ordered_json terms = ordered_json::array();
	for (const auto& [k, c] : cls) {
		ordered_json t;
		t["u"] = grk::print_aff_elt(ctx, grk::AffElt{k.u, ctx.rd.zero_coweight()});
		ordered_json q = ordered_json::array();
		for (int j = 0; j < ctx.rd.rank(); ++j) q.push_back(k.q.v[j]);
		t["Q_exponent"] = q;
		t["coefficient"] = grk::rf_to_string(c);
		terms.push_back(t);
	}
	e["terms"] = terms;
	return e;
}

void render_chevalley_table(const ordered_json& doc, std::ostream& os) {
	os << "type: " << doc["type"].get<std::string>() << "\n";
	auto one = [&](const ordered_json& e) {
		os << "\ni=" << e["i"].get<int>() << "  w: " << e["w"].get<std::string>() << "\n";
		for (const auto& t : e["terms"])
			os << "  " << t["u"].get<std::string>() << "  Q" << t["Q_exponent"].dump() << "  "
			   << t["coefficient"].get<std::string>() << "\n";
	};
	if (doc.contains("entries"))
		for (const auto& e : doc["entries"]) one(e);
	else
		one(doc);
}

int cmd_chevalley(std::optional<int> i, std::optional<std::string> w) {
	auto ctx = make_ctx();
	if (i.has_value() != w.has_value())
		throw grk::config_error("pass both --i and --w, or neither for the full table");
	ordered_json doc;
	doc["type"] = grk::type_name(ctx->rd.type());
	if (i) {
		if (*i < 1 || *i > ctx->rd.rank()) throw grk::config_error("divisor index out of range");
		grk::AffElt x = grk::parse_aff_elt(*ctx, *w);
		if (!(x.b == ctx->rd.zero_coweight()))
			throw grk::config_error("--w must be a finite element (no translation part)");
		ordered_json e =
		    chevalley_entry_json(*ctx, *i, x.u, grk::quantum_divisor_product(*ctx, *i, x.u));
		for (const auto& [k, v] : e.items()) doc[k] = v;
	} else {
		ordered_json entries = ordered_json::array();
		for (const auto& [key, cls] : grk::chevalley_table(*ctx))
			entries.push_back(chevalley_entry_json(*ctx, key.first, key.second, cls));
		doc["entries"] = entries;
	}
	if (g_session.format == "table")
		render_chevalley_table(doc, std::cout);
	else
		std::cout << doc.dump(2) << "\n";
	std::cout.flush();
	return 0;
}

int cmd_verify(const std::string& suite) {
	auto ctx = make_ctx(suite == "sl2" ? std::optional<grk::Type>(grk::Type::A1) : std::nullopt);
	grk::Suite results = grk::run_suite(*ctx, suite);
	int failed = 0;
	for (const auto& r : results) {
		std::fprintf(stderr, "[%s] %s%s%s  (%.2fs)\n", r.pass ? "ok" : "FAIL", r.label.c_str(),
		             r.detail.empty() ? "" : ": ", r.detail.c_str(), r.seconds);
		if (!r.pass) ++failed;
	}
	ordered_json doc;
	doc["root_system"] = grk::type_name(ctx->rd.type());
	doc["operation"] = "verify";
	doc["suite"] = suite;
	ordered_json checks = ordered_json::array();
	for (const auto& r : results) {
		ordered_json c;
		c["label"] = r.label;
		c["pass"] = r.pass;
		c["detail"] = r.detail;
		checks.push_back(c);
	}
	doc["checks"] = checks;
	doc["passed"] = static_cast<int>(results.size()) - failed;
	doc["failed"] = failed;
	if (g_session.format == "table") {
		std::cout << "suite " << suite << ": " << doc["passed"] << " passed, " << failed
		          << " failed\n";
	} else {
		std::cout << doc.dump(2) << "\n";
	}
	std::cout.flush();
	if (failed) throw grk::verify_error(std::to_string(failed) + " checks failed");
	return 0;
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{"exact equivariant K-theory of affine Grassmannians at desk scale"};
	app.require_subcommand(1);
	app.fallthrough();

	std::string type_flag;
	app.add_option("--type", type_flag, "root system (A1 A2 A3 B2 C2 B3 C3 G2)");
	app.add_option("--window", g_session.window_radius, "max |coordinate| of translations");
	app.add_option("--N", g_session.deep_n, "depth multiplier for probe translations");
	app.add_option("--format", g_session.format, "output format: json or table");
	app.add_flag("--no-cache", g_no_cache, "disable transparent caches");

	auto* product = app.add_subcommand("product", "Pontryagin product of two Schubert classes");
	std::string px, py;
	product->add_option("x", px, "first element, e.g. \"s1 t[-1]\"")->required();
	product->add_option("y", py, "second element")->required();

	auto* expand = app.add_subcommand("expand", "Schubert-basis expansion of one class");
	std::string ex;
	expand->add_option("x", ex, "element")->required();

	auto* hop = app.add_subcommand("hop", "apply the divisor element h_i to a class");
	int hop_i = 0;
	std::string hx;
	hop->add_option("--i", hop_i, "finite simple index")->required();
	hop->add_option("x", hx, "element")->required();

	auto* chev = app.add_subcommand("chevalley", "transported quantum divisor products");
	int chev_i = 0;
	std::string chev_w;
	auto* oi = chev->add_option("--i", chev_i, "finite simple index");
	auto* ow = chev->add_option("--w", chev_w, "finite Weyl element, e.g. \"s1 s2\"");

	auto* verify = app.add_subcommand("verify", "run a verification suite");
	std::string suite = "all";
	verify->add_option("--suite", suite, "nildaha | weyl | lss | sl2 | chevalley | all");

	try {
		app.parse(argc, argv);
		if (!type_flag.empty()) g_type_flag = type_flag;
		if (*product) return cmd_product(px, py);
		if (*expand) return cmd_expand(ex);
		if (*hop) return cmd_hop(hop_i, hx);
		if (*chev)
			return cmd_chevalley(*oi ? std::optional<int>(chev_i) : std::nullopt,
			                     *ow ? std::optional<std::string>(chev_w) : std::nullopt);
		if (*verify) return cmd_verify(suite);
	} catch (const CLI::ParseError& e) {
		int code = app.exit(e);
		return code == 0 ? 0 : 4;
	} catch (const grk::parse_error& e) {
		std::fprintf(stderr, "parse error: %s\n", e.what());
		return 4;
	} catch (const grk::config_error& e) {
		std::fprintf(stderr, "config error: %s\n", e.what());
		return 4;
	} catch (const grk::window_error& e) {
		std::fprintf(stderr, "window error: %s\n", e.what());
		return 3;
	} catch (const grk::verify_error& e) {
		std::fprintf(stderr, "verification failure: %s\n", e.what());
		return 2;
	} catch (const std::exception& e) {
		std::fprintf(stderr, "error: %s\n", e.what());
		return 1;
	}
	return 0;
}
