#pragma once

#include "grk/grclass.hpp"

namespace grk {

/* Basis element [O(u)] Q^q of the quantum-twisted finite flag basis. The
   exponent vector q lives in simple-coroot coordinates, one slot per Q_i. */
struct QKKey {
	WIdx u = 0;
	Coweight q;
	auto operator<=>(const QKKey&) const = default;
};

using QKClass = std::map<QKKey, RatFunc>;

inline void qk_add_term(QKClass& a, const QKKey& k, const RatFunc& f) {
	if (f.is_zero()) return;
	auto it = a.find(k);
	if (it == a.end()) {
		a.emplace(k, f);
		return;
	}
	it->second = it->second + f;
	if (it->second.is_zero()) a.erase(it);
}

inline bool qk_equal(const QKClass& a, const QKClass& b) {
	if (a.size() != b.size()) return false;
	auto it = a.begin();
	auto jt = b.begin();
	for (; it != a.end(); ++it, ++jt) {
		if (!(it->first == jt->first)) return false;
		if (!rf_equal(it->second, jt->second)) return false;
	}
	return true;
}

namespace detail {

// largest coordinate magnitude reachable from the support by the finite group
inline int orbit_radius(const Ctx& ctx, const GrClass& a) {
	int r = 0;
	for (const auto& [g, f] : a)
		for (WIdx u = 0; u < ctx.W.size(); ++u) {
			Coweight d = ctx.W.act(u, g);
			for (int j = 0; j < ctx.rd.rank(); ++j) {
				int m = d.v[j] < 0 ? -d.v[j] : d.v[j];
				if (m > r) r = m;
			}
		}
	return r;
}

}  // namespace detail

/* One probe of the divisor product at depth n: represent [O(s_i)] and [O(u)]
   over the base point t_b, b = deep(n), multiply, expand, and strip Q^{2b}. */
inline QKClass quantum_divisor_product_probe(const Ctx& ctx, int i, WIdx u, int n) {
	Coweight b = ctx.deep(n);
	AffElt si_b{ctx.W.lmul(i, ctx.W.id()), b};
	AffElt u_b{u, b};
	GrClass product = pontryagin(ctx, gr_schubert_class(ctx, si_b), gr_schubert_class(ctx, u_b));
	SchubertCoeffs co = expand_in_schubert_basis(ctx, product, detail::orbit_radius(ctx, product));
	QKClass out;
	for (const auto& [x, c] : co) qk_add_term(out, QKKey{x.u, x.b - b - b}, c);
	return out;
}

/* Quantum Chevalley product [O(s_i)] * [O(u)]. Two consecutive depths must
   give the same answer; the depth is raised until they do or the cap is hit. */
inline QKClass quantum_divisor_product(const Ctx& ctx, int i, WIdx u) {
	QKClass prev = quantum_divisor_product_probe(ctx, i, u, 1);
	for (int n = 2; n <= ctx.cfg.si_n_cap; ++n) {
		QKClass next = quantum_divisor_product_probe(ctx, i, u, n);
		if (qk_equal(prev, next)) return prev;
		prev = std::move(next);
	}
	throw window_error("divisor product did not stabilize below the depth cap");
}

/* All products [O(s_i)] * [O(u)], keyed by (i, u). */
inline std::map<std::pair<int, WIdx>, QKClass> chevalley_table(const Ctx& ctx) {
	std::map<std::pair<int, WIdx>, QKClass> out;
	for (int i = 1; i <= ctx.rd.rank(); ++i)
		for (WIdx u = 0; u < ctx.W.size(); ++u) out.emplace(std::pair{i, u}, quantum_divisor_product(ctx, i, u));
	return out;
}

}  // namespace grk
