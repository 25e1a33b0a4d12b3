#pragma once

#include <cctype>
#include <string>

#include "context.hpp"
#include "errors.hpp"

namespace grk {

// Affine Weyl group elements as text. The grammar is a space separated
// word in the generators "s0".."s<rank>", optionally followed by a single
// translation "t[c1,...,cr]" in simple-coroot coordinates, or the single
// letter "e" for the identity:
//
//   e
//   s1 s2
//   t[-1,0]
//   s1 s0 t[2,-1]
//
// Printing is canonical: a shortest word for the finite part followed by
// the translation part, so parse/print round-trips.

namespace detail {

inline void skip_spaces(const std::string& s, size_t& p) {
	while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
}

inline int parse_int(const std::string& s, size_t& p) {
	size_t start = p;
	bool neg = false;
	if (p < s.size() && (s[p] == '-' || s[p] == '+')) {
		neg = (s[p] == '-');
		++p;
	}
	if (p >= s.size() || !std::isdigit(static_cast<unsigned char>(s[p])))
		throw parse_error("expected an integer", start);
	long v = 0;
	while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
		v = v * 10 + (s[p] - '0');
		if (v > 1000000) throw parse_error("integer out of range", start);
		++p;
	}
	return static_cast<int>(neg ? -v : v);
}

}  // namespace detail

inline AffElt parse_aff_elt(const Ctx& ctx, const std::string& text) {
	const int rank = ctx.rd.rank();
	size_t p = 0;
	detail::skip_spaces(text, p);
	if (p >= text.size()) throw parse_error("empty element", p);

	AffElt x = ctx.W.aff_id();
	if (text[p] == 'e') {
		++p;
		detail::skip_spaces(text, p);
		if (p != text.size())
			throw parse_error("'e' must stand alone", p);
		return x;
	}

	bool saw_any = false;
	while (p < text.size() && text[p] == 's') {
		size_t at = p;
		++p;
		if (p >= text.size() || !std::isdigit(static_cast<unsigned char>(text[p])))
			throw parse_error("expected a generator index after 's'", p);
		int i = text[p] - '0';
		++p;
		if (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p])))
			throw parse_error("generator index must be a single digit", p);
		if (i > rank)
			throw parse_error("generator index exceeds the rank", at + 1);
		x = ctx.W.aff_mul(x, ctx.W.aff_gen(i));
		saw_any = true;
		detail::skip_spaces(text, p);
	}

	if (p < text.size() && text[p] == 't') {
		size_t at = p;
		++p;
		if (p >= text.size() || text[p] != '[')
			throw parse_error("expected '[' after 't'", p);
		++p;
		Coweight b = ctx.rd.zero_coweight();
		for (int k = 0; k < rank; ++k) {
			detail::skip_spaces(text, p);
			b.v[k] = detail::parse_int(text, p);
			detail::skip_spaces(text, p);
			if (k + 1 < rank) {
				if (p >= text.size() || text[p] != ',')
					throw parse_error("expected ','", p);
				++p;
			}
		}
		if (p >= text.size() || text[p] != ']')
			throw parse_error("expected ']'", p);
		++p;
		x = ctx.W.aff_mul(x, ctx.W.translation(b));
		saw_any = true;
		(void)at;
		detail::skip_spaces(text, p);
	}

	if (!saw_any) throw parse_error("expected 'e', 's<i>' or 't[...]'", p);
	if (p != text.size()) throw parse_error("unexpected trailing input", p);
	return x;
}

inline std::string print_aff_elt(const Ctx& ctx, const AffElt& x) {
	std::string out;
	if (x.u != ctx.W.id()) {
		for (uint8_t i : ctx.W.word(x.u)) {
			if (!out.empty()) out += ' ';
			out += 's';
			out += static_cast<char>('0' + i);
		}
	}
	bool has_t = !(x.b == ctx.rd.zero_coweight());
	if (has_t) {
		if (!out.empty()) out += ' ';
		out += 't';
		out += vec_to_string(x.b.v);
	}
	if (out.empty()) out = "e";
	return out;
}

}  // namespace grk
