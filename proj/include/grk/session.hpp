#pragma once

#include <cstdlib>
#include <optional>
#include <string>

#include "context.hpp"

namespace grk {

/* User-facing knobs, resolved from flags and the environment and validated
   before a context is built. */
struct SessionConfig {
	Type type = Type::A1;
	int window_radius = 4;  // max |coordinate| of translations in expansions
	int deep_n = 2;         // depth multiplier for probe translations
	std::string format = "json";
	bool cache = true;
};

inline constexpr const char* kTypeEnvVar = "GRK_TYPE";

/* The --type flag wins; otherwise the GRK_TYPE environment variable; a type
   must come from one of the two. */
inline Type resolve_type(const std::optional<std::string>& flag) {
	if (flag) return parse_type(*flag);
	if (const char* env = std::getenv(kTypeEnvVar)) return parse_type(env);
	throw config_error(std::string("no root system given: pass --type or set ") + kTypeEnvVar);
}

inline void validate(const SessionConfig& sc) {
	if (sc.window_radius < 1) throw config_error("window radius must be at least 1");
	if (sc.deep_n < 1) throw config_error("depth multiplier must be at least 1");
	if (sc.deep_n > 6) throw config_error("depth multiplier capped at 6");
	if (sc.format != "json" && sc.format != "table")
		throw config_error("format must be json or table");
}

inline Config make_config(const SessionConfig& sc) {
	Config c;
	c.deep_n = sc.deep_n;
	c.si_n_cap = std::max(c.si_n_cap, sc.deep_n);
	c.window_radius = sc.window_radius;
	c.cache = sc.cache;
	return c;
}

}  // namespace grk
