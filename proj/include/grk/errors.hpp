#pragma once

#include <stdexcept>
#include <string>

namespace grk {

/* Error taxonomy. Each class maps to a distinct CLI exit code:
   parse_error/config_error -> 4, window_error -> 3, verify_error -> 2. */

struct grk_error : std::runtime_error {
	explicit grk_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct config_error : grk_error {
	explicit config_error(const std::string& msg) : grk_error(msg) {}
};

struct parse_error : grk_error {
	parse_error(const std::string& msg, std::size_t pos)
	    : grk_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
	std::size_t position;
};

struct arith_error : grk_error {
	explicit arith_error(const std::string& msg) : grk_error(msg) {}
};

// Resource window exceeded (support too large, translation too deep, no stabilization).
struct window_error : grk_error {
	explicit window_error(const std::string& msg) : grk_error(msg) {}
};

// An algebraic identity that must hold failed to verify.
struct verify_error : grk_error {
	explicit verify_error(const std::string& msg) : grk_error(msg) {}
};

}  // namespace grk
