#pragma once

// Shared text grammar for CharPoly and YPoly:
//   poly    := ["-"] term (("+" | "-") term)*
//   term    := coeff ["*" monomial] | monomial
//   monomial:= factor ("*" factor)*
//   factor  := ident ["^" digits]

#include "flagmaps/weight.hpp"

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace flagmaps::detail {

inline constexpr Coord kMaxExponent = 1'000'000'000;

struct ParsedFactor {
    std::string name;   // e.g. "w3", "rho", "y2"
    Coord exponent = 1;
};

struct ParsedTerm {
    mpz_class coeff = 1;
    std::vector<ParsedFactor> factors;
};

/// Throws InputError on malformed text.
std::vector<ParsedTerm> parse_terms(std::string_view text);

/// Splits "w12" into ("w", 12); returns false if there is no numeric suffix.
bool split_indexed(const std::string& name, std::string& prefix, std::size_t& index);

using RenderFactor = std::pair<std::string, Coord>;   // name, exponent > 0
struct RenderTerm {
    mpz_class coeff;
    std::vector<RenderFactor> factors;
};

std::string render_terms(const std::vector<RenderTerm>& terms);

} // namespace flagmaps::detail
