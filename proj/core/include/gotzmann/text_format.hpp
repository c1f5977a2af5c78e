#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gotzmann/monomial.hpp"

namespace gotzmann {

// Monomial text: space-separated exponents, "3 1 0" is x1^3*x2.
// Set file: one monomial per line, '#' starts a comment, blank lines ignored.
// Inline / census line: monomials separated by ';'.
// Ring: "n:c1,...,cn" where each ci is a positive integer or "inf".

Monomial parse_monomial(std::string_view text);
std::string format_monomial(const Monomial& m);
/// x1^3*x2 style, "1" for the empty product.
std::string pretty_monomial(const Monomial& m);

std::vector<Monomial> parse_set_file(std::string_view text);
std::vector<Monomial> parse_inline_set(std::string_view text);

/// Census witness line, members separated by "; " in set order.
std::string format_set_line(const MonomialSet& set);
/// One monomial per line, set file format.
std::string format_set_file(const MonomialSet& set);

RingSpec parse_ring(std::string_view text);
std::string format_ring(const RingSpec& ring);

}  // namespace gotzmann
