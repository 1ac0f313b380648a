#pragma once

// Text matrix format: a header line "rows cols", then `rows` lines of `cols`
// whitespace-separated tokens. Tokens are integers, or "p/q" for rationals.
// Lines starting with '#' are ignored.

#include <iosfwd>
#include <string>
#include <string_view>

#include "csl/linalg.hpp"

namespace csl {

IntMatrix read_int_matrix(std::istream& in);
RatMatrix read_rat_matrix(std::istream& in);
IntMatrix parse_int_matrix(std::string_view text);
RatMatrix parse_rat_matrix(std::string_view text);

void write_matrix(std::ostream& out, const IntMatrix& m);
/// Entries are written reduced, as integers where the denominator divides them.
void write_matrix(std::ostream& out, const RatMatrix& m);
std::string format_matrix(const IntMatrix& m);
std::string format_matrix(const RatMatrix& m);

/// Comma- or whitespace-separated integers, e.g. "1,1,1" or "1 -2 0".
IntVector parse_vector(std::string_view text);
std::string format_vector(std::span<const Integer> v);

}  // namespace csl
