#pragma once

#include <gmpxx.h>

#include <string>

namespace omegaq {

// All arithmetic in this library is exact: arbitrary-precision integers for
// counts and determinants, arbitrary-precision rationals for cohomology
// coefficients. No floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

/// Rational from a numerator/denominator pair, reduced to lowest terms.
Rat make_rat(long num, long den = 1);

std::string to_string(const Int& v);

/// "p" for integral values, otherwise "p/q" in lowest terms with q > 0.
std::string to_string(const Rat& v);

/// Parses "p" or "p/q" (optional sign, base 10). Throws std::invalid_argument.
Rat parse_rat(const std::string& text);

/// True iff |v| < 2^53, i.e. v survives a round trip through a JSON number.
bool fits_json_number(const Int& v);

}  // namespace omegaq
