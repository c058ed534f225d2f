#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace efp {

using Int = boost::multiprecision::cpp_int;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. All price/valuation/budget arithmetic in this library is
/// exact; no floating point enters any decision.
using Rat = boost::multiprecision::cpp_rational;

/// floor(a), exact (rounds toward negative infinity).
Int floor_rat(const Rat& a);

/// ceil(a), exact.
Int ceil_rat(const Rat& a);

/// floor(a / b) for b > 0.
Int floor_div(const Rat& a, const Rat& b);

/// True iff v = k * spacing for some nonnegative integer k.
bool on_grid(const Rat& v, const Rat& spacing);

/// Smallest grid point k * spacing that is >= v.
Rat round_up_to_grid(const Rat& v, const Rat& spacing);

/// Parses "3", "-7", "8/7" or a decimal string like "1.11".
/// Throws std::invalid_argument on malformed input.
Rat parse_rat(const std::string& s);

/// Canonical form: "num/den" in lowest terms, or just "num" when den == 1.
std::string format_rat(const Rat& r);

}  // namespace efp
