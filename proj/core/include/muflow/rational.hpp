#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace muflow {

// Exact arbitrary-precision rational.
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p", "p/q" (q > 0). Throws InputError(kMalformedDocument).
Rational parse_rational(std::string_view text);

// Canonical form: "p" when the denominator is 1, else "p/q" in lowest terms.
std::string format_rational(const Rational& r);

}  // namespace muflow
