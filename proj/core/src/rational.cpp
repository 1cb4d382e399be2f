#include "muflow/rational.hpp"

#include <cctype>

#include "muflow/error.hpp"

namespace muflow {

namespace {

boost::multiprecision::cpp_int parse_integer(std::string_view text,
                                             std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) {
    throw InputError(InputErrorCode::kMalformedDocument,
                     "malformed rational '" + std::string(whole) + "'");
  }
  boost::multiprecision::cpp_int value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw InputError(InputErrorCode::kMalformedDocument,
                       "malformed rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (text[i] - '0');
  }
  return negative ? -value : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  const auto num = parse_integer(text.substr(0, slash), text);
  const auto den = parse_integer(text.substr(slash + 1), text);
  if (den <= 0) {
    throw InputError(
        InputErrorCode::kMalformedDocument,
        "rational '" + std::string(text) + "' needs a positive denominator");
  }
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace muflow
