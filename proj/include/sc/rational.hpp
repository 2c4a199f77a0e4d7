#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <string_view>

namespace sc {

using Rational = boost::rational<std::int64_t>;

/// Accepts `p/q` or an integer.
Rational parse_rational(std::string_view text);

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace sc
