#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace equicolor {

using Rational = boost::rational<std::int64_t>;

// Serialized as "p/q", always with an explicit denominator.
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);

}  // namespace equicolor
