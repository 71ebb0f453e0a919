#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace bsglab {

using Rational = boost::rational<int64_t>;

// Accepts "p/q", integers and decimals with an optional exponent
// ("0.125", "1.5e-4"); the value is kept exact.
Rational ParseRational(const std::string& text);
std::string FormatRational(const Rational& r);
double ToDouble(const Rational& r);
// floor(r * n) without overflow for |n| < 2^62.
int64_t FloorTimes(const Rational& r, int64_t n);

}  // namespace bsglab
