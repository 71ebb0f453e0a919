#include "bsglab/rational.hpp"

#include <cctype>

#include "bsglab/error.hpp"

namespace bsglab {

namespace {

int64_t ParseInt(const std::string& s, const std::string& whole) {
  Require(!s.empty(), "malformed number: " + whole);
  size_t pos = 0;
  int64_t v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw PreconditionError("malformed number: " + whole);
  }
  Require(pos == s.size(), "malformed number: " + whole);
  return v;
}

Rational Pow10(int e) {
  Require(e <= 18, "exponent out of range");
  int64_t p = 1;
  for (int i = 0; i < e; ++i) p *= 10;
  return Rational(p);
}

}  // namespace

Rational ParseRational(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    int64_t q = ParseInt(text.substr(slash + 1), text);
    Require(q != 0, "zero denominator: " + text);
    return Rational(ParseInt(text.substr(0, slash), text), q);
  }
  std::string mant = text;
  int exp10 = 0;
  auto e = text.find_first_of("eE");
  if (e != std::string::npos) {
    mant = text.substr(0, e);
    exp10 = static_cast<int>(ParseInt(text.substr(e + 1), text));
  }
  auto dot = mant.find('.');
  if (dot != std::string::npos) {
    std::string frac = mant.substr(dot + 1);
    for (char c : frac) Require(std::isdigit(static_cast<unsigned char>(c)), "malformed number: " + text);
    exp10 -= static_cast<int>(frac.size());
    mant = mant.substr(0, dot) + frac;
    if (mant == "-" || mant == "+" || mant.empty()) mant += "0";
  }
  Rational v(ParseInt(mant, text));
  if (exp10 >= 0) return v * Pow10(exp10);
  return v / Pow10(-exp10);
}

std::string FormatRational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double ToDouble(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

int64_t FloorTimes(const Rational& r, int64_t n) {
  __int128 num = static_cast<__int128>(r.numerator()) * n;
  __int128 den = r.denominator();
  __int128 q = num / den;
  if (num % den != 0 && num < 0) --q;
  return static_cast<int64_t>(q);
}

}  // namespace bsglab
