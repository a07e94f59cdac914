#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "acgt/error.hpp"

namespace acgt {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

inline bool is_integer(const BigRational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

// Precondition: is_integer(q).
inline BigInt to_integer(const BigRational& q) {
  return boost::multiprecision::numerator(q);
}

// "p" when integral, otherwise "p/q" in lowest terms.
inline std::string to_string(const BigRational& q) {
  const BigInt& den = boost::multiprecision::denominator(q);
  if (den == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

inline std::string to_string(const BigInt& z) { return z.str(); }

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Decimal digits to BigInt. Leading zeros are stripped first: boost reads
// a leading 0 as an octal prefix.
inline BigInt decimal_digits(std::string_view digits) {
  auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  return BigInt{std::string(digits.substr(first))};
}

}  // namespace detail

// Accepts an optionally signed integer, an exact decimal ("0.125") or a
// fraction "p/q". Nothing is ever routed through floating point.
inline BigRational parse_rational(std::string_view text) {
  auto fail = [&] {
    return Error(Errc::invalid_parameter,
                 "not an exact number: '" + std::string(text) + "'");
  };
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  BigRational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den)) throw fail();
    BigInt d = detail::decimal_digits(den);
    if (d == 0) throw fail();
    value = BigRational(detail::decimal_digits(num), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!detail::all_digits(whole) || !detail::all_digits(frac)) throw fail();
    BigInt scale = boost::multiprecision::pow(BigInt(10),
                                              static_cast<unsigned>(frac.size()));
    BigInt digits = detail::decimal_digits(std::string(whole) + std::string(frac));
    value = BigRational(digits, scale);
  } else {
    if (!detail::all_digits(s)) throw fail();
    value = BigRational(detail::decimal_digits(s));
  }
  return negative ? BigRational(-value) : value;
}

}  // namespace acgt
