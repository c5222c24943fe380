#pragma once
#include <compare>
#include <numeric>
#include <string>

namespace tflab {

// Exact rational whose denominator divides 24, stored as the numerator over 24.
// Every quantity of interest here (lb, lb_T and their 1/12-granularity offsets)
// lives in (1/24)Z, so all comparisons are plain integer comparisons. No value
// is ever converted to floating point in a decision.
struct Rational24 {
  long long num = 0;  // value = num / 24

  static Rational24 from_int(long long k) { return {24 * k}; }
  static Rational24 over12(long long k) { return {2 * k}; }
  static Rational24 over24(long long k) { return {k}; }

  friend Rational24 operator+(Rational24 a, Rational24 b) { return {a.num + b.num}; }
  friend Rational24 operator-(Rational24 a, Rational24 b) { return {a.num - b.num}; }
  Rational24& operator+=(Rational24 o) { num += o.num; return *this; }
  Rational24& operator-=(Rational24 o) { num -= o.num; return *this; }
  friend auto operator<=>(const Rational24&, const Rational24&) = default;

  bool is_integer() const { return num % 24 == 0; }

  // largest integer <= value
  long long floor() const {
    long long q = num / 24, r = num % 24;
    return (r < 0) ? q - 1 : q;
  }

  // reduced "p/q" (or "p" when integral); for display only
  std::string str() const {
    long long g = std::gcd(num < 0 ? -num : num, 24LL);
    if (g == 0) return "0";
    long long p = num / g, q = 24 / g;
    if (q == 1) return std::to_string(p);
    return std::to_string(p) + "/" + std::to_string(q);
  }
};

}  // namespace tflab
