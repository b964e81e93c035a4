#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "gpval/error.hpp"

namespace gpval {

/// Exact rational number in lowest terms with a positive denominator.
class Rational {
 public:
  using Int = boost::multiprecision::cpp_int;

  Rational() = default;
  Rational(int n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const Int& n) : v_(n) {}
  Rational(const Int& num, const Int& den) {
    if (den == 0) throw InputError("rational with zero denominator");
    v_ = den < 0 ? Value(Int(-num), Int(-den)) : Value(num, den);
  }

  /// Parses "p", "-p" or "p/q".
  static Rational parse(std::string_view text) {
    auto parse_int = [&](std::string_view s) -> Int {
      std::size_t i = 0;
      if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
      if (i == s.size()) throw InputError("bad rational: '" + std::string(text) + "'");
      for (std::size_t k = i; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9') throw InputError("bad rational: '" + std::string(text) + "'");
      return Int(std::string(s[0] == '+' ? s.substr(1) : s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }

  Int numerator() const { return boost::multiprecision::numerator(v_); }
  Int denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return v_.sign(); }

  std::optional<long long> to_int64() const {
    if (!is_integer()) return std::nullopt;
    Int n = numerator();
    if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min())
      return std::nullopt;
    return static_cast<long long>(n);
  }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
  }

  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }
  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = a.v_.compare(b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  using Value = boost::multiprecision::cpp_rational;
  Value v_;
};

inline Rational pow(Rational base, unsigned exp) {
  Rational result(1);
  while (exp != 0) {
    if (exp & 1U) result *= base;
    base *= base;
    exp >>= 1U;
  }
  return result;
}

inline Rational factorial(int n) {
  Rational r(1);
  for (int i = 2; i <= n; ++i) r *= Rational(i);
  return r;
}

inline Rational binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  Rational r(1);
  for (int i = 1; i <= k; ++i) r = r * Rational(n - k + i) / Rational(i);
  return r;
}

inline int minus_one_pow(int e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace gpval
