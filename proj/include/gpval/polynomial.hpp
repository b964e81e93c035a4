#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gpval/error.hpp"
#include "gpval/formal_sum.hpp"
#include "gpval/rational.hpp"

namespace gpval {

template <class E>
struct ExponentTraits;

template <>
struct ExponentTraits<int> {
  static int zero() { return 0; }
  static int add(int a, int b) { return a + b; }
};

template <>
struct ExponentTraits<std::pair<int, int>> {
  using E = std::pair<int, int>;
  static E zero() { return {0, 0}; }
  static E add(const E& a, const E& b) { return {a.first + b.first, a.second + b.second}; }
};

/// Exponents of x1, y1, x2, y2.
using Exponent4 = std::array<Rational, 4>;

template <>
struct ExponentTraits<Exponent4> {
  static Exponent4 zero() { return {Rational(0), Rational(0), Rational(0), Rational(0)}; }
  static Exponent4 add(const Exponent4& a, const Exponent4& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
  }
};

/// Monomial as variable name -> positive exponent.
using NamedMonomial = std::map<std::string, int>;

template <>
struct ExponentTraits<NamedMonomial> {
  static NamedMonomial zero() { return {}; }
  static NamedMonomial add(NamedMonomial a, const NamedMonomial& b) {
    for (const auto& [v, e] : b) {
      int& slot = a[v];
      slot += e;
      if (slot == 0) a.erase(v);
    }
    return a;
  }
};

/// Sparse polynomial with exact coefficients over an exponent monoid E.
template <class E>
class Polynomial {
 public:
  using Traits = ExponentTraits<E>;
  using Map = std::map<E, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& c) { add(Traits::zero(), c); }  // NOLINT(google-explicit-constructor)
  Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  static Polynomial monomial(const E& e, const Rational& c = Rational(1)) {
    Polynomial p;
    p.add(e, c);
    return p;
  }

  void add(const E& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  Rational coeff(const E& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add(Traits::add(ea, eb), ca * cb);
    return out;
  }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  Map terms_;
};

using UniPoly = Polynomial<int>;
using BiPoly = Polynomial<std::pair<int, int>>;
using ExponentPoly = Polynomial<Exponent4>;
using MultiPoly = Polynomial<NamedMonomial>;

/// Quasisymmetric function in the monomial basis, keyed by compositions.
using QSymMonomial = FormalSum<std::vector<int>>;

template <class E>
Polynomial<E> poly_pow(const Polynomial<E>& p, int e) {
  Polynomial<E> r(1);
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

// ---------------------------------------------------------------------------
// univariate helpers

inline UniPoly var_t() { return UniPoly::monomial(1); }

inline int degree(const UniPoly& p) {
  if (p.is_zero()) return -1;
  return p.terms().rbegin()->first;
}

inline Rational eval(const UniPoly& p, const Rational& t) {
  Rational r(0);
  for (const auto& [e, c] : p) {
    if (e < 0) throw InputError("negative exponent in polynomial evaluation");
    r += c * pow(t, static_cast<unsigned>(e));
  }
  return r;
}

/// p(-t)
inline UniPoly negate_variable(const UniPoly& p) {
  UniPoly out;
  for (const auto& [e, c] : p) out.add(e, c * minus_one_pow(e));
  return out;
}

/// Unique polynomial of degree < n through (xs[i], ys[i]).
inline UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw InputError("interpolation: node/value count mismatch");
  UniPoly out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    UniPoly basis(1);
    Rational denom(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis *= var_t() - UniPoly(xs[j]);
      denom *= xs[i] - xs[j];
    }
    out += UniPoly(ys[i] / denom) * basis;
  }
  return out;
}

/// Exact quotient p / (t - 1); a nonzero remainder is an internal error.
inline UniPoly divide_by_t_minus_one(const UniPoly& p) {
  int d = degree(p);
  if (d < 0) return {};
  if (p.terms().begin()->first < 0) throw InputError("division of a Laurent polynomial");
  // synthetic division from the top coefficient
  std::vector<Rational> q(static_cast<std::size_t>(d) + 1, Rational(0));
  Rational carry(0);
  for (int e = d; e >= 1; --e) {
    carry = p.coeff(e) + carry;
    q[static_cast<std::size_t>(e - 1)] = carry;
  }
  if (!(p.coeff(0) + carry).is_zero()) throw InternalError("polynomial not divisible by t-1");
  UniPoly out;
  for (int e = 0; e < d; ++e) out.add(e, q[static_cast<std::size_t>(e)]);
  return out;
}

/// C(t, k) = t(t-1)...(t-k+1)/k!
inline UniPoly binomial_poly(int k) {
  UniPoly r(1);
  for (int i = 0; i < k; ++i) r *= var_t() - UniPoly(i);
  return UniPoly(Rational(1) / factorial(k)) * r;
}

// ---------------------------------------------------------------------------
// string keys for serialization: "1", "t", "t^2", "x*y^2", "x1*y1^3/2"

namespace detail {
inline void append_factor(std::string& key, const std::string& var, const Rational& e) {
  if (e.is_zero()) return;
  if (!key.empty()) key += '*';
  key += var;
  if (e != Rational(1)) key += "^" + e.str();
}
}  // namespace detail

inline std::string monomial_key(int e, const std::string& var = "t") {
  std::string k;
  detail::append_factor(k, var, Rational(e));
  return k.empty() ? "1" : k;
}
inline std::string monomial_key(const std::pair<int, int>& e) {
  std::string k;
  detail::append_factor(k, "x", Rational(e.first));
  detail::append_factor(k, "y", Rational(e.second));
  return k.empty() ? "1" : k;
}
inline std::string monomial_key(const Exponent4& e) {
  static const std::array<const char*, 4> names{"x1", "y1", "x2", "y2"};
  std::string k;
  for (std::size_t i = 0; i < 4; ++i) detail::append_factor(k, names[i], e[i]);
  return k.empty() ? "1" : k;
}
inline std::string monomial_key(const NamedMonomial& m) {
  std::string k;
  for (const auto& [v, e] : m) detail::append_factor(k, v, Rational(e));
  return k.empty() ? "1" : k;
}

/// Monomial keys with their coefficients, sorted by key.
template <class E>
std::map<std::string, Rational> coefficient_map(const Polynomial<E>& p) {
  std::map<std::string, Rational> out;
  for (const auto& [e, c] : p) out.emplace(monomial_key(e), c);
  return out;
}
inline std::map<std::string, Rational> coefficient_map(const UniPoly& p, const std::string& var) {
  std::map<std::string, Rational> out;
  for (const auto& [e, c] : p) out.emplace(monomial_key(e, var), c);
  return out;
}

/// Human-readable form, highest terms first: "t^2 + 3*t + 3".
template <class E>
std::string to_string(const Polynomial<E>& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Rational c = it->second;
    std::string m = monomial_key(it->first);
    bool neg = c.sign() < 0;
    if (neg) c = -c;
    s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (m == "1")
      s += c.str();
    else if (c == Rational(1))
      s += m;
    else
      s += c.str() + "*" + m;
    first = false;
  }
  return s;
}

inline std::string composition_key(const std::vector<int>& alpha) {
  std::string s = "M(";
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(alpha[i]);
  }
  return s + ")";
}

/// Principal specialization M_alpha(1^t) = C(t, len alpha), extended linearly.
inline UniPoly principal_specialization(const QSymMonomial& f) {
  UniPoly out;
  for (const auto& [alpha, c] : f) out += UniPoly(c) * binomial_poly(static_cast<int>(alpha.size()));
  return out;
}

}  // namespace gpval
