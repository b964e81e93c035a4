#pragma once

#include <map>
#include <utility>

#include "gpval/rational.hpp"

namespace gpval {

/// Finitely supported Q-linear combination of objects of type T.
/// T must be totally ordered; zero coefficients are never stored.
template <class T>
class FormalSum {
 public:
  using Map = std::map<T, Rational>;

  FormalSum() = default;
  explicit FormalSum(T x, Rational c = Rational(1)) { add(std::move(x), c); }

  void add(T x, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(x), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Rational coeff(const T& x) const {
    auto it = terms_.find(x);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  FormalSum& operator+=(const FormalSum& o) {
    for (const auto& [x, c] : o.terms_) add(x, c);
    return *this;
  }
  FormalSum& operator-=(const FormalSum& o) {
    for (const auto& [x, c] : o.terms_) add(x, -c);
    return *this;
  }
  FormalSum& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [x, c] : terms_) c *= s;
    return *this;
  }
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend FormalSum operator-(FormalSum a) { return a *= Rational(-1); }
  friend FormalSum operator*(const Rational& s, FormalSum a) { return a *= s; }
  friend FormalSum operator*(FormalSum a, const Rational& s) { return a *= s; }

  friend bool operator==(const FormalSum&, const FormalSum&) = default;

  /// Extends f : T -> FormalSum<U> linearly.
  template <class U, class F>
  FormalSum<U> map_linear(F&& f) const {
    FormalSum<U> out;
    for (const auto& [x, c] : terms_) out += c * f(x);
    return out;
  }

 private:
  Map terms_;
};

template <class A, class B>
using Tensor = FormalSum<std::pair<A, B>>;

/// Bilinear extension of a pairing: sum over (a,b) of c_a c_b f(a,b).
template <class U, class A, class B, class F>
FormalSum<U> bilinear(const FormalSum<A>& a, const FormalSum<B>& b, F&& f) {
  FormalSum<U> out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) out += (cx * cy) * f(x, y);
  return out;
}

template <class A, class B>
Tensor<A, B> tensor(const FormalSum<A>& a, const FormalSum<B>& b) {
  Tensor<A, B> out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) out.add({x, y}, cx * cy);
  return out;
}

}  // namespace gpval
