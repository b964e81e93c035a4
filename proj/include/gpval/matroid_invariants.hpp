#pragma once

#include <map>
#include <string>
#include <vector>

#include "gpval/error.hpp"
#include "gpval/matroid.hpp"
#include "gpval/osp.hpp"
#include "gpval/polynomial.hpp"

namespace gpval {

/// Corank-nullity sum over all subsets.
inline BiPoly tutte(const Matroid& m) {
  const BiPoly xm1 = BiPoly::monomial({1, 0}) - BiPoly(1);
  const BiPoly ym1 = BiPoly::monomial({0, 1}) - BiPoly(1);
  std::vector<BiPoly> xp{BiPoly(1)}, yp{BiPoly(1)};
  for (int k = 1; k <= m.n(); ++k) {
    xp.push_back(xp.back() * xm1);
    yp.push_back(yp.back() * ym1);
  }
  std::map<std::pair<int, int>, long long> counts;
  for (Mask a = 0; a <= m.full(); ++a) {
    ++counts[{m.rank() - m.rank(a), popcount(a) - m.rank(a)}];
    if (a == m.full()) break;
  }
  BiPoly t;
  for (const auto& [e, c] : counts)
    t += BiPoly(Rational(c)) * xp[static_cast<std::size_t>(e.first)] * yp[static_cast<std::size_t>(e.second)];
  return t;
}

/// Möbius function of the flat lattice from the bottom flat.
inline std::map<Mask, Rational> flat_mobius(const Matroid& m) {
  auto fl = m.flats();
  std::map<Mask, Rational> mu;
  for (Mask f : fl) {
    if (f == fl.front()) {
      mu[f] = Rational(1);
      continue;
    }
    Rational s(0);
    for (const auto& [g, v] : mu)
      if (g != f && is_subset(g, f)) s += v;
    mu[f] = -s;
  }
  return mu;
}

inline UniPoly char_poly(const Matroid& m) {
  if (m.has_loop()) return {};
  UniPoly chi;
  for (const auto& [f, mu] : flat_mobius(m)) chi.add(m.rank() - m.rank(f), mu);
  return chi;
}

/// chi / (t - 1); undefined in rank 0.
inline UniPoly reduced_char(const Matroid& m) {
  if (m.rank() == 0 && !m.has_loop()) throw InputError("reduced characteristic polynomial needs rank >= 1");
  return divide_by_t_minus_one(char_poly(m));
}

/// Unsigned coefficient of t^{rk - 1 - i} in the reduced characteristic polynomial.
inline Rational mu_i(const Matroid& m, int i) {
  Rational c = reduced_char(m).coeff(m.rank() - 1 - i);
  return c.sign() < 0 ? -c : c;
}

enum class BetaConvention { crapo, paper };

inline const char* to_string(BetaConvention c) { return c == BetaConvention::crapo ? "crapo" : "paper"; }

inline Rational beta(const Matroid& m, BetaConvention conv = BetaConvention::crapo) {
  if (conv == BetaConvention::crapo) return tutte(m).coeff({1, 0});
  if (m.rank() == 0) return Rational(0);
  Rational c = reduced_char(m).coeff(0);
  return c.sign() < 0 ? -c : c;
}

/// (-1)^{rk - k} times the product of beta over consecutive prefix minors.
inline Rational csm_weight(const Matroid& m, const OrderedSetPartition& f) {
  if (f.ground() != m.ground()) throw InputError("csm_weight: OSP ground differs from the matroid ground");
  Rational w(minus_one_pow(m.rank() - f.size()));
  Mask prefix = 0;
  for (Mask b : f.masks(m.ground())) {
    w *= beta(m.minor(prefix, prefix | b), BetaConvention::crapo);
    if (w.is_zero()) return w;
    prefix |= b;
  }
  return w;
}

/// Histogram of rank-jump strings over all linear orders.
inline std::map<std::string, long long> g_invariant(const Matroid& m) {
  std::map<std::string, long long> out;
  for (const auto& order : permutations(m.n())) {
    std::string s;
    Mask prefix = 0;
    for (int e : order) {
      Mask next = prefix | (1U << e);
      s += (m.rank(next) > m.rank(prefix)) ? '1' : '0';
      prefix = next;
    }
    ++out[s];
  }
  return out;
}

inline Rational bjr_character(const Matroid& m) { return Rational(m.bases().size() == 1 ? 1 : 0); }

/// Variable name for the divisor class of a flat: "t_{1,2}".
inline std::string flat_variable(const Matroid& m, Mask f) { return "t_{" + m.ground().subset(f).str() + "}"; }

/// Volume polynomial in the variables t_F, F a nonempty proper flat, with
/// d = rk - 1 and the chain closed off by the whole ground set.
inline MultiPoly volume_polynomial(const Matroid& m) {
  if (m.has_loop()) throw InputError("volume polynomial needs a loopless matroid");
  if (m.rank() == 0) throw InputError("volume polynomial needs rank >= 1");
  const int d = m.rank() - 1;
  std::vector<Mask> proper;
  for (Mask f : m.flats())
    if (f != 0 && f != m.full()) proper.push_back(f);

  MultiPoly out;
  std::vector<Mask> chain;
  std::vector<int> parts;
  auto emit = [&]() {
    const int k = static_cast<int>(chain.size());
    Rational c(minus_one_pow(d - k));
    c *= factorial(d);
    int prefix = 0;
    NamedMonomial mono;
    for (int i = 0; i < k; ++i) {
      const int di = parts[static_cast<std::size_t>(i)];
      c /= factorial(di);
      prefix += di;
      const Mask fi = chain[static_cast<std::size_t>(i)];
      const Mask next = (i + 1 < k) ? chain[static_cast<std::size_t>(i + 1)] : m.full();
      const int j = prefix - m.rank(fi);
      c *= binomial(di - 1, j);
      if (c.is_zero()) return;
      Matroid minor = m.minor(fi, next);
      if (j < 0 || j > minor.rank() - 1) return;
      c *= mu_i(minor, j);
      if (c.is_zero()) return;
      mono[flat_variable(m, fi)] += di;
    }
    out.add(mono, c);
  };
  // chains of proper flats, each with a composition of d into k parts
  auto compositions = [&](auto&& self, int remaining, std::size_t slot) -> void {
    if (slot == chain.size()) {
      if (remaining == 0) emit();
      return;
    }
    for (int di = 1; di <= remaining; ++di) {
      parts[slot] = di;
      self(self, remaining - di, slot + 1);
    }
  };
  auto chains = [&](auto&& self, Mask last) -> void {
    parts.assign(chain.size(), 0);
    compositions(compositions, d, 0);
    for (Mask f : proper) {
      if (f == last || !is_subset(last, f)) continue;
      chain.push_back(f);
      self(self, f);
      chain.pop_back();
    }
  };
  chains(chains, 0);
  return out;
}

}  // namespace gpval
