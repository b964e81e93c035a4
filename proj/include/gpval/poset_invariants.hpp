#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "gpval/error.hpp"
#include "gpval/hopf.hpp"
#include "gpval/osp.hpp"
#include "gpval/polynomial.hpp"
#include "gpval/preposet.hpp"

namespace gpval {

/// 1 on antichains (posets with no relations), 0 elsewhere.
inline Rational antichain_char(const Preposet& q) { return Rational(q.is_antichain() ? 1 : 0); }

/// (-1)^{|I| - |q|} on preantichains, 0 elsewhere.
inline Rational preantichain_char(const Preposet& q) {
  if (!q.is_preantichain()) return Rational(0);
  return Rational(minus_one_pow(q.n() - q.class_count()));
}

inline Character antichain_character() {
  return {"antichain", [](const HopfObject& x) -> Rational {
            const auto* q = std::get_if<Preposet>(&x);
            if (!q) throw InputError("the antichain character is defined on posets and preposets");
            return antichain_char(*q);
          }};
}

inline Character preantichain_character() {
  return {"preantichain", [](const HopfObject& x) -> Rational {
            const auto* q = std::get_if<Preposet>(&x);
            if (!q) throw InputError("the preantichain character is defined on posets and preposets");
            return preantichain_char(*q);
          }};
}

/// Number of (strictly) order-preserving maps to [t]. The preantichain
/// character agrees with the antichain one on posets and extends to
/// preposets valuatively.
inline UniPoly order_polynomial(const Preposet& p, bool strict) {
  UniPoly s = polynomial_invariant(preantichain_character(), HopfObject(p));
  if (strict) return s;
  UniPoly w = negate_variable(s);
  return UniPoly(Rational(minus_one_pow(p.n()))) * w;
}

/// sum over antichains A of x^{|J(A)|} (y+1)^{|J(A) - A|}, J(A) the down-set of A.
inline BiPoly poset_tutte(const Poset& p) {
  const BiPoly x = BiPoly::monomial({1, 0});
  const BiPoly y1 = BiPoly::monomial({0, 1}) + BiPoly(1);
  BiPoly out;
  for (Mask a = 0; a <= p.ground().full(); ++a) {
    if (p.is_antichain_set(a)) {
      Mask j = 0;
      for (int i = 0; i < p.n(); ++i)
        if (a & (1U << i)) j |= p.down(i);
      out += poly_pow(x, popcount(j)) * poly_pow(y1, popcount(j & ~a));
    }
    if (a == p.ground().full()) break;
  }
  return out;
}

/// Ordered transversal partitions: each block is an antichain and a lower
/// ideal of what remains. Unordered: the distinct underlying block sets.
inline std::vector<std::vector<Mask>> transversal_partitions(const Preposet& p, bool ordered) {
  std::vector<std::vector<Mask>> out;
  if (!p.is_poset()) return out;
  std::vector<Mask> cur;
  auto rec = [&](auto&& self, Mask rest) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    Mask mins = 0;
    for (int i = 0; i < p.n(); ++i)
      if ((rest & (1U << i)) && (p.down(i) & rest) == (1U << i)) mins |= 1U << i;
    for (Mask b = mins; b != 0; b = (b - 1) & mins) {
      cur.push_back(b);
      self(self, rest & ~b);
      cur.pop_back();
    }
  };
  rec(rec, p.ground().full());
  if (ordered) {
    std::sort(out.begin(), out.end());
    return out;
  }
  std::set<std::vector<Mask>> unordered;
  for (auto v : out) {
    std::sort(v.begin(), v.end());
    unordered.insert(std::move(v));
  }
  return {unordered.begin(), unordered.end()};
}

/// sum over unordered transversal partitions of prod (|S_i|-1)! t^{|I| - #parts}.
inline UniPoly poincare(const Poset& p) {
  UniPoly out;
  for (const auto& parts : transversal_partitions(p, false)) {
    Rational c(1);
    for (Mask b : parts) c *= factorial(popcount(b) - 1);
    out.add(p.n() - static_cast<int>(parts.size()), c);
  }
  return out;
}

/// Same weights summed over ordered transversal partitions that are proper
/// for the order `ell` (ground indices, first = smallest): the ell-minimum
/// of each block precedes the ell-minimum of the next.
inline UniPoly phi_ell(const Poset& p, const std::vector<int>& ell) {
  if (static_cast<int>(ell.size()) != p.n()) throw InputError("phi_ell needs a linear order of the ground set");
  std::vector<int> rank(static_cast<std::size_t>(p.n()), -1);
  for (std::size_t k = 0; k < ell.size(); ++k) {
    int e = ell[k];
    if (e < 0 || e >= p.n() || rank[static_cast<std::size_t>(e)] >= 0)
      throw InputError("phi_ell needs a linear order of the ground set");
    rank[static_cast<std::size_t>(e)] = static_cast<int>(k);
  }
  auto min_rank = [&](Mask b) {
    int r = p.n();
    for (int i = 0; i < p.n(); ++i)
      if (b & (1U << i)) r = std::min(r, rank[static_cast<std::size_t>(i)]);
    return r;
  };
  UniPoly out;
  for (const auto& parts : transversal_partitions(p, true)) {
    bool proper = true;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
      if (min_rank(parts[i]) >= min_rank(parts[i + 1])) proper = false;
    if (!proper) continue;
    Rational c(1);
    for (Mask b : parts) c *= factorial(popcount(b) - 1);
    out.add(p.n() - static_cast<int>(parts.size()), c);
  }
  return out;
}

/// Whether ell (ground indices, smallest first) is a linear extension of p.
inline bool is_properly_labelled(const Preposet& p, const std::vector<int>& ell) {
  std::vector<int> rank(static_cast<std::size_t>(p.n()));
  for (std::size_t k = 0; k < ell.size(); ++k) rank[static_cast<std::size_t>(ell[k])] = static_cast<int>(k);
  for (int i = 0; i < p.n(); ++i)
    for (int j = 0; j < p.n(); ++j)
      if (i != j && p.leq(i, j) && rank[static_cast<std::size_t>(i)] > rank[static_cast<std::size_t>(j)]) return false;
  return true;
}

/// Every poset on {1..n} (distinct relations, labelled).
inline std::vector<Poset> all_posets(int n) {
  std::vector<Poset> out;
  LabelSet g = LabelSet::range(n);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) pairs.emplace_back(i, j);
  std::set<Preposet> seen;
  const std::size_t k = pairs.size();
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << k); ++pick) {
    std::vector<Mask> down(static_cast<std::size_t>(n), 0);
    for (std::size_t b = 0; b < k; ++b)
      if (pick & (std::uint64_t{1} << b)) down[static_cast<std::size_t>(pairs[b].second)] |= 1U << pairs[b].first;
    Preposet q = Preposet::from_down_sets(g, down);
    if (q.is_poset() && seen.insert(q).second) out.emplace_back(q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Every preposet on {1..n}.
inline std::vector<Preposet> all_preposets(int n) {
  LabelSet g = LabelSet::range(n);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) pairs.emplace_back(i, j);
  std::set<Preposet> seen;
  const std::size_t k = pairs.size();
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << k); ++pick) {
    std::vector<Mask> down(static_cast<std::size_t>(n), 0);
    for (std::size_t b = 0; b < k; ++b)
      if (pick & (std::uint64_t{1} << b)) down[static_cast<std::size_t>(pairs[b].second)] |= 1U << pairs[b].first;
    seen.insert(Preposet::from_down_sets(g, down));
  }
  return {seen.begin(), seen.end()};
}

}  // namespace gpval
