#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gpval/building_set.hpp"
#include "gpval/error.hpp"
#include "gpval/formal_sum.hpp"
#include "gpval/matroid.hpp"
#include "gpval/osp.hpp"
#include "gpval/polynomial.hpp"
#include "gpval/preposet.hpp"
#include "gpval/submodular_gp.hpp"

namespace gpval {

/// An element of one of the Hopf submonoids handled by the engine.
using HopfObject = std::variant<SubmodularGP, Matroid, Preposet, BuildingSet, WeightedOSP>;

inline const LabelSet& ground_of(const HopfObject& x) {
  return std::visit([](const auto& v) -> const LabelSet& { return v.ground(); }, x);
}

/// Delta_{S,T}(x), or nullopt where the coproduct vanishes.
inline std::optional<std::pair<HopfObject, HopfObject>> coproduct(const HopfObject& x, Mask s) {
  struct Visitor {
    Mask s;
    std::optional<std::pair<HopfObject, HopfObject>> operator()(const SubmodularGP& p) const {
      auto [a, b] = restrict_contract(p, s);
      return std::pair<HopfObject, HopfObject>{std::move(a), std::move(b)};
    }
    std::optional<std::pair<HopfObject, HopfObject>> operator()(const Matroid& m) const {
      return std::pair<HopfObject, HopfObject>{m.restrict(s), m.contract(s)};
    }
    std::optional<std::pair<HopfObject, HopfObject>> operator()(const Preposet& q) const {
      auto r = preposet_coproduct(q, s);
      if (!r) return std::nullopt;
      return std::pair<HopfObject, HopfObject>{std::move(r->first), std::move(r->second)};
    }
    std::optional<std::pair<HopfObject, HopfObject>> operator()(const BuildingSet& b) const {
      return std::pair<HopfObject, HopfObject>{b.restrict(s), b.contract(s)};
    }
    std::optional<std::pair<HopfObject, HopfObject>> operator()(const WeightedOSP& d) const {
      auto r = wosp_split(d, d.ground().subset(s));
      if (!r) return std::nullopt;
      return std::pair<HopfObject, HopfObject>{std::move(r->first), std::move(r->second)};
    }
  };
  return std::visit(Visitor{s}, x);
}

/// Delta_{S_1,...,S_k}(x) for a decomposition into (possibly empty) parts,
/// computed by splitting off one part at a time.
inline std::optional<std::vector<HopfObject>> iterated_coproduct(const HopfObject& x, const std::vector<Mask>& parts) {
  std::vector<HopfObject> out;
  out.reserve(parts.size());
  HopfObject rest = x;
  Mask remaining = ground_of(x).full();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i + 1 == parts.size()) {
      if (parts[i] != remaining) throw InputError("decomposition does not cover the ground set");
      out.push_back(std::move(rest));
      break;
    }
    if (!is_subset(parts[i], remaining)) throw InputError("decomposition parts overlap");
    auto split = coproduct(rest, compress(parts[i], remaining));
    if (!split) return std::nullopt;
    out.push_back(std::move(split->first));
    rest = std::move(split->second);
    remaining &= ~parts[i];
  }
  return out;
}

/// x * y in the owning monoid, as a linear combination.
inline FormalSum<HopfObject> product(const HopfObject& x, const HopfObject& y) {
  if (x.index() != y.index()) throw InputError("product of objects from different monoids");
  FormalSum<HopfObject> out;
  if (const auto* p = std::get_if<SubmodularGP>(&x)) {
    out.add(product(*p, std::get<SubmodularGP>(y)), Rational(1));
  } else if (const auto* m = std::get_if<Matroid>(&x)) {
    out.add(direct_sum(*m, std::get<Matroid>(y)), Rational(1));
  } else if (const auto* q = std::get_if<Preposet>(&x)) {
    out.add(Preposet::disjoint_union(*q, std::get<Preposet>(y)), Rational(1));
  } else if (const auto* b = std::get_if<BuildingSet>(&x)) {
    const auto& c = std::get<BuildingSet>(y);
    if (!b->ground().disjoint(c.ground())) throw InputError("product of overlapping ground sets");
    LabelSet g = b->ground().unite(c.ground());
    Mask mb = g.mask_of(b->ground()), mc = g.mask_of(c.ground());
    std::vector<Mask> mem;
    for (Mask j : b->members()) mem.push_back(expand(j, mb));
    for (Mask j : c.members()) mem.push_back(expand(j, mc));
    out.add(BuildingSet(std::move(g), std::move(mem)), Rational(1));
  } else {
    for (const auto& [d, k] : wosp_product(std::get<WeightedOSP>(x), std::get<WeightedOSP>(y))) out.add(d, k);
  }
  return out;
}

/// Sum over all functions I -> [k] of the products f_i(x_i) along the
/// fibre decomposition; vanishing coproducts contribute nothing.
template <class R>
R convolve(const std::vector<std::function<R(const HopfObject&)>>& fs, const HopfObject& x) {
  if (fs.empty()) throw InputError("convolution needs at least one factor");
  const int n = ground_of(x).size();
  const int k = static_cast<int>(fs.size());
  R total(0);
  std::vector<int> f(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<Mask> parts(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < n; ++i) parts[static_cast<std::size_t>(f[static_cast<std::size_t>(i)])] |= 1U << i;
    if (auto pieces = iterated_coproduct(x, parts)) {
      R term(1);
      for (int i = 0; i < k; ++i) {
        term = term * fs[static_cast<std::size_t>(i)]((*pieces)[static_cast<std::size_t>(i)]);
        if (term == R(0)) break;
      }
      total = total + term;
    }
    int pos = 0;
    while (pos < n && ++f[static_cast<std::size_t>(pos)] == k) f[static_cast<std::size_t>(pos++)] = 0;
    if (pos == n) break;
  }
  return total;
}

/// A named scalar multiplicative function on Hopf objects.
struct Character {
  std::string name;
  std::function<Rational(const HopfObject&)> eval;
  Rational operator()(const HopfObject& x) const { return eval(x); }
};

inline Character one_character() {
  return {"one", [](const HopfObject&) { return Rational(1); }};
}

/// Counit: 1 on the empty ground set, 0 elsewhere.
inline Rational counit(const HopfObject& x) { return Rational(ground_of(x).empty() ? 1 : 0); }

/// f(t) with f(k) = zeta^{*k}(x), interpolated from k = 0..|I|.
inline UniPoly polynomial_invariant(const Character& zeta, const HopfObject& x) {
  const int n = ground_of(x).size();
  std::vector<Rational> xs, ys;
  for (int k = 0; k <= n; ++k) {
    xs.emplace_back(k);
    if (k == 0) {
      ys.push_back(counit(x));
      continue;
    }
    std::vector<std::function<Rational(const HopfObject&)>> fs(static_cast<std::size_t>(k), zeta.eval);
    ys.push_back(convolve<Rational>(fs, x));
  }
  return interpolate(xs, ys);
}

namespace detail {
template <class F>
void for_each_osp_value(const Character& zeta, const HopfObject& x, F&& f) {
  const LabelSet& g = ground_of(x);
  for (const auto& blocks : ordered_partitions(g.full())) {
    auto pieces = iterated_coproduct(x, blocks);
    if (!pieces) continue;
    Rational v(1);
    for (const auto& piece : *pieces) {
      v *= zeta(piece);
      if (v.is_zero()) break;
    }
    if (!v.is_zero()) f(blocks, v);
  }
}
}  // namespace detail

/// Sum over OSPs of the character product times M_{composition}.
inline QSymMonomial qsym_invariant(const Character& zeta, const HopfObject& x) {
  QSymMonomial out;
  detail::for_each_osp_value(zeta, x, [&](const std::vector<Mask>& blocks, const Rational& v) {
    std::vector<int> alpha;
    for (Mask b : blocks) alpha.push_back(popcount(b));
    out.add(std::move(alpha), v);
  });
  return out;
}

/// Sum over OSPs of the character product times the OSP itself.
inline FormalSum<OrderedSetPartition> osp_invariant(const Character& zeta, const HopfObject& x) {
  FormalSum<OrderedSetPartition> out;
  const LabelSet& g = ground_of(x);
  detail::for_each_osp_value(zeta, x, [&](const std::vector<Mask>& blocks, const Rational& v) {
    out.add(OrderedSetPartition::from_masks(g, blocks), v);
  });
  return out;
}

/// (-1)^{|I|} sum over faces Q of (-1)^{dim Q} Q.
inline FormalSum<SubmodularGP> antipode_face_sum(const SubmodularGP& p) {
  FormalSum<SubmodularGP> out;
  for (const auto& f : faces(p)) out.add(f.gp, Rational(minus_one_pow(p.n() + f.dimension)));
  return out;
}

/// x_slot^{|I|} y_slot^{z(I)} with slot 1 or 2.
inline ExponentPoly universal_norm(const SubmodularGP& p, int slot = 1) {
  if (slot != 1 && slot != 2) throw InputError("norm slot must be 1 or 2");
  Exponent4 e = ExponentTraits<Exponent4>::zero();
  const std::size_t base = slot == 1 ? 0 : 2;
  e[base] = Rational(p.n());
  e[base + 1] = p.z(p.full());
  return ExponentPoly::monomial(e);
}

/// sum over A of x1^{|A|} y1^{z(A)} x2^{|I-A|} y2^{z(I)-z(A)}.
inline ExponentPoly universal_tutte(const SubmodularGP& p) {
  ExponentPoly out;
  const Rational zi = p.z(p.full());
  for (Mask a = 0; a <= p.full(); ++a) {
    out.add({Rational(popcount(a)), p.z(a), Rational(p.n() - popcount(a)), zi - p.z(a)}, Rational(1));
    if (a == p.full()) break;
  }
  return out;
}

/// The same polynomial as a three-fold convolution N1 * tau * N2.
inline ExponentPoly universal_tutte_convolution(const SubmodularGP& p) {
  auto norm1 = [](const HopfObject& x) { return universal_norm(std::get<SubmodularGP>(x), 1); };
  auto tau = [](const HopfObject& x) { return ExponentPoly(counit(x)); };
  auto norm2 = [](const HopfObject& x) { return universal_norm(std::get<SubmodularGP>(x), 2); };
  return convolve<ExponentPoly>({norm1, tau, norm2}, HopfObject(p));
}

/// x2 = 1, y2 = x - 1, x1 = y - 1, y1 = (y - 1)^{-1}. Exponents must be integral
/// with a - b >= 0 on the y - 1 factor.
inline BiPoly matroid_tutte_specialization(const ExponentPoly& t) {
  const BiPoly xm1 = BiPoly::monomial({1, 0}) - BiPoly(1);
  const BiPoly ym1 = BiPoly::monomial({0, 1}) - BiPoly(1);
  BiPoly out;
  for (const auto& [e, c] : t) {
    for (const auto& v : e)
      if (!v.is_integer()) throw InputError("specialization needs integral exponents");
    auto a = *e[0].to_int64(), b = *e[1].to_int64(), d = *e[3].to_int64();
    if (a - b < 0 || d < 0) throw InputError("specialization leaves a negative power of (y-1) or (x-1)");
    out += BiPoly(c) * poly_pow(ym1, static_cast<int>(a - b)) * poly_pow(xm1, static_cast<int>(d));
  }
  return out;
}

}  // namespace gpval
