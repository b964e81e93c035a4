#pragma once

#include <type_traits>
#include <variant>
#include <vector>

#include "gpval/error.hpp"
#include "gpval/formal_sum.hpp"
#include "gpval/linalg.hpp"
#include "gpval/osp.hpp"
#include "gpval/preposet.hpp"
#include "gpval/submodular_gp.hpp"

namespace gpval {

/// Tangent cone of P at the face Q, as a translated preposet cone.
/// j's down-set is the intersection of the tight sets of Q that contain j.
inline WeightedPreposet tangent_cone(const SubmodularGP& p, const GPFace& q) {
  if (q.gp.ground() != p.ground() || face_gp(p, q.osp.masks(p.ground())) != q.gp)
    throw InputError("tangent_cone: argument is not a face of the polytope");
  std::vector<Mask> down(static_cast<std::size_t>(p.n()), p.full());
  for (Mask a : q.tight_sets)
    for (int j = 0; j < p.n(); ++j)
      if (a & (1U << j)) down[static_cast<std::size_t>(j)] &= a;
  Preposet pre = Preposet::from_down_sets(p.ground(), std::move(down));
  return WeightedPreposet::from_point(std::move(pre), barycenter(q.vertices));
}

/// Signed sum of tangent cones over all nonempty faces.
inline FormalSum<WeightedPreposet> brianchon_gram(const SubmodularGP& p) {
  FormalSum<WeightedPreposet> out;
  for (const auto& f : faces(p)) out.add(tangent_cone(p, f), Rational(minus_one_pow(f.dimension)));
  return out;
}

namespace detail {
/// Prelinear extensions of (w, q) with merged weights, each with its straightening sign.
template <class F>
void for_each_weighted_extension(const WeightedPreposet& c, F&& f) {
  const Preposet& q = c.preposet();
  for (const auto& ext : prelinear_extension_masks(q)) {
    std::vector<Rational> w;
    w.reserve(ext.blocks.size());
    for (Mask b : ext.blocks) w.push_back(c.weight_of(b));
    f(WeightedOSP(OrderedSetPartition::from_masks(q.ground(), ext.blocks), std::move(w)), ext.sign);
  }
}
}  // namespace detail

/// Indicator of cone(w,q) in the basis of translated OSP cones.
inline FormalSum<WeightedOSP> straighten(const WeightedPreposet& c) {
  FormalSum<WeightedOSP> out;
  detail::for_each_weighted_extension(c, [&](WeightedOSP d, int sign) { out.add(std::move(d), Rational(sign)); });
  return out;
}
inline FormalSum<WeightedOSP> straighten(const FormalSum<WeightedPreposet>& s) {
  return s.map_linear<WeightedOSP>([](const WeightedPreposet& c) { return straighten(c); });
}

/// Either a bounded GP or a translated preposet cone.
using GPElement = std::variant<SubmodularGP, WeightedPreposet>;

inline const LabelSet& ground_of(const GPElement& x) {
  return std::visit([](const auto& v) -> const LabelSet& { return v.ground(); }, x);
}

/// Cones: (-1)^{|q|} times the unsigned extension sum.
inline FormalSum<WeightedOSP> canonical_form(const WeightedPreposet& c) {
  FormalSum<WeightedOSP> out;
  const Rational sign(minus_one_pow(c.preposet().class_count()));
  detail::for_each_weighted_extension(c, [&](WeightedOSP d, int) { out.add(std::move(d), sign); });
  return out;
}

/// Polytopes: sum over faces F of (-1)^{dim F} (-1)^{|q_F|} times the
/// unsigned extension sum of the tangent cone at F.
inline FormalSum<WeightedOSP> canonical_form(const SubmodularGP& p) {
  FormalSum<WeightedOSP> out;
  for (const auto& f : faces(p)) {
    WeightedPreposet c = tangent_cone(p, f);
    const Rational sign(minus_one_pow(f.dimension + c.preposet().class_count()));
    detail::for_each_weighted_extension(c, [&](WeightedOSP d, int) { out.add(std::move(d), sign); });
  }
  return out;
}

inline FormalSum<WeightedOSP> canonical_form(const GPElement& x) {
  return std::visit([](const auto& v) { return canonical_form(v); }, x);
}

template <class T>
FormalSum<WeightedOSP> canonical_form(const FormalSum<T>& x) {
  return x.template map_linear<WeightedOSP>([](const T& v) { return canonical_form(v); });
}

/// Flips each coefficient by (-1)^{#blocks}, converting between the
/// canonical form and the indicator expansion (an involution).
inline FormalSum<WeightedOSP> block_sign_twist(const FormalSum<WeightedOSP>& s) {
  FormalSum<WeightedOSP> out;
  for (const auto& [d, c] : s) out.add(d, c * Rational(minus_one_pow(d.size())));
  return out;
}

/// Signed sum of translated OSP-cone indicators equal to the indicator of x.
template <class T>
FormalSum<WeightedOSP> indicator_expansion(const FormalSum<T>& x) {
  return block_sign_twist(canonical_form(x));
}
inline FormalSum<WeightedOSP> indicator_expansion(const SubmodularGP& p) {
  return block_sign_twist(canonical_form(p));
}

namespace detail {
template <class T>
void require_common_ground(const FormalSum<T>& s, const LabelSet*& ground) {
  for (const auto& [x, c] : s) {
    const LabelSet& g = [&]() -> const LabelSet& {
      if constexpr (std::is_same_v<T, GPElement>)
        return ground_of(x);
      else
        return x.ground();
    }();
    if (ground == nullptr)
      ground = &g;
    else if (*ground != g)
      throw InputError("indicator comparison across different ground sets: {" + ground->str() + "} vs {" +
                       g.str() + "}");
  }
}
}  // namespace detail

/// Whether the two signed sums have the same indicator function.
template <class T>
bool indicator_equal(const FormalSum<T>& a, const FormalSum<T>& b) {
  const LabelSet* ground = nullptr;
  detail::require_common_ground(a, ground);
  detail::require_common_ground(b, ground);
  return canonical_form(a - b).is_zero();
}

/// Pointwise value of a signed sum of preposet-cone indicators.
inline Rational evaluate_indicators(const FormalSum<WeightedPreposet>& s, const Point& x) {
  Rational r(0);
  for (const auto& [c, k] : s)
    if (weighted_cone_membership(c, x)) r += k;
  return r;
}

/// Pointwise value of a signed sum of polytope indicators.
inline Rational evaluate_indicators(const FormalSum<SubmodularGP>& s, const Point& x) {
  Rational r(0);
  for (const auto& [p, k] : s)
    if (p.contains(x)) r += k;
  return r;
}

}  // namespace gpval
