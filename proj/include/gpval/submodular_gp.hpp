#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gpval/error.hpp"
#include "gpval/label.hpp"
#include "gpval/linalg.hpp"
#include "gpval/osp.hpp"
#include "gpval/rational.hpp"

namespace gpval {

/// Bounded generalized permutahedron {x : x(I) = z(I), x(A) <= z(A)} given by
/// a submodular z on all subsets of the ground set, indexed by mask.
class SubmodularGP {
 public:
  SubmodularGP() : z_(1, Rational(0)) {}

  SubmodularGP(LabelSet ground, std::vector<Rational> z) : ground_(std::move(ground)), z_(std::move(z)) {
    check_ground_size(ground_);
    if (z_.size() != (std::size_t{1} << ground_.size())) throw InputError("z must be given on every subset");
    if (!z_[0].is_zero()) throw AxiomError("z(empty set) must be 0, got " + z_[0].str());
    check_submodular();
  }

  template <class F>
  static SubmodularGP from_function(const LabelSet& ground, F&& f) {
    std::vector<Rational> z(std::size_t{1} << ground.size());
    for (Mask a = 0; a < z.size(); ++a) z[a] = f(a);
    return SubmodularGP(ground, std::move(z));
  }

  /// The single point x (z is additive).
  static SubmodularGP point(const LabelSet& ground, const Point& x) {
    std::vector<Rational> z(std::size_t{1} << ground.size(), Rational(0));
    for (Mask a = 1; a < z.size(); ++a) {
      int i = std::countr_zero(a);
      z[a] = z[a & (a - 1)] + x[static_cast<std::size_t>(i)];
    }
    return unchecked(ground, std::move(z));
  }

  /// Skips the axiom check; for values derived from valid GPs.
  static SubmodularGP unchecked(LabelSet ground, std::vector<Rational> z) {
    SubmodularGP p;
    p.ground_ = std::move(ground);
    p.z_ = std::move(z);
    return p;
  }

  const LabelSet& ground() const { return ground_; }
  int n() const { return ground_.size(); }
  const Rational& z(Mask a) const { return z_[a]; }
  const std::vector<Rational>& values() const { return z_; }
  Rational z(const LabelSet& a) const { return z_[ground_.mask_of(a)]; }

  /// Greedy vertex for the order given as ground indices.
  Point vertex(const std::vector<int>& order) const {
    if (static_cast<int>(order.size()) != n()) throw InputError("order must list every element once");
    Point v(static_cast<std::size_t>(n()));
    Mask prefix = 0;
    for (int i : order) {
      if (prefix & (1U << i)) throw InputError("order repeats an element");
      Mask next = prefix | (1U << i);
      v[static_cast<std::size_t>(i)] = z_[next] - z_[prefix];
      prefix = next;
    }
    return v;
  }
  Point vertex(const std::vector<Label>& order) const {
    std::vector<int> idx;
    for (const auto& l : order) {
      int i = ground_.index_of(l);
      if (i < 0) throw InputError("order mentions a label outside the ground set");
      idx.push_back(i);
    }
    return vertex(idx);
  }

  /// Distinct vertices, sorted.
  std::vector<Point> vertices() const {
    std::set<Point> out;
    for (const auto& p : permutations(n())) out.insert(vertex(p));
    return {out.begin(), out.end()};
  }

  int dimension() const { return affine_rank(vertices()); }

  bool contains(const Point& x) const {
    if (static_cast<int>(x.size()) != n()) throw InputError("point dimension mismatch");
    std::vector<Rational> s(z_.size(), Rational(0));
    for (Mask a = 1; a < z_.size(); ++a) {
      s[a] = s[a & (a - 1)] + x[static_cast<std::size_t>(std::countr_zero(a))];
      if (s[a] > z_[a]) return false;
    }
    return s.back() == z_.back();
  }

  /// A is tight on all of P (x(A) = z(A) for every x in P).
  bool is_implicit_equality(Mask a) const { return z_.back() - z_[full() & ~a] == z_[a]; }

  /// x in the relative interior: in P and strict on every non-implicit inequality.
  bool relint_contains(const Point& x) const {
    if (!contains(x)) return false;
    for (Mask a = 1; a + 1 < z_.size(); ++a) {
      Rational xa(0);
      for (int i = 0; i < n(); ++i)
        if (a & (1U << i)) xa += x[static_cast<std::size_t>(i)];
      if (xa == z_[a] && !is_implicit_equality(a)) return false;
    }
    return true;
  }

  Mask full() const { return ground_.full(); }

  std::string str() const {
    std::string s = "GP{" + ground_.str() + "}[";
    for (std::size_t a = 0; a < z_.size(); ++a) {
      if (a) s += ' ';
      s += z_[a].str();
    }
    return s + "]";
  }

  /// Replaces labels via `rename` (must be injective); masks are re-sorted.
  SubmodularGP relabel(const std::map<Label, Label>& rename) const {
    std::vector<Label> nl;
    for (const auto& l : ground_) {
      auto it = rename.find(l);
      nl.push_back(it == rename.end() ? l : it->second);
    }
    LabelSet ng = LabelSet::strict(nl);
    std::vector<Rational> z(z_.size());
    for (Mask a = 0; a < z_.size(); ++a) {
      Mask b = 0;
      for (int i = 0; i < n(); ++i)
        if (a & (1U << i)) b |= 1U << ng.index_of(nl[static_cast<std::size_t>(i)]);
      z[b] = z_[a];
    }
    return unchecked(std::move(ng), std::move(z));
  }

  friend bool operator==(const SubmodularGP&, const SubmodularGP&) = default;
  friend auto operator<=>(const SubmodularGP&, const SubmodularGP&) = default;

 private:
  void check_submodular() const {
    // Local exchange form: z(A+i) + z(A+j) >= z(A+i+j) + z(A) for i, j not in A.
    for (Mask a = 0; a < z_.size(); ++a) {
      for (int i = 0; i < n(); ++i) {
        if (a & (1U << i)) continue;
        for (int j = i + 1; j < n(); ++j) {
          if (a & (1U << j)) continue;
          Mask ai = a | (1U << i), aj = a | (1U << j), aij = ai | aj;
          if (z_[ai] + z_[aj] < z_[aij] + z_[a]) {
            throw AxiomError("submodularity fails for A={" + ground_.subset(ai).str() + "}, B={" +
                             ground_.subset(aj).str() + "}: z(A)+z(B)=" + (z_[ai] + z_[aj]).str() +
                             " < z(A∪B)+z(A∩B)=" + (z_[aij] + z_[a]).str());
          }
        }
      }
    }
  }

  LabelSet ground_;
  std::vector<Rational> z_;
};

/// P|_S on S and P/_S on I - S.
inline std::pair<SubmodularGP, SubmodularGP> restrict_contract(const SubmodularGP& p, Mask s) {
  const Mask t = p.full() & ~s;
  const int ns = popcount(s), nt = popcount(t);
  std::vector<Rational> zs(std::size_t{1} << ns), zt(std::size_t{1} << nt);
  for (Mask a = 0; a < zs.size(); ++a) zs[a] = p.z(expand(a, s));
  for (Mask b = 0; b < zt.size(); ++b) zt[b] = p.z(s | expand(b, t)) - p.z(s);
  return {SubmodularGP::unchecked(p.ground().subset(s), std::move(zs)),
          SubmodularGP::unchecked(p.ground().subset(t), std::move(zt))};
}
inline std::pair<SubmodularGP, SubmodularGP> restrict_contract(const SubmodularGP& p, const LabelSet& s) {
  return restrict_contract(p, p.ground().mask_of(s));
}

inline SubmodularGP product(const SubmodularGP& p, const SubmodularGP& q) {
  if (!p.ground().disjoint(q.ground())) throw InputError("product of overlapping ground sets");
  LabelSet g = p.ground().unite(q.ground());
  Mask mp = g.mask_of(p.ground()), mq = g.mask_of(q.ground());
  std::vector<Rational> z(std::size_t{1} << g.size());
  for (Mask a = 0; a < z.size(); ++a) z[a] = p.z(compress(a, mp)) + q.z(compress(a, mq));
  return SubmodularGP::unchecked(std::move(g), std::move(z));
}

/// Face of a generalized permutahedron: the subset maximizing a chain of
/// functionals along an OSP. `gp` is the face itself as a GP on the same ground.
struct GPFace {
  SubmodularGP gp;
  OrderedSetPartition osp;
  std::vector<Point> vertices;
  int dimension = 0;
  std::vector<Mask> tight_sets;
};

/// z of the face maximizing along F: sum over blocks of the successive minors.
inline SubmodularGP face_gp(const SubmodularGP& p, const std::vector<Mask>& blocks) {
  std::vector<Rational> z(std::size_t{1} << p.n());
  for (Mask a = 0; a < z.size(); ++a) {
    Rational s(0);
    Mask prefix = 0;
    for (Mask b : blocks) {
      s += p.z(prefix | (a & b)) - p.z(prefix);
      prefix |= b;
    }
    z[a] = s;
  }
  return SubmodularGP::unchecked(p.ground(), std::move(z));
}

inline GPFace face(const SubmodularGP& p, const OrderedSetPartition& f) {
  if (f.ground() != p.ground()) throw InputError("face: OSP ground differs from the GP ground");
  GPFace out{face_gp(p, f.masks(p.ground())), f, {}, 0, {}};
  out.vertices = out.gp.vertices();
  out.dimension = affine_rank(out.vertices);
  for (Mask a = 0; a <= p.full(); ++a) {
    // tight on the face: the minimum of x(A) over the face equals z(A)
    if (out.gp.z(p.full()) - out.gp.z(p.full() & ~a) == p.z(a)) out.tight_sets.push_back(a);
    if (a == p.full()) break;
  }
  return out;
}

/// Distinct nonempty faces, deduplicated over all OSPs.
inline std::vector<GPFace> faces(const SubmodularGP& p) {
  std::map<SubmodularGP, OrderedSetPartition> seen;
  for (const auto& blocks : ordered_partitions(p.full())) {
    SubmodularGP g = face_gp(p, blocks);
    seen.try_emplace(std::move(g), OrderedSetPartition::from_masks(p.ground(), blocks));
  }
  std::vector<GPFace> out;
  out.reserve(seen.size());
  for (const auto& [g, f] : seen) out.push_back(face(p, f));
  return out;
}

inline bool membership(const SubmodularGP& p, const Point& x) { return p.contains(x); }

}  // namespace gpval
