#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gpval/error.hpp"
#include "gpval/label.hpp"
#include "gpval/polynomial.hpp"
#include "gpval/submodular_gp.hpp"

namespace gpval {

/// Multiset of nonempty subsets closed under unions of intersecting members;
/// only singletons may repeat.
class BuildingSet {
 public:
  BuildingSet() = default;
  BuildingSet(LabelSet ground, std::vector<Mask> members) : ground_(std::move(ground)), members_(std::move(members)) {
    check_ground_size(ground_);
    std::sort(members_.begin(), members_.end());
    check_axioms();
  }
  BuildingSet(LabelSet ground, const std::vector<LabelSet>& members) : ground_(std::move(ground)) {
    check_ground_size(ground_);
    for (const auto& m : members) members_.push_back(ground_.mask_of(m));
    std::sort(members_.begin(), members_.end());
    check_axioms();
  }

  /// Vertex sets of connected induced subgraphs.
  static BuildingSet graphical(const LabelSet& vertices, const std::vector<std::pair<Label, Label>>& edges) {
    check_ground_size(vertices);
    std::vector<Mask> adj(static_cast<std::size_t>(vertices.size()), 0);
    for (const auto& [a, b] : edges) {
      int i = vertices.index_of(a), j = vertices.index_of(b);
      if (i < 0 || j < 0) throw InputError("edge mentions a vertex outside the vertex set");
      if (i == j) continue;
      adj[static_cast<std::size_t>(i)] |= 1U << j;
      adj[static_cast<std::size_t>(j)] |= 1U << i;
    }
    std::vector<Mask> members;
    for (Mask s = 1; s <= vertices.full() && s != 0; ++s) {
      Mask reach = s & (~s + 1);
      Mask frontier = reach;
      while (frontier) {
        Mask next = 0;
        for (int i = 0; i < vertices.size(); ++i)
          if (frontier & (1U << i)) next |= adj[static_cast<std::size_t>(i)] & s;
        frontier = next & ~reach;
        reach |= next;
      }
      if (reach == s) members.push_back(s);
      if (s == vertices.full()) break;
    }
    return BuildingSet(vertices, std::move(members));
  }

  /// All nonempty subsets (nestohedron = permutahedron).
  static BuildingSet complete(const LabelSet& ground) {
    std::vector<Mask> m;
    for (Mask s = 1; s <= ground.full() && s != 0; ++s) {
      m.push_back(s);
      if (s == ground.full()) break;
    }
    return BuildingSet(ground, std::move(m));
  }
  /// Singletons plus the whole set (nestohedron = translated simplex).
  static BuildingSet simplex(const LabelSet& ground) {
    std::vector<Mask> m;
    for (int i = 0; i < ground.size(); ++i) m.push_back(1U << i);
    if (ground.size() > 1) m.push_back(ground.full());
    return BuildingSet(ground, std::move(m));
  }

  /// Closure of `generators` under unions of intersecting sets, with every
  /// singleton added once.
  static BuildingSet closure(const LabelSet& ground, std::vector<Mask> generators) {
    for (int i = 0; i < ground.size(); ++i) generators.push_back(1U << i);
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    bool grew = true;
    while (grew) {
      std::vector<Mask> extra;
      for (Mask a : generators)
        for (Mask b : generators)
          if ((a & b) && !std::binary_search(generators.begin(), generators.end(), a | b)) extra.push_back(a | b);
      grew = !extra.empty();
      generators.insert(generators.end(), extra.begin(), extra.end());
      std::sort(generators.begin(), generators.end());
      generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    }
    return BuildingSet(ground, std::move(generators));
  }

  const LabelSet& ground() const { return ground_; }
  int n() const { return ground_.size(); }
  Mask full() const { return ground_.full(); }
  const std::vector<Mask>& members() const { return members_; }
  bool contains(Mask m) const { return std::binary_search(members_.begin(), members_.end(), m); }
  Mask covered() const {
    Mask c = 0;
    for (Mask m : members_) c |= m;
    return c;
  }
  bool is_connected() const { return n() > 0 && contains(full()); }

  /// Maximal members, with uncovered elements as singleton parts.
  std::vector<Mask> components() const {
    std::vector<Mask> out;
    for (Mask m : members_) {
      bool maximal = true;
      for (Mask o : members_)
        if (o != m && is_subset(m, o)) maximal = false;
      if (maximal && (out.empty() || out.back() != m)) out.push_back(m);
    }
    Mask rest = full() & ~covered();
    for (int i = 0; i < n(); ++i)
      if (rest & (1U << i)) out.push_back(1U << i);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Members inside S, on S.
  BuildingSet restrict(Mask s) const {
    std::vector<Mask> m;
    for (Mask x : members_)
      if (is_subset(x, s)) m.push_back(compress(x, s));
    return derived(ground_.subset(s), std::move(m));
  }
  /// Traces J ∩ (I - S) of members meeting I - S, as a set, on I - S.
  BuildingSet contract(Mask s) const {
    const Mask t = full() & ~s;
    std::vector<Mask> m;
    for (Mask x : members_)
      if (x & t) m.push_back(compress(x & t, t));
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    return derived(ground_.subset(t), std::move(m));
  }
  BuildingSet restrict(const LabelSet& s) const { return restrict(ground_.mask_of(s)); }
  BuildingSet contract(const LabelSet& s) const { return contract(ground_.mask_of(s)); }

  std::string str() const {
    std::string s = "B{" + ground_.str() + "}[";
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (i) s += ' ';
      s += ground_.subset(members_[i]).str();
    }
    return s + "]";
  }

  friend bool operator==(const BuildingSet&, const BuildingSet&) = default;
  friend auto operator<=>(const BuildingSet&, const BuildingSet&) = default;

 private:
  static BuildingSet derived(LabelSet ground, std::vector<Mask> members) {
    BuildingSet b;
    b.ground_ = std::move(ground);
    b.members_ = std::move(members);
    std::sort(b.members_.begin(), b.members_.end());
    try {
      b.check_axioms();
    } catch (const AxiomError& e) {
      throw InternalError(std::string("building-set minor failed validation: ") + e.what());
    }
    return b;
  }

  void check_axioms() const {
    for (std::size_t i = 0; i < members_.size(); ++i) {
      Mask a = members_[i];
      if (a == 0) throw AxiomError("building set member is empty");
      if (!is_subset(a, full())) throw InputError("building set member outside the ground set");
      if (i > 0 && members_[i - 1] == a && popcount(a) > 1)
        throw AxiomError("non-singleton member {" + ground_.subset(a).str() + "} repeats");
    }
    for (Mask a : members_)
      for (Mask b : members_)
        if ((a & b) && !contains(a | b))
          throw AxiomError("union axiom fails: {" + ground_.subset(a).str() + "} and {" + ground_.subset(b).str() +
                           "} intersect but their union is missing");
  }

  LabelSet ground_;
  std::vector<Mask> members_;
};

inline std::pair<BuildingSet, BuildingSet> bs_minors(const BuildingSet& b, Mask s) {
  return {b.restrict(s), b.contract(s)};
}

/// Minkowski sum of the member simplices: z(A) = #{J : J ∩ A nonempty}.
inline SubmodularGP nestohedron(const BuildingSet& b) {
  if (b.covered() != b.full()) {
    Mask miss = b.full() & ~b.covered();
    throw InputError("nestohedron: element " + b.ground()[std::countr_zero(miss)].str() +
                     " is not covered by any member");
  }
  std::vector<Rational> z(std::size_t{1} << b.n(), Rational(0));
  for (Mask a = 1; a < z.size(); ++a) {
    long long c = 0;
    for (Mask j : b.members())
      if (j & a) ++c;
    z[a] = Rational(c);
  }
  return SubmodularGP::unchecked(b.ground(), std::move(z));
}

enum class FPolyMethod { recurrence, direct };

/// Face-count polynomial sum_F t^{dim F} of the nestohedron.
inline UniPoly f_polynomial(const BuildingSet& b, FPolyMethod method = FPolyMethod::recurrence) {
  if (method == FPolyMethod::direct) {
    UniPoly f;
    for (const auto& face : faces(nestohedron(b))) f.add(face.dimension, Rational(1));
    return f;
  }
  std::map<Mask, UniPoly> memo;
  auto rec = [&](auto&& self, Mask s) -> UniPoly {
    if (popcount(s) <= 1) return UniPoly(1);
    if (auto it = memo.find(s); it != memo.end()) return it->second;
    UniPoly f;
    if (b.contains(s)) {
      const int ns = popcount(s);
      for_each_subset(s, [&](Mask sub) {
        if (sub == s) return;
        f += UniPoly::monomial(ns - popcount(sub) - 1) * self(self, sub);
      });
    } else {
      // components of B|_s: maximal members inside s, uncovered elements as singletons
      f = UniPoly(1);
      Mask covered = 0;
      std::vector<Mask> inside;
      for (Mask m : b.members())
        if (is_subset(m, s)) inside.push_back(m);
      for (Mask m : inside) {
        bool maximal = true;
        for (Mask o : inside)
          if (o != m && is_subset(m, o)) maximal = false;
        if (maximal && !(covered & m)) {
          f *= self(self, m);
          covered |= m;
        }
      }
    }
    memo.emplace(s, f);
    return f;
  };
  return rec(rec, b.full());
}

}  // namespace gpval
