#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gpval/error.hpp"
#include "gpval/label.hpp"
#include "gpval/submodular_gp.hpp"

namespace gpval {

/// Matroid given by its bases (masks over the ground set).
class Matroid {
 public:
  /// The matroid on the empty ground set.
  Matroid() : bases_{0}, rank_table_{0} {}

  Matroid(LabelSet ground, std::vector<Mask> bases) : ground_(std::move(ground)), bases_(std::move(bases)) {
    check_ground_size(ground_);
    normalize();
    check_axioms();
    build_rank_table();
  }
  Matroid(LabelSet ground, const std::vector<LabelSet>& bases) : ground_(std::move(ground)) {
    check_ground_size(ground_);
    for (const auto& b : bases) bases_.push_back(ground_.mask_of(b));
    normalize();
    check_axioms();
    build_rank_table();
  }

  /// U_{r,n} on {1..n}.
  static Matroid uniform(int r, int n) { return uniform(r, LabelSet::range(n)); }
  static Matroid uniform(int r, const LabelSet& ground) {
    if (r < 0 || r > ground.size()) throw InputError("uniform matroid rank out of range");
    std::vector<Mask> b;
    for_each_subset(ground.full(), [&](Mask m) {
      if (popcount(m) == r) b.push_back(m);
    });
    return Matroid(ground, std::move(b));
  }

  const LabelSet& ground() const { return ground_; }
  int n() const { return ground_.size(); }
  Mask full() const { return ground_.full(); }
  const std::vector<Mask>& bases() const { return bases_; }
  int rank() const { return rank_table_.back(); }
  int rank(Mask a) const { return rank_table_[a]; }

  bool is_loop(int e) const { return rank(1U << e) == 0; }
  bool is_coloop(int e) const {
    return std::all_of(bases_.begin(), bases_.end(), [&](Mask b) { return (b >> e) & 1U; });
  }
  bool has_loop() const {
    for (int e = 0; e < n(); ++e)
      if (is_loop(e)) return true;
    return false;
  }
  bool is_flat(Mask f) const {
    for (int e = 0; e < n(); ++e)
      if (!(f & (1U << e)) && rank(f | (1U << e)) == rank(f)) return false;
    return true;
  }
  Mask closure(Mask a) const {
    Mask c = a;
    for (int e = 0; e < n(); ++e)
      if (rank(a | (1U << e)) == rank(a)) c |= 1U << e;
    return c;
  }
  /// All flats, ordered by rank then by mask.
  std::vector<Mask> flats() const {
    std::vector<Mask> out;
    for (Mask f = 0; f <= full(); ++f) {
      if (is_flat(f)) out.push_back(f);
      if (f == full()) break;
    }
    std::stable_sort(out.begin(), out.end(), [&](Mask a, Mask b) { return rank(a) < rank(b); });
    return out;
  }

  /// M|_S on S.
  Matroid restrict(Mask s) const {
    const int rs = rank(s);
    std::vector<Mask> b;
    for (Mask x : bases_)
      if (popcount(x & s) == rs) b.push_back(compress(x & s, s));
    return derived(ground_.subset(s), std::move(b));
  }
  /// M/_S on I - S.
  Matroid contract(Mask s) const {
    const int rs = rank(s);
    const Mask t = full() & ~s;
    std::vector<Mask> b;
    for (Mask x : bases_)
      if (popcount(x & s) == rs) b.push_back(compress(x & t, t));
    return derived(ground_.subset(t), std::move(b));
  }
  Matroid restrict(const LabelSet& s) const { return restrict(ground_.mask_of(s)); }
  Matroid contract(const LabelSet& s) const { return contract(ground_.mask_of(s)); }
  Matroid deletion(int e) const { return restrict(full() & ~(1U << e)); }
  Matroid contraction(int e) const { return contract(1U << e); }

  /// (M|_B)/_A for A ⊆ B, on B - A.
  Matroid minor(Mask a, Mask b) const {
    if (!is_subset(a, b)) throw InputError("minor needs A ⊆ B");
    Matroid mb = restrict(b);
    return mb.contract(compress(a, b));
  }

  Matroid relabel(const std::map<Label, Label>& rename) const {
    std::vector<Label> nl;
    for (const auto& l : ground_) {
      auto it = rename.find(l);
      nl.push_back(it == rename.end() ? l : it->second);
    }
    LabelSet ng = LabelSet::strict(nl);
    std::vector<Mask> nb;
    for (Mask x : bases_) {
      Mask y = 0;
      for (int i = 0; i < n(); ++i)
        if (x & (1U << i)) y |= 1U << ng.index_of(nl[static_cast<std::size_t>(i)]);
      nb.push_back(y);
    }
    return derived(std::move(ng), std::move(nb));
  }

  std::string str() const {
    std::string s = "M{" + ground_.str() + "}[";
    for (std::size_t i = 0; i < bases_.size(); ++i) {
      if (i) s += ' ';
      s += ground_.subset(bases_[i]).str();
      if (bases_[i] == 0) s += "{}";
    }
    return s + "]";
  }

  friend bool operator==(const Matroid& a, const Matroid& b) { return a.ground_ == b.ground_ && a.bases_ == b.bases_; }
  friend auto operator<=>(const Matroid& a, const Matroid& b) {
    if (auto c = a.ground_ <=> b.ground_; c != 0) return c;
    return a.bases_ <=> b.bases_;
  }

 private:
  static Matroid derived(LabelSet ground, std::vector<Mask> bases) {
    Matroid m;
    m.ground_ = std::move(ground);
    m.bases_ = std::move(bases);
    m.normalize();
    m.build_rank_table();
    return m;
  }

  void normalize() {
    for (Mask b : bases_)
      if (!is_subset(b, full())) throw InputError("basis mentions an element outside the ground set");
    std::sort(bases_.begin(), bases_.end());
    bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  }

  void check_axioms() const {
    if (bases_.empty()) throw AxiomError("a matroid needs at least one basis");
    const int r = popcount(bases_.front());
    for (Mask b : bases_)
      if (popcount(b) != r)
        throw AxiomError("bases {" + ground_.subset(bases_.front()).str() + "} and {" + ground_.subset(b).str() +
                         "} have different sizes");
    auto is_basis = [&](Mask m) { return std::binary_search(bases_.begin(), bases_.end(), m); };
    for (Mask b1 : bases_) {
      for (Mask b2 : bases_) {
        Mask d1 = b1 & ~b2;
        for (int x = 0; x < n(); ++x) {
          if (!(d1 & (1U << x))) continue;
          bool ok = false;
          Mask d2 = b2 & ~b1;
          for (int y = 0; y < n() && !ok; ++y)
            if ((d2 & (1U << y)) && is_basis((b1 & ~(1U << x)) | (1U << y))) ok = true;
          if (!ok)
            throw AxiomError("basis exchange fails for B1={" + ground_.subset(b1).str() + "}, B2={" +
                             ground_.subset(b2).str() + "}, removing " + ground_[x].str());
        }
      }
    }
  }

  void build_rank_table() {
    rank_table_.assign(std::size_t{1} << n(), 0);
    for (Mask a = 0; a < rank_table_.size(); ++a) {
      int r = 0;
      for (Mask b : bases_) r = std::max(r, popcount(a & b));
      rank_table_[a] = r;
    }
  }

  LabelSet ground_;
  std::vector<Mask> bases_;
  std::vector<int> rank_table_;
};

inline SubmodularGP to_gp(const Matroid& m) {
  std::vector<Rational> z(std::size_t{1} << m.n());
  for (Mask a = 0; a < z.size(); ++a) z[a] = Rational(m.rank(a));
  return SubmodularGP::unchecked(m.ground(), std::move(z));
}

inline std::pair<Matroid, Matroid> minors(const Matroid& m, Mask s) { return {m.restrict(s), m.contract(s)}; }

inline Matroid direct_sum(const Matroid& a, const Matroid& b) {
  if (!a.ground().disjoint(b.ground())) throw InputError("direct sum of overlapping ground sets");
  LabelSet g = a.ground().unite(b.ground());
  Mask ma = g.mask_of(a.ground()), mb = g.mask_of(b.ground());
  std::vector<Mask> bases;
  for (Mask x : a.bases())
    for (Mask y : b.bases()) bases.push_back(expand(x, ma) | expand(y, mb));
  return Matroid(std::move(g), std::move(bases));
}

/// Every matroid on {1..n} (as distinct basis families).
inline std::vector<Matroid> all_matroids(int n) {
  std::vector<Matroid> out;
  LabelSet g = LabelSet::range(n);
  for (int r = 0; r <= n; ++r) {
    std::vector<Mask> ksets;
    for_each_subset(g.full(), [&](Mask m) {
      if (popcount(m) == r) ksets.push_back(m);
    });
    std::sort(ksets.begin(), ksets.end());
    const std::size_t k = ksets.size();
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << k); ++pick) {
      std::vector<Mask> b;
      for (std::size_t i = 0; i < k; ++i)
        if (pick & (std::uint64_t{1} << i)) b.push_back(ksets[i]);
      try {
        out.emplace_back(g, std::move(b));
      } catch (const AxiomError&) {
      }
    }
  }
  return out;
}

/// Sequence of matroids on one ground set with strictly increasing ranks.
class FlagMatroid {
 public:
  explicit FlagMatroid(std::vector<Matroid> constituents) : parts_(std::move(constituents)) {
    if (parts_.empty()) throw InputError("flag matroid needs at least one constituent");
    for (std::size_t i = 1; i < parts_.size(); ++i) {
      if (parts_[i].ground() != parts_[0].ground()) throw InputError("flag constituents need a common ground set");
      if (parts_[i].rank() <= parts_[i - 1].rank())
        throw InputError("flag constituent ranks must strictly increase");
    }
  }
  const std::vector<Matroid>& constituents() const { return parts_; }
  const LabelSet& ground() const { return parts_.front().ground(); }

 private:
  std::vector<Matroid> parts_;
};

/// Minkowski sum of the constituent polytopes: z = sum of ranks.
inline SubmodularGP flag_gp(const FlagMatroid& fm) {
  const auto& ps = fm.constituents();
  std::vector<Rational> z(std::size_t{1} << ps.front().n(), Rational(0));
  for (const auto& m : ps)
    for (Mask a = 0; a < z.size(); ++a) z[a] += Rational(m.rank(a));
  return SubmodularGP::unchecked(fm.ground(), std::move(z));
}

/// For every linear order, the chains of constituent bases have a unique
/// Gale-minimal element.
inline bool gale_check(const FlagMatroid& fm) {
  const auto& ps = fm.constituents();
  std::vector<std::vector<Mask>> flags;
  std::vector<Mask> cur;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == ps.size()) {
      flags.push_back(cur);
      return;
    }
    for (Mask b : ps[i].bases()) {
      if (i > 0 && !is_subset(cur.back(), b)) continue;
      cur.push_back(b);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  if (flags.empty()) return false;
  const int n = fm.ground().size();
  for (const auto& order : permutations(n)) {
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;
    auto sorted_positions = [&](Mask m) {
      std::vector<int> v;
      for (int e = 0; e < n; ++e)
        if (m & (1U << e)) v.push_back(pos[static_cast<std::size_t>(e)]);
      std::sort(v.begin(), v.end());
      return v;
    };
    auto gale_leq = [&](Mask a, Mask b) {
      auto va = sorted_positions(a), vb = sorted_positions(b);
      for (std::size_t k = 0; k < va.size(); ++k)
        if (va[k] > vb[k]) return false;
      return true;
    };
    auto flag_leq = [&](const std::vector<Mask>& f, const std::vector<Mask>& g) {
      for (std::size_t k = 0; k < f.size(); ++k)
        if (!gale_leq(f[k], g[k])) return false;
      return true;
    };
    int minima = 0;
    for (const auto& f : flags) {
      bool below_all = true;
      for (const auto& g : flags)
        if (!flag_leq(f, g)) {
          below_all = false;
          break;
        }
      if (below_all) ++minima;
    }
    if (minima != 1) return false;
  }
  return true;
}

}  // namespace gpval
