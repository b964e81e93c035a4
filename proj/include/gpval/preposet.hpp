#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gpval/error.hpp"
#include "gpval/label.hpp"
#include "gpval/osp.hpp"
#include "gpval/rational.hpp"

namespace gpval {

/// Reflexive, transitive relation on a finite label set. Stored as the
/// down-set mask of every element (j <= i iff bit j of down(i)).
class Preposet {
 public:
  Preposet() = default;

  /// Relations (a, b) mean a <= b; the transitive closure is taken.
  Preposet(LabelSet ground, const std::vector<std::pair<Label, Label>>& relations) : ground_(std::move(ground)) {
    check_ground_size(ground_);
    down_.assign(static_cast<std::size_t>(ground_.size()), 0);
    for (int i = 0; i < ground_.size(); ++i) down_[idx(i)] = 1U << i;
    for (const auto& [a, b] : relations) {
      int ia = ground_.index_of(a), ib = ground_.index_of(b);
      if (ia < 0 || ib < 0) throw InputError("relation mentions a label outside the ground set");
      down_[idx(ib)] |= 1U << ia;
    }
    close();
  }

  /// Builds from raw down-set masks (closure is taken).
  static Preposet from_down_sets(LabelSet ground, std::vector<Mask> down) {
    Preposet q;
    q.ground_ = std::move(ground);
    q.down_ = std::move(down);
    for (int i = 0; i < q.ground_.size(); ++i) q.down_[idx(i)] |= 1U << i;
    q.close();
    return q;
  }

  static Preposet antichain(const LabelSet& ground) { return from_down_sets(ground, std::vector<Mask>(static_cast<std::size_t>(ground.size()), 0)); }

  /// Total preposet whose classes are the blocks of f, in order.
  static Preposet from_osp(const OrderedSetPartition& f) {
    const LabelSet& ground = f.ground();
    std::vector<Mask> down(static_cast<std::size_t>(ground.size()), 0);
    Mask prefix = 0;
    for (const auto& b : f.blocks()) {
      Mask bm = ground.mask_of(b);
      prefix |= bm;
      for (int i = 0; i < ground.size(); ++i)
        if (bm & (1U << i)) down[idx(i)] = prefix;
    }
    return from_down_sets(ground, std::move(down));
  }

  const LabelSet& ground() const { return ground_; }
  int n() const { return ground_.size(); }
  Mask down(int i) const { return down_[idx(i)]; }
  Mask up(int i) const {
    Mask m = 0;
    for (int j = 0; j < n(); ++j)
      if (down_[idx(j)] & (1U << i)) m |= 1U << j;
    return m;
  }
  /// i <= j
  bool leq(int i, int j) const { return (down_[idx(j)] >> i) & 1U; }
  bool less(int i, int j) const { return leq(i, j) && !leq(j, i); }

  /// Equivalence classes as masks, ordered by their lowest element.
  std::vector<Mask> classes() const {
    std::vector<Mask> out;
    Mask seen = 0;
    for (int i = 0; i < n(); ++i) {
      if (seen & (1U << i)) continue;
      Mask c = down_[idx(i)] & up(i);
      out.push_back(c);
      seen |= c;
    }
    return out;
  }
  int class_count() const { return static_cast<int>(classes().size()); }
  int class_of(int i) const {
    auto cs = classes();
    for (std::size_t k = 0; k < cs.size(); ++k)
      if (cs[k] & (1U << i)) return static_cast<int>(k);
    throw InternalError("element without a class");
  }

  bool is_poset() const { return class_count() == n(); }
  bool is_preantichain() const {
    for (int i = 0; i < n(); ++i)
      for (int j = 0; j < n(); ++j)
        if (less(i, j)) return false;
    return true;
  }
  bool is_total() const {
    for (int i = 0; i < n(); ++i)
      for (int j = 0; j < n(); ++j)
        if (!leq(i, j) && !leq(j, i)) return false;
    return true;
  }
  bool is_antichain() const { return is_poset() && is_preantichain(); }

  bool is_lower_ideal(Mask d) const {
    for (int i = 0; i < n(); ++i)
      if ((d & (1U << i)) && !is_subset(down_[idx(i)], d)) return false;
    return true;
  }
  bool is_antichain_set(Mask a) const {
    for (int i = 0; i < n(); ++i)
      for (int j = 0; j < n(); ++j)
        if (i != j && (a & (1U << i)) && (a & (1U << j)) && leq(i, j)) return false;
    return true;
  }

  /// All lower ideals (unions of class-level down-sets), increasing by mask.
  std::vector<Mask> lower_ideals() const {
    auto cs = classes();
    std::vector<Mask> out;
    const Mask k = full_mask(static_cast<int>(cs.size()));
    for (Mask pick = 0;; ++pick) {
      Mask d = 0;
      for (std::size_t c = 0; c < cs.size(); ++c)
        if (pick & (1U << c)) d |= cs[c];
      if (is_lower_ideal(d)) out.push_back(d);
      if (pick == k) break;
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Minimal classes among the elements of `rest` (rest must be an upper set
  /// of the remaining structure for this to mean what it says).
  std::vector<Mask> minimal_classes(Mask rest) const {
    std::vector<Mask> out;
    for (Mask c : classes()) {
      if (!is_subset(c, rest)) continue;
      int i = std::countr_zero(c);
      if (is_subset(down_[idx(i)] & rest, c)) out.push_back(c);
    }
    return out;
  }

  Preposet restrict(Mask s) const {
    LabelSet g = ground_.subset(s);
    std::vector<Mask> down;
    for (int i = 0; i < n(); ++i)
      if (s & (1U << i)) down.push_back(compress(down_[idx(i)] & s, s));
    Preposet q;
    q.ground_ = std::move(g);
    q.down_ = std::move(down);
    return q;
  }
  Preposet restrict(const LabelSet& s) const { return restrict(ground_.mask_of(s)); }

  /// Relation on the union of the grounds with no relations between the parts.
  static Preposet disjoint_union(const Preposet& a, const Preposet& b) {
    if (!a.ground_.disjoint(b.ground_)) throw InputError("disjoint union of overlapping ground sets");
    LabelSet g = a.ground_.unite(b.ground_);
    Mask ma = g.mask_of(a.ground_), mb = g.mask_of(b.ground_);
    std::vector<Mask> down(static_cast<std::size_t>(g.size()), 0);
    for (int i = 0; i < a.n(); ++i) down[idx(std::countr_zero(expand(1U << i, ma)))] = expand(a.down_[idx(i)], ma);
    for (int i = 0; i < b.n(); ++i) down[idx(std::countr_zero(expand(1U << i, mb)))] = expand(b.down_[idx(i)], mb);
    return from_down_sets(std::move(g), std::move(down));
  }

  /// Blocks of a total preposet in order.
  OrderedSetPartition as_osp() const {
    if (!is_total()) throw InputError("as_osp needs a total preposet");
    auto cs = classes();
    std::sort(cs.begin(), cs.end(), [&](Mask a, Mask b) {
      return popcount(down_[idx(std::countr_zero(a))]) < popcount(down_[idx(std::countr_zero(b))]);
    });
    return OrderedSetPartition::from_masks(ground_, cs);
  }

  /// Pairs (a, b) with a < b, or a ~ b for a before b, covering the relation.
  std::vector<std::pair<Label, Label>> relations() const {
    std::vector<std::pair<Label, Label>> out;
    for (int i = 0; i < n(); ++i)
      for (int j = 0; j < n(); ++j)
        if (i != j && leq(i, j)) out.emplace_back(ground_[i], ground_[j]);
    return out;
  }

  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [a, b] : relations()) {
      if (!first) s += ",";
      s += a.str() + "<=" + b.str();
      first = false;
    }
    return s + "} on {" + ground_.str() + "}";
  }

  friend bool operator==(const Preposet&, const Preposet&) = default;
  friend auto operator<=>(const Preposet&, const Preposet&) = default;

 private:
  static std::size_t idx(int i) { return static_cast<std::size_t>(i); }

  void close() {
    // Warshall on down-sets
    for (int k = 0; k < n(); ++k)
      for (int i = 0; i < n(); ++i)
        if (down_[idx(i)] & (1U << k)) down_[idx(i)] |= down_[idx(k)];
  }

  LabelSet ground_;
  std::vector<Mask> down_;
};

/// Antisymmetric preposet.
class Poset : public Preposet {
 public:
  Poset() = default;
  Poset(LabelSet ground, const std::vector<std::pair<Label, Label>>& relations)
      : Poset(Preposet(std::move(ground), relations)) {}
  explicit Poset(const Preposet& q) : Preposet(q) {
    for (int i = 0; i < n(); ++i)
      for (int j = i + 1; j < n(); ++j)
        if (leq(i, j) && leq(j, i))
          throw AxiomError("antisymmetry fails: " + ground()[i].str() + " <= " + ground()[j].str() + " <= " +
                           ground()[i].str());
  }
  static Poset chain(const LabelSet& ground) {
    std::vector<std::pair<Label, Label>> rel;
    for (int i = 0; i + 1 < ground.size(); ++i) rel.emplace_back(ground[i], ground[i + 1]);
    return Poset(ground, rel);
  }
  static Poset antichain(const LabelSet& ground) { return Poset(Preposet::antichain(ground)); }
  Poset restrict(Mask s) const { return Poset(Preposet::restrict(s)); }
  Poset restrict(const LabelSet& s) const { return Poset(Preposet::restrict(s)); }
};

/// Preposet with one rational weight per class (classes in Preposet::classes order).
class WeightedPreposet {
 public:
  WeightedPreposet() = default;
  WeightedPreposet(Preposet q, std::vector<Rational> weights) : q_(std::move(q)), w_(std::move(weights)) {
    if (static_cast<int>(w_.size()) != q_.class_count())
      throw InputError("weighted preposet needs one weight per class");
  }
  /// Class weights are the class sums of the point x.
  static WeightedPreposet from_point(Preposet q, const std::vector<Rational>& x) {
    std::vector<Rational> w;
    for (Mask c : q.classes()) {
      Rational s(0);
      for (int i = 0; i < q.n(); ++i)
        if (c & (1U << i)) s += x[static_cast<std::size_t>(i)];
      w.push_back(s);
    }
    return WeightedPreposet(std::move(q), std::move(w));
  }
  static WeightedPreposet from_wosp(const WeightedOSP& d) {
    Preposet q = Preposet::from_osp(d.osp());
    auto cs = q.classes();
    std::vector<Rational> w(cs.size());
    for (int b = 0; b < d.size(); ++b) {
      Mask bm = q.ground().mask_of(d.osp().block(b));
      for (std::size_t k = 0; k < cs.size(); ++k)
        if (cs[k] == bm) w[k] = d.weight(b);
    }
    return WeightedPreposet(std::move(q), std::move(w));
  }

  const Preposet& preposet() const { return q_; }
  const std::vector<Rational>& weights() const { return w_; }
  const LabelSet& ground() const { return q_.ground(); }

  Rational weight_of(Mask union_of_classes) const {
    Rational s(0);
    auto cs = q_.classes();
    for (std::size_t k = 0; k < cs.size(); ++k)
      if (is_subset(cs[k], union_of_classes)) s += w_[k];
    return s;
  }
  Rational total_weight() const {
    Rational s(0);
    for (const auto& w : w_) s += w;
    return s;
  }

  /// Apex point: each class weight placed on the lowest element of the class.
  std::vector<Rational> apex() const {
    std::vector<Rational> x(static_cast<std::size_t>(q_.n()), Rational(0));
    auto cs = q_.classes();
    for (std::size_t k = 0; k < cs.size(); ++k) x[static_cast<std::size_t>(std::countr_zero(cs[k]))] = w_[k];
    return x;
  }

  /// Weighted OSP of a total weighted preposet.
  WeightedOSP as_wosp() const {
    OrderedSetPartition f = q_.as_osp();
    std::vector<Rational> w;
    for (const auto& b : f.blocks()) w.push_back(weight_of(q_.ground().mask_of(b)));
    return WeightedOSP(f, std::move(w));
  }

  std::string str() const {
    std::string s = q_.str() + " w=(";
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (i) s += ',';
      s += w_[i].str();
    }
    return s + ")";
  }

  friend bool operator==(const WeightedPreposet&, const WeightedPreposet&) = default;
  friend auto operator<=>(const WeightedPreposet& a, const WeightedPreposet& b) {
    if (auto c = a.q_ <=> b.q_; c != 0) return c;
    return a.w_ <=> b.w_;
  }

 private:
  Preposet q_;
  std::vector<Rational> w_;
};

/// Prelinear extension as a sequence of element masks (unions of classes).
struct PrelinearExtension {
  std::vector<Mask> blocks;
  int sign;
};

/// Totally ordered preposets refining q, with sign (-1)^{|q| - #blocks}.
inline std::vector<PrelinearExtension> prelinear_extension_masks(const Preposet& q) {
  std::vector<PrelinearExtension> out;
  const int nclasses = q.class_count();
  std::vector<Mask> cur;
  auto rec = [&](auto&& self, Mask rest) -> void {
    if (rest == 0) {
      out.push_back({cur, minus_one_pow(nclasses - static_cast<int>(cur.size()))});
      return;
    }
    auto mins = q.minimal_classes(rest);
    const Mask k = full_mask(static_cast<int>(mins.size()));
    for (Mask pick = 1; pick <= k; ++pick) {
      Mask b = 0;
      for (std::size_t c = 0; c < mins.size(); ++c)
        if (pick & (1U << c)) b |= mins[c];
      cur.push_back(b);
      self(self, rest & ~b);
      cur.pop_back();
    }
  };
  rec(rec, full_mask(q.n()));
  return out;
}

inline std::vector<std::pair<OrderedSetPartition, int>> prelinear_extensions(const Preposet& q) {
  std::vector<std::pair<OrderedSetPartition, int>> out;
  for (const auto& e : prelinear_extension_masks(q))
    out.emplace_back(OrderedSetPartition::from_masks(q.ground(), e.blocks), e.sign);
  std::sort(out.begin(), out.end());
  return out;
}

/// (p|_S, p|_T) when S is a lower ideal of p.
inline std::optional<std::pair<Poset, Poset>> poset_coproduct(const Poset& p, const LabelSet& s) {
  Mask m = p.ground().mask_of(s);
  if (!p.is_lower_ideal(m)) return std::nullopt;
  return std::pair{p.restrict(m), p.restrict(p.ground().full() & ~m)};
}

/// Preposet analogue: splits when S is a lower ideal of q.
inline std::optional<std::pair<Preposet, Preposet>> preposet_coproduct(const Preposet& q, Mask s) {
  if (!q.is_lower_ideal(s)) return std::nullopt;
  return std::pair{q.restrict(s), q.restrict(q.ground().full() & ~s)};
}

/// x in w^q + cone(q).
inline bool weighted_cone_membership(const WeightedPreposet& c, const std::vector<Rational>& x) {
  const Preposet& q = c.preposet();
  if (static_cast<int>(x.size()) != q.n()) throw InputError("point dimension mismatch");
  auto partial = [&](Mask d) {
    Rational s(0);
    for (int i = 0; i < q.n(); ++i)
      if (d & (1U << i)) s += x[static_cast<std::size_t>(i)];
    return s;
  };
  if (partial(q.ground().full()) != c.total_weight()) return false;
  for (Mask d : q.lower_ideals())
    if (partial(d) > c.weight_of(d)) return false;
  return true;
}

}  // namespace gpval
