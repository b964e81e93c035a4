#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gpval/error.hpp"
#include "gpval/formal_sum.hpp"
#include "gpval/label.hpp"
#include "gpval/rational.hpp"

namespace gpval {

/// Sequence of nonempty, pairwise disjoint blocks.
class OrderedSetPartition {
 public:
  OrderedSetPartition() = default;
  explicit OrderedSetPartition(std::vector<LabelSet> blocks) : blocks_(std::move(blocks)) {
    for (const auto& b : blocks_) {
      if (b.empty()) throw InputError("ordered set partition has an empty block");
      if (!ground_.disjoint(b)) throw InputError("ordered set partition blocks overlap");
      ground_ = ground_.unite(b);
    }
  }
  /// Blocks given as masks over `ground`.
  static OrderedSetPartition from_masks(const LabelSet& ground, const std::vector<Mask>& blocks) {
    std::vector<LabelSet> bs;
    bs.reserve(blocks.size());
    for (Mask m : blocks) bs.push_back(ground.subset(m));
    return OrderedSetPartition(std::move(bs));
  }

  /// "14|2|35", or "1,4|2|3,5"; the comma form is required for labels
  /// longer than one character.
  static OrderedSetPartition parse(std::string_view text) {
    std::vector<LabelSet> blocks;
    if (text.empty()) return OrderedSetPartition();
    bool commas = text.find(',') != std::string_view::npos;
    std::size_t start = 0;
    while (start <= text.size()) {
      auto bar = text.find('|', start);
      auto part = text.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start);
      std::vector<Label> labels;
      if (commas) {
        std::size_t s = 0;
        while (s <= part.size()) {
          auto c = part.find(',', s);
          labels.emplace_back(part.substr(s, c == std::string_view::npos ? std::string_view::npos : c - s));
          if (c == std::string_view::npos) break;
          s = c + 1;
        }
      } else {
        for (char ch : part) labels.emplace_back(std::string_view(&ch, 1));
      }
      blocks.push_back(LabelSet::strict(std::move(labels)));
      if (bar == std::string_view::npos) break;
      start = bar + 1;
    }
    return OrderedSetPartition(std::move(blocks));
  }

  const std::vector<LabelSet>& blocks() const { return blocks_; }
  const LabelSet& block(int i) const { return blocks_[static_cast<std::size_t>(i)]; }
  int size() const { return static_cast<int>(blocks_.size()); }
  const LabelSet& ground() const { return ground_; }
  std::vector<int> composition() const {
    std::vector<int> c;
    for (const auto& b : blocks_) c.push_back(b.size());
    return c;
  }
  /// Block masks relative to `ground`.
  std::vector<Mask> masks(const LabelSet& ground) const {
    std::vector<Mask> m;
    for (const auto& b : blocks_) m.push_back(ground.mask_of(b));
    return m;
  }

  std::string str() const {
    bool commas = false;
    for (const auto& l : ground_)
      if (l.str().size() != 1) commas = true;
    std::string s;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (i) s += '|';
      if (commas) {
        s += blocks_[i].str();
      } else {
        for (const auto& l : blocks_[i]) s += l.str();
      }
    }
    return s;
  }

  friend bool operator==(const OrderedSetPartition& a, const OrderedSetPartition& b) {
    return a.blocks_ == b.blocks_;
  }
  friend auto operator<=>(const OrderedSetPartition& a, const OrderedSetPartition& b) {
    return a.blocks_ <=> b.blocks_;
  }

 private:
  std::vector<LabelSet> blocks_;
  LabelSet ground_;
};

using OSP = OrderedSetPartition;

/// Ordered set partition with one rational weight per block.
class WeightedOSP {
 public:
  WeightedOSP() = default;
  WeightedOSP(OrderedSetPartition osp, std::vector<Rational> weights)
      : osp_(std::move(osp)), weights_(std::move(weights)) {
    if (static_cast<int>(weights_.size()) != osp_.size())
      throw InputError("weighted OSP needs one weight per block");
  }

  const OrderedSetPartition& osp() const { return osp_; }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& weight(int i) const { return weights_[static_cast<std::size_t>(i)]; }
  int size() const { return osp_.size(); }
  const LabelSet& ground() const { return osp_.ground(); }

  /// "(1|2;1,0)"
  std::string str() const {
    std::string s = "(" + osp_.str() + ";";
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      if (i) s += ',';
      s += weights_[i].str();
    }
    return s + ")";
  }

  friend bool operator==(const WeightedOSP&, const WeightedOSP&) = default;
  friend auto operator<=>(const WeightedOSP& a, const WeightedOSP& b) {
    if (auto c = a.osp_ <=> b.osp_; c != 0) return c;
    return a.weights_ <=> b.weights_;
  }

 private:
  OrderedSetPartition osp_;
  std::vector<Rational> weights_;
};

/// Blocks F_i ∩ S in order, empty ones dropped.
inline OrderedSetPartition osp_restrict(const OrderedSetPartition& f, const LabelSet& s) {
  if (!s.is_subset_of(f.ground())) throw InputError("restriction set is not inside the ground set");
  std::vector<LabelSet> out;
  for (const auto& b : f.blocks()) {
    auto r = b.intersect(s);
    if (!r.empty()) out.push_back(std::move(r));
  }
  return OrderedSetPartition(std::move(out));
}

namespace detail {
/// Delannoy-path walk: at each step take the next block of f, of g, or both.
template <class Emit>
void walk_quasishuffles(int nf, int ng, Emit&& emit) {
  std::vector<std::pair<int, int>> steps;  // (index in f or -1, index in g or -1)
  auto rec = [&](auto&& self, int i, int j) -> void {
    if (i == nf && j == ng) {
      emit(steps);
      return;
    }
    if (i < nf) {
      steps.emplace_back(i, -1);
      self(self, i + 1, j);
      steps.pop_back();
    }
    if (j < ng) {
      steps.emplace_back(-1, j);
      self(self, i, j + 1);
      steps.pop_back();
    }
    if (i < nf && j < ng) {
      steps.emplace_back(i, j);
      self(self, i + 1, j + 1);
      steps.pop_back();
    }
  };
  rec(rec, 0, 0);
}
}  // namespace detail

inline std::vector<OrderedSetPartition> quasishuffles(const OrderedSetPartition& f,
                                                      const OrderedSetPartition& g) {
  if (!f.ground().disjoint(g.ground())) throw InputError("quasishuffle of overlapping ground sets");
  std::vector<OrderedSetPartition> out;
  detail::walk_quasishuffles(f.size(), g.size(), [&](const auto& steps) {
    std::vector<LabelSet> blocks;
    for (auto [i, j] : steps) {
      LabelSet b;
      if (i >= 0) b = b.unite(f.block(i));
      if (j >= 0) b = b.unite(g.block(j));
      blocks.push_back(std::move(b));
    }
    out.emplace_back(std::move(blocks));
  });
  return out;
}

inline FormalSum<WeightedOSP> wosp_product(const WeightedOSP& a, const WeightedOSP& b) {
  if (!a.ground().disjoint(b.ground())) throw InputError("product of overlapping ground sets");
  FormalSum<WeightedOSP> out;
  detail::walk_quasishuffles(a.size(), b.size(), [&](const auto& steps) {
    std::vector<LabelSet> blocks;
    std::vector<Rational> weights;
    for (auto [i, j] : steps) {
      LabelSet blk;
      Rational w(0);
      if (i >= 0) {
        blk = blk.unite(a.osp().block(i));
        w += a.weight(i);
      }
      if (j >= 0) {
        blk = blk.unite(b.osp().block(j));
        w += b.weight(j);
      }
      blocks.push_back(std::move(blk));
      weights.push_back(w);
    }
    out.add(WeightedOSP(OrderedSetPartition(std::move(blocks)), std::move(weights)), Rational(1));
  });
  return out;
}

/// Prefix split when S is a union of leading blocks, nothing otherwise.
inline std::optional<std::pair<WeightedOSP, WeightedOSP>> wosp_split(const WeightedOSP& x, const LabelSet& s) {
  if (!s.is_subset_of(x.ground())) throw InputError("coproduct set is not inside the ground set");
  LabelSet prefix;
  int j = 0;
  while (prefix.size() < s.size() && j < x.size()) {
    prefix = prefix.unite(x.osp().block(j));
    ++j;
  }
  if (prefix != s) return std::nullopt;
  std::vector<LabelSet> lb(x.osp().blocks().begin(), x.osp().blocks().begin() + j);
  std::vector<LabelSet> rb(x.osp().blocks().begin() + j, x.osp().blocks().end());
  std::vector<Rational> lw(x.weights().begin(), x.weights().begin() + j);
  std::vector<Rational> rw(x.weights().begin() + j, x.weights().end());
  return std::pair{WeightedOSP(OrderedSetPartition(std::move(lb)), std::move(lw)),
                   WeightedOSP(OrderedSetPartition(std::move(rb)), std::move(rw))};
}

inline Tensor<WeightedOSP, WeightedOSP> wosp_coproduct(const WeightedOSP& x, const LabelSet& s) {
  Tensor<WeightedOSP, WeightedOSP> out;
  if (auto p = wosp_split(x, s)) out.add(std::move(*p), Rational(1));
  return out;
}

/// Linear extension of wosp_product.
inline FormalSum<WeightedOSP> product(const FormalSum<WeightedOSP>& a, const FormalSum<WeightedOSP>& b) {
  return bilinear<WeightedOSP>(a, b, [](const WeightedOSP& x, const WeightedOSP& y) { return wosp_product(x, y); });
}

/// Linear extension of wosp_coproduct.
inline Tensor<WeightedOSP, WeightedOSP> coproduct(const FormalSum<WeightedOSP>& a, const LabelSet& s) {
  return a.map_linear<std::pair<WeightedOSP, WeightedOSP>>([&](const WeightedOSP& x) { return wosp_coproduct(x, s); });
}

/// The weighted OSP cone w^F + cone(F) contains x iff the coordinate sum
/// matches and every block prefix sum is bounded by its weight prefix.
inline bool wosp_cone_contains(const WeightedOSP& d, const LabelSet& ground, const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != ground.size()) throw InputError("point dimension mismatch");
  Rational xs(0), ws(0);
  for (int i = 0; i < d.size(); ++i) {
    for (const auto& l : d.osp().block(i)) xs += x[static_cast<std::size_t>(ground.index_of(l))];
    ws += d.weight(i);
    if (i + 1 < d.size() && xs > ws) return false;
  }
  return xs == ws;
}

/// Sum of c * indicator(cone(d)) at x.
inline Rational evaluate_indicators(const FormalSum<WeightedOSP>& s, const LabelSet& ground,
                                    const std::vector<Rational>& x) {
  Rational r(0);
  for (const auto& [d, c] : s)
    if (wosp_cone_contains(d, ground, x)) r += c;
  return r;
}

}  // namespace gpval
