#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "gpval/error.hpp"

namespace gpval {

/// Bitmask of positions inside a LabelSet.
using Mask = std::uint32_t;

inline constexpr int kMaxGroundSize = 20;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask full_mask(int n) { return n == 0 ? 0U : (n >= 32 ? ~0U : ((1U << n) - 1U)); }
inline bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

/// Packs the bits of `m` selected by `sub` into the low positions (ordered).
inline Mask compress(Mask m, Mask sub) {
  Mask out = 0;
  int k = 0;
  for (int i = 0; sub >> i; ++i) {
    if (sub & (1U << i)) {
      if (m & (1U << i)) out |= 1U << k;
      ++k;
    }
  }
  return out;
}

/// Inverse of compress: spreads the low bits of `m` over the positions of `sub`.
inline Mask expand(Mask m, Mask sub) {
  Mask out = 0;
  int k = 0;
  for (int i = 0; sub >> i; ++i) {
    if (sub & (1U << i)) {
      if (m & (1U << k)) out |= 1U << i;
      ++k;
    }
  }
  return out;
}

/// Ground-set element. Integer-looking labels compare numerically and sort
/// before all other labels; other labels compare as strings.
class Label {
 public:
  Label() = default;
  Label(std::string_view text) : text_(normalize(text)) {}  // NOLINT(google-explicit-constructor)
  Label(const char* text) : Label(std::string_view(text)) {}  // NOLINT(google-explicit-constructor)
  Label(long long n) : text_(std::to_string(n)) {}  // NOLINT(google-explicit-constructor)
  Label(int n) : Label(static_cast<long long>(n)) {}  // NOLINT(google-explicit-constructor)

  const std::string& str() const { return text_; }
  bool numeric() const { return is_numeric(text_); }

  friend bool operator==(const Label&, const Label&) = default;
  friend std::strong_ordering operator<=>(const Label& a, const Label& b) {
    bool na = a.numeric(), nb = b.numeric();
    if (na != nb) return na ? std::strong_ordering::less : std::strong_ordering::greater;
    if (na) {
      bool nega = a.text_[0] == '-', negb = b.text_[0] == '-';
      if (nega != negb) return nega ? std::strong_ordering::less : std::strong_ordering::greater;
      auto mag = [](const std::string& s) { return std::string_view(s).substr(s[0] == '-' ? 1 : 0); };
      auto ma = mag(a.text_), mb = mag(b.text_);
      auto c = (ma.size() != mb.size()) ? (ma.size() <=> mb.size()) : (ma.compare(mb) <=> 0);
      if (nega) c = 0 <=> c;
      return c;
    }
    return a.text_.compare(b.text_) <=> 0;
  }

 private:
  static bool is_numeric(std::string_view s) {
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  }
  static std::string normalize(std::string_view s) {
    if (s.empty()) throw InputError("empty label");
    if (!is_numeric(s)) return std::string(s);
    bool neg = s[0] == '-';
    auto digits = s.substr(neg ? 1 : 0);
    auto first = digits.find_first_not_of('0');
    if (first == std::string_view::npos) return "0";
    return (neg ? "-" : "") + std::string(digits.substr(first));
  }

  std::string text_;
};

/// Sorted, duplicate-free set of labels. Doubles as the ground set that
/// defines the bit positions of a Mask.
class LabelSet {
 public:
  LabelSet() = default;
  LabelSet(std::initializer_list<Label> labels) : LabelSet(std::vector<Label>(labels)) {}
  explicit LabelSet(std::vector<Label> labels) : labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
    labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
  }
  /// Rejects repeated labels instead of merging them.
  static LabelSet strict(std::vector<Label> labels) {
    std::size_t n = labels.size();
    LabelSet s(std::move(labels));
    if (s.size() != static_cast<int>(n)) throw InputError("repeated label in ground set");
    return s;
  }
  /// {1, ..., n}
  static LabelSet range(int n) {
    std::vector<Label> v;
    for (int i = 1; i <= n; ++i) v.emplace_back(i);
    return LabelSet(std::move(v));
  }

  int size() const { return static_cast<int>(labels_.size()); }
  bool empty() const { return labels_.empty(); }
  const Label& operator[](int i) const { return labels_[static_cast<std::size_t>(i)]; }
  auto begin() const { return labels_.begin(); }
  auto end() const { return labels_.end(); }
  const std::vector<Label>& labels() const { return labels_; }

  Mask full() const { return full_mask(size()); }

  int index_of(const Label& l) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
    if (it == labels_.end() || *it != l) return -1;
    return static_cast<int>(it - labels_.begin());
  }
  bool contains(const Label& l) const { return index_of(l) >= 0; }

  /// Mask of `sub` inside this set; throws if `sub` is not a subset.
  Mask mask_of(const LabelSet& sub) const {
    Mask m = 0;
    for (const auto& l : sub) {
      int i = index_of(l);
      if (i < 0) throw InputError("label '" + l.str() + "' is not in the ground set");
      m |= 1U << i;
    }
    return m;
  }
  LabelSet subset(Mask m) const {
    std::vector<Label> v;
    for (int i = 0; i < size(); ++i)
      if (m & (1U << i)) v.push_back(labels_[static_cast<std::size_t>(i)]);
    return LabelSet(std::move(v));
  }

  bool is_subset_of(const LabelSet& o) const {
    return std::includes(o.labels_.begin(), o.labels_.end(), labels_.begin(), labels_.end());
  }
  bool disjoint(const LabelSet& o) const { return intersect(o).empty(); }
  LabelSet unite(const LabelSet& o) const {
    std::vector<Label> v;
    std::set_union(labels_.begin(), labels_.end(), o.labels_.begin(), o.labels_.end(), std::back_inserter(v));
    return LabelSet(std::move(v));
  }
  LabelSet intersect(const LabelSet& o) const {
    std::vector<Label> v;
    std::set_intersection(labels_.begin(), labels_.end(), o.labels_.begin(), o.labels_.end(),
                          std::back_inserter(v));
    return LabelSet(std::move(v));
  }
  LabelSet minus(const LabelSet& o) const {
    std::vector<Label> v;
    std::set_difference(labels_.begin(), labels_.end(), o.labels_.begin(), o.labels_.end(),
                        std::back_inserter(v));
    return LabelSet(std::move(v));
  }

  /// Comma-joined labels: "1,2,10".
  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (i) s += ',';
      s += labels_[i].str();
    }
    return s;
  }

  friend bool operator==(const LabelSet&, const LabelSet&) = default;
  friend auto operator<=>(const LabelSet&, const LabelSet&) = default;

 private:
  std::vector<Label> labels_;
};

inline void check_ground_size(const LabelSet& ground) {
  if (ground.size() > kMaxGroundSize)
    throw InputError("ground set larger than " + std::to_string(kMaxGroundSize) + " elements");
}

/// Calls f(sub) for every subset of m, including 0 and m.
template <class F>
void for_each_subset(Mask m, F&& f) {
  Mask s = m;
  while (true) {
    f(s);
    if (s == 0) break;
    s = (s - 1) & m;
  }
}

/// Ordered set partitions of m as block-mask sequences.
inline std::vector<std::vector<Mask>> ordered_partitions(Mask m) {
  std::vector<std::vector<Mask>> out;
  std::vector<Mask> cur;
  auto rec = [&](auto&& self, Mask rest) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (Mask b = rest; b != 0; b = (b - 1) & rest) {
      cur.push_back(b);
      self(self, rest & ~b);
      cur.pop_back();
    }
  };
  rec(rec, m);
  return out;
}

/// Unordered set partitions of m; blocks listed by increasing lowest bit.
inline std::vector<std::vector<Mask>> set_partitions(Mask m) {
  std::vector<std::vector<Mask>> out;
  std::vector<Mask> cur;
  auto rec = [&](auto&& self, Mask rest) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    Mask low = rest & (~rest + 1);
    Mask others = rest & ~low;
    for_each_subset(others, [&](Mask s) {
      cur.push_back(s | low);
      self(self, rest & ~(s | low));
      cur.pop_back();
    });
  };
  rec(rec, m);
  return out;
}

/// All orderings of {0, ..., n-1}, lexicographic.
inline std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace gpval
