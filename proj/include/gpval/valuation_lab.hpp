#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gpval/building_set.hpp"
#include "gpval/canonical_form.hpp"
#include "gpval/characters.hpp"
#include "gpval/error.hpp"
#include "gpval/hopf.hpp"
#include "gpval/matroid.hpp"
#include "gpval/matroid_invariants.hpp"
#include "gpval/poset_invariants.hpp"
#include "gpval/submodular_gp.hpp"

namespace gpval {

/// Polytope of a cell together with the combinatorial object it came from.
struct Cell {
  SubmodularGP gp;
  std::optional<HopfObject> source;
  int dimension = 0;

  static Cell of(SubmodularGP p) {
    int d = p.dimension();
    return {std::move(p), std::nullopt, d};
  }
  static Cell of(const Matroid& m) {
    SubmodularGP p = to_gp(m);
    int d = p.dimension();
    return {std::move(p), HopfObject(m), d};
  }
  static Cell of(const BuildingSet& b) {
    SubmodularGP p = nestohedron(b);
    int d = p.dimension();
    return {std::move(p), HopfObject(b), d};
  }
};

/// One term lambda [X] of an indicator relation.
struct RelationTerm {
  GPElement geometry;
  std::optional<HopfObject> source;
  Rational coeff;
};

/// sum of lambda_i [X_i] = 0 as a claimed identity of indicator functions.
struct IndicatorRelation {
  std::string name;
  std::vector<RelationTerm> terms;

  FormalSum<GPElement> as_sum() const {
    FormalSum<GPElement> s;
    for (const auto& t : terms) s.add(t.geometry, t.coeff);
    return s;
  }
};

/// Parent polytope and the interior cells of a subdivision (the parent
/// itself when the subdivision is trivial).
struct SubdivisionComplex {
  std::string name;
  Cell parent;
  std::vector<Cell> cells;

  /// parent minus sum of (-1)^{dim P - dim P_i} P_i.
  IndicatorRelation to_relation() const {
    IndicatorRelation r{name, {}};
    r.terms.push_back({parent.gp, parent.source, Rational(1)});
    for (const auto& c : cells)
      r.terms.push_back({c.gp, c.source, Rational(-minus_one_pow(parent.dimension - c.dimension))});
    return r;
  }

  /// Problems found, empty when the complex passes the desk-scale checks.
  std::vector<std::string> validate() const {
    std::vector<std::string> problems;
    auto check_dim = [&](const Cell& c, const std::string& what) {
      int d = c.gp.dimension();
      if (d != c.dimension)
        problems.push_back(what + ": recorded dimension " + std::to_string(c.dimension) + " but computed " +
                           std::to_string(d));
    };
    check_dim(parent, "parent");
    std::vector<std::set<Point>> verts;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const Cell& c = cells[i];
      const std::string what = "cell " + std::to_string(i);
      if (c.gp.ground() != parent.gp.ground()) {
        problems.push_back(what + ": ground set differs from the parent");
        verts.emplace_back();
        continue;
      }
      check_dim(c, what);
      auto v = c.gp.vertices();
      for (const auto& x : v)
        if (!parent.gp.contains(x)) {
          problems.push_back(what + ": vertex outside the parent");
          break;
        }
      verts.emplace_back(v.begin(), v.end());
    }
    for (std::size_t i = 0; i < cells.size(); ++i)
      for (std::size_t j = i + 1; j < cells.size(); ++j) {
        std::vector<Point> common;
        std::set_intersection(verts[i].begin(), verts[i].end(), verts[j].begin(), verts[j].end(),
                              std::back_inserter(common));
        if (common.empty()) continue;
        std::set<Point> cs(common.begin(), common.end());
        bool listed = std::find(verts.begin(), verts.end(), cs) != verts.end();
        // faces on the boundary of the parent are not interior cells
        if (listed || !parent.gp.relint_contains(barycenter(common))) continue;
        problems.push_back("cells " + std::to_string(i) + " and " + std::to_string(j) +
                           " meet in an interior face that is not listed");
      }
    return problems;
  }
};

using InvariantValue = std::map<std::string, Rational>;

/// A named function on relation terms; nullopt where it is not defined.
struct Invariant {
  std::string name;
  std::string domain;
  std::function<std::optional<InvariantValue>(const RelationTerm&)> eval;
};

namespace detail {

template <class E>
InvariantValue poly_value(const Polynomial<E>& p) {
  return coefficient_map(p);
}
inline InvariantValue poly_value(const UniPoly& p) { return coefficient_map(p, "t"); }
inline InvariantValue scalar_value(const Rational& r) { return {{"1", r}}; }

template <class T>
const T* source_as(const RelationTerm& t) {
  return t.source ? std::get_if<T>(&*t.source) : nullptr;
}

inline std::optional<Poset> source_poset(const RelationTerm& t) {
  const auto* q = source_as<Preposet>(t);
  if (!q || !q->is_poset()) return std::nullopt;
  return Poset(*q);
}

template <class F>
Invariant on_matroids(std::string name, F f) {
  return {std::move(name), "matroid", [f](const RelationTerm& t) -> std::optional<InvariantValue> {
            const auto* m = source_as<Matroid>(t);
            if (!m) return std::nullopt;
            return f(*m);
          }};
}
template <class F>
Invariant on_preposets(std::string name, F f) {
  return {std::move(name), "preposet", [f](const RelationTerm& t) -> std::optional<InvariantValue> {
            const auto* q = source_as<Preposet>(t);
            if (!q) return std::nullopt;
            return f(*q);
          }};
}
template <class F>
Invariant on_posets(std::string name, F f) {
  return {std::move(name), "poset", [f](const RelationTerm& t) -> std::optional<InvariantValue> {
            auto p = source_poset(t);
            if (!p) return std::nullopt;
            return f(*p);
          }};
}
template <class F>
Invariant on_polytopes(std::string name, F f) {
  return {std::move(name), "gp", [f](const RelationTerm& t) -> std::optional<InvariantValue> {
            const auto* p = std::get_if<SubmodularGP>(&t.geometry);
            if (!p) return std::nullopt;
            return f(*p);
          }};
}

inline InvariantValue qsym_value(const QSymMonomial& f) {
  InvariantValue v;
  for (const auto& [alpha, c] : f) v.emplace(composition_key(alpha), c);
  return v;
}

inline InvariantValue osp_value(const FormalSum<OrderedSetPartition>& f) {
  InvariantValue v;
  for (const auto& [osp, c] : f) v.emplace(osp.str(), c);
  return v;
}

inline std::vector<Invariant> build_catalog() {
  std::vector<Invariant> c;
  c.push_back({"one", "any", [](const RelationTerm&) -> std::optional<InvariantValue> {
                 return scalar_value(Rational(1));
               }});
  c.push_back({"canonical-form", "any", [](const RelationTerm& t) -> std::optional<InvariantValue> {
                 InvariantValue v;
                 for (const auto& [d, k] : canonical_form(t.geometry)) v.emplace(d.str(), k);
                 return v;
               }});
  c.push_back(on_polytopes("universal-norm", [](const SubmodularGP& p) { return poly_value(universal_norm(p)); }));
  c.push_back(on_polytopes("universal-tutte", [](const SubmodularGP& p) { return poly_value(universal_tutte(p)); }));
  c.push_back(on_matroids("tutte", [](const Matroid& m) { return poly_value(tutte(m)); }));
  c.push_back(on_matroids("char-poly", [](const Matroid& m) { return poly_value(char_poly(m)); }));
  c.push_back(on_matroids("beta-crapo", [](const Matroid& m) { return scalar_value(beta(m, BetaConvention::crapo)); }));
  c.push_back(on_matroids("beta-paper", [](const Matroid& m) { return scalar_value(beta(m, BetaConvention::paper)); }));
  c.push_back(on_matroids("csm", [](const Matroid& m) {
    InvariantValue v;
    for (const auto& blocks : ordered_partitions(m.full())) {
      auto f = OrderedSetPartition::from_masks(m.ground(), blocks);
      v.emplace(f.str(), csm_weight(m, f));
    }
    return v;
  }));
  c.push_back(on_matroids("g-invariant", [](const Matroid& m) {
    InvariantValue v;
    for (const auto& [s, k] : g_invariant(m)) v.emplace(s, Rational(k));
    return v;
  }));
  c.push_back({"volume-poly", "matroid", [](const RelationTerm& t) -> std::optional<InvariantValue> {
                 const auto* m = source_as<Matroid>(t);
                 if (!m || m->has_loop() || m->rank() == 0) return std::nullopt;
                 return poly_value(volume_polynomial(*m));
               }});
  c.push_back(on_matroids("bjr-qsym", [](const Matroid& m) {
    return qsym_value(qsym_invariant(bjr_matroid_character(), HopfObject(m)));
  }));
  c.push_back(on_matroids("bjr-poly", [](const Matroid& m) {
    return poly_value(polynomial_invariant(bjr_matroid_character(), HopfObject(m)));
  }));
  c.push_back(on_matroids("bjr-osp", [](const Matroid& m) {
    return osp_value(osp_invariant(bjr_matroid_character(), HopfObject(m)));
  }));
  c.push_back(on_posets("antichain-poly", [](const Poset& p) {
    return poly_value(polynomial_invariant(antichain_character(), HopfObject(Preposet(p))));
  }));
  c.push_back(on_posets("antichain-qsym", [](const Poset& p) {
    return qsym_value(qsym_invariant(antichain_character(), HopfObject(Preposet(p))));
  }));
  c.push_back(on_posets("antichain-osp", [](const Poset& p) {
    return osp_value(osp_invariant(antichain_character(), HopfObject(Preposet(p))));
  }));
  c.push_back(on_preposets("order-poly-strict", [](const Preposet& q) { return poly_value(order_polynomial(q, true)); }));
  c.push_back(on_preposets("order-poly-weak", [](const Preposet& q) { return poly_value(order_polynomial(q, false)); }));
  c.push_back(on_preposets("preantichain-qsym", [](const Preposet& q) {
    return qsym_value(qsym_invariant(preantichain_character(), HopfObject(q)));
  }));
  c.push_back(on_posets("poset-tutte", [](const Poset& p) { return poly_value(poset_tutte(p)); }));
  c.push_back(on_posets("poincare", [](const Poset& p) { return poly_value(poincare(p)); }));
  c.push_back(on_posets("phi-ell", [](const Poset& p) {
    std::vector<int> ell(static_cast<std::size_t>(p.n()));
    for (int i = 0; i < p.n(); ++i) ell[static_cast<std::size_t>(i)] = i;
    return poly_value(phi_ell(p, ell));
  }));
  c.push_back({"f-poly", "building_set", [](const RelationTerm& t) -> std::optional<InvariantValue> {
                 const auto* b = source_as<BuildingSet>(t);
                 if (!b) return std::nullopt;
                 return poly_value(f_polynomial(*b));
               }});
  return c;
}

}  // namespace detail

inline const std::vector<Invariant>& invariant_catalog() {
  static const std::vector<Invariant> catalog = detail::build_catalog();
  return catalog;
}

inline const Invariant& find_invariant(const std::string& name) {
  for (const auto& f : invariant_catalog())
    if (f.name == name) return f;
  throw InputError("unknown invariant '" + name + "'");
}

struct ValuationReport {
  std::string invariant;
  bool applicable = false;
  InvariantValue residue;
  bool pass = false;
};

/// Alternating sum of f over the relation; not applicable when f is
/// undefined on some term.
inline ValuationReport weak_check(const Invariant& f, const IndicatorRelation& r) {
  ValuationReport rep{f.name, true, {}, false};
  for (const auto& t : r.terms) {
    auto v = f.eval(t);
    if (!v) {
      rep.applicable = false;
      rep.residue.clear();
      return rep;
    }
    for (const auto& [k, c] : *v) {
      Rational& slot = rep.residue[k];
      slot += t.coeff * c;
      if (slot.is_zero()) rep.residue.erase(k);
    }
  }
  rep.pass = rep.residue.empty();
  return rep;
}
inline ValuationReport weak_check(const std::string& name, const IndicatorRelation& r) {
  return weak_check(find_invariant(name), r);
}
inline ValuationReport weak_check(const std::string& name, const SubdivisionComplex& k) {
  return weak_check(find_invariant(name), k.to_relation());
}

/// Whether the relation holds as an identity of indicator functions.
inline bool strong_check(const IndicatorRelation& r) { return canonical_form(r.as_sum()).is_zero(); }
inline bool strong_check(const SubdivisionComplex& k) { return strong_check(k.to_relation()); }

inline bool element_contains(const GPElement& x, const Point& p) {
  if (const auto* g = std::get_if<SubmodularGP>(&x)) return g->contains(p);
  return weighted_cone_membership(std::get<WeightedPreposet>(x), p);
}

/// Rational test points for a relation: points near and inside the terms,
/// on the hyperplanes sum(x) = z(I) the terms live on.
inline std::vector<Point> sample_points(const IndicatorRelation& r, int count, std::uint64_t seed = 20240611) {
  std::vector<Point> out;
  if (r.terms.empty() || count <= 0) return out;
  const int n = ground_of(r.terms.front().geometry).size();
  std::vector<Point> anchors;
  std::set<Rational> totals;
  for (const auto& t : r.terms) {
    if (const auto* g = std::get_if<SubmodularGP>(&t.geometry)) {
      for (auto& v : g->vertices()) anchors.push_back(std::move(v));
      totals.insert(g->z(g->full()));
    } else {
      const auto& c = std::get<WeightedPreposet>(t.geometry);
      anchors.push_back(c.apex());
      totals.insert(c.total_weight());
    }
  }
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto small = [&](int span) { return Rational(uniform(-span, span), uniform(1, 4)); };
  std::vector<Rational> tot(totals.begin(), totals.end());
  for (int s = 0; s < count; ++s) {
    Point x(static_cast<std::size_t>(n), Rational(0));
    switch (s % 4) {
      case 0:
        x = anchors[static_cast<std::size_t>(uniform(0, static_cast<int>(anchors.size()) - 1))];
        break;
      case 1: {
        // convex combination of up to three anchors
        int k = uniform(1, 3);
        std::vector<int> w(static_cast<std::size_t>(k));
        int sum = 0;
        for (auto& wi : w) sum += (wi = uniform(1, 3));
        for (int i = 0; i < k; ++i) {
          const Point& a = anchors[static_cast<std::size_t>(uniform(0, static_cast<int>(anchors.size()) - 1))];
          for (int j = 0; j < n; ++j)
            x[static_cast<std::size_t>(j)] += Rational(w[static_cast<std::size_t>(i)], sum) * a[static_cast<std::size_t>(j)];
        }
        break;
      }
      case 2: {
        // anchor moved along a random direction of zero sum
        x = anchors[static_cast<std::size_t>(uniform(0, static_cast<int>(anchors.size()) - 1))];
        Rational drift(0);
        for (int j = 0; j + 1 < n; ++j) {
          Rational d = small(2);
          x[static_cast<std::size_t>(j)] += d;
          drift += d;
        }
        x[static_cast<std::size_t>(n - 1)] -= drift;
        break;
      }
      default: {
        Rational target = tot[static_cast<std::size_t>(uniform(0, static_cast<int>(tot.size()) - 1))];
        Rational sum(0);
        for (int j = 0; j + 1 < n; ++j) {
          x[static_cast<std::size_t>(j)] = small(8);
          sum += x[static_cast<std::size_t>(j)];
        }
        x[static_cast<std::size_t>(n - 1)] = target - sum;
      }
    }
    out.push_back(std::move(x));
  }
  return out;
}

/// Points where the signed indicator sum is nonzero (empty = identity holds
/// on the sample).
inline std::vector<Point> pointwise_violations(const IndicatorRelation& r, const std::vector<Point>& pts) {
  std::vector<Point> bad;
  for (const auto& x : pts) {
    Rational v(0);
    for (const auto& t : r.terms)
      if (element_contains(t.geometry, x)) v += t.coeff;
    if (!v.is_zero()) bad.push_back(x);
  }
  return bad;
}

namespace detail {

inline Matroid matroid_without(int n, std::vector<std::pair<int, int>> missing) {
  std::vector<Mask> bases;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool skip = false;
      for (auto [a, b] : missing)
        if (a - 1 == i && b - 1 == j) skip = true;
      if (!skip) bases.push_back((1U << i) | (1U << j));
    }
  return Matroid(LabelSet::range(n), std::move(bases));
}

inline SubdivisionComplex u24_split() {
  return {"u24-split",
          Cell::of(Matroid::uniform(2, 4)),
          {Cell::of(matroid_without(4, {{1, 2}})), Cell::of(matroid_without(4, {{3, 4}})),
           Cell::of(matroid_without(4, {{1, 2}, {3, 4}}))}};
}

inline Cell relabel_cell(const Cell& c, const std::map<Label, Label>& rename) {
  return Cell::of(std::get<Matroid>(*c.source).relabel(rename));
}

/// GP with the given vertex set, z(A) = max over vertices of x(A).
inline SubmodularGP gp_from_vertices(const LabelSet& ground, const std::vector<Point>& v) {
  auto p = SubmodularGP::from_function(ground, [&](Mask a) {
    Rational best;
    bool first = true;
    for (const auto& x : v) {
      Rational s(0);
      for (int i = 0; i < ground.size(); ++i)
        if (a & (1U << i)) s += x[static_cast<std::size_t>(i)];
      if (first || s > best) best = s;
      first = false;
    }
    return first ? Rational(0) : best;
  });
  std::set<Point> want(v.begin(), v.end());
  auto got = p.vertices();
  if (std::set<Point>(got.begin(), got.end()) != want)
    throw InternalError("vertex set does not span a generalized permutahedron");
  return p;
}

inline Point pt(std::initializer_list<int> xs) {
  Point p;
  for (int x : xs) p.emplace_back(x);
  return p;
}

/// The hexagon tiled by three rhombi around its centre.
inline SubdivisionComplex hexagon_tiling() {
  LabelSet g = LabelSet::range(3);
  std::vector<Point> ring{pt({2, 1, 0}), pt({2, 0, 1}), pt({1, 0, 2}), pt({0, 1, 2}), pt({0, 2, 1}), pt({1, 2, 0})};
  Point c = pt({1, 1, 1});
  SubdivisionComplex k{"hexagon-rhombi", Cell::of(gp_from_vertices(g, ring)), {}};
  for (int i = 0; i < 6; i += 2)
    k.cells.push_back(Cell::of(gp_from_vertices(
        g, {c, ring[static_cast<std::size_t>(i)], ring[static_cast<std::size_t>(i + 1)],
            ring[static_cast<std::size_t>((i + 2) % 6)]})));
  for (int i = 0; i < 6; i += 2) k.cells.push_back(Cell::of(gp_from_vertices(g, {c, ring[static_cast<std::size_t>(i)]})));
  k.cells.push_back(Cell::of(gp_from_vertices(g, {c})));
  return k;
}

inline SubdivisionComplex segment_split() {
  LabelSet g = LabelSet::range(2);
  return {"segment-split",
          Cell::of(gp_from_vertices(g, {pt({0, 2}), pt({2, 0})})),
          {Cell::of(gp_from_vertices(g, {pt({0, 2}), pt({1, 1})})),
           Cell::of(gp_from_vertices(g, {pt({1, 1}), pt({2, 0})})), Cell::of(gp_from_vertices(g, {pt({1, 1})}))}};
}

inline RelationTerm cone_term(const Preposet& q, const Point& apex, Rational coeff) {
  return {WeightedPreposet::from_point(q, apex), HopfObject(q), std::move(coeff)};
}

/// Antichain cone at (3/2, -1) on {1,2}: point = ray + ray - line.
inline IndicatorRelation point_cone_straightening() {
  LabelSet g = LabelSet::range(2);
  Point apex{Rational(3, 2), Rational(-1)};
  IndicatorRelation r{"point-cone-straightening", {}};
  r.terms.push_back(cone_term(Preposet::antichain(g), apex, Rational(1)));
  r.terms.push_back(cone_term(Preposet(g, {{Label("1"), Label("2")}}), apex, Rational(-1)));
  r.terms.push_back(cone_term(Preposet(g, {{Label("2"), Label("1")}}), apex, Rational(-1)));
  r.terms.push_back(cone_term(Preposet(g, {{Label("1"), Label("2")}, {Label("2"), Label("1")}}), apex, Rational(1)));
  return r;
}

/// Four-term relations p1 - p2 - p3 + p4 among cones of posets on three
/// elements at the origin, found by comparing canonical forms.
inline std::vector<IndicatorRelation> poset_cone_relations() {
  auto ps = all_posets(3);
  const Point origin(3, Rational(0));
  std::vector<WeightedPreposet> cones;
  std::vector<FormalSum<WeightedOSP>> phi;
  for (const auto& p : ps) {
    cones.push_back(WeightedPreposet::from_point(p, origin));
    phi.push_back(canonical_form(cones.back()));
  }
  std::set<std::vector<std::pair<std::size_t, int>>> seen;
  std::vector<IndicatorRelation> out;
  const std::size_t n = ps.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t d = a + 1; d < n; ++d)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c) {
          if (b == a || b == d || c == a || c == d) continue;
          if (!(phi[a] - phi[b] - phi[c] + phi[d]).is_zero()) continue;
          std::vector<std::pair<std::size_t, int>> key{{a, 1}, {b, -1}, {c, -1}, {d, 1}};
          std::sort(key.begin(), key.end());
          if (key.front().second < 0)
            for (auto& e : key) e.second = -e.second;
          if (!seen.insert(key).second) continue;
          IndicatorRelation r{"poset-cones-" + std::to_string(out.size() + 1), {}};
          for (auto [i, s] : key) r.terms.push_back(cone_term(ps[i], origin, Rational(s)));
          out.push_back(std::move(r));
        }
  return out;
}

}  // namespace detail

/// Stored subdivisions: the U_{2,4} split and its relabelings, GP tilings,
/// and trivial subdivisions of a matroid polytope and a nestohedron.
inline std::vector<SubdivisionComplex> builtin_subdivisions() {
  std::vector<SubdivisionComplex> out;
  SubdivisionComplex base = detail::u24_split();
  std::set<std::set<Matroid>> seen;
  auto cell_set = [](const SubdivisionComplex& k) {
    std::set<Matroid> s;
    for (const auto& c : k.cells) s.insert(std::get<Matroid>(*c.source));
    return s;
  };
  seen.insert(cell_set(base));
  out.push_back(base);
  for (const auto& perm : permutations(4)) {
    std::map<Label, Label> rename;
    std::string tag;
    for (int i = 0; i < 4; ++i) {
      rename.emplace(Label(std::to_string(i + 1)), Label(std::to_string(perm[static_cast<std::size_t>(i)] + 1)));
      tag += std::to_string(perm[static_cast<std::size_t>(i)] + 1);
    }
    SubdivisionComplex k{"u24-split/" + tag, detail::relabel_cell(base.parent, rename), {}};
    for (const auto& c : base.cells) k.cells.push_back(detail::relabel_cell(c, rename));
    if (seen.insert(cell_set(k)).second) out.push_back(std::move(k));
  }
  out.push_back(detail::segment_split());
  out.push_back(detail::hexagon_tiling());
  {
    Cell p = Cell::of(Matroid::uniform(2, 4));
    out.push_back({"trivial-u24", p, {p}});
  }
  {
    LabelSet g = LabelSet::range(3);
    Cell p = Cell::of(BuildingSet::graphical(g, {{Label("1"), Label("2")}, {Label("2"), Label("3")}}));
    out.push_back({"trivial-path3", p, {p}});
  }
  return out;
}

/// Every built-in relation: the stored subdivisions plus the cone relations.
inline std::vector<IndicatorRelation> builtin_relations() {
  std::vector<IndicatorRelation> out;
  for (const auto& k : builtin_subdivisions()) out.push_back(k.to_relation());
  out.push_back(detail::point_cone_straightening());
  for (auto& r : detail::poset_cone_relations()) out.push_back(std::move(r));
  return out;
}

inline std::optional<SubdivisionComplex> find_builtin_subdivision(const std::string& name) {
  for (auto& k : builtin_subdivisions())
    if (k.name == name) return k;
  return std::nullopt;
}

}  // namespace gpval
