// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic
// throughout. Exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"

using namespace gpval;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  int checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

Matroid matroid_without(std::initializer_list<Mask> drop) {
  std::vector<Mask> b = Matroid::uniform(2, 4).bases();
  for (Mask d : drop) std::erase(b, d);
  return Matroid(LabelSet::range(4), b);
}

SubmodularGP permutahedron3() { return nestohedron(BuildingSet::complete(LabelSet::range(3))); }

/// Corank-nullity sum over all subsets.
BiPoly tutte_corank_nullity(const Matroid& m) {
  BiPoly x1 = BiPoly::monomial({1, 0}) - BiPoly(1), y1 = BiPoly::monomial({0, 1}) - BiPoly(1);
  BiPoly t;
  for (Mask a = 0; a <= m.full(); ++a) {
    BiPoly term(1);
    for (int k = 0; k < m.rank() - m.rank(a); ++k) term = term * x1;
    for (int k = 0; k < popcount(a) - m.rank(a); ++k) term = term * y1;
    t += term;
    if (a == m.full()) break;
  }
  return t;
}

std::map<Label, Label> shift_labels(const LabelSet& g, int by) {
  std::map<Label, Label> r;
  for (int i = 0; i < g.size(); ++i) r.emplace(g[i], Label(static_cast<long long>(i + 1 + by)));
  return r;
}

WeightedPreposet cone_restrict(const WeightedPreposet& c, Mask s) {
  const Preposet r = c.preposet().restrict(s);
  Point apex = c.apex(), part;
  for (int i = 0; i < c.preposet().n(); ++i)
    if (s & (1U << i)) part.push_back(apex[static_cast<std::size_t>(i)]);
  return WeightedPreposet::from_point(r, part);
}

/// Cone of the disjoint union at the concatenated apex; b is relabeled
/// to follow a.
WeightedPreposet cone_product(const WeightedPreposet& a, const WeightedPreposet& b) {
  auto rename = shift_labels(b.ground(), a.ground().size());
  std::vector<Label> all;
  for (int i = 0; i < a.ground().size(); ++i) all.push_back(a.ground()[i]);
  for (int i = 0; i < b.ground().size(); ++i) all.push_back(rename.at(b.ground()[i]));
  std::vector<std::pair<Label, Label>> rel = a.preposet().relations();
  for (const auto& [x, y] : b.preposet().relations()) rel.emplace_back(rename.at(x), rename.at(y));
  Point apex = a.apex();
  for (const auto& v : b.apex()) apex.push_back(v);
  return WeightedPreposet::from_point(Preposet(LabelSet(std::move(all)), rel), apex);
}

WeightedPreposet relabeled_cone(const WeightedPreposet& b, int by) {
  auto rename = shift_labels(b.ground(), by);
  std::vector<Label> g;
  for (int i = 0; i < b.ground().size(); ++i) g.push_back(rename.at(b.ground()[i]));
  std::vector<std::pair<Label, Label>> rel;
  for (const auto& [x, y] : b.preposet().relations()) rel.emplace_back(rename.at(x), rename.at(y));
  return WeightedPreposet::from_point(Preposet(LabelSet(std::move(g)), rel), b.apex());
}

std::vector<WeightedPreposet> weighted_cones(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  std::vector<WeightedPreposet> out;
  for (const auto& q : all_preposets(n)) {
    std::vector<Rational> w;
    for (int k = 0; k < q.class_count(); ++k) w.emplace_back(num(rng), den(rng));
    out.emplace_back(q, w);
  }
  return out;
}

std::vector<BuildingSet> all_building_sets(int n) {
  const LabelSet g = LabelSet::range(n);
  std::vector<Mask> big;
  for (Mask m = 1; m <= g.full(); ++m)
    if (popcount(m) > 1) big.push_back(m);
  std::set<BuildingSet> seen;
  for (Mask pick = 0; pick < (Mask{1} << big.size()); ++pick) {
    std::vector<Mask> gen;
    for (std::size_t k = 0; k < big.size(); ++k)
      if (pick & (Mask{1} << k)) gen.push_back(big[k]);
    seen.insert(BuildingSet::closure(g, gen));
  }
  return {seen.begin(), seen.end()};
}

std::vector<BuildingSet> graphical_building_sets(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  std::vector<BuildingSet> out;
  for (Mask pick = 0; pick < (Mask{1} << pairs.size()); ++pick) {
    std::vector<std::pair<Label, Label>> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (pick & (Mask{1} << k)) edges.emplace_back(Label(pairs[k].first), Label(pairs[k].second));
    out.push_back(BuildingSet::graphical(LabelSet::range(n), edges));
  }
  return out;
}

/// The relation a subdivision of `parent` into `cells` would satisfy:
/// every distinct face of a cell that is top-dimensional or meets the
/// relative interior of the parent, with sign (-1)^codim.
FormalSum<SubmodularGP> subdivision_side(const SubmodularGP& parent, const std::vector<SubmodularGP>& cells) {
  FormalSum<SubmodularGP> rhs;
  std::set<SubmodularGP> seen;
  const int d = parent.dimension();
  for (const auto& c : cells)
    for (const auto& f : faces(c)) {
      if (!seen.insert(f.gp).second) continue;
      if (f.dimension == d || parent.relint_contains(barycenter(f.vertices)))
        rhs.add(f.gp, Rational(minus_one_pow(d - f.dimension)));
    }
  return rhs;
}

std::vector<Rational> coefficients(const FormalSum<WeightedOSP>& f, std::map<WeightedOSP, std::size_t>& key) {
  for (const auto& [d, c] : f) key.try_emplace(d, key.size());
  std::vector<Rational> row(key.size(), Rational(0));
  for (const auto& [d, c] : f) row[key.at(d)] = c;
  return row;
}

// 1
Outcome hypersimplex_split() {
  Outcome o;
  Matroid u24 = Matroid::uniform(2, 4), m1 = matroid_without({0b0011}), m2 = matroid_without({0b1100}),
          m12 = matroid_without({0b0011, 0b1100});
  FormalSum<SubmodularGP> rel;
  rel.add(to_gp(u24), Rational(1));
  rel.add(to_gp(m1), Rational(-1));
  rel.add(to_gp(m2), Rational(-1));
  rel.add(to_gp(m12), Rational(1));
  o.expect(canonical_form(rel).is_zero(), "canonical form of the split relation is nonzero");
  std::mt19937_64 rng(1);
  int points = 0;
  for (const auto& x : oracle::sample_on_hyperplane(4, Rational(2), to_gp(u24).vertices(), 250, rng)) {
    o.expect(evaluate_indicators(rel, x).is_zero(), "indicator sum nonzero at a sample point");
    ++points;
  }
  auto split = *find_builtin_subdivision("u24-split");
  auto r = split.to_relation();
  auto pts = sample_points(r, 200);
  o.expect(pointwise_violations(r, pts).empty(), "stored split fails pointwise");
  points += static_cast<int>(pts.size());
  o.detail = o.pass ? std::to_string(points) + " points" : o.detail;
  return o;
}

// 2
Outcome tutte_identity() {
  Outcome o;
  Matroid u24 = Matroid::uniform(2, 4), m1 = matroid_without({0b0011}), m2 = matroid_without({0b1100}),
          m12 = matroid_without({0b0011, 0b1100});
  for (const auto& m : {u24, m1, m2, m12})
    o.expect(tutte(m) == tutte_corank_nullity(m), "tutte differs from corank-nullity on " + m.str());
  BiPoly lhs = oracle::xy({{1, 2, 0}, {2, 1, 0}, {2, 0, 1}, {1, 0, 2}});
  BiPoly cell = oracle::xy({{1, 2, 0}, {1, 1, 1}, {1, 0, 2}, {1, 1, 0}, {1, 0, 1}});
  BiPoly shared = oracle::xy({{1, 2, 0}, {2, 1, 1}, {1, 0, 2}});
  o.expect(lhs == BiPoly(2) * cell - shared, "displayed polynomial identity");
  o.expect(tutte(u24) == lhs && tutte(m1) == cell && tutte(m2) == cell && tutte(m12) == shared, "cell polynomials");
  o.expect(tutte(u24) == tutte(m1) + tutte(m2) - tutte(m12), "split identity");
  return o;
}

// 3
Outcome brianchon_gram_pointwise() {
  Outcome o;
  std::mt19937_64 rng(3);
  std::vector<SubmodularGP> polys;
  for (int n = 1; n <= 4; ++n)
    for (const auto& m : all_matroids(n)) polys.push_back(to_gp(m));
  polys.push_back(permutahedron3());
  for (const auto& p : polys) {
    auto bg = brianchon_gram(p);
    for (const auto& x : oracle::sample_on_hyperplane(p.n(), p.z(p.full()), p.vertices(), 100, rng))
      o.expect(evaluate_indicators(bg, x) == Rational(p.contains(x) ? 1 : 0), "mismatch on " + p.str());
  }
  o.detail = o.pass ? std::to_string(polys.size()) + " polytopes" : o.detail;
  return o;
}

// 4
Outcome straightening_pointwise() {
  Outcome o;
  std::mt19937_64 rng(4);
  int cones = 0;
  for (int n = 1; n <= 4; ++n)
    for (const auto& c : weighted_cones(n, rng)) {
      ++cones;
      FormalSum<WeightedPreposet> s;
      std::vector<Point> anchors{c.apex()};
      for (const auto& [d, k] : straighten(c)) {
        WeightedPreposet e = WeightedPreposet::from_wosp(d);
        anchors.push_back(e.apex());
        s.add(e, k);
      }
      for (const auto& x : oracle::sample_on_hyperplane(n, c.total_weight(), anchors, 100, rng))
        o.expect(evaluate_indicators(s, x) == Rational(weighted_cone_membership(c, x) ? 1 : 0), "mismatch on " + c.str());
    }
  o.detail = o.pass ? std::to_string(cones) + " weighted preposets" : o.detail;
  return o;
}

// 5
Outcome hopf_morphism() {
  Outcome o;
  std::mt19937_64 rng(5);
  std::map<int, std::vector<SubmodularGP>> gps;
  std::map<int, std::vector<WeightedPreposet>> cones;
  for (int n = 1; n <= 3; ++n) {
    for (const auto& m : all_matroids(n)) gps[n].push_back(to_gp(m));
    for (const auto& b : all_building_sets(n)) gps[n].push_back(nestohedron(b));
    cones[n] = weighted_cones(n, rng);
  }
  gps[2].push_back(SubmodularGP(LabelSet::range(2), {Rational(0), Rational(1, 2), Rational(1), Rational(3, 2)}));
  for (int n = 1; n <= 3; ++n) {
    for (const auto& p : gps[n])
      for_each_subset(p.full(), [&](Mask s) {
        auto [a, b] = restrict_contract(p, s);
        o.expect(coproduct(canonical_form(p), p.ground().subset(s)) == tensor(canonical_form(a), canonical_form(b)),
                 "coproduct on " + p.str());
      });
    for (const auto& c : cones[n])
      for_each_subset(c.ground().full(), [&](Mask s) {
        auto lhs = coproduct(canonical_form(c), c.ground().subset(s));
        if (!c.preposet().is_lower_ideal(s)) {
          o.expect(lhs.is_zero(), "coproduct should vanish on " + c.str());
          return;
        }
        Mask t = c.ground().full() & ~s;
        o.expect(lhs == tensor(canonical_form(cone_restrict(c, s)), canonical_form(cone_restrict(c, t))),
                 "coproduct on " + c.str());
      });
  }
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; a + b <= 3; ++b) {
      for (const auto& p : gps[a])
        for (const auto& q : gps[b]) {
          SubmodularGP r = q.relabel(shift_labels(q.ground(), a));
          o.expect(canonical_form(product(p, r)) == product(canonical_form(p), canonical_form(r)),
                   "product of " + p.str() + " and " + r.str());
        }
      for (const auto& c : cones[a])
        for (const auto& e : cones[b])
          o.expect(canonical_form(cone_product(c, e)) ==
                       product(canonical_form(c), canonical_form(relabeled_cone(e, a))),
                   "product of " + c.str() + " and " + e.str());
    }
  o.detail = o.pass ? std::to_string(o.checks) + " identities" : o.detail;
  return o;
}

// 6
Outcome antipode_interior() {
  Outcome o;
  std::mt19937_64 rng(6);
  for (int n = 1; n <= 3; ++n)
    for (const auto& m : all_matroids(n)) {
      SubmodularGP p = to_gp(m);
      auto e = indicator_expansion(antipode_face_sum(p));
      const Rational sign(minus_one_pow(n - p.dimension()));
      for (const auto& x : oracle::sample_on_hyperplane(n, p.z(p.full()), p.vertices(), 100, rng))
        o.expect(evaluate_indicators(e, p.ground(), x) == (p.relint_contains(x) ? sign : Rational(0)), m.str());
    }
  return o;
}

// 7
Outcome universal_tutte_specialization() {
  Outcome o;
  int count = 0;
  for (int n = 0; n <= 4; ++n)
    for (const auto& m : all_matroids(n)) {
      ++count;
      o.expect(matroid_tutte_specialization(universal_tutte(to_gp(m))) == tutte_corank_nullity(m), m.str());
    }
  o.detail = o.pass ? std::to_string(count) + " matroids" : o.detail;
  return o;
}

// 8
Outcome order_polynomials() {
  Outcome o;
  for (int n = 0; n <= 4; ++n)
    for (const auto& p : all_posets(n)) {
      UniPoly strict = order_polynomial(p, true), weak = order_polynomial(p, false);
      for (int k = 0; k <= n + 2; ++k) {
        o.expect(eval(strict, Rational(k)) == Rational(oracle::count_order_maps(p, k, true)), "strict count " + p.str());
        o.expect(eval(weak, Rational(k)) == Rational(oracle::count_order_maps(p, k, false)), "weak count " + p.str());
      }
      UniPoly reflected;
      for (const auto& [e, c] : strict) reflected.add(e, c * Rational(minus_one_pow(e + n)));
      o.expect(weak == reflected, "reciprocity " + p.str());
    }
  return o;
}

// 9
Outcome poincare_polynomials() {
  Outcome o;
  for (int n = 0; n <= 4; ++n)
    for (const auto& p : all_posets(n)) o.expect(poincare(p) == oracle::poincare_mobius(p), p.str());
  o.expect(poincare(Poset(Preposet::antichain(LabelSet::range(3)))) == oracle::t_poly({1, 3, 2}), "antichain on 3");
  return o;
}

// 10
Outcome nestohedron_f_polynomials() {
  Outcome o;
  int count = 0;
  for (int n = 1; n <= 4; ++n)
    for (const auto& b : graphical_building_sets(n)) {
      ++count;
      o.expect(f_polynomial(b) == f_polynomial(b, FPolyMethod::direct), b.str());
    }
  o.expect(f_polynomial(BuildingSet::simplex(LabelSet::range(3))) == oracle::t_poly({3, 3, 1}), "triangle");
  o.expect(f_polynomial(BuildingSet::complete(LabelSet::range(3))) == oracle::t_poly({6, 6, 1}), "hexagon");
  o.detail = o.pass ? std::to_string(count) + " graphs" : o.detail;
  return o;
}

// 11
Outcome catalog_on_builtins() {
  Outcome o;
  int applied = 0, relations = 0;
  for (const auto& r : builtin_relations()) {
    ++relations;
    o.expect(strong_check(r), "strong check on " + r.name);
    for (const auto& f : invariant_catalog()) {
      auto rep = weak_check(f, r);
      if (!rep.applicable) continue;
      ++applied;
      o.expect(rep.pass, f.name + " on " + r.name);
    }
  }
  for (const auto& k : builtin_subdivisions()) o.expect(k.validate().empty(), "validation of " + k.name);
  o.detail = o.pass ? std::to_string(applied) + " checks over " + std::to_string(relations) + " relations" : o.detail;
  return o;
}

// 12
Outcome no_nestohedral_subdivision() {
  Outcome o;
  // the detector recognises a genuine tiling
  auto hex = *find_builtin_subdivision("hexagon-rhombi");
  std::vector<SubmodularGP> tiles;
  for (const auto& c : hex.cells)
    if (c.dimension == hex.parent.dimension) tiles.push_back(c.gp);
  o.expect(indicator_equal(FormalSum<SubmodularGP>(hex.parent.gp), subdivision_side(hex.parent.gp, tiles)),
           "control tiling not recognised");

  std::mt19937_64 rng(20240612);
  int trials = 0;
  for (int n = 3; n <= 4; ++n) {
    auto bs = all_building_sets(n);
    std::vector<SubmodularGP> poly;
    for (const auto& b : bs) poly.push_back(nestohedron(b));
    std::map<std::size_t, FormalSum<WeightedOSP>> phi;
    auto phi_of = [&](std::size_t i) -> const FormalSum<WeightedOSP>& {
      auto it = phi.find(i);
      if (it == phi.end()) it = phi.emplace(i, canonical_form(poly[i])).first;
      return it->second;
    };
    const int rounds = n == 3 ? 120 : 60;
    std::uniform_int_distribution<std::size_t> pick(0, bs.size() - 1);
    for (int round = 0; round < rounds; ++round) {
      const std::size_t left = pick(rng);
      std::vector<std::size_t> same;
      for (std::size_t i = 0; i < bs.size(); ++i)
        if (i != left && poly[i].dimension() == poly[left].dimension()) same.push_back(i);
      const std::size_t k = 2 + round % 2;
      if (same.size() < k) continue;
      std::shuffle(same.begin(), same.end(), rng);
      same.resize(k);
      ++trials;
      // no combination of the others has the indicator function of the left
      std::map<WeightedOSP, std::size_t> key;
      std::vector<std::vector<Rational>> rows;
      for (std::size_t i : same) rows.push_back(coefficients(phi_of(i), key));
      std::vector<Rational> target = coefficients(phi_of(left), key);
      for (auto& row : rows) row.resize(key.size(), Rational(0));
      const int base = matrix_rank(rows);
      rows.push_back(target);
      o.expect(matrix_rank(rows) == base + 1, bs[left].str() + " lies in the span of other nestohedra");
      std::vector<SubmodularGP> cells;
      for (std::size_t i : same) cells.push_back(poly[i]);
      o.expect(!indicator_equal(FormalSum<SubmodularGP>(poly[left]), subdivision_side(poly[left], cells)),
               "subdivision of " + bs[left].str() + " found");
    }
  }
  o.detail = o.pass ? std::to_string(trials) + " random pairs and triples" : o.detail;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"hypersimplex split: canonical form and pointwise indicator identity", hypersimplex_split},
      {"tutte valuation identity on the split", tutte_identity},
      {"brianchon-gram pointwise, matroids n<=4 and permutahedron", brianchon_gram_pointwise},
      {"straightening pointwise, preposets n<=4", straightening_pointwise},
      {"canonical form is a hopf morphism, n<=3", hopf_morphism},
      {"antipode face sum is the signed interior indicator, n<=3", antipode_interior},
      {"universal tutte specializes to matroid tutte, n<=4", universal_tutte_specialization},
      {"order polynomial reciprocity and counting, n<=4", order_polynomials},
      {"poincare polynomial against the mobius oracle, n<=4", poincare_polynomials},
      {"nestohedron f-polynomial recurrence, graphs n<=4", nestohedron_f_polynomials},
      {"invariant catalog vanishes on builtin relations", catalog_on_builtins},
      {"no subdivision of a nestohedron into nestohedra", no_nestohedral_subdivision},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::printf("%s [%zu] %s (%s; %.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.empty() ? (std::to_string(o.checks) + " checks").c_str() : o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
