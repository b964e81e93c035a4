#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"

using namespace gpval;

namespace {

LabelSet labels(std::initializer_list<int> xs) {
  std::vector<Label> v;
  for (int x : xs) v.emplace_back(x);
  return LabelSet(std::move(v));
}

SubmodularGP u(int r, int n) { return to_gp(Matroid::uniform(r, n)); }

ExponentPoly mono(int c, int x1, int y1, int x2, int y2) {
  return ExponentPoly::monomial({Rational(x1), Rational(y1), Rational(x2), Rational(y2)}, Rational(c));
}

long long linear_extension_count(const Poset& p) {
  long long count = 0;
  for (const auto& order : permutations(p.n()))
    if (is_properly_labelled(p, order)) ++count;
  return count;
}

std::vector<SubmodularGP> sample_polytopes() {
  return {u(1, 2),
          u(2, 4),
          nestohedron(BuildingSet::complete(LabelSet::range(3))),
          SubmodularGP::from_function(LabelSet::range(3), [](Mask a) { return Rational(popcount(a) * (7 - popcount(a)), 4); })};
}

}  // namespace

TEST(Character, Multiplicative) {
  Character anti = antichain_character();
  Character bjr = bjr_matroid_character();
  Poset p = oracle::poset(2, {});
  Preposet q(labels({3, 4}), {{Label(3), Label(4)}});
  for (const auto& [xy, c] : product(HopfObject(Preposet(p)), HopfObject(q)))
    EXPECT_EQ(anti(xy), anti(HopfObject(Preposet(p))) * anti(HopfObject(q)));
  for (const auto& a : all_matroids(2))
    for (const auto& b : all_matroids(2)) {
      Matroid bb = b.relabel({{Label(1), Label(3)}, {Label(2), Label(4)}});
      for (const auto& [xy, c] : product(HopfObject(a), HopfObject(bb)))
        EXPECT_EQ(bjr(xy), bjr(HopfObject(a)) * bjr(HopfObject(bb)));
    }
  EXPECT_THROW(find_character("norm"), InputError);
  EXPECT_THROW(find_character("nope"), InputError);
  EXPECT_THROW(anti(HopfObject(Matroid::uniform(1, 2))), InputError);
}

TEST(Convolution, SingleFactorAndUniversalTutte) {
  Character anti = antichain_character();
  Poset c = Poset::chain(LabelSet::range(2));
  EXPECT_EQ(convolve<Rational>({anti.eval}, HopfObject(Preposet(c))), Rational(0));
  EXPECT_EQ(convolve<Rational>({anti.eval}, HopfObject(Preposet(Poset::antichain(LabelSet::range(2))))), Rational(1));
  for (int k = 1; k <= 4; ++k) {
    std::vector<std::function<Rational(const HopfObject&)>> fs(static_cast<std::size_t>(k), anti.eval);
    EXPECT_EQ(convolve<Rational>(fs, HopfObject(Preposet(c))), binomial(k, 2));
  }
  for (const auto& p : sample_polytopes()) EXPECT_EQ(universal_tutte_convolution(p), universal_tutte(p));
}

TEST(PolynomialInvariant, Examples) {
  EXPECT_EQ(polynomial_invariant(antichain_character(), HopfObject(Preposet(Poset::chain(LabelSet::range(3))))),
            binomial_poly(3));
  for (int n = 0; n <= 3; ++n)
    for (const auto& m : all_matroids(n))
      EXPECT_EQ(polynomial_invariant(one_character(), HopfObject(m)), poly_pow(var_t(), n));
  EXPECT_EQ(polynomial_invariant(bjr_matroid_character(), HopfObject(Matroid::uniform(0, 0))), UniPoly(1));
}

TEST(QSymInvariant, BjrAndPrincipalSpecialization) {
  QSymMonomial two;
  two.add({1, 1}, Rational(2));
  EXPECT_EQ(qsym_invariant(bjr_matroid_character(), HopfObject(Matroid::uniform(1, 2))), two);
  EXPECT_EQ(qsym_invariant(bjr_matroid_character(), HopfObject(Matroid::uniform(1, 1))), QSymMonomial(std::vector<int>{1}));
  std::vector<std::pair<Character, HopfObject>> cases;
  for (const auto& m : all_matroids(3)) cases.emplace_back(bjr_matroid_character(), HopfObject(m));
  for (const auto& p : all_posets(3)) cases.emplace_back(antichain_character(), HopfObject(Preposet(p)));
  for (const auto& q : all_preposets(3)) cases.emplace_back(preantichain_character(), HopfObject(q));
  for (const auto& [zeta, x] : cases) {
    UniPoly ps = principal_specialization(qsym_invariant(zeta, x));
    UniPoly poly = polynomial_invariant(zeta, x);
    for (int t = 0; t <= 4; ++t) EXPECT_EQ(eval(ps, Rational(t)), eval(poly, Rational(t)));
    EXPECT_EQ(ps, poly);
  }
}

TEST(OspInvariant, CoefficientsAreCharacterProducts) {
  Character bjr = bjr_matroid_character();
  Matroid m = oracle::matroid(3, {{1, 2}, {1, 3}});
  auto inv = osp_invariant(bjr, HopfObject(m));
  for (const auto& blocks : ordered_partitions(m.full())) {
    Rational v(1);
    Mask prefix = 0;
    for (Mask b : blocks) {
      v *= bjr_character(m.minor(prefix, prefix | b));
      prefix |= b;
    }
    EXPECT_EQ(inv.coeff(OSP::from_masks(m.ground(), blocks)), v);
  }
  auto u12 = osp_invariant(bjr, HopfObject(Matroid::uniform(1, 2)));
  EXPECT_EQ(u12.size(), 2U);
  EXPECT_EQ(u12.coeff(OSP::parse("1|2")), Rational(1));
}

TEST(Antipode, FaceSum) {
  LabelSet one{Label(1)};
  SubmodularGP pt = SubmodularGP::point(one, {Rational(3)});
  EXPECT_EQ(antipode_face_sum(pt), FormalSum<SubmodularGP>(pt, Rational(-1)));
  auto seg = antipode_face_sum(u(1, 2));
  EXPECT_EQ(seg.size(), 3U);
  EXPECT_EQ(seg.coeff(u(1, 2)), Rational(-1));
  EXPECT_EQ(seg.coeff(SubmodularGP::point(LabelSet::range(2), {Rational(1), Rational(0)})), Rational(1));
  EXPECT_EQ(seg.coeff(SubmodularGP::point(LabelSet::range(2), {Rational(0), Rational(1)})), Rational(1));
}

TEST(Antipode, RelativeInteriorIndicator) {
  std::mt19937_64 rng(29);
  for (int n = 1; n <= 3; ++n)
    for (const auto& m : all_matroids(n)) {
      SubmodularGP p = to_gp(m);
      auto e = indicator_expansion(antipode_face_sum(p));
      const Rational sign(minus_one_pow(n - p.dimension()));
      for (const auto& x : oracle::sample_on_hyperplane(n, p.z(p.full()), p.vertices(), 60, rng))
        EXPECT_EQ(evaluate_indicators(e, p.ground(), x), p.relint_contains(x) ? sign : Rational(0)) << m.str();
    }
}

TEST(UniversalTutte, Examples) {
  EXPECT_EQ(universal_norm(u(1, 2)), mono(1, 2, 1, 0, 0));
  EXPECT_EQ(universal_norm(u(1, 2), 2), mono(1, 0, 0, 2, 1));
  EXPECT_EQ(universal_tutte(u(1, 2)), mono(1, 0, 0, 2, 1) + mono(2, 1, 1, 1, 0) + mono(1, 2, 1, 0, 0));
  SubmodularGP half = SubmodularGP::from_function(LabelSet::range(1), [](Mask a) { return Rational(popcount(a), 2); });
  EXPECT_EQ(universal_tutte(half).terms().rbegin()->first[1], Rational(1, 2));
  EXPECT_THROW(universal_norm(u(1, 2), 3), InputError);
}

TEST(UniversalTutte, MatroidSpecialization) {
  for (int n = 0; n <= 4; ++n)
    for (const auto& m : all_matroids(n))
      EXPECT_EQ(matroid_tutte_specialization(universal_tutte(to_gp(m))), tutte(m)) << m.str();
}

TEST(UniversalTutte, NormIsGrothendieckMultiplicative) {
  for (const auto& p : sample_polytopes())
    for_each_subset(p.full(), [&](Mask s) {
      auto [a, b] = restrict_contract(p, s);
      EXPECT_EQ(universal_norm(p), universal_norm(a) * universal_norm(b));
    });
}

TEST(PosetCharacters, Values) {
  EXPECT_EQ(antichain_char(Poset::antichain(LabelSet::range(3))), Rational(1));
  EXPECT_EQ(antichain_char(Poset::chain(LabelSet::range(2))), Rational(0));
  Preposet one(LabelSet::range(2), {{Label(1), Label(2)}, {Label(2), Label(1)}});
  EXPECT_EQ(preantichain_char(one), Rational(-1));
  for (int n = 0; n <= 3; ++n)
    for (const auto& p : all_posets(n)) EXPECT_EQ(preantichain_char(p), antichain_char(p));
}

TEST(PosetCharacters, PrelinearExpansion) {
  for (int n = 0; n <= 4; ++n)
    for (const auto& q : all_preposets(n)) {
      Rational rhs(0);
      for (const auto& [l, sign] : prelinear_extensions(q)) rhs += Rational(sign) * preantichain_char(Preposet::from_osp(l));
      EXPECT_EQ(preantichain_char(q), rhs) << q.str();
    }
}

TEST(PosetCharacters, PosetConesSpanTotalCones) {
  for (const auto& p : all_posets(3)) {
    auto phi = canonical_form(WeightedPreposet(p, std::vector<Rational>(3, Rational(0))));
    EXPECT_FALSE(phi.is_zero());
    for (const auto& [d, c] : phi) EXPECT_EQ(d.ground(), p.ground());
  }
}

TEST(OrderPolynomial, Examples) {
  EXPECT_EQ(order_polynomial(Poset::antichain(LabelSet::range(2)), false), poly_pow(var_t(), 2));
  EXPECT_EQ(order_polynomial(Poset::chain(LabelSet::range(3)), true), binomial_poly(3));
  // weakly increasing maps of a 3-chain: C(t + 2, 3)
  UniPoly shifted(1);
  for (int i = -2; i <= 0; ++i) shifted *= var_t() - UniPoly(i);
  EXPECT_EQ(order_polynomial(Poset::chain(LabelSet::range(3)), false), UniPoly(Rational(1, 6)) * shifted);
}

TEST(OrderPolynomial, ReciprocityAndCounting) {
  for (int n = 0; n <= 4; ++n)
    for (const auto& p : all_posets(n)) {
      UniPoly strict = order_polynomial(p, true), weak = order_polynomial(p, false);
      for (int k = 0; k <= n + 1; ++k) {
        EXPECT_EQ(eval(strict, Rational(k)), Rational(oracle::count_order_maps(p, k, true))) << p.str() << " k=" << k;
        EXPECT_EQ(eval(weak, Rational(k)), Rational(oracle::count_order_maps(p, k, false))) << p.str() << " k=" << k;
        EXPECT_EQ(eval(weak, Rational(k)), Rational(minus_one_pow(n)) * eval(strict, Rational(-k)));
      }
    }
}

TEST(PosetTutte, Examples) {
  BiPoly x1 = BiPoly(1) + BiPoly::monomial({1, 0});
  EXPECT_EQ(poset_tutte(Poset::antichain(LabelSet::range(3))), poly_pow(x1, 3));
  EXPECT_EQ(poset_tutte(Poset::chain(LabelSet::range(2))), oracle::xy({{1, 0, 0}, {1, 1, 0}, {1, 2, 1}, {1, 2, 0}}));
  for (int n = 1; n <= 4; ++n)
    for (const auto& p : all_posets(n)) {
      // T_P(t, -1) = (1 + t)^{#minimal elements}
      UniPoly at;
      for (const auto& [e, c] : poset_tutte(p)) at.add(e.first, c * Rational(minus_one_pow(e.second)));
      int mins = 0;
      for (int i = 0; i < n; ++i) mins += p.down(i) == (1U << i);
      EXPECT_EQ(at, poly_pow(UniPoly(1) + var_t(), mins)) << p.str();
    }
}

TEST(Transversal, Partitions) {
  EXPECT_EQ(transversal_partitions(Poset::antichain(LabelSet::range(3)), false).size(), 5U);
  for (int n = 1; n <= 4; ++n) {
    Poset c = Poset::chain(LabelSet::range(n));
    auto ord = transversal_partitions(c, true);
    ASSERT_EQ(ord.size(), 1U);
    for (int i = 0; i < n; ++i) EXPECT_EQ(ord[0][static_cast<std::size_t>(i)], 1U << i);
  }
  for (const auto& p : all_posets(4))
    EXPECT_GE(transversal_partitions(p, true).size(), transversal_partitions(p, false).size());
}

TEST(Poincare, Examples) {
  EXPECT_EQ(poincare(Poset::antichain(LabelSet::range(3))), oracle::t_poly({1, 3, 2}));
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(poincare(Poset::chain(LabelSet::range(n))), UniPoly(1));
}

TEST(Poincare, MobiusOracleAndChambers) {
  for (int n = 0; n <= 4; ++n)
    for (const auto& p : all_posets(n)) {
      EXPECT_EQ(poincare(p), oracle::poincare_mobius(p)) << p.str();
      EXPECT_EQ(eval(poincare(p), Rational(1)), Rational(linear_extension_count(p))) << p.str();
    }
}

TEST(Poincare, ProperOrderingMap) {
  // Sorting the parts of an unordered transversal partition by their l-minimum
  // is injective and hits every proper transversal ordering. It is onto exactly
  // when every sorted ordering stays transversal, and then phi_ell = Poin.
  int onto = 0, pairs = 0;
  for (int n = 1; n <= 4; ++n)
    for (const auto& p : all_posets(n))
      for (const auto& ell : permutations(n)) {
        if (!is_properly_labelled(p, ell)) continue;
        ++pairs;
        std::vector<int> rank(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) rank[static_cast<std::size_t>(ell[static_cast<std::size_t>(k)])] = k;
        auto min_rank = [&](Mask b) {
          int r = n;
          for (int i = 0; i < n; ++i)
            if (b & (1U << i)) r = std::min(r, rank[static_cast<std::size_t>(i)]);
          return r;
        };
        auto ordered = transversal_partitions(p, true);
        std::set<std::vector<Mask>> transversal(ordered.begin(), ordered.end()), proper;
        for (const auto& parts : ordered) {
          bool ok = true;
          for (std::size_t i = 0; i + 1 < parts.size(); ++i) ok = ok && min_rank(parts[i]) < min_rank(parts[i + 1]);
          if (ok) proper.insert(parts);
        }
        auto unordered = transversal_partitions(p, false);
        std::set<std::vector<Mask>> image;
        for (auto parts : unordered) {
          std::sort(parts.begin(), parts.end(), [&](Mask a, Mask b) { return min_rank(a) < min_rank(b); });
          image.insert(parts);
        }
        EXPECT_EQ(image.size(), unordered.size()) << p.str();
        EXPECT_TRUE(std::includes(image.begin(), image.end(), proper.begin(), proper.end())) << p.str();
        bool sorted_transversal = std::includes(transversal.begin(), transversal.end(), image.begin(), image.end());
        EXPECT_EQ(sorted_transversal, image == proper) << p.str();
        EXPECT_EQ(sorted_transversal, phi_ell(p, ell) == poincare(p)) << p.str();
        if (sorted_transversal) ++onto;
      }
  EXPECT_EQ(pairs, 4 + 42 + 960 + 1);
  EXPECT_EQ(onto, 1 + 4 + 36 + 576);
}

TEST(Poincare, LinearExtensionAloneIsNotEnough) {
  // 1<3 on {1,2,3} with l = 2,1,3: the part {2,3} holds the l-minimum but is
  // not a lower ideal, so {1},{2,3} has no proper transversal ordering
  Poset p = oracle::poset(3, {{1, 3}});
  std::vector<int> ell{1, 0, 2};
  ASSERT_TRUE(is_properly_labelled(p, ell));
  EXPECT_EQ(poincare(p), oracle::t_poly({1, 2}));
  EXPECT_EQ(phi_ell(p, ell), oracle::t_poly({1, 1}));
  EXPECT_EQ(phi_ell(p, {0, 1, 2}), poincare(p));

  // two disjoint chains: no linear extension gives Poin
  Poset q = oracle::poset(4, {{1, 3}, {2, 4}});
  EXPECT_EQ(poincare(q), oracle::t_poly({1, 4, 1}));
  int extensions = 0;
  for (const auto& l : permutations(4)) {
    if (!is_properly_labelled(q, l)) continue;
    ++extensions;
    EXPECT_NE(phi_ell(q, l), poincare(q));
  }
  EXPECT_EQ(extensions, 6);
}
