#include <gtest/gtest.h>

#include "krchar/char_formula.hpp"
#include "krchar/weyl.hpp"

using namespace krchar;

namespace {

// Oracle: χ(L(λ)) = J(e^{λ+ρ}) / (e^ρ Π_{α>0}(1 − e^{−α})), divided out one
// binomial at a time.
GroupRingElement alternant_character(const RootDatum& d, const Weight& lambda) {
  const NodeSet all = NodeSet::all(d.rank());
  GroupRingElement x = alternating_sum_over_parabolic(d, all, lambda + d.rho());
  for (const auto& root : d.positive_roots()) x = divide_exact(x, d.to_weight(root));
  GroupRingElement out(d.rank());
  for (const auto& [w, c] : x.terms()) out.add_term(w - d.rho(), c);
  return out;
}

}  // namespace

TEST(Freudenthal, TypeA1Strings) {
  const RootDatum a1(LieType::parse("A1"));
  for (int m = 0; m <= 6; ++m) {
    const GroupRingElement chi = irreducible_character(a1, Weight(1, {m}));
    EXPECT_EQ(chi.size(), std::size_t(m + 1));
    for (int k = -m; k <= m; k += 2) EXPECT_EQ(chi.coefficient(Weight(1, {k})), 1);
  }
  GroupRingElement expected(1);
  for (int k : {2, 0, -2}) expected.add_term(Weight(1, {k}), BigInt(1));
  EXPECT_EQ(irreducible_character(a1, Weight(1, {2})), expected);
}

TEST(Freudenthal, A2Adjoint) {
  const RootDatum a2(LieType::parse("A2"));
  const auto table = freudenthal(a2, a2.rho());
  EXPECT_EQ(table.multiplicity(a2, Weight::zero(2)), 2);
  EXPECT_EQ(total_dimension(a2, table), 8);
}

TEST(Freudenthal, TrivialAndFundamental) {
  const RootDatum a3(LieType::parse("A3"));
  EXPECT_EQ(irreducible_character(a3, Weight::zero(3)), GroupRingElement::one(3));
  const GroupRingElement chi = irreducible_character(a3, a3.fundamental_weight(2));
  EXPECT_EQ(chi.size(), 6u);
  for (const auto& [w, c] : chi.terms()) EXPECT_EQ(c, 1);
}

TEST(Freudenthal, MatchesAlternantOracle) {
  for (const char* name : {"A2", "B2", "G2", "A3", "B3", "C3"}) {
    const RootDatum d(LieType::parse(name));
    for (int a = 1; a <= d.rank(); ++a)
      for (int m = 1; m <= 2; ++m) {
        const Weight lambda = m * d.fundamental_weight(a);
        EXPECT_EQ(irreducible_character(d, lambda), alternant_character(d, lambda)) << name << " " << a;
      }
    EXPECT_EQ(irreducible_character(d, d.rho()), alternant_character(d, d.rho())) << name;
  }
}

TEST(Freudenthal, DepthIsSound) {
  for (const char* name : {"A3", "B3", "C3", "G2"}) {
    const RootDatum d(LieType::parse(name));
    const Weight lambda = 2 * d.rho();
    const GroupRingElement full = irreducible_character(d, lambda);
    for (int depth = 0; depth <= 6; ++depth) {
      const GroupRingElement cut = irreducible_character(d, lambda, depth);
      GroupRingElement expected(d.rank());
      for (const auto& [w, c] : full.terms())
        if (d.to_root_coords(lambda - w).integer_height() <= depth) expected.add_term(w, c);
      EXPECT_EQ(cut, expected) << name << " depth " << depth;
    }
  }
}

TEST(Freudenthal, CharactersAreWeylInvariant) {
  const RootDatum a2(LieType::parse("A2"));
  const GroupRingElement adj = irreducible_character(a2, a2.rho());
  for (int a = 1; a <= 2; ++a) EXPECT_EQ(apply_weyl_word(a2, WeylWord{{a}, -1}, adj), adj);
  const RootDatum f4(LieType::parse("F4"));
  const GroupRingElement chi = irreducible_character(f4, f4.fundamental_weight(4));
  for (int a = 1; a <= 4; ++a) EXPECT_EQ(apply_weyl_word(f4, WeylWord{{a}, -1}, chi), chi);
}

TEST(WeylDimension, KnownDimensions) {
  const RootDatum a1(LieType::parse("A1"));
  for (int m = 0; m < 5; ++m) EXPECT_EQ(weyl_dimension(a1, Weight(1, {m})), m + 1);
  EXPECT_EQ(weyl_dimension(a1, Weight::zero(1)), 1);
  const RootDatum f4(LieType::parse("F4"));
  EXPECT_EQ(weyl_dimension(f4, f4.fundamental_weight(4)), 26);
  EXPECT_EQ(weyl_dimension(f4, f4.fundamental_weight(1)), 52);
  const RootDatum e8(LieType::parse("E8"));
  EXPECT_EQ(weyl_dimension(e8, e8.fundamental_weight(7)), 248);
  EXPECT_EQ(weyl_dimension(e8, e8.fundamental_weight(1)), 3875);
  const RootDatum e6(LieType::parse("E6"));
  EXPECT_EQ(weyl_dimension(e6, e6.fundamental_weight(1)), 27);
  const RootDatum e7(LieType::parse("E7"));
  EXPECT_EQ(weyl_dimension(e7, e7.fundamental_weight(6)), 56);
  EXPECT_EQ(weyl_dimension(e7, e7.fundamental_weight(1)), 133);
  const RootDatum g2(LieType::parse("G2"));
  EXPECT_EQ(weyl_dimension(g2, g2.fundamental_weight(2)), 7);
  EXPECT_EQ(weyl_dimension(g2, g2.fundamental_weight(1)), 14);
}

TEST(Freudenthal, TotalsMatchWeylDimension) {
  for (const auto& t : all_lie_types()) {
    const RootDatum d(t);
    for (int a = 1; a <= d.rank(); ++a) {
      if (weyl_dimension(d, d.fundamental_weight(a)) > 200000) continue;
      const auto table = freudenthal(d, d.fundamental_weight(a));
      EXPECT_EQ(total_dimension(d, table), weyl_dimension(d, d.fundamental_weight(a))) << t.name() << " " << a;
    }
  }
}

TEST(WeightsOfIrrep, Supports) {
  const RootDatum a1(LieType::parse("A1"));
  EXPECT_EQ(weights_of_irrep(a1, 1), (std::vector<Weight>{Weight(1, {1}), Weight(1, {-1})}));
  const RootDatum a2(LieType::parse("A2"));
  EXPECT_EQ(weights_of_irrep(a2, 1).size(), 3u);
  const RootDatum e8(LieType::parse("E8"));
  // 3875 = 2160 + 240·6 + 35·1 (orbit sizes times multiplicities)
  EXPECT_EQ(weights_of_irrep(e8, 1).size(), 2160u + 240u + 1u);
}
