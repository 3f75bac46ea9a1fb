#include <gtest/gtest.h>

#include "krchar/char_formula.hpp"
#include "krchar/kr_tables.hpp"

using namespace krchar;

TEST(Registry, ExplicitRows) {
  const RootDatum e8(LieType::parse("E8"));
  const auto d = polyhedral_data(e8, 1);
  EXPECT_EQ(d.b, (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(d.lambdas, (std::vector<Weight>{Weight::zero(8), e8.fundamental_weight(1), e8.fundamental_weight(7)}));
  const RootDatum f4(LieType::parse("F4"));
  const auto f = polyhedral_data(f4, 4);
  EXPECT_EQ(f.b, (std::vector<int>{2, 2, 1}));
  EXPECT_EQ(f.lambdas, (std::vector<Weight>{Weight::zero(4), f4.fundamental_weight(1), f4.fundamental_weight(4)}));
  for (int r = 1; r <= 8; ++r) {
    const RootDatum a(LieType(Family::A, r));
    for (int n = 1; n <= r; ++n) {
      const auto p = polyhedral_data(a, n);
      EXPECT_EQ(p.b, std::vector<int>{1});
      EXPECT_EQ(p.lambdas, std::vector<Weight>{a.fundamental_weight(n)});
    }
  }
}

TEST(Registry, UnsupportedNodes) {
  const RootDatum e8(LieType::parse("E8"));
  for (int a : {2, 3, 4, 5, 6, 8}) EXPECT_THROW(polyhedral_data(e8, a), Unsupported);
  const RootDatum b4(LieType::parse("B4"));
  EXPECT_THROW(polyhedral_data(b4, 2), Unsupported);
  EXPECT_NO_THROW(polyhedral_data(b4, 1));
  EXPECT_FALSE(supported_pairs().empty());
}

TEST(LatticePoints, Enumeration) {
  const RootDatum a1(LieType::parse("A1"));
  EXPECT_EQ(enumerate_lattice_points(polyhedral_data(a1, 1), 3), (std::vector<std::vector<int>>{{3}}));
  const RootDatum e8(LieType::parse("E8"));
  EXPECT_EQ(enumerate_lattice_points(polyhedral_data(e8, 1), 2).size(), 6u);
  const RootDatum f4(LieType::parse("F4"));
  EXPECT_EQ(enumerate_lattice_points(polyhedral_data(f4, 4), 2),
            (std::vector<std::vector<int>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}));
}

TEST(KRCharacter, ExactSmallCases) {
  const RootDatum a1(LieType::parse("A1"));
  GroupRingElement expected(1);
  for (int k : {2, 0, -2}) expected.add_term(Weight(1, {k}), BigInt(1));
  EXPECT_EQ(kr_character_exact(a1, 1, 2), expected);
  EXPECT_EQ(format_series(kr_character_truncated(a1, 1, 2, 5)), "1 + x1 + x1^2");
  const RootDatum g2(LieType::parse("G2"));
  EXPECT_EQ(kr_character_exact(g2, 1, 1).augmentation(), 15);
}

TEST(KRCharacter, ThetaOneNodesAreIrreducible) {
  for (const char* name : {"A3", "D4", "B3", "C3"}) {
    const RootDatum d(LieType::parse(name));
    for (int a = 1; a <= d.rank(); ++a) {
      if (d.highest_root().integer(a) != 1) continue;
      for (int m = 1; m <= 2; ++m)
        EXPECT_EQ(kr_character_exact(d, a, m), irreducible_character(d, m * d.fundamental_weight(a)));
    }
  }
}

TEST(KRCharacter, TruncatedMatchesExact) {
  for (auto [name, a] : std::vector<std::pair<const char*, int>>{{"G2", 1}, {"F4", 4}, {"A2", 1}}) {
    const RootDatum d(LieType::parse(name));
    for (int m = 1; m <= 3; ++m) {
      const GroupRingElement exact = kr_character_exact(d, a, m);
      const Weight base = m * d.fundamental_weight(a);
      TruncatedSeries expected(d.rank(), 4);
      for (const auto& [w, c] : exact.terms())
        expected.add_term(exponent_from_root(d.to_root_coords(base - w)), c);
      EXPECT_EQ(kr_character_truncated(d, a, m, 4), expected) << name << " m=" << m;
    }
  }
}

TEST(KRCharacter, E8Node1Positivity) {
  const RootDatum e8(LieType::parse("E8"));
  const TruncatedSeries s = kr_character_truncated(e8, 1, 1, 3);
  EXPECT_EQ(s.coefficient(Exponent{}), 1);
  for (const auto& [e, c] : s.terms()) EXPECT_GT(sgn(c), 0);
}
