#include <gtest/gtest.h>

#include "krchar/verify.hpp"

namespace krchar {
namespace {

const char* kSmallTypes[] = {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"};

TEST(FactoredRational, MultiplicationCancelsInverse) {
  const RootDatum d(LieType::parse("B3"));
  const FactoredRational f = my_factored(d, 2);
  FactoredRational one(d.rank());
  EXPECT_EQ(f * f.inverse(), one);
  EXPECT_EQ(f.pow(3), f * f * f);
  EXPECT_EQ(f.negated().negated(), f);
}

TEST(FactoredRational, ReflectionIsAnInvolution) {
  const RootDatum d(LieType::parse("F4"));
  for (int a = 1; a <= 4; ++a) {
    const FactoredRational f = my_factored(d, a) * FactoredRational::monomial(d.fundamental_weight(a));
    EXPECT_EQ(f.reflect(d, a).reflect(d, a), f) << a;
  }
}

TEST(FactoredRational, ReflectingASimpleBinomial) {
  // s(1 − e^{−α}) = 1 − e^{α} = −e^{α}(1 − e^{−α})
  const RootDatum d(LieType::parse("A1"));
  const RootVector alpha = RootVector::simple(1, 1);
  const FactoredRational b = FactoredRational::binomial(d, alpha);
  const FactoredRational expected =
      FactoredRational::monomial(d.simple_root_weight(1), -1) * FactoredRational::binomial(d, alpha);
  EXPECT_EQ(b.reflect(d, 1), expected);
}

TEST(Simpleref, HoldsOnSmallTypes) {
  for (const char* t : kSmallTypes) {
    const RootDatum d(LieType::parse(t));
    EXPECT_TRUE(check_simpleref(d).pass) << t;
  }
}

TEST(Simpleref, PerturbationFailsWithWitness) {
  const RootDatum d(LieType::parse("A2"));
  const CheckReport r = check_simpleref(d, true);
  EXPECT_FALSE(r.pass);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(r.witness->contains("root"));
}

TEST(Norsys, HoldsOnEveryNodeOfSmallTypes) {
  for (const char* t : kSmallTypes) {
    const RootDatum d(LieType::parse(t));
    for (int a = 1; a <= d.rank(); ++a) EXPECT_TRUE(check_my_norsys(d, a).pass) << t << " " << a;
  }
}

TEST(Norsys, PerturbationFails) {
  const RootDatum d(LieType::parse("C3"));
  const CheckReport r = check_my_norsys(d, 1, true);
  EXPECT_FALSE(r.pass);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_FALSE(r.witness->at("differing_roots").empty());
}

TEST(Qtilde, A1IsTheNegativeHalfRootMonomial) {
  // Q = 1/(1 − e^{−α}), no neighbours: Q̃ = e^{−α/2}.
  const RootDatum d(LieType::parse("A1"));
  const CheckReport r = check_qtilde(d, 1);
  EXPECT_TRUE(r.pass);
  const FactoredRational expected = FactoredRational::monomial(-d.simple_root_weight(1).halved());
  EXPECT_EQ(r.details.at("qtilde").get<std::string>(), expected.to_string(d));
}

TEST(Qtilde, HoldsOnSmallTypesAndPerturbationFails) {
  for (const char* t : kSmallTypes) {
    const RootDatum d(LieType::parse(t));
    for (int a = 1; a <= d.rank(); ++a) {
      EXPECT_TRUE(check_qtilde(d, a).pass) << t << " " << a;
      EXPECT_FALSE(check_qtilde(d, a, true).pass) << t << " " << a;
    }
  }
}

TEST(Qsystem, TypeASmall) {
  EXPECT_TRUE(check_qsystem_typeA(1, 4).pass);
  EXPECT_TRUE(check_qsystem_typeA(3, 3).pass);
  const CheckReport bad = check_qsystem_typeA(2, 3, true);
  EXPECT_FALSE(bad.pass);
  EXPECT_TRUE(bad.witness.has_value());
}

TEST(Limit, A1AndG2) {
  EXPECT_TRUE(check_limit(RootDatum(LieType::parse("A1")), 1, 3, 3).pass);
  EXPECT_TRUE(check_limit(RootDatum(LieType::parse("G2")), 1, 3, 3).pass);
  EXPECT_TRUE(check_limit(RootDatum(LieType::parse("A2")), 1, 2, 3).pass);
}

TEST(Limit, OrderAboveMRejected) {
  EXPECT_THROW(check_limit(RootDatum(LieType::parse("A1")), 1, 4, 3), InvalidArgument);
}

TEST(Limit, UnregisteredNodeUnsupported) {
  EXPECT_THROW(check_limit(RootDatum(LieType::parse("G2")), 2, 2, 2), Unsupported);
}

TEST(Limit, OtherNodePerturbationFails) {
  const CheckReport r = check_limit(RootDatum(LieType::parse("A2")), 1, 2, 2, true);
  EXPECT_FALSE(r.pass);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->at("product_node").get<int>(), 2);
}

TEST(Denominator, EveryParabolicOfRankThree) {
  for (const char* t : {"A3", "B3", "C3"}) {
    const RootDatum d(LieType::parse(t));
    const auto subsets = parabolic_subsets(d, 1'000'000);
    EXPECT_EQ(subsets.size(), 8u) << t;
    for (NodeSet J : subsets) EXPECT_TRUE(check_denominator(d, J).pass) << t;
  }
}

TEST(Denominator, DroppedRootFails) {
  const RootDatum d(LieType::parse("G2"));
  const CheckReport r = check_denominator(d, NodeSet{1, 2}, true);
  EXPECT_FALSE(r.pass);
  EXPECT_TRUE(r.witness.has_value());
  EXPECT_THROW(check_denominator(d, NodeSet{}, true), InvalidArgument);
}

TEST(CosetIdentity, F4Node4) {
  const CheckReport r = check_F4_node4_identity();
  EXPECT_TRUE(r.pass) << to_json(r).dump();
  EXPECT_EQ(r.details.at("cosets").get<int>(), 6);
  EXPECT_EQ(r.details.at("single_coset_quotient").get<std::string>(), "not a polynomial");
  EXPECT_TRUE(r.details.at("alternant_straightening").get<bool>());
  EXPECT_TRUE(r.details.at("division_route").get<bool>());
}

TEST(CosetIdentity, F4SignFlipFails) {
  const CheckReport r = check_F4_node4_identity(true);
  EXPECT_FALSE(r.pass);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(r.witness->contains("grade"));
}

TEST(Wtineq, SmallTypes) {
  for (const char* t : kSmallTypes) {
    const RootDatum d(LieType::parse(t));
    for (int a = 1; a <= d.rank(); ++a) {
      EXPECT_TRUE(check_wtineq(d, a).pass) << t << " " << a;
    }
  }
}

TEST(Wtineq, DoubledRootFails) {
  const RootDatum d(LieType::parse("B3"));
  const CheckReport r = check_wtineq(d, 3, true);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.witness->at("part").get<std::string>(), "i");
}

TEST(Wtineq, QuotedInequalitiesPresent) {
  EXPECT_EQ(check_wtineq(RootDatum(LieType::parse("G2")), 2).details.at("quoted_inequalities").size(), 2u);
  EXPECT_EQ(check_wtineq(RootDatum(LieType::parse("F4")), 3).details.at("quoted_inequalities").size(), 6u);
  EXPECT_EQ(check_wtineq(RootDatum(LieType::parse("B4")), 4).details.at("quoted_inequalities").size(), 1u);
}

TEST(DeterminationOrder, EveryTypeReplays) {
  for (const auto& type : all_lie_types()) {
    const CheckReport r = replay_determination_order(type);
    EXPECT_TRUE(r.pass) << type.name() << " " << to_json(r).dump();
  }
}

TEST(DeterminationOrder, E8LeavesTwoNodes) {
  const CheckReport r = replay_determination_order(LieType::parse("E8"));
  EXPECT_EQ(r.details.at("undetermined"), Json({4, 8}));
  EXPECT_EQ(r.details.at("determined"), Json({1, 2, 3, 5, 6, 7}));
}

TEST(DeterminationOrder, WithheldSeedFails) {
  for (const char* t : {"B4", "C4", "D5", "E6", "E7", "E8", "F4"}) {
    const CheckReport r = replay_determination_order(LieType::parse(t), true);
    EXPECT_FALSE(r.pass) << t;
  }
}

TEST(Report, JsonRoundTrip) {
  const CheckReport r = check_simpleref(RootDatum(LieType::parse("A2")), true);
  const Json j = to_json(r);
  EXPECT_EQ(j.at("verdict"), "fail");
  const CheckReport back = report_from_json(j);
  EXPECT_EQ(to_json(back), j);
}

TEST(Properties, NorsysAndQtildeAgreeEverywhere) {
  for (const auto& type : all_lie_types()) {
    const RootDatum d(type);
    for (int a = 1; a <= d.rank(); ++a)
      EXPECT_EQ(check_my_norsys(d, a).pass, check_qtilde(d, a).pass) << type.name() << " " << a;
  }
}

// Root by root: [α]_a + [s_a α]_a on one side, −Σ_{b≠a} C_ab [α]_b on the other.
TEST(Properties, ExponentsMatchRootByRoot) {
  for (const auto& type : all_lie_types()) {
    const RootDatum d(type);
    for (int a = 1; a <= d.rank(); ++a) {
      for (const auto& alpha : d.positive_roots()) {
        if (alpha == RootVector::simple(d.rank(), a)) continue;
        const RootVector image = d.to_root_coords(simple_reflection(d, a, d.to_weight(alpha)));
        long rhs = 0;
        for (int b = 1; b <= d.rank(); ++b)
          if (b != a) rhs -= d.cartan()(a, b) * alpha.integer(b);
        EXPECT_EQ(alpha.integer(a) + image.integer(a), rhs) << type.name() << " " << a << " " << alpha.to_string();
      }
    }
  }
}

}  // namespace
}  // namespace krchar
