#include <gtest/gtest.h>

#include <set>

#include "krchar/weyl.hpp"

using namespace krchar;

namespace {

// Brute-force oracle: enumerate W_J as matrices by BFS on words, then sum.
GroupRingElement brute_alternating_sum(const RootDatum& d, NodeSet J, const Weight& lambda) {
  // Elements keyed by their action on a regular weight.
  const Weight probe = d.rho();
  std::vector<WeylWord> words{WeylWord{}};
  std::set<Weight> seen{probe};
  for (std::size_t i = 0; i < words.size(); ++i)
    for (int a : J.nodes()) {
      WeylWord w = words[i];
      w.letters.insert(w.letters.begin(), a);
      w.sign = -w.sign;
      if (seen.insert(apply_weyl_word(d, w, probe)).second) words.push_back(w);
    }
  GroupRingElement out(d.rank());
  for (const auto& w : words) out.add_term(apply_weyl_word(d, w, lambda), BigInt(w.sign));
  return out;
}

GroupRingElement rho_denominator(const RootDatum& d, NodeSet J) {
  GroupRingElement x = GroupRingElement::monomial(d.rho());
  for (int k : d.positive_root_indices_in(J))
    x = multiply_binomial(x, d.to_weight(d.positive_roots()[k]));
  return x;
}

}  // namespace

TEST(WeylOrbit, SmallCases) {
  const RootDatum a2(LieType::parse("A2"));
  EXPECT_EQ(weyl_orbit(a2, Weight::zero(2)).size(), 1u);
  EXPECT_EQ(weyl_orbit(a2, a2.rho()).size(), 6u);
  const RootDatum e8(LieType::parse("E8"));
  EXPECT_EQ(weyl_orbit(e8, e8.fundamental_weight(7)).size(), 240u);
  EXPECT_THROW(weyl_orbit(e8, e8.fundamental_weight(7), 100), BudgetExceeded);
}

TEST(WeylOrbit, MatchesOrbitSize) {
  for (const auto& t : all_lie_types()) {
    if (t.rank() > 6) continue;
    const RootDatum d(t);
    for (int a = 1; a <= d.rank(); ++a) {
      const Weight w = d.fundamental_weight(a);
      EXPECT_EQ(weyl_orbit(d, w).size(), orbit_size(d, w)) << t.name() << " " << a;
    }
  }
}

TEST(WeylGroupOrder, KnownOrders) {
  EXPECT_EQ(weyl_group_order(RootDatum(LieType::parse("E8"))), 696729600u);
  EXPECT_EQ(weyl_group_order(RootDatum(LieType::parse("E7"))), 2903040u);
  EXPECT_EQ(weyl_group_order(RootDatum(LieType::parse("E6"))), 51840u);
  EXPECT_EQ(weyl_group_order(RootDatum(LieType::parse("F4"))), 1152u);
  EXPECT_EQ(weyl_group_order(RootDatum(LieType::parse("G2"))), 12u);
  const RootDatum e8(LieType::parse("E8"));
  EXPECT_EQ(weyl_group_order(e8, NodeSet{2, 3, 4, 5, 6, 7, 8}), 322560u);
  EXPECT_EQ(weyl_group_order(e8, NodeSet{2, 3, 4, 5, 6, 8}), 23040u);
  EXPECT_EQ(weyl_group_order(e8, NodeSet{}), 1u);
}

TEST(DominantConjugate, WordMapsBack) {
  const RootDatum f4(LieType::parse("F4"));
  const Weight lambda(4, {3, -2, 1, -5});
  const auto dom = dominant_conjugate(f4, lambda);
  EXPECT_TRUE(dom.weight.is_dominant());
  EXPECT_EQ(apply_weyl_word(f4, dom.word, lambda), dom.weight);
}

TEST(AlternatingSum, TrivialCases) {
  const RootDatum a2(LieType::parse("A2"));
  const Weight lambda(2, {3, -1});
  EXPECT_EQ(alternating_sum_over_parabolic(a2, NodeSet{}, lambda), GroupRingElement::monomial(lambda));
  GroupRingElement two = GroupRingElement::monomial(a2.rho());
  two.add_term(a2.rho() - a2.simple_root_weight(1), BigInt(-1));
  EXPECT_EQ(alternating_sum_over_parabolic(a2, NodeSet{1}, a2.rho()), two);
  // singular weight: s_1 fixes ω_2
  EXPECT_TRUE(alternating_sum_over_parabolic(a2, NodeSet{1, 2}, a2.fundamental_weight(2)).is_zero());
}

TEST(AlternatingSum, MatchesBruteForce) {
  for (const char* name : {"A2", "B2", "G2", "A3", "C3", "B3"}) {
    const RootDatum d(LieType::parse(name));
    const NodeSet all = NodeSet::all(d.rank());
    for (const Weight& lambda : {d.rho(), Weight(d.rank(), d.rank() == 2 ? std::initializer_list<int>{2, -3}
                                                                         : std::initializer_list<int>{1, -4, 2})}) {
      EXPECT_EQ(alternating_sum_over_parabolic(d, all, lambda), brute_alternating_sum(d, all, lambda))
          << name << " " << lambda.to_string();
    }
  }
}

TEST(AlternatingSum, DenominatorIdentitySmallRanks) {
  for (const auto& t : all_lie_types()) {
    if (t.rank() > 4) continue;
    const RootDatum d(t);
    for (std::uint16_t bits = 0; bits < (1u << d.rank()); ++bits) {
      const NodeSet J = NodeSet::from_bits(std::uint16_t(bits << 1));
      EXPECT_EQ(alternating_sum_over_parabolic(d, J, d.rho()), rho_denominator(d, J))
          << t.name() << " " << J.to_string();
    }
  }
  const RootDatum a2(LieType::parse("A2"));
  EXPECT_EQ(alternating_sum_over_parabolic(a2, NodeSet{1, 2}, a2.rho()).size(), 6u);
}

TEST(CosetRepresentatives, Counts) {
  const RootDatum e8(LieType::parse("E8"));
  const NodeSet d7{2, 3, 4, 5, 6, 7, 8}, d6{2, 3, 4, 5, 6, 8};
  const auto reps = coset_representatives(e8, d7, d6);
  ASSERT_EQ(reps.size(), 14u);
  EXPECT_TRUE(reps.front().letters.empty());
  const RootDatum f4(LieType::parse("F4"));
  EXPECT_EQ(coset_representatives(f4, NodeSet{1, 2, 3}, NodeSet{2, 3}).size(), 6u);
  EXPECT_EQ(coset_representatives(f4, NodeSet{1, 2}, NodeSet{1, 2}).size(), 1u);
  EXPECT_THROW(coset_representatives(f4, NodeSet{2, 3}, NodeSet{1}), InvalidArgument);
}

TEST(CosetRepresentatives, E8ImagesAreGradeTwoRoots) {
  const RootDatum e8(LieType::parse("E8"));
  const Weight mu = e8.fundamental_weight(1) - e8.fundamental_weight(7);
  std::set<Weight> images;
  for (const auto& w : coset_representatives(e8, NodeSet{2, 3, 4, 5, 6, 7, 8}, NodeSet{2, 3, 4, 5, 6, 8})) {
    EXPECT_EQ(w.sign, w.length() % 2 == 0 ? 1 : -1);
    images.insert(apply_weyl_word(e8, w, mu));
  }
  std::set<Weight> grade_two;
  for (const auto& root : roots_with_coefficient(e8, 1, 2)) grade_two.insert(e8.to_weight(root));
  EXPECT_EQ(images, grade_two);
}

TEST(WeylAction, MatchesWordApplication) {
  const RootDatum e7(LieType::parse("E7"));
  const WeylWord w{{1, 3, 7, 4, 2, 3}, 1};
  const WeylAction act(e7, w);
  const Weight lambda(7, {1, -2, 3, 0, 5, -1, 2});
  EXPECT_EQ(act(lambda), apply_weyl_word(e7, w, lambda));
}
