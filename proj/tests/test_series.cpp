#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "krchar/series.hpp"

using namespace krchar;

namespace {

Exponent ex(std::initializer_list<int> v) {
  Exponent e{};
  int i = 0;
  for (int c : v) e[i++] = static_cast<std::int16_t>(c);
  return e;
}

TruncatedSeries random_unit(std::mt19937& rng, int rank, int order) {
  std::uniform_int_distribution<int> coeff(-3, 3), expo(0, 2);
  TruncatedSeries s = TruncatedSeries::one(rank, order);
  for (int k = 0; k < 8; ++k) {
    Exponent e{};
    for (int i = 0; i < rank; ++i) e[i] = static_cast<std::int16_t>(expo(rng));
    if (exponent_height(e) == 0) continue;
    s.add_term(e, BigInt(coeff(rng)));
  }
  return s;
}

// Oracle for the product: expand Π (1 − x^α)^{−n} by counting multisets of
// roots directly (a partition-function recursion over the root list).
void count_multisets(const std::vector<std::pair<Exponent, int>>& factors, std::size_t i, Exponent cur,
                     int order, TruncatedSeries& out) {
  if (i == factors.size()) {
    out.add_term(cur, BigInt(1));
    return;
  }
  const auto& [beta, copies] = factors[i];
  // each copy is an independent geometric factor
  std::vector<std::pair<Exponent, int>> rest(factors.begin() + i + 1, factors.end());
  std::function<void(int, Exponent)> spread = [&](int copy, Exponent e) {
    if (copy == copies) {
      count_multisets(factors, i + 1, e, order, out);
      return;
    }
    for (Exponent f = e; exponent_height(f) <= order;) {
      spread(copy + 1, f);
      for (int j = 0; j < kMaxRank; ++j) f[j] = static_cast<std::int16_t>(f[j] + beta[j]);
    }
  };
  spread(0, cur);
}

}  // namespace

TEST(Series, GeometricInverse) {
  TruncatedSeries one_minus = TruncatedSeries::one(1, 3);
  one_minus.add_term(ex({1}), BigInt(-1));
  const TruncatedSeries inv = series_inverse(one_minus);
  EXPECT_EQ(format_series(inv), "1 + x1 + x1^2 + x1^3");
  EXPECT_EQ(series_multiply(inv, TruncatedSeries::one(1, 3)), inv);
}

TEST(Series, InverseRoundTrip) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const TruncatedSeries x = random_unit(rng, 3, 6);
    EXPECT_EQ(series_inverse(series_inverse(x)), x);
    EXPECT_EQ(series_multiply(x, series_inverse(x)), TruncatedSeries::one(3, 6));
  }
  TruncatedSeries two(1, 3);
  two.add_term(Exponent{}, BigInt(2));
  EXPECT_THROW(series_inverse(two), NotInvertible);
}

TEST(Series, MultiplyTruncatesAtSmallerOrder) {
  TruncatedSeries x = TruncatedSeries::one(2, 5), y = TruncatedSeries::one(2, 2);
  x.add_term(ex({2, 1}), BigInt(1));
  EXPECT_EQ(series_multiply(x, y).order(), 2);
  EXPECT_EQ(series_multiply(x, y).size(), 1u);
}

TEST(MYProduct, SmallCases) {
  const RootDatum a1(LieType::parse("A1"));
  EXPECT_EQ(format_series(my_product_series(a1, 1, 5)), "1 + x1 + x1^2 + x1^3 + x1^4 + x1^5");
  const RootDatum a2(LieType::parse("A2"));
  const TruncatedSeries s = my_product_series(a2, 1, 2);
  EXPECT_EQ(s.size(), 4u);
  for (const Exponent& e : {ex({0, 0}), ex({1, 0}), ex({2, 0}), ex({1, 1})}) EXPECT_EQ(s.coefficient(e), 1);
}

TEST(MYProduct, MatchesMultisetCount) {
  for (const char* name : {"B3", "G2", "F4", "D4"}) {
    const RootDatum d(LieType::parse(name));
    for (int a = 1; a <= d.rank(); ++a) {
      std::vector<std::pair<Exponent, int>> factors;
      for (const auto& [root, n] : my_factorization(d, a).exponents)
        factors.emplace_back(exponent_from_root(root), n);
      TruncatedSeries oracle(d.rank(), 5);
      count_multisets(factors, 0, Exponent{}, 5, oracle);
      EXPECT_EQ(my_product_series(d, a, 5), oracle) << name << " " << a;
    }
  }
}

TEST(MYProduct, Properties) {
  for (const auto& t : all_lie_types()) {
    const RootDatum d(t);
    for (int a = 1; a <= d.rank(); ++a) {
      const TruncatedSeries s = my_product_series(d, a, 3);
      EXPECT_EQ(s.coefficient(Exponent{}), 1);
      for (const auto& [e, c] : s.terms()) EXPECT_GT(sgn(c), 0);
      for (int b = 1; b <= d.rank(); ++b) {
        Exponent unit{};
        unit[b - 1] = 1;
        EXPECT_EQ(s.coefficient(unit), a == b ? 1 : 0);
      }
      // multiply back by Π (1 − x^α)^{[α]_a}
      TruncatedSeries back = s;
      for (const auto& [root, n] : my_factorization(d, a).exponents)
        for (int k = 0; k < n; ++k) back = series_multiply_binomial(back, exponent_from_root(root));
      EXPECT_EQ(back, TruncatedSeries::one(d.rank(), 3));
      const auto f = my_factorization(d, a);
      int top = 0;
      for (const auto& [root, n] : f.exponents) top = std::max(top, n);
      EXPECT_EQ(top, d.highest_root().integer(a));
    }
  }
}

TEST(Normalized, FromCharacters) {
  const RootDatum a1(LieType::parse("A1"));
  const auto t1 = freudenthal(a1, Weight(1, {2}));
  EXPECT_EQ(format_series(normalized_from_character(a1, Weight(1, {2}), t1, 4)), "1 + x1 + x1^2");
  const RootDatum a2(LieType::parse("A2"));
  const auto t2 = freudenthal(a2, a2.fundamental_weight(1));
  EXPECT_EQ(format_series(normalized_from_character(a2, a2.fundamental_weight(1), t2, 4)), "1 + x1 + x1 x2");
  const auto t0 = freudenthal(a2, Weight::zero(2));
  EXPECT_EQ(format_series(normalized_from_character(a2, Weight::zero(2), t0, 4)), "1");
  EXPECT_THROW(normalized_from_character(a2, a2.fundamental_weight(2), t2, 4), NonIntegralShift);
}
