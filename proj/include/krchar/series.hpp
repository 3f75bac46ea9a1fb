#ifndef KRCHAR_SERIES_HPP
#define KRCHAR_SERIES_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "krchar/char_formula.hpp"
#include "krchar/integer.hpp"
#include "krchar/root_system.hpp"

namespace krchar {

/// Exponent vector β ≥ 0 of the monomial e^{−β} = x1^β1 ... xr^βr.
using Exponent = std::array<std::int16_t, kMaxRank>;

int exponent_height(const Exponent& e);
Exponent exponent_from_root(const RootVector& v);

/// Height ascending, then lexicographically descending, so x1 precedes x2.
struct ExponentOrder {
  bool operator()(const Exponent& x, const Exponent& y) const;
};

/// Element of Z[[e^{−α_1}, …, e^{−α_r}]] modulo monomials of height > order.
class TruncatedSeries {
public:
  using Map = std::map<Exponent, BigInt, ExponentOrder>;

  TruncatedSeries(int rank, int order);
  static TruncatedSeries one(int rank, int order);

  int rank() const { return rank_; }
  int order() const { return order_; }
  const Map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  BigInt coefficient(const Exponent& e) const;
  /// Monomials above the order are dropped.
  void add_term(const Exponent& e, const BigInt& c);
  /// Same series at a smaller order.
  TruncatedSeries truncated(int order) const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

  /// Equal terms and equal order.
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
  int rank_;
  int order_;
  Map terms_;
};

TruncatedSeries series_multiply(const TruncatedSeries& x, const TruncatedSeries& y);
/// Throws NotInvertible unless the constant term is ±1.
TruncatedSeries series_inverse(const TruncatedSeries& x);
/// x · (1 − e^{−β}).
TruncatedSeries series_multiply_binomial(const TruncatedSeries& x, const Exponent& beta);
/// x / (1 − e^{−β}) = x · Σ_k e^{−kβ}.
TruncatedSeries series_divide_binomial(const TruncatedSeries& x, const Exponent& beta);

/// Exponents [α]_a for the positive roots with [α]_a > 0.
struct MYFactorization {
  int node;
  std::vector<std::pair<RootVector, int>> exponents;
};
MYFactorization my_factorization(const RootDatum& datum, int node);

/// 1 / Π_{α>0} (1 − e^{−α})^{[α]_a}, to height N.
TruncatedSeries my_product_series(const RootDatum& datum, int node, int order);

/// e^{−base} · χ restricted to heights ≤ order: the weight μ of the table
/// contributes its multiplicity at the exponent base − μ. Throws
/// NonIntegralShift when base − μ is not a nonnegative integral root
/// combination.
TruncatedSeries normalized_from_character(const RootDatum& datum, const Weight& base,
                                          const MultiplicityTable& table, int order,
                                          const Limits& limits = {});

/// "1 + x1 + 2 x1 x2^2 - x3" in series order.
std::string format_series(const TruncatedSeries& s);
/// One "coeff: e1 e2 ... er" line per term.
std::string format_series_lines(const TruncatedSeries& s);

}  // namespace krchar

#endif
