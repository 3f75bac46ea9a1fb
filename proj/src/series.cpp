#include "krchar/series.hpp"

#include <algorithm>
#include <sstream>

#include "krchar/weyl.hpp"

namespace krchar {

int exponent_height(const Exponent& e) {
  int h = 0;
  for (auto c : e) h += c;
  return h;
}

Exponent exponent_from_root(const RootVector& v) {
  if (!v.is_integral() || !v.is_nonnegative())
    throw NonIntegralShift("shift " + v.to_string() + " is not a nonnegative integral root combination");
  Exponent e{};
  for (int a = 1; a <= v.rank(); ++a) {
    const long c = v.integer(a);
    if (c > INT16_MAX) throw InvalidArgument("exponent out of range");
    e[a - 1] = static_cast<std::int16_t>(c);
  }
  return e;
}

bool ExponentOrder::operator()(const Exponent& x, const Exponent& y) const {
  const int hx = exponent_height(x), hy = exponent_height(y);
  if (hx != hy) return hx < hy;
  return x > y;
}

TruncatedSeries::TruncatedSeries(int rank, int order) : rank_(rank), order_(order) {
  if (order < 0) throw InvalidArgument("negative series order");
}

TruncatedSeries TruncatedSeries::one(int rank, int order) {
  TruncatedSeries s(rank, order);
  s.add_term(Exponent{}, BigInt(1));
  return s;
}

BigInt TruncatedSeries::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void TruncatedSeries::add_term(const Exponent& e, const BigInt& c) {
  if (is_zero(c) || exponent_height(e) > order_) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) terms_.erase(it);
  }
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  TruncatedSeries out(rank_, std::min(order, order_));
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  order_ = std::min(order_, o.order_);
  for (auto it = terms_.begin(); it != terms_.end();)
    it = exponent_height(it->first) > order_ ? terms_.erase(it) : std::next(it);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  TruncatedSeries neg(o.rank_, o.order_);
  for (const auto& [e, c] : o.terms_) neg.add_term(e, BigInt(-c));
  return *this += neg;
}

namespace {

Exponent add_exponents(const Exponent& x, const Exponent& y) {
  Exponent out{};
  for (int i = 0; i < kMaxRank; ++i) out[i] = static_cast<std::int16_t>(x[i] + y[i]);
  return out;
}

}  // namespace

TruncatedSeries series_multiply(const TruncatedSeries& x, const TruncatedSeries& y) {
  const int order = std::min(x.order(), y.order());
  TruncatedSeries out(std::max(x.rank(), y.rank()), order);
  for (const auto& [ex, cx] : x.terms()) {
    const int hx = exponent_height(ex);
    if (hx > order) break;
    for (const auto& [ey, cy] : y.terms()) {
      if (hx + exponent_height(ey) > order) break;
      out.add_term(add_exponents(ex, ey), cx * cy);
    }
  }
  return out;
}

TruncatedSeries series_inverse(const TruncatedSeries& x) {
  const BigInt c0 = x.coefficient(Exponent{});
  if (c0 != 1 && c0 != -1) throw NotInvertible("constant term " + c0.get_str() + " is not a unit");
  // y = c0 · Σ_k (1 − c0·x)^k, built by y ← c0 + (1 − c0·x)·y with the error
  // term gaining one height per round
  TruncatedSeries u(x.rank(), x.order());
  for (const auto& [e, c] : x.terms())
    if (exponent_height(e) > 0) u.add_term(e, BigInt(-c0 * c));
  TruncatedSeries y(x.rank(), x.order());
  y.add_term(Exponent{}, c0);
  for (int round = 0; round < x.order(); ++round) {
    TruncatedSeries next(x.rank(), x.order());
    next.add_term(Exponent{}, c0);
    next += series_multiply(u, y);
    y = std::move(next);
  }
  return y;
}

TruncatedSeries series_multiply_binomial(const TruncatedSeries& x, const Exponent& beta) {
  TruncatedSeries out = x;
  for (const auto& [e, c] : x.terms()) out.add_term(add_exponents(e, beta), BigInt(-c));
  return out;
}

TruncatedSeries series_divide_binomial(const TruncatedSeries& x, const Exponent& beta) {
  if (exponent_height(beta) <= 0) throw InvalidArgument("binomial exponent must have positive height");
  // y_γ = x_γ + y_{γ−β}; ascending height visits γ − β first
  TruncatedSeries out(x.rank(), x.order());
  for (const auto& [e, c] : x.terms()) {
    Exponent shifted = e;
    for (int k = 0; exponent_height(shifted) <= x.order(); ++k) {
      out.add_term(shifted, c);
      shifted = add_exponents(shifted, beta);
    }
  }
  return out;
}

MYFactorization my_factorization(const RootDatum& datum, int node) {
  if (node < 1 || node > datum.rank()) throw InvalidArgument("node out of range");
  MYFactorization f{node, {}};
  for (const auto& root : datum.positive_roots()) {
    const long c = root.integer(node);
    if (c > 0) f.exponents.emplace_back(root, static_cast<int>(c));
  }
  return f;
}

TruncatedSeries my_product_series(const RootDatum& datum, int node, int order) {
  TruncatedSeries s = TruncatedSeries::one(datum.rank(), order);
  for (const auto& [root, n] : my_factorization(datum, node).exponents) {
    if (root.integer_height() > order) continue;
    const Exponent beta = exponent_from_root(root);
    for (int k = 0; k < n; ++k) s = series_divide_binomial(s, beta);
  }
  return s;
}

TruncatedSeries normalized_from_character(const RootDatum& datum, const Weight& base,
                                          const MultiplicityTable& table, int order, const Limits& limits) {
  TruncatedSeries out(datum.rank(), order);
  const Exponent top_shift = exponent_from_root(datum.to_root_coords(base - table.highest()));
  const int budget = order - exponent_height(top_shift);
  if (budget < 0) return out;
  if (table.depth() && *table.depth() < budget)
    throw InvalidArgument("multiplicity table is shallower than the requested order");
  for (const auto& e : table.dominant_entries()) {
    if (e.level > budget) continue;
    for (const auto& [w, drop] : orbit_within_drop(datum, e.weight, budget - e.level, limits.orbit_bound))
      out.add_term(exponent_from_root(datum.to_root_coords(base - w)), e.multiplicity);
  }
  return out;
}

namespace {

std::string monomial_text(const Exponent& e, int rank) {
  std::string s;
  for (int i = 0; i < rank; ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += ' ';
    s += "x" + std::to_string(i + 1);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

std::string format_series(const TruncatedSeries& s) {
  if (s.terms().empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : s.terms()) {
    const bool negative = sgn(c) < 0;
    const BigInt mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = monomial_text(e, s.rank());
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + " ";
      out += mono;
    }
  }
  return out;
}

std::string format_series_lines(const TruncatedSeries& s) {
  std::ostringstream os;
  for (const auto& [e, c] : s.terms()) {
    os << c.get_str() << ':';
    for (int i = 0; i < s.rank(); ++i) os << ' ' << e[i];
    os << '\n';
  }
  return os.str();
}

}  // namespace krchar
