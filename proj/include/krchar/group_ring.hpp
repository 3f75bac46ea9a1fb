#ifndef KRCHAR_GROUP_RING_HPP
#define KRCHAR_GROUP_RING_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "krchar/integer.hpp"
#include "krchar/limits.hpp"
#include "krchar/root_system.hpp"
#include "krchar/weight.hpp"

namespace krchar {

/// Sparse element of Z[P]: a finite sum Σ c_λ e^λ. Zero coefficients are
/// never stored, so equality is map equality. Templated on the coefficient
/// ring (BigInt, or CheckedInt for large products).
template <class Scalar>
class GroupRing {
public:
  using scalar_type = Scalar;
  using Map = absl::flat_hash_map<Weight, Scalar>;

  GroupRing() = default;
  explicit GroupRing(int rank) : rank_(rank) {}

  static GroupRing monomial(const Weight& w, const Scalar& c = Scalar(1)) {
    GroupRing x(w.rank());
    x.add_term(w, c);
    return x;
  }
  static GroupRing one(int rank) { return monomial(Weight::zero(rank)); }
  /// 1 − e^{−μ}
  static GroupRing binomial(const Weight& mu) {
    GroupRing x = one(mu.rank());
    x.add_term(-mu, Scalar(-1));
    return x;
  }

  int rank() const { return rank_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Map& terms() const { return terms_; }
  void reserve(std::size_t n) { terms_.reserve(n); }

  Scalar coefficient(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add_term(const Weight& w, const Scalar& c) {
    if (is_zero_scalar(c)) return;
    if (rank_ == 0) rank_ = w.rank();
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_scalar(it->second)) terms_.erase(it);
    }
  }

  /// Sum of the coefficients (the dimension, for a character).
  Scalar augmentation() const {
    Scalar s(0);
    for (const auto& [w, c] : terms_) s += c;
    return s;
  }

  /// Terms in decreasing weight order.
  std::vector<std::pair<Weight, Scalar>> sorted_terms() const {
    std::vector<std::pair<Weight, Scalar>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first > y.first; });
    return out;
  }

  GroupRing& operator+=(const GroupRing& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  GroupRing& operator-=(const GroupRing& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, Scalar(0) - c);
    return *this;
  }
  GroupRing& operator*=(const Scalar& k) {
    if (is_zero_scalar(k)) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= k;
    return *this;
  }
  GroupRing operator-() const {
    GroupRing r = *this;
    for (auto& [w, c] : r.terms_) c = Scalar(0) - c;
    return r;
  }
  friend GroupRing operator+(GroupRing a, const GroupRing& b) { return a += b; }
  friend GroupRing operator-(GroupRing a, const GroupRing& b) { return a -= b; }

  friend bool operator==(const GroupRing& a, const GroupRing& b) {
    return a.terms_ == b.terms_;
  }

private:
  static bool is_zero_scalar(const Scalar& c) { return krchar::is_zero(c); }

  int rank_ = 0;
  Map terms_;
};

using GroupRingElement = GroupRing<BigInt>;

/// Exact product. Throws BudgetExceeded when the accumulated result would
/// hold more than term_bound terms.
template <class S>
GroupRing<S> multiply(const GroupRing<S>& x, const GroupRing<S>& y,
                      std::size_t term_bound = Limits{}.term_bound) {
  const GroupRing<S>& big = x.size() >= y.size() ? x : y;
  const GroupRing<S>& small = x.size() >= y.size() ? y : x;
  GroupRing<S> out(std::max(x.rank(), y.rank()));
  out.reserve(std::min(term_bound, big.size() * std::max<std::size_t>(small.size(), 1)));
  for (const auto& [ws, cs] : small.terms()) {
    for (const auto& [wb, cb] : big.terms()) {
      out.add_term(ws + wb, cs * cb);
    }
    if (out.size() > term_bound)
      throw BudgetExceeded("group-ring product exceeds " + std::to_string(term_bound) + " terms");
  }
  return out;
}

template <class S>
GroupRing<S> operator*(const GroupRing<S>& x, const GroupRing<S>& y) {
  return multiply(x, y);
}

/// x · (1 − e^{−μ}).
template <class S>
GroupRing<S> multiply_binomial(const GroupRing<S>& x, const Weight& mu,
                               std::size_t term_bound = Limits{}.term_bound) {
  GroupRing<S> out = x;
  out.reserve(2 * x.size());
  for (const auto& [w, c] : x.terms()) {
    out.add_term(w - mu, S(0) - c);
  }
  if (out.size() > term_bound)
    throw BudgetExceeded("group-ring product exceeds " + std::to_string(term_bound) + " terms");
  return out;
}

/// Returns q with q · (1 − e^{−μ}) = x. Works fiber by fiber along the
/// μ-direction: q_λ = Σ_{k≥0} x_{λ+kμ}. Throws NotDivisible when some fiber
/// does not sum to zero.
template <class S>
GroupRing<S> divide_exact(const GroupRing<S>& x, const Weight& mu) {
  if (mu.is_zero()) throw InvalidArgument("divide_exact by 1 − e^0 = 0");
  int pivot = 0;
  while (mu.coord(pivot) == 0) ++pivot;
  const int step = mu.coord(pivot);
  // fiber representative: λ − tμ with t = floor(λ_pivot / μ_pivot)
  auto floor_div = [](int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
  };
  absl::flat_hash_map<Weight, std::vector<std::pair<int, S>>> fibers;
  for (const auto& [w, c] : x.terms()) {
    const int t = floor_div(w.coord(pivot), step);
    fibers[w - t * mu].emplace_back(t, c);
  }
  GroupRing<S> q(x.rank());
  for (auto& [base, entries] : fibers) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    S running(0);
    std::size_t k = 0;
    for (int t = entries.front().first; t >= entries.back().first; --t) {
      if (k < entries.size() && entries[k].first == t) running += entries[k++].second;
      q.add_term(base + t * mu, running);
    }
    if (!is_zero(running))
      throw NotDivisible("element is not divisible by 1 - e^{-" + mu.to_string() + "}: fiber through " +
                         base.to_string() + " sums to " + to_string(running));
  }
  return q;
}

template <class S>
GroupRing<S> apply_weyl_word(const RootDatum& datum, const WeylWord& word, const GroupRing<S>& x) {
  if (word.letters.empty()) return x;
  const WeylAction action(datum, word);
  GroupRing<S> out(x.rank());
  out.reserve(x.size());
  for (const auto& [w, c] : x.terms()) out.add_term(action(w), c);
  return out;
}

template <class To, class From>
GroupRing<To> convert(const GroupRing<From>& x) {
  GroupRing<To> out(x.rank());
  out.reserve(x.size());
  for (const auto& [w, c] : x.terms()) out.add_term(w, coefficient_cast<To>(c));
  return out;
}

/// First weight (in decreasing weight order) where two elements differ.
template <class S>
std::optional<Weight> first_difference(const GroupRing<S>& a, const GroupRing<S>& b) {
  std::optional<Weight> best;
  auto consider = [&](const Weight& w) {
    if (!best || w > *best) best = w;
  };
  for (const auto& [w, c] : a.terms())
    if (b.coefficient(w) != c) consider(w);
  for (const auto& [w, c] : b.terms())
    if (a.coefficient(w) != c) consider(w);
  return best;
}

/// Point μ ∈ h*_R in ω-coordinates with (α_a, μ) > 0 for all a.
class EvaluationPoint {
public:
  explicit EvaluationPoint(std::vector<double> coords);
  const std::vector<double>& coords() const { return coords_; }

private:
  std::vector<double> coords_;
};

/// Σ c_λ exp((λ, μ)) in floating point. Throws NumericOverflow rather than
/// returning a non-finite value.
double evaluate_numeric(const RootDatum& datum, const GroupRingElement& x, const EvaluationPoint& mu);

/// One line per term, "coeff; c1 c2 ... cr" (with a trailing "/2" on
/// half-lattice weights), in decreasing weight order.
std::string serialize(const GroupRingElement& x);
GroupRingElement parse_group_ring(const std::string& text);

}  // namespace krchar

#endif
