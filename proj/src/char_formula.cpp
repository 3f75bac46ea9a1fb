#include "krchar/char_formula.hpp"

#include <algorithm>

#include "krchar/weyl.hpp"

namespace krchar {

void MultiplicityTable::add(Weight w, int level, BigInt m) {
  index_.emplace(w, entries_.size());
  entries_.push_back({std::move(w), level, std::move(m)});
}

BigInt MultiplicityTable::multiplicity(const RootDatum& datum, const Weight& mu) const {
  const RootVector diff = datum.to_root_coords(highest_ - mu);
  if (!diff.is_integral() || !diff.is_nonnegative()) return BigInt(0);
  if (depth_ && diff.integer_height() > *depth_)
    throw InvalidArgument("weight " + mu.to_string() + " lies below the table depth");
  const Weight dom = dominant_conjugate(datum, mu).weight;
  auto it = index_.find(dom);
  return it == index_.end() ? BigInt(0) : entries_[it->second].multiplicity;
}

std::vector<std::pair<Weight, int>> dominant_weights_below(const RootDatum& datum, const Weight& lambda,
                                                           std::optional<int> depth) {
  if (!lambda.is_integral() || !lambda.is_dominant())
    throw InvalidArgument("highest weight must be dominant integral");
  std::vector<Weight> root_weights;
  std::vector<int> heights;
  for (const auto& root : datum.positive_roots()) {
    root_weights.push_back(datum.to_weight(root));
    heights.push_back(static_cast<int>(root.integer_height()));
  }
  std::vector<std::pair<Weight, int>> out{{lambda, 0}};
  absl::flat_hash_map<Weight, int> seen{{lambda, 0}};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (std::size_t k = 0; k < root_weights.size(); ++k) {
      const int level = out[head].second + heights[k];
      if (depth && level > *depth) continue;
      Weight next = out[head].first - root_weights[k];
      if (!next.is_dominant() || seen.contains(next)) continue;
      seen.emplace(next, level);
      out.emplace_back(std::move(next), level);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.second != y.second) return x.second < y.second;
    return x.first > y.first;
  });
  return out;
}

MultiplicityTable freudenthal(const RootDatum& datum, const Weight& lambda, std::optional<int> depth) {
  if (depth && *depth < 0) throw InvalidArgument("negative depth");
  const auto dominant = dominant_weights_below(datum, lambda, depth);
  const Weight lr = lambda + datum.rho();
  const long top = datum.scaled_form(lr, lr);
  // positive roots once, in both coordinate systems
  const auto roots = datum.positive_roots();
  std::vector<Weight> root_weights;
  for (const auto& root : roots) root_weights.push_back(datum.to_weight(root));

  MultiplicityTable table(lambda, depth);
  absl::flat_hash_map<Weight, BigInt> known;
  auto lookup = [&](const Weight& nu) -> BigInt {
    auto it = known.find(dominant_conjugate(datum, nu).weight);
    return it == known.end() ? BigInt(0) : it->second;
  };
  for (const auto& [mu, level] : dominant) {
    if (level == 0) {
      known.emplace(mu, BigInt(1));
      table.add(mu, 0, BigInt(1));
      continue;
    }
    // (|λ+ρ|² − |μ+ρ|²) m(μ) = 2 Σ_{α>0} Σ_{k≥1} (μ+kα, α) m(μ+kα)
    BigInt numerator = 0;
    for (std::size_t r = 0; r < roots.size(); ++r) {
      Weight nu = mu + root_weights[r];
      while (true) {
        const BigInt m = lookup(nu);
        if (is_zero(m)) break;  // α-strings of weights are unbroken
        numerator += m * datum.scaled_form_with_root(nu, roots[r]);
        nu += root_weights[r];
      }
    }
    numerator *= 2;
    const Weight mr = mu + datum.rho();
    const long gap = top - datum.scaled_form(mr, mr);
    if (gap <= 0) throw Error("Freudenthal denominator vanished at " + mu.to_string());
    BigInt m;
    BigInt rem;
    mpz_tdiv_qr_ui(m.get_mpz_t(), rem.get_mpz_t(), numerator.get_mpz_t(), static_cast<unsigned long>(gap));
    if (!is_zero(rem)) throw Error("Freudenthal quotient not integral at " + mu.to_string());
    if (is_zero(m)) continue;
    known.emplace(mu, m);
    table.add(mu, level, std::move(m));
  }
  return table;
}

GroupRingElement character_from_table(const RootDatum& datum, const MultiplicityTable& table,
                                      const Limits& limits) {
  GroupRingElement out(datum.rank());
  for (const auto& e : table.dominant_entries()) {
    if (table.depth()) {
      for (const auto& [w, drop] : orbit_within_drop(datum, e.weight, *table.depth() - e.level, limits.orbit_bound))
        out.add_term(w, e.multiplicity);
    } else {
      for (const auto& w : weyl_orbit(datum, e.weight, limits.orbit_bound)) out.add_term(w, e.multiplicity);
    }
    if (out.size() > limits.term_bound) throw BudgetExceeded("character exceeds term bound");
  }
  return out;
}

GroupRingElement irreducible_character(const RootDatum& datum, const Weight& lambda, std::optional<int> depth,
                                       const Limits& limits) {
  return character_from_table(datum, freudenthal(datum, lambda, depth), limits);
}

BigInt weyl_dimension(const RootDatum& datum, const Weight& lambda) {
  if (!lambda.is_integral() || !lambda.is_dominant())
    throw InvalidArgument("weyl_dimension needs a dominant integral weight");
  const Weight lr = lambda + datum.rho();
  BigInt num = 1, den = 1;
  for (const auto& root : datum.positive_roots()) {
    num *= datum.scaled_form_with_root(lr, root);
    den *= datum.scaled_form_with_root(datum.rho(), root);
  }
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) throw Error("non-integral Weyl dimension");
  return BigInt(num / den);
}

std::vector<Weight> weights_of_irrep(const RootDatum& datum, int node, const Limits& limits) {
  if (node < 1 || node > datum.rank()) throw InvalidArgument("node out of range");
  const MultiplicityTable table = freudenthal(datum, datum.fundamental_weight(node));
  std::vector<Weight> out;
  for (const auto& e : table.dominant_entries()) {
    for (const auto& w : weyl_orbit(datum, e.weight, limits.orbit_bound)) out.push_back(w);
    if (out.size() > limits.orbit_bound) throw BudgetExceeded("weight support exceeds orbit bound");
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

BigInt total_dimension(const RootDatum& datum, const MultiplicityTable& table) {
  if (table.depth()) throw InvalidArgument("total_dimension needs an unbounded table");
  BigInt total = 0;
  for (const auto& e : table.dominant_entries())
    total += e.multiplicity * BigInt(static_cast<unsigned long>(orbit_size(datum, e.weight)));
  return total;
}

}  // namespace krchar
