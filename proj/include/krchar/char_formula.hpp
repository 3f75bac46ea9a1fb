#ifndef KRCHAR_CHAR_FORMULA_HPP
#define KRCHAR_CHAR_FORMULA_HPP

#include <map>
#include <optional>
#include <vector>

#include "krchar/group_ring.hpp"
#include "krchar/limits.hpp"
#include "krchar/root_system.hpp"

namespace krchar {

/// Weight multiplicities of L(λ), stored on dominant weights only and grouped
/// by level ht(λ − μ). With a depth N, exactly the dominant weights of level
/// ≤ N are present.
class MultiplicityTable {
public:
  MultiplicityTable(Weight highest, std::optional<int> depth)
      : highest_(std::move(highest)), depth_(depth) {}

  const Weight& highest() const { return highest_; }
  std::optional<int> depth() const { return depth_; }

  /// dim L(λ)_μ for any μ within depth (0 when μ is not a weight). Looks up
  /// the dominant conjugate; throws InvalidArgument past the depth.
  BigInt multiplicity(const RootDatum& datum, const Weight& mu) const;

  /// Dominant entries as (weight, level, multiplicity), by level then weight.
  struct Entry {
    Weight weight;
    int level;
    BigInt multiplicity;
  };
  const std::vector<Entry>& dominant_entries() const { return entries_; }

  void add(Weight w, int level, BigInt m);

private:
  Weight highest_;
  std::optional<int> depth_;
  std::vector<Entry> entries_;
  absl::flat_hash_map<Weight, std::size_t> index_;
};

/// Dominant μ ⪯ λ with ht(λ − μ) ≤ depth, by level then weight. Built by
/// subtracting positive roots inside the dominant chamber.
std::vector<std::pair<Weight, int>> dominant_weights_below(const RootDatum& datum, const Weight& lambda,
                                                           std::optional<int> depth);

/// Freudenthal's recursion, level by level.
MultiplicityTable freudenthal(const RootDatum& datum, const Weight& lambda,
                             std::optional<int> depth = std::nullopt);

/// χ(L(λ)), or its part of level ≤ depth.
GroupRingElement irreducible_character(const RootDatum& datum, const Weight& lambda,
                                       std::optional<int> depth = std::nullopt,
                                       const Limits& limits = {});
GroupRingElement character_from_table(const RootDatum& datum, const MultiplicityTable& table,
                                      const Limits& limits = {});

/// Π_{α>0} (λ+ρ, α)/(ρ, α).
BigInt weyl_dimension(const RootDatum& datum, const Weight& lambda);

/// Ω(L(ω_a)), sorted decreasingly.
std::vector<Weight> weights_of_irrep(const RootDatum& datum, int node, const Limits& limits = {});

/// Σ of |W·μ| · m(μ) over the dominant entries of an unbounded table.
BigInt total_dimension(const RootDatum& datum, const MultiplicityTable& table);

}  // namespace krchar

#endif
