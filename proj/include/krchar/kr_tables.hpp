#ifndef KRCHAR_KR_TABLES_HPP
#define KRCHAR_KR_TABLES_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "krchar/group_ring.hpp"
#include "krchar/limits.hpp"
#include "krchar/root_system.hpp"
#include "krchar/series.hpp"

namespace krchar {

/// res W_m = ⊕_x L(Σ_j x_j λ_j) over x ≥ 0 with Σ_j b_j x_j = m.
struct PolyhedralData {
  LieType type;
  int node;
  std::vector<int> b;
  std::vector<Weight> lambdas;
};

/// One registry row: coefficients b_j and the λ_j as sums of fundamental
/// weights (node lists; an empty list is λ = 0).
struct RegistryEntry {
  std::string type;
  int node;
  std::vector<int> b;
  std::vector<std::vector<int>> lambda_nodes;
};

/// Nodes with [θ]_a = 1 are supported implicitly (b = (1), λ = (ω_a)); the
/// explicit rows cover the exceptional pairs.
const std::vector<RegistryEntry>& explicit_registry();

std::optional<PolyhedralData> find_polyhedral_data(const RootDatum& datum, int node);
/// Throws Unsupported when no formula is registered.
PolyhedralData polyhedral_data(const RootDatum& datum, int node);
/// Every supported (type, node) pair, for listing.
std::vector<PolyhedralData> supported_pairs();

/// All x ≥ 0 with Σ b_j x_j = m, in lexicographically decreasing order.
std::vector<std::vector<int>> enumerate_lattice_points(const PolyhedralData& data, int m);

/// Σ_x χ(L(λ_x)).
GroupRingElement kr_character_exact(const RootDatum& datum, int node, int m, const Limits& limits = {});

/// e^{−mω_a} Q_m to height N. Summands whose shift mω_a − λ_x has height > N
/// are skipped; the others use Freudenthal at depth N − ht(mω_a − λ_x).
TruncatedSeries kr_character_truncated(const RootDatum& datum, int node, int m, int order,
                                       const Limits& limits = {});

struct KRCharacter {
  int node;
  int level;
  std::variant<GroupRingElement, TruncatedSeries> value;
};
KRCharacter kr_character(const RootDatum& datum, int node, int m, std::optional<int> order,
                         const Limits& limits = {});

}  // namespace krchar

#endif
