#ifndef KRCHAR_VERIFY_HPP
#define KRCHAR_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "krchar/factored.hpp"
#include "krchar/limits.hpp"
#include "krchar/root_system.hpp"

namespace krchar {

using Json = nlohmann::json;

struct CheckStats {
  std::size_t terms_peak = 0;
  std::int64_t millis = 0;
};

/// Outcome of one check. A failing report always carries a witness.
struct CheckReport {
  std::string check;
  Json params = Json::object();
  bool pass = false;
  std::optional<Json> witness;
  /// Extra facts a passing run establishes (orders, counts, cross-checks).
  Json details = Json::object();
  CheckStats stats;
};

Json to_json(const CheckReport& report);
CheckReport report_from_json(const Json& j);

/// Every check takes a `perturbed` flag that applies its documented negative
/// control; a perturbed run is expected to fail with a witness.

/// [α]_a + [s_a α]_a = −Σ_{b: C_ab<0} C_ab [α]_b over all roots and nodes.
/// Perturbed: the right side uses a Cartan matrix with C_12 lowered by 1,
/// while s_a still acts through the true weights.
CheckReport check_simpleref(const RootDatum& datum, bool perturbed = false);

/// Π^MY_a in factored form: exponent −[α]_a at every positive root.
FactoredRational my_factored(const RootDatum& datum, int node);

/// (1−e^{α_a})(1−e^{−α_a}) Π_a s_a(Π_a) = Π_b Π_b^{−C_ab} with Π = Π^MY.
/// Perturbed: the exponent at θ in Π_a is raised by one.
CheckReport check_my_norsys(const RootDatum& datum, int node, bool perturbed = false);

/// With Q = Π^MY_a and Q̃ = e^{−α_a/2}(1−e^{−α_a})^{−1} Q^{−1} Π_b Q_b^{−C_ab}:
/// Q̃ = (e^{−α_a/2} − e^{α_a/2}) s_a(Q), and the product relation
/// (e^{α_a/2} − e^{−α_a/2}) Q Q̃ = Π_b Q_b^{−C_ab}. Perturbed: the sign of the
/// (e^{−α_a/2} − e^{α_a/2}) prefactor is flipped.
CheckReport check_qtilde(const RootDatum& datum, int node, bool perturbed = false);

/// (Q_m^a)² − Q_{m+1}^a Q_{m−1}^a = Π_{b~a} Q_m^b in Z[P] for type A_r, every
/// node and 1 ≤ m < m_max, with Q_m^a = χ(L(mω_a)). Perturbed (rank ≥ 2): the right side
/// uses level m+1.
CheckReport check_qsystem_typeA(int rank, int m_max, bool perturbed = false, const Limits& limits = {});

/// Normalized KR series for m = 1..m_max at order N: consecutive differences
/// are e^{−(m+1)α_a} times a series with nonnegative coefficients, and the
/// last one equals the product expansion up to height N. Requires N ≤ m_max.
/// Perturbed: the product expansion is taken at another node.
CheckReport check_limit(const RootDatum& datum, int node, int order, int m_max, bool perturbed = false,
                        const Limits& limits = {});

/// Σ_{w∈W_J} (−1)^ℓ(w) e^{w ρ} = e^ρ Π_{α∈Φ⁺(J)} (1 − e^{−α}). The sides are
/// computed independently (orbit walk and binomial product). Perturbed: one
/// root is left out of the product.
CheckReport check_denominator(const RootDatum& datum, NodeSet J, bool perturbed = false,
                              const Limits& limits = {});

/// Parabolic sets with |W_J| ≤ bound, in bitmask order.
std::vector<NodeSet> parabolic_subsets(const RootDatum& datum, std::uint64_t bound);

/// E8, node 1: Σ_c s_c w_c(e^ρ Π_{Φ⁺(D6)}(1 − e^{−α})) Π_{β ≠ w_c μ}(1 − e^{−β})
/// = (1 − e^{−ω_1}) e^ρ Π_{[α]_1=0}(1 − e^{−α}), over the 14 cosets
/// W_{D7}/W_{D6}, μ = ω_1 − ω_7, β over the roots with [β]_1 = 2.
/// Perturbed: one coset is dropped.
CheckReport check_E8_node1_identity(bool perturbed = false, const Limits& limits = {});

/// F4, node 4: the same identity over W_{1,2,3}/W_{2,3} with μ = 2ω_4 − ω_1
/// and (1 − e^{−2ω_4}) on the right. Perturbed: one coset changes sign.
CheckReport check_F4_node4_identity(bool perturbed = false, const Limits& limits = {});

/// (i) s_a(ω_a) ⪰ μ for every weight μ ≠ ω_a of L(ω_a); (ii) the explicit
/// inequalities for B_r, C_r, F4, G2. Perturbed: (i) uses ω_a − 2α_a.
CheckReport check_wtineq(const RootDatum& datum, int node, bool perturbed = false, const Limits& limits = {});

/// Replays the per-type determination order of the norsys system: seeds are
/// the nodes with a registered polyhedral formula, and each listed equation
/// must hold and leave exactly one new unknown with exponent 1. Perturbed: the
/// last seed is withheld.
CheckReport replay_determination_order(const LieType& type, bool perturbed = false);

/// Seeds and (equation node → determined node) steps per type.
struct DeterminationPlan {
  std::vector<int> seeds;
  std::vector<std::pair<int, int>> steps;
};
DeterminationPlan determination_plan(const LieType& type);

}  // namespace krchar

#endif
