#ifndef KRCHAR_WEYL_HPP
#define KRCHAR_WEYL_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "krchar/group_ring.hpp"
#include "krchar/limits.hpp"
#include "krchar/root_system.hpp"

namespace krchar {

/// W·λ, sorted decreasingly. Throws BudgetExceeded past `bound` elements.
std::vector<Weight> weyl_orbit(const RootDatum& datum, const Weight& lambda,
                               std::size_t bound = Limits{}.orbit_bound);

/// Orbit restricted to the parabolic subgroup W_J.
std::vector<Weight> parabolic_orbit(const RootDatum& datum, NodeSet J, const Weight& lambda,
                                    std::size_t bound = Limits{}.orbit_bound);

/// Orbit points w(λ) of a dominant λ with ht(λ − w(λ)) ≤ max_drop, paired
/// with that height. Downward reflection chains only increase the drop, so
/// the walk prunes at max_drop.
std::vector<std::pair<Weight, int>> orbit_within_drop(const RootDatum& datum, const Weight& dominant,
                                                      int max_drop,
                                                      std::size_t bound = Limits{}.orbit_bound);

struct DominantConjugate {
  Weight weight;
  /// w with w(λ) = weight; sign is (−1)^ℓ(w).
  WeylWord word;
};

/// The unique W_J-conjugate of λ with λ(h_a) ≥ 0 for every a ∈ J.
DominantConjugate dominant_conjugate(const RootDatum& datum, const Weight& lambda,
                                     NodeSet J);
DominantConjugate dominant_conjugate(const RootDatum& datum, const Weight& lambda);

/// |W_J| = Π_{α ∈ Φ⁺(J)} (ht α + 1)/ht α.
std::uint64_t weyl_group_order(const RootDatum& datum, NodeSet J);
std::uint64_t weyl_group_order(const RootDatum& datum);

/// |W·λ| = |W| / |W_λ| without enumerating.
std::uint64_t orbit_size(const RootDatum& datum, const Weight& lambda);

/// Σ_{w ∈ W_J} (−1)^ℓ(w) e^{w(λ)}. Zero when λ is W_J-singular; otherwise the
/// W_J-orbit of λ is regular and each orbit point carries the parity of the
/// path that reaches it.
GroupRingElement alternating_sum_over_parabolic(const RootDatum& datum, NodeSet J,
                                                const Weight& lambda,
                                                std::size_t bound = Limits{}.orbit_bound);

/// Minimal-length representatives of W_J / W_K with their signs, found as the
/// W_J-orbit of Σ_{b ∈ J∖K} ω_b (whose W_J-stabilizer is W_K). The identity
/// comes first and lengths never decrease along the list.
std::vector<WeylWord> coset_representatives(const RootDatum& datum, NodeSet J, NodeSet K,
                                            std::size_t bound = Limits{}.orbit_bound);

}  // namespace krchar

#endif
