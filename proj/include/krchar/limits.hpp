#ifndef KRCHAR_LIMITS_HPP
#define KRCHAR_LIMITS_HPP

#include <cstddef>

namespace krchar {

/// Runtime bounds. Exceeding either one throws BudgetExceeded.
struct Limits {
  /// Largest orbit, coset set or parabolic subgroup that may be enumerated.
  std::size_t orbit_bound = 10'000'000;
  /// Largest number of stored terms in a single group-ring element.
  std::size_t term_bound = 100'000'000;
};

/// Applies KRCHAR_BUDGET_MB, when set, as a cap on term_bound (about 64 bytes
/// per stored term).
Limits apply_memory_budget(Limits limits);

}  // namespace krchar

#endif
