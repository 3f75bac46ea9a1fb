#include "krchar/limits.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "krchar/errors.hpp"

namespace krchar {

namespace {
constexpr std::size_t kBytesPerTerm = 64;
}

Limits apply_memory_budget(Limits limits) {
  const char* env = std::getenv("KRCHAR_BUDGET_MB");
  if (env == nullptr || *env == '\0') return limits;
  char* end = nullptr;
  const unsigned long long mb = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || mb == 0)
    throw InvalidArgument("KRCHAR_BUDGET_MB must be a positive integer, got '" + std::string(env) + "'");
  const std::size_t terms = static_cast<std::size_t>(mb) * (1u << 20) / kBytesPerTerm;
  limits.term_bound = std::min(limits.term_bound, std::max<std::size_t>(terms, 1));
  return limits;
}

}  // namespace krchar
