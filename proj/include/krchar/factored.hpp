#ifndef KRCHAR_FACTORED_HPP
#define KRCHAR_FACTORED_HPP

#include <map>
#include <string>

#include "krchar/root_system.hpp"

namespace krchar {

/// sign · e^{prefactor} · Π_{α>0} (1 − e^{−α})^{n_α}, keyed by the index of α
/// in RootDatum::positive_roots(). Zero exponents are never stored, so the
/// representation is canonical and equality is componentwise. The prefactor
/// may lie in the half lattice.
class FactoredRational {
public:
  explicit FactoredRational(int rank) : prefactor_(rank) {}

  static FactoredRational monomial(const Weight& w, int sign = 1);
  /// (1 − e^{−β})^n for any root β; a negative β is rewritten by
  /// (1 − e^{γ}) = −e^{γ}(1 − e^{−γ}).
  static FactoredRational binomial(const RootDatum& datum, const RootVector& beta, int n = 1);

  int sign() const { return sign_; }
  const Weight& prefactor() const { return prefactor_; }
  const std::map<int, int>& exponents() const { return exponents_; }
  int exponent(int root_index) const;
  void add_exponent(int root_index, int n);

  FactoredRational& operator*=(const FactoredRational& o);
  friend FactoredRational operator*(FactoredRational a, const FactoredRational& b) { return a *= b; }
  FactoredRational pow(int k) const;
  FactoredRational inverse() const { return pow(-1); }
  FactoredRational negated() const;

  /// s_a applied to every factor, then canonicalized.
  FactoredRational reflect(const RootDatum& datum, int node) const;

  friend bool operator==(const FactoredRational&, const FactoredRational&) = default;

  std::string to_string(const RootDatum& datum) const;

private:
  int sign_ = 1;
  Weight prefactor_;
  std::map<int, int> exponents_;
};

}  // namespace krchar

#endif
