#include "krchar/factored.hpp"

#include <sstream>

namespace krchar {

FactoredRational FactoredRational::monomial(const Weight& w, int sign) {
  FactoredRational f(w.rank());
  f.prefactor_ = w;
  f.sign_ = sign;
  return f;
}

FactoredRational FactoredRational::binomial(const RootDatum& datum, const RootVector& beta, int n) {
  FactoredRational f(datum.rank());
  if (auto idx = datum.positive_root_index(beta)) {
    f.add_exponent(*idx, n);
    return f;
  }
  const RootVector gamma = -beta;
  auto idx = datum.positive_root_index(gamma);
  if (!idx) throw InvalidArgument(beta.to_string() + " is not a root");
  f.add_exponent(*idx, n);
  if (n % 2 != 0) f.sign_ = -1;
  f.prefactor_ = n * datum.to_weight(gamma);
  return f;
}

int FactoredRational::exponent(int root_index) const {
  auto it = exponents_.find(root_index);
  return it == exponents_.end() ? 0 : it->second;
}

void FactoredRational::add_exponent(int root_index, int n) {
  if (n == 0) return;
  auto [it, inserted] = exponents_.try_emplace(root_index, n);
  if (!inserted && (it->second += n) == 0) exponents_.erase(it);
}

FactoredRational& FactoredRational::operator*=(const FactoredRational& o) {
  sign_ *= o.sign_;
  prefactor_ += o.prefactor_;
  for (const auto& [k, n] : o.exponents_) add_exponent(k, n);
  return *this;
}

FactoredRational FactoredRational::pow(int k) const {
  FactoredRational f(prefactor_.rank());
  f.sign_ = (k % 2 != 0) ? sign_ : 1;
  f.prefactor_ = k * prefactor_;
  for (const auto& [idx, n] : exponents_) f.add_exponent(idx, n * k);
  return f;
}

FactoredRational FactoredRational::negated() const {
  FactoredRational f = *this;
  f.sign_ = -f.sign_;
  return f;
}

FactoredRational FactoredRational::reflect(const RootDatum& datum, int node) const {
  FactoredRational f = monomial(simple_reflection(datum, node, prefactor_), sign_);
  for (const auto& [idx, n] : exponents_)
    f *= binomial(datum, simple_reflection(datum, node, datum.positive_roots()[idx]), n);
  return f;
}

std::string FactoredRational::to_string(const RootDatum& datum) const {
  std::ostringstream os;
  os << (sign_ < 0 ? "-" : "") << "e^" << prefactor_.to_string();
  for (const auto& [idx, n] : exponents_)
    os << " (1-e^-" << datum.positive_roots()[idx].to_string() << ")^" << n;
  return os.str();
}

}  // namespace krchar
