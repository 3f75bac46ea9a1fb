#include "krchar/weight.hpp"

#include <numeric>
#include <sstream>

namespace krchar {

namespace {

void check_rank(int rank) {
  if (rank < 0 || rank > kMaxRank)
    throw InvalidArgument("rank " + std::to_string(rank) + " out of range");
}

void check_same_rank(int a, int b) {
  if (a != b) throw InvalidArgument("rank mismatch in weight arithmetic");
}

}  // namespace

Weight::Weight(int rank) : rank_(static_cast<std::uint8_t>(rank)) { check_rank(rank); }

Weight::Weight(int rank, std::initializer_list<int> coords, int denominator)
    : rank_(static_cast<std::uint8_t>(rank)) {
  check_rank(rank);
  if (static_cast<int>(coords.size()) != rank)
    throw InvalidArgument("weight needs exactly rank coordinates");
  if (denominator != 1 && denominator != 2)
    throw InvalidArgument("weight denominator must be 1 or 2");
  int i = 0;
  for (int v : coords) set(i++, v);
  den_ = static_cast<std::uint8_t>(denominator);
  reduce();
}

Weight::Weight(std::span<const int> coords, int denominator)
    : rank_(static_cast<std::uint8_t>(coords.size())) {
  check_rank(static_cast<int>(coords.size()));
  if (denominator != 1 && denominator != 2)
    throw InvalidArgument("weight denominator must be 1 or 2");
  for (std::size_t i = 0; i < coords.size(); ++i) set(static_cast<int>(i), coords[i]);
  den_ = static_cast<std::uint8_t>(denominator);
  reduce();
}

Weight Weight::fundamental(int rank, int node) {
  if (node < 1 || node > rank) throw InvalidArgument("node out of range");
  Weight w(rank);
  w.c_[node - 1] = 1;
  return w;
}

void Weight::set(int index0, long v) {
  if (v < INT16_MIN || v > INT16_MAX)
    throw InvalidArgument("weight coordinate out of int16 range");
  c_[index0] = static_cast<Coord>(v);
}

void Weight::reduce() {
  if (den_ == 2) {
    for (int i = 0; i < rank_; ++i)
      if (c_[i] % 2 != 0) return;
    for (int i = 0; i < rank_; ++i) c_[i] = static_cast<Coord>(c_[i] / 2);
    den_ = 1;
  }
}

bool Weight::is_zero() const {
  for (int i = 0; i < rank_; ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool Weight::is_dominant() const {
  for (int i = 0; i < rank_; ++i)
    if (c_[i] < 0) return false;
  return true;
}

bool Weight::is_strictly_dominant() const {
  for (int i = 0; i < rank_; ++i)
    if (c_[i] <= 0) return false;
  return true;
}

Weight& Weight::operator+=(const Weight& o) {
  check_same_rank(rank_, o.rank_);
  if (den_ == o.den_) {
    for (int i = 0; i < rank_; ++i) set(i, long(c_[i]) + o.c_[i]);
  } else {
    // one side has denominator 2: lift the other
    const bool self_half = den_ == 2;
    for (int i = 0; i < rank_; ++i) {
      long a = self_half ? c_[i] : 2L * c_[i];
      long b = self_half ? 2L * o.c_[i] : o.c_[i];
      set(i, a + b);
    }
    den_ = 2;
  }
  reduce();
  return *this;
}

Weight& Weight::operator-=(const Weight& o) { return *this += -o; }

Weight Weight::operator-() const {
  Weight r = *this;
  for (int i = 0; i < rank_; ++i) r.set(i, -long(c_[i]));
  return r;
}

Weight operator*(int k, const Weight& w) {
  Weight r = w;
  for (int i = 0; i < w.rank_; ++i) r.set(i, long(k) * w.c_[i]);
  r.reduce();
  return r;
}

Weight Weight::halved() const {
  Weight r = *this;
  if (den_ == 2) throw InvalidArgument("cannot halve a half-lattice weight");
  r.den_ = 2;
  r.reduce();
  return r;
}

std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
  if (auto c = a.den_ <=> b.den_; c != 0) return c;
  return a.c_ <=> b.c_;
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < rank_; ++i) os << (i ? "," : "") << c_[i];
  os << ')';
  if (den_ == 2) os << "/2";
  return os.str();
}

// ---------------------------------------------------------------------------

RootVector::RootVector(int rank, std::initializer_list<long> coeffs, long denominator)
    : den_(denominator), rank_(static_cast<std::uint8_t>(rank)) {
  check_rank(rank);
  if (static_cast<int>(coeffs.size()) != rank)
    throw InvalidArgument("root vector needs exactly rank coefficients");
  if (denominator == 0) throw InvalidArgument("zero denominator");
  int i = 0;
  for (long v : coeffs) num_[i++] = v;
  reduce();
}

RootVector::RootVector(std::span<const long> numerators, long denominator)
    : den_(denominator), rank_(static_cast<std::uint8_t>(numerators.size())) {
  check_rank(static_cast<int>(numerators.size()));
  if (denominator == 0) throw InvalidArgument("zero denominator");
  for (std::size_t i = 0; i < numerators.size(); ++i) num_[i] = numerators[i];
  reduce();
}

RootVector RootVector::simple(int rank, int node) {
  if (node < 1 || node > rank) throw InvalidArgument("node out of range");
  RootVector v(rank);
  v.num_[node - 1] = 1;
  return v;
}

void RootVector::reduce() {
  if (den_ < 0) {
    den_ = -den_;
    for (int i = 0; i < rank_; ++i) num_[i] = -num_[i];
  }
  long g = den_;
  for (int i = 0; i < rank_; ++i) g = std::gcd(g, num_[i]);
  if (g > 1) {
    den_ /= g;
    for (int i = 0; i < rank_; ++i) num_[i] /= g;
  }
}

long RootVector::integer(int node) const {
  if (den_ != 1) throw InvalidArgument("root vector is not integral");
  return num_[node - 1];
}

bool RootVector::is_zero() const {
  for (int i = 0; i < rank_; ++i)
    if (num_[i] != 0) return false;
  return true;
}

bool RootVector::is_nonnegative() const {
  for (int i = 0; i < rank_; ++i)
    if (num_[i] < 0) return false;
  return true;
}

bool RootVector::is_nonpositive() const {
  for (int i = 0; i < rank_; ++i)
    if (num_[i] > 0) return false;
  return true;
}

Rational RootVector::height() const {
  long s = 0;
  for (int i = 0; i < rank_; ++i) s += num_[i];
  Rational r(s, den_);
  r.canonicalize();
  return r;
}

long RootVector::integer_height() const {
  if (den_ != 1) throw InvalidArgument("root vector is not integral");
  long s = 0;
  for (int i = 0; i < rank_; ++i) s += num_[i];
  return s;
}

RootVector& RootVector::operator+=(const RootVector& o) {
  check_same_rank(rank_, o.rank_);
  const long l = std::lcm(den_, o.den_);
  for (int i = 0; i < rank_; ++i) num_[i] = num_[i] * (l / den_) + o.num_[i] * (l / o.den_);
  den_ = l;
  reduce();
  return *this;
}

RootVector& RootVector::operator-=(const RootVector& o) { return *this += -o; }

RootVector RootVector::operator-() const {
  RootVector r = *this;
  for (int i = 0; i < rank_; ++i) r.num_[i] = -num_[i];
  return r;
}

RootVector operator*(long k, RootVector v) {
  for (int i = 0; i < v.rank_; ++i) v.num_[i] *= k;
  v.reduce();
  return v;
}

std::strong_ordering operator<=>(const RootVector& a, const RootVector& b) {
  if (auto c = a.den_ <=> b.den_; c != 0) return c;
  return a.num_ <=> b.num_;
}

std::string RootVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < rank_; ++i) os << (i ? "," : "") << num_[i];
  os << ')';
  if (den_ != 1) os << '/' << den_;
  return os.str();
}

}  // namespace krchar
