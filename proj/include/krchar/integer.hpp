#ifndef KRCHAR_INTEGER_HPP
#define KRCHAR_INTEGER_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <type_traits>

#include <gmpxx.h>

#include "krchar/errors.hpp"

namespace krchar {

using BigInt = mpz_class;
using Rational = mpq_class;

/// 64-bit integer coefficient that throws CoefficientOverflow instead of
/// wrapping. Used on the hot paths of large group-ring products; a caller that
/// catches the overflow reruns the computation with BigInt.
class CheckedInt {
public:
  constexpr CheckedInt() = default;
  constexpr CheckedInt(std::int64_t v) : v_(v) {}

  constexpr std::int64_t value() const { return v_; }

  CheckedInt& operator+=(CheckedInt o) {
    if (__builtin_add_overflow(v_, o.v_, &v_)) throw CoefficientOverflow();
    return *this;
  }
  CheckedInt& operator-=(CheckedInt o) {
    if (__builtin_sub_overflow(v_, o.v_, &v_)) throw CoefficientOverflow();
    return *this;
  }
  CheckedInt& operator*=(CheckedInt o) {
    if (__builtin_mul_overflow(v_, o.v_, &v_)) throw CoefficientOverflow();
    return *this;
  }
  friend CheckedInt operator+(CheckedInt a, CheckedInt b) { return a += b; }
  friend CheckedInt operator-(CheckedInt a, CheckedInt b) { return a -= b; }
  friend CheckedInt operator*(CheckedInt a, CheckedInt b) { return a *= b; }
  CheckedInt operator-() const { return CheckedInt(0) - *this; }

  friend constexpr bool operator==(CheckedInt a, CheckedInt b) = default;
  friend constexpr auto operator<=>(CheckedInt a, CheckedInt b) = default;

  friend std::ostream& operator<<(std::ostream& os, CheckedInt c) {
    return os << c.v_;
  }

private:
  std::int64_t v_ = 0;
};

/// n/d in lowest terms; mpq_class(n, d) alone does not canonicalize.
inline Rational make_rational(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline bool is_zero(const BigInt& x) { return sgn(x) == 0; }
inline bool is_zero(CheckedInt x) { return x.value() == 0; }
inline bool is_zero(std::int64_t x) { return x == 0; }

inline std::string to_string(const BigInt& x) { return x.get_str(); }
inline std::string to_string(CheckedInt x) { return std::to_string(x.value()); }
inline std::string to_string(std::int64_t x) { return std::to_string(x); }

inline BigInt to_bigint(const BigInt& x) { return x; }
inline BigInt to_bigint(CheckedInt x) { return BigInt(static_cast<long>(x.value())); }

inline double to_double(const BigInt& x) { return x.get_d(); }
inline double to_double(CheckedInt x) { return static_cast<double>(x.value()); }

/// Conversion between coefficient rings; BigInt -> CheckedInt throws when the
/// value does not fit.
template <class To>
To coefficient_cast(const BigInt& x) {
  if constexpr (std::is_same_v<To, BigInt>) {
    return x;
  } else {
    if (!x.fits_slong_p()) throw CoefficientOverflow();
    return To(static_cast<std::int64_t>(x.get_si()));
  }
}
template <class To>
To coefficient_cast(CheckedInt x) {
  if constexpr (std::is_same_v<To, BigInt>) {
    return BigInt(static_cast<long>(x.value()));
  } else {
    return x;
  }
}

}  // namespace krchar

#endif
