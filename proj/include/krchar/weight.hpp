#ifndef KRCHAR_WEIGHT_HPP
#define KRCHAR_WEIGHT_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "krchar/errors.hpp"
#include "krchar/integer.hpp"

namespace krchar {

inline constexpr int kMaxRank = 8;

/// Element of the weight lattice P, or of (1/2)P, in the fundamental-weight
/// basis: the weight is (c_1 ω_1 + ... + c_r ω_r) / denominator.
///
/// Coordinates are stored as int16; arithmetic throws InvalidArgument when a
/// result leaves that range. The stored form is always reduced: denominator 2
/// only when some coordinate is odd.
class Weight {
public:
  using Coord = std::int16_t;

  Weight() = default;
  explicit Weight(int rank);
  Weight(int rank, std::initializer_list<int> coords, int denominator = 1);
  Weight(std::span<const int> coords, int denominator = 1);

  static Weight fundamental(int rank, int node);  // ω_node, 1-based
  static Weight zero(int rank) { return Weight(rank); }

  int rank() const { return rank_; }
  int denominator() const { return den_; }
  /// Numerator coordinate at 1-based node.
  int operator[](int node) const { return c_[node - 1]; }
  int coord(int index0) const { return c_[index0]; }
  const std::array<Coord, kMaxRank>& raw() const { return c_; }

  bool is_zero() const;
  bool is_integral() const { return den_ == 1; }
  /// All λ(h_a) ≥ 0 (integral weights only).
  bool is_dominant() const;
  bool is_strictly_dominant() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight operator-() const;
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, const Weight& w);
  /// w / 2 in the half lattice.
  Weight halved() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  /// Lexicographic on (denominator, coordinates); used for canonical output.
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b);

  template <class H>
  friend H AbslHashValue(H h, const Weight& w) {
    std::uint64_t lo = 0, hi = 0;
    for (int i = 0; i < 4; ++i) {
      lo |= std::uint64_t(std::uint16_t(w.c_[i])) << (16 * i);
      hi |= std::uint64_t(std::uint16_t(w.c_[i + 4])) << (16 * i);
    }
    return H::combine(std::move(h), lo, hi, w.den_);
  }

  std::string to_string() const;

private:
  void set(int index0, long v);
  void reduce();

  std::array<Coord, kMaxRank> c_{};
  std::uint8_t rank_ = 0;
  std::uint8_t den_ = 1;
};

/// Rational vector in the simple-root basis, stored as integer numerators over
/// a common positive denominator in lowest terms.
class RootVector {
public:
  RootVector() = default;
  explicit RootVector(int rank) : rank_(static_cast<std::uint8_t>(rank)) {}
  RootVector(int rank, std::initializer_list<long> coeffs, long denominator = 1);
  RootVector(std::span<const long> numerators, long denominator);

  static RootVector simple(int rank, int node);

  int rank() const { return rank_; }
  long denominator() const { return den_; }
  long numerator(int node) const { return num_[node - 1]; }
  /// [α]_node as a rational.
  Rational operator[](int node) const { return make_rational(num_[node - 1], den_); }
  /// [α]_node for integral vectors; throws InvalidArgument otherwise.
  long integer(int node) const;

  bool is_integral() const { return den_ == 1; }
  bool is_zero() const;
  /// Every coefficient ≥ 0.
  bool is_nonnegative() const;
  bool is_nonpositive() const;
  /// Sum of the coefficients (rational).
  Rational height() const;
  /// Sum of the coefficients for an integral vector.
  long integer_height() const;

  RootVector& operator+=(const RootVector& o);
  RootVector& operator-=(const RootVector& o);
  RootVector operator-() const;
  friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
  friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }
  friend RootVector operator*(long k, RootVector v);

  friend bool operator==(const RootVector&, const RootVector&) = default;
  friend std::strong_ordering operator<=>(const RootVector& a, const RootVector& b);

  template <class H>
  friend H AbslHashValue(H h, const RootVector& v) {
    return H::combine(std::move(h), v.num_, v.den_);
  }

  std::string to_string() const;

private:
  void reduce();

  std::array<long, kMaxRank> num_{};
  long den_ = 1;
  std::uint8_t rank_ = 0;
};

}  // namespace krchar

#endif
