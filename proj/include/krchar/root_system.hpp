#ifndef KRCHAR_ROOT_SYSTEM_HPP
#define KRCHAR_ROOT_SYSTEM_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "krchar/integer.hpp"
#include "krchar/weight.hpp"

namespace krchar {

enum class Family { A, B, C, D, E, F, G };

/// A simple Lie algebra of rank ≤ 8, e.g. "E8". Rank constraints are checked
/// on construction: A_r (r ≥ 1), B_r (r ≥ 2), C_r (r ≥ 3), D_r (r ≥ 4),
/// E_6..E_8, F_4, G_2.
class LieType {
public:
  LieType(Family family, int rank);
  /// Parses "A1".."A8", "B2".."B8", "C3".."C8", "D4".."D8", "E6".."E8", "F4", "G2".
  static LieType parse(std::string_view text);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  bool simply_laced() const;
  std::string name() const;

  friend bool operator==(const LieType&, const LieType&) = default;

private:
  Family family_;
  int rank_;
};

/// Every algebra the library supports, in a fixed order (A1..A8, B2..B8,
/// C3..C8, D4..D8, E6..E8, F4, G2).
std::vector<LieType> all_lie_types();

/// Subset of Dynkin nodes, 1-based.
class NodeSet {
public:
  constexpr NodeSet() = default;
  NodeSet(std::initializer_list<int> nodes);
  static NodeSet all(int rank);
  static constexpr NodeSet from_bits(std::uint16_t bits) {
    NodeSet s;
    s.bits_ = bits;
    return s;
  }

  bool contains(int node) const { return (bits_ >> node) & 1u; }
  void insert(int node) { bits_ |= std::uint16_t(1u << node); }
  void erase(int node) { bits_ &= std::uint16_t(~(1u << node)); }
  bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcount(bits_); }
  bool is_subset_of(NodeSet o) const { return (bits_ & ~o.bits_) == 0; }
  std::uint16_t bits() const { return bits_; }
  std::vector<int> nodes() const;
  std::string to_string() const;

  friend bool operator==(NodeSet, NodeSet) = default;

private:
  std::uint16_t bits_ = 0;
};

/// C_{ab} = α_b(h_a), 1-based indexing.
class CartanMatrix {
public:
  CartanMatrix() = default;
  explicit CartanMatrix(int rank) : rank_(rank) {}
  int rank() const { return rank_; }
  int operator()(int a, int b) const { return m_[a - 1][b - 1]; }
  int& operator()(int a, int b) { return m_[a - 1][b - 1]; }
  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

private:
  int rank_ = 0;
  std::array<std::array<int, kMaxRank>, kMaxRank> m_{};
};

/// Weyl group element as a word s_{l_0} s_{l_1} ... s_{l_k}; acting on a
/// weight, the rightmost letter applies first. sign = (-1)^(length of a
/// reduced expression).
struct WeylWord {
  std::vector<int> letters;
  int sign = 1;

  static WeylWord identity() { return {}; }
  int length() const { return static_cast<int>(letters.size()); }
};

class RootDatum;

/// Integer matrix of a Weyl group element acting on ω-coordinates. Applying
/// it is a fixed 8×8 product, which is what the orbit-heavy loops use.
class WeylAction {
public:
  WeylAction() = default;
  WeylAction(const RootDatum& datum, const WeylWord& word);
  Weight operator()(const Weight& w) const;
  int sign() const { return sign_; }

private:
  int rank_ = 0;
  int sign_ = 1;
  std::array<std::array<int, kMaxRank>, kMaxRank> m_{};
};

/// Immutable description of a simple Lie algebra: Cartan matrix, positive
/// roots (generated by closure from the simple roots), highest root, t-values
/// and the simple roots written in the fundamental-weight basis.
///
/// Node labels: Bourbaki for the classical types, F4 and G2 (B_r and C_r have
/// the short/long end at node r, G2 has the long root at node 1). For E6, E7,
/// E8 the nodes 1..r-1 form a chain and node r is attached to node 3.
/// to_bourbaki()/from_bourbaki() convert.
class RootDatum {
public:
  explicit RootDatum(LieType type);

  const LieType& type() const { return type_; }
  int rank() const { return rank_; }
  const CartanMatrix& cartan() const { return cartan_; }
  std::span<const RootVector> positive_roots() const { return positive_roots_; }
  const RootVector& highest_root() const { return positive_roots_.back(); }
  int t_value(int node) const { return t_[node - 1]; }
  std::span<const int> t_values() const { return {t_.data(), std::size_t(rank_)}; }
  /// α_node in ω-coordinates: column `node` of the Cartan matrix.
  const Weight& simple_root_weight(int node) const { return simple_root_weights_[node - 1]; }
  Weight fundamental_weight(int node) const { return Weight::fundamental(rank_, node); }
  const Weight& rho() const { return rho_; }
  /// (α_node, α_node) with (θ,θ) = 2, i.e. 2 / t_node.
  Rational root_length_squared(int node) const { return make_rational(2, t_[node - 1]); }

  int to_bourbaki(int node) const { return to_bourbaki_[node - 1]; }
  int from_bourbaki(int node) const;

  /// Index into positive_roots(), if `v` is a positive root.
  std::optional<int> positive_root_index(const RootVector& v) const;
  bool is_root(const RootVector& v) const;
  /// Positive roots whose support lies in J.
  std::vector<int> positive_root_indices_in(NodeSet nodes) const;

  /// ω-coordinates of a vector given in the simple-root basis. The result
  /// must lie in P or (1/2)P.
  Weight to_weight(const RootVector& v) const;
  /// λ = Σ c_a α_a solved exactly over the rationals.
  RootVector to_root_coords(const Weight& w) const;

  /// Integer adjugate det(C)·C^{-1} and det(C).
  long determinant() const { return det_; }
  long adjugate(int a, int b) const { return adj_[a - 1][b - 1]; }

  /// S·(λ, μ) as an exact integer, with S = form_scale(). Inputs must be
  /// integral weights.
  long scaled_form(const Weight& a, const Weight& b) const;
  long form_scale() const { return form_scale_; }
  /// S·(λ, α) for λ integral and α integral in the root basis; cheaper than
  /// converting α to a weight first.
  long scaled_form_with_root(const Weight& w, const RootVector& root) const;

private:
  LieType type_;
  int rank_;
  CartanMatrix cartan_;
  std::vector<RootVector> positive_roots_;
  absl::flat_hash_map<RootVector, int> root_index_;
  std::array<int, kMaxRank> t_{};
  std::vector<Weight> simple_root_weights_;
  Weight rho_;
  std::array<int, kMaxRank> to_bourbaki_{};
  long det_ = 1;
  std::array<std::array<long, kMaxRank>, kMaxRank> adj_{};
  long form_scale_ = 1;
};

RootDatum build_root_datum(LieType type);

RootVector highest_root(const RootDatum& datum);

/// Positive roots α with [α]_node = c, in the datum's root order.
std::vector<RootVector> roots_with_coefficient(const RootDatum& datum, int node, long c);

/// s_a(λ) = λ − λ(h_a) α_a. Works on half-lattice weights too.
Weight simple_reflection(const RootDatum& datum, int node, const Weight& w);
RootVector simple_reflection(const RootDatum& datum, int node, const RootVector& v);

Weight apply_weyl_word(const RootDatum& datum, const WeylWord& word, const Weight& w);

inline RootVector weight_to_root_coords(const RootDatum& datum, const Weight& w) {
  return datum.to_root_coords(w);
}

/// λ ≥ μ: λ − μ has nonnegative rational root coordinates.
bool dominance_ge(const RootDatum& datum, const Weight& lambda, const Weight& mu);
/// λ ⪰ μ: λ − μ has nonnegative integer root coordinates.
bool dominance_succeq(const RootDatum& datum, const Weight& lambda, const Weight& mu);

/// Invariant form normalized by (θ,θ) = 2.
Rational bilinear_form(const RootDatum& datum, const Weight& a, const Weight& b);

}  // namespace krchar

#endif
