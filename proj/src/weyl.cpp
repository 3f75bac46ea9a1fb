#include "krchar/weyl.hpp"

#include <algorithm>
#include <deque>

namespace krchar {

namespace {

void check_nodes(const RootDatum& datum, NodeSet J) {
  if (!J.is_subset_of(NodeSet::all(datum.rank())))
    throw InvalidArgument("node set " + J.to_string() + " exceeds rank " + std::to_string(datum.rank()));
}

struct OrbitPoint {
  Weight weight;
  int parent = -1;
  int letter = 0;
  int length = 0;
};

// Breadth-first W_J-orbit of a W_J-dominant weight. Each step lowers the
// weight by a positive multiple of α_a, so BFS depth equals the length of the
// minimal w with w(λ) = μ.
std::vector<OrbitPoint> orbit_tree(const RootDatum& datum, NodeSet J, const Weight& dominant,
                                   std::size_t bound) {
  std::vector<OrbitPoint> points{{dominant, -1, 0, 0}};
  absl::flat_hash_map<Weight, int> seen{{dominant, 0}};
  const std::vector<int> nodes = J.nodes();
  for (std::size_t head = 0; head < points.size(); ++head) {
    for (int a : nodes) {
      if (points[head].weight[a] <= 0) continue;
      Weight next = simple_reflection(datum, a, points[head].weight);
      if (seen.contains(next)) continue;
      seen.emplace(next, static_cast<int>(points.size()));
      points.push_back({next, static_cast<int>(head), a, points[head].length + 1});
      if (points.size() > bound)
        throw BudgetExceeded("orbit exceeds bound " + std::to_string(bound));
    }
  }
  return points;
}

}  // namespace

std::vector<Weight> parabolic_orbit(const RootDatum& datum, NodeSet J, const Weight& lambda,
                                    std::size_t bound) {
  check_nodes(datum, J);
  const auto tree = orbit_tree(datum, J, dominant_conjugate(datum, lambda, J).weight, bound);
  std::vector<Weight> out;
  out.reserve(tree.size());
  for (const auto& p : tree) out.push_back(p.weight);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<Weight> weyl_orbit(const RootDatum& datum, const Weight& lambda, std::size_t bound) {
  return parabolic_orbit(datum, NodeSet::all(datum.rank()), lambda, bound);
}

std::vector<std::pair<Weight, int>> orbit_within_drop(const RootDatum& datum, const Weight& dominant,
                                                      int max_drop, std::size_t bound) {
  if (!dominant.is_dominant()) throw InvalidArgument("orbit_within_drop needs a dominant weight");
  std::vector<std::pair<Weight, int>> points{{dominant, 0}};
  absl::flat_hash_map<Weight, int> seen{{dominant, 0}};
  for (std::size_t head = 0; head < points.size(); ++head) {
    for (int a = 1; a <= datum.rank(); ++a) {
      const int k = points[head].first[a];
      if (k <= 0) continue;
      const int drop = points[head].second + k;
      if (drop > max_drop) continue;
      Weight next = simple_reflection(datum, a, points[head].first);
      if (!seen.emplace(next, 0).second) continue;
      points.emplace_back(next, drop);
      if (points.size() > bound)
        throw BudgetExceeded("orbit exceeds bound " + std::to_string(bound));
    }
  }
  return points;
}

DominantConjugate dominant_conjugate(const RootDatum& datum, const Weight& lambda, NodeSet J) {
  check_nodes(datum, J);
  DominantConjugate out{lambda, {}};
  const std::vector<int> nodes = J.nodes();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int a : nodes) {
      if (out.weight[a] < 0) {
        out.weight = simple_reflection(datum, a, out.weight);
        out.word.letters.insert(out.word.letters.begin(), a);
        out.word.sign = -out.word.sign;
        moved = true;
      }
    }
  }
  return out;
}

DominantConjugate dominant_conjugate(const RootDatum& datum, const Weight& lambda) {
  return dominant_conjugate(datum, lambda, NodeSet::all(datum.rank()));
}

std::uint64_t weyl_group_order(const RootDatum& datum, NodeSet J) {
  check_nodes(datum, J);
  Rational order = 1;
  for (int k : datum.positive_root_indices_in(J)) {
    const long h = datum.positive_roots()[k].integer_height();
    order *= make_rational(h + 1, h);
  }
  order.canonicalize();
  if (order.get_den() != 1) throw Error("non-integral Weyl group order");
  return order.get_num().get_ui();
}

std::uint64_t weyl_group_order(const RootDatum& datum) {
  return weyl_group_order(datum, NodeSet::all(datum.rank()));
}

std::uint64_t orbit_size(const RootDatum& datum, const Weight& lambda) {
  const Weight dom = dominant_conjugate(datum, lambda).weight;
  NodeSet stabilizer;
  for (int a = 1; a <= datum.rank(); ++a)
    if (dom[a] == 0) stabilizer.insert(a);
  return weyl_group_order(datum) / weyl_group_order(datum, stabilizer);
}

GroupRingElement alternating_sum_over_parabolic(const RootDatum& datum, NodeSet J,
                                                const Weight& lambda, std::size_t bound) {
  check_nodes(datum, J);
  const DominantConjugate dom = dominant_conjugate(datum, lambda, J);
  GroupRingElement out(datum.rank());
  for (int a : J.nodes())
    if (dom.weight[a] == 0) return out;
  if (weyl_group_order(datum, J) > bound)
    throw BudgetExceeded("|W_J| exceeds bound " + std::to_string(bound));
  const auto tree = orbit_tree(datum, J, dom.weight, bound);
  out.reserve(tree.size());
  // λ = u⁻¹(dom) with ε(u) = dom.word.sign
  for (const auto& p : tree)
    out.add_term(p.weight, BigInt((p.length % 2 == 0 ? 1 : -1) * dom.word.sign));
  return out;
}

std::vector<WeylWord> coset_representatives(const RootDatum& datum, NodeSet J, NodeSet K,
                                            std::size_t bound) {
  check_nodes(datum, J);
  if (!K.is_subset_of(J)) throw InvalidArgument("coset_representatives needs K ⊆ J");
  Weight seed(datum.rank());
  for (int b : J.nodes())
    if (!K.contains(b)) seed += datum.fundamental_weight(b);
  const auto tree = orbit_tree(datum, J, seed, bound);
  std::vector<WeylWord> out;
  out.reserve(tree.size());
  for (const auto& p : tree) {
    WeylWord w;
    // word(p) = s_letter · word(parent)
    for (int i = static_cast<int>(&p - tree.data()); tree[i].parent >= 0; i = tree[i].parent)
      w.letters.push_back(tree[i].letter);
    w.sign = (p.length % 2 == 0) ? 1 : -1;
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace krchar
