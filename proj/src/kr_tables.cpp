#include "krchar/kr_tables.hpp"

#include "krchar/char_formula.hpp"

namespace krchar {

const std::vector<RegistryEntry>& explicit_registry() {
  static const std::vector<RegistryEntry> rows = {
      // θ = ω_a with [θ]_a = 2: Q_m = Σ_{k≤m} χ(L(kω_a))
      {"E7", 1, {1, 1}, {{}, {1}}},
      {"E8", 7, {1, 1}, {{}, {7}}},
      {"F4", 1, {1, 1}, {{}, {1}}},
      {"G2", 1, {1, 1}, {{}, {1}}},
      {"E8", 1, {1, 1, 1}, {{}, {1}, {7}}},
      {"F4", 4, {2, 2, 1}, {{}, {1}, {4}}},
  };
  return rows;
}

std::optional<PolyhedralData> find_polyhedral_data(const RootDatum& datum, int node) {
  if (node < 1 || node > datum.rank()) throw InvalidArgument("node out of range");
  const std::string name = datum.type().name();
  for (const auto& row : explicit_registry()) {
    if (row.type != name || row.node != node) continue;
    PolyhedralData d{datum.type(), node, row.b, {}};
    for (const auto& nodes : row.lambda_nodes) {
      Weight w(datum.rank());
      for (int b : nodes) w += datum.fundamental_weight(b);
      d.lambdas.push_back(w);
    }
    return d;
  }
  if (datum.highest_root().integer(node) == 1)
    return PolyhedralData{datum.type(), node, {1}, {datum.fundamental_weight(node)}};
  return std::nullopt;
}

PolyhedralData polyhedral_data(const RootDatum& datum, int node) {
  auto d = find_polyhedral_data(datum, node);
  if (!d)
    throw Unsupported("no polyhedral formula registered for " + datum.type().name() + " node " +
                      std::to_string(node));
  return *d;
}

std::vector<PolyhedralData> supported_pairs() {
  std::vector<PolyhedralData> out;
  for (const auto& t : all_lie_types()) {
    const RootDatum d(t);
    for (int a = 1; a <= d.rank(); ++a)
      if (auto p = find_polyhedral_data(d, a)) out.push_back(*p);
  }
  return out;
}

std::vector<std::vector<int>> enumerate_lattice_points(const PolyhedralData& data, int m) {
  if (m < 0) throw InvalidArgument("negative level");
  std::vector<std::vector<int>> out;
  std::vector<int> x(data.b.size(), 0);
  auto rec = [&](auto&& self, std::size_t j, int remaining) -> void {
    if (j + 1 == data.b.size()) {
      if (remaining % data.b[j] == 0) {
        x[j] = remaining / data.b[j];
        out.push_back(x);
      }
      return;
    }
    for (int v = remaining / data.b[j]; v >= 0; --v) {
      x[j] = v;
      self(self, j + 1, remaining - v * data.b[j]);
    }
  };
  if (!data.b.empty()) rec(rec, 0, m);
  return out;
}

namespace {

Weight lattice_weight(const PolyhedralData& data, const std::vector<int>& x, int rank) {
  Weight w(rank);
  for (std::size_t j = 0; j < x.size(); ++j) w += x[j] * data.lambdas[j];
  return w;
}

}  // namespace

GroupRingElement kr_character_exact(const RootDatum& datum, int node, int m, const Limits& limits) {
  const PolyhedralData data = polyhedral_data(datum, node);
  GroupRingElement out(datum.rank());
  for (const auto& x : enumerate_lattice_points(data, m))
    out += irreducible_character(datum, lattice_weight(data, x, datum.rank()), std::nullopt, limits);
  return out;
}

TruncatedSeries kr_character_truncated(const RootDatum& datum, int node, int m, int order, const Limits& limits) {
  const PolyhedralData data = polyhedral_data(datum, node);
  const Weight base = m * datum.fundamental_weight(node);
  TruncatedSeries out(datum.rank(), order);
  for (const auto& x : enumerate_lattice_points(data, m)) {
    const Weight lambda = lattice_weight(data, x, datum.rank());
    const int shift = exponent_height(exponent_from_root(datum.to_root_coords(base - lambda)));
    if (shift > order) continue;
    out += normalized_from_character(datum, base, freudenthal(datum, lambda, order - shift), order, limits);
  }
  return out;
}

KRCharacter kr_character(const RootDatum& datum, int node, int m, std::optional<int> order, const Limits& limits) {
  if (order) return {node, m, kr_character_truncated(datum, node, m, *order, limits)};
  return {node, m, kr_character_exact(datum, node, m, limits)};
}

}  // namespace krchar
