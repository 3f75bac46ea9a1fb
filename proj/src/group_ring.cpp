#include "krchar/group_ring.hpp"

#include <cmath>
#include <sstream>

namespace krchar {

EvaluationPoint::EvaluationPoint(std::vector<double> coords) : coords_(std::move(coords)) {
  for (double c : coords_)
    if (!(c > 0.0) || !std::isfinite(c))
      throw InvalidArgument("evaluation point must be strictly dominant and finite");
}

double evaluate_numeric(const RootDatum& datum, const GroupRingElement& x, const EvaluationPoint& mu) {
  const int r = datum.rank();
  if (static_cast<int>(mu.coords().size()) != r)
    throw InvalidArgument("evaluation point has the wrong rank");
  // (λ, μ) = Σ_a λ_a · g_a with g_a = Σ_b (C^{-1})_ab μ_b / t_a
  std::vector<double> g(r, 0.0);
  for (int a = 1; a <= r; ++a) {
    double s = 0.0;
    for (int b = 1; b <= r; ++b) s += double(datum.adjugate(a, b)) * mu.coords()[b - 1];
    g[a - 1] = s / double(datum.determinant()) / datum.t_value(a);
  }
  double total = 0.0;
  for (const auto& [w, c] : x.terms()) {
    double e = 0.0;
    for (int a = 0; a < r; ++a) e += w.coord(a) * g[a];
    e /= w.denominator();
    const double term = to_double(c) * std::exp(e);
    if (!std::isfinite(term)) throw NumericOverflow("exp overflow at weight " + w.to_string());
    total += term;
  }
  if (!std::isfinite(total)) throw NumericOverflow("numeric sum overflow");
  return total;
}

std::string serialize(const GroupRingElement& x) {
  std::ostringstream os;
  for (const auto& [w, c] : x.sorted_terms()) {
    os << c.get_str() << ';';
    for (int a = 0; a < w.rank(); ++a) os << ' ' << w.coord(a);
    if (w.denominator() != 1) os << " /" << w.denominator();
    os << '\n';
  }
  return os.str();
}

GroupRingElement parse_group_ring(const std::string& text) {
  GroupRingElement out;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    const auto semi = line.find(';');
    if (semi == std::string::npos) throw InvalidArgument("missing ';' in term line: " + line);
    BigInt c;
    if (c.set_str(line.substr(0, semi), 10) != 0) throw InvalidArgument("bad coefficient: " + line);
    std::istringstream rest(line.substr(semi + 1));
    std::vector<int> coords;
    int den = 1;
    std::string tok;
    while (rest >> tok) {
      if (tok[0] == '/') {
        den = std::stoi(tok.substr(1));
      } else {
        coords.push_back(std::stoi(tok));
      }
    }
    out.add_term(Weight(coords, den), c);
  }
  return out;
}

}  // namespace krchar
