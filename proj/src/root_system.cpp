#include "krchar/root_system.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace krchar {

// ---------------------------------------------------------------------------
// LieType

LieType::LieType(Family family, int rank) : family_(family), rank_(rank) {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 3; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok || rank > kMaxRank)
    throw InvalidArgument("invalid Lie type " + std::string(1, "ABCDEFG"[int(family)]) +
                          std::to_string(rank));
}

LieType LieType::parse(std::string_view text) {
  if (text.size() != 2 || text[1] < '0' || text[1] > '9')
    throw InvalidArgument("cannot parse Lie type '" + std::string(text) + "'");
  const char f = text[0];
  const auto pos = std::string_view("ABCDEFG").find(f);
  if (pos == std::string_view::npos)
    throw InvalidArgument("cannot parse Lie type '" + std::string(text) + "'");
  return LieType(static_cast<Family>(pos), text[1] - '0');
}

bool LieType::simply_laced() const {
  return family_ == Family::A || family_ == Family::D || family_ == Family::E;
}

std::string LieType::name() const {
  return std::string(1, "ABCDEFG"[int(family_)]) + std::to_string(rank_);
}

std::vector<LieType> all_lie_types() {
  std::vector<LieType> out;
  for (int r = 1; r <= 8; ++r) out.emplace_back(Family::A, r);
  for (int r = 2; r <= 8; ++r) out.emplace_back(Family::B, r);
  for (int r = 3; r <= 8; ++r) out.emplace_back(Family::C, r);
  for (int r = 4; r <= 8; ++r) out.emplace_back(Family::D, r);
  for (int r = 6; r <= 8; ++r) out.emplace_back(Family::E, r);
  out.emplace_back(Family::F, 4);
  out.emplace_back(Family::G, 2);
  return out;
}

// ---------------------------------------------------------------------------
// NodeSet

NodeSet::NodeSet(std::initializer_list<int> nodes) {
  for (int n : nodes) {
    if (n < 1 || n > kMaxRank) throw InvalidArgument("node out of range");
    insert(n);
  }
}

NodeSet NodeSet::all(int rank) {
  NodeSet s;
  for (int a = 1; a <= rank; ++a) s.insert(a);
  return s;
}

std::vector<int> NodeSet::nodes() const {
  std::vector<int> out;
  for (int a = 1; a <= kMaxRank; ++a)
    if (contains(a)) out.push_back(a);
  return out;
}

std::string NodeSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int a : nodes()) {
    os << (first ? "" : ",") << a;
    first = false;
  }
  os << '}';
  return os.str();
}

// ---------------------------------------------------------------------------
// Dynkin data

namespace {

struct Diagram {
  std::vector<std::pair<int, int>> edges;
  // Twice the squared length of each simple root, up to a common factor.
  std::vector<int> length;
  std::vector<int> to_bourbaki;
};

Diagram diagram_for(const LieType& t) {
  const int r = t.rank();
  Diagram d;
  d.length.assign(r, 2);
  d.to_bourbaki.resize(r);
  std::iota(d.to_bourbaki.begin(), d.to_bourbaki.end(), 1);
  auto chain = [&](int last) {
    for (int a = 1; a < last; ++a) d.edges.emplace_back(a, a + 1);
  };
  switch (t.family()) {
    case Family::A: chain(r); break;
    case Family::B:
      chain(r);
      d.length.assign(r, 4);
      d.length[r - 1] = 2;
      break;
    case Family::C:
      chain(r);
      d.length[r - 1] = 4;
      break;
    case Family::D:
      chain(r - 1);
      d.edges.emplace_back(r - 2, r);
      break;
    case Family::E:
      // chain 1..r-1 with node r attached to node 3
      chain(r - 1);
      d.edges.emplace_back(3, r);
      d.to_bourbaki[0] = 1;
      for (int a = 2; a <= r - 1; ++a) d.to_bourbaki[a - 1] = a + 1;
      d.to_bourbaki[r - 1] = 2;
      break;
    case Family::F:
      chain(4);
      d.length = {4, 4, 2, 2};
      break;
    case Family::G:
      chain(2);
      d.length = {6, 2};
      break;
  }
  return d;
}

CartanMatrix cartan_from_diagram(int rank, const Diagram& d) {
  CartanMatrix c(rank);
  for (int a = 1; a <= rank; ++a) c(a, a) = 2;
  for (auto [a, b] : d.edges) {
    // (α_a, α_b) = -max(|α_a|², |α_b|²)/2 for adjacent nodes
    const int ip = -std::max(d.length[a - 1], d.length[b - 1]) / 2;
    c(a, b) = 2 * ip / d.length[a - 1];
    c(b, a) = 2 * ip / d.length[b - 1];
  }
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------
// RootDatum

RootDatum::RootDatum(LieType type) : type_(type), rank_(type.rank()) {
  const Diagram diagram = diagram_for(type);
  cartan_ = cartan_from_diagram(rank_, diagram);
  for (int a = 0; a < rank_; ++a) to_bourbaki_[a] = diagram.to_bourbaki[a];
  const int r = rank_;

  // Exact inverse of the Cartan matrix by Gauss-Jordan over Q.
  {
    std::vector<std::vector<Rational>> m(r, std::vector<Rational>(2 * r));
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) m[i][j] = cartan_(i + 1, j + 1);
      m[i][r + i] = 1;
    }
    Rational det = 1;
    for (int col = 0; col < r; ++col) {
      int piv = col;
      while (piv < r && m[piv][col] == 0) ++piv;
      if (piv == r) throw Error("singular Cartan matrix");
      if (piv != col) {
        std::swap(m[piv], m[col]);
        det = -det;
      }
      det *= m[col][col];
      const Rational inv = 1 / m[col][col];
      for (auto& x : m[col]) x *= inv;
      for (int i = 0; i < r; ++i) {
        if (i == col || m[i][col] == 0) continue;
        const Rational f = m[i][col];
        for (int j = 0; j < 2 * r; ++j) m[i][j] -= f * m[col][j];
      }
    }
    if (det.get_den() != 1) throw Error("non-integral Cartan determinant");
    det_ = det.get_num().get_si();
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        Rational v = m[i][r + j] * det_;
        if (v.get_den() != 1) throw Error("non-integral adjugate");
        adj_[i][j] = v.get_num().get_si();
      }
  }

  // Positive roots by closure: β + α_i is a root iff p − β(h_i) > 0, where p
  // is the length of the α_i-string below β.
  {
    std::vector<RootVector> level;
    for (int a = 1; a <= r; ++a) level.push_back(RootVector::simple(r, a));
    for (const auto& v : level) root_index_.emplace(v, 0);
    std::vector<RootVector> all = level;
    while (!level.empty()) {
      std::vector<RootVector> next;
      for (const auto& beta : level) {
        for (int i = 1; i <= r; ++i) {
          long pairing = 0;  // β(h_i)
          for (int b = 1; b <= r; ++b) pairing += beta.integer(b) * cartan_(i, b);
          int p = 0;
          RootVector down = beta;
          const RootVector ai = RootVector::simple(r, i);
          while (true) {
            down -= ai;
            if (!root_index_.contains(down)) break;
            ++p;
          }
          if (p - pairing > 0) {
            RootVector up = beta + ai;
            if (root_index_.emplace(up, 0).second) next.push_back(up);
          }
        }
      }
      all.insert(all.end(), next.begin(), next.end());
      level = std::move(next);
    }
    std::sort(all.begin(), all.end(), [](const RootVector& x, const RootVector& y) {
      const long hx = x.integer_height(), hy = y.integer_height();
      if (hx != hy) return hx < hy;
      return x < y;
    });
    positive_roots_ = std::move(all);
    root_index_.clear();
    for (std::size_t k = 0; k < positive_roots_.size(); ++k)
      root_index_.emplace(positive_roots_[k], static_cast<int>(k));
  }

  // Symmetrize: d_a C_ab = d_b C_ba, then t_a = (θ,θ) / (α_a,α_a).
  {
    std::vector<Rational> d(r, Rational(0));
    d[0] = 1;
    std::deque<int> queue{1};
    while (!queue.empty()) {
      const int a = queue.front();
      queue.pop_front();
      for (int b = 1; b <= r; ++b) {
        if (b == a || cartan_(a, b) == 0 || d[b - 1] != 0) continue;
        d[b - 1] = d[a - 1] * cartan_(a, b) / cartan_(b, a);
        queue.push_back(b);
      }
    }
    const RootVector& theta = positive_roots_.back();
    Rational theta_sq = 0;
    for (int a = 1; a <= r; ++a)
      for (int b = 1; b <= r; ++b)
        theta_sq += Rational(theta.integer(a) * theta.integer(b)) * d[a - 1] * cartan_(a, b);
    for (int a = 1; a <= r; ++a) {
      Rational t = theta_sq / (2 * d[a - 1]);
      if (t.get_den() != 1) throw Error("non-integral t-value");
      t_[a - 1] = static_cast<int>(t.get_num().get_si());
    }
  }

  for (int b = 1; b <= r; ++b) {
    std::vector<int> col(r);
    for (int a = 1; a <= r; ++a) col[a - 1] = cartan_(a, b);
    simple_root_weights_.emplace_back(std::span<const int>(col));
  }
  {
    std::vector<int> ones(r, 1);
    rho_ = Weight(std::span<const int>(ones));
  }
  int lcm_t = 1;
  for (int a = 0; a < r; ++a) lcm_t = std::lcm(lcm_t, t_[a]);
  form_scale_ = det_ * lcm_t;
}

int RootDatum::from_bourbaki(int node) const {
  for (int a = 1; a <= rank_; ++a)
    if (to_bourbaki_[a - 1] == node) return a;
  throw InvalidArgument("Bourbaki node out of range");
}

std::optional<int> RootDatum::positive_root_index(const RootVector& v) const {
  if (auto it = root_index_.find(v); it != root_index_.end()) return it->second;
  return std::nullopt;
}

bool RootDatum::is_root(const RootVector& v) const {
  return positive_root_index(v) || positive_root_index(-v);
}

std::vector<int> RootDatum::positive_root_indices_in(NodeSet nodes) const {
  std::vector<int> out;
  for (std::size_t k = 0; k < positive_roots_.size(); ++k) {
    bool inside = true;
    for (int a = 1; a <= rank_ && inside; ++a)
      if (!nodes.contains(a) && positive_roots_[k].numerator(a) != 0) inside = false;
    if (inside) out.push_back(static_cast<int>(k));
  }
  return out;
}

Weight RootDatum::to_weight(const RootVector& v) const {
  const long den = v.denominator();
  if (den != 1 && den != 2) throw InvalidArgument("vector is not in (1/2)P");
  std::vector<int> coords(rank_);
  for (int a = 1; a <= rank_; ++a) {
    long s = 0;
    for (int b = 1; b <= rank_; ++b) s += long(cartan_(a, b)) * v.numerator(b);
    coords[a - 1] = static_cast<int>(s);
  }
  return Weight(std::span<const int>(coords), static_cast<int>(den));
}

RootVector RootDatum::to_root_coords(const Weight& w) const {
  std::array<long, kMaxRank> num{};
  for (int a = 0; a < rank_; ++a) {
    long s = 0;
    for (int b = 0; b < rank_; ++b) s += adj_[a][b] * w.coord(b);
    num[a] = s;
  }
  return RootVector(std::span<const long>(num.data(), rank_), det_ * w.denominator());
}

long RootDatum::scaled_form(const Weight& x, const Weight& y) const {
  if (!x.is_integral() || !y.is_integral())
    throw InvalidArgument("scaled_form needs integral weights");
  // (λ,μ) = Σ_ab λ_a μ_b (C^{-1})_ab / t_a
  const long lcm_t = form_scale_ / det_;
  long s = 0;
  for (int a = 0; a < rank_; ++a) {
    if (x.coord(a) == 0) continue;
    long inner = 0;
    for (int b = 0; b < rank_; ++b) inner += adj_[a][b] * y.coord(b);
    s += x.coord(a) * inner * (lcm_t / t_[a]);
  }
  return s;
}

long RootDatum::scaled_form_with_root(const Weight& w, const RootVector& root) const {
  // (λ, α_b) = λ_b / t_b
  const long lcm_t = form_scale_ / det_;
  long s = 0;
  for (int b = 0; b < rank_; ++b) s += root.numerator(b + 1) * w.coord(b) * (lcm_t / t_[b]);
  return s * det_;
}

RootDatum build_root_datum(LieType type) { return RootDatum(type); }

RootVector highest_root(const RootDatum& datum) { return datum.highest_root(); }

std::vector<RootVector> roots_with_coefficient(const RootDatum& datum, int node, long c) {
  if (node < 1 || node > datum.rank()) throw InvalidArgument("node out of range");
  std::vector<RootVector> out;
  for (const auto& root : datum.positive_roots())
    if (root.integer(node) == c) out.push_back(root);
  return out;
}

Weight simple_reflection(const RootDatum& datum, int node, const Weight& w) {
  if (node < 1 || node > datum.rank()) throw InvalidArgument("node out of range");
  const int k = w[node];
  if (k == 0) return w;
  // numerator-level update keeps half-lattice weights exact
  std::vector<int> coords(datum.rank());
  for (int b = 1; b <= datum.rank(); ++b) coords[b - 1] = w[b] - k * datum.cartan()(b, node);
  return Weight(std::span<const int>(coords), w.denominator());
}

RootVector simple_reflection(const RootDatum& datum, int node, const RootVector& v) {
  // s_a(α) = α − α(h_a) α_a with α(h_a) = Σ_b C_ab [α]_b
  Rational pairing = 0;
  for (int b = 1; b <= datum.rank(); ++b) pairing += datum.cartan()(node, b) * v[b];
  const Rational new_coeff = v[node] - pairing;
  std::array<long, kMaxRank> num{};
  const long den = std::lcm(v.denominator(), new_coeff.get_den().get_si());
  for (int b = 1; b <= datum.rank(); ++b) {
    const Rational c = (b == node) ? new_coeff : v[b];
    const Rational scaled = c * den;
    num[b - 1] = scaled.get_num().get_si();
  }
  return RootVector(std::span<const long>(num.data(), datum.rank()), den);
}

Weight apply_weyl_word(const RootDatum& datum, const WeylWord& word, const Weight& w) {
  Weight out = w;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
    out = simple_reflection(datum, *it, out);
  return out;
}

bool dominance_ge(const RootDatum& datum, const Weight& lambda, const Weight& mu) {
  return datum.to_root_coords(lambda - mu).is_nonnegative();
}

bool dominance_succeq(const RootDatum& datum, const Weight& lambda, const Weight& mu) {
  const RootVector c = datum.to_root_coords(lambda - mu);
  return c.is_integral() && c.is_nonnegative();
}

Rational bilinear_form(const RootDatum& datum, const Weight& x, const Weight& y) {
  Rational s = 0;
  for (int a = 1; a <= datum.rank(); ++a) {
    if (x[a] == 0) continue;
    long inner = 0;
    for (int b = 1; b <= datum.rank(); ++b) inner += datum.adjugate(a, b) * y[b];
    s += make_rational(long(x[a]) * inner, datum.determinant() * datum.t_value(a));
  }
  s /= x.denominator() * y.denominator();
  s.canonicalize();
  return s;
}

// ---------------------------------------------------------------------------
// WeylAction

WeylAction::WeylAction(const RootDatum& datum, const WeylWord& word)
    : rank_(datum.rank()), sign_(word.sign) {
  for (int i = 0; i < rank_; ++i) m_[i][i] = 1;
  // M ← S_a · M for letters applied right-to-left
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    const int a = *it - 1;
    // s_a: λ'_b = λ_b − λ_a C_{b a}
    auto next = m_;
    for (int b = 0; b < rank_; ++b)
      for (int c = 0; c < rank_; ++c)
        next[b][c] = m_[b][c] - datum.cartan()(b + 1, a + 1) * m_[a][c];
    m_ = next;
  }
}

Weight WeylAction::operator()(const Weight& w) const {
  std::array<int, kMaxRank> out{};
  for (int b = 0; b < rank_; ++b) {
    int s = 0;
    for (int c = 0; c < rank_; ++c) s += m_[b][c] * w.coord(c);
    out[b] = s;
  }
  return Weight(std::span<const int>(out.data(), rank_), w.denominator());
}

}  // namespace krchar
