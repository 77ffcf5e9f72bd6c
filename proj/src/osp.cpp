#include "ghostw/osp.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <tuple>

namespace ghostw {

// ---------------------------------------------------------------------------
// Roots and weights

Parity Root::parity() const {
  int sum = 0;
  for (int c : eps) sum += c;
  return (sum % 2 != 0) ? Parity::odd : Parity::even;
}

bool Root::positive() const {
  for (int c : eps) {
    if (c != 0) return c > 0;
  }
  return false;
}

std::vector<int> Root::simple_coefficients() const {
  // e_i = alpha_i + ... + alpha_n, so the alpha_k coefficient is sum_{i<=k} c_i.
  std::vector<int> m(eps.size());
  int acc = 0;
  for (std::size_t k = 0; k < eps.size(); ++k) {
    acc += eps[k];
    m[k] = acc;
  }
  return m;
}

int Root::height() const {
  int h = 0;
  for (int m : simple_coefficients()) h += m;
  return h;
}

Root Root::operator-() const {
  Root r = *this;
  for (int& c : r.eps) c = -c;
  return r;
}

std::string Root::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    const int c = eps[i];
    if (c == 0) continue;
    if (c < 0) {
      s += '-';
    } else if (!s.empty()) {
      s += '+';
    }
    if (std::abs(c) != 1) s += std::to_string(std::abs(c));
    s += 'e' + std::to_string(i + 1);
  }
  return s;
}

Weight Weight::operator+(const Weight& other) const {
  Weight w = *this;
  for (std::size_t i = 0; i < w.eps.size(); ++i) w.eps[i] += other.eps.at(i);
  return w;
}

Weight Weight::operator-(const Weight& other) const {
  Weight w = *this;
  for (std::size_t i = 0; i < w.eps.size(); ++i) w.eps[i] -= other.eps.at(i);
  return w;
}

Weight Weight::operator*(const Rational& s) const {
  Weight w = *this;
  for (auto& x : w.eps) x *= s;
  return w;
}

Rational pairing(const Weight& a, const Weight& b) {
  if (a.eps.size() != b.eps.size()) throw std::invalid_argument("pairing: rank mismatch");
  Rational sum = 0;
  for (std::size_t i = 0; i < a.eps.size(); ++i) sum += a.eps[i] * b.eps[i];
  return sum / 2;
}

Weight to_weight(const Root& r) {
  Weight w;
  for (int c : r.eps) w.eps.emplace_back(c);
  return w;
}

SparseLie LieElement::sparse() const {
  SparseLie out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] != 0) out.emplace_back(i, coords[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Matrix helpers

namespace {

SquareMatrix zero_matrix(std::size_t size) {
  return SquareMatrix(size, RationalVector(size));
}

SquareMatrix multiply(const SquareMatrix& a, const SquareMatrix& b) {
  const std::size_t size = a.size();
  SquareMatrix out = zero_matrix(size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t k = 0; k < size; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < size; ++j) {
        if (b[k][j] != 0) out[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

// Positive roots of osp(1|2n): e_i, 2e_i, e_i - e_j, e_i + e_j (i < j).
std::vector<Root> make_positive_roots(int n) {
  std::vector<Root> roots;
  auto unit = [n](int i, int c) {
    Root r{std::vector<int>(static_cast<std::size_t>(n))};
    r.eps[static_cast<std::size_t>(i)] = c;
    return r;
  };
  for (int i = 0; i < n; ++i) {
    roots.push_back(unit(i, 1));
    roots.push_back(unit(i, 2));
    for (int j = i + 1; j < n; ++j) {
      Root minus = unit(i, 1);
      minus.eps[static_cast<std::size_t>(j)] = -1;
      Root plus = unit(i, 1);
      plus.eps[static_cast<std::size_t>(j)] = 1;
      roots.push_back(minus);
      roots.push_back(plus);
    }
  }
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    const int ha = a.height();
    const int hb = b.height();
    if (ha != hb) return ha < hb;
    return a.eps > b.eps;
  });
  return roots;
}

}  // namespace

SquareMatrix supercommutator(const SquareMatrix& x, Parity px, const SquareMatrix& y,
                             Parity py) {
  SquareMatrix xy = multiply(x, y);
  const SquareMatrix yx = multiply(y, x);
  const int s = sign_of_swap(px, py);
  for (std::size_t i = 0; i < xy.size(); ++i) {
    for (std::size_t j = 0; j < xy.size(); ++j) xy[i][j] -= s * yx[i][j];
  }
  return xy;
}

Rational supertrace(const SquareMatrix& m) {
  Rational s = m.at(0).at(0);
  for (std::size_t i = 1; i < m.size(); ++i) s -= m[i][i];
  return s;
}

// ---------------------------------------------------------------------------
// OspAlgebra

std::size_t OspAlgebra::gl_row(int index) const {
  return index >= 0 ? static_cast<std::size_t>(index)
                    : static_cast<std::size_t>(n_ - index);
}

void OspAlgebra::add_basis(std::string label, std::optional<Root> root, int cartan,
                           SquareMatrix m, std::pair<int, int> anchor) {
  BasisVector b;
  b.label = std::move(label);
  b.cartan = cartan;
  if (root) {
    b.parity = root->parity();
    const auto simple = root->simple_coefficients();
    int doubled = 0;
    for (std::size_t k = 0; k < simple.size(); ++k) {
      doubled += (k + 1 < simple.size() ? 2 : 1) * simple[k];
    }
    b.doubled_degree = doubled;
  }
  b.root = std::move(root);
  basis_.push_back(std::move(b));
  matrices_.push_back(std::move(m));
  anchors_.emplace_back(gl_row(anchor.first), gl_row(anchor.second));
}

OspAlgebra::OspAlgebra(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("osp(1|2n) requires n >= 1");
  const std::size_t size = static_cast<std::size_t>(2 * n + 1);
  auto e = [&](int i, int j) {
    SquareMatrix m = zero_matrix(size);
    m[gl_row(i)][gl_row(j)] = 1;
    return m;
  };
  auto combine = [&](SquareMatrix a, const SquareMatrix& b, int sign) {
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) a[i][j] += sign * b[i][j];
    }
    return a;
  };

  // Root vector for a root in epsilon coordinates, with its anchor entry.
  auto root_vector = [&](const Root& r) -> std::pair<SquareMatrix, std::pair<int, int>> {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i) {
      if (r.eps[static_cast<std::size_t>(i)] != 0) idx.push_back(i + 1);
    }
    const int i = idx.front();
    const int ci = r.eps[static_cast<std::size_t>(i - 1)];
    if (idx.size() == 1 && std::abs(ci) == 1) {
      if (ci > 0) return {combine(e(i, 0), e(0, -i), -1), {i, 0}};
      return {combine(e(-i, 0), e(0, i), 1), {-i, 0}};
    }
    if (idx.size() == 1) {
      if (ci > 0) return {e(i, -i), {i, -i}};
      return {e(-i, i), {-i, i}};
    }
    const int j = idx.back();
    const int cj = r.eps[static_cast<std::size_t>(j - 1)];
    if (ci > 0 && cj < 0) return {combine(e(i, j), e(-j, -i), -1), {i, j}};
    if (ci < 0 && cj > 0) return {combine(e(j, i), e(-i, -j), -1), {j, i}};
    if (ci > 0) return {combine(e(i, -j), e(j, -i), 1), {i, -j}};
    return {combine(e(-i, j), e(-j, i), 1), {-i, j}};
  };

  const auto positive = make_positive_roots(n);
  for (const auto& r : positive) {
    const Root neg = -r;
    auto [m, anchor] = root_vector(neg);
    add_basis("u(" + neg.to_string() + ")", neg, 0, std::move(m), anchor);
  }
  num_negative_ = basis_.size();
  for (int i = 1; i <= n; ++i) {
    add_basis("h" + std::to_string(i), std::nullopt, i, combine(e(i, i), e(-i, -i), -1),
              {i, i});
  }
  Root alpha_n{std::vector<int>(static_cast<std::size_t>(n))};
  alpha_n.eps.back() = 1;
  {
    auto [m, anchor] = root_vector(alpha_n);
    add_basis("u(" + alpha_n.to_string() + ")", alpha_n, 0, std::move(m), anchor);
  }
  for (const auto& r : positive) {
    if (r == alpha_n) continue;
    auto [m, anchor] = root_vector(r);
    add_basis("u(" + r.to_string() + ")", r, 0, std::move(m), anchor);
  }

  const std::size_t d = dim();
  const auto form_of = [&](std::size_t a, std::size_t b) -> Rational {
    return -supertrace(multiply(matrices_[a], matrices_[b]));
  };

  // chi([u(alpha_n), u(alpha_n)]) = (u(-2 alpha_n) | [u(alpha_n), u(alpha_n)]) is
  // normalized to 2 by rescaling u(-2 alpha_n).
  const std::size_t a_n = alpha_n_index();
  Root minus_two_alpha_n = -alpha_n;
  for (int& c : minus_two_alpha_n.eps) c *= 2;
  const std::size_t minus_two_a_n = *root_index(minus_two_alpha_n);
  {
    const SquareMatrix sq =
        supercommutator(matrices_[a_n], Parity::odd, matrices_[a_n], Parity::odd);
    Rational value = -supertrace(multiply(matrices_[minus_two_a_n], sq));
    if (value == 0) throw std::logic_error("degenerate chi on g_{1/2}");
    const Rational scale = Rational(2) / value;
    for (auto& row : matrices_[minus_two_a_n]) {
      for (auto& x : row) x *= scale;
    }
  }

  brackets_.resize(d * d);
  form_.resize(d * d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      const SquareMatrix c = supercommutator(matrices_[a], basis_[a].parity, matrices_[b],
                                             basis_[b].parity);
      const RationalVector coords = decompose(c);
      for (std::size_t k = 0; k < d; ++k) {
        if (coords[k] != 0) brackets_[a * d + b].emplace_back(k, coords[k]);
      }
      form_[a * d + b] = form_of(a, b);
    }
  }

  const LieElement f = principal_nilpotent();
  chi_.resize(d);
  for (std::size_t a = 0; a < d; ++a) chi_[a] = form(f, element(a));
}

std::size_t OspAlgebra::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].label == label) return i;
  }
  throw std::invalid_argument("unknown basis label: " + label);
}

std::optional<std::size_t> OspAlgebra::root_index(const Root& r) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].root && *basis_[i].root == r) return i;
  }
  return std::nullopt;
}

std::vector<Root> OspAlgebra::positive_roots() const { return make_positive_roots(n_); }

std::vector<Root> OspAlgebra::simple_roots() const {
  std::vector<Root> roots;
  for (int i = 0; i < n_; ++i) {
    Root r{std::vector<int>(static_cast<std::size_t>(n_))};
    r.eps[static_cast<std::size_t>(i)] = 1;
    if (i + 1 < n_) r.eps[static_cast<std::size_t>(i + 1)] = -1;
    roots.push_back(r);
  }
  return roots;
}

std::vector<std::size_t> OspAlgebra::positive_generators() const {
  std::vector<std::size_t> out;
  for (const auto& r : simple_roots()) out.push_back(*root_index(r));
  return out;
}

std::vector<std::size_t> OspAlgebra::chevalley_generators() const {
  std::vector<std::size_t> out;
  for (const auto& r : simple_roots()) {
    out.push_back(*root_index(r));
    out.push_back(*root_index(-r));
  }
  return out;
}

LieElement OspAlgebra::with_metadata(RationalVector coords) const {
  LieElement x{std::move(coords), Parity::even, 0};
  bool first = true;
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (x.coords[i] == 0) continue;
    const auto& b = basis_[i];
    if (first) {
      x.parity = b.parity;
      x.doubled_degree = b.doubled_degree;
      first = false;
      continue;
    }
    if (x.parity && *x.parity != b.parity) x.parity.reset();
    if (x.doubled_degree && *x.doubled_degree != b.doubled_degree) x.doubled_degree.reset();
  }
  return x;
}

LieElement OspAlgebra::element(std::size_t i) const {
  RationalVector coords(dim());
  coords.at(i) = 1;
  return with_metadata(std::move(coords));
}

LieElement OspAlgebra::element(const RationalVector& coords) const {
  if (coords.size() != dim()) throw std::invalid_argument("LieElement: dimension mismatch");
  return with_metadata(coords);
}

LieElement OspAlgebra::bracket(const LieElement& u, const LieElement& v) const {
  if (!u.parity || !v.parity) throw std::invalid_argument("bracket: mixed-parity argument");
  RationalVector out(dim());
  for (const auto& [i, x] : u.sparse()) {
    for (const auto& [j, y] : v.sparse()) {
      for (const auto& [k, c] : bracket_basis(i, j)) out[k] += x * y * c;
    }
  }
  LieElement r = with_metadata(std::move(out));
  if (r.is_zero()) {
    r.parity = *u.parity + *v.parity;
    if (u.doubled_degree && v.doubled_degree) {
      r.doubled_degree = *u.doubled_degree + *v.doubled_degree;
    }
  }
  return r;
}

Rational OspAlgebra::form(const LieElement& u, const LieElement& v) const {
  Rational sum = 0;
  for (const auto& [i, x] : u.sparse()) {
    for (const auto& [j, y] : v.sparse()) sum += x * y * form_basis(i, j);
  }
  return sum;
}

std::vector<std::pair<std::string, Rational>> OspAlgebra::good_grading() const {
  std::vector<std::pair<std::string, Rational>> out;
  for (const auto& b : basis_) out.emplace_back(b.label, make_rational(b.doubled_degree, 2));
  for (auto& [label, q] : out) q.canonicalize();
  return out;
}

LieElement OspAlgebra::principal_nilpotent() const {
  RationalVector coords(dim());
  const auto simple = simple_roots();
  for (int i = 0; i + 1 < n_; ++i) coords[*root_index(-simple[static_cast<std::size_t>(i)])] = 1;
  Root two_alpha_n = simple.back();
  for (int& c : two_alpha_n.eps) c *= 2;
  coords[*root_index(-two_alpha_n)] = 1;
  return element(coords);
}

Rational OspAlgebra::chi(const LieElement& u) const {
  Rational sum = 0;
  for (const auto& [i, x] : u.sparse()) sum += x * chi_basis(i);
  return sum;
}

Weight OspAlgebra::rho() const {
  Weight w{RationalVector(static_cast<std::size_t>(n_))};
  for (const auto& r : positive_roots()) {
    const int s = r.parity() == Parity::odd ? -1 : 1;
    for (std::size_t i = 0; i < r.eps.size(); ++i) w.eps[i] += make_rational(s * r.eps[i], 2);
  }
  return w;
}

RationalVector OspAlgebra::decompose(const SquareMatrix& m) const {
  const std::size_t d = basis_.size();
  RationalVector coords(d);
  for (std::size_t k = 0; k < d; ++k) {
    const auto [r, c] = anchors_[k];
    coords[k] = m[r][c] / matrices_[k][r][c];
  }
  // Anchors are distinct matrix entries, so reconstruction certifies membership.
  SquareMatrix rebuilt = zero_matrix(m.size());
  for (std::size_t k = 0; k < d; ++k) {
    if (coords[k] == 0) continue;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) rebuilt[i][j] += coords[k] * matrices_[k][i][j];
    }
  }
  if (rebuilt != m) throw std::logic_error("matrix is not in osp(1|2n)");
  return coords;
}

nlohmann::json to_json(const OspAlgebra& g) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& b : g.basis()) {
    basis.push_back({{"label", b.label},
                     {"parity", b.parity == Parity::odd ? 1 : 0},
                     {"doubled_degree", b.doubled_degree}});
  }
  nlohmann::json brackets = nlohmann::json::array();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = 0; j < g.dim(); ++j) {
      const auto& br = g.bracket_basis(i, j);
      if (br.empty()) continue;
      nlohmann::json out = nlohmann::json::object();
      for (const auto& [k, c] : br) out[g.basis(k).label] = to_string(c);
      brackets.push_back(nlohmann::json::array({i, j, out}));
    }
  }
  return {{"n", g.n()}, {"dim", g.dim()}, {"basis", basis}, {"brackets", brackets}};
}

}  // namespace ghostw
