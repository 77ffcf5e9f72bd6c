#include "ghostw/centers.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ghostw {

namespace {

int ghost_degree(const OspAlgebra& g) { return 2 * g.n(); }

HCPolynomial cartan_product(int n) {
  HCPolynomial p = HCPolynomial::constant(n, 1);
  for (int i = 1; i <= n; ++i) p = p * HCPolynomial::variable(n, i);
  return p;
}

std::vector<RationalVector> coordinates(const MonomialIndex& index,
                                        const std::vector<UEAElement>& elements) {
  std::vector<RationalVector> out;
  for (const auto& e : elements) out.push_back(index.coordinates(e));
  return out;
}

// "2 Q - 2 C + 1/2"; an empty name marks the constant term.
std::string combination(const std::vector<std::pair<Rational, std::string>>& terms) {
  std::string out;
  for (const auto& [c, name] : terms) {
    if (c == 0) continue;
    const Rational mag = abs(c);
    out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    if (name.empty() || mag != 1) out += to_string(mag);
    if (!name.empty()) out += (mag != 1 ? " " : "") + name;
  }
  return out.empty() ? "0" : out;
}

std::string element_label(const OspAlgebra& g, const UEAElement& a) {
  std::string s = to_string(g, a);
  if (s.size() > 80) s = s.substr(0, 77) + "...";
  return s;
}

}  // namespace

CenterSolver::CenterSolver(EnvelopingAlgebra& U) : U_(U) {}

UEAElement CenterSolver::dual_casimir(const std::vector<std::size_t>& indices) {
  const OspAlgebra& g = lie();
  std::vector<RationalVector> gram;
  for (std::size_t a : indices) {
    RationalVector row;
    for (std::size_t b : indices) row.push_back(g.form_basis(a, b));
    gram.push_back(std::move(row));
  }
  const auto inv = inverse(gram);
  if (inv.empty()) throw std::logic_error("casimir: degenerate form");
  // u^a = sum_c inv[a][c] u_c satisfies (u^a | u_b) = delta_ab.
  UEAElement c;
  for (std::size_t a = 0; a < indices.size(); ++a) {
    for (std::size_t k = 0; k < indices.size(); ++k) {
      if (inv[a][k] == 0) continue;
      c += U_.normal_order(std::vector<std::size_t>{indices[a], indices[k]}, inv[a][k]);
    }
  }
  return c;
}

const UEAElement& CenterSolver::casimir() {
  if (!casimir_) {
    std::vector<std::size_t> all(lie().dim());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    casimir_ = dual_casimir(all);
  }
  return *casimir_;
}

const UEAElement& CenterSolver::casimir_even() {
  if (!casimir_even_) {
    std::vector<std::size_t> even;
    for (std::size_t i = 0; i < lie().dim(); ++i) {
      if (lie().basis(i).parity == Parity::even) even.push_back(i);
    }
    casimir_even_ = dual_casimir(even);
  }
  return *casimir_even_;
}

const MonomialIndex& CenterSolver::weight_zero_index(int d) {
  auto it = indices_.find(d);
  if (it == indices_.end()) {
    std::vector<int> zero(static_cast<std::size_t>(lie().n()));
    it = indices_.emplace(d, MonomialIndex(U_.enumerate_pbw(d, zero))).first;
  }
  return it->second;
}

UEAElement CenterSolver::action(CenterKind kind, std::size_t gen, const UEAElement& a) {
  return kind == CenterKind::center ? U_.adjoint(gen, a) : U_.twisted_adjoint(gen, a);
}

CenterBasis CenterSolver::solve(CenterKind kind, int d) {
  if (d < 0) throw std::invalid_argument("center solve: negative degree");
  const MonomialIndex& index = weight_zero_index(d);
  std::map<std::pair<std::size_t, Monomial>, RationalMatrix::Row> rows;
  for (std::size_t gen : lie().chevalley_generators()) {
    for (std::size_t j = 0; j < index.size(); ++j) {
      const UEAElement image = action(kind, gen, U_.monomial(index.at(j)));
      for (const auto& [m, c] : image.terms()) rows[{gen, m}][j] = c;
    }
  }
  RationalMatrix matrix(0, index.size());
  for (auto& [key, row] : rows) matrix.append_row(std::move(row));
  CenterBasis basis{kind, d, {}};
  for (const auto& v : kernel_basis(matrix)) basis.elements.push_back(index.element(v));
  return basis;
}

const CenterBasis& CenterSolver::compute_center(int d) {
  auto it = centers_.find(d);
  if (it == centers_.end()) it = centers_.emplace(d, solve(CenterKind::center, d)).first;
  return it->second;
}

const CenterBasis& CenterSolver::compute_anticenter(int d) {
  auto it = anticenters_.find(d);
  if (it == anticenters_.end()) it = anticenters_.emplace(d, solve(CenterKind::anticenter, d)).first;
  return it->second;
}

const UEAElement& CenterSolver::casimir_ghost() {
  if (ghost_) return *ghost_;
  const OspAlgebra& g = lie();
  const int d = ghost_degree(g);
  const auto& basis = compute_anticenter(d).elements;
  std::vector<RationalVector> images;
  for (const auto& a : basis) images.push_back(coefficient_vector(hc_image(g, a), d));
  const auto target = coefficient_vector(cartan_product(g.n()), d);
  const auto member = in_span(target, images);
  if (!member.member) throw std::logic_error("casimir_ghost: h_1...h_n not in the image");
  if (rank(images) != images.size()) throw std::logic_error("casimir_ghost: not unique");
  UEAElement t;
  for (std::size_t k = 0; k < basis.size(); ++k) t += basis[k] * member.coefficients[k];
  ghost_ = std::move(t);
  return *ghost_;
}

std::vector<UEAElement> CenterSolver::ghost_center_basis(int d) {
  std::vector<UEAElement> out = compute_center(d).elements;
  for (const auto& a : compute_anticenter(d).elements) out.push_back(a);
  return out;
}

bool CenterSolver::in_center_span(const UEAElement& a, int d) {
  const MonomialIndex& index = weight_zero_index(d);
  for (const auto& [m, c] : a.terms()) {
    if (!index.find(m)) return false;
  }
  return in_span(index.coordinates(a), coordinates(index, compute_center(d).elements)).member;
}

bool CenterSolver::in_anticenter_span(const UEAElement& a, int d) {
  const MonomialIndex& index = weight_zero_index(d);
  for (const auto& [m, c] : a.terms()) {
    if (!index.find(m)) return false;
  }
  return in_span(index.coordinates(a), coordinates(index, compute_anticenter(d).elements)).member;
}

PinczonScalars CenterSolver::pinczon_scalars() {
  const OspAlgebra& g = lie();
  if (g.n() != 1) throw std::logic_error("pinczon_scalars: rank one only");
  const UEAElement& t = casimir_ghost();
  const UEAElement one = U_.one();
  const MonomialIndex& i2 = weight_zero_index(2);
  const auto lin = in_span(i2.coordinates(t),
                           coordinates(i2, {casimir_even(), casimir(), one}));
  const MonomialIndex& i4 = weight_zero_index(4);
  const auto sq = in_span(i4.coordinates(U_.multiply(t, t)), coordinates(i4, {casimir(), one}));
  if (!lin.member || !sq.member) throw std::logic_error("pinczon_scalars: no relation found");
  return {lin.coefficients[0], lin.coefficients[1], lin.coefficients[2], sq.coefficients[0],
          sq.coefficients[1]};
}

// ---------------------------------------------------------------------------
// Checks

CheckResult check_center_basis(CenterSolver& s, CenterKind kind, int d) {
  const OspAlgebra& g = s.lie();
  const auto& basis = kind == CenterKind::center ? s.compute_center(d) : s.compute_anticenter(d);
  const std::string name = kind == CenterKind::center ? "center_basis_annihilated"
                                                      : "anticenter_basis_annihilated";
  for (const auto& a : basis.elements) {
    for (std::size_t i = 0; i < g.dim(); ++i) {
      const UEAElement r = kind == CenterKind::center ? s.uea().adjoint(i, a)
                                                      : s.uea().twisted_adjoint(i, a);
      if (!r.is_zero()) return {name, false, g.basis(i).label + " on " + element_label(g, a)};
    }
  }
  return {name, true,
          "d = " + std::to_string(d) + ", dim = " + std::to_string(basis.elements.size())};
}

CheckResult check_casimir_central(CenterSolver& s) {
  const OspAlgebra& g = s.lie();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (!s.uea().adjoint(i, s.casimir()).is_zero()) {
      return {"casimir_central", false, g.basis(i).label};
    }
  }
  return {"casimir_central", true, {}};
}

CheckResult check_casimir_even_central(CenterSolver& s) {
  const OspAlgebra& g = s.lie();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (g.basis(i).parity != Parity::even) continue;
    if (!s.uea().adjoint(i, s.casimir_even()).is_zero()) {
      return {"casimir_even_central", false, g.basis(i).label};
    }
  }
  return {"casimir_even_central", true, {}};
}

CheckResult check_casimir_character(CenterSolver& s) {
  const OspAlgebra& g = s.lie();
  const int n = g.n();
  // (lambda | lambda + 2 rho) = 1/2 sum_i h_i (h_i + 2 rho_i)
  HCPolynomial expected(n);
  for (int i = 1; i <= n; ++i) {
    const HCPolynomial h = HCPolynomial::variable(n, i);
    const Rational r = g.rho().eps[static_cast<std::size_t>(i - 1)];
    expected += h * (h + HCPolynomial::constant(n, 2 * r)) * Rational(1, 2);
  }
  const HCPolynomial got = eta(g, s.casimir());
  return {"casimir_central_character", got == expected, "eta(C) = " + to_string(got)};
}

CheckResult check_anticenter_is_center_times_ghost(CenterSolver& s, int d) {
  const OspAlgebra& g = s.lie();
  const int shift = d - ghost_degree(g);
  std::vector<UEAElement> products;
  if (shift >= 0) {
    for (const auto& z : s.compute_center(shift).elements) {
      products.push_back(s.uea().multiply(z, s.casimir_ghost()));
    }
  }
  const MonomialIndex& index = s.weight_zero_index(d);
  const auto& anti = s.compute_anticenter(d).elements;
  const bool ok = same_span(coordinates(index, products), coordinates(index, anti), index.size());
  return {"anticenter_equals_center_times_ghost", ok,
          "d = " + std::to_string(d) + ", dim A = " + std::to_string(anti.size()) +
              ", dim Z T = " + std::to_string(products.size())};
}

CheckResult check_ghost_square_central(CenterSolver& s) {
  const OspAlgebra& g = s.lie();
  const UEAElement& t = s.casimir_ghost();
  const UEAElement sq = s.uea().multiply(t, t);
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (!s.uea().adjoint(i, sq).is_zero()) return {"ghost_square_central", false, g.basis(i).label};
  }
  return {"ghost_square_central", true, {}};
}

CheckResult check_ghost_square_image(CenterSolver& s) {
  const OspAlgebra& g = s.lie();
  const UEAElement& t = s.casimir_ghost();
  const HCPolynomial img = hc_image(g, s.uea().multiply(t, t));
  const HCPolynomial p = cartan_product(g.n());
  return {"ghost_square_hc_image", img == p * p, to_string(img)};
}

CheckResult check_ghost_products(CenterSolver& s, int d) {
  const OspAlgebra& g = s.lie();
  const auto& z = s.compute_center(d).elements;
  const auto& a = s.compute_anticenter(d).elements;
  std::size_t pairs = 0;
  for (const auto& x : a) {
    for (const auto& y : a) {
      if (x.degree() + y.degree() > d) continue;
      ++pairs;
      if (!s.in_center_span(s.uea().multiply(x, y), d)) {
        return {"ghost_products", false, "A A: " + element_label(g, x)};
      }
    }
    for (const auto& y : z) {
      if (x.degree() + y.degree() > d) continue;
      ++pairs;
      if (!s.in_anticenter_span(s.uea().multiply(y, x), d)) {
        return {"ghost_products", false, "Z A: " + element_label(g, x)};
      }
    }
  }
  return {"ghost_products", true, std::to_string(pairs) + " pairs"};
}

CheckResult check_ghost_commutes_with_even(CenterSolver& s, int d) {
  const OspAlgebra& g = s.lie();
  std::vector<Monomial> even;
  for (const auto& m : s.uea().enumerate_pbw(2)) {
    if (parity_of(g, m) == Parity::even && !m.is_one()) even.push_back(m);
  }
  const std::size_t limit = 40;
  if (even.size() > limit) {
    std::mt19937_64 rng(d);
    std::shuffle(even.begin(), even.end(), rng);
    even.resize(limit);
  }
  const auto basis = s.ghost_center_basis(d);
  for (const auto& m : even) {
    const UEAElement x = s.uea().monomial(m);
    for (const auto& a : basis) {
      if (!s.uea().supercommutator(x, a).is_zero()) {
        return {"ghost_center_commutes_with_even", false,
                to_string(g, m) + " vs " + element_label(g, a)};
      }
    }
  }
  return {"ghost_center_commutes_with_even", true,
          std::to_string(even.size()) + " monomials x " + std::to_string(basis.size()) +
              " elements"};
}

CheckResult check_hc_invariant(CenterSolver& s, int d) {
  const OspAlgebra& g = s.lie();
  for (const auto& z : s.compute_center(d).elements) {
    if (!is_invariant(hc_image(g, z))) {
      return {"hc_image_weyl_invariant", false, element_label(g, z)};
    }
  }
  return {"hc_image_weyl_invariant", true, {}};
}

CheckResult check_hc_injective(CenterSolver& s, int d) {
  const OspAlgebra& g = s.lie();
  const auto& basis = s.compute_center(d).elements;
  std::vector<RationalVector> images;
  for (const auto& z : basis) images.push_back(coefficient_vector(hc_image(g, z), d));
  const std::size_t r = rank(images);
  return {"hc_injective", r == basis.size(),
          "rank " + std::to_string(r) + " of " + std::to_string(basis.size())};
}

CheckResult check_hc_surjective(CenterSolver& s, int d) {
  const OspAlgebra& g = s.lie();
  std::vector<RationalVector> images, invariants;
  for (const auto& z : s.compute_center(d).elements) {
    images.push_back(coefficient_vector(hc_image(g, z), d));
  }
  for (const auto& f : invariant_basis(g.n(), d)) invariants.push_back(coefficient_vector(f, d));
  const std::size_t dim = invariants.empty() ? 0 : invariants[0].size();
  const bool ok = same_span(images, invariants, dim);
  return {"hc_onto_weyl_invariants", ok,
          "dim Z = " + std::to_string(images.size()) +
              ", dim invariants = " + std::to_string(invariants.size())};
}

CheckResult check_linkage(CenterSolver& s, int d, std::uint64_t seed) {
  const OspAlgebra& g = s.lie();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(-8, 8);
  const auto group = weyl_group(g.n());
  std::vector<HCPolynomial> etas;
  for (const auto& z : s.compute_center(d).elements) etas.push_back(eta(g, z));
  for (int t = 0; t < 10; ++t) {
    Weight lam{RationalVector(static_cast<std::size_t>(g.n()))};
    for (auto& x : lam.eps) x = make_rational(pick(rng), 2);
    for (const auto& w : group) {
      const Weight mu = dot_action(g, w, lam);
      for (const auto& f : etas) {
        if (f.evaluate(lam) != f.evaluate(mu)) return {"linkage", false, to_string(f)};
      }
    }
  }
  return {"linkage", true, "10 weights x " + std::to_string(group.size()) + " Weyl elements"};
}

CheckResult check_pinczon(CenterSolver& s) {
  const PinczonScalars p = s.pinczon_scalars();
  const bool ok = p.q_coeff == 2 && p.c_coeff == -2 && p.t_constant == Rational(1, 2) &&
                  p.square_c_coeff == 2 && p.square_constant == Rational(1, 4);
  const Rational two = 2;
  std::ostringstream w;
  w << "T = " << combination({{p.q_coeff, "Q"}, {p.c_coeff, "C"}, {p.t_constant, ""}})
    << ", T^2 = " << combination({{p.square_c_coeff, "C"}, {p.square_constant, ""}})
    << "; doubled form (C' = C/2, Q' = Q/2): T = "
    << combination({{two * p.q_coeff, "Q'"}, {two * p.c_coeff, "C'"}, {p.t_constant, ""}})
    << ", T^2 = " << combination({{two * p.square_c_coeff, "C'"}, {p.square_constant, ""}});
  return {"pinczon_identity", ok, w.str()};
}

std::vector<CheckResult> centers_suite(CenterSolver& s, int d, std::uint64_t seed) {
  std::vector<CheckResult> out{
      check_casimir_central(s),
      check_casimir_even_central(s),
      check_casimir_character(s),
      check_center_basis(s, CenterKind::center, d),
      check_center_basis(s, CenterKind::anticenter, d),
      check_anticenter_is_center_times_ghost(s, d),
      check_ghost_square_central(s),
      check_ghost_square_image(s),
      check_ghost_products(s, d),
      check_ghost_commutes_with_even(s, d),
      check_hc_invariant(s, d),
      check_hc_injective(s, d),
      check_hc_surjective(s, d),
      check_linkage(s, d, seed),
  };
  if (s.lie().n() == 1) out.push_back(check_pinczon(s));
  return out;
}

nlohmann::json to_json(const OspAlgebra& g, const CenterBasis& b) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& e : b.elements) basis.push_back(to_json(g, e));
  return {{"kind", b.kind == CenterKind::center ? "center" : "anticenter"},
          {"n", g.n()},
          {"degree", b.degree},
          {"dimension", b.elements.size()},
          {"basis", basis}};
}

}  // namespace ghostw
