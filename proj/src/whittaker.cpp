#include "ghostw/whittaker.hpp"

#include <algorithm>
#include <array>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ghostw {

// ---------------------------------------------------------------------------
// Values

WhittakerVector& WhittakerVector::operator+=(const WhittakerVector& o) {
  value_ += o.value_;
  return *this;
}

WhittakerVector& WhittakerVector::operator*=(const Rational& s) {
  value_ *= s;
  return *this;
}

MiuraImage operator*(const MiuraImage& a, const MiuraImage& b) {
  return {a.one * b.one + a.phi * b.phi, a.one * b.phi + a.phi * b.one};
}

std::string to_string(const MiuraImage& m) {
  return "(" + to_string(m.one) + ") + (" + to_string(m.phi) + ") Phi";
}

// ---------------------------------------------------------------------------
// WhittakerModel

WhittakerModel::WhittakerModel(EnvelopingAlgebra& U) : U_(U) {
  const OspAlgebra& g = lie();
  right_scalar_.resize(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (g.in_g_ge1(i)) right_scalar_[i] = -g.chi_basis(i);
  }
}

bool WhittakerModel::is_reduced(const Monomial& m) const {
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (m.exponent(i) != 0 && lie().in_g_ge1(i)) return false;
  }
  return true;
}

WhittakerVector WhittakerModel::reduce(const UEAElement& a) const {
  const OspAlgebra& g = lie();
  UEAElement out;
  for (const auto& [m, c] : a.terms()) {
    Rational coeff = c;
    Monomial r = m;
    for (std::size_t i = 0; i < m.dim() && coeff != 0; ++i) {
      if (m.exponent(i) == 0 || !g.in_g_ge1(i)) continue;
      for (int k = 0; k < m.exponent(i); ++k) coeff *= right_scalar_[i];
      r.set_exponent(i, 0);
    }
    out.add(r, coeff);
  }
  return WhittakerVector(std::move(out));
}

WhittakerVector WhittakerModel::from_reduced(const UEAElement& a) const {
  for (const auto& [m, c] : a.terms()) {
    if (!is_reduced(m)) throw std::invalid_argument("from_reduced: monomial is not reduced");
  }
  return WhittakerVector(a);
}

WhittakerVector WhittakerModel::ad_quotient(const LieElement& x, const WhittakerVector& m) {
  const OspAlgebra& g = lie();
  if (!x.parity) throw std::invalid_argument("ad_quotient: mixed-parity element");
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (x.coords[i] != 0 && !g.is_positive(i)) {
      throw std::invalid_argument("ad_quotient: element outside g_{>0}");
    }
  }
  return reduce(U_.adjoint(x, m.lift()));
}

WhittakerVector WhittakerModel::ad_quotient(std::size_t i, const WhittakerVector& m) {
  return ad_quotient(lie().element(i), m);
}

bool WhittakerModel::is_invariant(const WhittakerVector& m) {
  for (std::size_t i : lie().positive_generators()) {
    if (!ad_quotient(i, m).is_zero()) return false;
  }
  return true;
}

const MonomialIndex& WhittakerModel::reduced_index(int d) {
  auto it = indices_.find(d);
  if (it == indices_.end()) {
    std::vector<Monomial> monos;
    for (auto& m : U_.enumerate_pbw(d)) {
      if (is_reduced(m)) monos.push_back(std::move(m));
    }
    it = indices_.emplace(d, MonomialIndex(std::move(monos))).first;
  }
  return it->second;
}

WhittakerModel::Solution WhittakerModel::solve_invariants(
    const std::vector<std::size_t>& generators, int d) {
  if (d < 0) throw std::invalid_argument("finite W solve: negative degree");
  const OspAlgebra& g = lie();
  // ad(x) shifts parity by p(x), so each parity is solved on its own.
  Solution out;
  for (Parity p : {Parity::even, Parity::odd}) {
    std::vector<Monomial> monos;
    for (const auto& m : reduced_index(d).monomials()) {
      if (parity_of(g, m) == p) monos.push_back(m);
    }
    const MonomialIndex index(std::move(monos));
    std::map<std::pair<std::size_t, Monomial>, RationalMatrix::Row> rows;
    for (std::size_t gen : generators) {
      for (std::size_t j = 0; j < index.size(); ++j) {
        const WhittakerVector image = reduce(U_.adjoint(gen, U_.monomial(index.at(j))));
        for (const auto& [m, c] : image.lift().terms()) rows[{gen, m}][j] = c;
      }
    }
    RationalMatrix matrix(0, index.size());
    for (auto& [key, row] : rows) matrix.append_row(std::move(row));
    auto& target = p == Parity::even ? out.even : out.odd;
    for (const auto& v : kernel_basis(matrix)) target.push_back(WhittakerVector(index.element(v)));
  }
  return out;
}

const FiniteWBasis& WhittakerModel::finite_w_basis(int d) {
  auto it = bases_.find(d);
  if (it == bases_.end()) {
    Solution s = solve_invariants(lie().positive_generators(), d);
    it = bases_.emplace(d, FiniteWBasis{d, std::move(s.even), std::move(s.odd)}).first;
  }
  return it->second;
}

std::size_t WhittakerModel::invariant_dimension(const std::vector<std::size_t>& generators,
                                                int d) {
  const Solution s = solve_invariants(generators, d);
  return s.even.size() + s.odd.size();
}

WhittakerVector WhittakerModel::w_multiply(const WhittakerVector& a, const WhittakerVector& b) {
  if (!is_invariant(a) || !is_invariant(b)) {
    throw std::invalid_argument("w_multiply: argument is not invariant");
  }
  return reduce(U_.multiply(a.lift(), b.lift()));
}

MiuraImage WhittakerModel::miura(const WhittakerVector& m) const {
  const OspAlgebra& g = lie();
  const int n = g.n();
  MiuraImage out{HCPolynomial(n), HCPolynomial(n)};
  for (const auto& [mono, c] : m.lift().terms()) {
    HCPolynomial::Exponents e(static_cast<std::size_t>(n));
    bool keep = true;
    for (std::size_t i = 0; i < mono.dim() && keep; ++i) {
      if (mono.exponent(i) == 0) continue;
      if (g.is_negative(i)) keep = false;
    }
    if (!keep) continue;
    for (int k = 1; k <= n; ++k) e[static_cast<std::size_t>(k - 1)] = mono.exponent(g.cartan_index(k));
    (mono.exponent(g.alpha_n_index()) ? out.phi : out.one).add(e, c);
  }
  return out;
}

UEAElement WhittakerModel::xi_map(const UEAElement& z, const UEAElement& a) {
  return z + U_.multiply(a, U_.generator(lie().alpha_n_index()));
}

WhittakerVector WhittakerModel::theorem_a_map(const UEAElement& z, const UEAElement& a) {
  for (std::size_t i : lie().chevalley_generators()) {
    if (!U_.adjoint(i, z).is_zero()) throw std::invalid_argument("theorem_a_map: z not central");
    if (!U_.twisted_adjoint(i, a).is_zero()) {
      throw std::invalid_argument("theorem_a_map: a not anticentral");
    }
  }
  return reduce(xi_map(z, a));
}

int top_space_dimension(const OspAlgebra& g, const Weight& lambda) {
  return in_D(g, lambda) ? 1 : 2;
}

// ---------------------------------------------------------------------------
// Ghost center versus invariants

namespace {

std::vector<RationalVector> coordinates(const MonomialIndex& index,
                                        const std::vector<WhittakerVector>& vs) {
  std::vector<RationalVector> out;
  for (const auto& v : vs) out.push_back(index.coordinates(v.lift()));
  return out;
}

// Basis of span(vectors) and F_d, as coordinate vectors over `index`.
std::vector<RationalVector> intersect_with_filtration(const MonomialIndex& index,
                                                      const std::vector<RationalVector>& vectors,
                                                      int d) {
  RationalMatrix high(0, vectors.size());
  for (std::size_t r = 0; r < index.size(); ++r) {
    if (index.at(r).degree() <= d) continue;
    RationalMatrix::Row row;
    for (std::size_t k = 0; k < vectors.size(); ++k) {
      if (vectors[k][r] != 0) row[k] = vectors[k][r];
    }
    if (!row.empty()) high.append_row(std::move(row));
  }
  std::vector<RationalVector> out;
  for (const auto& c : kernel_basis(high)) {
    RationalVector v(index.size());
    for (std::size_t k = 0; k < vectors.size(); ++k) {
      if (c[k] == 0) continue;
      for (std::size_t r = 0; r < v.size(); ++r) v[r] += c[k] * vectors[k][r];
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t count_up_to(const std::vector<UEAElement>& basis, int k) {
  return static_cast<std::size_t>(
      std::count_if(basis.begin(), basis.end(), [k](const auto& e) { return e.degree() <= k; }));
}

std::size_t count_up_to(const std::vector<WhittakerVector>& basis, int k) {
  return static_cast<std::size_t>(
      std::count_if(basis.begin(), basis.end(), [k](const auto& e) { return e.degree() <= k; }));
}

HCPolynomial shifted_cartan_product(const OspAlgebra& g) {
  const int n = g.n();
  HCPolynomial p = HCPolynomial::constant(n, 1);
  for (int i = 1; i <= n; ++i) {
    p = p * (HCPolynomial::variable(n, i) +
             HCPolynomial::constant(n, g.rho().eps[static_cast<std::size_t>(i - 1)]));
  }
  return p;
}

// Ghost image G = q1 xi(T).
WhittakerVector ghost_image(CenterSolver& centers, WhittakerModel& w) {
  return w.theorem_a_map(UEAElement{}, centers.casimir_ghost());
}

}  // namespace

TheoremAReport verify_theorem_a(CenterSolver& centers, WhittakerModel& w, int d) {
  const OspAlgebra& g = w.lie();
  EnvelopingAlgebra& U = w.uea();
  TheoremAReport report;
  report.n = g.n();
  report.degree = d;

  const auto z_basis = centers.compute_center(d).elements;
  const auto a_basis = centers.compute_anticenter(d).elements;
  const FiniteWBasis& inv = w.finite_w_basis(d);
  report.center_dim = z_basis.size();
  report.anticenter_dim = a_basis.size();
  report.invariants_even = inv.even.size();
  report.invariants_odd = inv.odd.size();

  const WhittakerVector ghost = ghost_image(centers, w);
  // q1 xi(z T) has degree deg z + deg G, so odd invariants in F_d can come
  // from anticentral elements of degree up to d + 2n - deg G.
  const int odd_budget = std::max(d, d + 2 * g.n() - ghost.degree());
  const auto a_wide = centers.compute_anticenter(odd_budget).elements;

  std::vector<WhittakerVector> z_images, a_images, a_wide_images;
  for (const auto& z : z_basis) z_images.push_back(w.theorem_a_map(z, UEAElement{}));
  for (const auto& a : a_basis) a_images.push_back(w.theorem_a_map(UEAElement{}, a));
  for (const auto& a : a_wide) a_wide_images.push_back(w.theorem_a_map(UEAElement{}, a));
  const MonomialIndex& index = w.reduced_index(odd_budget + 1);

  // (i)
  {
    std::vector<WhittakerVector> all = z_images;
    all.insert(all.end(), a_images.begin(), a_images.end());
    const std::size_t r = rank(coordinates(index, all));
    report.assertions.push_back({"injective", r == all.size(),
                                 "rank " + std::to_string(r) + " of " + std::to_string(all.size())});
  }

  // (ii)
  {
    CheckResult res{"image_equals_invariants", true, {}};
    for (const auto& v : z_images) {
      if (v.parity(g) != Parity::even || !w.is_invariant(v)) res = {res.name, false, "center image"};
    }
    for (const auto& v : a_wide_images) {
      if (v.parity(g) != Parity::odd || !w.is_invariant(v)) res = {res.name, false, "anticenter image"};
    }
    if (res.passed) {
      const auto even = intersect_with_filtration(index, coordinates(index, z_images), d);
      const auto odd = intersect_with_filtration(index, coordinates(index, a_wide_images), d);
      const bool even_ok = same_span(even, coordinates(index, inv.even), index.size());
      const bool odd_ok = same_span(odd, coordinates(index, inv.odd), index.size());
      std::ostringstream wit;
      wit << "even " << even.size() << " / " << inv.even.size() << ", odd " << odd.size() << " / "
          << inv.odd.size() << " (anticenter to degree " << odd_budget << ")";
      res = {res.name, even_ok && odd_ok, wit.str()};
    }
    report.assertions.push_back(res);
  }

  // (iii)
  {
    struct Item {
      UEAElement value;
      bool anti;
      WhittakerVector image;
    };
    std::vector<Item> items;
    for (std::size_t k = 0; k < z_basis.size(); ++k) items.push_back({z_basis[k], false, z_images[k]});
    for (std::size_t k = 0; k < a_basis.size(); ++k) items.push_back({a_basis[k], true, a_images[k]});
    CheckResult res{"multiplicative", true, {}};
    std::size_t pairs = 0;
    for (const auto& x : items) {
      for (const auto& y : items) {
        if (x.value.degree() + y.value.degree() > d) continue;
        ++pairs;
        const UEAElement p = U.multiply(x.value, y.value);
        const bool anti = x.anti != y.anti;
        const WhittakerVector lhs = anti ? w.theorem_a_map(UEAElement{}, p)
                                         : w.theorem_a_map(p, UEAElement{});
        if (lhs != w.w_multiply(x.image, y.image)) {
          res.passed = false;
          res.witness = to_string(g, x.value) + " * " + to_string(g, y.value);
        }
      }
    }
    if (res.passed) res.witness = std::to_string(pairs) + " pairs";
    report.assertions.push_back(res);
  }

  // (iv)
  {
    const UEAElement& t = centers.casimir_ghost();
    const MiuraImage mg = w.miura(ghost);
    const MiuraImage square = mg * mg;
    const MiuraImage product = w.miura(w.w_multiply(ghost, ghost));
    const MiuraImage of_t2 = w.miura(w.theorem_a_map(U.multiply(t, t), UEAElement{}));
    HCPolynomial h2 = HCPolynomial::constant(g.n(), 1);
    for (int i = 1; i <= g.n(); ++i) {
      h2 = h2 * HCPolynomial::variable(g.n(), i) * HCPolynomial::variable(g.n(), i);
    }
    const MiuraImage expected{sigma_inverse(g, h2), HCPolynomial(g.n())};
    const bool ok = square == expected && product == expected && of_t2 == expected;
    report.assertions.push_back({"miura_square", ok, "mu(G^2) = " + to_string(product)});
  }
  return report;
}

nlohmann::json to_json(const TheoremAReport& r) {
  nlohmann::json assertions = nlohmann::json::array();
  for (const auto& a : r.assertions) assertions.push_back(to_json(a));
  return {{"schema", "ghostw-report/1"},
          {"n", r.n},
          {"degree", r.degree},
          {"assertions", assertions},
          {"dimensions",
           {{"center", r.center_dim},
            {"anticenter", r.anticenter_dim},
            {"invariants_even", r.invariants_even},
            {"invariants_odd", r.invariants_odd}}}};
}

// ---------------------------------------------------------------------------
// Checks

CheckResult check_miura_of_ghost(CenterSolver& centers, WhittakerModel& w) {
  const OspAlgebra& g = w.lie();
  const MiuraImage m = w.miura(ghost_image(centers, w));
  const MiuraImage expected{HCPolynomial(g.n()), shifted_cartan_product(g)};
  return {"miura_of_ghost", m == expected, "mu(G) = " + to_string(m)};
}

CheckResult check_filtered_dimensions(CenterSolver& centers, WhittakerModel& w, int d) {
  // Both bases come from kernel_basis over degree-ordered monomials, so the
  // elements of degree <= k span the part in F_k.
  const auto& z = centers.compute_center(d).elements;
  const auto& even = w.finite_w_basis(d).even;
  std::ostringstream wit;
  bool ok = true;
  for (int k = 0; k <= d; ++k) {
    const std::size_t a = count_up_to(z, k), b = count_up_to(even, k);
    ok = ok && a == b;
    wit << (k ? ", " : "") << "F_" << k << ": " << a << "/" << b;
  }
  return {"filtered_dimensions", ok, wit.str()};
}

CheckResult check_parity_transport(CenterSolver& centers, WhittakerModel& w, int d) {
  const OspAlgebra& g = w.lie();
  for (const auto& z : centers.compute_center(d).elements) {
    if (w.theorem_a_map(z, UEAElement{}).parity(g) != Parity::even) {
      return {"parity_transport", false, "center element with odd image"};
    }
  }
  for (const auto& a : centers.compute_anticenter(d).elements) {
    if (w.theorem_a_map(UEAElement{}, a).parity(g) != Parity::odd) {
      return {"parity_transport", false, "anticenter element with even image"};
    }
  }
  return {"parity_transport", true, {}};
}

CheckResult check_filtration_stable(WhittakerModel& w, int d) {
  const OspAlgebra& g = w.lie();
  std::size_t count = 0;
  for (const auto& m : w.reduced_index(d).monomials()) {
    const WhittakerVector v = w.from_reduced(w.uea().monomial(m));
    for (std::size_t i = 0; i < g.dim(); ++i) {
      if (!g.is_positive(i)) continue;
      ++count;
      if (w.ad_quotient(i, v).degree() > m.degree()) {
        return {"filtration_stable", false, g.basis(i).label + " on " + to_string(g, m)};
      }
    }
  }
  return {"filtration_stable", true, std::to_string(count) + " pairs"};
}

CheckResult check_lift_independence(WhittakerModel& w, int samples, std::uint64_t seed) {
  const OspAlgebra& g = w.lie();
  EnvelopingAlgebra& U = w.uea();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> gen(0, g.dim() - 1);
  std::uniform_int_distribution<int> len(0, 2), coeff(-3, 3);
  std::vector<std::size_t> ge1, positive;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (g.in_g_ge1(i)) ge1.push_back(i);
    if (g.is_positive(i)) positive.push_back(i);
  }
  const auto random_word = [&] {
    std::vector<std::size_t> word;
    for (int k = len(rng); k > 0; --k) word.push_back(gen(rng));
    return word;
  };
  for (int s = 0; s < samples; ++s) {
    const WhittakerVector m = w.reduce(U.normal_order(random_word(), coeff(rng) + 4));
    // r (v + chi(v)) lies in the ideal.
    const std::size_t v = ge1[rng() % ge1.size()];
    const UEAElement generator = U.generator(v) + U.one() * g.chi_basis(v);
    const UEAElement ideal = U.multiply(U.normal_order(random_word(), coeff(rng)), generator);
    if (!w.reduce(ideal).is_zero()) {
      return {"lift_independence", false, "ideal element " + to_string(g, ideal)};
    }
    const UEAElement alt = m.lift() + ideal;
    if (w.reduce(alt) != m) return {"lift_independence", false, "reduce"};
    const std::size_t x = positive[rng() % positive.size()];
    if (w.reduce(U.adjoint(x, alt)) != w.ad_quotient(x, m)) {
      return {"lift_independence", false, "ad " + g.basis(x).label};
    }
  }
  return {"lift_independence", true, std::to_string(samples) + " samples"};
}

CheckResult check_miura_injective(WhittakerModel& w, int d) {
  const FiniteWBasis& b = w.finite_w_basis(d);
  std::vector<RationalVector> rows;
  for (const auto* part : {&b.even, &b.odd}) {
    for (const auto& v : *part) {
      const MiuraImage m = w.miura(v);
      RationalVector row = coefficient_vector(m.one, d);
      const RationalVector phi = coefficient_vector(m.phi, d);
      row.insert(row.end(), phi.begin(), phi.end());
      rows.push_back(std::move(row));
    }
  }
  const std::size_t r = rank(rows);
  return {"miura_injective", r == rows.size(),
          "rank " + std::to_string(r) + " of " + std::to_string(rows.size())};
}

CheckResult check_w_associative(WhittakerModel& w, int d, std::uint64_t seed) {
  const FiniteWBasis& b = w.finite_w_basis(d);
  std::vector<WhittakerVector> all = b.even;
  all.insert(all.end(), b.odd.begin(), b.odd.end());
  // Triples of total degree <= d + 2, at most 20 of them drawn with the seed.
  std::vector<std::array<std::size_t, 3>> triples;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      for (std::size_t k = 0; k < all.size(); ++k) {
        if (all[i].degree() + all[j].degree() + all[k].degree() <= d + 2) triples.push_back({i, j, k});
      }
    }
  }
  std::mt19937_64 rng(seed);
  std::shuffle(triples.begin(), triples.end(), rng);
  if (triples.size() > 20) triples.resize(20);
  for (const auto& [i, j, k] : triples) {
    const WhittakerVector xy = w.w_multiply(all[i], all[j]);
    const WhittakerVector yz = w.w_multiply(all[j], all[k]);
    if (!w.is_invariant(xy) || !w.is_invariant(yz)) {
      return {"w_algebra_associative", false, "product not invariant"};
    }
    if (w.w_multiply(xy, all[k]) != w.w_multiply(all[i], yz)) {
      return {"w_algebra_associative", false, "associator nonzero"};
    }
  }
  return {"w_algebra_associative", true, std::to_string(triples.size()) + " triples"};
}

CheckResult check_module_classification(CenterSolver& centers, int samples, std::uint64_t seed) {
  const OspAlgebra& g = centers.lie();
  EnvelopingAlgebra& U = centers.uea();
  const UEAElement& t = centers.casimir_ghost();
  const HCPolynomial t2 = eta(g, U.multiply(t, t));
  const auto group = weyl_group(g.n());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 6);
  std::size_t in_d = 0;
  for (int s = 0; s < samples; ++s) {
    Weight lam{RationalVector(static_cast<std::size_t>(g.n()))};
    for (auto& x : lam.eps) x = make_rational(num(rng), den(rng));
    if (s % 2 == 1) {
      // Put every other sample on an odd-root hyperplane (lambda + rho | e_i) = 0.
      const std::size_t i = rng() % lam.eps.size();
      lam.eps[i] = -g.rho().eps[i];
    }
    const bool d = in_D(g, lam);
    const bool vanishes = t2.evaluate(lam) == 0;
    const bool one = top_space_dimension(g, lam) == 1;
    if (d != vanishes || d != one) {
      std::ostringstream wit;
      wit << "lambda = (";
      for (std::size_t i = 0; i < lam.eps.size(); ++i) wit << (i ? ", " : "") << to_string(lam.eps[i]);
      wit << ")";
      return {"module_classification", false, wit.str()};
    }
    const auto& w = group[rng() % group.size()];
    if (in_D(g, dot_action(g, w, lam)) != d) {
      return {"module_classification", false, "dot action moves lambda out of D"};
    }
    in_d += d;
  }
  return {"module_classification", true,
          std::to_string(samples) + " weights, " + std::to_string(in_d) + " in D"};
}

CheckResult compare_invariants_g_ge1(WhittakerModel& w, int d) {
  const OspAlgebra& g = w.lie();
  std::vector<std::size_t> ge1;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (g.in_g_ge1(i)) ge1.push_back(i);
  }
  std::ostringstream wit;
  for (int k = 0; k <= d; ++k) {
    const std::size_t big = w.invariant_dimension(ge1, k);
    const std::size_t small = w.invariant_dimension(g.positive_generators(), k);
    wit << (k ? ", " : "") << "F_" << k << ": " << big << " vs " << small;
  }
  return {"invariants_g_ge1_vs_g_pos", true, wit.str()};
}

}  // namespace ghostw
