// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ghostw/centers.hpp"
#include "ghostw/hc.hpp"
#include "ghostw/runner.hpp"
#include "ghostw/structure.hpp"
#include "ghostw/whittaker.hpp"

using namespace ghostw;

namespace {

struct Engine {
  explicit Engine(int n) : g(n), U(g), centers(U), w(U) {}
  OspAlgebra g;
  EnvelopingAlgebra U;
  CenterSolver centers;
  WhittakerModel w;
};

struct Outcome {
  bool passed = true;
  std::ostringstream notes;

  void require(const CheckResult& r, const std::string& tag) {
    if (!r.passed) {
      passed = false;
      notes << " [" << tag << " " << r.name << " failed: " << r.witness << "]";
    }
  }
  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      notes << " [" << what << "]";
    }
  }
};

HCPolynomial product_of_h(int n, unsigned power) {
  HCPolynomial p = HCPolynomial::constant(n, 1);
  for (int i = 1; i <= n; ++i) p = p * HCPolynomial::variable(n, i).pow(power);
  return p;
}

Outcome structure() {
  Outcome o;
  OspAlgebra g1(1);
  for (const auto& r : structure_suite(g1, {1000000, 0, 1})) o.require(r, "n=1");
  OspAlgebra g2(2);
  const auto results = structure_suite(g2, {0, 500, 1});
  for (const auto& r : results) o.require(r, "n=2");
  o.require(centralizer_dimension(g1) == 2 && centralizer_dimension(g2) == 3, "dim g^f != n + 1");
  return o;
}

Outcome harish_chandra() {
  Outcome o;
  for (int n : {1, 2}) {
    Engine e(n);
    const std::string tag = "n=" + std::to_string(n);
    o.require(check_hc_invariant(e.centers, 4), tag);
    o.require(check_hc_injective(e.centers, 4), tag);
    o.require(check_hc_surjective(e.centers, 4), tag);
    for (const auto& z : e.centers.compute_center(4).elements) {
      o.require(is_invariant(hc_image(e.g, z)), tag + " image not W-invariant");
    }
  }
  return o;
}

Outcome casimir_ghost() {
  Outcome o;
  for (int n : {1, 2}) {
    Engine e(n);
    const std::string tag = "n=" + std::to_string(n);
    try {
      const UEAElement& T = e.centers.casimir_ghost();
      o.require(T.degree() <= 2 * n, tag + " deg T > 2n");
      o.require(hc_image(e.g, T) == product_of_h(n, 1), tag + " sigma eta(T)");
      const UEAElement T2 = e.U.multiply(T, T);
      o.require(hc_image(e.g, T2) == product_of_h(n, 2), tag + " sigma eta(T^2)");
      bool central = true;
      for (std::size_t i = 0; i < e.g.dim(); ++i) central = central && e.U.adjoint(i, T2).is_zero();
      o.require(central, tag + " T^2 not in Z");
      o.require(check_ghost_square_central(e.centers), tag);
      o.require(check_anticenter_is_center_times_ghost(e.centers, 4), tag);
    } catch (const std::logic_error& ex) {
      o.require(false, tag + " " + ex.what());
    }
  }
  return o;
}

Outcome pinczon() {
  Outcome o;
  Engine e(1);
  const PinczonScalars p = e.centers.pinczon_scalars();
  o.require(p.square_c_coeff == Rational(2), "T^2 C-coefficient != 2");
  o.require(p.square_constant == make_rational(1, 4), "T^2 constant != 1/4");
  // Doubled form: C' = C / 2, so T^2 = 4 C' + 1/4.
  o.require(p.square_c_coeff * 2 == Rational(4), "doubled-form coefficient != 4");
  const UEAElement& T = e.centers.casimir_ghost();
  const UEAElement rhs = e.centers.casimir() * Rational(2) + e.U.one() * make_rational(1, 4);
  o.require(e.U.multiply(T, T) == rhs, "T^2 != 2 C + 1/4 in U(g)");
  o.require(check_pinczon(e.centers), "n=1");
  return o;
}

Outcome miura_of_ghost() {
  Outcome o;
  for (int n : {1, 2}) {
    Engine e(n);
    HCPolynomial expected = HCPolynomial::constant(n, 1);
    for (int i = 1; i <= n; ++i) {
      expected = expected * (HCPolynomial::variable(n, i) +
                             HCPolynomial::constant(n, make_rational(2 * (n - i) + 1, 2)));
    }
    const WhittakerVector G = e.w.theorem_a_map(UEAElement{}, e.centers.casimir_ghost());
    const MiuraImage mu = e.w.miura(G);
    o.require(mu.one.is_zero() && mu.phi == expected, "n=" + std::to_string(n) + " mu(G) = " + to_string(mu));
  }
  return o;
}

Outcome theorem_a() {
  Outcome o;
  for (int n : {1, 2}) {
    Engine e(n);
    const TheoremAReport r = verify_theorem_a(e.centers, e.w, 4);
    o.require(r.assertions.size() == 4, "n=" + std::to_string(n) + " expected 4 assertions");
    for (const auto& a : r.assertions) o.require(a, "n=" + std::to_string(n));
    o.notes << " n=" << n << ": dim Z " << r.center_dim << ", dim A " << r.anticenter_dim << ", invariants "
            << r.invariants_even << "+" << r.invariants_odd << ";";
  }
  return o;
}

Outcome filtered_form() {
  Outcome o;
  for (int n : {1, 2}) {
    Engine e(n);
    o.require(check_filtered_dimensions(e.centers, e.w, 4), "n=" + std::to_string(n));
    o.require(check_parity_transport(e.centers, e.w, 4), "n=" + std::to_string(n));
  }
  return o;
}

Outcome modules() {
  Outcome o;
  for (int n : {1, 2}) {
    Engine e(n);
    o.require(check_module_classification(e.centers, 100, 17 + n), "n=" + std::to_string(n));
    o.require(check_linkage(e.centers, 4, 23 + n), "n=" + std::to_string(n));
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  for (const RunConfig& c : {RunConfig{"verify", "all", 1, std::nullopt, 7},
                             RunConfig{"verify", "theorem-a", 2, 4, 7},
                             RunConfig{"compute", "finite-w", 2, 4, 7}}) {
    const std::string a = render(run(c).report), b = render(run(c).report);
    o.require(a == b, c.command + " " + c.target + " differs");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"structure suite (n=1 exhaustive, n=2 500 triples)", structure},
      {"Harish-Chandra invariance, injectivity, surjectivity at d=4", harish_chandra},
      {"Casimir ghost T, T^2 central, images, A = Z T at d=4", casimir_ghost},
      {"T^2 = 2 C + 1/4 at n=1", pinczon},
      {"Miura image of G", miura_of_ghost},
      {"q1 xi injective, image = invariants, multiplicative, Miura square at d=4", theorem_a},
      {"filtered dimensions and parity transport", filtered_form},
      {"module classification on 100 random weights, linkage", modules},
      {"byte-identical reports", determinism},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = criteria[i].second();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
              << std::fixed << std::setprecision(2) << secs << " s)" << o.notes.str() << "\n";
  }
  return all ? 0 : 1;
}
