#pragma once

// Degree-bounded center Z, anticenter A and ghost center Z + A of
// U(osp(1|2n)), with the Casimirs C (of osp) and Q (of the even part sp(2n))
// and the Casimir ghost T.
//
// Both solves run over weight-0 PBW monomials: ad(h) is diagonal on PBW
// monomials, so anything killed by ad(h) has weight 0. The twisted adjoint
// action is a representation of g, so it suffices to impose the conditions
// for the Chevalley generators u(+-alpha_i); every returned basis is checked
// afterwards against the full basis of g.

#include <map>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ghostw/hc.hpp"
#include "ghostw/report.hpp"
#include "ghostw/uea.hpp"

namespace ghostw {

enum class CenterKind { center, anticenter };

struct CenterBasis {
  CenterKind kind = CenterKind::center;
  int degree = 0;
  /// Kernel basis over the weight-0 monomials of degree <= degree, ordered by
  /// leading monomial; coefficients are coprime integers.
  std::vector<UEAElement> elements;
};

/// Scalars a, b, c with T = a Q + b C + c and d, e with T^2 = d C + e, found
/// by solving in the computed bases. Only meaningful at n = 1.
struct PinczonScalars {
  Rational q_coeff, c_coeff, t_constant;
  Rational square_c_coeff, square_constant;
};

class CenterSolver {
 public:
  explicit CenterSolver(EnvelopingAlgebra& U);

  EnvelopingAlgebra& uea() { return U_; }
  const OspAlgebra& lie() const { return U_.lie(); }

  /// sum_a u_a u^a with (u^a | u_b) = delta_ab over the whole basis.
  const UEAElement& casimir();
  /// Same construction over the even basis vectors with the restricted form.
  const UEAElement& casimir_even();

  const CenterBasis& compute_center(int d);
  const CenterBasis& compute_anticenter(int d);
  /// The element T of A with sigma(eta(T)) = h_1 ... h_n. Throws
  /// std::logic_error if it does not exist or is not unique in degree <= 2n.
  const UEAElement& casimir_ghost();
  /// Center basis followed by anticenter basis.
  std::vector<UEAElement> ghost_center_basis(int d);

  /// Coordinates over the weight-0 monomials of degree <= d.
  const MonomialIndex& weight_zero_index(int d);
  bool in_center_span(const UEAElement& a, int d);
  bool in_anticenter_span(const UEAElement& a, int d);

  PinczonScalars pinczon_scalars();

 private:
  CenterBasis solve(CenterKind kind, int d);
  UEAElement action(CenterKind kind, std::size_t gen, const UEAElement& a);
  UEAElement dual_casimir(const std::vector<std::size_t>& indices);

  EnvelopingAlgebra& U_;
  std::optional<UEAElement> casimir_, casimir_even_, ghost_;
  std::map<int, CenterBasis> centers_, anticenters_;
  std::map<int, MonomialIndex> indices_;
};

// Checks. Each returns one named result with a short witness.

/// Every basis element is killed by the (twisted) adjoint action of every
/// basis vector of g.
CheckResult check_center_basis(CenterSolver& s, CenterKind kind, int d);
CheckResult check_casimir_central(CenterSolver& s);
/// Q commutes with the even part of g.
CheckResult check_casimir_even_central(CenterSolver& s);
/// eta(C)(lambda) = (lambda | lambda + 2 rho), as polynomials.
CheckResult check_casimir_character(CenterSolver& s);
/// A and F_d = span{z T : z in Z and F_{d-2n}}.
CheckResult check_anticenter_is_center_times_ghost(CenterSolver& s, int d);
CheckResult check_ghost_square_central(CenterSolver& s);
/// sigma(eta(T^2)) = h_1^2 ... h_n^2.
CheckResult check_ghost_square_image(CenterSolver& s);
/// A A in Z and Z A in A for basis pairs within degree d.
CheckResult check_ghost_products(CenterSolver& s, int d);
/// Ghost center basis commutes with even monomials of degree <= 2.
CheckResult check_ghost_commutes_with_even(CenterSolver& s, int d);
CheckResult check_hc_invariant(CenterSolver& s, int d);
CheckResult check_hc_injective(CenterSolver& s, int d);
/// sigma(eta(Z and F_d)) spans the W-invariants of degree <= d.
CheckResult check_hc_surjective(CenterSolver& s, int d);
/// chi_lambda(z) = chi_{w(lambda+rho)-rho}(z) on sampled lambda.
CheckResult check_linkage(CenterSolver& s, int d, std::uint64_t seed);
/// n = 1 only: T = 2Q - 2C + 1/2 and T^2 = 2C + 1/4.
CheckResult check_pinczon(CenterSolver& s);

std::vector<CheckResult> centers_suite(CenterSolver& s, int d, std::uint64_t seed);

/// {"kind", "n", "degree", "dimension", "basis": [UEAElement json, ...]}
nlohmann::json to_json(const OspAlgebra& g, const CenterBasis& b);

}  // namespace ghostw
