#pragma once

// Structural identities of osp(1|2n): super Jacobi, invariance of the form,
// the good-grading axioms for f_prin and nondegeneracy of chi([.,.]) on
// g_{1/2}. Triples are enumerated exhaustively when there are at most
// `exhaustive_limit` of them, otherwise `samples` triples are drawn with the
// given seed.

#include <cstdint>
#include <vector>

#include "ghostw/osp.hpp"
#include "ghostw/report.hpp"

namespace ghostw {

struct TripleSampling {
  std::size_t exhaustive_limit = 200;
  std::size_t samples = 500;
  std::uint64_t seed = 1;
};

CheckResult check_super_jacobi(const OspAlgebra& g, const TripleSampling& sampling);
CheckResult check_form_invariance(const OspAlgebra& g, const TripleSampling& sampling);
CheckResult check_form_supersymmetric(const OspAlgebra& g);
/// Good-grading axioms (1)-(5) for f_prin, one result per axiom.
std::vector<CheckResult> check_good_grading(const OspAlgebra& g);
CheckResult check_chi_nondegenerate(const OspAlgebra& g);
/// u(+-alpha_i) generate g under brackets.
CheckResult check_chevalley_generation(const OspAlgebra& g);

std::vector<CheckResult> structure_suite(const OspAlgebra& g, const TripleSampling& sampling);

/// Dimension of the centralizer g^f of f_prin.
std::size_t centralizer_dimension(const OspAlgebra& g);

}  // namespace ghostw
