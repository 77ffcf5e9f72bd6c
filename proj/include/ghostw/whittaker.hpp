#pragma once

// The Whittaker model M = U(g) / I, where I is the left ideal generated by
// v + chi(v) for v in g_{>=1}, its ad(g_{>0})-invariants (the finite
// W-algebra), the Miura map into C[h*] (x) Phi, and the map
// q1 xi : Z + A -> M^{ad g_{>0}}, z + a |-> [z + a u(alpha_n)].
//
// Normal forms: with the basis order negative roots < Cartan < u(alpha_n) <
// rest of g_{>=1}, every PBW monomial is A B with B a word in g_{>=1}, and
// A B = A prod(-chi(v)) modulo I. Reduced monomials are the ones without
// g_{>=1} factors. A class is represented by its unique reduced combination,
// and lifted back to U(g) by reading that combination as a UEAElement.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ghostw/centers.hpp"
#include "ghostw/hc.hpp"
#include "ghostw/report.hpp"
#include "ghostw/uea.hpp"

namespace ghostw {

/// Reduced combination representing a class in M.
class WhittakerVector {
 public:
  WhittakerVector() = default;

  /// The canonical lift.
  const UEAElement& lift() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }
  int degree() const { return value_.degree(); }
  std::optional<Parity> parity(const OspAlgebra& g) const { return value_.parity(g); }

  friend bool operator==(const WhittakerVector&, const WhittakerVector&) = default;
  WhittakerVector& operator+=(const WhittakerVector& o);
  WhittakerVector& operator*=(const Rational& s);
  friend WhittakerVector operator+(WhittakerVector a, const WhittakerVector& b) { return a += b; }
  friend WhittakerVector operator*(WhittakerVector a, const Rational& s) { return a *= s; }

 private:
  friend class WhittakerModel;
  explicit WhittakerVector(UEAElement v) : value_(std::move(v)) {}
  UEAElement value_;
};

/// one (x) 1 + phi (x) Phi with Phi^2 = 1, Phi commuting with C[h*].
struct MiuraImage {
  HCPolynomial one;
  HCPolynomial phi;

  friend bool operator==(const MiuraImage&, const MiuraImage&) = default;
  friend MiuraImage operator*(const MiuraImage& a, const MiuraImage& b);
};

std::string to_string(const MiuraImage& m);

struct FiniteWBasis {
  int degree = 0;
  std::vector<WhittakerVector> even;
  std::vector<WhittakerVector> odd;
};

class WhittakerModel {
 public:
  explicit WhittakerModel(EnvelopingAlgebra& U);

  EnvelopingAlgebra& uea() { return U_; }
  const OspAlgebra& lie() const { return U_.lie(); }

  bool is_reduced(const Monomial& m) const;
  WhittakerVector reduce(const UEAElement& a) const;
  /// Throws std::invalid_argument if some monomial is not reduced.
  WhittakerVector from_reduced(const UEAElement& a) const;

  /// ad(x)(m) = reduce(x lift(m) - (-1)^{p(x)p(m)} lift(m) x), extended over
  /// the parity components of m. Throws std::invalid_argument unless x is a
  /// parity-homogeneous element of g_{>0}.
  WhittakerVector ad_quotient(const LieElement& x, const WhittakerVector& m);
  WhittakerVector ad_quotient(std::size_t i, const WhittakerVector& m);
  /// Killed by ad of the simple positive root vectors, which generate g_{>0}.
  bool is_invariant(const WhittakerVector& m);

  /// Reduced monomials of total degree <= d, in monomial order.
  const MonomialIndex& reduced_index(int d);
  const FiniteWBasis& finite_w_basis(int d);
  /// Dimension of the subspace of F_d M killed by ad of the given basis
  /// vectors (no parity split).
  std::size_t invariant_dimension(const std::vector<std::size_t>& generators, int d);

  /// reduce(lift(a) lift(b)). Throws std::invalid_argument unless both are
  /// invariant.
  WhittakerVector w_multiply(const WhittakerVector& a, const WhittakerVector& b);

  /// Drops monomials with negative-root factors and splits the rest by the
  /// u(alpha_n) exponent.
  MiuraImage miura(const WhittakerVector& m) const;

  /// z + a u(alpha_n)
  UEAElement xi_map(const UEAElement& z, const UEAElement& a);
  /// reduce(z + a u(alpha_n)). Throws std::invalid_argument unless z is
  /// killed by ad and a by the twisted adjoint action of the Chevalley
  /// generators.
  WhittakerVector theorem_a_map(const UEAElement& z, const UEAElement& a);

 private:
  struct Solution {
    std::vector<WhittakerVector> even, odd;
  };
  Solution solve_invariants(const std::vector<std::size_t>& generators, int d);

  EnvelopingAlgebra& U_;
  std::vector<Rational> right_scalar_;  // -chi(v) for v in g_{>=1}
  std::map<int, MonomialIndex> indices_;
  std::map<int, FiniteWBasis> bases_;
};

/// 1 if lambda is in D, otherwise 2.
int top_space_dimension(const OspAlgebra& g, const Weight& lambda);

struct TheoremAReport {
  int n = 0;
  int degree = 0;
  std::vector<CheckResult> assertions;
  std::size_t center_dim = 0, anticenter_dim = 0, invariants_even = 0, invariants_odd = 0;

  bool passed() const { return all_passed(assertions); }
};

/// Assertions, in order:
///   injective      q1 xi is injective on Z + A within F_d;
///   image          span q1 xi(Z + A) and F_d = M^{ad g_{>0}} and F_d, with
///                  each image invariant and Z, A landing in the even, odd part;
///   multiplicative q1 xi(x y) = q1 xi(x) q1 xi(y) for basis pairs within F_d;
///   miura_square   mu(G)^2 = mu(G G) = mu(q1 xi(T^2)) = sigma^{-1}(h_1^2...h_n^2).
TheoremAReport verify_theorem_a(CenterSolver& centers, WhittakerModel& w, int d);

/// {"schema", "n", "degree", "assertions", "dimensions"}
nlohmann::json to_json(const TheoremAReport& r);

// Further checks on the model.

/// mu(G) = prod_i (h_i + rho(h_i)) (x) Phi.
CheckResult check_miura_of_ghost(CenterSolver& centers, WhittakerModel& w);
/// dim of even invariants in F_k equals dim Z and F_k for every k <= d.
CheckResult check_filtered_dimensions(CenterSolver& centers, WhittakerModel& w, int d);
/// q1 xi sends Z to even and A to odd invariants.
CheckResult check_parity_transport(CenterSolver& centers, WhittakerModel& w, int d);
/// ad(x) of a vector in F_k stays in F_k, for every reduced monomial of degree
/// <= d and every basis vector x of g_{>0}.
CheckResult check_filtration_stable(WhittakerModel& w, int d);
/// reduce and ad_quotient do not depend on the lift: adding random elements
/// of the ideal changes nothing.
CheckResult check_lift_independence(WhittakerModel& w, int samples, std::uint64_t seed);
/// The Miura map is injective on the invariant basis.
CheckResult check_miura_injective(WhittakerModel& w, int d);
/// w_multiply is associative and closed on sampled invariant triples.
CheckResult check_w_associative(WhittakerModel& w, int d, std::uint64_t seed);
/// top_space_dimension = 1 iff in_D iff chi_lambda(T^2) = 0 on random weights,
/// and in_D is stable under the dot action.
CheckResult check_module_classification(CenterSolver& centers, int samples, std::uint64_t seed);
/// Informational: dim M^{ad g_{>=1}} and dim M^{ad g_{>0}} in F_k, k <= d.
CheckResult compare_invariants_g_ge1(WhittakerModel& w, int d);

}  // namespace ghostw
