#pragma once

// Harish-Chandra layer: the projection eta onto U(h) = C[h*], the rho-shift
// sigma, the Weyl group of sp(2n) acting by signed permutations, and central
// characters. A weight lambda evaluates h_i to lambda.eps[i-1].

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ghostw/exactmath.hpp"
#include "ghostw/osp.hpp"
#include "ghostw/uea.hpp"

namespace ghostw {

class HCPolynomial {
 public:
  using Exponents = std::vector<int>;

  explicit HCPolynomial(int n = 1);
  static HCPolynomial constant(int n, const Rational& c);
  /// h_i, 1-based.
  static HCPolynomial variable(int n, int i);

  int n() const { return n_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for zero.
  int degree() const;
  Rational coefficient(const Exponents& e) const;
  void add(const Exponents& e, const Rational& c);

  HCPolynomial& operator+=(const HCPolynomial& o);
  HCPolynomial& operator-=(const HCPolynomial& o);
  HCPolynomial& operator*=(const Rational& s);
  friend HCPolynomial operator+(HCPolynomial a, const HCPolynomial& b) { return a += b; }
  friend HCPolynomial operator-(HCPolynomial a, const HCPolynomial& b) { return a -= b; }
  friend HCPolynomial operator*(HCPolynomial a, const Rational& s) { return a *= s; }
  friend HCPolynomial operator*(const HCPolynomial& a, const HCPolynomial& b);
  friend bool operator==(const HCPolynomial&, const HCPolynomial&) = default;

  HCPolynomial pow(unsigned k) const;
  Rational evaluate(const Weight& lambda) const;
  /// Simultaneous substitution h_i -> images[i-1].
  HCPolynomial substitute(const std::vector<HCPolynomial>& images) const;

 private:
  int n_;
  std::map<Exponents, Rational> terms_;
};

std::string to_string(const HCPolynomial& f);
/// {"e1,...,en": "p/q"}
nlohmann::json to_json(const HCPolynomial& f);
HCPolynomial hc_from_json(int n, const nlohmann::json& j);

/// Keeps the pure-Cartan monomials of a normal form.
HCPolynomial eta(const OspAlgebra& g, const UEAElement& a);
/// h_i -> h_i - rho(h_i).
HCPolynomial sigma(const OspAlgebra& g, const HCPolynomial& f);
HCPolynomial sigma_inverse(const OspAlgebra& g, const HCPolynomial& f);
/// sigma(eta(a))
HCPolynomial hc_image(const OspAlgebra& g, const UEAElement& a);

/// Signed permutation: w(e_i) = signs[i] * e_{perm[i]} (0-based).
struct WeylElement {
  std::vector<int> perm;
  std::vector<int> signs;

  static WeylElement identity(int n);
  /// (w * v)(x) = w(v(x))
  friend WeylElement operator*(const WeylElement& w, const WeylElement& v);
  WeylElement inverse() const;
  friend bool operator==(const WeylElement&, const WeylElement&) = default;
};

/// Adjacent transpositions s_1..s_{n-1} and the sign flip of e_n.
std::vector<WeylElement> weyl_generators(int n);
/// All 2^n n! elements.
std::vector<WeylElement> weyl_group(int n);
Weight weyl_act(const WeylElement& w, const Weight& lambda);
/// (w.f)(lambda) = f(w^{-1} lambda)
HCPolynomial weyl_act(const WeylElement& w, const HCPolynomial& f);
bool is_invariant(const HCPolynomial& f);

/// w(lambda + rho) - rho
Weight dot_action(const OspAlgebra& g, const WeylElement& w, const Weight& lambda);

/// eta(z) evaluated at lambda.
Rational central_character(const OspAlgebra& g, const Weight& lambda, const UEAElement& z);

/// prod over all odd roots alpha of (lambda + rho | alpha) vanishes.
bool in_D(const OspAlgebra& g, const Weight& lambda);
/// Same product restricted to positive odd roots.
bool in_D_positive(const OspAlgebra& g, const Weight& lambda);

/// Basis of W-invariant polynomials of degree <= d: products of the
/// elementary symmetric polynomials in h_1^2, ..., h_n^2.
std::vector<HCPolynomial> invariant_basis(int n, int max_degree);

/// Coefficient vector over all monomials of degree <= d, ordered
/// lexicographically by exponent vector.
RationalVector coefficient_vector(const HCPolynomial& f, int max_degree);

}  // namespace ghostw
