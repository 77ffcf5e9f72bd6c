#pragma once

// The orthosymplectic Lie superalgebra osp(1|2n), realized inside gl(1|2n).
//
// gl indices are {0, 1..n, -1..-n}; index 0 is the even line, +-i span the
// odd 2n-dimensional block. Matrices are stored with index 0 at row 0, +i at
// row i and -i at row n+i. Root vectors (the sign and scale convention):
//
//   u(e_i)        = e_{i,0} - e_{0,-i}        u(-e_i)        = e_{-i,0} + e_{0,i}
//   u(e_i-e_j)    = e_{i,j} - e_{-j,-i}
//   u(e_i+e_j)    = e_{i,-j} + e_{j,-i}       u(-e_i-e_j)    = e_{-i,j} + e_{-j,i}
//   u(2e_i)       = e_{i,-i}                  u(-2e_i)       = e_{-i,i}   (i < n)
//   u(-2e_n)      = s * e_{-n,n}, with s fixed so that chi([u(e_n), u(e_n)]) = 2.
//
// Basis order: negative root vectors, then h_1..h_n, then u(e_n), then the
// other positive root vectors. Within each root block roots are sorted by
// height and then by their epsilon coefficients in decreasing lexicographic
// order. With this order every PBW monomial reads (n_-)(h)(u(e_n))(g_{>=1}).
//
// Good-grading degrees are stored doubled so that they stay integral.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ghostw/exactmath.hpp"

namespace ghostw {

enum class Parity : unsigned char { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<unsigned>(a) ^ static_cast<unsigned>(b));
}
inline int sign_of_swap(Parity a, Parity b) {
  return (a == Parity::odd && b == Parity::odd) ? -1 : 1;
}

/// A root in epsilon coordinates.
struct Root {
  std::vector<int> eps;

  Parity parity() const;
  bool positive() const;
  /// Coefficients in the simple roots alpha_1..alpha_n.
  std::vector<int> simple_coefficients() const;
  int height() const;
  Root operator-() const;
  friend bool operator==(const Root&, const Root&) = default;
  std::string to_string() const;
};

/// An element of h^* in epsilon coordinates; lambda(h_i) is eps[i].
struct Weight {
  RationalVector eps;

  friend bool operator==(const Weight&, const Weight&) = default;
  Weight operator+(const Weight& other) const;
  Weight operator-(const Weight& other) const;
  Weight operator*(const Rational& s) const;
};

/// Invariant form transported to h^*: (e_i | e_j) = delta_ij / 2.
Rational pairing(const Weight& a, const Weight& b);
Weight to_weight(const Root& r);

struct BasisVector {
  std::string label;
  Parity parity = Parity::even;
  int doubled_degree = 0;
  /// Empty for the Cartan generators.
  std::optional<Root> root;
  /// 1-based index i for h_i, 0 for root vectors.
  int cartan = 0;
};

using SparseLie = std::vector<std::pair<std::size_t, Rational>>;

/// Coordinates over the osp basis plus parity and doubled-degree metadata;
/// the metadata is empty when the support is mixed. Zero is even of degree 0.
struct LieElement {
  RationalVector coords;
  std::optional<Parity> parity;
  std::optional<int> doubled_degree;

  bool is_zero() const { return ghostw::is_zero(coords); }
  SparseLie sparse() const;
  friend bool operator==(const LieElement& a, const LieElement& b) {
    return a.coords == b.coords;
  }
};

using SquareMatrix = std::vector<RationalVector>;

class OspAlgebra {
 public:
  /// Throws std::invalid_argument when n < 1.
  explicit OspAlgebra(int n);

  int n() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const BasisVector& basis(std::size_t i) const { return basis_.at(i); }
  const std::vector<BasisVector>& basis() const { return basis_; }
  std::size_t index_of(const std::string& label) const;
  std::optional<std::size_t> root_index(const Root& r) const;
  std::size_t cartan_index(int i) const { return num_negative_ + static_cast<std::size_t>(i - 1); }
  /// Index of u(alpha_n) = u(e_n).
  std::size_t alpha_n_index() const { return num_negative_ + static_cast<std::size_t>(n_); }

  bool is_negative(std::size_t i) const { return i < num_negative_; }
  bool is_cartan(std::size_t i) const {
    return i >= num_negative_ && i < num_negative_ + static_cast<std::size_t>(n_);
  }
  bool is_positive(std::size_t i) const {
    return i >= num_negative_ + static_cast<std::size_t>(n_);
  }
  /// g_{>=1}: positive root vectors other than u(alpha_n).
  bool in_g_ge1(std::size_t i) const { return is_positive(i) && i != alpha_n_index(); }

  std::vector<Root> positive_roots() const;
  std::vector<Root> simple_roots() const;
  /// Simple root vectors u(alpha_i) and u(-alpha_i); they generate the algebra.
  std::vector<std::size_t> chevalley_generators() const;
  /// u(alpha_1)..u(alpha_n); they generate n = g_{>0}.
  std::vector<std::size_t> positive_generators() const;

  LieElement element(std::size_t i) const;
  LieElement element(const RationalVector& coords) const;

  const SparseLie& bracket_basis(std::size_t i, std::size_t j) const {
    return brackets_[i * dim() + j];
  }
  /// Super bracket. Throws std::invalid_argument on mixed-parity input.
  LieElement bracket(const LieElement& u, const LieElement& v) const;

  const Rational& form_basis(std::size_t i, std::size_t j) const {
    return form_[i * dim() + j];
  }
  /// (u|v) = -str(uv).
  Rational form(const LieElement& u, const LieElement& v) const;

  /// Good-grading degree of every basis vector, as exact rationals.
  std::vector<std::pair<std::string, Rational>> good_grading() const;

  /// f_prin = sum_{i<n} u(-alpha_i) + u(-2 alpha_n).
  LieElement principal_nilpotent() const;
  /// chi(u) = (f_prin | u).
  Rational chi(const LieElement& u) const;
  const Rational& chi_basis(std::size_t i) const { return chi_.at(i); }

  /// rho = 1/2 sum_{alpha > 0} (-1)^{p(alpha)} alpha.
  Weight rho() const;

  /// gl(1|2n) matrix of a basis vector.
  const SquareMatrix& matrix(std::size_t i) const { return matrices_.at(i); }
  /// Expresses an osp matrix in the basis. Throws std::logic_error if the
  /// matrix is not in osp(1|2n).
  RationalVector decompose(const SquareMatrix& m) const;

 private:
  std::size_t gl_row(int index) const;
  void add_basis(std::string label, std::optional<Root> root, int cartan, SquareMatrix m,
                 std::pair<int, int> anchor);
  LieElement with_metadata(RationalVector coords) const;

  int n_;
  std::size_t num_negative_ = 0;
  std::vector<BasisVector> basis_;
  std::vector<SquareMatrix> matrices_;
  std::vector<std::pair<std::size_t, std::size_t>> anchors_;
  std::vector<SparseLie> brackets_;
  std::vector<Rational> form_;
  std::vector<Rational> chi_;
};

SquareMatrix supercommutator(const SquareMatrix& x, Parity px, const SquareMatrix& y, Parity py);
Rational supertrace(const SquareMatrix& m);

/// Serializes the algebra datum: basis labels, parities, doubled degrees and
/// the nonzero brackets as [i, j, {label: "p/q"}].
nlohmann::json to_json(const OspAlgebra& g);

}  // namespace ghostw
