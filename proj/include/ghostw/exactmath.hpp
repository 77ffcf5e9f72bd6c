#pragma once

// Exact rational arithmetic and exact linear algebra over Q.
//
// Every coefficient in the library is a GMP rational. The solvers below are
// fraction-free internally: rows are scaled to primitive integer vectors and
// eliminated with integer row operations, then the reduced echelon form is
// read back as rationals.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ghostw {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q"; the result is canonical. Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);
/// num/den in lowest terms. mpq_class(num, den) does not canonicalize.
Rational make_rational(long num, long den);

/// Sparse rows x cols matrix; zero entries are never stored.
class RationalMatrix {
 public:
  using Row = std::map<std::size_t, Rational>;

  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  Rational at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& value);
  void add(std::size_t r, std::size_t c, const Rational& value);

  const Row& row(std::size_t r) const { return rows_.at(r); }
  /// Appends a row; entries must lie inside [0, cols()).
  void append_row(Row row);
  /// Number of stored (nonzero) entries.
  std::size_t nonzeros() const;

  RationalVector apply(const RationalVector& v) const;

  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);

 private:
  void check_index(std::size_t r, std::size_t c) const;

  std::vector<Row> rows_;
  std::size_t cols_ = 0;
};

/// Basis of {v : m v = 0}. One vector per free column of the reduced row
/// echelon form of m, in increasing free-column order; each vector is scaled
/// to coprime integers with a positive entry at its free column. The result
/// depends only on the row space of m.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);
std::size_t rank(std::span<const RationalVector> vectors);

/// Reduced row echelon basis of span(vectors), leading entries equal to 1.
/// Two families span the same subspace iff their results are equal.
std::vector<RationalVector> row_space_basis(std::span<const RationalVector> vectors,
                                            std::size_t dim);

bool same_span(std::span<const RationalVector> a, std::span<const RationalVector> b,
               std::size_t dim);

struct SpanMembership {
  bool member = false;
  /// Coefficients with v = sum coefficients[i] * basis[i]; empty unless member.
  RationalVector coefficients;
};

/// Decides whether v lies in span(basis). Throws std::invalid_argument when
/// a basis vector's length differs from v's.
SpanMembership in_span(const RationalVector& v, std::span<const RationalVector> basis);

/// Inverse of a square matrix given by rows; empty result if singular.
std::vector<RationalVector> inverse(const std::vector<RationalVector>& rows);

bool is_zero(const RationalVector& v);

}  // namespace ghostw
