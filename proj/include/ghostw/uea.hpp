#pragma once

// PBW normal forms in U(osp(1|2n)).
//
// A PBW monomial is an exponent vector over the ordered osp basis (odd
// exponents are 0 or 1). Products are normal-ordered by inserting one
// generator at a time from the left, using
//
//   x y   = (-1)^{p(x)p(y)} y x + [x, y]     for x after y in basis order,
//   x x   = 1/2 [x, x]                        for odd x,
//
// and memoizing the normal form of (generator) * (monomial).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ghostw/exactmath.hpp"
#include "ghostw/osp.hpp"

namespace ghostw {

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t dim) : exps_(dim, 0) {}
  explicit Monomial(std::vector<std::uint8_t> exps) : exps_(std::move(exps)) {}

  std::size_t dim() const { return exps_.size(); }
  std::uint8_t exponent(std::size_t i) const { return exps_[i]; }
  void set_exponent(std::size_t i, std::uint8_t e) { exps_[i] = e; }
  const std::vector<std::uint8_t>& exponents() const { return exps_; }

  int degree() const;
  bool is_one() const { return degree() == 0; }
  /// Factor indices left to right, with multiplicity.
  std::vector<std::size_t> factors() const;
  std::optional<std::size_t> first_factor() const;

  /// Orders by total degree, then lexicographically by exponent vector.
  friend bool operator<(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

 private:
  std::vector<std::uint8_t> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

/// Finite linear combination of PBW monomials with no zero coefficients.
class UEAElement {
 public:
  using Terms = std::map<Monomial, Rational>;

  UEAElement() = default;
  explicit UEAElement(Terms terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  void add(const Monomial& m, const Rational& c);
  UEAElement& operator+=(const UEAElement& other);
  UEAElement& operator-=(const UEAElement& other);
  UEAElement& operator*=(const Rational& s);
  friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
  friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
  friend UEAElement operator*(UEAElement a, const Rational& s) { return a *= s; }
  friend UEAElement operator*(const Rational& s, UEAElement a) { return a *= s; }
  friend bool operator==(const UEAElement&, const UEAElement&) = default;

  /// Largest total degree; -1 for zero.
  int degree() const;
  /// Common parity of all monomials; empty when mixed. Zero is even.
  std::optional<Parity> parity(const OspAlgebra& g) const;

 private:
  Terms terms_;
};

Parity parity_of(const OspAlgebra& g, const Monomial& m);
/// ad(h)-weight in epsilon coordinates.
std::vector<int> weight_of(const OspAlgebra& g, const Monomial& m);
std::string to_string(const OspAlgebra& g, const Monomial& m);
std::string to_string(const OspAlgebra& g, const UEAElement& a);

/// [{"monomial": [[label, exp], ...], "coeff": "p/q"}, ...]
nlohmann::json to_json(const OspAlgebra& g, const UEAElement& a);
UEAElement uea_from_json(const OspAlgebra& g, const nlohmann::json& j);

/// Coordinates of elements over a fixed list of monomials.
class MonomialIndex {
 public:
  MonomialIndex() = default;
  explicit MonomialIndex(std::vector<Monomial> monomials);

  std::size_t size() const { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  const Monomial& at(std::size_t i) const { return monomials_[i]; }
  std::optional<std::size_t> find(const Monomial& m) const;

  /// Throws std::out_of_range if a monomial of a lies outside the index.
  RationalVector coordinates(const UEAElement& a) const;
  UEAElement element(const RationalVector& v) const;

 private:
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t> index_;
};

/// Normal-ordering engine. Holds a reference to the algebra, which must
/// outlive it. The product cache is guarded by a mutex.
class EnvelopingAlgebra {
 public:
  explicit EnvelopingAlgebra(const OspAlgebra& g);

  const OspAlgebra& lie() const { return g_; }

  UEAElement one() const;
  UEAElement generator(std::size_t i) const;
  UEAElement embed(const LieElement& x) const;
  UEAElement monomial(const Monomial& m, const Rational& c = 1) const;

  /// Normal form of scalar * word[0] * word[1] * ...
  UEAElement normal_order(const std::vector<std::size_t>& word, const Rational& scalar = 1);
  UEAElement normal_order(const std::vector<std::string>& labels, const Rational& scalar = 1);

  UEAElement multiply(const UEAElement& a, const UEAElement& b);
  /// generator(i) * a
  UEAElement left_multiply(std::size_t i, const UEAElement& a);
  /// a * generator(i)
  UEAElement right_multiply(const UEAElement& a, std::size_t i);

  /// ab - (-1)^{p(a)p(b)} ba. Throws std::invalid_argument on mixed parity.
  UEAElement supercommutator(const UEAElement& a, const UEAElement& b);
  /// ad(x)(a) = x a - (-1)^{p(x)p(a)} a x, extended linearly over the parity
  /// components of a. Throws std::invalid_argument if x has mixed parity.
  UEAElement adjoint(const LieElement& x, const UEAElement& a);
  UEAElement adjoint(std::size_t i, const UEAElement& a);
  /// x a - (-1)^{p(x)(p(a)+1)} a x. Throws std::invalid_argument on mixed parity.
  UEAElement twisted_adjoint(const LieElement& x, const UEAElement& a);
  UEAElement twisted_adjoint(std::size_t i, const UEAElement& a);

  /// Monomials of total degree <= max_degree, optionally of a fixed
  /// ad(h)-weight, sorted by the monomial order.
  std::vector<Monomial> enumerate_pbw(int max_degree,
                                      const std::optional<std::vector<int>>& weight = {}) const;

  std::size_t cache_size() const {
    std::lock_guard lock(mutex_);
    return cache_.size();
  }

 private:
  using TermList = std::vector<std::pair<Monomial, Rational>>;

  void left_multiply_into(std::size_t x, const Monomial& m, const Rational& c,
                          UEAElement::Terms& out);
  const TermList& left_multiply_slow(std::size_t x, const Monomial& m);
  static void accumulate(UEAElement::Terms& out, const Monomial& m, const Rational& c);

  const OspAlgebra& g_;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> half_squares_;
  struct Key {
    std::size_t gen;
    Monomial m;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return MonomialHash{}(k.m) * 31 + k.gen;
    }
  };
  std::unordered_map<Key, TermList, KeyHash> cache_;
  mutable std::recursive_mutex mutex_;
};

}  // namespace ghostw
