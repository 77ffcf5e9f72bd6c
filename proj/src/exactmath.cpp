#include "ghostw/exactmath.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace ghostw {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  auto is_integer = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("malformed rational: " + std::string(text));
  }
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  Integer p(n, 10);
  Integer q(std::string(den), 10);
  if (q == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  Rational r(p, q);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// RationalMatrix

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols) {}

void RationalMatrix::check_index(std::size_t r, std::size_t c) const {
  if (r >= rows_.size() || c >= cols_) throw std::out_of_range("RationalMatrix index");
}

Rational RationalMatrix::at(std::size_t r, std::size_t c) const {
  check_index(r, c);
  const auto it = rows_[r].find(c);
  return it == rows_[r].end() ? Rational(0) : it->second;
}

void RationalMatrix::set(std::size_t r, std::size_t c, const Rational& value) {
  check_index(r, c);
  if (value == 0) {
    rows_[r].erase(c);
  } else {
    rows_[r][c] = value;
  }
}

void RationalMatrix::add(std::size_t r, std::size_t c, const Rational& value) {
  check_index(r, c);
  if (value == 0) return;
  auto [it, inserted] = rows_[r].try_emplace(c, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) rows_[r].erase(it);
  }
}

void RationalMatrix::append_row(Row row) {
  for (auto it = row.begin(); it != row.end();) {
    if (it->first >= cols_) throw std::out_of_range("RationalMatrix::append_row column");
    it = it->second == 0 ? row.erase(it) : std::next(it);
  }
  rows_.push_back(std::move(row));
}

std::size_t RationalMatrix::nonzeros() const {
  std::size_t total = 0;
  for (const auto& r : rows_) total += r.size();
  return total;
}

RationalVector RationalMatrix::apply(const RationalVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("RationalMatrix::apply dimension");
  RationalVector out(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& [c, x] : rows_[r]) out[r] += x * v[c];
  }
  return out;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(0, cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("RationalMatrix::from_rows ragged");
    Row row;
    for (std::size_t c = 0; c < cols; ++c) {
      if (r[c] != 0) row.emplace(c, r[c]);
    }
    m.append_row(std::move(row));
  }
  return m;
}

// ---------------------------------------------------------------------------
// Fraction-free sparse elimination.

namespace {

using IntRow = std::vector<std::pair<std::size_t, Integer>>;

std::size_t bit_size(const IntRow& row) {
  std::size_t bits = 0;
  for (const auto& [c, x] : row) bits += mpz_sizeinbase(x.get_mpz_t(), 2);
  return bits;
}

// Divides by the content and makes the leading entry positive.
void make_primitive(IntRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, x] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1) {
    for (auto& [c, x] : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

IntRow to_int_row(const RationalMatrix::Row& row) {
  Integer den = 1;
  for (const auto& [c, x] : row) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  }
  IntRow out;
  out.reserve(row.size());
  for (const auto& [c, x] : row) {
    Integer v = den / x.get_den();
    v *= x.get_num();
    out.emplace_back(c, std::move(v));
  }
  make_primitive(out);
  return out;
}

Integer entry(const IntRow& row, std::size_t col) {
  const auto it = std::lower_bound(row.begin(), row.end(), col,
                                   [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? it->second : Integer(0);
}

// target := a * target - b * source, where target[col] * a == source[col] * b
// cancels the entry at col.
void eliminate(IntRow& target, const IntRow& source, std::size_t col) {
  Integer t = entry(target, col);
  if (t == 0) return;
  Integer s = entry(source, col);
  Integer g;
  mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), s.get_mpz_t());
  const Integer a = s / g;
  const Integer b = t / g;
  IntRow out;
  out.reserve(target.size() + source.size());
  auto ti = target.begin();
  auto si = source.begin();
  Integer tmp;
  while (ti != target.end() || si != source.end()) {
    if (si == source.end() || (ti != target.end() && ti->first < si->first)) {
      out.emplace_back(ti->first, a * ti->second);
      ++ti;
    } else if (ti == target.end() || si->first < ti->first) {
      out.emplace_back(si->first, -b * si->second);
      ++si;
    } else {
      tmp = a * ti->second;
      tmp -= b * si->second;
      if (tmp != 0) out.emplace_back(ti->first, tmp);
      ++ti;
      ++si;
    }
  }
  make_primitive(out);
  target = std::move(out);
}

class Echelon {
 public:
  void insert(IntRow row) {
    while (!row.empty()) {
      const std::size_t lead = row.front().first;
      auto it = pivots_.find(lead);
      if (it == pivots_.end()) {
        pivots_.emplace(lead, std::move(row));
        return;
      }
      // Keep the cheaper of the two rows as the pivot.
      if (bit_size(row) < bit_size(it->second)) std::swap(row, it->second);
      eliminate(row, it->second, lead);
    }
  }

  // Back substitution: clears every pivot column above its pivot.
  void reduce() {
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      const std::size_t col = it->first;
      for (auto jt = pivots_.begin(); jt->first < col; ++jt) {
        eliminate(jt->second, it->second, col);
      }
    }
  }

  const std::map<std::size_t, IntRow>& pivots() const { return pivots_; }

 private:
  std::map<std::size_t, IntRow> pivots_;
};

Echelon echelonize(const RationalMatrix& m) {
  Echelon e;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (!m.row(r).empty()) e.insert(to_int_row(m.row(r)));
  }
  return e;
}

RationalVector make_integral_primitive(RationalVector v, std::size_t anchor) {
  Integer den = 1;
  for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  Integer g = 0;
  for (auto& x : v) {
    x *= den;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  if (v[anchor] < 0) g = -g;
  if (g != 0 && g != 1) {
    for (auto& x : v) x /= g;
  }
  return v;
}

}  // namespace

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  Echelon e = echelonize(m);
  e.reduce();
  const auto& pivots = e.pivots();
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (pivots.contains(f)) continue;
    RationalVector v(m.cols());
    v[f] = 1;
    for (const auto& [col, row] : pivots) {
      if (col > f) break;
      const Integer x = entry(row, f);
      if (x != 0) v[col] = Rational(-x, row.front().second);
    }
    for (auto& x : v) x.canonicalize();
    basis.push_back(make_integral_primitive(std::move(v), f));
  }
  return basis;
}

std::size_t rank(const RationalMatrix& m) { return echelonize(m).pivots().size(); }

std::size_t rank(std::span<const RationalVector> vectors) {
  if (vectors.empty()) return 0;
  return rank(RationalMatrix::from_rows({vectors.begin(), vectors.end()}));
}

std::vector<RationalVector> row_space_basis(std::span<const RationalVector> vectors,
                                            std::size_t dim) {
  RationalMatrix m(0, dim);
  for (const auto& v : vectors) {
    if (v.size() != dim) throw std::invalid_argument("row_space_basis: dimension mismatch");
    RationalMatrix::Row row;
    for (std::size_t c = 0; c < dim; ++c) {
      if (v[c] != 0) row.emplace(c, v[c]);
    }
    m.append_row(std::move(row));
  }
  Echelon e = echelonize(m);
  e.reduce();
  std::vector<RationalVector> out;
  for (const auto& [col, row] : e.pivots()) {
    RationalVector v(dim);
    for (const auto& [c, x] : row) {
      v[c] = Rational(x, row.front().second);
      v[c].canonicalize();
    }
    out.push_back(std::move(v));
  }
  return out;
}

bool same_span(std::span<const RationalVector> a, std::span<const RationalVector> b,
               std::size_t dim) {
  return row_space_basis(a, dim) == row_space_basis(b, dim);
}

SpanMembership in_span(const RationalVector& v, std::span<const RationalVector> basis) {
  for (const auto& b : basis) {
    if (b.size() != v.size()) throw std::invalid_argument("in_span: dimension mismatch");
  }
  // Columns are the basis vectors followed by v; v is in the span iff its
  // column is free in the reduced echelon form.
  const std::size_t k = basis.size();
  RationalMatrix m(v.size(), k + 1);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < v.size(); ++i) m.set(i, j, basis[j][i]);
  }
  for (std::size_t i = 0; i < v.size(); ++i) m.set(i, k, v[i]);
  Echelon e = echelonize(m);
  e.reduce();
  if (e.pivots().contains(k)) return {};
  SpanMembership result{true, RationalVector(k)};
  for (const auto& [col, row] : e.pivots()) {
    const Integer x = entry(row, k);
    if (x != 0) {
      result.coefficients[col] = Rational(x, row.front().second);
      result.coefficients[col].canonicalize();
    }
  }
  return result;
}

std::vector<RationalVector> inverse(const std::vector<RationalVector>& rows) {
  const std::size_t n = rows.size();
  std::vector<RationalVector> augmented;
  augmented.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw std::invalid_argument("inverse: matrix is not square");
    RationalVector r(2 * n);
    std::copy(rows[i].begin(), rows[i].end(), r.begin());
    r[n + i] = 1;
    augmented.push_back(std::move(r));
  }
  const auto reduced = row_space_basis(augmented, 2 * n);
  if (reduced.size() != n) return {};
  std::vector<RationalVector> inv;
  for (std::size_t i = 0; i < n; ++i) {
    if (reduced[i][i] != 1) return {};
    inv.emplace_back(reduced[i].begin() + static_cast<std::ptrdiff_t>(n), reduced[i].end());
  }
  return inv;
}

bool is_zero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace ghostw
