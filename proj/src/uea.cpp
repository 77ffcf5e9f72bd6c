#include "ghostw/uea.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace ghostw {

// ---------------------------------------------------------------------------
// Monomial

int Monomial::degree() const {
  int d = 0;
  for (auto e : exps_) d += e;
  return d;
}

std::vector<std::size_t> Monomial::factors() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    for (int k = 0; k < exps_[i]; ++k) out.push_back(i);
  }
  return out;
}

std::optional<std::size_t> Monomial::first_factor() const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0) return i;
  }
  return std::nullopt;
}

bool operator<(const Monomial& a, const Monomial& b) {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  return a.exps_ < b.exps_;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.exponents()) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

Parity parity_of(const OspAlgebra& g, const Monomial& m) {
  unsigned odd = 0;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (g.basis(i).parity == Parity::odd) odd += m.exponent(i);
  }
  return (odd % 2) ? Parity::odd : Parity::even;
}

std::vector<int> weight_of(const OspAlgebra& g, const Monomial& m) {
  std::vector<int> w(static_cast<std::size_t>(g.n()));
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (m.exponent(i) == 0 || !g.basis(i).root) continue;
    const auto& eps = g.basis(i).root->eps;
    for (std::size_t k = 0; k < w.size(); ++k) w[k] += m.exponent(i) * eps[k];
  }
  return w;
}

std::string to_string(const OspAlgebra& g, const Monomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (m.exponent(i) == 0) continue;
    if (!s.empty()) s += ' ';
    s += g.basis(i).label;
    if (m.exponent(i) > 1) s += '^' + std::to_string(m.exponent(i));
  }
  return s;
}

// ---------------------------------------------------------------------------
// UEAElement

UEAElement::UEAElement(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

Rational UEAElement::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void UEAElement::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

UEAElement& UEAElement::operator+=(const UEAElement& other) {
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& other) {
  for (const auto& [m, c] : other.terms_) add(m, -c);
  return *this;
}

UEAElement& UEAElement::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

int UEAElement::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::optional<Parity> UEAElement::parity(const OspAlgebra& g) const {
  std::optional<Parity> p;
  for (const auto& [m, c] : terms_) {
    const Parity q = parity_of(g, m);
    if (p && *p != q) return std::nullopt;
    p = q;
  }
  return p.value_or(Parity::even);
}

std::string to_string(const OspAlgebra& g, const UEAElement& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      os << to_string(mag);
    } else {
      if (mag != 1) os << to_string(mag) << " ";
      os << to_string(g, m);
    }
  }
  return os.str();
}

nlohmann::json to_json(const OspAlgebra& g, const UEAElement& a) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : a.terms()) {
    nlohmann::json mono = nlohmann::json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
      if (m.exponent(i) != 0) mono.push_back({g.basis(i).label, m.exponent(i)});
    }
    out.push_back({{"monomial", mono}, {"coeff", to_string(c)}});
  }
  return out;
}

UEAElement uea_from_json(const OspAlgebra& g, const nlohmann::json& j) {
  UEAElement a;
  for (const auto& term : j) {
    Monomial m(g.dim());
    std::size_t last = 0;
    bool first = true;
    for (const auto& factor : term.at("monomial")) {
      const std::size_t i = g.index_of(factor.at(0).get<std::string>());
      const int e = factor.at(1).get<int>();
      if ((!first && i <= last) || e < 1 || e > 255 ||
          (g.basis(i).parity == Parity::odd && e > 1)) {
        throw std::invalid_argument("not a PBW monomial");
      }
      m.set_exponent(i, static_cast<std::uint8_t>(e));
      last = i;
      first = false;
    }
    a.add(m, parse_rational(term.at("coeff").get<std::string>()));
  }
  return a;
}

// ---------------------------------------------------------------------------
// MonomialIndex

MonomialIndex::MonomialIndex(std::vector<Monomial> monomials) : monomials_(std::move(monomials)) {
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    if (!index_.emplace(monomials_[i], i).second) {
      throw std::invalid_argument("MonomialIndex: duplicate monomial");
    }
  }
}

std::optional<std::size_t> MonomialIndex::find(const Monomial& m) const {
  const auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RationalVector MonomialIndex::coordinates(const UEAElement& a) const {
  RationalVector v(monomials_.size());
  for (const auto& [m, c] : a.terms()) {
    const auto it = index_.find(m);
    if (it == index_.end()) throw std::out_of_range("MonomialIndex: monomial outside index");
    v[it->second] = c;
  }
  return v;
}

UEAElement MonomialIndex::element(const RationalVector& v) const {
  if (v.size() != monomials_.size()) throw std::invalid_argument("MonomialIndex: length");
  UEAElement a;
  for (std::size_t i = 0; i < v.size(); ++i) a.add(monomials_[i], v[i]);
  return a;
}

// ---------------------------------------------------------------------------
// EnvelopingAlgebra

EnvelopingAlgebra::EnvelopingAlgebra(const OspAlgebra& g) : g_(g) {
  half_squares_.resize(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (g.basis(i).parity != Parity::odd) continue;
    for (const auto& [k, c] : g.bracket_basis(i, i)) half_squares_[i].emplace_back(k, c / 2);
  }
}

UEAElement EnvelopingAlgebra::one() const { return monomial(Monomial(g_.dim())); }

UEAElement EnvelopingAlgebra::generator(std::size_t i) const {
  Monomial m(g_.dim());
  m.set_exponent(i, 1);
  return monomial(m);
}

UEAElement EnvelopingAlgebra::embed(const LieElement& x) const {
  UEAElement a;
  for (const auto& [i, c] : x.sparse()) {
    Monomial m(g_.dim());
    m.set_exponent(i, 1);
    a.add(m, c);
  }
  return a;
}

UEAElement EnvelopingAlgebra::monomial(const Monomial& m, const Rational& c) const {
  UEAElement a;
  a.add(m, c);
  return a;
}

void EnvelopingAlgebra::accumulate(UEAElement::Terms& out, const Monomial& m,
                                   const Rational& c) {
  auto [it, inserted] = out.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) out.erase(it);
  }
}

void EnvelopingAlgebra::left_multiply_into(std::size_t x, const Monomial& m, const Rational& c,
                                           UEAElement::Terms& out) {
  const auto first = m.first_factor();
  if (!first || x < *first || (x == *first && g_.basis(x).parity == Parity::even)) {
    Monomial r = m;
    r.set_exponent(x, static_cast<std::uint8_t>(r.exponent(x) + 1));
    accumulate(out, r, c);
    return;
  }
  for (const auto& [r, k] : left_multiply_slow(x, m)) accumulate(out, r, c * k);
}

const EnvelopingAlgebra::TermList& EnvelopingAlgebra::left_multiply_slow(std::size_t x,
                                                                        const Monomial& m) {
  std::lock_guard lock(mutex_);
  Key key{x, m};
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  UEAElement::Terms acc;
  const std::size_t y = *m.first_factor();
  Monomial rest = m;
  rest.set_exponent(y, static_cast<std::uint8_t>(rest.exponent(y) - 1));
  if (x == y) {
    // Odd square: x x = 1/2 [x, x].
    for (const auto& [z, c] : half_squares_[x]) left_multiply_into(z, rest, c, acc);
  } else {
    // x y rest = (-1)^{p(x)p(y)} y (x rest) + [x, y] rest.
    const int sign = sign_of_swap(g_.basis(x).parity, g_.basis(y).parity);
    UEAElement::Terms inner;
    left_multiply_into(x, rest, 1, inner);
    for (const auto& [r, c] : inner) left_multiply_into(y, r, sign * c, acc);
    for (const auto& [z, c] : g_.bracket_basis(x, y)) left_multiply_into(z, rest, c, acc);
  }
  TermList list(acc.begin(), acc.end());
  return cache_.emplace(std::move(key), std::move(list)).first->second;
}

UEAElement EnvelopingAlgebra::left_multiply(std::size_t i, const UEAElement& a) {
  UEAElement::Terms out;
  for (const auto& [m, c] : a.terms()) left_multiply_into(i, m, c, out);
  return UEAElement(std::move(out));
}

UEAElement EnvelopingAlgebra::multiply(const UEAElement& a, const UEAElement& b) {
  UEAElement::Terms result;
  for (const auto& [ma, ca] : a.terms()) {
    UEAElement::Terms cur = b.terms();
    const auto factors = ma.factors();
    for (auto f = factors.rbegin(); f != factors.rend(); ++f) {
      UEAElement::Terms next;
      for (const auto& [m, c] : cur) left_multiply_into(*f, m, c, next);
      cur = std::move(next);
    }
    for (const auto& [m, c] : cur) accumulate(result, m, ca * c);
  }
  return UEAElement(std::move(result));
}

UEAElement EnvelopingAlgebra::right_multiply(const UEAElement& a, std::size_t i) {
  return multiply(a, generator(i));
}

UEAElement EnvelopingAlgebra::normal_order(const std::vector<std::size_t>& word,
                                           const Rational& scalar) {
  UEAElement::Terms cur;
  accumulate(cur, Monomial(g_.dim()), scalar);
  for (auto f = word.rbegin(); f != word.rend(); ++f) {
    if (*f >= g_.dim()) throw std::out_of_range("normal_order: generator index");
    UEAElement::Terms next;
    for (const auto& [m, c] : cur) left_multiply_into(*f, m, c, next);
    cur = std::move(next);
  }
  return UEAElement(std::move(cur));
}

UEAElement EnvelopingAlgebra::normal_order(const std::vector<std::string>& labels,
                                           const Rational& scalar) {
  std::vector<std::size_t> word;
  for (const auto& l : labels) word.push_back(g_.index_of(l));
  return normal_order(word, scalar);
}

UEAElement EnvelopingAlgebra::supercommutator(const UEAElement& a, const UEAElement& b) {
  const auto pa = a.parity(g_);
  const auto pb = b.parity(g_);
  if (!pa || !pb) throw std::invalid_argument("supercommutator: mixed-parity argument");
  UEAElement out = multiply(a, b);
  out -= multiply(b, a) * Rational(sign_of_swap(*pa, *pb));
  return out;
}

namespace {

std::pair<UEAElement, UEAElement> split_parity(const OspAlgebra& g, const UEAElement& a) {
  UEAElement even, odd;
  for (const auto& [m, c] : a.terms()) {
    (parity_of(g, m) == Parity::odd ? odd : even).add(m, c);
  }
  return {even, odd};
}

}  // namespace

UEAElement EnvelopingAlgebra::adjoint(const LieElement& x, const UEAElement& a) {
  if (!x.parity) throw std::invalid_argument("adjoint: mixed-parity Lie element");
  const UEAElement ex = embed(x);
  const auto [even, odd] = split_parity(g_, a);
  UEAElement out = multiply(ex, even) - multiply(even, ex);
  const Rational s = sign_of_swap(*x.parity, Parity::odd);
  out += multiply(ex, odd) - multiply(odd, ex) * s;
  return out;
}

UEAElement EnvelopingAlgebra::adjoint(std::size_t i, const UEAElement& a) {
  return adjoint(g_.element(i), a);
}

UEAElement EnvelopingAlgebra::twisted_adjoint(const LieElement& x, const UEAElement& a) {
  const auto pa = a.parity(g_);
  if (!x.parity || !pa) throw std::invalid_argument("twisted_adjoint: mixed-parity argument");
  const UEAElement ex = embed(x);
  const Rational s = sign_of_swap(*x.parity, *pa + Parity::odd);
  return multiply(ex, a) - multiply(a, ex) * s;
}

UEAElement EnvelopingAlgebra::twisted_adjoint(std::size_t i, const UEAElement& a) {
  return twisted_adjoint(g_.element(i), a);
}

std::vector<Monomial> EnvelopingAlgebra::enumerate_pbw(
    int max_degree, const std::optional<std::vector<int>>& weight) const {
  if (max_degree < 0) throw std::invalid_argument("enumerate_pbw: negative degree");
  std::vector<Monomial> out;
  Monomial cur(g_.dim());
  std::vector<int> w(static_cast<std::size_t>(g_.n()));
  const std::function<void(std::size_t, int)> rec = [&](std::size_t i, int budget) {
    if (i == g_.dim()) {
      if (!weight || w == *weight) out.push_back(cur);
      return;
    }
    const int cap = g_.basis(i).parity == Parity::odd ? std::min(1, budget) : budget;
    const auto* eps = g_.basis(i).root ? &g_.basis(i).root->eps : nullptr;
    for (int e = 0; e <= cap; ++e) {
      cur.set_exponent(i, static_cast<std::uint8_t>(e));
      if (eps) {
        for (std::size_t k = 0; k < w.size(); ++k) w[k] += e * (*eps)[k];
      }
      rec(i + 1, budget - e);
      if (eps) {
        for (std::size_t k = 0; k < w.size(); ++k) w[k] -= e * (*eps)[k];
      }
    }
    cur.set_exponent(i, 0);
  };
  rec(0, max_degree);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ghostw
