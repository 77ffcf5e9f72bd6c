#include "ghostw/hc.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <nlohmann/json.hpp>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ghostw {

// ---------------------------------------------------------------------------
// HCPolynomial

HCPolynomial::HCPolynomial(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("HCPolynomial: n must be positive");
}

HCPolynomial HCPolynomial::constant(int n, const Rational& c) {
  HCPolynomial f(n);
  f.add(Exponents(static_cast<std::size_t>(n)), c);
  return f;
}

HCPolynomial HCPolynomial::variable(int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("HCPolynomial::variable");
  HCPolynomial f(n);
  Exponents e(static_cast<std::size_t>(n));
  e[static_cast<std::size_t>(i - 1)] = 1;
  f.add(e, 1);
  return f;
}

int HCPolynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

Rational HCPolynomial::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void HCPolynomial::add(const Exponents& e, const Rational& c) {
  if (e.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("HCPolynomial: arity");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

HCPolynomial& HCPolynomial::operator+=(const HCPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

HCPolynomial& HCPolynomial::operator-=(const HCPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

HCPolynomial& HCPolynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

HCPolynomial operator*(const HCPolynomial& a, const HCPolynomial& b) {
  HCPolynomial r(a.n_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      HCPolynomial::Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add(e, ca * cb);
    }
  }
  return r;
}

HCPolynomial HCPolynomial::pow(unsigned k) const {
  HCPolynomial r = constant(n_, 1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

Rational HCPolynomial::evaluate(const Weight& lambda) const {
  if (lambda.eps.size() != static_cast<std::size_t>(n_)) {
    throw std::invalid_argument("HCPolynomial::evaluate: weight arity");
  }
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) t *= lambda.eps[i];
    }
    sum += t;
  }
  return sum;
}

HCPolynomial HCPolynomial::substitute(const std::vector<HCPolynomial>& images) const {
  if (images.size() != static_cast<std::size_t>(n_)) {
    throw std::invalid_argument("HCPolynomial::substitute: arity");
  }
  HCPolynomial r(images.empty() ? n_ : images[0].n());
  for (const auto& [e, c] : terms_) {
    HCPolynomial t = constant(r.n(), c);
    for (std::size_t i = 0; i < e.size(); ++i) t = t * images[i].pow(static_cast<unsigned>(e[i]));
    r += t;
  }
  return r;
}

std::string to_string(const HCPolynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += ' ';
      mono += "h" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    const Rational mag = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    if (mono.empty()) {
      os << to_string(mag);
    } else {
      if (mag != 1) os << to_string(mag) << ' ';
      os << mono;
    }
  }
  return os.str();
}

nlohmann::json to_json(const HCPolynomial& f) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [e, c] : f.terms()) {
    std::string key;
    for (std::size_t i = 0; i < e.size(); ++i) key += (i ? "," : "") + std::to_string(e[i]);
    j[key] = to_string(c);
  }
  return j;
}

HCPolynomial hc_from_json(int n, const nlohmann::json& j) {
  HCPolynomial f(n);
  for (const auto& [key, value] : j.items()) {
    HCPolynomial::Exponents e;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) e.push_back(std::stoi(part));
    f.add(e, parse_rational(value.get<std::string>()));
  }
  return f;
}

// ---------------------------------------------------------------------------
// eta, sigma

HCPolynomial eta(const OspAlgebra& g, const UEAElement& a) {
  const int n = g.n();
  HCPolynomial f(n);
  for (const auto& [m, c] : a.terms()) {
    HCPolynomial::Exponents e(static_cast<std::size_t>(n));
    bool cartan_only = true;
    for (std::size_t i = 0; i < m.dim() && cartan_only; ++i) {
      if (m.exponent(i) == 0) continue;
      if (!g.is_cartan(i)) {
        cartan_only = false;
      } else {
        for (int k = 1; k <= n; ++k) {
          if (g.cartan_index(k) == i) e[static_cast<std::size_t>(k - 1)] = m.exponent(i);
        }
      }
    }
    if (cartan_only) f.add(e, c);
  }
  return f;
}

namespace {

HCPolynomial shift(const OspAlgebra& g, const HCPolynomial& f, int sign) {
  const Weight rho = g.rho();
  std::vector<HCPolynomial> images;
  for (int i = 1; i <= g.n(); ++i) {
    images.push_back(HCPolynomial::variable(g.n(), i) -
                     HCPolynomial::constant(g.n(), sign * rho.eps[static_cast<std::size_t>(i - 1)]));
  }
  return f.substitute(images);
}

}  // namespace

HCPolynomial sigma(const OspAlgebra& g, const HCPolynomial& f) { return shift(g, f, 1); }
HCPolynomial sigma_inverse(const OspAlgebra& g, const HCPolynomial& f) { return shift(g, f, -1); }
HCPolynomial hc_image(const OspAlgebra& g, const UEAElement& a) { return sigma(g, eta(g, a)); }

// ---------------------------------------------------------------------------
// Weyl group

WeylElement WeylElement::identity(int n) {
  WeylElement w;
  w.perm.resize(static_cast<std::size_t>(n));
  std::iota(w.perm.begin(), w.perm.end(), 0);
  w.signs.assign(static_cast<std::size_t>(n), 1);
  return w;
}

WeylElement operator*(const WeylElement& w, const WeylElement& v) {
  // w(v(e_i)) = v.signs[i] * w(e_{v.perm[i]})
  WeylElement r;
  const std::size_t n = w.perm.size();
  r.perm.resize(n);
  r.signs.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto j = static_cast<std::size_t>(v.perm[i]);
    r.perm[i] = w.perm[j];
    r.signs[i] = v.signs[i] * w.signs[j];
  }
  return r;
}

WeylElement WeylElement::inverse() const {
  WeylElement r;
  const std::size_t n = perm.size();
  r.perm.resize(n);
  r.signs.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto j = static_cast<std::size_t>(perm[i]);
    r.perm[j] = static_cast<int>(i);
    r.signs[j] = signs[i];
  }
  return r;
}

std::vector<WeylElement> weyl_generators(int n) {
  std::vector<WeylElement> gens;
  for (int i = 0; i + 1 < n; ++i) {
    WeylElement s = WeylElement::identity(n);
    std::swap(s.perm[static_cast<std::size_t>(i)], s.perm[static_cast<std::size_t>(i + 1)]);
    gens.push_back(s);
  }
  WeylElement flip = WeylElement::identity(n);
  flip.signs.back() = -1;
  gens.push_back(flip);
  return gens;
}

std::vector<WeylElement> weyl_group(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<WeylElement> out;
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      WeylElement w{perm, std::vector<int>(static_cast<std::size_t>(n), 1)};
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) w.signs[static_cast<std::size_t>(i)] = -1;
      }
      out.push_back(std::move(w));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Weight weyl_act(const WeylElement& w, const Weight& lambda) {
  Weight r{RationalVector(lambda.eps.size())};
  for (std::size_t i = 0; i < lambda.eps.size(); ++i) {
    r.eps[static_cast<std::size_t>(w.perm[i])] = w.signs[i] * lambda.eps[i];
  }
  return r;
}

HCPolynomial weyl_act(const WeylElement& w, const HCPolynomial& f) {
  // h_i(w^{-1} lambda) = signs[i] * lambda_{perm[i]}
  std::vector<HCPolynomial> images;
  for (std::size_t i = 0; i < w.perm.size(); ++i) {
    images.push_back(HCPolynomial::variable(f.n(), w.perm[i] + 1) * Rational(w.signs[i]));
  }
  return f.substitute(images);
}

bool is_invariant(const HCPolynomial& f) {
  for (const auto& s : weyl_generators(f.n())) {
    if (weyl_act(s, f) != f) return false;
  }
  return true;
}

Weight dot_action(const OspAlgebra& g, const WeylElement& w, const Weight& lambda) {
  return weyl_act(w, lambda + g.rho()) - g.rho();
}

Rational central_character(const OspAlgebra& g, const Weight& lambda, const UEAElement& z) {
  return eta(g, z).evaluate(lambda);
}

namespace {

bool odd_product_vanishes(const OspAlgebra& g, const Weight& lambda, bool positive_only) {
  const Weight shifted = lambda + g.rho();
  Rational product = 1;
  for (const auto& r : g.positive_roots()) {
    if (r.parity() != Parity::odd) continue;
    product *= pairing(shifted, to_weight(r));
    if (!positive_only) product *= pairing(shifted, to_weight(-r));
  }
  return product == 0;
}

}  // namespace

bool in_D(const OspAlgebra& g, const Weight& lambda) {
  return odd_product_vanishes(g, lambda, false);
}

bool in_D_positive(const OspAlgebra& g, const Weight& lambda) {
  return odd_product_vanishes(g, lambda, true);
}

std::vector<HCPolynomial> invariant_basis(int n, int max_degree) {
  // e_k(h_1^2, ..., h_n^2) has degree 2k.
  std::vector<HCPolynomial> elementary;
  for (int k = 1; k <= n; ++k) {
    HCPolynomial e(n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != static_cast<int>(k)) continue;
      HCPolynomial::Exponents ex(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) ex[static_cast<std::size_t>(i)] = 2;
      }
      e.add(ex, 1);
    }
    elementary.push_back(e);
  }
  std::vector<HCPolynomial> out;
  std::vector<int> powers(static_cast<std::size_t>(n));
  const std::function<void(int, int)> rec = [&](int k, int budget) {
    if (k == n) {
      HCPolynomial p = HCPolynomial::constant(n, 1);
      for (int i = 0; i < n; ++i) {
        p = p * elementary[static_cast<std::size_t>(i)].pow(static_cast<unsigned>(powers[static_cast<std::size_t>(i)]));
      }
      out.push_back(p);
      return;
    }
    for (int e = 0; 2 * (k + 1) * e <= budget; ++e) {
      powers[static_cast<std::size_t>(k)] = e;
      rec(k + 1, budget - 2 * (k + 1) * e);
    }
    powers[static_cast<std::size_t>(k)] = 0;
  };
  rec(0, max_degree);
  return out;
}

RationalVector coefficient_vector(const HCPolynomial& f, int max_degree) {
  // Monomials of degree <= d, exponent vectors in lexicographic order.
  std::vector<HCPolynomial::Exponents> monomials;
  HCPolynomial::Exponents cur(static_cast<std::size_t>(f.n()));
  const std::function<void(std::size_t, int)> rec = [&](std::size_t i, int budget) {
    if (i == cur.size()) {
      monomials.push_back(cur);
      return;
    }
    for (int e = 0; e <= budget; ++e) {
      cur[i] = e;
      rec(i + 1, budget - e);
    }
    cur[i] = 0;
  };
  rec(0, max_degree);
  std::map<HCPolynomial::Exponents, std::size_t> index;
  for (std::size_t k = 0; k < monomials.size(); ++k) index[monomials[k]] = k;
  RationalVector v(monomials.size());
  for (const auto& [e, c] : f.terms()) {
    const auto it = index.find(e);
    if (it == index.end()) throw std::invalid_argument("coefficient_vector: degree too large");
    v[it->second] = c;
  }
  return v;
}

}  // namespace ghostw
