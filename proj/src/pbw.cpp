#include "ghostw/pbw.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace ghostw {

namespace {

Monomial random_monomial(const std::vector<Monomial>& pool, std::mt19937_64& rng, int max_degree) {
  std::vector<const Monomial*> fit;
  for (const auto& m : pool) {
    if (m.degree() <= max_degree) fit.push_back(&m);
  }
  std::uniform_int_distribution<std::size_t> pick(0, fit.size() - 1);
  return *fit[pick(rng)];
}

Parity monomial_parity(const EnvelopingAlgebra& U, const Monomial& m) { return parity_of(U.lie(), m); }

// The associated graded algebra is S(g_even) (x) Lambda(g_odd).
bool shares_odd_factor(const OspAlgebra& g, const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (g.basis(i).parity == Parity::odd && a.exponent(i) > 0 && b.exponent(i) > 0) return true;
  }
  return false;
}

}  // namespace

CheckResult check_defining_relations(EnvelopingAlgebra& U) {
  const OspAlgebra& g = U.lie();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = 0; j < g.dim(); ++j) {
      const UEAElement lhs = U.supercommutator(U.generator(i), U.generator(j));
      const UEAElement rhs = U.embed(g.bracket(g.element(i), g.element(j)));
      if (lhs != rhs) {
        return {"defining_relations", false, "[" + g.basis(i).label + ", " + g.basis(j).label + "]"};
      }
    }
  }
  return {"defining_relations", true, std::to_string(g.dim() * g.dim()) + " pairs"};
}

CheckResult check_associativity(EnvelopingAlgebra& U, int d, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto pool = U.enumerate_pbw(std::max(d, 1));
  for (int s = 0; s < samples; ++s) {
    const Monomial a = random_monomial(pool, rng, d);
    const Monomial b = random_monomial(pool, rng, d - a.degree());
    const Monomial c = random_monomial(pool, rng, d - a.degree() - b.degree());
    const UEAElement ea = U.monomial(a), eb = U.monomial(b), ec = U.monomial(c);
    if (U.multiply(U.multiply(ea, eb), ec) != U.multiply(ea, U.multiply(eb, ec))) {
      return {"pbw_associativity", false,
              to_string(U.lie(), a) + " | " + to_string(U.lie(), b) + " | " + to_string(U.lie(), c)};
    }
  }
  return {"pbw_associativity", true, std::to_string(samples) + " triples"};
}

CheckResult check_canonical_form(EnvelopingAlgebra& U, int d, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto pool = U.enumerate_pbw(d);
  for (int s = 0; s < samples; ++s) {
    const Monomial m = random_monomial(pool, rng, d);
    std::vector<std::size_t> word = m.factors();
    if (U.normal_order(word) != U.monomial(m)) {
      return {"pbw_canonical_form", false, "sorted " + to_string(U.lie(), m)};
    }
    std::shuffle(word.begin(), word.end(), rng);
    UEAElement product = U.one();
    for (std::size_t x : word) product = U.right_multiply(product, x);
    if (U.normal_order(word) != product) {
      return {"pbw_canonical_form", false, "shuffled " + to_string(U.lie(), m)};
    }
    for (const auto& [mono, coeff] : product.terms()) {
      for (std::size_t i = 0; i < mono.dim(); ++i) {
        if (U.lie().basis(i).parity == Parity::odd && mono.exponent(i) > 1) {
          return {"pbw_canonical_form", false, "odd square in " + to_string(U.lie(), mono)};
        }
      }
    }
  }
  return {"pbw_canonical_form", true, std::to_string(samples) + " words"};
}

CheckResult check_filtration(EnvelopingAlgebra& U, int d, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto pool = U.enumerate_pbw(d);
  for (int s = 0; s < samples; ++s) {
    const Monomial a = random_monomial(pool, rng, d);
    const Monomial b = random_monomial(pool, rng, d - a.degree());
    const UEAElement ea = U.monomial(a), eb = U.monomial(b);
    const UEAElement ab = U.multiply(ea, eb);
    const int top = a.degree() + b.degree();
    const bool drops = shares_odd_factor(U.lie(), a, b);
    if (drops ? ab.degree() >= top : ab.degree() != top) {
      return {"pbw_filtration", false, "deg of " + to_string(U.lie(), a) + " * " + to_string(U.lie(), b)};
    }
    const UEAElement br = U.supercommutator(ea, eb);
    if (!br.is_zero() && br.degree() >= top) {
      return {"pbw_filtration", false, "bracket of " + to_string(U.lie(), a) + ", " + to_string(U.lie(), b)};
    }
  }
  return {"pbw_filtration", true, std::to_string(samples) + " pairs"};
}

CheckResult check_adjoint_derivation(EnvelopingAlgebra& U, int d, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const OspAlgebra& g = U.lie();
  const auto pool = U.enumerate_pbw(d);
  std::uniform_int_distribution<std::size_t> gen(0, g.dim() - 1);
  for (int s = 0; s < samples; ++s) {
    const std::size_t x = gen(rng);
    const Monomial a = random_monomial(pool, rng, d);
    const Monomial b = random_monomial(pool, rng, d - a.degree());
    const UEAElement ea = U.monomial(a), eb = U.monomial(b);
    const int sign = sign_of_swap(g.basis(x).parity, monomial_parity(U, a));
    UEAElement rhs = U.multiply(U.adjoint(x, ea), eb);
    rhs += U.multiply(ea, U.adjoint(x, eb)) * Rational(sign);
    if (U.adjoint(x, U.multiply(ea, eb)) != rhs) {
      return {"adjoint_derivation", false,
              g.basis(x).label + " on " + to_string(g, a) + " * " + to_string(g, b)};
    }
  }
  return {"adjoint_derivation", true, std::to_string(samples) + " samples"};
}

std::vector<CheckResult> pbw_suite(EnvelopingAlgebra& U, int d, int samples, std::uint64_t seed) {
  return {check_defining_relations(U), check_associativity(U, d, samples, seed),
          check_canonical_form(U, d, samples, seed + 1), check_filtration(U, d, samples, seed + 2),
          check_adjoint_derivation(U, d, samples, seed + 3)};
}

}  // namespace ghostw
