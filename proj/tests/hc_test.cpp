#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <random>

#include "ghostw/hc.hpp"

using namespace ghostw;

namespace {

HCPolynomial h(int n, int i) { return HCPolynomial::variable(n, i); }
HCPolynomial c(int n, const Rational& x) { return HCPolynomial::constant(n, x); }

HCPolynomial random_poly(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(0, 3), k(-4, 4);
  HCPolynomial f(n);
  for (int t = 0; t < 4; ++t) {
    HCPolynomial::Exponents ex;
    for (int i = 0; i < n; ++i) ex.push_back(e(rng));
    f.add(ex, make_rational(k(rng), 1 + e(rng)));
  }
  return f;
}

Weight random_weight(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> k(-6, 6);
  Weight w{RationalVector(static_cast<std::size_t>(n))};
  for (auto& x : w.eps) x = make_rational(k(rng), 2);
  return w;
}

}  // namespace

TEST(Hc, EtaExamples) {
  const OspAlgebra g(1);
  EnvelopingAlgebra U(g);
  UEAElement a = U.normal_order(std::vector<std::string>{"h1", "h1"});
  a += U.normal_order(std::vector<std::string>{"u(-e1)", "u(e1)"});
  EXPECT_EQ(eta(g, a), h(1, 1) * h(1, 1));
  EXPECT_EQ(eta(g, U.one()), c(1, 1));
  // Out-of-order word: u(e1) u(-e1) = -u(-e1) u(e1) + [u(e1), u(-e1)].
  const UEAElement b = U.normal_order(std::vector<std::string>{"u(e1)", "u(-e1)"});
  const LieElement br = g.bracket(g.element(g.index_of("u(e1)")), g.element(g.index_of("u(-e1)")));
  EXPECT_EQ(eta(g, b), eta(g, U.embed(br)));
}

TEST(Hc, Sigma) {
  const OspAlgebra g1(1);
  EXPECT_EQ(sigma(g1, c(1, 1)), c(1, 1));
  EXPECT_EQ(sigma(g1, h(1, 1)), h(1, 1) - c(1, Rational(1, 2)));
  const OspAlgebra g2(2);
  EXPECT_EQ(sigma(g2, h(2, 1)), h(2, 1) - c(2, Rational(3, 2)));
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    const HCPolynomial f = random_poly(2, rng);
    EXPECT_EQ(sigma(g2, sigma_inverse(g2, f)), f);
    EXPECT_EQ(sigma_inverse(g2, sigma(g2, f)), f);
    // sigma(f)(lambda) = f(lambda - rho)
    const Weight lam = random_weight(2, rng);
    EXPECT_EQ(sigma(g2, f).evaluate(lam), f.evaluate(lam - g2.rho()));
  }
}

TEST(Hc, SigmaIsMultiplicative) {
  const OspAlgebra g(2);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 10; ++t) {
    const HCPolynomial a = random_poly(2, rng), b = random_poly(2, rng);
    EXPECT_EQ(sigma(g, a * b), sigma(g, a) * sigma(g, b));
  }
}

TEST(Hc, InvarianceExamples) {
  for (int n : {1, 2, 3}) {
    HCPolynomial sq(n), prod = c(n, 1);
    for (int i = 1; i <= n; ++i) {
      sq += h(n, i) * h(n, i);
      prod = prod * h(n, i);
    }
    EXPECT_TRUE(is_invariant(sq));
    EXPECT_FALSE(is_invariant(prod));
    EXPECT_TRUE(is_invariant(prod * prod));
    // Symmetric group part fixes the product; the sign flip negates it.
    const auto gens = weyl_generators(n);
    for (std::size_t k = 0; k + 1 < gens.size(); ++k) EXPECT_EQ(weyl_act(gens[k], prod), prod);
    EXPECT_EQ(weyl_act(gens.back(), prod), prod * Rational(-1));
  }
  EXPECT_FALSE(is_invariant(h(1, 1)));
}

TEST(Hc, WeylGroupLaw) {
  const auto group = weyl_group(2);
  EXPECT_EQ(group.size(), 8u);
  EXPECT_EQ(weyl_group(3).size(), 48u);
  std::mt19937_64 rng(4);
  for (const auto& w : group) {
    EXPECT_EQ(w * w.inverse(), WeylElement::identity(2));
    for (const auto& v : group) {
      EXPECT_NE(std::find(group.begin(), group.end(), w * v), group.end());
      const Weight lam = random_weight(2, rng);
      EXPECT_EQ(weyl_act(w * v, lam), weyl_act(w, weyl_act(v, lam)));
      const HCPolynomial f = random_poly(2, rng);
      EXPECT_EQ(weyl_act(w * v, f), weyl_act(w, weyl_act(v, f)));
      EXPECT_EQ(weyl_act(w, f).evaluate(weyl_act(w, lam)), f.evaluate(lam));
    }
  }
}

TEST(Hc, InvariantBasis) {
  EXPECT_EQ(invariant_basis(1, 4).size(), 3u);  // 1, h^2, h^4
  EXPECT_EQ(invariant_basis(2, 4).size(), 4u);  // 1, e1, e1^2, e2
  EXPECT_EQ(invariant_basis(2, 5).size(), 4u);
  for (const auto& f : invariant_basis(3, 6)) EXPECT_TRUE(is_invariant(f));
  std::vector<RationalVector> rows;
  for (const auto& f : invariant_basis(2, 6)) rows.push_back(coefficient_vector(f, 6));
  EXPECT_EQ(rank(rows), rows.size());
}

TEST(Hc, InD) {
  for (int n : {1, 2}) {
    const OspAlgebra g(n);
    EXPECT_TRUE(in_D(g, Weight{RationalVector(static_cast<std::size_t>(n))} - g.rho()));
  }
  const OspAlgebra g1(1);
  EXPECT_FALSE(in_D(g1, Weight{RationalVector{0}}));
  EXPECT_EQ(pairing(g1.rho(), Weight{RationalVector{1}}), Rational(1, 4));
  EXPECT_TRUE(in_D(g1, Weight{RationalVector{Rational(-1, 2)}}));

  const OspAlgebra g(2);
  std::mt19937_64 rng(8);
  const auto group = weyl_group(2);
  int hits = 0;
  for (int t = 0; t < 200; ++t) {
    const Weight lam = random_weight(2, rng);
    EXPECT_EQ(in_D(g, lam), in_D_positive(g, lam));
    hits += in_D(g, lam);
    for (const auto& w : group) EXPECT_EQ(in_D(g, dot_action(g, w, lam)), in_D(g, lam));
  }
  EXPECT_GT(hits, 0);
}

TEST(Hc, Json) {
  HCPolynomial f = h(2, 1) * h(2, 2) * Rational(3, 4) - c(2, 2);
  const auto j = to_json(f);
  EXPECT_EQ(j["1,1"], "3/4");
  EXPECT_EQ(j["0,0"], "-2");
  EXPECT_EQ(hc_from_json(2, j), f);
  EXPECT_EQ(to_string(f), "3/4 h1 h2 - 2");
}
