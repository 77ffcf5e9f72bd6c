#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <random>

#include "ghostw/uea.hpp"

using namespace ghostw;

namespace {

Monomial mono(const OspAlgebra& g, std::initializer_list<std::pair<const char*, int>> f) {
  Monomial m(g.dim());
  for (const auto& [label, e] : f) m.set_exponent(g.index_of(label), static_cast<std::uint8_t>(e));
  return m;
}

UEAElement random_element(EnvelopingAlgebra& U, std::mt19937_64& rng, int max_len,
                          std::optional<Parity> parity = {}) {
  const auto& g = U.lie();
  std::uniform_int_distribution<std::size_t> gen(0, g.dim() - 1);
  std::uniform_int_distribution<int> len(0, max_len), coeff(-3, 3);
  UEAElement out;
  for (int t = 0; t < 2; ++t) {
    std::vector<std::size_t> word;
    const int l = len(rng);
    for (int k = 0; k < l; ++k) word.push_back(gen(rng));
    UEAElement term = U.normal_order(word, coeff(rng));
    if (parity && term.parity(g) != parity) continue;
    out += term;
  }
  return out;
}

}  // namespace

TEST(Uea, NormalOrderOrderedWord) {
  const OspAlgebra g(1);
  EnvelopingAlgebra U(g);
  EXPECT_EQ(U.normal_order(std::vector<std::string>{"h1"}), U.monomial(mono(g, {{"h1", 1}})));
}

TEST(Uea, NormalOrderOneSwap) {
  const OspAlgebra g(1);
  EnvelopingAlgebra U(g);
  const std::size_t up = g.index_of("u(e1)"), dn = g.index_of("u(-e1)");
  UEAElement expected = U.normal_order(std::vector<std::size_t>{dn, up}, -1);
  expected += U.embed(g.bracket(g.element(up), g.element(dn)));
  EXPECT_EQ(U.normal_order(std::vector<std::size_t>{up, dn}), expected);
}

TEST(Uea, OddSquare) {
  for (int n : {1, 2}) {
    const OspAlgebra g(n);
    EnvelopingAlgebra U(g);
    const std::size_t u = g.alpha_n_index();
    const UEAElement sq = U.normal_order(std::vector<std::size_t>{u, u});
    LieElement half = g.bracket(g.element(u), g.element(u));
    for (auto& c : half.coords) c /= 2;
    EXPECT_EQ(sq, U.embed(half));
    // [u, u] = -2 u(2e_n), so u^2 = -u(2e_n).
    EXPECT_EQ(sq.size(), 1u);
    EXPECT_EQ(sq.terms().begin()->second, -1);
  }
}

TEST(Uea, MultiplyExamples) {
  const OspAlgebra g(1);
  EnvelopingAlgebra U(g);
  const UEAElement h = U.generator(g.index_of("h1"));
  EXPECT_EQ(U.multiply(U.one(), h), h);
  EXPECT_EQ(U.multiply(h, U.one()), h);
  EXPECT_EQ(U.multiply(h, h), U.monomial(mono(g, {{"h1", 2}})));

  const UEAElement a = U.generator(g.index_of("u(-e1)"));
  const UEAElement b = U.generator(g.index_of("u(e1)"));
  const LieElement br = g.bracket(g.element(g.index_of("u(e1)")), g.element(g.index_of("u(-e1)")));
  // Both odd: ab + ba = [a, b].
  EXPECT_EQ(U.multiply(b, a) + U.multiply(a, b), U.embed(br));
}

TEST(Uea, SupercommutatorExamples) {
  const OspAlgebra g(1);
  EnvelopingAlgebra U(g);
  const UEAElement h = U.generator(g.index_of("h1"));
  EXPECT_TRUE(U.supercommutator(h, U.multiply(h, h)).is_zero());

  const UEAElement u = U.generator(g.index_of("u(e1)"));
  EXPECT_EQ(U.supercommutator(u, u), U.multiply(u, u) * Rational(2));

  UEAElement mixed = h + u;
  EXPECT_FALSE(mixed.parity(g).has_value());
  EXPECT_THROW(U.supercommutator(mixed, h), std::invalid_argument);
}

TEST(Uea, SupercommutatorRestrictsToBracket) {
  for (int n : {1, 2}) {
    const OspAlgebra g(n);
    EnvelopingAlgebra U(g);
    for (std::size_t a = 0; a < g.dim(); ++a) {
      for (std::size_t b = 0; b < g.dim(); ++b) {
        EXPECT_EQ(U.supercommutator(U.generator(a), U.generator(b)),
                  U.embed(g.bracket(g.element(a), g.element(b))))
            << g.basis(a).label << ", " << g.basis(b).label;
      }
    }
  }
}

TEST(Uea, AdjointExamples) {
  const OspAlgebra g(2);
  EnvelopingAlgebra U(g);
  const std::size_t h1 = g.cartan_index(1), h2 = g.cartan_index(2);
  EXPECT_TRUE(U.adjoint(h1, U.generator(h2)).is_zero());
  const std::size_t a = g.index_of("u(e1-e2)"), b = g.index_of("u(-e1)");
  const UEAElement ab = U.normal_order(std::vector<std::size_t>{a, b});
  for (int i = 1; i <= 2; ++i) {
    const Rational w = g.basis(a).root->eps[i - 1] + g.basis(b).root->eps[i - 1];
    EXPECT_EQ(U.adjoint(g.cartan_index(i), ab), ab * w);
  }
}

TEST(Uea, TwistedAdjointSigns) {
  const OspAlgebra g(1);
  EnvelopingAlgebra U(g);
  std::mt19937_64 rng(7);
  const std::size_t h = g.cartan_index(1), u = g.alpha_n_index();
  for (int t = 0; t < 10; ++t) {
    const UEAElement even = random_element(U, rng, 3, Parity::even);
    const UEAElement odd = random_element(U, rng, 3, Parity::odd);
    EXPECT_EQ(U.twisted_adjoint(h, even), U.adjoint(h, even));
    EXPECT_EQ(U.twisted_adjoint(h, odd), U.adjoint(h, odd));
    const UEAElement x = U.generator(u);
    EXPECT_EQ(U.twisted_adjoint(u, even), U.multiply(x, even) + U.multiply(even, x));
    EXPECT_EQ(U.twisted_adjoint(u, odd), U.multiply(x, odd) - U.multiply(odd, x));
  }
  EXPECT_THROW(U.twisted_adjoint(u, U.generator(h) + U.generator(u)), std::invalid_argument);
}

TEST(Uea, Associativity) {
  for (int n : {1, 2}) {
    const OspAlgebra g(n);
    EnvelopingAlgebra U(g);
    std::mt19937_64 rng(11 + n);
    for (int t = 0; t < 15; ++t) {
      const UEAElement a = random_element(U, rng, 3);
      const UEAElement b = random_element(U, rng, 3);
      const UEAElement c = random_element(U, rng, 3);
      EXPECT_EQ(U.multiply(U.multiply(a, b), c), U.multiply(a, U.multiply(b, c)));
    }
  }
}

TEST(Uea, NormalFormIsCanonical) {
  const OspAlgebra g(2);
  EnvelopingAlgebra U(g);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> gen(0, g.dim() - 1);
  for (int t = 0; t < 20; ++t) {
    std::vector<std::size_t> word;
    for (int k = 0; k < 4; ++k) word.push_back(gen(rng));
    const UEAElement once = U.normal_order(word);
    // Re-normalizing each monomial as a word changes nothing.
    UEAElement twice;
    for (const auto& [m, c] : once.terms()) twice += U.normal_order(m.factors(), c);
    EXPECT_EQ(once, twice);
    // Splitting the word at any point and multiplying gives the same result.
    for (std::size_t cut = 0; cut <= word.size(); ++cut) {
      const std::vector<std::size_t> left(word.begin(), word.begin() + cut);
      const std::vector<std::size_t> right(word.begin() + cut, word.end());
      EXPECT_EQ(U.multiply(U.normal_order(left), U.normal_order(right)), once);
    }
  }
}

TEST(Uea, FiltrationBounds) {
  const OspAlgebra g(2);
  EnvelopingAlgebra U(g);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const UEAElement a = random_element(U, rng, 3);
    const UEAElement b = random_element(U, rng, 3);
    if (a.is_zero() || b.is_zero()) continue;
    EXPECT_LE(U.multiply(a, b).degree(), a.degree() + b.degree());
    for (std::size_t i = 0; i < g.dim(); ++i) {
      EXPECT_LE(U.adjoint(i, a).degree(), a.degree());
    }
  }
}

TEST(Uea, AdjointIsSuperDerivation) {
  const OspAlgebra g(2);
  EnvelopingAlgebra U(g);
  std::mt19937_64 rng(17);
  for (int t = 0; t < 10; ++t) {
    const Parity pa = t % 2 ? Parity::odd : Parity::even;
    const UEAElement a = random_element(U, rng, 2, pa);
    const UEAElement b = random_element(U, rng, 2);
    for (std::size_t i : g.chevalley_generators()) {
      const Parity px = g.basis(i).parity;
      const UEAElement lhs = U.adjoint(i, U.multiply(a, b));
      UEAElement rhs = U.multiply(U.adjoint(i, a), b);
      rhs += U.multiply(a, U.adjoint(i, b)) * Rational(sign_of_swap(px, pa));
      EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST(Uea, MonomialsAreWeightVectors) {
  const OspAlgebra g(2);
  EnvelopingAlgebra U(g);
  for (const auto& m : U.enumerate_pbw(2)) {
    const auto w = weight_of(g, m);
    for (int i = 1; i <= 2; ++i) {
      EXPECT_EQ(U.adjoint(g.cartan_index(i), U.monomial(m)), U.monomial(m) * Rational(w[i - 1]));
    }
  }
}

TEST(Uea, EnumeratePbw) {
  const OspAlgebra g(1);
  EnvelopingAlgebra U(g);
  const auto d0 = U.enumerate_pbw(0);
  ASSERT_EQ(d0.size(), 1u);
  EXPECT_TRUE(d0[0].is_one());
  EXPECT_EQ(U.enumerate_pbw(1).size(), 6u);
  // Weight 0, degree <= 2: 1, h, h^2, u(-2e1)u(2e1), u(-e1)u(e1).
  EXPECT_EQ(U.enumerate_pbw(2, std::vector<int>{0}).size(), 5u);
  EXPECT_THROW(U.enumerate_pbw(-1), std::invalid_argument);

  // Brute-force count: 3 even and 2 odd generators, degree <= 3.
  std::size_t count = 0;
  for (int e = 0; e <= 3; ++e) {
    for (int o = 0; o <= 2 && e + o <= 3; ++o) {
      const int binom_even = (e + 2) * (e + 1) / 2;  // multisets of size e from 3
      const int binom_odd = o == 1 ? 2 : 1;          // subsets of size o from 2
      count += static_cast<std::size_t>(binom_even * binom_odd);
    }
  }
  EXPECT_EQ(U.enumerate_pbw(3).size(), count);
  const auto all = U.enumerate_pbw(3);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
}

TEST(Uea, WeightZeroRestriction) {
  // Anything commuting with h has weight 0: ad(h) is diagonal on PBW monomials.
  const OspAlgebra g(1);
  EnvelopingAlgebra U(g);
  for (const auto& m : U.enumerate_pbw(3)) {
    const bool killed = U.adjoint(g.cartan_index(1), U.monomial(m)).is_zero();
    EXPECT_EQ(killed, weight_of(g, m) == std::vector<int>{0});
  }
}

TEST(Uea, JsonRoundTrip) {
  const OspAlgebra g(2);
  EnvelopingAlgebra U(g);
  const UEAElement a = U.normal_order(std::vector<std::string>{"u(e2)", "u(-e1)", "h1"},
                                      Rational(3, 7));
  const auto j = to_json(g, a);
  EXPECT_EQ(uea_from_json(g, j), a);
  EXPECT_TRUE(j[0].contains("monomial"));
  EXPECT_TRUE(j[0]["coeff"].is_string());
  nlohmann::json bad = nlohmann::json::parse(R"j([{"monomial": [["u(e2)", 2]], "coeff": "1"}])j");
  EXPECT_THROW(uea_from_json(g, bad), std::invalid_argument);
}

TEST(Uea, ToString) {
  const OspAlgebra g(1);
  EnvelopingAlgebra U(g);
  EXPECT_EQ(to_string(g, U.one()), "1");
  EXPECT_EQ(to_string(g, UEAElement{}), "0");
  EXPECT_EQ(to_string(g, U.monomial(mono(g, {{"h1", 2}}), Rational(-1, 2))), "-1/2 h1^2");
}
