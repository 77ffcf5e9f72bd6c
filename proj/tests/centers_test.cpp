#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "ghostw/centers.hpp"

using namespace ghostw;

namespace {

struct Fixture {
  explicit Fixture(int n) : g(n), U(g), s(U) {}
  OspAlgebra g;
  EnvelopingAlgebra U;
  CenterSolver s;
};

}  // namespace

TEST(Centers, DegreeZero) {
  Fixture f(1);
  const auto& z = f.s.compute_center(0).elements;
  ASSERT_EQ(z.size(), 1u);
  EXPECT_EQ(z[0], f.U.one());
  EXPECT_TRUE(f.s.compute_anticenter(0).elements.empty());
  EXPECT_THROW(f.s.compute_center(-1), std::invalid_argument);
}

TEST(Centers, RankOneDegreeTwo) {
  Fixture f(1);
  const auto& z = f.s.compute_center(2).elements;
  EXPECT_EQ(z.size(), 2u);
  EXPECT_TRUE(f.s.in_center_span(f.s.casimir(), 2));
  EXPECT_TRUE(f.s.in_center_span(f.U.one(), 2));
  EXPECT_EQ(f.s.compute_anticenter(2).elements.size(), 1u);
  EXPECT_TRUE(f.s.in_anticenter_span(f.s.casimir_ghost(), 2));
  EXPECT_EQ(f.s.ghost_center_basis(2).size(), 3u);
}

TEST(Centers, CasimirRankOne) {
  Fixture f(1);
  const UEAElement& c = f.s.casimir();
  EXPECT_EQ(c.degree(), 2);
  for (const auto& [m, coeff] : c.terms()) EXPECT_EQ(weight_of(f.g, m), std::vector<int>{0});
  EXPECT_TRUE(f.U.adjoint(f.g.index_of("u(e1)"), c).is_zero());
  // chi_lambda(C) = x(x+1)/2 at lambda = x e1.
  for (int x = -4; x <= 4; ++x) {
    const Weight lam{RationalVector{Rational(x)}};
    EXPECT_EQ(central_character(f.g, lam, c), make_rational(x * (x + 1), 2));
    // The same value from the transported form: (lambda | lambda + 2 rho).
    EXPECT_EQ(central_character(f.g, lam, c), pairing(lam, lam + f.g.rho() * Rational(2)));
    // Q: (lambda | lambda + 2 rho_even), rho_even = e1.
    EXPECT_EQ(central_character(f.g, lam, f.s.casimir_even()), make_rational(x * (x + 2), 2));
  }
}

TEST(Centers, EtaOfCasimirMatchesForm) {
  for (int n : {1, 2, 3}) {
    Fixture f(n);
    EXPECT_TRUE(check_casimir_character(f.s).passed);
    EXPECT_TRUE(check_casimir_central(f.s).passed);
    EXPECT_TRUE(check_casimir_even_central(f.s).passed);
  }
}

TEST(Centers, EvenCasimirIsNotCentralInOsp) {
  Fixture f(1);
  EXPECT_FALSE(f.U.adjoint(f.g.alpha_n_index(), f.s.casimir_even()).is_zero());
}

TEST(Centers, GhostRankOne) {
  Fixture f(1);
  const UEAElement& t = f.s.casimir_ghost();
  EXPECT_EQ(hc_image(f.g, t), HCPolynomial::variable(1, 1));
  EXPECT_TRUE(f.U.twisted_adjoint(f.g.index_of("u(e1)"), t).is_zero());
  EXPECT_FALSE(f.U.adjoint(f.g.index_of("u(e1)"), t).is_zero());
  EXPECT_FALSE(is_invariant(hc_image(f.g, t)));

  const PinczonScalars p = f.s.pinczon_scalars();
  EXPECT_EQ(p.q_coeff, 2);
  EXPECT_EQ(p.c_coeff, -2);
  EXPECT_EQ(p.t_constant, Rational(1, 2));
  EXPECT_EQ(p.square_c_coeff, 2);
  EXPECT_EQ(p.square_constant, Rational(1, 4));

  // Direct reconstruction.
  UEAElement rhs = f.s.casimir_even() * Rational(2) - f.s.casimir() * Rational(2);
  rhs += f.U.one() * Rational(1, 2);
  EXPECT_EQ(t, rhs);
  UEAElement sq = f.s.casimir() * Rational(2) + f.U.one() * Rational(1, 4);
  EXPECT_EQ(f.U.multiply(t, t), sq);

  // chi_lambda(T^2) = prod (lambda + rho | 2 alpha)^2 over positive odd roots.
  for (int x = -3; x <= 3; ++x) {
    const Weight lam{RationalVector{Rational(x)}};
    const Rational v = pairing(lam + f.g.rho(), Weight{RationalVector{2}});
    EXPECT_EQ(central_character(f.g, lam, f.U.multiply(t, t)), v * v);
    EXPECT_EQ(v * v, (Rational(x) + Rational(1, 2)) * (Rational(x) + Rational(1, 2)));
  }
  const auto r = check_pinczon(f.s);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.witness,
            "T = 2 Q - 2 C + 1/2, T^2 = 2 C + 1/4; doubled form (C' = C/2, Q' = Q/2): "
            "T = 4 Q' - 4 C' + 1/2, T^2 = 4 C' + 1/4");
}

TEST(Centers, GhostRankTwo) {
  Fixture f(2);
  const UEAElement& t = f.s.casimir_ghost();
  EXPECT_EQ(t.degree(), 4);
  EXPECT_EQ(hc_image(f.g, t), HCPolynomial::variable(2, 1) * HCPolynomial::variable(2, 2));
  EXPECT_TRUE(check_ghost_square_image(f.s).passed);
  EXPECT_TRUE(check_ghost_square_central(f.s).passed);
  // chi_lambda(T^2) = prod_i (lambda + rho | 2 e_i)^2.
  const Weight lam{RationalVector{Rational(3), Rational(-1)}};
  Rational expected = 1;
  for (int i = 0; i < 2; ++i) {
    Weight two_ei{RationalVector(2)};
    two_ei.eps[static_cast<std::size_t>(i)] = 2;
    const Rational v = pairing(lam + f.g.rho(), two_ei);
    expected *= v * v;
  }
  EXPECT_EQ(central_character(f.g, lam, f.U.multiply(t, t)), expected);
}

TEST(Centers, SuiteRankOne) {
  Fixture f(1);
  for (const auto& r : centers_suite(f.s, 4, 1)) EXPECT_TRUE(r.passed) << r.name << ": " << r.witness;
  EXPECT_EQ(f.s.compute_center(4).elements.size(), 3u);
  EXPECT_EQ(f.s.compute_anticenter(4).elements.size(), 2u);
}

TEST(Centers, SuiteRankTwo) {
  Fixture f(2);
  for (const auto& r : centers_suite(f.s, 4, 2)) EXPECT_TRUE(r.passed) << r.name << ": " << r.witness;
  EXPECT_EQ(f.s.compute_center(4).elements.size(), 4u);
  EXPECT_EQ(f.s.compute_anticenter(4).elements.size(), 1u);
}

TEST(Centers, WeightZeroRestrictionIsHarmless) {
  // Solving over all monomials of degree <= 2 yields the same center.
  Fixture f(1);
  const auto all = f.U.enumerate_pbw(2);
  const MonomialIndex index(all);
  std::map<std::pair<std::size_t, Monomial>, RationalMatrix::Row> rows;
  for (std::size_t i = 0; i < f.g.dim(); ++i) {
    for (std::size_t j = 0; j < index.size(); ++j) {
      const UEAElement image = f.U.adjoint(i, f.U.monomial(index.at(j)));
      for (const auto& [m, c] : image.terms()) rows[{i, m}][j] = c;
    }
  }
  RationalMatrix matrix(0, index.size());
  for (auto& [k, row] : rows) matrix.append_row(row);
  std::vector<RationalVector> full, restricted;
  for (const auto& v : kernel_basis(matrix)) full.push_back(v);
  for (const auto& z : f.s.compute_center(2).elements) restricted.push_back(index.coordinates(z));
  EXPECT_TRUE(same_span(full, restricted, index.size()));
}

TEST(Centers, Json) {
  Fixture f(1);
  const auto j = to_json(f.g, f.s.compute_center(2));
  EXPECT_EQ(j["kind"], "center");
  EXPECT_EQ(j["n"], 1);
  EXPECT_EQ(j["degree"], 2);
  EXPECT_EQ(j["dimension"], 2);
  EXPECT_EQ(uea_from_json(f.g, j["basis"][1]), f.s.compute_center(2).elements[1]);
}
