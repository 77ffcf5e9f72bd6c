#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "ghostw/exactmath.hpp"

using namespace ghostw;

namespace {

RationalVector vec(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

RationalMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::bernoulli_distribution dense(0.35);
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (dense(rng)) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        m.set(r, c, q);
      }
    }
  }
  return m;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("0/5"), Rational(0));
  EXPECT_EQ(to_string(parse_rational("0/5")), "0");
  EXPECT_EQ(to_string(Rational(-1, 4)), "-1/4");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/-2"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(RationalMatrix, NoExplicitZeros) {
  RationalMatrix m(2, 2);
  m.set(0, 1, 3);
  m.add(0, 1, -3);
  m.set(1, 0, 0);
  EXPECT_EQ(m.nonzeros(), 0u);
  EXPECT_THROW(m.set(2, 0, 1), std::out_of_range);
}

TEST(KernelBasis, TrivialKernel) {
  RationalMatrix m(1, 1);
  m.set(0, 0, 1);
  EXPECT_TRUE(kernel_basis(m).empty());
}

TEST(KernelBasis, SymmetricRow) {
  RationalMatrix m(1, 2);
  m.set(0, 0, 1);
  m.set(0, 1, -1);
  const auto k = kernel_basis(m);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], vec({1, 1}));
}

TEST(KernelBasis, TwoByThree) {
  // x - z = 0, y - z = 0  =>  (1, 1, 1).
  const auto m = RationalMatrix::from_rows({vec({1, 0, -1}), vec({0, 1, -1})});
  const auto k = kernel_basis(m);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], vec({1, 1, 1}));
}

TEST(KernelBasis, ClearsDenominators) {
  // x/2 - y/3 = 0 => (2, 3).
  RationalMatrix m(1, 2);
  m.set(0, 0, Rational(1, 2));
  m.set(0, 1, Rational(-1, 3));
  const auto k = kernel_basis(m);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], vec({2, 3}));
}

TEST(KernelBasis, EmptyMatrixHasFullKernel) {
  RationalMatrix m(0, 3);
  const auto k = kernel_basis(m);
  ASSERT_EQ(k.size(), 3u);
  EXPECT_EQ(k[1], vec({0, 1, 0}));
}

TEST(KernelBasis, RandomProperties) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 7;
    const std::size_t cols = 1 + rng() % 9;
    const RationalMatrix m = random_matrix(rng, rows, cols);
    const auto k = kernel_basis(m);
    for (const auto& v : k) EXPECT_TRUE(is_zero(m.apply(v)));
    EXPECT_EQ(rank(m) + k.size(), cols);
    EXPECT_EQ(rank(k), k.size());

    // Row permutation (and duplication) leaves the output unchanged.
    std::vector<std::size_t> order(rows);
    for (std::size_t i = 0; i < rows; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    RationalMatrix permuted(0, cols);
    for (std::size_t i : order) permuted.append_row(m.row(i));
    permuted.append_row(m.row(order.front()));
    EXPECT_EQ(kernel_basis(permuted), k);
  }
}

TEST(InSpan, ZeroVector) {
  const std::vector<RationalVector> basis{vec({1, 2}), vec({0, 1})};
  const auto r = in_span(vec({0, 0}), basis);
  EXPECT_TRUE(r.member);
  EXPECT_EQ(r.coefficients, vec({0, 0}));
}

TEST(InSpan, Scaling) {
  const std::vector<RationalVector> basis{vec({1, 1})};
  const auto r = in_span(vec({2, 2}), basis);
  EXPECT_TRUE(r.member);
  EXPECT_EQ(r.coefficients, vec({2}));
}

TEST(InSpan, NotInSpan) {
  const std::vector<RationalVector> basis{vec({1, 1})};
  EXPECT_FALSE(in_span(vec({1, 0}), basis).member);
}

TEST(InSpan, EmptyBasis) {
  EXPECT_TRUE(in_span(vec({0, 0}), {}).member);
  EXPECT_FALSE(in_span(vec({0, 1}), {}).member);
}

TEST(InSpan, DimensionMismatch) {
  const std::vector<RationalVector> basis{vec({1, 1, 1})};
  EXPECT_THROW(in_span(vec({1, 0}), basis), std::invalid_argument);
}

TEST(InSpan, CertificateReconstructs) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<RationalVector> basis(3, RationalVector(5));
    for (auto& b : basis) {
      for (auto& x : b) x = d(rng);
    }
    RationalVector target(5);
    const RationalVector c = vec({d(rng), d(rng), d(rng)});
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t i = 0; i < 5; ++i) target[i] += c[j] * basis[j][i];
    }
    const auto r = in_span(target, basis);
    ASSERT_TRUE(r.member);
    RationalVector rebuilt(5);
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t i = 0; i < 5; ++i) rebuilt[i] += r.coefficients[j] * basis[j][i];
    }
    EXPECT_EQ(rebuilt, target);
  }
}

TEST(RowSpace, SameSpanIgnoresGenerators) {
  const std::vector<RationalVector> a{vec({1, 1, 0}), vec({0, 1, 1})};
  const std::vector<RationalVector> b{vec({1, 2, 1}), vec({1, 0, -1}), vec({2, 2, 0})};
  EXPECT_TRUE(same_span(a, b, 3));
  const std::vector<RationalVector> c{vec({1, 0, 0})};
  EXPECT_FALSE(same_span(a, c, 3));
}

TEST(Inverse, TwoByTwo) {
  const auto inv = inverse({vec({2, 1}), vec({1, 1})});
  ASSERT_EQ(inv.size(), 2u);
  EXPECT_EQ(inv[0], vec({1, -1}));
  EXPECT_EQ(inv[1], vec({-1, 2}));
  EXPECT_TRUE(inverse({vec({1, 2}), vec({2, 4})}).empty());
}
