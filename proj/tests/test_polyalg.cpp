#include "gcp/bivar_poly.hpp"
#include "gcp/determinant.hpp"
#include "gcp/gcp.hpp"
#include "gcp/io.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

namespace gcp {
namespace {

using testing::poly;
using P = BivarPoly<BigInt>;

const P lam = P::x();
const P mu = P::y();
P c(long v) { return P::constant(v); }

TEST(BivarPoly, RingArithmetic) {
  EXPECT_EQ((lam + mu) * (lam - mu), poly({{2, 0, 1}, {0, 2, -1}}));
  EXPECT_EQ(pow(lam + mu, 2) - c(1), poly({{2, 0, 1}, {1, 1, 2}, {0, 2, 1}, {0, 0, -1}}));
  EXPECT_EQ(pow(lam + mu, 0), c(1));
  EXPECT_TRUE((lam - lam).is_zero());
  EXPECT_EQ((lam - lam).total_degree(), -1);
}

TEST(BivarPoly, VariableMismatchThrows) {
  const auto u = P::x(Variables::u_t);
  EXPECT_THROW(lam + u, std::invalid_argument);
  EXPECT_THROW(lam * u, std::invalid_argument);
}

TEST(BivarPoly, CanonicalText) {
  EXPECT_EQ(to_string(pow(lam + mu, 2) - c(1)), "l^2 + 2*l*m + m^2 - 1");
  EXPECT_EQ(to_string(pow(lam, 3)), "l^3");
  EXPECT_EQ(to_string(-lam + c(2)), "-l + 2");
  EXPECT_EQ(to_string(P()), "0");
  EXPECT_EQ(to_string(pow(lam + mu, 2) - c(1), true), "λ^2 + 2*λ*μ + μ^2 - 1");
  EXPECT_EQ(to_string(P::x(Variables::u_t) * P::y(Variables::u_t) * BigInt(-3)), "-3*u*t");
  const auto records = term_records(pow(lam + mu, 2) - c(1));
  ASSERT_EQ(records.size(), 4u);
  EXPECT_EQ(records[1].i, 1);
  EXPECT_EQ(records[1].j, 1);
  EXPECT_EQ(records[1].coefficient, "2");
  EXPECT_EQ(records[3].coefficient, "-1");
}

TEST(BivarPoly, CyclotomicCoefficientsRender) {
  const auto w = Cyclotomic::root_of_unity(3, 1);
  auto p = to_cyclotomic(lam) + BivarPoly<Cyclotomic>::constant(w);
  EXPECT_EQ(to_string(p), "l + (z3)");
  EXPECT_EQ(to_string(conj(p)), "l + (-z3 - 1)");
}

TEST(BivarPoly, PartialDerivativeAndEvaluation) {
  const P p = pow(lam, 2) + lam * pow(mu, 2) * BigInt(3);
  EXPECT_EQ(partial_mu(p), lam * mu * BigInt(6));
  EXPECT_EQ(partial_x(p), lam * BigInt(2) + pow(mu, 2) * BigInt(3));
  EXPECT_EQ(evaluate(pow(lam + mu, 2) - c(1), Rational(0), Rational(1)), Rational(0));
  EXPECT_EQ(evaluate(p, Rational(1, 2), Rational(2)), Rational(1, 4) + Rational(6));
}

TEST(BivarPoly, SubstituteLambda) {
  const P f = pow(lam + mu, 2) - c(1);
  // F(λ + μ - 1, μ) = (λ + 2μ - 1)^2 - 1
  EXPECT_EQ(substitute_lambda(f, BigInt(1), BigInt(-1)), pow(lam + mu * BigInt(2) - c(1), 2) - c(1));
}

TEST(BivarPoly, DivideExact) {
  const P a = lam + mu;
  const P b = lam - mu + c(3);
  EXPECT_EQ(divide_exact(a * b, b), a);
  EXPECT_FALSE(divide_exact(a * b + c(1), b).has_value());
  EXPECT_EQ(divide_exact(P(), b), P());
}

TEST(Interpolation, RecoversUnivariatePolynomial) {
  // 3x^3 - x + 1/2 sampled at x = -2..1
  std::vector<Rational> values;
  for (long x = -2; x <= 1; ++x) values.push_back(Rational(3 * x * x * x - x) + Rational(1, 2));
  const auto coeffs = interpolate_uniform(values, -2);
  ASSERT_EQ(coeffs.size(), 4u);
  EXPECT_EQ(coeffs[0], Rational(1, 2));
  EXPECT_EQ(coeffs[1], Rational(-1));
  EXPECT_EQ(coeffs[2], Rational(0));
  EXPECT_EQ(coeffs[3], Rational(3));
}

TEST(Determinant, BareissMatchesFieldElimination) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int n = 1; n <= 7; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      Mat<BigInt> m(n, n);
      Mat<Rational> q(n, n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const int v = entry(rng);
          m(i, j) = v;
          q(i, j) = v;
        }
      }
      EXPECT_EQ(Rational(bareiss_determinant(m)), field_determinant(q));
    }
  }
  Mat<BigInt> singular(2, 2);
  singular << 1, 2, 2, 4;
  EXPECT_EQ(bareiss_determinant(singular), 0);
  Mat<BigInt> needs_pivot(2, 2);
  needs_pivot << 0, 1, 1, 0;
  EXPECT_EQ(bareiss_determinant(needs_pivot), -1);
  EXPECT_THROW(bareiss_determinant(Mat<BigInt>(2, 3)), std::invalid_argument);
}

Pencil<BigInt> integer_pencil(const Eigen::MatrixXi& constant, const Eigen::MatrixXi& lambda,
                              const Eigen::MatrixXi& mu_part) {
  return {constant.cast<BigInt>(), lambda.cast<BigInt>(), mu_part.cast<BigInt>()};
}

TEST(DetPencil, OneByOne) {
  Eigen::MatrixXi c(1, 1), l(1, 1), m(1, 1);
  c << -3;
  l << 1;
  m << 1;
  EXPECT_EQ(det_pencil(integer_pencil(c, l, m)), lam + mu - P::constant(3));
}

TEST(DetPencil, K2Pencil) {
  Eigen::MatrixXi c(2, 2);
  c << 0, -1, -1, 0;
  const Eigen::MatrixXi id = Eigen::MatrixXi::Identity(2, 2);
  EXPECT_EQ(det_pencil(integer_pencil(c, id, id)), pow(lam + mu, 2) - P::constant(1));
}

TEST(DetPencil, K3Pencil) {
  const auto f = det_pencil(gcp_pencil(complete_graph(3)));
  const P twice_mu = mu * BigInt(2);
  EXPECT_EQ(f, (lam + twice_mu - c(2)) * pow(lam + twice_mu + c(1), 2));
}

TEST(DetPencil, IndependentOfGrid) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 6; ++trial) {
    const Graph g = testing::random_graph(5, 0.5, rng);
    const auto pencil = gcp_pencil(g);
    const auto base = det_pencil(pencil);
    EXPECT_EQ(det_pencil(pencil, {-3, 7}), base);
    EXPECT_EQ(det_pencil(pencil, {11, -2}), base);
  }
}

TEST(DetPencil, CharacteristicPolynomialMatchesExpansion) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      Eigen::MatrixXi m(n, n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m(i, j) = entry(rng);
      }
      const Eigen::MatrixXi id = Eigen::MatrixXi::Identity(n, n);
      const auto pencil = integer_pencil(-m, id, Eigen::MatrixXi::Zero(n, n));
      EXPECT_EQ(det_pencil(pencil), testing::charpoly_by_expansion(m));
    }
  }
}

TEST(DetPencil, RejectsNonSquare) {
  Pencil<BigInt> bad{Mat<BigInt>(2, 3), Mat<BigInt>(2, 3), Mat<BigInt>(2, 3)};
  EXPECT_THROW(det_pencil(bad), std::invalid_argument);
}

TEST(DetPencil, NonIntegralInterpolationIsRejected) {
  BivarPoly<Rational> half(Variables::lambda_mu);
  half.add_term(1, 0, Rational(1, 2));
  EXPECT_THROW(to_integer_poly(half), std::domain_error);
}

TEST(GcpDirect, SmallGraphs) {
  EXPECT_EQ(gcp_direct(complete_graph(2)), pow(lam + mu, 2) - c(1));
  EXPECT_EQ(gcp_direct(star_graph(2)), (lam + mu) * ((lam + mu) * (lam + mu * BigInt(2)) - c(2)));
  EXPECT_EQ(gcp_direct(empty_graph(3)), pow(lam, 3));
  EXPECT_EQ(to_string(gcp_direct(complete_graph(2))), "l^2 + 2*l*m + m^2 - 1");
}

TEST(GcpDirect, C4DerivativeAtZeroOne) {
  EXPECT_EQ(evaluate(partial_mu(gcp_direct(cycle_graph(4))), Rational(0), Rational(1)), Rational(32));
}

// Property: random graphs against the Laplace-expansion oracle, plus the
// structural identities every F_G satisfies.
TEST(GcpDirect, RandomGraphProperties) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + trial % 7;
    const Graph g = testing::random_graph(n, 0.45, rng);
    const P f = gcp_direct(g);
    SCOPED_TRACE(format_graph(g));

    EXPECT_EQ(f, testing::gcp_by_expansion(g));
    EXPECT_EQ(f.degree_x(), n);
    EXPECT_EQ(f.coefficient(n, 0), 1);
    EXPECT_EQ(evaluate(f, Rational(0), Rational(1)), Rational(0));

    // μ = 0: adjacency characteristic polynomial
    const P at_mu_zero = compose(f, lam, P());
    EXPECT_EQ(at_mu_zero, testing::charpoly_by_expansion(adjacency_matrix(g)));

    // (-1)^n F(-λ, 1): Laplacian characteristic polynomial
    P laplacian = compose(f, -lam, c(1));
    if (n % 2) laplacian = -laplacian;
    EXPECT_EQ(laplacian, testing::charpoly_by_expansion(degree_matrix(g) - adjacency_matrix(g)));
  }
}

TEST(GcpDirect, MultiplicativeOverDisjointUnion) {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 8; ++trial) {
    const Graph a = testing::random_graph(1 + trial % 4, 0.6, rng);
    const Graph b = testing::random_graph(2 + trial % 3, 0.6, rng);
    EXPECT_EQ(gcp_direct(disjoint_union(a, b)), gcp_direct(a) * gcp_direct(b));
  }
}

}  // namespace
}  // namespace gcp
