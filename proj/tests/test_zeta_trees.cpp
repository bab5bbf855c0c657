#include "gcp/gcp.hpp"
#include "gcp/io.hpp"
#include "gcp/zeta.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

namespace gcp {
namespace {

using P = BivarPoly<BigInt>;

const P u = P::x(Variables::u_t);
const P t = P::y(Variables::u_t);
P one() { return P::constant(1, Variables::u_t); }

// p(0, t)
P at_u_zero(const P& p) { return compose(p, P(Variables::u_t), t); }

std::vector<Graph> zeta_corpus() {
  std::vector<Graph> out{complete_graph(2), path_graph(4), cycle_graph(3), cycle_graph(5), complete_graph(4),
                         star_graph(3),     complete_bipartite(2, 3),      empty_graph(2)};
  std::mt19937 rng(43);
  for (int n = 3; n <= 8; ++n) out.push_back(testing::random_graph(n, 0.5, rng));
  return out;
}

TEST(Bartholdi, K2Core) {
  const auto z = bartholdi_direct(complete_graph(2));
  EXPECT_EQ(z.prefactor_exponent, -1);
  EXPECT_EQ(z.prefactor_base, one() - pow(one() - u, 2) * pow(t, 2));
  EXPECT_EQ(z.core, pow(one() + u * (one() - u) * pow(t, 2), 2) - pow(t, 2));
}

TEST(Bartholdi, EdgelessGraph) {
  const auto z = bartholdi_direct(empty_graph(3));
  EXPECT_EQ(z.prefactor_exponent, -3);
  EXPECT_EQ(z.core, pow(z.prefactor_base, 3));
  EXPECT_EQ(reduced_reciprocal(z), one());
}

TEST(Bartholdi, CoreAtOriginIsOne) {
  for (const auto& g : zeta_corpus()) {
    EXPECT_EQ(evaluate(bartholdi_direct(g).core, Rational(0), Rational(0)), Rational(1));
  }
}

TEST(Bartholdi, DirectMatchesSubstitution) {
  for (const auto& g : zeta_corpus()) {
    SCOPED_TRACE(format_graph(g));
    const auto direct = bartholdi_direct(g);
    const auto via = bartholdi_from_gcp(g, gcp_direct(g));
    EXPECT_EQ(direct.core, via.core);
    EXPECT_EQ(direct.prefactor_exponent, via.prefactor_exponent);
  }
}

TEST(Bartholdi, SubstitutionRejectsWrongDegree) {
  // a λ-degree above the vertex count leaves a negative power of t
  EXPECT_THROW(bartholdi_from_gcp(complete_graph(2), pow(P::x(), 3)), std::logic_error);
}

TEST(Bartholdi, IharaSpecialization) {
  for (const auto& g : zeta_corpus()) {
    EXPECT_EQ(at_u_zero(bartholdi_direct(g).core), ihara_determinant(g));
  }
}

TEST(Bartholdi, TreesHaveTrivialIharaZeta) {
  for (const Graph& tree : {complete_graph(2), path_graph(5), star_graph(4)}) {
    auto z = bartholdi_from_gcp(tree, gcp_direct(tree));
    z.core = at_u_zero(z.core);
    z.prefactor_base = at_u_zero(z.prefactor_base);
    EXPECT_EQ(z.prefactor_exponent, -1);
    EXPECT_EQ(reduced_reciprocal(z), one());
  }
}

TEST(Bartholdi, ReducedReciprocalForCycles) {
  // ε = ν, so nothing to divide
  const auto z = bartholdi_direct(cycle_graph(3));
  EXPECT_EQ(z.prefactor_exponent, 0);
  EXPECT_EQ(reduced_reciprocal(z), z.core);
  const P ihara = at_u_zero(z.core);
  // Ihara: Z_{C_3}(t)^{-1} = (1 - t^3)^2
  EXPECT_EQ(ihara, pow(one() - pow(t, 3), 2));
}

// F_G(λ, μ) = λ^ν / (1-μ²)^ε · Z^{-1}(1 - λμ/(1-μ²), (1-μ²)/λ)
TEST(Bartholdi, InverseSubstitutionRoundTrip) {
  const std::vector<std::pair<Rational, Rational>> points{{3, 2}, {5, 3}, {Rational(7, 2), Rational(1, 3)}, {-2, 5}};
  for (const auto& g : zeta_corpus()) {
    const P f = gcp_direct(g);
    const auto z = bartholdi_direct(g);
    for (const auto& [lambda, mu] : points) {
      const Rational d = 1 - mu * mu;
      const Rational zu = 1 - lambda * mu / d;
      const Rational zt = d / lambda;
      Rational scale = 1;
      for (int i = 0; i < g.vertex_count(); ++i) scale *= lambda;
      for (int i = 0; i < g.edge_count(); ++i) scale /= d;
      EXPECT_EQ(scale * evaluate_reciprocal(z, zu, zt), evaluate(f, lambda, mu)) << format_graph(g);
    }
  }
}

TEST(Bartholdi, EvaluateReciprocalRejectsPole) {
  const auto z = bartholdi_direct(complete_graph(2));
  EXPECT_THROW(evaluate_reciprocal(z, Rational(0), Rational(1)), std::domain_error);
}

TEST(Complexity, Examples) {
  EXPECT_EQ(complexity_gcp(cycle_graph(4)), 4);
  EXPECT_EQ(complexity_gcp(complete_graph(4)), 16);
  EXPECT_EQ(complexity_gcp(disjoint_union(complete_graph(2), complete_graph(2))), 0);
  EXPECT_EQ(complexity_gcp(empty_graph(1)), 1);
  EXPECT_EQ(complexity_gcp(empty_graph(3)), 0);
  EXPECT_EQ(complexity_kirchhoff(complete_graph(2)), 1);
  EXPECT_EQ(complexity_kirchhoff(star_graph(3)), 1);
  EXPECT_EQ(complexity_kirchhoff(cycle_graph(4)), 4);
}

TEST(Complexity, AgreesWithKirchhoffAndEnumeration) {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 6;
    const Graph g = testing::random_graph(n, 0.55, rng);
    SCOPED_TRACE(format_graph(g));
    const BigInt kirchhoff = complexity_kirchhoff(g);
    EXPECT_EQ(complexity_gcp(g), kirchhoff);
    EXPECT_EQ(kirchhoff, testing::count_spanning_trees_brute(g));
  }
}

TEST(Complexity, CayleyFormula) {
  for (int n = 2; n <= 7; ++n) {
    BigInt expected = 1;
    for (int i = 0; i < n - 2; ++i) expected *= n;
    EXPECT_EQ(complexity_gcp(complete_graph(n)), expected);
  }
}

TEST(Northshield, Examples) {
  const auto tree = northshield_check(path_graph(4));
  EXPECT_EQ(tree.value, -2);
  EXPECT_TRUE(tree.matches);
  const auto c4 = northshield_check(cycle_graph(4));
  EXPECT_EQ(c4.value, 0);
  EXPECT_TRUE(c4.matches);
  const auto k4 = northshield_check(complete_graph(4));
  EXPECT_EQ(k4.value, 64);
  EXPECT_EQ(k4.expected, 64);
  EXPECT_TRUE(k4.matches);
  EXPECT_THROW(northshield_check(empty_graph(2)), std::invalid_argument);
}

TEST(Northshield, HoldsOnConnectedRandomGraphs) {
  std::mt19937 rng(53);
  int checked = 0;
  while (checked < 15) {
    const Graph g = testing::random_graph(3 + checked % 5, 0.6, rng);
    if (!is_connected(g)) continue;
    EXPECT_TRUE(northshield_check(g).matches) << format_graph(g);
    ++checked;
  }
}

}  // namespace
}  // namespace gcp
