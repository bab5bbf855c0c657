#include "gcp/closed_forms.hpp"
#include "gcp/gcp.hpp"
#include "gcp/zeta.hpp"

#include <gtest/gtest.h>

namespace gcp {
namespace {

using P = BivarPoly<BigInt>;

const P lam = P::x();
const P mu = P::y();
P c(long v) { return P::constant(v); }
P lin(long a, long b) { return lam + mu * BigInt(a) + c(b); }

BigInt ipow(long base, long e) {
  BigInt out = 1;
  for (long i = 0; i < e; ++i) out *= base;
  return out;
}

TEST(CompleteBipartite, Examples) {
  EXPECT_EQ(gcp_Kst(1, 1), pow(lam + mu, 2) - c(1));
  EXPECT_EQ(gcp_Kst(1, 3), pow(lin(1, 0), 2) * (lin(1, 0) * lin(3, 0) - c(3)));
  EXPECT_EQ(gcp_Kst(2, 3), lin(3, 0) * pow(lin(2, 0), 2) * (lin(2, 0) * lin(3, 0) - c(6)));
  EXPECT_THROW(gcp_Kst(0, 2), std::invalid_argument);
}

TEST(CompleteBipartite, MatchesDirect) {
  for (int s = 1; s <= 4; ++s) {
    for (int t = 1; t <= 4; ++t) EXPECT_EQ(gcp_Kst(s, t), gcp_direct(complete_bipartite(s, t))) << s << "," << t;
  }
}

TEST(StarTimesKn, C4Case) {
  const P expected = (pow(lin(2, -1), 2) - c(1)) * (pow(lin(2, 1), 2) - c(1));
  EXPECT_EQ(gcp_star_times_Kn(1, 2), expected);
  EXPECT_EQ(expected, gcp_direct(cycle_graph(4)));
}

TEST(StarTimesKn, MatchesDirectAndFactored) {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 2; n <= 4; ++n) {
      SCOPED_TRACE(std::to_string(m) + "," + std::to_string(n));
      const P closed = gcp_star_times_Kn(m, n);
      const Graph product = cartesian_product(star_graph(m), complete_graph(n));
      EXPECT_EQ(closed.degree_x(), (m + 1) * n);
      EXPECT_EQ(closed, gcp_direct(product));
      const Graph star = star_graph(m);
      EXPECT_EQ(closed, gcp_times_Kn(star, AbelianVoltage::trivial(star, AbelianGroup::cyclic(n))).product);
      EXPECT_EQ(star_times_Kn_edges(m, n), product.edge_count());
    }
  }
  EXPECT_EQ(star_times_Kn_edges(2, 2), 7);
  EXPECT_THROW(gcp_star_times_Kn(1, 1), std::invalid_argument);
}

TEST(StarTimesKn, TreeCounts) {
  const auto c4 = tree_count_star_times_Kn(1, 2);
  EXPECT_EQ(c4.corrected, 4);
  EXPECT_EQ(c4.published, 64);
  EXPECT_EQ(tree_count_star_times_Kn(2, 3).corrected, 1728);
  for (int n = 2; n <= 5; ++n) {
    EXPECT_EQ(tree_count_star_times_Kn(1, n).corrected, ipow(n, n - 2) * ipow(n + 2, n - 1));
  }
}

TEST(StarTimesKn, CorrectedCountIsKirchhoff) {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 2; n <= 5; ++n) {
      const Graph product = cartesian_product(star_graph(m), complete_graph(n));
      const auto counts = tree_count_star_times_Kn(m, n);
      EXPECT_EQ(counts.corrected, complexity_kirchhoff(product)) << m << "," << n;
      EXPECT_NE(counts.published, counts.corrected);
      if (m <= 2 && n <= 4) {
        EXPECT_EQ(counts.corrected, complexity_from_gcp(gcp_star_times_Kn(m, n), star_times_Kn_edges(m, n),
                                                        product.vertex_count()));
      }
    }
  }
}

}  // namespace
}  // namespace gcp
