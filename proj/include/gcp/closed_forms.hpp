#pragma once

// Closed-form polynomials and tree counts for complete bipartite graphs and
// for the hub network K_{1,m} x K_n. Used as golden references against the
// general machinery.

#include "gcp/bivar_poly.hpp"
#include "gcp/numeric.hpp"

namespace gcp {

/// (λ+tμ)^{s-1} (λ+sμ)^{t-1} [(λ+sμ)(λ+tμ) - st].
BivarPoly<BigInt> gcp_Kst(int s, int t);

/// F of K_{1,m} x K_n, m >= 1, n >= 2:
///   [λ+nμ-(n-1)]^{m-1} {[λ+nμ-(n-1)][λ+(m+n-1)μ-(n-1)] - m}
///   x [λ+nμ+1]^{(m-1)(n-1)} {[λ+nμ+1][λ+(m+n-1)μ+1] - m}^{n-1}
BivarPoly<BigInt> gcp_star_times_Kn(int m, int n);

/// Spanning trees of K_{1,m} x K_n.
///
/// `corrected` is n^{n-2} (m+n+1)^{n-1} (n+1)^{(m-1)(n-1)}, which is what
/// (1/2ε) ∂F/∂μ at (0,1) gives for gcp_star_times_Kn and what the
/// matrix-tree theorem gives. `published` is the circulated closed form with
/// exponent n+1 on (m+n+1); it overcounts (64 instead of 4 for K_2 x K_2)
/// and is kept only so the discrepancy stays pinned by tests.
struct StarTimesKnTreeCount {
  BigInt corrected;
  BigInt published;
};

StarTimesKnTreeCount tree_count_star_times_Kn(int m, int n);

/// Edge count of K_{1,m} x K_n: m n + (m+1) n (n-1) / 2.
long star_times_Kn_edges(int m, int n);

}  // namespace gcp
