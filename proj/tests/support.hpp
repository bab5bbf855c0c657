#pragma once

// Test-only oracles, the shared corpus and seeded random generators. Nothing
// here calls the interpolation or factorisation code it is used to check.

#include "gcp/bivar_poly.hpp"
#include "gcp/graph.hpp"
#include "gcp/group.hpp"

#include <Eigen/Core>
#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace gcp::testing {

using PolyMatrix = std::vector<std::vector<BivarPoly<BigInt>>>;

/// Laplace expansion along rows with memoisation over used-column sets.
/// Exponential in n; only for n <= 10 or so.
inline BivarPoly<BigInt> laplace_determinant(const PolyMatrix& m, Variables vars) {
  const int n = static_cast<int>(m.size());
  const std::uint32_t full = (1u << n) - 1;
  std::vector<BivarPoly<BigInt>> dp(full + 1, BivarPoly<BigInt>(vars));
  dp[0] = BivarPoly<BigInt>::constant(1, vars);
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (dp[mask].is_zero()) continue;
    const int row = std::popcount(mask);
    for (int col = 0; col < n; ++col) {
      if (mask & (1u << col)) continue;
      if (m[row][col].is_zero()) continue;
      // sign: number of already used columns to the right of col
      const int inversions = std::popcount(mask >> (col + 1));
      auto term = dp[mask] * m[row][col];
      if (inversions % 2) term = -term;
      dp[mask | (1u << col)] += term;
    }
  }
  return dp[full];
}

/// det(λI - A + μD) by Laplace expansion.
inline BivarPoly<BigInt> gcp_by_expansion(const Graph& g) {
  using P = BivarPoly<BigInt>;
  const int n = g.vertex_count();
  const auto a = adjacency_matrix(g);
  const auto deg = g.degrees();
  PolyMatrix m(n, std::vector<P>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        m[i][j] = P::x() + P::y() * BigInt(deg[i]);
      } else {
        m[i][j] = P::constant(-a(i, j));
      }
    }
  }
  return laplace_determinant(m, Variables::lambda_mu);
}

/// det(λI - M) for an integer matrix, by Laplace expansion (univariate in λ).
inline BivarPoly<BigInt> charpoly_by_expansion(const Eigen::MatrixXi& mat) {
  using P = BivarPoly<BigInt>;
  const int n = static_cast<int>(mat.rows());
  PolyMatrix m(n, std::vector<P>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m[i][j] = P::constant(-mat(i, j));
      if (i == j) m[i][j] += P::x();
    }
  }
  return laplace_determinant(m, Variables::lambda_mu);
}

/// Spanning trees by enumerating (ν-1)-edge subsets and checking acyclicity
/// with union-find.
inline long count_spanning_trees_brute(const Graph& g) {
  const int n = g.vertex_count();
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());
  if (n == 1) return 1;
  long count = 0;
  std::vector<int> pick(m, 0);
  std::fill(pick.begin(), pick.begin() + std::min(m, n - 1), 1);
  if (m < n - 1) return 0;
  // iterate combinations via prev_permutation on the selector
  do {
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    bool acyclic = true;
    for (int k = 0; k < m && acyclic; ++k) {
      if (!pick[k]) continue;
      const int a = find(edges[k].u);
      const int b = find(edges[k].v);
      if (a == b) acyclic = false;
      parent[a] = b;
    }
    if (acyclic) ++count;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return count;
}

/// Kronecker form: sum_gamma P(gamma) ⊗ A(G_gamma) + A(F) ⊗ I, assembled from
/// per-arc permutations without going through build_bundle.
inline Eigen::MatrixXi kronecker_bundle_adjacency(const Graph& base, const Graph& fiber,
                                                   const PermutationVoltage& phi) {
  const int nb = base.vertex_count();
  const int nf = fiber.vertex_count();
  std::vector<Permutation> seen;
  for (const auto& arc : base.arcs()) {
    const auto p = phi(arc.tail, arc.head);
    if (std::find(seen.begin(), seen.end(), p) == seen.end()) seen.push_back(p);
  }
  Eigen::MatrixXi total = Eigen::kroneckerProduct(adjacency_matrix(fiber), Eigen::MatrixXi::Identity(nb, nb));
  for (const auto& p : seen) {
    Eigen::MatrixXi perm = Eigen::MatrixXi::Zero(nf, nf);
    for (int i = 0; i < nf; ++i) perm(i, p[i]) = 1;
    Eigen::MatrixXi part = Eigen::MatrixXi::Zero(nb, nb);
    for (const auto& arc : base.arcs()) {
      if (phi(arc.tail, arc.head) == p) part(arc.tail, arc.head) = 1;
    }
    total += Eigen::kroneckerProduct(perm, part);
  }
  return total;
}

struct NamedGraph {
  std::string name;
  Graph graph;
};

inline std::vector<NamedGraph> corpus_bases() {
  return {{"K2", complete_graph(2)},
          {"P3", path_graph(3)},
          {"C3", cycle_graph(3)},
          {"C4", cycle_graph(4)},
          {"K13", star_graph(3)}};
}

struct NamedFiber {
  std::string name;
  CayleyFiber fiber;
};

inline std::vector<NamedFiber> corpus_fibers() {
  const auto z2 = AbelianGroup::cyclic(2);
  const auto z3 = AbelianGroup::cyclic(3);
  const auto z4 = AbelianGroup::cyclic(4);
  const auto z5 = AbelianGroup::cyclic(5);
  return {{"empty2", CayleyFiber::edgeless(z2)},
          {"empty3", CayleyFiber::edgeless(z3)},
          {"K3", CayleyFiber::complete(z3)},
          {"K4", CayleyFiber::complete(z4)},
          {"K4(Z2xZ2)", CayleyFiber::complete(AbelianGroup({2, 2}))},
          {"C4", CayleyFiber(z4, {{1}, {3}})},
          {"C5", CayleyFiber(z5, {{1}, {4}})}};
}

/// Every canonical arc carries the element (1, 0, ..., 0).
inline AbelianVoltage generator_voltage(const Graph& base, const AbelianGroup& group) {
  GroupElement gen = group.identity();
  gen[0] = group.cyclic_orders()[0] > 1 ? 1 : 0;
  std::map<Edge, GroupElement> values;
  for (const auto& e : base.edges()) values.emplace(e, gen);
  return AbelianVoltage(base, group, values);
}

inline AbelianVoltage random_voltage(const Graph& base, const AbelianGroup& group, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, group.order() - 1);
  std::map<Edge, GroupElement> values;
  for (const auto& e : base.edges()) values.emplace(e, group.element_at(pick(rng)));
  return AbelianVoltage(base, group, values);
}

/// Erdős–Rényi graph with edge probability p.
inline Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.push_back({i, j});
    }
  }
  return Graph(n, std::move(edges));
}

/// Polynomial from a literal list of (i, j, coefficient) terms.
inline BivarPoly<BigInt> poly(std::initializer_list<std::tuple<int, int, long>> terms,
                              Variables vars = Variables::lambda_mu) {
  BivarPoly<BigInt> p(vars);
  for (const auto& [i, j, c] : terms) p.add_term(i, j, c);
  return p;
}

}  // namespace gcp::testing
