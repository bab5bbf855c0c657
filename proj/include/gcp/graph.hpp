#pragma once

#include "gcp/group.hpp"
#include "gcp/numeric.hpp"

#include <compare>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace gcp {

/// Undirected edge, stored with u < v.
struct Edge {
  int u;
  int v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Directed arc tail -> head.
struct Arc {
  int tail;
  int head;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

Edge make_edge(int a, int b);

/// Simple undirected graph on vertices 0..vertex_count-1. Loops, repeated
/// edges and out-of-range endpoints are rejected with std::invalid_argument.
class Graph {
 public:
  Graph(int vertex_count, std::vector<Edge> edges, std::vector<std::string> labels = {});

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  /// Sorted, each with u < v.
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool has_edge(int a, int b) const;
  std::vector<int> degrees() const;
  /// Both orientations of every edge: the arc set of the symmetric digraph.
  std::vector<Arc> arcs() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  int vertex_count_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

IntMatrix adjacency_matrix(const Graph& g);
IntMatrix degree_matrix(const Graph& g);
bool is_connected(const Graph& g);

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
/// K_{1,m}, hub is vertex 0.
Graph star_graph(int m);
/// K_{s,t}: vertices 0..s-1 on one side, s..s+t-1 on the other.
Graph complete_bipartite(int s, int t);
Graph disjoint_union(const Graph& a, const Graph& b);

/// Permutation of {0..n-1} in one-line notation: p[v] is the image of v.
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& p);
Permutation inverse(const Permutation& p);
bool is_automorphism(const Graph& g, const Permutation& p);

/// Voltage assignment into a finite abelian group. One value is kept per
/// edge, on the canonical arc u -> v with u < v; the reverse arc carries the
/// inverse. Edges without an explicit value carry the identity.
class AbelianVoltage {
 public:
  AbelianVoltage(Graph base, AbelianGroup group, std::map<Edge, GroupElement> values = {});

  static AbelianVoltage trivial(Graph base, AbelianGroup group) {
    return AbelianVoltage(std::move(base), std::move(group));
  }

  const Graph& base() const { return base_; }
  const AbelianGroup& group() const { return group_; }
  /// Value on every edge's canonical arc.
  const std::map<Edge, GroupElement>& canonical_values() const { return values_; }

  /// phi(tail -> head); throws std::invalid_argument if it is not an arc.
  GroupElement operator()(int tail, int head) const;

 private:
  Graph base_;
  AbelianGroup group_;
  std::map<Edge, GroupElement> values_;
};

/// Voltage assignment into the symmetric group on `degree` points, same
/// storage convention as AbelianVoltage.
class PermutationVoltage {
 public:
  PermutationVoltage(Graph base, int degree, std::map<Edge, Permutation> values = {});

  static PermutationVoltage trivial(Graph base, int degree) {
    return PermutationVoltage(std::move(base), degree);
  }
  /// Translation action v -> v + phi(e) on the group's element indices.
  static PermutationVoltage from_abelian(const AbelianVoltage& phi);

  const Graph& base() const { return base_; }
  int degree() const { return degree_; }
  const std::map<Edge, Permutation>& canonical_values() const { return values_; }

  Permutation operator()(int tail, int head) const;

  /// True when all assigned permutations commute pairwise.
  bool generates_abelian_group() const;

 private:
  Graph base_;
  int degree_;
  std::map<Edge, Permutation> values_;
};

/// 0/1 matrix of the arcs carrying voltage gamma.
IntMatrix arc_partition(const Graph& g, const AbelianVoltage& phi, const GroupElement& gamma);
IntMatrix arc_partition(const Graph& g, const PermutationVoltage& phi, const Permutation& gamma);

/// Cay(A, S): vertices are group elements in index order, g ~ h iff
/// h - g is in S. S must be inverse-closed and avoid the identity.
class CayleyFiber {
 public:
  CayleyFiber(AbelianGroup group, std::vector<GroupElement> connecting_set);

  /// Cay(A, A \ {id}) = K_n.
  static CayleyFiber complete(const AbelianGroup& group);
  /// Cay(A, {}) = n isolated vertices; bundles over it are coverings.
  static CayleyFiber edgeless(const AbelianGroup& group);

  const AbelianGroup& group() const { return group_; }
  /// Sorted by element index, no duplicates.
  const std::vector<GroupElement>& connecting_set() const { return set_; }
  int degree() const { return static_cast<int>(set_.size()); }
  int vertex_count() const { return group_.order(); }

 private:
  AbelianGroup group_;
  std::vector<GroupElement> set_;
};

/// Arbitrary fiber graph; voltages act on it by permutations.
struct ExplicitFiber {
  Graph graph;
};

using FiberSpec = std::variant<CayleyFiber, ExplicitFiber>;

Graph cayley_graph(const CayleyFiber& fiber);

/// Index of bundle vertex (u_i, v_k): k * base_count + i.
inline int bundle_vertex(int base_vertex, int fiber_vertex, int base_count) {
  return fiber_vertex * base_count + base_vertex;
}

/// G x^phi F: (u1, v1) ~ (u2, v2) iff u1 -> u2 is an arc and v2 = phi(u1 -> u2)(v1),
/// or u1 = u2 and v1 ~ v2 in F.
Graph build_bundle(const Graph& base, const CayleyFiber& fiber, const AbelianVoltage& phi);
/// Throws std::invalid_argument if a voltage is not an automorphism of the fiber.
Graph build_bundle(const Graph& base, const ExplicitFiber& fiber, const PermutationVoltage& phi);
/// |A|-fold covering G^phi (edgeless Cayley fiber).
Graph build_covering(const Graph& base, const AbelianVoltage& phi);
Graph cartesian_product(const Graph& g, const Graph& f);

}  // namespace gcp
