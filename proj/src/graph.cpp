#include "gcp/graph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace gcp {

Edge make_edge(int a, int b) {
  if (a == b) throw std::invalid_argument("loop at vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(int vertex_count, std::vector<Edge> edges, std::vector<std::string> labels)
    : vertex_count_(vertex_count), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (vertex_count_ < 1) throw std::invalid_argument("graph needs at least one vertex");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != vertex_count_) {
    throw std::invalid_argument("label count does not match vertex count");
  }
  for (auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count_ || e.v >= vertex_count_) {
      throw std::invalid_argument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  "} has an endpoint out of range");
    }
    e = make_edge(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw std::invalid_argument("repeated edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
  }
}

bool Graph::has_edge(int a, int b) const {
  if (a == b) return false;
  return std::binary_search(edges_.begin(), edges_.end(), make_edge(a, b));
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(vertex_count_, 0);
  for (const auto& e : edges_) {
    ++out[e.u];
    ++out[e.v];
  }
  return out;
}

std::vector<Arc> Graph::arcs() const {
  std::vector<Arc> out;
  out.reserve(2 * edges_.size());
  for (const auto& e : edges_) {
    out.push_back({e.u, e.v});
    out.push_back({e.v, e.u});
  }
  return out;
}

IntMatrix adjacency_matrix(const Graph& g) {
  IntMatrix a = IntMatrix::Zero(g.vertex_count(), g.vertex_count());
  for (const auto& e : g.edges()) a(e.u, e.v) = a(e.v, e.u) = 1;
  return a;
}

IntMatrix degree_matrix(const Graph& g) {
  IntMatrix d = IntMatrix::Zero(g.vertex_count(), g.vertex_count());
  const auto deg = g.degrees();
  for (int i = 0; i < g.vertex_count(); ++i) d(i, i) = deg[i];
  return d;
}

bool is_connected(const Graph& g) {
  std::vector<std::vector<int>> adj(g.vertex_count());
  for (const auto& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      ++reached;
      stack.push_back(w);
    }
  }
  return reached == g.vertex_count();
}

Graph empty_graph(int n) { return Graph(n, {}); }

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph star_graph(int m) { return complete_bipartite(1, m); }

Graph complete_bipartite(int s, int t) {
  if (s < 1 || t < 1) throw std::invalid_argument("complete bipartite sides must be positive");
  std::vector<Edge> edges;
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < t; ++j) edges.push_back({i, s + j});
  }
  return Graph(s + t, std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const int shift = a.vertex_count();
  for (const auto& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

bool is_permutation(const Permutation& p) {
  std::vector<bool> hit(p.size(), false);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t v = 0; v < p.size(); ++v) out[p[v]] = static_cast<int>(v);
  return out;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (static_cast<int>(p.size()) != g.vertex_count() || !is_permutation(p)) return false;
  for (const auto& e : g.edges()) {
    if (!g.has_edge(p[e.u], p[e.v])) return false;
  }
  return true;
}

namespace {

template <class Value>
void check_voltage_edges(const Graph& base, const std::map<Edge, Value>& values) {
  for (const auto& [e, value] : values) {
    if (e.u >= e.v || !base.has_edge(e.u, e.v)) {
      throw std::invalid_argument("voltage given on {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  "}, which is not a canonical edge of the base graph");
    }
  }
}

void check_same_base(const Graph& base, const Graph& voltage_base) {
  if (!(base == voltage_base)) throw std::invalid_argument("voltage assignment belongs to a different base graph");
}

// Shared construction: lifted arcs from per-arc permutations plus one fiber
// copy per base vertex.
Graph bundle_from_permutations(const Graph& base, const Graph& fiber,
                               const std::function<Permutation(const Edge&)>& canonical_perm) {
  const int nb = base.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(base.edge_count() * fiber.vertex_count() + nb * fiber.edge_count());
  for (const auto& e : base.edges()) {
    const Permutation p = canonical_perm(e);
    for (int v = 0; v < fiber.vertex_count(); ++v) {
      edges.push_back(make_edge(bundle_vertex(e.u, v, nb), bundle_vertex(e.v, p[v], nb)));
    }
  }
  for (int u = 0; u < nb; ++u) {
    for (const auto& f : fiber.edges()) {
      edges.push_back(make_edge(bundle_vertex(u, f.u, nb), bundle_vertex(u, f.v, nb)));
    }
  }
  return Graph(nb * fiber.vertex_count(), std::move(edges));
}

Permutation translation(const AbelianGroup& group, const GroupElement& gamma) {
  Permutation p(group.order());
  for (int k = 0; k < group.order(); ++k) p[k] = group.index_of(group.add(group.element_at(k), gamma));
  return p;
}

}  // namespace

AbelianVoltage::AbelianVoltage(Graph base, AbelianGroup group, std::map<Edge, GroupElement> values)
    : base_(std::move(base)), group_(std::move(group)), values_(std::move(values)) {
  check_voltage_edges(base_, values_);
  for (const auto& [e, g] : values_) group_.require(g, "voltage");
  for (const auto& e : base_.edges()) values_.try_emplace(e, group_.identity());
}

GroupElement AbelianVoltage::operator()(int tail, int head) const {
  if (!base_.has_edge(tail, head)) {
    throw std::invalid_argument("(" + std::to_string(tail) + "," + std::to_string(head) + ") is not an arc");
  }
  const auto& value = values_.at(make_edge(tail, head));
  return tail < head ? value : group_.negate(value);
}

PermutationVoltage::PermutationVoltage(Graph base, int degree, std::map<Edge, Permutation> values)
    : base_(std::move(base)), degree_(degree), values_(std::move(values)) {
  if (degree_ < 1) throw std::invalid_argument("permutation degree must be positive");
  check_voltage_edges(base_, values_);
  for (const auto& [e, p] : values_) {
    if (static_cast<int>(p.size()) != degree_ || !is_permutation(p)) {
      throw std::invalid_argument("voltage on {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  "} is not a permutation of " + std::to_string(degree_) + " points");
    }
  }
  Permutation identity(degree_);
  for (int v = 0; v < degree_; ++v) identity[v] = v;
  for (const auto& e : base_.edges()) values_.try_emplace(e, identity);
}

PermutationVoltage PermutationVoltage::from_abelian(const AbelianVoltage& phi) {
  std::map<Edge, Permutation> values;
  for (const auto& [e, g] : phi.canonical_values()) values.emplace(e, translation(phi.group(), g));
  return PermutationVoltage(phi.base(), phi.group().order(), std::move(values));
}

Permutation PermutationVoltage::operator()(int tail, int head) const {
  if (!base_.has_edge(tail, head)) {
    throw std::invalid_argument("(" + std::to_string(tail) + "," + std::to_string(head) + ") is not an arc");
  }
  const auto& value = values_.at(make_edge(tail, head));
  return tail < head ? value : inverse(value);
}

bool PermutationVoltage::generates_abelian_group() const {
  std::vector<const Permutation*> perms;
  for (const auto& [e, p] : values_) perms.push_back(&p);
  for (std::size_t a = 0; a < perms.size(); ++a) {
    for (std::size_t b = a + 1; b < perms.size(); ++b) {
      const auto& p = *perms[a];
      const auto& q = *perms[b];
      for (int v = 0; v < degree_; ++v) {
        if (p[q[v]] != q[p[v]]) return false;
      }
    }
  }
  return true;
}

IntMatrix arc_partition(const Graph& g, const AbelianVoltage& phi, const GroupElement& gamma) {
  check_same_base(g, phi.base());
  phi.group().require(gamma, "voltage value");
  IntMatrix out = IntMatrix::Zero(g.vertex_count(), g.vertex_count());
  for (const auto& arc : g.arcs()) {
    if (phi(arc.tail, arc.head) == gamma) out(arc.tail, arc.head) = 1;
  }
  return out;
}

IntMatrix arc_partition(const Graph& g, const PermutationVoltage& phi, const Permutation& gamma) {
  check_same_base(g, phi.base());
  if (static_cast<int>(gamma.size()) != phi.degree() || !is_permutation(gamma)) {
    throw std::invalid_argument("voltage value is not a permutation of the fiber");
  }
  IntMatrix out = IntMatrix::Zero(g.vertex_count(), g.vertex_count());
  for (const auto& arc : g.arcs()) {
    if (phi(arc.tail, arc.head) == gamma) out(arc.tail, arc.head) = 1;
  }
  return out;
}

CayleyFiber::CayleyFiber(AbelianGroup group, std::vector<GroupElement> connecting_set)
    : group_(std::move(group)), set_(std::move(connecting_set)) {
  for (const auto& s : set_) {
    group_.require(s, "connecting element");
    if (group_.is_identity(s)) throw std::invalid_argument("connecting set contains the identity");
  }
  std::sort(set_.begin(), set_.end(),
            [&](const GroupElement& a, const GroupElement& b) { return group_.index_of(a) < group_.index_of(b); });
  set_.erase(std::unique(set_.begin(), set_.end()), set_.end());
  for (const auto& s : set_) {
    if (!std::binary_search(set_.begin(), set_.end(), group_.negate(s), [&](const auto& a, const auto& b) {
          return group_.index_of(a) < group_.index_of(b);
        })) {
      throw std::invalid_argument("connecting set is not closed under inverses: missing -" + to_string(s));
    }
  }
}

CayleyFiber CayleyFiber::complete(const AbelianGroup& group) {
  auto elements = group.elements();
  elements.erase(elements.begin());
  return CayleyFiber(group, std::move(elements));
}

CayleyFiber CayleyFiber::edgeless(const AbelianGroup& group) { return CayleyFiber(group, {}); }

Graph cayley_graph(const CayleyFiber& fiber) {
  const auto& group = fiber.group();
  std::vector<Edge> edges;
  for (int g = 0; g < group.order(); ++g) {
    for (const auto& s : fiber.connecting_set()) {
      const int h = group.index_of(group.add(group.element_at(g), s));
      if (g < h) edges.push_back({g, h});
    }
  }
  return Graph(group.order(), std::move(edges));
}

Graph build_bundle(const Graph& base, const CayleyFiber& fiber, const AbelianVoltage& phi) {
  check_same_base(base, phi.base());
  if (!(fiber.group() == phi.group())) {
    throw std::invalid_argument("fiber group " + fiber.group().to_string() + " does not match voltage group " +
                                phi.group().to_string());
  }
  const auto& group = phi.group();
  return bundle_from_permutations(base, cayley_graph(fiber), [&](const Edge& e) {
    return translation(group, phi.canonical_values().at(e));
  });
}

Graph build_bundle(const Graph& base, const ExplicitFiber& fiber, const PermutationVoltage& phi) {
  check_same_base(base, phi.base());
  if (phi.degree() != fiber.graph.vertex_count()) {
    throw std::invalid_argument("voltage permutation degree does not match fiber size");
  }
  for (const auto& [e, p] : phi.canonical_values()) {
    if (!is_automorphism(fiber.graph, p)) {
      throw std::invalid_argument("voltage on {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  "} is not an automorphism of the fiber");
    }
  }
  return bundle_from_permutations(base, fiber.graph, [&](const Edge& e) { return phi.canonical_values().at(e); });
}

Graph build_covering(const Graph& base, const AbelianVoltage& phi) {
  return build_bundle(base, CayleyFiber::edgeless(phi.group()), phi);
}

Graph cartesian_product(const Graph& g, const Graph& f) {
  return build_bundle(g, ExplicitFiber{f}, PermutationVoltage::trivial(g, f.vertex_count()));
}

}  // namespace gcp
