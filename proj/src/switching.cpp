#include "sgraph/switching.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "sgraph/error.hpp"

namespace sgraph {

namespace {

constexpr std::size_t kRoot = static_cast<std::size_t>(-1);

// BFS spanning forest of a fixed ground graph.
struct Forest {
  std::vector<Vertex> order;        // BFS visiting order, roots included
  std::vector<Vertex> parent;       // kRoot for roots
  std::vector<std::size_t> via;     // index in g.edges() of the parent edge
};

std::size_t edge_index(const Graph& g, Vertex u, Vertex v) {
  const Edge key = u < v ? Edge{u, v} : Edge{v, u};
  const auto it = std::lower_bound(g.edges().begin(), g.edges().end(), key);
  return static_cast<std::size_t>(it - g.edges().begin());
}

Forest bfs_forest(const Graph& g) {
  Forest f;
  f.parent.assign(g.order(), kRoot);
  f.via.assign(g.order(), kRoot);
  std::vector<bool> seen(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    std::queue<Vertex> queue;
    queue.push(s);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      f.order.push_back(u);
      for (Vertex w : g.neighbors()[u]) {
        if (seen[w]) continue;
        seen[w] = true;
        f.parent[w] = u;
        f.via[w] = edge_index(g, u, w);
        queue.push(w);
      }
    }
  }
  return f;
}

// Canonical negative-edge mask for the signature whose negative edges are
// the set bits of `mask`.
std::uint32_t canonical_mask(const Graph& g, const Forest& f, std::uint32_t mask,
                             std::vector<int>& potential) {
  for (Vertex v : f.order) {
    if (f.parent[v] == kRoot) {
      potential[v] = 1;
    } else {
      const int s = (mask >> f.via[v]) & 1u ? -1 : 1;
      potential[v] = potential[f.parent[v]] * s;
    }
  }
  std::uint32_t out = 0;
  for (std::size_t e = 0; e < g.size(); ++e) {
    const auto [u, v] = g.edges()[e];
    const int s = (mask >> e) & 1u ? -1 : 1;
    if (potential[u] * s * potential[v] < 0) out |= std::uint32_t{1} << e;
  }
  return out;
}

void check_enumerable(const Graph& g) {
  if (g.size() > kMaxEnumerationEdges) {
    throw Error(ErrorKind::TooManyEdges,
                std::to_string(g.size()) + " edges exceeds the limit of " +
                    std::to_string(kMaxEnumerationEdges));
  }
}

SignedGraph from_mask(const Graph& g, std::uint32_t mask) {
  std::vector<int> signs(g.size());
  for (std::size_t e = 0; e < g.size(); ++e) signs[e] = (mask >> e) & 1u ? -1 : 1;
  return SignedGraph(g, signs);
}

}  // namespace

SignedGraph resign(const SignedGraph& sg, Vertex v) {
  if (v >= sg.order()) {
    throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v) + " out of range");
  }
  SignedMatrix a = sg.adjacency();
  for (std::size_t j = 0; j < sg.order(); ++j) {
    a.set(v, j, -a(v, j));
    a.set(j, v, -a(j, v));
  }
  return SignedGraph(std::move(a));
}

SignedGraph switching_canonical(const SignedGraph& sg) {
  const Graph g = ground(sg);
  const Forest f = bfs_forest(g);
  std::vector<int> potential(g.order(), 1);
  for (Vertex v : f.order)
    if (f.parent[v] != kRoot) potential[v] = potential[f.parent[v]] * sg.sign(f.parent[v], v);
  SignedMatrix a = sg.adjacency();
  for (const auto& [u, v] : g.edges()) {
    const int s = potential[u] * sg.sign(u, v) * potential[v];
    a.set(u, v, s);
    a.set(v, u, s);
  }
  return SignedGraph(std::move(a));
}

bool switching_equivalent(const SignedGraph& a, const SignedGraph& b) {
  if (a.order() != b.order() || !(ground(a) == ground(b))) {
    throw Error(ErrorKind::GroundMismatch, "signed graphs have different ground graphs");
  }
  return switching_canonical(a) == switching_canonical(b);
}

std::size_t switching_class_exponent(const Graph& g) {
  return g.size() + g.component_count() - g.order();
}

std::uint64_t count_switching_classes(const Graph& g) {
  const std::size_t e = switching_class_exponent(g);
  if (e > 63) throw Error(ErrorKind::Overflow, "2^" + std::to_string(e) + " does not fit 64 bits");
  return std::uint64_t{1} << e;
}

namespace serial {

std::vector<std::uint32_t> switching_class_masks(const Graph& g) {
  check_enumerable(g);
  const Forest f = bfs_forest(g);
  std::vector<int> potential(g.order());
  std::set<std::uint32_t> classes;
  const std::uint64_t total = std::uint64_t{1} << g.size();
  for (std::uint64_t mask = 0; mask < total; ++mask)
    classes.insert(canonical_mask(g, f, static_cast<std::uint32_t>(mask), potential));
  return {classes.begin(), classes.end()};
}

}  // namespace serial

namespace parallel {

std::vector<std::uint32_t> switching_class_masks(const Graph& g) {
  check_enumerable(g);
  const Forest f = bfs_forest(g);
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << g.size());
  std::vector<std::uint32_t> canon(static_cast<std::size_t>(total));
#pragma omp parallel
  {
    std::vector<int> potential(g.order());
#pragma omp for schedule(static)
    for (std::int64_t mask = 0; mask < total; ++mask)
      canon[static_cast<std::size_t>(mask)] =
          canonical_mask(g, f, static_cast<std::uint32_t>(mask), potential);
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  return canon;
}

}  // namespace parallel

std::vector<SignedGraph> enumerate_switching_classes(const Graph& g) {
  std::vector<SignedGraph> out;
  for (std::uint32_t mask : parallel::switching_class_masks(g)) out.push_back(from_mask(g, mask));
  return out;
}

}  // namespace sgraph
