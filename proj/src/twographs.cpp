#include "sgraph/twographs.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sgraph/error.hpp"

namespace sgraph {

namespace {

std::size_t key(std::size_t n, Vertex a, Vertex b, Vertex c) { return (a * n + b) * n + c; }

Triple sorted(Vertex x, Vertex y, Vertex z) {
  Triple t{x, y, z};
  std::sort(t.begin(), t.end());
  return t;
}

std::size_t quadruple_parity(std::size_t n, const std::vector<bool>& m, Vertex a, Vertex b, Vertex c,
                             Vertex d) {
  return (m[key(n, a, b, c)] + m[key(n, a, b, d)] + m[key(n, a, c, d)] + m[key(n, b, c, d)]) & 1u;
}

}  // namespace

TwoGraph::TwoGraph(std::size_t n, std::vector<Triple> triples)
    : n_(n), triples_(std::move(triples)), member_(n * n * n, false) {
  for (const auto& t : triples_) member_[key(n_, t[0], t[1], t[2])] = true;
}

bool TwoGraph::contains(Vertex x, Vertex y, Vertex z) const {
  if (x >= n_ || y >= n_ || z >= n_ || x == y || y == z || x == z) return false;
  const Triple t = sorted(x, y, z);
  return member_[key(n_, t[0], t[1], t[2])];
}

namespace serial {

std::size_t odd_quadruple_count(std::size_t n, const std::vector<bool>& member) {
  std::size_t odd = 0;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d) odd += quadruple_parity(n, member, a, b, c, d);
  return odd;
}

}  // namespace serial

namespace parallel {

std::size_t odd_quadruple_count(std::size_t n, const std::vector<bool>& member) {
  std::size_t odd = 0;
  const auto top = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : odd)
  for (std::int64_t ai = 0; ai < top; ++ai) {
    const auto a = static_cast<Vertex>(ai);
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d) odd += quadruple_parity(n, member, a, b, c, d);
  }
  return odd;
}

}  // namespace parallel

std::optional<TwoGraph> validate_twograph(std::size_t n, std::vector<Triple> triples) {
  for (auto& t : triples) {
    for (Vertex v : t)
      if (v >= n) throw Error(ErrorKind::BadTriple, "vertex " + std::to_string(v + 1) + " out of range");
    t = sorted(t[0], t[1], t[2]);
    if (t[0] == t[1] || t[1] == t[2]) throw Error(ErrorKind::BadTriple, "triple repeats a vertex");
  }
  std::sort(triples.begin(), triples.end());
  if (std::adjacent_find(triples.begin(), triples.end()) != triples.end()) {
    throw Error(ErrorKind::BadTriple, "duplicate triple");
  }
  TwoGraph t(n, std::move(triples));
  if (parallel::odd_quadruple_count(n, t.member_) != 0) return std::nullopt;
  return t;
}

std::optional<std::size_t> is_regular_twograph(const TwoGraph& t) {
  const std::size_t n = t.order();
  if (n < 2) return 0;
  std::vector<std::size_t> pair(n * n, 0);
  for (const auto& [a, b, c] : t.triples()) {
    ++pair[a * n + b];
    ++pair[a * n + c];
    ++pair[b * n + c];
  }
  const std::size_t common = pair[0 * n + 1];
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (pair[i * n + j] != common) return std::nullopt;
  return common;
}

Graph descendant(const TwoGraph& t, Vertex x) {
  if (x >= t.order()) throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(x) + " out of range");
  std::vector<Edge> edges;
  for (const auto& tri : t.triples()) {
    if (tri[0] != x && tri[1] != x && tri[2] != x) continue;
    Vertex ends[2];
    std::size_t k = 0;
    for (Vertex v : tri)
      if (v != x) ends[k++] = v;
    edges.emplace_back(ends[0], ends[1]);
  }
  return Graph(t.order(), std::move(edges));
}

SignedGraph signed_complete_from_graph(const Graph& g) {
  const std::size_t n = g.order();
  SignedMatrix a(n, n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j)
      if (i != j) a.set(i, j, g.has_edge(i, j) ? -1 : 1);
  return SignedGraph(std::move(a));
}

TwoGraph twograph_from_signed_complete(const SignedGraph& sg) {
  const std::size_t n = sg.order();
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (sg.sign(i, j) == 0) throw Error(ErrorKind::NotComplete, "ground graph is not complete");
  std::vector<Triple> triples;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        if (sg.sign(a, b) * sg.sign(a, c) * sg.sign(b, c) < 0) triples.push_back({a, b, c});
  auto t = validate_twograph(n, std::move(triples));
  if (!t) throw std::logic_error("odd-product triples violate the two-graph parity condition");
  return std::move(*t);
}

}  // namespace sgraph
