#include "sgraph/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "sgraph/error.hpp"

namespace sgraph {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), adj_(n) {
  if (n == 0) throw Error(ErrorKind::InvalidGraph, "graph needs at least one vertex");
  for (auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorKind::InvalidGraph, "edge endpoint out of range");
    }
    if (u == v) {
      throw Error(ErrorKind::InvalidGraph, "loop at vertex " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw Error(ErrorKind::InvalidGraph, "repeated edge");
  }
  edges_ = std::move(edges);
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

Graph Graph::from_adjacency(const SignedMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::NonSquare, "adjacency must be square");
  if (!a.has_zero_diagonal()) throw Error(ErrorKind::NonzeroDiagonal, "adjacency has loops");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      if ((a(i, j) != 0) != (a(j, i) != 0)) {
        throw Error(ErrorKind::NotSymmetric, "adjacency pattern not symmetric");
      }
      if (a(i, j) != 0) edges.emplace_back(i, j);
    }
  return Graph(a.rows(), std::move(edges));
}

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph Graph::cycle(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::InvalidGraph, "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

Graph Graph::path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph Graph::complete_bipartite(std::size_t left, std::size_t right) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < left; ++i)
    for (std::size_t j = 0; j < right; ++j) edges.emplace_back(i, left + j);
  return Graph(left + right, std::move(edges));
}

Graph Graph::petersen() {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, std::move(edges));
}

Graph Graph::disjoint_copies(const Graph& g, std::size_t k) {
  std::vector<Edge> edges;
  for (std::size_t c = 0; c < k; ++c)
    for (const auto& [u, v] : g.edges()) edges.emplace_back(c * g.order() + u, c * g.order() + v);
  return Graph(k * g.order(), std::move(edges));
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
  if (u >= n_ || v >= n_) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::size_t Graph::component_count() const {
  std::vector<bool> seen(n_, false);
  std::size_t c = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    ++c;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : adj_[u])
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
  }
  return c;
}

SignedMatrix Graph::adjacency() const {
  SignedMatrix a(n_, n_);
  for (const auto& [u, v] : edges_) {
    a.set(u, v, 1);
    a.set(v, u, 1);
  }
  return a;
}

SignedGraph::SignedGraph(SignedMatrix adjacency) : a_(std::move(adjacency)) {
  if (!a_.is_square()) throw Error(ErrorKind::NonSquare, "signed adjacency must be square");
  if (!a_.has_zero_diagonal()) {
    throw Error(ErrorKind::NonzeroDiagonal, "signed adjacency has a nonzero diagonal");
  }
  if (!a_.is_symmetric()) {
    throw Error(ErrorKind::NotSymmetric, "signed adjacency must be symmetric");
  }
}

SignedGraph::SignedGraph(const Graph& g, const std::vector<int>& signs)
    : a_(g.order(), g.order()) {
  if (signs.size() != g.size()) {
    throw Error(ErrorKind::DimensionMismatch, "one sign per edge required");
  }
  for (std::size_t e = 0; e < signs.size(); ++e) {
    if (signs[e] != 1 && signs[e] != -1) {
      throw Error(ErrorKind::InvalidEntry, "edge sign must be +1 or -1");
    }
    const auto [u, v] = g.edges()[e];
    a_.set(u, v, signs[e]);
    a_.set(v, u, signs[e]);
  }
}

SignedGraph SignedGraph::all_positive(const Graph& g) { return SignedGraph(g.adjacency()); }

bool SignedGraph::has_edge() const noexcept {
  for (Trit t : a_.data())
    if (t != 0) return true;
  return false;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  std::vector<int> colour(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::queue<Vertex> queue;
    queue.push(s);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors()[u]) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[u];
          queue.push(w);
        } else if (colour[w] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (Vertex v = 0; v < g.order(); ++v) (colour[v] == 0 ? parts.left : parts.right).push_back(v);
  return parts;
}

Graph ground(const SignedGraph& sg) { return Graph::from_adjacency(sg.adjacency()); }

SignedGraph star(const SignedMatrix& c) {
  if (!c.is_square()) throw Error(ErrorKind::NonSquare, "star needs a square matrix");
  const std::size_t n = c.rows();
  SignedMatrix a(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a.set(i, n + j, c(i, j));
      a.set(n + j, i, c(i, j));
    }
  return SignedGraph(std::move(a));
}

std::optional<std::size_t> is_regular(const Graph& g) {
  const std::size_t d = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

}  // namespace sgraph
