#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sgraph/matrix.hpp"

namespace sgraph {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

// Simple labeled graph. Edges are stored normalized (u < v) and sorted.
class Graph {
 public:
  // Throws InvalidGraph on loops, repeated edges or out-of-range endpoints.
  Graph(std::size_t n, std::vector<Edge> edges);

  static Graph from_adjacency(const SignedMatrix& adjacency);
  static Graph complete(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph path(std::size_t n);
  static Graph complete_bipartite(std::size_t left, std::size_t right);
  static Graph petersen();
  // k disjoint copies of g, copy c occupying vertices [c*n, (c+1)*n).
  static Graph disjoint_copies(const Graph& g, std::size_t k);

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<std::vector<Vertex>>& neighbors() const noexcept { return adj_; }
  std::size_t degree(Vertex v) const noexcept { return adj_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const noexcept;
  std::size_t component_count() const;

  SignedMatrix adjacency() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

// Signed graph carried by its signed adjacency matrix: symmetric, zero
// diagonal.
class SignedGraph {
 public:
  explicit SignedGraph(SignedMatrix adjacency);
  // Signs are given per edge of g in g.edges() order; each must be +1 or -1.
  SignedGraph(const Graph& g, const std::vector<int>& signs);
  static SignedGraph all_positive(const Graph& g);

  std::size_t order() const noexcept { return a_.rows(); }
  const SignedMatrix& adjacency() const noexcept { return a_; }
  int sign(Vertex u, Vertex v) const noexcept { return a_(u, v); }
  bool has_edge() const noexcept;

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

 private:
  SignedMatrix a_;
};

// Two-sided vertex partition.
struct Bipartition {
  std::vector<Vertex> left;
  std::vector<Vertex> right;
};

// Proper 2-colouring by BFS, lowest vertex of each component on the left.
std::optional<Bipartition> bipartition(const Graph& g);

Graph ground(const SignedGraph& sg);
SignedGraph star(const SignedMatrix& c);

std::optional<std::size_t> is_regular(const Graph& g);

}  // namespace sgraph
