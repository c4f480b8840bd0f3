#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "sgraph/graph.hpp"

namespace sgraph {

using Triple = std::array<Vertex, 3>;

// A set of 3-subsets of {0..n-1} in which every 4-subset contains an even
// number of members. Triples are kept sorted, each ascending.
class TwoGraph {
 public:
  std::size_t order() const noexcept { return n_; }
  const std::vector<Triple>& triples() const noexcept { return triples_; }
  bool contains(Vertex x, Vertex y, Vertex z) const;

  friend bool operator==(const TwoGraph&, const TwoGraph&) = default;

 private:
  friend std::optional<TwoGraph> validate_twograph(std::size_t, std::vector<Triple>);
  TwoGraph(std::size_t n, std::vector<Triple> triples);

  std::size_t n_;
  std::vector<Triple> triples_;
  std::vector<bool> member_;  // n^3 membership table over sorted triples
};

// Throws BadTriple for out-of-range, repeated-vertex or duplicate triples.
std::optional<TwoGraph> validate_twograph(std::size_t n, std::vector<Triple> triples);

// Number of 4-subsets holding an odd count of the given triples; serial
// reference and OpenMP version. Zero means the parity condition holds.
// member[(a*n + b)*n + c] marks the triple a < b < c.
namespace serial {
std::size_t odd_quadruple_count(std::size_t n, const std::vector<bool>& member);
}
namespace parallel {
std::size_t odd_quadruple_count(std::size_t n, const std::vector<bool>& member);
}

// Common number of triples through each vertex pair, if constant.
std::optional<std::size_t> is_regular_twograph(const TwoGraph& t);

// y ~ z iff {x, y, z} is a triple; x itself is isolated.
Graph descendant(const TwoGraph& t, Vertex x);

// Complete signing of K_n: -1 on edges of g, +1 on non-edges.
SignedGraph signed_complete_from_graph(const Graph& g);

// Triples whose three edge signs multiply to -1. Throws NotComplete unless
// the ground graph is complete.
TwoGraph twograph_from_signed_complete(const SignedGraph& sg);

}  // namespace sgraph
