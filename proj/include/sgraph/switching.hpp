#pragma once

#include <cstdint>
#include <vector>

#include "sgraph/graph.hpp"

namespace sgraph {

// Negates row and column v.
SignedGraph resign(const SignedGraph& sg, Vertex v);

// Representative of the switching class: every edge of the BFS spanning
// forest (roots at the lowest index of each component, neighbours in
// ascending order) is made positive.
SignedGraph switching_canonical(const SignedGraph& sg);

// Throws GroundMismatch unless both graphs have the same order and edge set.
bool switching_equivalent(const SignedGraph& a, const SignedGraph& b);

// m - n + c, the cycle rank.
std::size_t switching_class_exponent(const Graph& g);
// 2^(m - n + c); throws Overflow when the exponent exceeds 63.
std::uint64_t count_switching_classes(const Graph& g);

inline constexpr std::size_t kMaxEnumerationEdges = 20;

// Brute force over all 2^m signatures, one canonical representative per
// class, ordered by the bitmask of negative edges (edge order of g.edges()).
// Throws TooManyEdges when m > 20.
std::vector<SignedGraph> enumerate_switching_classes(const Graph& g);

// Canonical negative-edge masks of all classes; serial reference and OpenMP
// version, identical output.
namespace serial {
std::vector<std::uint32_t> switching_class_masks(const Graph& g);
}
namespace parallel {
std::vector<std::uint32_t> switching_class_masks(const Graph& g);
}

}  // namespace sgraph
