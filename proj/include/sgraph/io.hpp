#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sgraph/graph.hpp"
#include "sgraph/matrix.hpp"
#include "sgraph/spectra.hpp"
#include "sgraph/twographs.hpp"

// Text formats. Vertices are 1-based on disk.
//   matrix:    "rows cols", then rows of integers in {-1, 0, 1}, optionally
//              followed by a certificate line "alpha = <integer>"
//   graph:     "n m", then m lines "u v [sign]" with sign in {+1, -1}
//   two-graph: "n t", then t lines of three vertices
// Blank lines and lines starting with '#' are ignored. Errors throw
// ParseError with the offending line number.
namespace sgraph::io {

SignedMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const SignedMatrix& m);

SignedGraph read_signed_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
void write_signed_graph(std::ostream& out, const SignedGraph& sg);

struct TwoGraphInput {
  std::size_t n;
  std::vector<Triple> triples;
};
TwoGraphInput read_twograph(std::istream& in);
void write_twograph(std::ostream& out, const TwoGraph& t);

SignedMatrix read_matrix_file(const std::string& path);
SignedGraph read_signed_graph_file(const std::string& path);
TwoGraphInput read_twograph_file(const std::string& path);

// Fixed six decimals; values that round to zero print as 0.000000.
std::string format_value(double v);
// "{v1: m1, v2: m2, ...}"
std::string format_spectrum(const Spectrum& s);

}  // namespace sgraph::io
