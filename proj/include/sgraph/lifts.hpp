#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "sgraph/graph.hpp"
#include "sgraph/spectra.hpp"

namespace sgraph {

// Double cover of a signed graph. Vertex (u, layer) maps to u + layer*base_n
// for layer in {0, 1}, so the adjacency is [[A+, A-], [A-, A+]].
struct LiftedGraph {
  std::size_t base_n;
  Graph graph;
};

LiftedGraph two_lift(const SignedGraph& sg);

struct LiftSpectrumComparison {
  Spectrum lift;
  Spectrum expected;  // spec(|A|) union spec(A^s)
  bool match;
};

LiftSpectrumComparison lift_spectrum_compare(const SignedGraph& sg, double tol = kDefaultGroupingTol);
bool lift_spectrum_check(const SignedGraph& sg, double tol = kDefaultGroupingTol);

inline constexpr double kRamanujanSlack = 1e-9;

enum class RamanujanMode { PaperLiteral, BipartiteStrict };

std::string_view to_string(RamanujanMode m);
std::optional<RamanujanMode> parse_ramanujan_mode(std::string_view s);

struct RamanujanReport {
  std::size_t degree;
  std::size_t n;
  // PaperLiteral: second largest eigenvalue. BipartiteStrict: largest |lambda|
  // after removing d and, for bipartite graphs, -d.
  double lambda2;
  double bound;  // 2 sqrt(d - 1)
  RamanujanMode mode;
  bool verdict;
};

// Throws NotRegular, or DegreeTooSmall for d = 0.
RamanujanReport is_ramanujan(const Graph& g, RamanujanMode mode = RamanujanMode::PaperLiteral);

// lambda_1(A^s) <= 2 sqrt(d - 1). Throws NotRegular or DegreeTooSmall (d < 2).
bool is_good_signature(const SignedGraph& sg);

Graph complement(const Graph& g);
// Flips cross-part adjacency only. Throws NotBipartition unless parts is a
// proper bipartition of g with equal sides.
Graph bipartite_complement(const Graph& g, const Bipartition& parts);

struct LemmaRamReport {
  std::size_t k;
  std::size_t n;
  double lhs;  // (k-1)^2/4 + k + 2
  bool inequality_holds;
  std::optional<RamanujanReport> complement;  // present iff the inequality holds
};

// For a k-regular g with (k-1)^2/4 + k + 2 <= n, confirms the complement is
// Ramanujan; a failure there throws std::logic_error. Throws NotRegular.
LemmaRamReport lemma_ram_check(const Graph& g);

struct SymmetricGroundReport {
  std::int64_t alpha;
  std::size_t n;
  std::size_t k;  // n - 1 - alpha, degree of the complement
  double lambda1;
  double signature_bound;  // 2 sqrt(alpha - 1)
  bool good_signature;
  RamanujanReport ground;
  LemmaRamReport complement_lemma;
  bool verdict;
};

// For symmetric zero-diagonal C with C^2 = alpha I, alpha >= 2 and the
// complement inequality, checks that C is a good signature of its Ramanujan
// ground graph. Throws PreconditionFailed naming the violated hypothesis.
SymmetricGroundReport ground_ramanujan_from_symmetric(const SignedMatrix& c, double tol = kDefaultGroupingTol);

struct KC4Report {
  Graph graph;
  Bipartition parts;
  Spectrum expected;
  Spectrum computed;
  bool match;
};

// kC4 with left side {a-vertices} and right side {b-vertices}, bipartite
// complement, and its spectrum against +-(2k-2), (+-2)^(k-1), 0^(2k).
// Throws KTooSmall for k < 2.
KC4Report k_c4_complement(std::size_t k, double tol = kDefaultGroupingTol);

enum class TableFamily { Knn, KnnMinusM, NC4Complement };

std::string_view to_string(TableFamily f);
std::optional<TableFamily> parse_table_family(std::string_view s);

struct TableRowReport {
  TableFamily family;
  std::size_t n;
  std::size_t base_order;
  std::size_t degree;
  bool good_signature;
  double lambda1_signed;
  double bound;
  Spectrum base;
  Spectrum signed_spectrum;
  Spectrum lift;
  Spectrum computed_union;
  Spectrum formula;          // closed-form lift spectrum
  Spectrum printed_row;      // the printed table row, for comparison
  bool union_match;          // lift == computed union
  bool formula_match;        // lift == closed form
  bool printed_row_match;    // lift == printed table row
  bool lift_ramanujan;
  std::optional<std::string> discrepancy;
  bool pass;
};

// Builds the ground graph and good signature of one table row (H_n*, Co_n*,
// or conference_block(Co_n)*), lifts it and compares spectra. Throws
// UnsupportedOrder when no construction exists for n.
TableRowReport table_row(TableFamily family, std::size_t n, double tol = kDefaultGroupingTol);

// Signed graph behind a table row, without the spectral work.
SignedGraph table_signature(TableFamily family, std::size_t n);

}  // namespace sgraph
