#include "sgraph/lifts.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "sgraph/constructions.hpp"
#include "sgraph/error.hpp"
#include "sgraph/orthogonal.hpp"

namespace sgraph {

LiftedGraph two_lift(const SignedGraph& sg) {
  const std::size_t n = sg.order();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const int s = sg.sign(u, v);
      if (s > 0) {
        edges.emplace_back(u, v);
        edges.emplace_back(u + n, v + n);
      } else if (s < 0) {
        edges.emplace_back(u, v + n);
        edges.emplace_back(u + n, v);
      }
    }
  return {n, Graph(2 * n, std::move(edges))};
}

LiftSpectrumComparison lift_spectrum_compare(const SignedGraph& sg, double tol) {
  LiftSpectrumComparison out{
      graph_spectrum(two_lift(sg).graph, tol),
      spectrum_union(graph_spectrum(ground(sg), tol), eigenvalues_symmetric(sg.adjacency(), tol), tol),
      false};
  out.match = spectra_match(out.lift, out.expected, tol);
  return out;
}

bool lift_spectrum_check(const SignedGraph& sg, double tol) { return lift_spectrum_compare(sg, tol).match; }

std::string_view to_string(RamanujanMode m) {
  return m == RamanujanMode::PaperLiteral ? "paper-literal" : "bipartite-strict";
}

std::optional<RamanujanMode> parse_ramanujan_mode(std::string_view s) {
  if (s == "paper-literal" || s == "paper") return RamanujanMode::PaperLiteral;
  if (s == "bipartite-strict" || s == "strict") return RamanujanMode::BipartiteStrict;
  return std::nullopt;
}

namespace {

std::size_t regular_degree(const Graph& g) {
  const auto d = is_regular(g);
  if (!d) throw Error(ErrorKind::NotRegular, "graph is not regular");
  return *d;
}

double ramanujan_bound(std::size_t d) { return 2 * std::sqrt(static_cast<double>(d) - 1); }

}  // namespace

RamanujanReport is_ramanujan(const Graph& g, RamanujanMode mode) {
  const std::size_t d = regular_degree(g);
  if (d == 0) throw Error(ErrorKind::DegreeTooSmall, "Ramanujan bound needs degree >= 1");
  auto values = jacobi_eigenvalues(RealMatrix::from(g.adjacency()));
  RamanujanReport r{d, g.order(), 0, ramanujan_bound(d), mode, false};
  if (mode == RamanujanMode::PaperLiteral) {
    r.lambda2 = values[1];
  } else {
    // values[0] is d for a d-regular graph; the last one is -d when bipartite.
    values.erase(values.begin());
    if (bipartition(g) && !values.empty()) values.pop_back();
    for (double v : values) r.lambda2 = std::max(r.lambda2, std::abs(v));
  }
  r.verdict = r.lambda2 <= r.bound + kRamanujanSlack;
  return r;
}

bool is_good_signature(const SignedGraph& sg) {
  const std::size_t d = regular_degree(ground(sg));
  if (d < 2) throw Error(ErrorKind::DegreeTooSmall, "good signatures need degree >= 2");
  const double lambda1 = jacobi_eigenvalues(RealMatrix::from(sg.adjacency())).front();
  return lambda1 <= ramanujan_bound(d) + kRamanujanSlack;
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
  return Graph(g.order(), std::move(edges));
}

Graph bipartite_complement(const Graph& g, const Bipartition& parts) {
  std::vector<int> side(g.order(), -1);
  for (int s = 0; s < 2; ++s)
    for (Vertex v : s == 0 ? parts.left : parts.right) {
      if (v >= g.order() || side[v] >= 0) throw Error(ErrorKind::NotBipartition, "parts overlap or exceed range");
      side[v] = s;
    }
  if (std::find(side.begin(), side.end(), -1) != side.end()) {
    throw Error(ErrorKind::NotBipartition, "parts do not cover the vertices");
  }
  if (parts.left.size() != parts.right.size()) throw Error(ErrorKind::NotBipartition, "parts differ in size");
  for (const auto& [u, v] : g.edges())
    if (side[u] == side[v]) throw Error(ErrorKind::NotBipartition, "edge inside a part");

  std::vector<Edge> edges;
  for (Vertex x : parts.left)
    for (Vertex y : parts.right)
      if (!g.has_edge(x, y)) edges.emplace_back(x, y);
  return Graph(g.order(), std::move(edges));
}

LemmaRamReport lemma_ram_check(const Graph& g) {
  const std::size_t k = regular_degree(g);
  const std::size_t n = g.order();
  const auto km1 = static_cast<std::int64_t>(k) - 1;
  LemmaRamReport r{k, n, static_cast<double>(km1 * km1) / 4 + static_cast<double>(k) + 2, false, std::nullopt};
  // (k-1)^2/4 + k + 2 <= n, scaled by 4 to stay in integers.
  r.inequality_holds = km1 * km1 + 4 * (static_cast<std::int64_t>(k) + 2) <= 4 * static_cast<std::int64_t>(n);
  if (r.inequality_holds) {
    r.complement = is_ramanujan(complement(g), RamanujanMode::PaperLiteral);
    if (!r.complement->verdict) {
      throw std::logic_error("complement failed the Ramanujan bound although the inequality holds");
    }
  }
  return r;
}

SymmetricGroundReport ground_ramanujan_from_symmetric(const SignedMatrix& c, double tol) {
  auto fail = [](const std::string& why) { return Error(ErrorKind::PreconditionFailed, why); };
  if (!c.is_square()) throw fail("C must be square");
  if (!c.is_symmetric()) throw fail("C must be symmetric");
  if (!c.has_zero_diagonal()) throw fail("C must have zero diagonal");
  const auto cert = is_orthogonal(c);
  if (!cert) throw fail("C must be orthogonal");
  const std::int64_t alpha = cert->alpha;
  if (alpha < 2) throw fail("alpha = " + std::to_string(alpha) + " < 2");
  const std::size_t n = c.rows();
  const auto k = static_cast<std::int64_t>(n) - 1 - alpha;
  if ((k - 1) * (k - 1) + 4 * (k + 2) > 4 * static_cast<std::int64_t>(n)) {
    throw fail("(k-1)^2/4 + k + 2 = " + std::to_string(static_cast<double>((k - 1) * (k - 1)) / 4 + k + 2) +
               " exceeds n = " + std::to_string(n) + " for k = " + std::to_string(k));
  }

  const SignedGraph sg(c);
  const Graph g = ground(sg);
  SymmetricGroundReport r{alpha,
                          n,
                          static_cast<std::size_t>(k),
                          jacobi_eigenvalues(RealMatrix::from(c)).front(),
                          ramanujan_bound(static_cast<std::size_t>(alpha)),
                          is_good_signature(sg),
                          is_ramanujan(g),
                          lemma_ram_check(complement(g)),
                          false};
  const bool lambda_ok = std::abs(r.lambda1 - std::sqrt(static_cast<double>(alpha))) <= tol &&
                         r.lambda1 <= r.signature_bound + kRamanujanSlack;
  r.verdict = lambda_ok && r.good_signature && r.ground.degree == static_cast<std::size_t>(alpha) &&
              r.ground.verdict && r.complement_lemma.inequality_holds;
  return r;
}

KC4Report k_c4_complement(std::size_t k, double tol) {
  if (k < 2) throw Error(ErrorKind::KTooSmall, "k must be at least 2");
  // Copy c: left vertices 2c, 2c+1; right vertices 2k+2c, 2k+2c+1; all four
  // cross pairs adjacent (C4 = K_{2,2}).
  std::vector<Edge> edges;
  Bipartition parts;
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t a = 0; a < 2; ++a) {
      parts.left.push_back(2 * c + a);
      parts.right.push_back(2 * k + 2 * c + a);
      for (std::size_t b = 0; b < 2; ++b) edges.emplace_back(2 * c + a, 2 * k + 2 * c + b);
    }
  const Graph kc4(4 * k, std::move(edges));
  Graph g = bipartite_complement(kc4, parts);

  const double top = 2.0 * static_cast<double>(k) - 2;
  std::vector<double> expected{top, -top};
  expected.insert(expected.end(), k - 1, 2.0);
  expected.insert(expected.end(), k - 1, -2.0);
  expected.insert(expected.end(), 2 * k, 0.0);

  KC4Report r{std::move(g), std::move(parts), Spectrum::from_values(std::move(expected), tol), {}, false};
  r.computed = graph_spectrum(r.graph, tol);
  r.match = spectra_match(r.computed, r.expected, tol);
  return r;
}

std::string_view to_string(TableFamily f) {
  switch (f) {
    case TableFamily::Knn: return "knn";
    case TableFamily::KnnMinusM: return "knn-minus-m";
    case TableFamily::NC4Complement: return "nc4-complement";
  }
  return "?";
}

std::optional<TableFamily> parse_table_family(std::string_view s) {
  for (auto f : {TableFamily::Knn, TableFamily::KnnMinusM, TableFamily::NC4Complement})
    if (s == to_string(f)) return f;
  return std::nullopt;
}

namespace {

void append(std::vector<double>& v, double value, std::size_t count) { v.insert(v.end(), count, value); }

void append_pm(std::vector<double>& v, double value, std::size_t count) {
  append(v, value, count);
  append(v, -value, count);
}

std::uint64_t paley_prime_for(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::UnsupportedOrder, "n = " + std::to_string(n) + " too small");
  const std::uint64_t q = n - 1;
  if (q % 4 != 1 || !is_prime(q)) {
    throw Error(ErrorKind::UnsupportedOrder,
                "n - 1 = " + std::to_string(q) + " is not a prime congruent to 1 mod 4");
  }
  return q;
}

unsigned sylvester_exponent_for(std::size_t n) {
  if (n < 2 || (n & (n - 1)) != 0 || n > (std::size_t{1} << kMaxSylvesterExponent)) {
    throw Error(ErrorKind::UnsupportedOrder, "n = " + std::to_string(n) + " is not a power of two in [2, 4096]");
  }
  unsigned k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

}  // namespace

SignedGraph table_signature(TableFamily family, std::size_t n) {
  switch (family) {
    case TableFamily::Knn: return star(sylvester_hadamard(sylvester_exponent_for(n)));
    case TableFamily::KnnMinusM: return star(paley_conference(paley_prime_for(n)));
    case TableFamily::NC4Complement:
      return star(conference_block(paley_conference(paley_prime_for(n))).matrix);
  }
  throw Error(ErrorKind::UnsupportedOrder, "unknown family");
}

TableRowReport table_row(TableFamily family, std::size_t n, double tol) {
  const SignedGraph sg = table_signature(family, n);
  const Graph g = ground(sg);
  const double nd = static_cast<double>(n);

  std::vector<double> formula;
  std::vector<double> printed;
  switch (family) {
    case TableFamily::Knn:
      append_pm(formula, nd, 1);
      append_pm(formula, std::sqrt(nd), n);
      append(formula, 0.0, 2 * n - 2);
      printed = formula;
      break;
    case TableFamily::KnnMinusM:
      append_pm(formula, nd - 1, 1);
      append_pm(formula, std::sqrt(nd - 1), n);
      append_pm(formula, 1.0, n - 1);
      printed = formula;
      break;
    case TableFamily::NC4Complement:
      append_pm(printed, 2 * nd - 2, 1);
      append_pm(printed, 2.0, n - 1);
      append(printed, 0.0, 2 * n);
      formula = printed;
      append_pm(formula, std::sqrt(2 * nd - 2), 2 * n);
      break;
  }

  const auto comparison = lift_spectrum_compare(sg, tol);
  const Spectrum signed_spectrum = eigenvalues_symmetric(sg.adjacency(), tol);
  const auto degree = is_regular(g);
  if (!degree) throw std::logic_error("table ground graph is not regular");

  TableRowReport r{family,
                   n,
                   g.order(),
                   *degree,
                   is_good_signature(sg),
                   signed_spectrum.largest(),
                   ramanujan_bound(*degree),
                   graph_spectrum(g, tol),
                   signed_spectrum,
                   comparison.lift,
                   comparison.expected,
                   Spectrum::from_values(std::move(formula), tol),
                   Spectrum::from_values(std::move(printed), tol),
                   comparison.match,
                   false,
                   false,
                   is_ramanujan(two_lift(sg).graph).verdict,
                   std::nullopt,
                   false};
  r.formula_match = spectra_match(r.lift, r.formula, tol);
  r.printed_row_match = spectra_match(r.lift, r.printed_row, tol);
  if (!r.printed_row_match) {
    r.discrepancy = "printed table row lists " + std::to_string(r.printed_row.order()) +
                    " eigenvalues but the lift has " + std::to_string(r.lift.order()) +
                    " vertices; the signed spectrum +-sqrt(" + std::to_string(2 * n - 2) + ")^" +
                    std::to_string(2 * n) + " is missing";
  }
  const bool printed_required = family != TableFamily::NC4Complement;
  r.pass = r.good_signature && r.union_match && r.formula_match && r.lift_ramanujan &&
           (r.printed_row_match || !printed_required);
  return r;
}

}  // namespace sgraph
