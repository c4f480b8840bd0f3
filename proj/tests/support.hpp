#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "sgraph/constructions.hpp"
#include "sgraph/error.hpp"
#include "sgraph/graph.hpp"
#include "sgraph/matrix.hpp"
#include "sgraph/spectra.hpp"
#include "sgraph/twographs.hpp"

namespace sgtest {

using sgraph::Graph;
using sgraph::SignedGraph;
using sgraph::SignedMatrix;

inline constexpr std::uint64_t kSeed = 20170923;

// The worked two-graph example: triples on {1..6} (stored 0-based).
inline std::vector<sgraph::Triple> example_triples() {
  const int t[10][3] = {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6},
                        {2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}};
  std::vector<sgraph::Triple> out;
  for (const auto& r : t) out.push_back({sgraph::Vertex(r[0] - 1), sgraph::Vertex(r[1] - 1), sgraph::Vertex(r[2] - 1)});
  return out;
}

inline SignedMatrix example_matrix() {
  return SignedMatrix{{0, 1, 1, 1, 1, 1},   {1, 0, -1, -1, 1, 1}, {1, -1, 0, 1, -1, 1},
                      {1, -1, 1, 0, 1, -1}, {1, 1, -1, 1, 0, -1}, {1, 1, 1, -1, -1, 0}};
}

// Descendant edges 23, 24, 35, 46, 56 at vertex 1, 0-based.
inline std::vector<sgraph::Edge> example_descendant_edges() { return {{1, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 5}}; }

inline SignedMatrix h2() { return SignedMatrix{{1, 1}, {1, -1}}; }

// Naive triple-loop product.
using Dense = std::vector<std::vector<std::int64_t>>;

inline Dense product(const SignedMatrix& a, const SignedMatrix& b) {
  Dense c(a.rows(), std::vector<std::int64_t>(b.cols(), 0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k) c[i][j] += a(i, k) * b(k, j);
  return c;
}

inline std::optional<std::int64_t> scalar(const Dense& d) {
  const std::int64_t alpha = d[0][0];
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d[i].size(); ++j)
      if (d[i][j] != (i == j ? alpha : 0)) return std::nullopt;
  return alpha;
}

// alpha with C C^t = C^t C = alpha I, by direct multiplication.
inline std::optional<std::int64_t> orthogonal_alpha(const SignedMatrix& c) {
  const auto x = scalar(product(c, c.transposed()));
  const auto y = scalar(product(c.transposed(), c));
  if (!x || !y || *x != *y || *x < 1) return std::nullopt;
  return x;
}

// Quadratic character from the explicit set of nonzero squares mod q.
inline int legendre(std::int64_t a, std::int64_t q) {
  a = ((a % q) + q) % q;
  if (a == 0) return 0;
  std::set<std::int64_t> squares;
  for (std::int64_t x = 1; x < q; ++x) squares.insert(x * x % q);
  return squares.count(a) ? 1 : -1;
}

// Switching classes counted as orbits of signature masks under XOR with the
// vertex incidence masks (union-find), independent of any canonical form.
inline std::size_t orbit_count(const Graph& g) {
  const std::size_t m = g.size();
  std::vector<std::uint32_t> inc(g.order(), 0);
  for (std::size_t e = 0; e < m; ++e) {
    inc[g.edges()[e].first] |= 1u << e;
    inc[g.edges()[e].second] |= 1u << e;
  }
  std::vector<std::uint32_t> parent(std::size_t{1} << m);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint32_t s = 0; s < parent.size(); ++s)
    for (auto mask : inc) {
      const auto a = find(s), b = find(s ^ mask);
      if (a != b) parent[a] = b;
    }
  std::size_t roots = 0;
  for (std::uint32_t s = 0; s < parent.size(); ++s) roots += find(s) == s;
  return roots;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<sgraph::Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

inline std::vector<int> random_signs(std::size_t m, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<int> s(m);
  for (auto& x : s) x = coin(rng) ? 1 : -1;
  return s;
}

inline SignedGraph random_signed_graph(std::size_t n, double p, std::mt19937_64& rng) {
  const Graph g = random_graph(n, p, rng);
  return SignedGraph(g, random_signs(g.size(), rng));
}

inline SignedMatrix random_signed_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-1, 1);
  SignedMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, d(rng));
  return m;
}

// Signing of K_n from a mask over its edges in lexicographic order.
inline SignedGraph complete_signing(std::size_t n, std::uint64_t mask) {
  const Graph k = Graph::complete(n);
  std::vector<int> signs(k.size());
  for (std::size_t e = 0; e < k.size(); ++e) signs[e] = (mask >> e) & 1 ? -1 : 1;
  return SignedGraph(k, signs);
}

// trace(A^p) for p = 1..n in exact integers; the power sums of the
// eigenvalues must reproduce them.
inline std::vector<std::int64_t> trace_powers(const SignedMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::int64_t> out;
  Dense p(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) p[i][i] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Dense q(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        if (p[i][l])
          for (std::size_t j = 0; j < n; ++j) q[i][j] += p[i][l] * a(l, j);
    p = std::move(q);
    std::int64_t t = 0;
    for (std::size_t i = 0; i < n; ++i) t += p[i][i];
    out.push_back(t);
  }
  return out;
}

inline bool power_sums_match(const std::vector<double>& eig, const SignedMatrix& a, double rel = 1e-7) {
  const auto traces = trace_powers(a);
  for (std::size_t k = 1; k <= traces.size(); ++k) {
    double s = 0, scale = 0;
    for (double x : eig) {
      s += std::pow(x, double(k));
      scale += std::pow(std::abs(x), double(k));
    }
    if (std::abs(s - double(traces[k - 1])) > rel * std::max(1.0, scale)) return false;
  }
  return true;
}

inline std::vector<double> cycle_eigenvalues(std::size_t n) {
  std::vector<double> v;
  for (std::size_t k = 0; k < n; ++k) v.push_back(2 * std::cos(2 * std::numbers::pi * double(k) / double(n)));
  return v;
}

inline sgraph::Spectrum spec(std::vector<double> values) {
  return sgraph::Spectrum::from_values(std::move(values), sgraph::kDefaultGroupingTol);
}

// Expand {value: multiplicity} lists into a spectrum.
inline sgraph::Spectrum spec_of(std::initializer_list<std::pair<double, std::size_t>> pairs) {
  std::vector<double> v;
  for (auto [x, m] : pairs) v.insert(v.end(), m, x);
  return spec(v);
}

// Kind of the sgraph::Error thrown by f, if any.
template <typename F>
std::optional<sgraph::ErrorKind> error_of(F&& f) {
  try {
    f();
  } catch (const sgraph::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace sgtest

#define CHECK_ERROR(expr, k) CHECK(::sgtest::error_of([&] { (void)(expr); }) == ::sgraph::ErrorKind::k)
