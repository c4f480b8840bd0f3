#include "sgraph/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "sgraph/error.hpp"
#include "sgraph/kernels.hpp"

namespace sgraph {

Spectrum Spectrum::from_values(std::vector<double> values, double tol) {
  if (!(tol > 0)) throw Error(ErrorKind::PreconditionFailed, "grouping tolerance must be positive");
  std::sort(values.begin(), values.end(), std::greater<>());
  Spectrum s;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= values.size(); ++i) {
    if (i == values.size() || values[i - 1] - values[i] >= tol) {
      double sum = 0;
      for (std::size_t k = start; k < i; ++k) sum += values[k];
      s.pairs.push_back({sum / static_cast<double>(i - start), i - start});
      start = i;
    }
  }
  return s;
}

std::size_t Spectrum::order() const noexcept {
  std::size_t n = 0;
  for (const auto& p : pairs) n += p.multiplicity;
  return n;
}

std::vector<double> Spectrum::values() const {
  std::vector<double> out;
  out.reserve(order());
  for (const auto& p : pairs) out.insert(out.end(), p.multiplicity, p.value);
  return out;
}

double Spectrum::largest() const {
  if (pairs.empty()) throw Error(ErrorKind::InvalidShape, "empty spectrum");
  return pairs.front().value;
}

double Spectrum::second_largest() const {
  const auto v = values();
  if (v.size() < 2) throw Error(ErrorKind::InvalidShape, "spectrum has fewer than two eigenvalues");
  return v[1];
}

bool spectra_match(const Spectrum& a, const Spectrum& b, double tol) {
  const auto x = a.values();
  const auto y = b.values();
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (std::abs(x[i] - y[i]) > tol) return false;
  return true;
}

RealMatrix RealMatrix::from(const SignedMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NonSquare, "eigenvalues need a square matrix");
  RealMatrix r{m.rows(), {}};
  r.entries.assign(m.data().begin(), m.data().end());
  return r;
}

RealMatrix RealMatrix::from(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::NonSquare, "eigenvalues need a square matrix");
  RealMatrix r{m.rows(), std::vector<double>(m.rows() * m.cols())};
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.entries[i * m.cols() + j] = static_cast<double>(m(i, j));
  return r;
}

std::vector<double> jacobi_eigenvalues(const RealMatrix& m) {
  const std::size_t n = m.n;
  if (m.entries.size() != n * n) throw Error(ErrorKind::InvalidShape, "entry count mismatch");
  std::vector<double> a = m.entries;
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

  double max_norm = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (at(i, j) != at(j, i)) throw Error(ErrorKind::NotSymmetric, "matrix is not symmetric");
      max_norm = std::max(max_norm, std::abs(at(i, j)));
    }
  const double threshold = kJacobiRelativeThreshold * max_norm;

  auto off_diagonal_max = [&] {
    double off = 0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(at(p, q)));
    return off;
  };

  bool converged = max_norm == 0;
  for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
    if (off_diagonal_max() < threshold) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 1 / (2 * theta);
        } else {
          t = 1 / (std::abs(theta) + std::sqrt(theta * theta + 1));
          if (theta < 0) t = -t;
        }
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = at(q, p) = 0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = at(r, p);
          const double arq = at(r, q);
          at(r, p) = at(p, r) = c * arp - s * arq;
          at(r, q) = at(q, r) = c * arq + s * arp;
        }
      }
  }
  if (!converged && off_diagonal_max() >= threshold) {
    throw Error(ErrorKind::NoConvergence, "Jacobi iteration exceeded the sweep cap");
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

Spectrum eigenvalues_symmetric(const RealMatrix& m, double tol) {
  return Spectrum::from_values(jacobi_eigenvalues(m), tol);
}

Spectrum eigenvalues_symmetric(const SignedMatrix& m, double tol) {
  return eigenvalues_symmetric(RealMatrix::from(m), tol);
}

Spectrum graph_spectrum(const Graph& g, double tol) { return eigenvalues_symmetric(g.adjacency(), tol); }

Spectrum spectrum_union(const Spectrum& a, const Spectrum& b, double tol) {
  auto values = a.values();
  const auto more = b.values();
  values.insert(values.end(), more.begin(), more.end());
  return Spectrum::from_values(std::move(values), tol);
}

namespace {

std::int64_t isqrt_exact(std::int64_t v, bool& exact) {
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  exact = r * r == v;
  return r;
}

}  // namespace

std::optional<TwoEigCertificate> certify_two_eigenvalues(const SignedGraph& sg) {
  if (!sg.has_edge()) throw Error(ErrorKind::EmptyGraph, "signed graph has no edges");
  const SignedMatrix& a = sg.adjacency();
  const std::size_t n = sg.order();
  const IntMatrix sq = kernels::gram(a);  // A symmetric, so A A^t = A^2

  std::int64_t coef_a = 0;
  bool found = false;
  for (std::size_t i = 0; i < n && !found; ++i)
    for (std::size_t j = 0; j < n && !found; ++j)
      if (i != j && a(i, j) != 0) {
        coef_a = -sq(i, j) * a(i, j);
        found = true;
      }
  const std::int64_t coef_b = -sq(0, 0);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (sq(i, j) + coef_a * a(i, j) + (i == j ? coef_b : 0) != 0) return std::nullopt;

  const std::int64_t disc = coef_a * coef_a - 4 * coef_b;
  if (disc <= 0) return std::nullopt;
  const double root = std::sqrt(static_cast<double>(disc));

  TwoEigCertificate cert{coef_a, coef_b, (-coef_a + root) / 2, (-coef_a - root) / 2, 0, 0};
  const auto order = static_cast<std::int64_t>(n);
  if (coef_a == 0) {
    if (order % 2 != 0) throw std::logic_error("zero-trace identity violated: odd order with a = 0");
    cert.mult_lambda = cert.mult_mu = n / 2;
  } else {
    bool exact = false;
    const std::int64_t s = isqrt_exact(disc, exact);
    const std::int64_t num = order * (coef_a + s);
    if (!exact || num % (2 * s) != 0) {
      throw std::logic_error("zero-trace identity violated: irrational roots with a != 0");
    }
    const std::int64_t ml = num / (2 * s);
    cert.mult_lambda = static_cast<std::size_t>(ml);
    cert.mult_mu = static_cast<std::size_t>(order - ml);
  }
  return cert;
}

std::int64_t degree_from_certificate(const TwoEigCertificate& cert) { return -cert.b; }

std::optional<OrthogonalityCertificate> bipartite_two_eig_check(const SignedGraph& sg) {
  const auto parts = bipartition(ground(sg));
  if (!parts) throw Error(ErrorKind::NotBipartite, "ground graph is not bipartite");
  return bipartite_two_eig_check(sg, *parts);
}

std::optional<OrthogonalityCertificate> bipartite_two_eig_check(const SignedGraph& sg,
                                                                 const Bipartition& parts) {
  const std::size_t n = sg.order();
  std::vector<int> side(n, -1);
  auto assign = [&](const std::vector<Vertex>& vs, int s) {
    for (Vertex v : vs) {
      if (v >= n || side[v] >= 0) throw Error(ErrorKind::NotBipartite, "parts do not partition the vertices");
      side[v] = s;
    }
  };
  assign(parts.left, 0);
  assign(parts.right, 1);
  if (std::find(side.begin(), side.end(), -1) != side.end()) {
    throw Error(ErrorKind::NotBipartite, "parts do not cover the vertices");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (sg.sign(i, j) != 0 && side[i] == side[j]) {
        throw Error(ErrorKind::NotBipartite, "edge inside a part");
      }
  if (parts.left.size() != parts.right.size()) {
    throw Error(ErrorKind::UnequalParts, "parts have different sizes");
  }
  const std::size_t half = parts.left.size();
  SignedMatrix c(half, half);
  for (std::size_t i = 0; i < half; ++i)
    for (std::size_t j = 0; j < half; ++j) c.set(i, j, sg.sign(parts.left[i], parts.right[j]));
  return is_orthogonal(c);
}

}  // namespace sgraph
