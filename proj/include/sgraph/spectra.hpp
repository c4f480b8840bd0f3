#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sgraph/graph.hpp"
#include "sgraph/matrix.hpp"
#include "sgraph/orthogonal.hpp"

namespace sgraph {

inline constexpr double kDefaultGroupingTol = 1e-6;
inline constexpr double kJacobiRelativeThreshold = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

struct SpectrumEntry {
  double value;
  std::size_t multiplicity;
};

// Eigenvalue multiset, grouped, descending by value.
struct Spectrum {
  std::vector<SpectrumEntry> pairs;

  // Groups values whose consecutive gaps (after sorting) are below tol; each
  // group is represented by its mean.
  static Spectrum from_values(std::vector<double> values, double tol);

  std::size_t order() const noexcept;
  // Expanded eigenvalues, descending, each group repeated by multiplicity.
  std::vector<double> values() const;
  double largest() const;
  // Second entry of values(); throws InvalidShape for order < 2.
  double second_largest() const;
};

// Same order and matching expanded values within tol.
bool spectra_match(const Spectrum& a, const Spectrum& b, double tol);

struct RealMatrix {
  std::size_t n;
  std::vector<double> entries;  // row-major n*n

  static RealMatrix from(const SignedMatrix& m);
  static RealMatrix from(const IntMatrix& m);
};

// Raw eigenvalues by cyclic Jacobi rotations, descending. Throws
// NotSymmetric for an asymmetric input and NoConvergence after 100 sweeps.
std::vector<double> jacobi_eigenvalues(const RealMatrix& m);

Spectrum eigenvalues_symmetric(const RealMatrix& m, double tol = kDefaultGroupingTol);
Spectrum eigenvalues_symmetric(const SignedMatrix& m, double tol = kDefaultGroupingTol);
Spectrum graph_spectrum(const Graph& g, double tol = kDefaultGroupingTol);

Spectrum spectrum_union(const Spectrum& a, const Spectrum& b, double tol = kDefaultGroupingTol);

// Exact witness of A^2 + aA + bI = 0 for a signed adjacency A, with the two
// roots lambda > mu and their multiplicities.
struct TwoEigCertificate {
  std::int64_t a;
  std::int64_t b;
  double lambda;
  double mu;
  std::size_t mult_lambda;
  std::size_t mult_mu;
};

// Throws EmptyGraph when sg has no edge.
std::optional<TwoEigCertificate> certify_two_eigenvalues(const SignedGraph& sg);

// The common vertex degree forced by a certificate: -lambda*mu = -b.
std::int64_t degree_from_certificate(const TwoEigCertificate& cert);

// Extracts the block C of a bipartite signed adjacency [[O, C], [C^t, O]]
// and tests it for orthogonality. Throws NotBipartite or UnequalParts.
std::optional<OrthogonalityCertificate> bipartite_two_eig_check(const SignedGraph& sg);
std::optional<OrthogonalityCertificate> bipartite_two_eig_check(const SignedGraph& sg,
                                                                 const Bipartition& parts);

}  // namespace sgraph
