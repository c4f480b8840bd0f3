#pragma once

#include <cstdint>
#include <optional>

#include "sgraph/matrix.hpp"

namespace sgraph {

// Proof that C C^t = C^t C = alpha I with alpha >= 1, checked exactly.
struct OrthogonalityCertificate {
  std::int64_t alpha;
  friend bool operator==(const OrthogonalityCertificate&, const OrthogonalityCertificate&) = default;
};

// Throws NonSquare for rectangular input.
std::optional<OrthogonalityCertificate> is_orthogonal(const SignedMatrix& c);

// A matrix together with its certificate.
struct CertifiedMatrix {
  SignedMatrix matrix;
  OrthogonalityCertificate certificate;
};

// Throws NotOrthogonal when is_orthogonal fails.
CertifiedMatrix certify(SignedMatrix c);

}  // namespace sgraph
