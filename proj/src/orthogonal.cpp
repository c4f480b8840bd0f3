#include "sgraph/orthogonal.hpp"

#include "sgraph/error.hpp"
#include "sgraph/kernels.hpp"

namespace sgraph {

std::optional<OrthogonalityCertificate> is_orthogonal(const SignedMatrix& c) {
  if (!c.is_square()) throw Error(ErrorKind::NonSquare, "orthogonality needs a square matrix");
  std::int64_t row_alpha = 0;
  if (!kernels::gram(c).is_scalar(row_alpha) || row_alpha < 1) return std::nullopt;
  std::int64_t col_alpha = 0;
  if (!kernels::gram(c.transposed()).is_scalar(col_alpha) || col_alpha != row_alpha) {
    return std::nullopt;
  }
  return OrthogonalityCertificate{row_alpha};
}

CertifiedMatrix certify(SignedMatrix c) {
  const auto cert = is_orthogonal(c);
  if (!cert) throw Error(ErrorKind::NotOrthogonal, "matrix is not an orthogonal signed matrix");
  return {std::move(c), *cert};
}

}  // namespace sgraph
