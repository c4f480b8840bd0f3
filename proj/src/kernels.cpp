#include "sgraph/kernels.hpp"

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sgraph/error.hpp"

namespace sgraph::kernels {

namespace {

constexpr std::size_t kParallelWork = std::size_t{1} << 16;

std::int64_t dot(std::span<const Trit> x, std::span<const Trit> y) {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < x.size(); ++k) s += std::int64_t{x[k]} * y[k];
  return s;
}

void check_product(const SignedMatrix& a, const SignedMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "inner dimensions differ");
  }
}

}  // namespace

namespace serial {

IntMatrix product(const SignedMatrix& a, const SignedMatrix& b) {
  check_product(a, b);
  const SignedMatrix bt = b.transposed();
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = dot(a.row(i), bt.row(j));
  return out;
}

IntMatrix gram(const SignedMatrix& a) {
  IntMatrix out(a.rows(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const std::int64_t v = dot(a.row(i), a.row(j));
      out(i, j) = v;
      out(j, i) = v;
    }
  return out;
}

}  // namespace serial

namespace parallel {

IntMatrix product(const SignedMatrix& a, const SignedMatrix& b) {
  check_product(a, b);
  const SignedMatrix bt = b.transposed();
  IntMatrix out(a.rows(), b.cols());
  const auto rows = static_cast<std::int64_t>(a.rows());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rows; ++i) {
    const auto r = static_cast<std::size_t>(i);
    for (std::size_t j = 0; j < b.cols(); ++j) out(r, j) = dot(a.row(r), bt.row(j));
  }
  return out;
}

IntMatrix gram(const SignedMatrix& a) {
  IntMatrix out(a.rows(), a.rows());
  const auto rows = static_cast<std::int64_t>(a.rows());
  // Row i writes only out(i, j) for j <= i and out(j, i) for j < i, so no two
  // iterations touch the same cell.
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < rows; ++i) {
    const auto r = static_cast<std::size_t>(i);
    for (std::size_t j = 0; j <= r; ++j) {
      const std::int64_t v = dot(a.row(r), a.row(j));
      out(r, j) = v;
      out(j, r) = v;
    }
  }
  return out;
}

}  // namespace parallel

IntMatrix product(const SignedMatrix& a, const SignedMatrix& b) {
  if (a.rows() * a.cols() * b.cols() >= kParallelWork && max_threads() > 1) {
    return parallel::product(a, b);
  }
  return serial::product(a, b);
}

IntMatrix gram(const SignedMatrix& a) {
  if (a.rows() * a.rows() * a.cols() >= kParallelWork && max_threads() > 1) {
    return parallel::gram(a);
  }
  return serial::gram(a);
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace sgraph::kernels
