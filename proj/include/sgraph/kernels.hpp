#pragma once

#include "sgraph/matrix.hpp"

// Exact integer product kernels. Every kernel has a serial reference and an
// OpenMP version; the two must agree bit for bit.
namespace sgraph::kernels {

namespace serial {
IntMatrix product(const SignedMatrix& a, const SignedMatrix& b);
IntMatrix gram(const SignedMatrix& a);  // a * a^t
}  // namespace serial

namespace parallel {
IntMatrix product(const SignedMatrix& a, const SignedMatrix& b);
IntMatrix gram(const SignedMatrix& a);
}  // namespace parallel

// Picks the parallel kernel once the work is large enough to pay for it.
IntMatrix product(const SignedMatrix& a, const SignedMatrix& b);
IntMatrix gram(const SignedMatrix& a);

// Number of OpenMP threads available (1 when built without OpenMP).
int max_threads();

}  // namespace sgraph::kernels
