#include "sgraph/constructions.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "sgraph/error.hpp"
#include "sgraph/kernels.hpp"

namespace sgraph {

namespace {

// Copies `block`, scaled by `sign`, into `out` at block position (bi, bj).
void put_block(SignedMatrix& out, const SignedMatrix& block, std::size_t bi, std::size_t bj, int sign) {
  const std::size_t n = block.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < block.cols(); ++j)
      out.set(bi * n + i, bj * block.cols() + j, sign * block(i, j));
}

std::int64_t require_alpha(const SignedMatrix& m, const char* what) {
  const auto cert = is_orthogonal(m);
  if (!cert) throw Error(ErrorKind::NotOrthogonal, std::string(what) + " is not orthogonal");
  return cert->alpha;
}

CertifiedMatrix confirm(SignedMatrix m, std::int64_t expected, const char* what) {
  const auto cert = is_orthogonal(m);
  if (!cert || cert->alpha != expected) {
    throw std::logic_error(std::string(what) + ": expected certificate " + std::to_string(expected) +
                           " not confirmed");
  }
  return {std::move(m), *cert};
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  unsigned __int128 result = 1;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

}  // namespace

SignedMatrix kronecker(const SignedMatrix& a, const SignedMatrix& b) {
  const std::size_t p = b.rows();
  const std::size_t q = b.cols();
  std::vector<Trit> entries(a.rows() * p * a.cols() * q);
  const std::size_t width = a.cols() * q;
  const auto rows = static_cast<std::int64_t>(a.rows());
#pragma omp parallel for schedule(static)
  for (std::int64_t ii = 0; ii < rows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Trit s = a(i, j);
      for (std::size_t k = 0; k < p; ++k)
        for (std::size_t l = 0; l < q; ++l)
          entries[(i * p + k) * width + j * q + l] = static_cast<Trit>(s * b(k, l));
    }
  }
  return SignedMatrix(a.rows() * p, width, std::move(entries));
}

CertifiedMatrix kronecker_orthogonal(const SignedMatrix& a, const SignedMatrix& b) {
  const std::int64_t alpha_a = require_alpha(a, "left factor");
  const std::int64_t alpha_b = require_alpha(b, "right factor");
  return confirm(kronecker(a, b), alpha_a * alpha_b, "kronecker_orthogonal");
}

SignedMatrix sylvester_hadamard(unsigned k) {
  if (k > kMaxSylvesterExponent) {
    throw Error(ErrorKind::OrderTooLarge, "Sylvester exponent " + std::to_string(k) + " exceeds 12");
  }
  const SignedMatrix h2{{1, 1}, {1, -1}};
  SignedMatrix h{{1}};
  for (unsigned i = 0; i < k; ++i) h = kronecker(h2, h);
  return h;
}

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

SignedMatrix paley_conference(std::uint64_t q) {
  if (q % 2 == 0) throw Error(ErrorKind::EvenInput, std::to_string(q) + " is even");
  if (!is_prime(q)) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not prime");
  // chi(-1) = (-1)^((q-1)/2); the core is symmetric only when this is +1.
  if (q % 4 != 1) throw Error(ErrorKind::NotOneModFour, std::to_string(q) + " is not 1 mod 4");

  std::vector<int> chi(q, -1);
  chi[0] = 0;
  for (std::uint64_t x = 1; x < q; ++x) chi[x] = pow_mod(x, (q - 1) / 2, q) == 1 ? 1 : -1;

  const std::size_t n = q + 1;
  SignedMatrix c(n, n);
  for (std::size_t i = 1; i < n; ++i) {
    c.set(0, i, 1);
    c.set(i, 0, 1);
    for (std::size_t j = 1; j < n; ++j) c.set(i, j, chi[(i - j + q) % q]);
  }
  return confirm(std::move(c), static_cast<std::int64_t>(q), "paley_conference").matrix;
}

CertifiedMatrix double_symmetric(const SignedMatrix& c) {
  if (!c.is_square()) throw Error(ErrorKind::NonSquare, "doubling needs a square matrix");
  if (!c.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "doubling needs a symmetric matrix");
  if (!c.has_zero_diagonal()) throw Error(ErrorKind::NonzeroDiagonal, "doubling needs a zero diagonal");
  const std::int64_t alpha = require_alpha(c, "doubling input");

  const SignedMatrix plus = add_identity(c, 1);
  const SignedMatrix minus = add_identity(c, -1);
  SignedMatrix b(2 * c.rows(), 2 * c.rows());
  put_block(b, plus, 0, 0, 1);
  put_block(b, minus, 0, 1, 1);
  put_block(b, minus, 1, 0, 1);
  put_block(b, plus, 1, 1, -1);
  return confirm(std::move(b), 2 * alpha + 2, "double");
}

CertifiedMatrix shift_antisymmetric(const SignedMatrix& c) {
  if (!c.is_antisymmetric()) throw Error(ErrorKind::NotAntisymmetric, "shift needs an antisymmetric matrix");
  const std::int64_t alpha = require_alpha(c, "shift input");
  return confirm(add_identity(c, 1), alpha + 1, "shift_antisymmetric");
}

WilliamsonQuadruple::WilliamsonQuadruple(SignedMatrix a1, SignedMatrix a2, SignedMatrix a3, SignedMatrix a4)
    : blocks_{std::move(a1), std::move(a2), std::move(a3), std::move(a4)} {
  const std::size_t n = blocks_[0].rows();
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& m = blocks_[i];
    if (!m.is_square() || m.rows() != n) {
      throw Error(ErrorKind::DimensionMismatch, "Williamson blocks must be square of one order");
    }
    weights_[i] = m.row_weight(0);
    for (std::size_t r = 1; r < n; ++r)
      if (m.row_weight(r) != weights_[i]) {
        throw Error(ErrorKind::NonConstantRowWeight,
                    "block A" + std::to_string(i + 1) + " has a varying number of nonzeros per row");
      }
  }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (!(kernels::product(blocks_[i], blocks_[j]) == kernels::product(blocks_[j], blocks_[i]))) {
        throw Error(ErrorKind::NotCommuting,
                    "A" + std::to_string(i + 1) + " and A" + std::to_string(j + 1) + " do not commute");
      }
}

SignedMatrix williamson_array(const std::array<SignedMatrix, 4>& a) {
  const std::size_t n = a[0].rows();
  SignedMatrix h(4 * n, 4 * n);
  // (block index, sign) for each of the 16 positions.
  constexpr int layout[4][4][2] = {
      {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
      {{1, -1}, {0, 1}, {3, -1}, {2, 1}},
      {{2, -1}, {3, 1}, {0, 1}, {1, -1}},
      {{3, -1}, {2, -1}, {1, 1}, {0, 1}},
  };
  for (std::size_t bi = 0; bi < 4; ++bi)
    for (std::size_t bj = 0; bj < 4; ++bj)
      put_block(h, a[static_cast<std::size_t>(layout[bi][bj][0])], bi, bj, layout[bi][bj][1]);
  return h;
}

std::optional<CertifiedMatrix> williamson(const WilliamsonQuadruple& q) {
  const auto& blocks = q.blocks();
  for (const auto& m : blocks)
    if (!m.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "Williamson blocks must be symmetric");

  IntMatrix sum(q.order(), q.order());
  std::int64_t weight = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    sum += kernels::gram(blocks[i]);
    weight += static_cast<std::int64_t>(q.weights()[i]);
  }
  std::int64_t alpha = 0;
  if (!sum.is_scalar(alpha) || alpha != weight) return std::nullopt;
  return confirm(williamson_array(blocks), weight, "williamson");
}

std::string_view to_string(WilliamsonPreset p) {
  switch (p) {
    case WilliamsonPreset::AllC: return "all-c";
    case WilliamsonPreset::TwoShifted: return "two-shifted";
    case WilliamsonPreset::FourShifted: return "four-shifted";
    case WilliamsonPreset::NonsymmetricAllC: return "nonsymmetric-all-c";
  }
  return "?";
}

std::optional<WilliamsonPreset> parse_williamson_preset(std::string_view s) {
  for (auto p : {WilliamsonPreset::AllC, WilliamsonPreset::TwoShifted, WilliamsonPreset::FourShifted,
                 WilliamsonPreset::NonsymmetricAllC})
    if (s == to_string(p)) return p;
  return std::nullopt;
}

CertifiedMatrix williamson_preset(const SignedMatrix& c, WilliamsonPreset preset) {
  auto violated = [&](const std::string& why) {
    return Error(ErrorKind::PresetPreconditionViolated, std::string(to_string(preset)) + ": " + why);
  };
  if (!c.is_square()) throw violated("C must be square");
  const auto cert = is_orthogonal(c);
  if (!cert) throw violated("C must be orthogonal");

  if (preset == WilliamsonPreset::NonsymmetricAllC) {
    // Orthogonality of the array only needs every A_i A_j^t symmetric; here
    // all of them equal C C^t = alpha I.
    return confirm(williamson_array({c, c, c, c}), 4 * cert->alpha, "williamson nonsymmetric");
  }

  if (!c.is_symmetric()) throw violated("C must be symmetric");
  std::optional<WilliamsonQuadruple> quad;
  switch (preset) {
    case WilliamsonPreset::AllC:
      quad.emplace(c, c, c, c);
      break;
    case WilliamsonPreset::TwoShifted:
      if (!c.has_zero_diagonal()) throw violated("C must have zero diagonal");
      quad.emplace(c, c, add_identity(c, -1), add_identity(c, 1));
      break;
    case WilliamsonPreset::FourShifted:
      if (!c.has_zero_diagonal()) throw violated("C must have zero diagonal");
      quad.emplace(add_identity(c, 1), add_identity(c, 1), add_identity(c, -1), add_identity(c, -1));
      break;
    case WilliamsonPreset::NonsymmetricAllC:
      break;
  }
  auto h = williamson(*quad);
  if (!h) throw std::logic_error("Williamson preset failed the sum-of-squares identity");
  return std::move(*h);
}

bool is_conference(const SignedMatrix& c) {
  if (!c.is_square() || c.rows() < 2) return false;
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j)
      if ((c(i, j) == 0) != (i == j)) return false;
  const auto cert = is_orthogonal(c);
  return cert && cert->alpha == static_cast<std::int64_t>(c.rows()) - 1;
}

CertifiedMatrix conference_block(const SignedMatrix& c) {
  if (!is_conference(c)) throw Error(ErrorKind::NotConference, "input is not a conference matrix");
  SignedMatrix m(2 * c.rows(), 2 * c.rows());
  put_block(m, c, 0, 0, 1);
  put_block(m, c, 0, 1, 1);
  put_block(m, c, 1, 0, -1);
  put_block(m, c, 1, 1, 1);
  return confirm(std::move(m), 2 * (static_cast<std::int64_t>(c.rows()) - 1), "conference_block");
}

}  // namespace sgraph
