#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "sgraph/matrix.hpp"
#include "sgraph/orthogonal.hpp"

namespace sgraph {

SignedMatrix kronecker(const SignedMatrix& a, const SignedMatrix& b);

// A (x) B with certificate alpha_A * alpha_B, confirmed by is_orthogonal.
// Throws NotOrthogonal when either factor is not orthogonal.
CertifiedMatrix kronecker_orthogonal(const SignedMatrix& a, const SignedMatrix& b);

inline constexpr unsigned kMaxSylvesterExponent = 12;

// H_{2^k} = H_2 (x) H_{2^(k-1)}, H_1 = [1]. Throws OrderTooLarge for k > 12.
SignedMatrix sylvester_hadamard(unsigned k);

bool is_prime(std::uint64_t q);

// Symmetric conference matrix of order q+1: zero corner, +1 border, core
// chi(i - j) from the quadratic character mod q. Verified C^t C = q I.
// Throws EvenInput, NotPrime or NotOneModFour.
SignedMatrix paley_conference(std::uint64_t q);

// [[C+I, C-I], [C-I, -C-I]] for symmetric zero-diagonal C with C^2 = alpha I;
// certified with 2 alpha + 2 (each row of B has 2(alpha + 1) nonzeros).
CertifiedMatrix double_symmetric(const SignedMatrix& c);

// C + I for antisymmetric zero-diagonal C with C C^t = alpha I; certified
// with alpha + 1.
CertifiedMatrix shift_antisymmetric(const SignedMatrix& c);

// Four square matrices of one order, each with constant row weight k_i, all
// pairwise commuting. The constructor checks all three exactly.
class WilliamsonQuadruple {
 public:
  WilliamsonQuadruple(SignedMatrix a1, SignedMatrix a2, SignedMatrix a3, SignedMatrix a4);

  const std::array<SignedMatrix, 4>& blocks() const noexcept { return blocks_; }
  const std::array<std::size_t, 4>& weights() const noexcept { return weights_; }
  std::size_t order() const noexcept { return blocks_[0].rows(); }

 private:
  std::array<SignedMatrix, 4> blocks_;
  std::array<std::size_t, 4> weights_;
};

// Williamson block array
//   [ A1  A2  A3  A4]
//   [-A2  A1 -A4  A3]
//   [-A3  A4  A1 -A2]
//   [-A4 -A3  A2  A1]
SignedMatrix williamson_array(const std::array<SignedMatrix, 4>& blocks);

// Returns the array iff sum A_i^2 = (sum k_i) I; its certificate is then
// sum k_i. Throws NotSymmetric for nonsymmetric blocks.
std::optional<CertifiedMatrix> williamson(const WilliamsonQuadruple& q);

enum class WilliamsonPreset { AllC, TwoShifted, FourShifted, NonsymmetricAllC };

std::string_view to_string(WilliamsonPreset p);
std::optional<WilliamsonPreset> parse_williamson_preset(std::string_view s);

// Throws PresetPreconditionViolated when c does not meet the preset's
// hypotheses.
CertifiedMatrix williamson_preset(const SignedMatrix& c, WilliamsonPreset preset);

// [[C, C], [-C, C]] for a conference matrix C of order n; certified with
// 2(n-1). Throws NotConference.
CertifiedMatrix conference_block(const SignedMatrix& c);

bool is_conference(const SignedMatrix& c);

}  // namespace sgraph
