#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace sgraph {

using Trit = std::int8_t;

// Dense row-major matrix over {-1, 0, +1}.
class SignedMatrix {
 public:
  SignedMatrix(std::size_t rows, std::size_t cols);
  SignedMatrix(std::size_t rows, std::size_t cols, std::vector<Trit> entries);
  SignedMatrix(std::initializer_list<std::initializer_list<int>> rows);

  static SignedMatrix identity(std::size_t n);
  static SignedMatrix zeros(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Trit operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * cols_ + j];
  }
  // Throws InvalidEntry for values outside {-1, 0, 1}.
  void set(std::size_t i, std::size_t j, int value);

  std::span<const Trit> row(std::size_t i) const noexcept {
    return {entries_.data() + i * cols_, cols_};
  }
  std::span<const Trit> data() const noexcept { return entries_; }

  SignedMatrix transposed() const;
  SignedMatrix negated() const;
  bool is_symmetric() const noexcept;
  bool has_zero_diagonal() const noexcept;
  bool is_antisymmetric() const noexcept;
  // Nonzero count of row i.
  std::size_t row_weight(std::size_t i) const noexcept;

  friend bool operator==(const SignedMatrix&, const SignedMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Trit> entries_;
};

// C + s*I for s in {-1, +1}; throws EntryOverflow when a diagonal entry would
// leave {-1, 0, 1}.
SignedMatrix add_identity(const SignedMatrix& c, int s);

// Exact integer matrix, used for products and identities.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}
  static IntMatrix from(const SignedMatrix& m);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::int64_t& operator()(std::size_t i, std::size_t j) noexcept {
    return entries_[i * cols_ + j];
  }
  std::int64_t operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * cols_ + j];
  }

  IntMatrix& operator+=(const IntMatrix& other);

  // Returns alpha if this equals alpha*I (any alpha, including 0 and negative).
  bool is_scalar(std::int64_t& alpha) const noexcept;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int64_t> entries_;
};

}  // namespace sgraph
