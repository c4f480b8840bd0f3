#include "sgraph/matrix.hpp"

#include <string>

#include "sgraph/error.hpp"

namespace sgraph {

namespace {

void check_shape(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorKind::InvalidShape, "matrix dimensions must be positive");
  }
}

Trit to_trit(int value) {
  if (value < -1 || value > 1) {
    throw Error(ErrorKind::InvalidEntry,
                "entry " + std::to_string(value) + " not in {-1,0,1}");
  }
  return static_cast<Trit>(value);
}

}  // namespace

SignedMatrix::SignedMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols) {
  check_shape(rows, cols);
  entries_.assign(rows * cols, 0);
}

SignedMatrix::SignedMatrix(std::size_t rows, std::size_t cols,
                           std::vector<Trit> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  check_shape(rows, cols);
  if (entries_.size() != rows * cols) {
    throw Error(ErrorKind::InvalidShape, "entry count does not match shape");
  }
  for (Trit t : entries_) to_trit(t);
}

SignedMatrix::SignedMatrix(std::initializer_list<std::initializer_list<int>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  check_shape(rows_, cols_);
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw Error(ErrorKind::InvalidShape, "ragged initializer rows");
    }
    for (int v : r) entries_.push_back(to_trit(v));
  }
}

SignedMatrix SignedMatrix::identity(std::size_t n) {
  SignedMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1;
  return m;
}

SignedMatrix SignedMatrix::zeros(std::size_t rows, std::size_t cols) {
  return SignedMatrix(rows, cols);
}

void SignedMatrix::set(std::size_t i, std::size_t j, int value) {
  entries_[i * cols_ + j] = to_trit(value);
}

SignedMatrix SignedMatrix::transposed() const {
  SignedMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t.entries_[j * rows_ + i] = entries_[i * cols_ + j];
  return t;
}

SignedMatrix SignedMatrix::negated() const {
  SignedMatrix m = *this;
  for (auto& e : m.entries_) e = static_cast<Trit>(-e);
  return m;
}

bool SignedMatrix::is_symmetric() const noexcept {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool SignedMatrix::has_zero_diagonal() const noexcept {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    if ((*this)(i, i) != 0) return false;
  return true;
}

bool SignedMatrix::is_antisymmetric() const noexcept {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

std::size_t SignedMatrix::row_weight(std::size_t i) const noexcept {
  std::size_t w = 0;
  for (Trit t : row(i)) w += (t != 0);
  return w;
}

SignedMatrix add_identity(const SignedMatrix& c, int s) {
  if (!c.is_square()) throw Error(ErrorKind::NonSquare, "C +/- I needs a square matrix");
  SignedMatrix m = c;
  for (std::size_t i = 0; i < c.rows(); ++i) {
    const int v = c(i, i) + s;
    if (v < -1 || v > 1) {
      throw Error(ErrorKind::EntryOverflow,
                  "diagonal entry " + std::to_string(i) + " leaves {-1,0,1}");
    }
    m.set(i, i, v);
  }
  return m;
}

IntMatrix IntMatrix::from(const SignedMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix sum shape mismatch");
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

bool IntMatrix::is_scalar(std::int64_t& alpha) const noexcept {
  if (rows_ != cols_ || rows_ == 0) return false;
  const std::int64_t a = entries_[0];
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? a : 0)) return false;
  alpha = a;
  return true;
}

}  // namespace sgraph
