#pragma once

#include <optional>
#include <vector>

#include "hgap/poly.hpp"
#include "hgap/rat.hpp"

namespace hgap {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Rat> d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool symmetric() const;

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Rat trace() const;
  /// Keep the listed rows and columns, in order.
  Matrix select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  Matrix leading(std::size_t k) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

/// Fraction-free (Bareiss) elimination with row pivoting.
Rat determinant(Matrix a);

/// All leading principal minors det(a[0..k, 0..k]), k = 1..n. Runs one
/// Bareiss pass without pivoting, whose k-th pivot is the k-th minor; once a
/// pivot vanishes the remaining minors are computed individually.
std::vector<Rat> leading_principal_minors(const Matrix& a);

/// Solves a x = b exactly; nullopt when a is singular.
std::optional<std::vector<Rat>> solve(Matrix a, std::vector<Rat> b);

/// Sylvester matrix of f and g (size deg f + deg g).
Matrix sylvester(const Poly& f, const Poly& g);

Rat resultant(const Poly& f, const Poly& g);

}  // namespace hgap
