#pragma once

// Dense matrices over a finite field.  Vectors are rows; a matrix A acts on
// a row vector v by v -> v * A throughout the library.

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "hcp/field.hpp"

namespace hcp {

class Matrix {
 public:
  using Elem = Field::Elem;

  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& f, std::size_t n);
  /// Entries given as integers, reduced into the prime subfield.
  static Matrix from_ints(const Field& f, const std::vector<std::vector<std::int64_t>>& rows);
  /// Entries given as raw element codes.
  static Matrix from_codes(const Field& f, std::size_t rows, std::size_t cols,
                           std::vector<Elem> codes);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Elem operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  Elem& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  std::span<const Elem> row(std::size_t i) const noexcept {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<Elem> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
  const std::vector<Elem>& codes() const noexcept { return data_; }

  Matrix operator*(const Matrix& b) const;
  Matrix operator+(const Matrix& b) const;
  Matrix operator-(const Matrix& b) const;
  Matrix scaled(Elem c) const;
  Matrix transpose() const;
  /// Row vector times matrix.
  std::vector<Elem> apply(std::span<const Elem> v) const;

  /// Rows [begin, begin+count).
  Matrix row_block(std::size_t begin, std::size_t count) const;
  /// Stack the rows of b below this (same column count).
  Matrix vstack(const Matrix& b) const;
  void append_row(std::span<const Elem> v);

  bool is_zero() const noexcept;
  bool is_identity() const noexcept;
  bool operator==(const Matrix& b) const noexcept;
  bool operator!=(const Matrix& b) const noexcept { return !(*this == b); }

 private:
  void check_same_shape(const Matrix& b) const;
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Elem> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

struct Echelon {
  Matrix form;                      // reduced row echelon form, zero rows dropped
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each row of form
};

/// Reduced row echelon form (unique); the returned form has exactly rank rows.
Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Rows form a basis of {v : M v^T = 0}, returned in echelon form.
Matrix nullspace(const Matrix& m);
/// Rows form a basis of {v : v M = 0}.
Matrix left_nullspace(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
/// Determinant of a square matrix.
Matrix::Elem determinant(const Matrix& m);

/// Incrementally grown subspace in reduced echelon form.  Optionally tracks,
/// for every stored row, its expression in terms of the vectors that were
/// inserted (in insertion order).
class EchelonBasis {
 public:
  using Elem = Field::Elem;

  EchelonBasis(Field f, std::size_t dim, bool track = false);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return rows_.size(); }
  bool full() const noexcept { return rows_.size() == dim_; }

  /// Reduces v in place against the basis; returns the coefficients c with
  /// v_original = sum_r c_r * row_r + v_residual.
  std::vector<Elem> reduce(std::vector<Elem>& v) const;
  /// Inserts v if it is not in the span.  Returns true if the span grew.
  bool insert(std::vector<Elem> v);
  bool contains(std::vector<Elem> v) const;

  /// Expression of v (which must lie in the span) in terms of inserted
  /// vectors.  Requires tracking.
  std::vector<Elem> express(std::vector<Elem> v) const;

  /// The basis as a matrix in reduced echelon form.
  Matrix matrix() const;
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

 private:
  Field field_;
  std::size_t dim_;
  bool track_;
  std::vector<std::vector<Elem>> rows_;    // kept fully reduced
  std::vector<std::size_t> pivots_;        // row r has leading 1 at pivots_[r]
  std::vector<std::vector<Elem>> combos_;  // row r = sum combos_[r][k] * inserted_k
  std::size_t inserted_ = 0;
};

/// Coordinates of the rows of v with respect to the rows of an echelon basis
/// (the entries in pivot columns).  The rows of v must lie in the span.
Matrix coordinates_in(const Echelon& basis, const Matrix& v);

}  // namespace hcp
