#include "hcp/matrix.hpp"

#include <algorithm>

#include "hcp/error.hpp"

namespace hcp {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(std::move(f)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_ints(const Field& f, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t r = rows.size(), c = r ? rows.front().size() : 0;
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw InvalidInput("ragged matrix literal");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_codes(const Field& f, std::size_t rows, std::size_t cols,
                          std::vector<Elem> codes) {
  if (codes.size() != rows * cols) throw InvalidInput("matrix entry count mismatch");
  for (auto c : codes)
    if (c >= f.order()) throw InvalidInput("matrix entry out of range");
  Matrix m(f, rows, cols);
  m.data_ = std::move(codes);
  return m;
}

void Matrix::check_same_shape(const Matrix& b) const {
  if (field_ != b.field_) throw InvalidInput("matrices over different fields");
  if (rows_ != b.rows_ || cols_ != b.cols_) throw InvalidInput("matrix shape mismatch");
}

Matrix Matrix::operator*(const Matrix& b) const {
  if (field_ != b.field_) throw InvalidInput("matrices over different fields");
  if (cols_ != b.rows_) throw InvalidInput("matrix product shape mismatch");
  Matrix r(field_, rows_, b.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Elem* out = r.data_.data() + i * b.cols_;
    for (std::size_t k = 0; k < cols_; ++k) {
      const Elem a = data_[i * cols_ + k];
      if (a) field_.axpy(out, b.data_.data() + k * b.cols_, a, b.cols_);
    }
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& b) const {
  check_same_shape(b);
  Matrix r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = field_.add(data_[k], b.data_[k]);
  return r;
}

Matrix Matrix::operator-(const Matrix& b) const {
  check_same_shape(b);
  Matrix r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = field_.sub(data_[k], b.data_[k]);
  return r;
}

Matrix Matrix::scaled(Elem c) const {
  Matrix r = *this;
  field_.scale(r.data_.data(), c, r.data_.size());
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

std::vector<Matrix::Elem> Matrix::apply(std::span<const Elem> v) const {
  if (v.size() != rows_) throw InvalidInput("vector length mismatch");
  std::vector<Elem> out(cols_, 0);
  for (std::size_t k = 0; k < rows_; ++k)
    if (v[k]) field_.axpy(out.data(), data_.data() + k * cols_, v[k], cols_);
  return out;
}

Matrix Matrix::row_block(std::size_t begin, std::size_t count) const {
  if (begin + count > rows_) throw InvalidInput("row block out of range");
  Matrix r(field_, count, cols_);
  std::copy(data_.begin() + begin * cols_, data_.begin() + (begin + count) * cols_,
            r.data_.begin());
  return r;
}

Matrix Matrix::vstack(const Matrix& b) const {
  if (field_ != b.field_) throw InvalidInput("matrices over different fields");
  if (rows_ && b.rows_ && cols_ != b.cols_) throw InvalidInput("vstack column mismatch");
  Matrix r(field_, rows_ + b.rows_, rows_ ? cols_ : b.cols_);
  std::copy(data_.begin(), data_.end(), r.data_.begin());
  std::copy(b.data_.begin(), b.data_.end(), r.data_.begin() + data_.size());
  return r;
}

void Matrix::append_row(std::span<const Elem> v) {
  if (rows_ == 0 && cols_ == 0) cols_ = v.size();
  if (v.size() != cols_) throw InvalidInput("row length mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Elem x) { return x == 0; });
}

bool Matrix::is_identity() const noexcept {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

bool Matrix::operator==(const Matrix& b) const noexcept {
  return field_ == b.field_ && rows_ == b.rows_ && cols_ == b.cols_ && data_ == b.data_;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m.field().format(m(i, j));
    }
    os << "]\n";
  }
  return os;
}

Echelon rref(const Matrix& m) {
  const Field& f = m.field();
  Matrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      std::swap_ranges(a.row(piv).begin(), a.row(piv).end(), a.row(r).begin());
    f.scale(a.row(r).data(), f.inv(a(r, c)), cols);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      f.axpy(a.row(i).data(), a.row(r).data(), f.neg(a(i, c)), cols);
    }
    pivots.push_back(c);
    ++r;
  }
  Echelon e{a.row_block(0, r), r, std::move(pivots)};
  return e;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix nullspace(const Matrix& m) {
  const Field& f = m.field();
  Echelon e = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  Matrix out(f, 0, n);
  // Free columns in increasing order; each free column gives one basis vector.
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  std::vector<Field::Elem> v(n);
  for (auto fc : free_cols) {
    std::fill(v.begin(), v.end(), 0);
    v[fc] = 1;
    for (std::size_t r = 0; r < e.rank; ++r) v[e.pivots[r]] = f.neg(e.form(r, fc));
    out.append_row(v);
  }
  return rref(out).form;
}

Matrix left_nullspace(const Matrix& m) { return nullspace(m.transpose()); }

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("inverse of non-square matrix");
  const std::size_t n = m.rows();
  const Field& f = m.field();
  if (n == 0) return Matrix(f, 0, 0);
  Matrix aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = rref(aug);
  if (e.rank < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.form(i, n + j);
  return inv;
}

Matrix::Elem determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of non-square matrix");
  const Field& f = m.field();
  Matrix a = m;
  const std::size_t n = a.rows();
  Field::Elem det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap_ranges(a.row(piv).begin(), a.row(piv).end(), a.row(c).begin());
      det = f.neg(det);
    }
    det = f.mul(det, a(c, c));
    const Field::Elem inv = f.inv(a(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      f.axpy(a.row(i).data(), a.row(c).data(), f.neg(f.mul(a(i, c), inv)), n);
    }
  }
  return det;
}

EchelonBasis::EchelonBasis(Field f, std::size_t dim, bool track)
    : field_(std::move(f)), dim_(dim), track_(track) {}

std::vector<Field::Elem> EchelonBasis::reduce(std::vector<Elem>& v) const {
  std::vector<Elem> coeffs(rows_.size(), 0);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Elem c = v[pivots_[r]];
    if (c == 0) continue;
    coeffs[r] = c;
    field_.axpy(v.data(), rows_[r].data(), field_.neg(c), dim_);
  }
  return coeffs;
}

bool EchelonBasis::insert(std::vector<Elem> v) {
  if (v.size() != dim_) throw InvalidInput("vector length mismatch");
  const std::size_t index = inserted_;
  std::vector<Elem> combo;
  std::vector<Elem> coeffs = reduce(v);
  std::size_t lead = 0;
  while (lead < dim_ && v[lead] == 0) ++lead;
  if (lead == dim_) return false;
  ++inserted_;
  if (track_) {
    // combo expresses the residual v in terms of inserted vectors.
    combo.assign(index + 1, 0);
    combo[index] = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (coeffs[r] == 0) continue;
      const Elem c = field_.neg(coeffs[r]);
      for (std::size_t k = 0; k < combos_[r].size(); ++k)
        combo[k] = field_.add(combo[k], field_.mul(c, combos_[r][k]));
    }
  }
  const Elem inv = field_.inv(v[lead]);
  field_.scale(v.data(), inv, dim_);
  if (track_) field_.scale(combo.data(), inv, combo.size());
  // Keep the basis fully reduced: clear column lead in existing rows.
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Elem c = rows_[r][lead];
    if (c == 0) continue;
    const Elem nc = field_.neg(c);
    field_.axpy(rows_[r].data(), v.data(), nc, dim_);
    if (track_) {
      combos_[r].resize(combo.size(), 0);
      field_.axpy(combos_[r].data(), combo.data(), nc, combo.size());
    }
  }
  // Insert sorted by pivot column.
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, lead);
  rows_.insert(rows_.begin() + pos, std::move(v));
  if (track_) combos_.insert(combos_.begin() + pos, std::move(combo));
  return true;
}

bool EchelonBasis::contains(std::vector<Elem> v) const {
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

std::vector<Field::Elem> EchelonBasis::express(std::vector<Elem> v) const {
  if (!track_) throw Error("EchelonBasis::express requires tracking");
  std::vector<Elem> coeffs = reduce(v);
  if (!std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; }))
    throw InvalidInput("vector not in span");
  std::vector<Elem> out(inserted_, 0);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (coeffs[r]) field_.axpy(out.data(), combos_[r].data(), coeffs[r], combos_[r].size());
  return out;
}

Matrix EchelonBasis::matrix() const {
  Matrix m(field_, 0, dim_);
  for (const auto& r : rows_) m.append_row(r);
  return m;
}

Matrix coordinates_in(const Echelon& basis, const Matrix& v) {
  Matrix out(v.field(), v.rows(), basis.rank);
  for (std::size_t i = 0; i < v.rows(); ++i)
    for (std::size_t r = 0; r < basis.rank; ++r) out(i, r) = v(i, basis.pivots[r]);
  return out;
}

}  // namespace hcp
