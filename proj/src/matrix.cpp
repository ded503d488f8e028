#include "hgx/matrix.hpp"

#include <sstream>

namespace hgx {

Matrix Matrix::identity(Field f, size_t n) {
  Matrix m(f, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<Vec>& rows, size_t cols) {
  Matrix m(f, rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Matrix Matrix::from_cols(Field f, const std::vector<Vec>& cols, size_t rows) {
  Matrix m(f, rows, cols.size());
  for (size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
  return m;
}

Vec Matrix::row(size_t i) const {
  Vec v(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  return v;
}

Vec Matrix::col(size_t j) const {
  Vec v;
  v.reserve(rows_);
  for (size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

void Matrix::set_row(size_t i, const Vec& v) {
  if (v.size() != cols_) throw Error("DimensionMismatch", "set_row length");
  for (size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

void Matrix::set_col(size_t j, const Vec& v) {
  if (v.size() != rows_) throw Error("DimensionMismatch", "set_col length");
  for (size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("DimensionMismatch", "matrix add");
  Matrix r = *this;
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("DimensionMismatch", "matrix sub");
  Matrix r = *this;
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error("DimensionMismatch", "matrix product");
  Matrix r(field_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Scalar& x = at(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        const Scalar& y = o.at(k, j);
        if (y.is_zero()) continue;
        r.at(i, j) += x * y;
      }
    }
  return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r = *this;
  for (auto& x : r.a_) x *= s;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw Error("DimensionMismatch", "apply: vector length");
  Vec r = vec_zero(field_, rows_);
  for (size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (size_t i = 0; i < rows_; ++i) {
      const Scalar& x = at(i, j);
      if (!x.is_zero()) r[i] += x * v[j];
    }
  }
  return r;
}

Matrix Matrix::kron(const Matrix& o) const {
  Matrix r(field_, rows_ * o.rows_, cols_ * o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      const Scalar& x = at(i, j);
      if (x.is_zero()) continue;
      for (size_t k = 0; k < o.rows_; ++k)
        for (size_t l = 0; l < o.cols_; ++l) {
          const Scalar& y = o.at(k, l);
          if (!y.is_zero()) r.at(i * o.rows_ + k, j * o.cols_ + l) = x * y;
        }
    }
  return r;
}

Matrix Matrix::rref(std::vector<size_t>* pivots) const {
  Matrix m = *this;
  if (pivots) pivots->clear();
  size_t r = 0;
  for (size_t c = 0; c < cols_ && r < rows_; ++c) {
    size_t pivot = r;
    while (pivot < rows_ && m.at(pivot, c).is_zero()) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != r)
      for (size_t j = 0; j < cols_; ++j) std::swap(m.at(r, j), m.at(pivot, j));
    Scalar inv = m.at(r, c).inverse();
    for (size_t j = c; j < cols_; ++j) m.at(r, j) *= inv;
    for (size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      Scalar factor = m.at(i, c);
      if (factor.is_zero()) continue;
      for (size_t j = c; j < cols_; ++j) m.at(i, j) -= factor * m.at(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

size_t Matrix::rank() const {
  std::vector<size_t> pivots;
  rref(&pivots);
  return pivots.size();
}

std::optional<Vec> Matrix::solve(const Vec& target) const {
  auto m = solve(Matrix::from_cols(field_, {target}, rows_));
  if (!m) return std::nullopt;
  return m->col(0);
}

std::optional<Matrix> Matrix::solve(const Matrix& targets) const {
  if (targets.rows() != rows_) throw Error("DimensionMismatch", "solve: target rows");
  // row-reduce the augmented system [A | B]
  Matrix aug(field_, rows_, cols_ + targets.cols());
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    for (size_t j = 0; j < targets.cols(); ++j) aug.at(i, cols_ + j) = targets.at(i, j);
  }
  std::vector<size_t> pivots;
  Matrix red = aug.rref(&pivots);
  for (size_t p : pivots)
    if (p >= cols_) return std::nullopt;  // inconsistent row 0..0 | nonzero
  Matrix x(field_, cols_, targets.cols());
  for (size_t k = 0; k < pivots.size(); ++k)
    for (size_t j = 0; j < targets.cols(); ++j) x.at(pivots[k], j) = red.at(k, cols_ + j);
  return x;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  auto x = solve(Matrix::identity(field_, rows_));
  if (!x) return std::nullopt;
  if (!((*x * *this) == Matrix::identity(field_, cols_))) return std::nullopt;
  return x;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ") << "[";
    for (size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).to_string();
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

Vec vec_zero(Field f, size_t n) { return Vec(n, Scalar::zero(f)); }

Vec vec_unit(Field f, size_t n, size_t i) {
  Vec v = vec_zero(f, n);
  v[i] = Scalar::one(f);
  return v;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("DimensionMismatch", "vec_add");
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("DimensionMismatch", "vec_sub");
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vec_scaled(const Vec& a, const Scalar& s) {
  Vec r = a;
  for (auto& x : r) x *= s;
  return r;
}

void vec_axpy(Vec& dst, const Scalar& s, const Vec& src) {
  if (dst.size() != src.size()) throw Error("DimensionMismatch", "vec_axpy");
  if (s.is_zero()) return;
  for (size_t i = 0; i < dst.size(); ++i)
    if (!src[i].is_zero()) dst[i] += s * src[i];
}

std::string vec_to_string(const Vec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s + ")";
}

Vec kron_vec(const Vec& u, const Vec& v) {
  Field f = u.empty() ? (v.empty() ? Field::rationals() : v[0].field()) : u[0].field();
  Vec r = vec_zero(f, u.size() * v.size());
  for (size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    for (size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) r[i * v.size() + j] = u[i] * v[j];
  }
  return r;
}

Vec apply_kron(const Matrix& a, const Matrix& b, const Vec& v) {
  if (v.size() != a.cols() * b.cols()) throw Error("DimensionMismatch", "apply_kron");
  Vec r = vec_zero(a.field(), a.rows() * b.rows());
  for (size_t i = 0; i < a.cols(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) {
      const Scalar& x = v[i * b.cols() + j];
      if (x.is_zero()) continue;
      vec_axpy(r, x, kron_vec(a.col(i), b.col(j)));
    }
  return r;
}

Matrix twist_matrix(Field f, size_t dim_m, size_t dim_n) {
  Matrix t(f, dim_m * dim_n, dim_m * dim_n);
  for (size_t i = 0; i < dim_m; ++i)
    for (size_t j = 0; j < dim_n; ++j) t.at(j * dim_m + i, i * dim_n + j) = Scalar::one(f);
  return t;
}

Vec twist_vec(const Vec& v, size_t dim_m, size_t dim_n) {
  if (v.size() != dim_m * dim_n) throw Error("DimensionMismatch", "twist_vec");
  Vec r = v;
  for (size_t i = 0; i < dim_m; ++i)
    for (size_t j = 0; j < dim_n; ++j) r[j * dim_m + i] = v[i * dim_n + j];
  return r;
}

Vec middle_swap_vec(const Vec& v, size_t da, size_t db, size_t dc, size_t dd) {
  if (v.size() != da * db * dc * dd) throw Error("DimensionMismatch", "middle_swap_vec");
  Vec r = vec_zero(v.empty() ? Field::rationals() : v[0].field(), v.size());
  for (size_t a = 0; a < da; ++a)
    for (size_t b = 0; b < db; ++b)
      for (size_t c = 0; c < dc; ++c)
        for (size_t d = 0; d < dd; ++d)
          r[((a * dc + c) * db + b) * dd + d] = v[((a * db + b) * dc + c) * dd + d];
  return r;
}

}  // namespace hgx
