#include "hgx/subspace.hpp"

namespace hgx {

Subspace Subspace::from_span(Field f, const std::vector<Vec>& spanning, size_t ambient) {
  return from_span(Matrix::from_rows(f, spanning, ambient));
}

Subspace Subspace::from_span(const Matrix& rows_span) {
  Subspace s;
  s.ambient_ = rows_span.cols();
  std::vector<size_t> pivots;
  Matrix red = rows_span.rref(&pivots);
  Matrix basis(rows_span.field(), pivots.size(), rows_span.cols());
  for (size_t i = 0; i < pivots.size(); ++i) basis.set_row(i, red.row(i));
  s.basis_ = basis;
  s.pivots_ = pivots;
  return s;
}

Subspace Subspace::zero(Field f, size_t ambient) {
  return from_span(Matrix(f, 0, ambient));
}

Subspace Subspace::full(Field f, size_t ambient) {
  return from_span(Matrix::identity(f, ambient));
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (v.size() != ambient_) throw Error("DimensionMismatch", "Subspace::coordinates");
  // pivot columns of an RREF basis carry the coordinates directly
  Field f = basis_.field();
  Vec coord = vec_zero(f, dim());
  Vec residue = v;
  for (size_t i = 0; i < dim(); ++i) {
    coord[i] = residue[pivots_[i]];
    if (!coord[i].is_zero()) vec_axpy(residue, -coord[i], basis_.row(i));
  }
  if (!vec_is_zero(residue)) return std::nullopt;
  return coord;
}

Matrix Subspace::coordinates_of(const std::vector<Vec>& vs) const {
  Matrix m(basis_.field(), dim(), vs.size());
  for (size_t j = 0; j < vs.size(); ++j) {
    auto c = coordinates(vs[j]);
    if (!c) throw Error("NotInSubspace", "vector outside subspace in coordinates_of");
    m.set_col(j, *c);
  }
  return m;
}

Matrix Subspace::embedding() const { return basis_.transpose(); }

bool Subspace::is_subspace_of(const Subspace& o) const {
  if (ambient_ != o.ambient_) return false;
  for (size_t i = 0; i < dim(); ++i)
    if (!o.contains(basis_.row(i))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw Error("DimensionMismatch", "Subspace::sum");
  std::vector<Vec> rows;
  for (size_t i = 0; i < dim(); ++i) rows.push_back(basis_.row(i));
  for (size_t i = 0; i < o.dim(); ++i) rows.push_back(o.basis_.row(i));
  return from_span(basis_.field(), rows, ambient_);
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw Error("DimensionMismatch", "Subspace::intersect");
  // nullspace trick: intersection = {x = B1^T u : B1^T u - B2^T v = 0}
  Field f = basis_.field();
  Matrix stacked(f, ambient_, dim() + o.dim());
  for (size_t j = 0; j < dim(); ++j) stacked.set_col(j, basis_.row(j));
  for (size_t j = 0; j < o.dim(); ++j) stacked.set_col(dim() + j, vec_scaled(o.basis_.row(j), -Scalar::one(f)));
  Subspace null = kernel(stacked);
  std::vector<Vec> rows;
  for (size_t i = 0; i < null.dim(); ++i) {
    Vec u(null.basis_vector(i).begin(), null.basis_vector(i).begin() + dim());
    Vec x = vec_zero(f, ambient_);
    for (size_t j = 0; j < dim(); ++j) vec_axpy(x, u[j], basis_.row(j));
    rows.push_back(x);
  }
  return from_span(f, rows, ambient_);
}

QuotientSpace make_quotient(size_t ambient, const Subspace& sub) {
  if (sub.ambient_dim() != ambient) throw Error("DimensionMismatch", "make_quotient");
  Field f = sub.field();
  std::vector<size_t> free_cols;
  {
    size_t pi = 0;
    for (size_t c = 0; c < ambient; ++c) {
      if (pi < sub.pivots().size() && sub.pivots()[pi] == c)
        ++pi;
      else
        free_cols.push_back(c);
    }
  }
  QuotientSpace q;
  q.ambient = ambient;
  q.dim = free_cols.size();
  q.kernel = sub;
  q.proj = Matrix(f, q.dim, ambient);
  // class of e_j: eliminate the pivot coordinates using the RREF rows, then
  // read off the free coordinates
  for (size_t j = 0; j < ambient; ++j) {
    Vec v = vec_unit(f, ambient, j);
    for (size_t i = 0; i < sub.dim(); ++i) {
      Scalar c = v[sub.pivots()[i]];
      if (!c.is_zero()) vec_axpy(v, -c, sub.basis_vector(i));
    }
    for (size_t k = 0; k < q.dim; ++k) q.proj.at(k, j) = v[free_cols[k]];
  }
  q.section = Matrix(f, ambient, q.dim);
  for (size_t k = 0; k < q.dim; ++k) q.section.at(free_cols[k], k) = Scalar::one(f);
  return q;
}

Subspace kernel(const Matrix& f) {
  std::vector<size_t> pivots;
  Matrix red = f.rref(&pivots);
  Field fl = f.field();
  std::vector<Vec> rows;
  size_t pi = 0;
  for (size_t c = 0; c < f.cols(); ++c) {
    if (pi < pivots.size() && pivots[pi] == c) {
      ++pi;
      continue;
    }
    Vec v = vec_zero(fl, f.cols());
    v[c] = Scalar::one(fl);
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red.at(i, c);
    rows.push_back(v);
  }
  return Subspace::from_span(fl, rows, f.cols());
}

}  // namespace hgx
