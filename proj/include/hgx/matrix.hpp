#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hgx/field.hpp"

namespace hgx {

using Vec = std::vector<Scalar>;

/// Dense matrix over one exact field, row-major. A matrix used as a linear
/// map sends the source basis vector e_j to its j-th column, so it is
/// (target_dim x source_dim); composition is plain matrix product.
class Matrix {
public:
  Matrix() : field_(Field::rationals()), rows_(0), cols_(0) {}
  Matrix(Field f, size_t rows, size_t cols)
      : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

  static Matrix identity(Field f, size_t n);
  static Matrix from_rows(Field f, const std::vector<Vec>& rows, size_t cols);
  static Matrix from_cols(Field f, const std::vector<Vec>& cols, size_t rows);

  const Field& field() const { return field_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  size_t source_dim() const { return cols_; }
  size_t target_dim() const { return rows_; }

  const Scalar& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  Scalar& at(size_t i, size_t j) { return a_[i * cols_ + j]; }

  Vec row(size_t i) const;
  Vec col(size_t j) const;
  void set_row(size_t i, const Vec& v);
  void set_col(size_t j, const Vec& v);

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;  // composition of linear maps
  Matrix scaled(const Scalar& s) const;
  Matrix transpose() const;
  bool operator==(const Matrix& o) const;
  bool is_zero() const;

  Vec apply(const Vec& v) const;

  /// Kronecker product under the global pairing e_i⊗e_j ↦ i·dim2 + j.
  Matrix kron(const Matrix& o) const;

  /// Canonical reduced row echelon form; returns pivot column indices.
  Matrix rref(std::vector<size_t>* pivots = nullptr) const;
  size_t rank() const;

  /// One preimage of target, or nullopt when target is not in the image.
  std::optional<Vec> solve(const Vec& target) const;
  /// Columnwise preimages for a whole matrix of targets.
  std::optional<Matrix> solve(const Matrix& targets) const;
  /// Inverse of a square bijective map (nullopt otherwise).
  std::optional<Matrix> inverse() const;

  std::string to_string() const;

private:
  Field field_;
  size_t rows_, cols_;
  std::vector<Scalar> a_;
};

// --- vector helpers (the field travels with each Scalar) ---

Vec vec_zero(Field f, size_t n);
Vec vec_unit(Field f, size_t n, size_t i);
bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scaled(const Vec& a, const Scalar& s);
void vec_axpy(Vec& dst, const Scalar& s, const Vec& src);  // dst += s*src
std::string vec_to_string(const Vec& v);

/// e_i⊗e_j ↦ i·dim(v) + j applied bilinearly.
Vec kron_vec(const Vec& u, const Vec& v);

/// Apply a⊗b to a vector without materializing the Kronecker matrix.
Vec apply_kron(const Matrix& a, const Matrix& b, const Vec& v);

/// Swap tensor factors: M⊗N → N⊗M on coordinates.
Matrix twist_matrix(Field f, size_t dim_m, size_t dim_n);
Vec twist_vec(const Vec& v, size_t dim_m, size_t dim_n);

/// Reorder (A⊗B)⊗(C⊗D) → (A⊗C)⊗(B⊗D) on coordinates.
Vec middle_swap_vec(const Vec& v, size_t da, size_t db, size_t dc, size_t dd);

}  // namespace hgx
