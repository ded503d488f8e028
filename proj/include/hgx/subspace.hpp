#pragma once

#include "hgx/matrix.hpp"

namespace hgx {

/// Subspace of k^n in canonical form: the basis matrix is the RREF of any
/// spanning set with zero rows dropped, so two subspaces are equal iff their
/// basis matrices are identical.
class Subspace {
public:
  Subspace() = default;

  static Subspace from_span(Field f, const std::vector<Vec>& spanning, size_t ambient);
  static Subspace from_span(const Matrix& rows_span);
  static Subspace zero(Field f, size_t ambient);
  static Subspace full(Field f, size_t ambient);

  size_t ambient_dim() const { return ambient_; }
  size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<size_t>& pivots() const { return pivots_; }
  Vec basis_vector(size_t i) const { return basis_.row(i); }
  const Field& field() const { return basis_.field(); }

  bool contains(const Vec& v) const;
  /// Coordinates of v in the RREF basis (nullopt when v is outside).
  std::optional<Vec> coordinates(const Vec& v) const;
  /// Coordinate matrix for a list of member vectors (throws if any is outside).
  Matrix coordinates_of(const std::vector<Vec>& vs) const;
  /// Embedding matrix ambient_dim x dim (columns = basis vectors).
  Matrix embedding() const;

  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
  bool is_subspace_of(const Subspace& o) const;

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;

private:
  size_t ambient_ = 0;
  Matrix basis_;  // dim x ambient, canonical RREF, no zero rows
  std::vector<size_t> pivots_;
};

/// Quotient of k^ambient by a subspace. The quotient basis is indexed by the
/// non-pivot coordinates of the subspace; proj*section = id on the quotient.
struct QuotientSpace {
  size_t ambient = 0;
  size_t dim = 0;
  Subspace kernel;
  Matrix proj;     // dim x ambient, surjective with kernel exactly `kernel`
  Matrix section;  // ambient x dim, proj∘section = id
};

QuotientSpace make_quotient(size_t ambient, const Subspace& sub);

/// kernel of a linear map, canonical.
Subspace kernel(const Matrix& f);

}  // namespace hgx
