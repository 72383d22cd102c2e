#pragma once

#include <vector>

#include "feec4d/rational.hpp"

namespace feec4d {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;  // row-major, rectangular

/// Incrementally maintained reduced row-echelon basis over the rationals.
/// Supports exact rank queries and repeated membership tests against the
/// spanned row space.
class RowBasis {
public:
  explicit RowBasis(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  /// Reduces v against the stored rows; returns true (and absorbs v) if it
  /// enlarges the span, false if v was already in the span.
  bool insert(RatVec v);

  /// True iff v lies in the span of the inserted rows.
  bool contains(RatVec v) const;

  /// Fully reduces v in place; afterwards v is zero iff it was in the span.
  void reduce(RatVec& v) const;

  const std::vector<RatVec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
  std::size_t width_;
  std::vector<RatVec> rows_;          // pivot entry normalized to 1
  std::vector<std::size_t> pivots_;   // pivot column of each row
};

/// Exact rank by Gauss-Jordan elimination.
int rank_of(const RatMat& a);

/// Exact determinant of a square matrix via fraction-free (Bareiss)
/// elimination on the denominator-cleared integer matrix.
Rational det(const RatMat& a);

/// Basis of the right kernel {x : a x = 0}; rows of `a` are the equations.
RatMat kernel_basis(const RatMat& a);

/// True iff every row of b lies in the row span of a.
bool span_contains(const RatMat& a, const RatMat& b);

/// True iff the row spans coincide.
bool span_equal(const RatMat& a, const RatMat& b);

}  // namespace feec4d
