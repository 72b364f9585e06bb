#pragma once

#include "curvelink/int_matrix.hpp"

namespace curvelink {

/// Result of a Smith normal form computation: left * input * right == diagonal.
///
/// `left` and `right` are unimodular. `right_inverse` is the exact inverse of
/// `right`, tracked alongside it so callers can map SNF coordinates back to
/// generator coordinates without inverting anything.
struct SmithForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
  IntMatrix right_inverse;

  /// Diagonal entries d_0 | d_1 | ... (length min(rows, cols)), all >= 0.
  std::vector<std::int64_t> invariant_factors() const;
  /// Number of nonzero diagonal entries.
  std::size_t rank() const;
};

/// Deterministic Smith normal form.
///
/// Pivot rule: smallest nonzero absolute value in the active submatrix, ties
/// broken by lowest row then lowest column. Throws OverflowError if any
/// intermediate value leaves int64.
SmithForm smith_normal_form(const IntMatrix& m);

} // namespace curvelink
