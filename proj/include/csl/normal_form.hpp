#pragma once

#include <vector>

#include "csl/linalg.hpp"

namespace csl {

/// p · A · q_right == diag(d), with p and q_right unimodular and d₁ | d₂ | … a
/// chain of nonnegative invariant factors (trailing zeros for singular A).
struct SmithDecomposition {
  IntMatrix p;
  IntMatrix q_right;
  std::vector<Integer> d;

  /// diag(d) padded to the source shape.
  IntMatrix diagonal(std::size_t rows, std::size_t cols) const;
};

/// Row-style Hermite form: the rows of h are a basis of the row lattice of A.
/// h is upper triangular with positive pivots and entries above each pivot in
/// [0, pivot). u is unimodular and u · A is h stacked over zero rows.
struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
};

/// Smith normal form by elementary row/column operations, pivoting on the
/// smallest nonzero magnitude of the remaining submatrix. Accepts any shape.
SmithDecomposition smith_normal_form(const IntMatrix& a);

std::vector<Integer> invariant_factors(const IntMatrix& a);

/// Requires rows ≥ cols and full column rank; throws DomainError otherwise.
HermiteForm hermite_normal_form(const IntMatrix& a);

}  // namespace csl
