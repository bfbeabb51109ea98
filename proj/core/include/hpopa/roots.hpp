#pragma once

#include <vector>

#include "hpopa/types.hpp"

namespace hpopa {

/// Roots of a polynomial by companion-matrix eigenvalues, with a few Newton
/// polish steps. Coefficients are normalized before the residual gate
/// |q(root)| <= residual_tol is enforced; a persistent failure throws.
/// Returns an empty vector for constants and the zero polynomial.
std::vector<Complex> polynomial_roots(const TaylorPoly& q,
                                      double residual_tol = 1e-9);

}  // namespace hpopa
