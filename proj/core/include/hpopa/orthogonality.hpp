#pragma once

#include "hpopa/boundary.hpp"
#include "hpopa/types.hpp"

namespace hpopa {

/// Exponents and constants of the two-sided Pythagorean estimates in L^p.
/// For an orthogonal pair x, y:
///   ||x + y||^r >= ||x||^r + lower_const * ||y||^r
///   ||x + y||^s <= ||x||^s + upper_const * ||y||^s
/// with r = 2, K = p-1 on the lower side and s = p, K = 1/(2^{p-1}-1) on the
/// upper side when p <= 2, and the roles of the exponent pairs swapped when
/// p >= 2. Both branches coincide at p = 2 where all constants are 1.
struct PythagoreanParams {
  double p;
  double lower_exponent;  // r
  double lower_const;     // K1
  double upper_exponent;  // s
  double upper_const;     // K2
};

struct OrthogonalityReport {
  Complex residual;          // (1/M) sum |f|^{p-2} conj(f) g
  double relative_residual;  // |residual| / (||f||_p^{p-1} ||g||_p); 0 if g = 0
  bool is_orthogonal;
};

struct PythagoreanReport {
  double lower_slack;  // LHS - RHS of the lower inequality (>= 0 expected)
  double upper_slack;  // RHS - LHS of the upper inequality (>= 0 expected)
  PythagoreanParams params;
};

inline constexpr double kDefaultOrthTol = 1e-8;

/// Birkhoff-James orthogonality test: f is orthogonal to g in L^p iff
/// the integral of |f|^{p-2} conj(f) g vanishes, with |0|^{p-2}*0 read as
/// zero. The reported residual is relative, scaled by ||f||_p^{p-1} ||g||_p.
/// Throws if f is identically zero.
OrthogonalityReport bj_test(const BoundaryGrid& f, const BoundaryGrid& g,
                            double p, double tol = kDefaultOrthTol);

/// f^<p-1> / ||f||_p^{p-1}: the unique norming functional of f. Satisfies
/// dual_pairing(f, result) = ||f||_p and has unit p'-norm.
BoundaryGrid norming_functional(const BoundaryGrid& f, double p);

/// Removes from g its component along x in the Birkhoff-James sense:
/// y = g - x * I(g) / ||x||_p^p with I the orthogonality integral of (x, .).
/// The result satisfies bj_test(x, y, p) with zero residual up to roundoff.
BoundaryGrid orthogonalize(const BoundaryGrid& x, const BoundaryGrid& g,
                           double p);

PythagoreanParams pythag_params(double p);

/// Evaluates both Pythagorean inequalities for an orthogonal pair and
/// reports the slacks. The orthogonality hypothesis is enforced (relative
/// residual at most 1e-8); violating it throws with the residual named.
PythagoreanReport check_pythagorean(const BoundaryGrid& x,
                                    const BoundaryGrid& y, double p);

}  // namespace hpopa
