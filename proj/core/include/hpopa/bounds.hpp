#pragma once

#include <optional>
#include <string>
#include <utility>

#include "hpopa/solver.hpp"
#include "hpopa/types.hpp"

namespace hpopa {

/// One evaluated inequality: slack is rhs - lhs for an upper bound and
/// lhs - rhs for a lower bound, so satisfied always means slack >= -tol.
struct BoundReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool satisfied = false;
  std::string inputs_digest;
  std::string note;  // e.g. clamped radicand
};

inline constexpr double kDefaultBoundTol = 1e-7;

/// Upper bound on the constant minimizer lambda of ||c f - 1||_p:
///   |lambda| <= 1 / (K1^{1/r} (||f - f(0)||_p^r + ||f||_p^r)^{1/r}).
/// Requires f(0) != 0.
BoundReport deg0_upper_simple(const HpFunction& f, double p, Complex lambda,
                              double tol = kDefaultBoundTol);

/// Sharper mean-value-theorem variant:
///   |lambda|^{r-1} <= r |f(0)| / (K1 ||f - f(0)||_p^r + K1 ||f||_p^r).
BoundReport deg0_upper_mvt(const HpFunction& f, double p, Complex lambda,
                           double tol = kDefaultBoundTol);

/// Lower bound, parametrized by a comparison constant c (default 1/f(0)):
///   |lambda|^s >= (1 - ||c f - 1||_p^s) / (K2 (||f - f(0)||_p^s + ||f||_p^s)).
BoundReport deg0_lower(const HpFunction& f, double p, Complex lambda,
                       std::optional<Complex> c = std::nullopt,
                       double tol = kDefaultBoundTol);

/// Lower bound on |z0| for any linear polynomial Q = Q0 (1 - z/z0) with
/// z0 in the punctured disk, from boundedness of the difference quotient:
/// returns ||Q0 f||_p / (||Q0 f||_p + ||Q f - 1||_p).
double diff_quotient_root_bound(double q0f_norm, double qf_minus_1_norm);

/// Two-sided Pythagorean interval for the root modulus of a converged
/// degree-one result, returned as (lower report, upper report). Radicands
/// that go negative by quadrature noise are clamped at zero and noted.
/// At p = 2 both sides collapse to |w|.
std::pair<BoundReport, BoundReport> root_interval(const HpFunction& f,
                                                  const LinearOpa& lin,
                                                  double p,
                                                  double tol = kDefaultBoundTol);

/// Bound on the leading coefficient of the degree-one minimizer, obtained by
/// viewing a as the constant minimizer for (z - w) f:
///   |a|^{r-1} <= r |w f(0)| / (K1 ||(z-w)f + w f(0)||_p^r + K1 ||(z-w)f||_p^r).
/// Requires w != 0 and f(0) != 0.
BoundReport leading_coeff_bound(const HpFunction& f, const LinearOpa& lin,
                                double p, double tol = kDefaultBoundTol);

/// sqrt(max(0, 1 - residual_norm^p)): every root of the degree-n minimizer
/// lying inside the open disk must exceed this value. Throws when
/// residual_norm exceeds 1 beyond roundoff (the residual of a minimizer
/// never does, since q = 0 is feasible).
double root_modulus_lower_bound(double residual_norm, double p);

/// Interpolation estimate for p > 2 and 2 <= k < p on a unit-p-norm f:
///   (1/M) sum |f|^k <= ||phi||_{p-2}^{p-k},  phi = |f|^{2/(p-2)}.
/// Equality at k = 2. The caller must pass f with ||f||_p = 1 within 1e-9.
BoundReport norm_interpolation_check(const HpFunction& f, double p, double k,
                                     double tol = kDefaultBoundTol);

/// ||Q f||_p >= (1 - |w|) |a| ||f||_p for Q = a (z - w), from the
/// difference-quotient identity D_w(Q f) = a f. Applicable only for |w| < 1;
/// returns nullopt (skip, not failure) otherwise.
std::optional<BoundReport> linear_factor_norm_bound(const HpFunction& f,
                                                    const LinearOpa& lin,
                                                    double p,
                                                    double tol = kDefaultBoundTol);

}  // namespace hpopa
