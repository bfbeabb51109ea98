#pragma once

#include <optional>
#include <vector>

#include "hpopa/types.hpp"

namespace hpopa {

std::vector<double> default_epsilon_schedule();

struct SolverOptions {
  enum class Init { L2, Zero };

  int max_iters = 200;      // per smoothing stage
  double grad_tol = 1e-11;  // max relative orthogonality residual at the optimum
  // Smoothing levels for 1 < p < 2, strictly decreasing to a floor >= 1e-14;
  // each stage warm-starts the next and a final unsmoothed stage polishes.
  std::vector<double> epsilon_schedule = default_epsilon_schedule();
  double line_search_shrink = 0.5;
  double line_search_c1 = 1e-4;
  Init init = Init::L2;
};

struct OpaResult {
  int n = 0;
  double p = 2.0;
  TaylorPoly coeffs;           // exactly n+1 entries
  double residual_norm = 1.0;  // ||q f - 1||_p
  // Relative orthogonality residuals of q f - 1 against z^k f, k = 0..n.
  std::vector<double> orth_residuals;
  int iterations = 0;
  bool converged = false;
};

/// Factored form q = a (z - w) of a degree-one result.
struct LinearOpa {
  Complex a;
  Complex w;
  OpaResult source;
};

/// Phi(c) = ||1 - q f||_p^p with q the polynomial with coefficients c.
/// Convex in the real and imaginary parts of the coefficients.
double objective(const HpFunction& f, const TaylorPoly& coeffs, double p);

/// Gradient of Phi with respect to the coefficients, packaged per complex
/// coefficient as d/dRe + i d/dIm (twice the conjugate Wirtinger derivative):
///   g_k = -p (1/M) sum |r|^{p-2} r conj(z^k f),   r = 1 - q f.
/// Vanishing of every component is the optimality system. For p < 2 a
/// positive smoothing value replaces |r|^2 by |r|^2 + smoothing.
std::vector<Complex> gradient(const HpFunction& f, const TaylorPoly& coeffs,
                              double p, double smoothing = 0.0);

/// Exact degree-n minimizer of ||1 - q f||_2 by the normal equations on the
/// Gram matrix of {f, zf, ..., z^n f}. Serves as the independent oracle for
/// the iterative path at p = 2 and as its initializer for every p.
OpaResult solve_l2(const HpFunction& f, int n);

/// Minimizer of ||1 - q f||_p over polynomials of degree at most n,
/// 1 < p < infinity. Damped Newton on the 2(n+1) real coefficient variables
/// with backtracking line search; for p < 2 the weight singularity is handled
/// by the epsilon schedule. Convergence is declared on the maximum relative
/// orthogonality residual of the optimal residual against z^k f. Failure to
/// converge is reported through the flag, never thrown.
OpaResult solve(const HpFunction& f, int n, double p,
                const SolverOptions& opts = {});

/// Extracts a = coeffs[1], w = -coeffs[0]/coeffs[1] from a degree-one result.
/// Returns nullopt when the leading coefficient is degenerate (the degree-one
/// minimizer collapsed to a constant, as for f = 1).
std::optional<LinearOpa> linear_factor(const OpaResult& res);

}  // namespace hpopa
