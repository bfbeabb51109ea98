#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hpopa/bounds.hpp"
#include "hpopa/formulas.hpp"
#include "hpopa/solver.hpp"
#include "hpopa/types.hpp"

namespace hpopa {

/// One audited solve: the minimizer, every applicable bound, and (for
/// degree one) the closed-form cross-check.
struct SweepRecord {
  int instance_id = 0;
  std::string f_descriptor;
  double p = 2.0;
  int n = 0;
  int grid = 0;
  TaylorPoly coeffs;
  double residual_norm = 1.0;
  std::vector<double> orth_residuals;
  std::optional<Complex> a;
  std::optional<Complex> w;
  std::vector<BoundReport> bounds;
  std::optional<FormulaCrossCheck> formulas;
  bool converged = false;
  int iterations = 0;
};

/// Solves for degree n and degree 0 (for the constant-minimizer bounds),
/// evaluates every applicable inequality and formula, and aggregates.
/// Requires f(0) != 0. Solver non-convergence is recorded, not thrown;
/// bounds that presuppose a converged minimizer are then skipped.
SweepRecord audit(const HpFunction& f, double p, int n,
                  const SolverOptions& opts = {}, int instance_id = 0,
                  std::string descriptor = {});

struct PerPSummary {
  std::optional<double> min_abs_w;  // over converged, non-degenerate records
  int converged = 0;
  int degenerate = 0;     // constant degree-one minimizer, no root
  int nonconverged = 0;
};

struct SweepResult {
  std::vector<SweepRecord> records;  // grouped by p, then instance_id
  std::map<double, PerPSummary> summary;
};

/// Audits every corpus instance at every p (degree n). Instances are
/// independent; with threads > 1 they are evaluated concurrently and the
/// record layout is identical to the serial run.
SweepResult sweep_roots(const std::vector<HpFunction>& corpus,
                        const std::vector<double>& p_list, int n = 1,
                        int threads = 1, const SolverOptions& opts = {});

/// Degree sweep n = 0..n_max for a cyclic f (a polynomial with no zeros in
/// the open disk; anything else throws). Residual norms are nonincreasing
/// and the root-modulus floor sqrt(1 - residual^p) nondecreasing.
std::vector<SweepRecord> sweep_cyclic(const HpFunction& f, double p, int n_max,
                                      const SolverOptions& opts = {});

}  // namespace hpopa
