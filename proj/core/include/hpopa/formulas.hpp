#pragma once

#include <string>
#include <vector>

#include "hpopa/solver.hpp"
#include "hpopa/types.hpp"

namespace hpopa {

/// The four boundary moments taken against the weight |Q f - 1|^{p-2} after
/// normalizing f to unit p-norm (the normalization the closed-form root and
/// coefficient expressions assume). In the comments below f denotes the
/// normalized function and Q the correspondingly rescaled linear polynomial,
/// so the product Q f is unchanged:
///   f_mean        = (1/M) sum weight * conj(f)          (A)
///   zf_mean       = (1/M) sum weight * conj(z f)        (B)
///   f_sq_mean     = (1/M) sum weight * |f|^2            (C, real positive)
///   zbar_f_sq_mean= (1/M) sum weight * conj(z) |f|^2    (D)
struct WeightedMoments {
  Complex f_mean;
  Complex zf_mean;
  Complex f_sq_mean;
  Complex zbar_f_sq_mean;
  double p = 2.0;
  double scale = 1.0;  // p-norm of the original f; moments refer to f/scale
  // For p < 2 the weight is unbounded where Q f = 1; the closed forms are
  // guaranteed when max |Q f| < 1 on the grid. Always true for p >= 2.
  bool weight_valid = true;
};

/// A closed-form value together with its denominator-degeneracy flag; the
/// flag is raised when |denominator| < 1e-10 (|numerator| + 1) and the value
/// must then be excluded from cross-checks rather than averaged in.
struct FormulaValue {
  Complex value;
  bool degenerate = false;
};

/// The three closed forms for the root of the degree-one minimizer, in terms
/// of the moments (A, B, C, D) and the normalized leading coefficient a:
///   moment_ratio = (B conj(D) - A C) / (B C - A D)
///   via_c        = (a conj(D) - A) / (a C)
///   via_d        = (a C - B) / (a D)
struct WFormulaSet {
  FormulaValue moment_ratio;
  FormulaValue via_c;
  FormulaValue via_d;
};

/// The two closed forms for the normalized leading coefficient:
///   via_system  = (B - w A) / (2 C - w conj(D) - conj(w) D)
///   closed_form = (A D - B C) / (|D|^2 - C^2)
/// The via_system denominator can vanish at legitimate solutions, which is
/// why the degeneracy flags are mandatory.
struct AFormulaSet {
  FormulaValue via_system;
  FormulaValue closed_form;
};

struct FormulaCrossCheck {
  WFormulaSet w;
  AFormulaSet a;
  Complex w_solver;
  Complex a_solver;             // solver convention (unnormalized f)
  Complex a_solver_normalized;  // scale * a_solver, the convention of the formulas
  double scale = 1.0;
  bool weight_valid = true;
  // Max relative deviation among the non-degenerate closed-form roots and
  // the solver root; 0 when fewer than two candidates.
  double max_pairwise_w_deviation = 0.0;
};

/// Computes the four weighted moments for a degree-one polynomial q_linear
/// (solver convention). Normalizes f internally and records the scale.
/// Throws on a zero function. For p < 2 the weight floor max(|Qf-1|, 1e-12)
/// is applied and weight_valid records the sufficient condition.
WeightedMoments weighted_moments(const HpFunction& f,
                                 const TaylorPoly& q_linear, double p);

/// Max over the grid of | |Qf-1|^2 - (1 - Qf - conj(Qf) + |Qf|^2) |, the
/// algebraic expansion of the p = 4 weight. Zero up to roundoff.
double p4_weight_expansion_check(const HpFunction& f, const TaylorPoly& q);

WFormulaSet w_formulas(const WeightedMoments& m, Complex a_normalized);
AFormulaSet a_formulas(const WeightedMoments& m, Complex w);

/// Solves the 2x2 linear system [C conj(D); D C] [-a w; a] = [A; B] with the
/// true matrix inverse (determinant C^2 - conj(D) D) and returns (a, w).
/// Throws on a singular matrix, and on a vanishing leading coefficient
/// (constant minimizer, no root).
std::pair<Complex, Complex> solve_moment_system(const WeightedMoments& m);

/// Full cross-check of every closed form against a converged degree-one
/// solver result.
FormulaCrossCheck cross_check(const HpFunction& f, const LinearOpa& lin);

}  // namespace hpopa
