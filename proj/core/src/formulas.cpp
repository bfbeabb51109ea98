#include "hpopa/formulas.hpp"

#include <cmath>
#include <stdexcept>

#include "hpopa/boundary.hpp"

namespace hpopa {

namespace {

constexpr double kWeightFloor = 1e-12;

FormulaValue ratio(Complex num, Complex den) {
  FormulaValue out;
  out.degenerate = std::abs(den) < 1e-10 * (std::abs(num) + 1.0);
  out.value = den == Complex{0.0, 0.0} ? Complex{0.0, 0.0} : num / den;
  return out;
}

double rel_dev(Complex x, Complex y) {
  const double scale = std::max(std::abs(x), std::abs(y));
  return scale < 1e-30 ? 0.0 : std::abs(x - y) / scale;
}

}  // namespace

WeightedMoments weighted_moments(const HpFunction& f, const TaylorPoly& q_linear,
                                 double p) {
  if (!(p > 1.0) || !std::isfinite(p))
    throw std::invalid_argument("weighted_moments: p must lie in (1, inf)");
  const double scale = p_norm(f.grid(), p);
  if (scale == 0.0)
    throw std::invalid_argument("weighted_moments: f is identically zero");

  WeightedMoments m;
  m.p = p;
  m.scale = scale;

  const std::vector<Complex> roots = unit_roots(f.grid_size());
  const int grid = f.grid_size();

  // The product Q f is invariant under the normalization f -> f/scale,
  // Q -> scale Q, so the weight is computed from the raw product.
  Complex A{0, 0}, B{0, 0}, C{0, 0}, D{0, 0};
  double max_qf = 0.0;
  for (int j = 0; j < grid; ++j) {
    const Complex qf = q_linear.eval(roots[j]) * f.grid()[j];
    max_qf = std::max(max_qf, std::abs(qf));
    double base = std::abs(qf - 1.0);
    if (p < 2.0) base = std::max(base, kWeightFloor);
    const double weight = std::pow(base, p - 2.0);
    const Complex fn = f.grid()[j] / scale;
    const double fn_sq = std::norm(fn);
    A += weight * std::conj(fn);
    B += weight * std::conj(roots[j] * fn);
    C += weight * fn_sq;
    D += weight * std::conj(roots[j]) * fn_sq;
  }
  m.f_mean = A / static_cast<double>(grid);
  m.zf_mean = B / static_cast<double>(grid);
  m.f_sq_mean = C / static_cast<double>(grid);
  m.zbar_f_sq_mean = D / static_cast<double>(grid);
  m.weight_valid = p >= 2.0 || max_qf < 1.0;
  return m;
}

double p4_weight_expansion_check(const HpFunction& f, const TaylorPoly& q) {
  const std::vector<Complex> roots = unit_roots(f.grid_size());
  double worst = 0.0;
  for (int j = 0; j < f.grid_size(); ++j) {
    const Complex qf = q.eval(roots[j]) * f.grid()[j];
    const double direct = std::norm(qf - 1.0);
    const Complex expanded = 1.0 - qf - std::conj(qf) + std::norm(qf);
    worst = std::max(worst, std::abs(direct - expanded));
  }
  return worst;
}

WFormulaSet w_formulas(const WeightedMoments& m, Complex a_normalized) {
  const Complex A = m.f_mean, B = m.zf_mean, C = m.f_sq_mean,
                D = m.zbar_f_sq_mean;
  const Complex a = a_normalized;
  WFormulaSet out;
  out.moment_ratio = ratio(B * std::conj(D) - A * C, B * C - A * D);
  out.via_c = ratio(a * std::conj(D) - A, a * C);
  out.via_d = ratio(a * C - B, a * D);
  return out;
}

AFormulaSet a_formulas(const WeightedMoments& m, Complex w) {
  const Complex A = m.f_mean, B = m.zf_mean, C = m.f_sq_mean,
                D = m.zbar_f_sq_mean;
  AFormulaSet out;
  out.via_system = ratio(B - w * A, 2.0 * C - w * std::conj(D) - std::conj(w) * D);
  out.closed_form = ratio(A * D - B * C, Complex{std::norm(D), 0.0} - C * C);
  return out;
}

std::pair<Complex, Complex> solve_moment_system(const WeightedMoments& m) {
  const Complex A = m.f_mean, B = m.zf_mean, C = m.f_sq_mean,
                D = m.zbar_f_sq_mean;
  // True inverse of [C conj(D); D C]: determinant C^2 - conj(D) D.
  const Complex det = C * C - std::conj(D) * D;
  if (std::abs(det) <= 1e-12)
    throw std::domain_error("solve_moment_system: singular moment matrix");
  const Complex minus_aw = (C * A - std::conj(D) * B) / det;
  const Complex a = (-D * A + C * B) / det;
  if (std::abs(a) <= 1e-12 * (std::abs(minus_aw) + 1.0))
    throw std::domain_error(
        "solve_moment_system: leading coefficient vanishes, root undefined");
  return {a, -minus_aw / a};
}

FormulaCrossCheck cross_check(const HpFunction& f, const LinearOpa& lin) {
  FormulaCrossCheck out;
  const double p = lin.source.p;
  const WeightedMoments m = weighted_moments(f, lin.source.coeffs, p);
  out.scale = m.scale;
  out.weight_valid = m.weight_valid;
  out.w_solver = lin.w;
  out.a_solver = lin.a;
  out.a_solver_normalized = m.scale * lin.a;
  out.w = w_formulas(m, out.a_solver_normalized);
  out.a = a_formulas(m, out.w_solver);

  std::vector<Complex> candidates{out.w_solver};
  if (!out.w.moment_ratio.degenerate) candidates.push_back(out.w.moment_ratio.value);
  if (!out.w.via_c.degenerate) candidates.push_back(out.w.via_c.value);
  if (!out.w.via_d.degenerate) candidates.push_back(out.w.via_d.value);
  double worst = 0.0;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = i + 1; j < candidates.size(); ++j)
      worst = std::max(worst, rel_dev(candidates[i], candidates[j]));
  out.max_pairwise_w_deviation = worst;
  return out;
}

}  // namespace hpopa
