#include "hpopa/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "hpopa/boundary.hpp"
#include "hpopa/orthogonality.hpp"

namespace hpopa {

namespace {

void require_f0(const HpFunction& f, const char* who) {
  if (f.value_at_zero() == Complex{0.0, 0.0})
    throw std::invalid_argument(std::string(who) + ": requires f(0) != 0");
}

double norm_of(const std::vector<Complex>& samples, double p) {
  return p_norm(BoundaryGrid(std::vector<Complex>(samples)), p);
}

// ((1/M) sum |v|^q)^{1/q} for any q > 0; the interpolation estimate uses
// exponent p - 2, which may drop to 1 and below.
double power_mean(const std::vector<Complex>& samples, double q) {
  double acc = 0.0;
  for (const Complex& v : samples) acc += std::pow(std::abs(v), q);
  return std::pow(acc / static_cast<double>(samples.size()), 1.0 / q);
}

// ||f - f(0)||_p and ||f||_p, used by all three constant-minimizer bounds.
std::pair<double, double> centered_and_full_norm(const HpFunction& f, double p) {
  std::vector<Complex> centered(f.grid().samples());
  for (Complex& v : centered) v -= f.value_at_zero();
  return {norm_of(centered, p), p_norm(f.grid(), p)};
}

BoundReport make_report(std::string name, double lhs, double rhs, double slack,
                        double tol, std::string note = {}) {
  BoundReport rep;
  rep.name = std::move(name);
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.slack = slack;
  rep.satisfied = slack >= -tol;
  rep.note = std::move(note);
  return rep;
}

// Samples of a (z - w) f - 1 and of a z f - 1.
void linear_residual_samples(const HpFunction& f, Complex a, Complex w,
                             std::vector<Complex>& qf_minus_1,
                             std::vector<Complex>& azf_minus_1) {
  const std::vector<Complex> roots = unit_roots(f.grid_size());
  qf_minus_1.resize(roots.size());
  azf_minus_1.resize(roots.size());
  for (std::size_t j = 0; j < roots.size(); ++j) {
    const Complex azf = a * roots[j] * f.grid()[static_cast<int>(j)];
    azf_minus_1[j] = azf - 1.0;
    qf_minus_1[j] = azf - a * w * f.grid()[static_cast<int>(j)] - 1.0;
  }
}

}  // namespace

BoundReport deg0_upper_simple(const HpFunction& f, double p, Complex lambda,
                              double tol) {
  require_f0(f, "deg0_upper_simple");
  const PythagoreanParams par = pythag_params(p);
  const double r = par.lower_exponent;
  const auto [centered, full] = centered_and_full_norm(f, p);
  const double rhs = 1.0 / (std::pow(par.lower_const, 1.0 / r) *
                            std::pow(std::pow(centered, r) + std::pow(full, r), 1.0 / r));
  const double lhs = std::abs(lambda);
  return make_report("deg0_upper_simple", lhs, rhs, rhs - lhs, tol);
}

BoundReport deg0_upper_mvt(const HpFunction& f, double p, Complex lambda,
                           double tol) {
  require_f0(f, "deg0_upper_mvt");
  const PythagoreanParams par = pythag_params(p);
  const double r = par.lower_exponent;
  const auto [centered, full] = centered_and_full_norm(f, p);
  const double lhs = std::pow(std::abs(lambda), r - 1.0);
  const double rhs = r * std::abs(f.value_at_zero()) /
                     (par.lower_const * (std::pow(centered, r) + std::pow(full, r)));
  return make_report("deg0_upper_mvt", lhs, rhs, rhs - lhs, tol);
}

BoundReport deg0_lower(const HpFunction& f, double p, Complex lambda,
                       std::optional<Complex> c, double tol) {
  require_f0(f, "deg0_lower");
  const PythagoreanParams par = pythag_params(p);
  const double s = par.upper_exponent;
  const auto [centered, full] = centered_and_full_norm(f, p);
  const Complex cc = c.value_or(1.0 / f.value_at_zero());

  std::vector<Complex> cf_minus_1(f.grid().samples());
  for (Complex& v : cf_minus_1) v = cc * v - 1.0;
  const double comparison = norm_of(cf_minus_1, p);

  const double lhs = std::pow(std::abs(lambda), s);
  const double rhs = (1.0 - std::pow(comparison, s)) /
                     (par.upper_const * (std::pow(centered, s) + std::pow(full, s)));
  return make_report("deg0_lower", lhs, rhs, lhs - rhs, tol);
}

double diff_quotient_root_bound(double q0f_norm, double qf_minus_1_norm) {
  if (q0f_norm < 0.0 || qf_minus_1_norm < 0.0)
    throw std::invalid_argument("diff_quotient_root_bound: norms must be nonnegative");
  if (q0f_norm == 0.0 && qf_minus_1_norm == 0.0)
    throw std::invalid_argument("diff_quotient_root_bound: both norms zero");
  return q0f_norm / (q0f_norm + qf_minus_1_norm);
}

std::pair<BoundReport, BoundReport> root_interval(const HpFunction& f,
                                                  const LinearOpa& lin, double p,
                                                  double tol) {
  const PythagoreanParams par = pythag_params(p);
  std::vector<Complex> qf1, azf1;
  linear_residual_samples(f, lin.a, lin.w, qf1, azf1);
  const double n_qf1 = norm_of(qf1, p);
  const double n_azf1 = norm_of(azf1, p);
  const double n_af = std::abs(lin.a) * p_norm(f.grid(), p);
  const double abs_w = std::abs(lin.w);

  // For p >= 2 the lower side carries exponent 2 with the upper constant and
  // the upper side exponent p with the lower constant; mirrored for p < 2.
  const double lo_exp = p >= 2.0 ? 2.0 : p;
  const double lo_const = par.upper_const;
  const double hi_exp = p >= 2.0 ? p : 2.0;
  const double hi_const = par.lower_const;

  std::string lo_note, hi_note;
  double lo_rad = (std::pow(n_azf1, lo_exp) - std::pow(n_qf1, lo_exp)) /
                  (lo_const * std::pow(n_af, lo_exp));
  if (lo_rad < 0.0) {
    lo_rad = 0.0;
    lo_note = "radicand clamped at 0";
  }
  double hi_rad = (std::pow(n_azf1, hi_exp) - std::pow(n_qf1, hi_exp)) /
                  (hi_const * std::pow(n_af, hi_exp));
  if (hi_rad < 0.0) {
    hi_rad = 0.0;
    hi_note = "radicand clamped at 0";
  }
  const double lower = std::pow(lo_rad, 1.0 / lo_exp);
  const double upper = std::pow(hi_rad, 1.0 / hi_exp);

  BoundReport lo = make_report("root_interval_lower", lower, abs_w,
                               abs_w - lower, tol, lo_note);
  BoundReport hi = make_report("root_interval_upper", abs_w, upper,
                               upper - abs_w, tol, hi_note);
  return {lo, hi};
}

BoundReport leading_coeff_bound(const HpFunction& f, const LinearOpa& lin,
                                double p, double tol) {
  require_f0(f, "leading_coeff_bound");
  if (lin.w == Complex{0.0, 0.0})
    throw std::invalid_argument("leading_coeff_bound: vacuous for w = 0");
  const PythagoreanParams par = pythag_params(p);
  const double r = par.lower_exponent;
  const Complex wf0 = lin.w * f.value_at_zero();

  const std::vector<Complex> roots = unit_roots(f.grid_size());
  std::vector<Complex> shifted(roots.size()), shifted_plus(roots.size());
  for (std::size_t j = 0; j < roots.size(); ++j) {
    const Complex u = (roots[j] - lin.w) * f.grid()[static_cast<int>(j)];
    shifted[j] = u;
    shifted_plus[j] = u + wf0;
  }
  const double lhs = std::pow(std::abs(lin.a), r - 1.0);
  const double rhs = r * std::abs(wf0) /
                     (par.lower_const * std::pow(norm_of(shifted_plus, p), r) +
                      par.lower_const * std::pow(norm_of(shifted, p), r));
  return make_report("leading_coeff", lhs, rhs, rhs - lhs, tol);
}

double root_modulus_lower_bound(double residual_norm, double p) {
  if (!(p > 1.0) || !std::isfinite(p))
    throw std::invalid_argument("root_modulus_lower_bound: p must lie in (1, inf)");
  if (residual_norm < 0.0 || residual_norm > 1.0 + 1e-9)
    throw std::domain_error(
        "root_modulus_lower_bound: residual norm of a minimizer cannot exceed 1");
  const double r = std::min(residual_norm, 1.0);
  return std::sqrt(std::max(0.0, 1.0 - std::pow(r, p)));
}

BoundReport norm_interpolation_check(const HpFunction& f, double p, double k,
                                     double tol) {
  if (!(p > 2.0)) throw std::invalid_argument("norm_interpolation_check: requires p > 2");
  if (!(k >= 2.0) || !(k < p))
    throw std::invalid_argument("norm_interpolation_check: requires 2 <= k < p");
  const double fn = p_norm(f.grid(), p);
  if (std::abs(fn - 1.0) > 1e-9)
    throw std::invalid_argument("norm_interpolation_check: normalize f to unit p-norm first");

  double lhs = 0.0;
  std::vector<Complex> phi(f.grid().samples());
  for (Complex& v : phi) {
    const double mag = std::abs(v);
    lhs += std::pow(mag, k);
    v = Complex{std::pow(mag, 2.0 / (p - 2.0)), 0.0};
  }
  lhs /= f.grid_size();
  const double rhs = std::pow(power_mean(phi, p - 2.0), p - k);
  return make_report("norm_interpolation", lhs, rhs, rhs - lhs, tol);
}

std::optional<BoundReport> linear_factor_norm_bound(const HpFunction& f,
                                                    const LinearOpa& lin,
                                                    double p, double tol) {
  const double abs_w = std::abs(lin.w);
  if (abs_w >= 1.0) return std::nullopt;  // hypothesis 0 < |w| < 1

  std::vector<Complex> qf(f.grid().samples());
  const std::vector<Complex> roots = unit_roots(f.grid_size());
  for (std::size_t j = 0; j < qf.size(); ++j)
    qf[j] *= lin.a * (roots[j] - lin.w);
  const double lhs = (1.0 - abs_w) * std::abs(lin.a) * p_norm(f.grid(), p);
  const double rhs = norm_of(qf, p);
  return make_report("linear_factor_norm", lhs, rhs, rhs - lhs, tol);
}

}  // namespace hpopa
