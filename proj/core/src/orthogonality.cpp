#include "hpopa/orthogonality.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hpopa {

namespace {

constexpr double kZeroMag = 1e-300;

// The orthogonality integral (1/M) sum |f|^{p-2} conj(f) g, with the
// |0|^{p-2} * 0 convention. Computed as |f|^{p-1} * phase(conj f) * g so no
// intermediate overflows for p near 1.
Complex orth_integral(const BoundaryGrid& f, const BoundaryGrid& g, double p) {
  if (f.size() != g.size())
    throw std::invalid_argument("orthogonality: grid size mismatch");
  Complex acc{0.0, 0.0};
  for (int j = 0; j < f.size(); ++j) {
    const double mag = std::abs(f[j]);
    if (mag < kZeroMag) continue;
    acc += std::pow(mag, p - 1.0) * (std::conj(f[j]) / mag) * g[j];
  }
  return acc / static_cast<double>(f.size());
}

void require_p(double p) {
  if (!(p > 1.0) || !std::isfinite(p))
    throw std::invalid_argument("p must lie in (1, inf)");
}

}  // namespace

OrthogonalityReport bj_test(const BoundaryGrid& f, const BoundaryGrid& g,
                            double p, double tol) {
  require_p(p);
  const double fn = p_norm(f, p);
  if (fn == 0.0) throw std::invalid_argument("bj_test: f is identically zero");
  const double gn = p_norm(g, p);

  OrthogonalityReport rep;
  rep.residual = orth_integral(f, g, p);
  rep.relative_residual =
      gn == 0.0 ? 0.0 : std::abs(rep.residual) / (std::pow(fn, p - 1.0) * gn);
  rep.is_orthogonal = rep.relative_residual <= tol;
  return rep;
}

BoundaryGrid norming_functional(const BoundaryGrid& f, double p) {
  require_p(p);
  const double fn = p_norm(f, p);
  if (fn == 0.0)
    throw std::invalid_argument("norming_functional: f is identically zero");
  BoundaryGrid dual = dual_function(f, p - 1.0);
  std::vector<Complex> out(dual.samples());
  const double scale = 1.0 / std::pow(fn, p - 1.0);
  for (Complex& v : out) v *= scale;
  return BoundaryGrid(std::move(out));
}

BoundaryGrid orthogonalize(const BoundaryGrid& x, const BoundaryGrid& g,
                           double p) {
  require_p(p);
  const double xn = p_norm(x, p);
  if (xn == 0.0)
    throw std::invalid_argument("orthogonalize: x is identically zero");
  const Complex coeff = orth_integral(x, g, p) / std::pow(xn, p);
  std::vector<Complex> out(g.samples());
  for (int j = 0; j < g.size(); ++j) out[j] -= x[j] * coeff;
  return BoundaryGrid(std::move(out));
}

PythagoreanParams pythag_params(double p) {
  require_p(p);
  PythagoreanParams out;
  out.p = p;
  const double k_weak = 1.0 / (std::pow(2.0, p - 1.0) - 1.0);
  if (p <= 2.0) {
    out.lower_exponent = 2.0;
    out.lower_const = p - 1.0;
    out.upper_exponent = p;
    out.upper_const = k_weak;
  } else {
    out.lower_exponent = p;
    out.lower_const = k_weak;
    out.upper_exponent = 2.0;
    out.upper_const = p - 1.0;
  }
  return out;
}

PythagoreanReport check_pythagorean(const BoundaryGrid& x,
                                    const BoundaryGrid& y, double p) {
  const OrthogonalityReport orth = bj_test(x, y, p, kDefaultOrthTol);
  if (!orth.is_orthogonal) {
    std::ostringstream msg;
    msg << "check_pythagorean: hypothesis x perp y violated, relative residual "
        << orth.relative_residual;
    throw std::invalid_argument(msg.str());
  }

  const PythagoreanParams params = pythag_params(p);
  std::vector<Complex> sum(x.samples());
  for (int j = 0; j < x.size(); ++j) sum[j] += y[j];
  const double ns = p_norm(BoundaryGrid(std::move(sum)), p);
  const double nx = p_norm(x, p);
  const double ny = p_norm(y, p);

  PythagoreanReport rep;
  rep.params = params;
  rep.lower_slack = std::pow(ns, params.lower_exponent) -
                    std::pow(nx, params.lower_exponent) -
                    params.lower_const * std::pow(ny, params.lower_exponent);
  rep.upper_slack = std::pow(nx, params.upper_exponent) +
                    params.upper_const * std::pow(ny, params.upper_exponent) -
                    std::pow(ns, params.upper_exponent);
  return rep;
}

}  // namespace hpopa
