#include "hpopa/solver.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "hpopa/boundary.hpp"

namespace hpopa {

namespace {

constexpr double kZeroMag = 1e-300;
// Below this residual norm the inverse is exact to machine precision and the
// relative orthogonality residuals are 0/0; the solve is declared optimal.
constexpr double kExactResidualTol = 1e-13;

struct Problem {
  int m = 0;  // number of coefficients, n + 1
  int grid = 0;
  double p = 2.0;
  double f_pnorm = 0.0;
  // basis[k][j] = z_j^k f(z_j)
  std::vector<std::vector<Complex>> basis;
};

Problem make_problem(const HpFunction& f, int n, double p) {
  Problem pr;
  pr.m = n + 1;
  pr.grid = f.grid_size();
  pr.p = p;
  pr.f_pnorm = p_norm(f.grid(), p);
  pr.basis.resize(pr.m);
  pr.basis[0] = f.grid().samples();
  const std::vector<Complex> roots = unit_roots(pr.grid);
  for (int k = 1; k < pr.m; ++k) {
    pr.basis[k].resize(pr.grid);
    for (int j = 0; j < pr.grid; ++j) pr.basis[k][j] = pr.basis[k - 1][j] * roots[j];
  }
  return pr;
}

void eval_residual(const Problem& pr, const std::vector<Complex>& c,
                   std::vector<Complex>& r) {
  r.assign(pr.grid, Complex{1.0, 0.0});
  for (int k = 0; k < pr.m; ++k) {
    if (c[k] == Complex{0.0, 0.0}) continue;
    const Complex ck = c[k];
    const std::vector<Complex>& bk = pr.basis[k];
    for (int j = 0; j < pr.grid; ++j) r[j] -= ck * bk[j];
  }
}

double smoothed_objective(const std::vector<Complex>& r, double p, double eps) {
  double acc = 0.0;
  for (const Complex& v : r) acc += std::pow(std::norm(v) + eps, 0.5 * p);
  return acc / static_cast<double>(r.size());
}

// g_k = -p (1/M) sum t^{(p-2)/2} r conj(basis_k), t = |r|^2 + eps.
void smoothed_gradient(const Problem& pr, const std::vector<Complex>& r,
                       double eps, std::vector<Complex>& g) {
  const double p = pr.p;
  g.assign(pr.m, Complex{0.0, 0.0});
  for (int j = 0; j < pr.grid; ++j) {
    const double t = std::norm(r[j]) + eps;
    if (t < kZeroMag) continue;
    const Complex pr_j = std::pow(t, 0.5 * (p - 2.0)) * r[j];
    for (int k = 0; k < pr.m; ++k) g[k] -= p * pr_j * std::conj(pr.basis[k][j]);
  }
  for (Complex& v : g) v /= static_cast<double>(pr.grid);
}

// Second Wirtinger blocks of the smoothed objective:
//   P_kl = d2/dcbar_k dc_l, S_kl = d2/dcbar_k dcbar_l.
// P is Hermitian PSD by convexity, S symmetric (zero at p = 2, eps = 0).
void hessian_blocks(const Problem& pr, const std::vector<Complex>& r, double eps,
                    Eigen::MatrixXcd& P, Eigen::MatrixXcd& S) {
  const double p = pr.p;
  P.setZero(pr.m, pr.m);
  S.setZero(pr.m, pr.m);
  for (int j = 0; j < pr.grid; ++j) {
    const double t = std::norm(r[j]) + eps;
    if (t < kZeroMag) continue;
    const double w1 = std::pow(t, 0.5 * (p - 2.0));
    const double ratio = std::norm(r[j]) / t;  // in [0, 1]
    const double pw = 0.5 * p * w1 * (1.0 + 0.5 * (p - 2.0) * ratio);
    const Complex sw = 0.25 * p * (p - 2.0) * w1 * (r[j] * r[j] / t);
    for (int k = 0; k < pr.m; ++k) {
      const Complex bk = std::conj(pr.basis[k][j]);
      for (int l = 0; l < pr.m; ++l) {
        P(k, l) += pw * bk * pr.basis[l][j];
        S(k, l) += sw * bk * std::conj(pr.basis[l][j]);
      }
    }
  }
  P /= static_cast<double>(pr.grid);
  S /= static_cast<double>(pr.grid);
}

// Unsmoothed relative orthogonality residuals of r against each basis
// function, the scale-free optimality certificate.
std::vector<double> relative_orth_residuals(const Problem& pr,
                                            const std::vector<Complex>& r,
                                            double r_pnorm) {
  std::vector<double> out(pr.m, 0.0);
  if (r_pnorm <= kExactResidualTol || pr.f_pnorm == 0.0) return out;
  const double p = pr.p;
  const double denom = std::pow(r_pnorm, p - 1.0) * pr.f_pnorm;
  for (int k = 0; k < pr.m; ++k) {
    Complex acc{0.0, 0.0};
    for (int j = 0; j < pr.grid; ++j) {
      const double mag = std::abs(r[j]);
      if (mag < kZeroMag) continue;
      acc += std::pow(mag, p - 1.0) * (std::conj(r[j]) / mag) * pr.basis[k][j];
    }
    out[k] = std::abs(acc / static_cast<double>(pr.grid)) / denom;
  }
  return out;
}

// Newton direction: solve P d + S conj(d) = -g/2 through the real 2m x 2m
// embedding (the true Newton system for the real coefficient variables).
// Falls back to steepest descent if the factorization stalls or the
// direction fails to descend.
std::vector<Complex> newton_direction(const Eigen::MatrixXcd& P,
                                      const Eigen::MatrixXcd& S,
                                      const std::vector<Complex>& g) {
  const int m = static_cast<int>(g.size());
  Eigen::MatrixXd H(2 * m, 2 * m);
  H.topLeftCorner(m, m) = P.real() + S.real();
  H.topRightCorner(m, m) = -P.imag() + S.imag();
  H.bottomLeftCorner(m, m) = P.imag() + S.imag();
  H.bottomRightCorner(m, m) = P.real() - S.real();

  Eigen::VectorXd rhs(2 * m);
  for (int k = 0; k < m; ++k) {
    rhs(k) = -0.5 * g[k].real();
    rhs(m + k) = -0.5 * g[k].imag();
  }

  const double scale = H.diagonal().cwiseAbs().maxCoeff();
  double ridge = 0.0;
  for (int attempt = 0; attempt < 4; ++attempt) {
    Eigen::MatrixXd Hr = H;
    if (ridge > 0.0) Hr.diagonal().array() += ridge;
    Eigen::LDLT<Eigen::MatrixXd> ldlt(Hr);
    if (ldlt.info() == Eigen::Success) {
      Eigen::VectorXd x = ldlt.solve(rhs);
      if (x.allFinite()) {
        std::vector<Complex> d(m);
        double descent = 0.0;
        for (int k = 0; k < m; ++k) {
          d[k] = Complex{x(k), x(m + k)};
          descent += g[k].real() * x(k) + g[k].imag() * x(m + k);
        }
        if (descent < 0.0) return d;
      }
    }
    ridge = (ridge == 0.0) ? 1e-12 * std::max(scale, 1.0) : ridge * 100.0;
  }

  std::vector<Complex> d(m);
  for (int k = 0; k < m; ++k) d[k] = -g[k];
  return d;
}

double directional_derivative(const std::vector<Complex>& g,
                              const std::vector<Complex>& d) {
  double acc = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k)
    acc += g[k].real() * d[k].real() + g[k].imag() * d[k].imag();
  return acc;
}

void validate_options(const SolverOptions& opts) {
  if (opts.max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
  if (!(opts.grad_tol > 0.0)) throw std::invalid_argument("grad_tol must be positive");
  double prev = std::numeric_limits<double>::infinity();
  for (double e : opts.epsilon_schedule) {
    if (!(e >= 1e-14) || !(e < prev))
      throw std::invalid_argument(
          "epsilon_schedule must be strictly decreasing with floor >= 1e-14");
    prev = e;
  }
  if (!(opts.line_search_shrink > 0.0) || !(opts.line_search_shrink < 1.0))
    throw std::invalid_argument("line_search_shrink must lie in (0, 1)");
  if (!(opts.line_search_c1 > 0.0) || !(opts.line_search_c1 < 1.0))
    throw std::invalid_argument("line_search_c1 must lie in (0, 1)");
}

}  // namespace

std::vector<double> default_epsilon_schedule() {
  std::vector<double> out;
  for (double e = 1e-2; e >= 1e-12 * (1.0 - 1e-9); e *= 0.1) out.push_back(e);
  return out;
}

double objective(const HpFunction& f, const TaylorPoly& coeffs, double p) {
  if (!(p > 1.0) || !std::isfinite(p))
    throw std::invalid_argument("objective: p must lie in (1, inf)");
  std::vector<Complex> r(f.grid().samples().size(), Complex{1.0, 0.0});
  const std::vector<Complex> roots = unit_roots(f.grid_size());
  for (int j = 0; j < f.grid_size(); ++j)
    r[j] = 1.0 - coeffs.eval(roots[j]) * f.grid()[j];
  return smoothed_objective(r, p, 0.0);
}

std::vector<Complex> gradient(const HpFunction& f, const TaylorPoly& coeffs,
                              double p, double smoothing) {
  if (!(p > 1.0) || !std::isfinite(p))
    throw std::invalid_argument("gradient: p must lie in (1, inf)");
  if (p < 2.0 && smoothing <= 0.0)
    throw std::invalid_argument("gradient: p < 2 requires a positive smoothing value");
  const int n = std::max<int>(0, static_cast<int>(coeffs.coeffs().size()) - 1);
  Problem pr = make_problem(f, n, p);
  std::vector<Complex> c(coeffs.coeffs());
  c.resize(pr.m, Complex{0.0, 0.0});
  std::vector<Complex> r;
  eval_residual(pr, c, r);
  std::vector<Complex> g;
  smoothed_gradient(pr, r, smoothing, g);
  return g;
}

OpaResult solve_l2(const HpFunction& f, int n) {
  if (n < 0) throw std::invalid_argument("solve_l2: n must be nonnegative");
  Problem pr = make_problem(f, n, 2.0);
  if (pr.f_pnorm == 0.0)
    throw std::invalid_argument("solve_l2: f is identically zero (singular Gram matrix)");

  const int m = pr.m;
  Eigen::MatrixXcd G(m, m);
  Eigen::VectorXcd b(m);
  for (int row = 0; row < m; ++row) {
    Complex acc{0.0, 0.0};
    for (int j = 0; j < pr.grid; ++j) acc += std::conj(pr.basis[row][j]);
    b(row) = acc / static_cast<double>(pr.grid);
    for (int col = 0; col < m; ++col) {
      Complex gacc{0.0, 0.0};
      for (int j = 0; j < pr.grid; ++j)
        gacc += pr.basis[col][j] * std::conj(pr.basis[row][j]);
      G(row, col) = gacc / static_cast<double>(pr.grid);
    }
  }

  Eigen::LDLT<Eigen::MatrixXcd> ldlt(G);
  Eigen::VectorXcd c = ldlt.solve(b);
  if (ldlt.info() != Eigen::Success || !c.allFinite())
    throw std::domain_error("solve_l2: singular Gram matrix");

  std::vector<Complex> cv(m);
  for (int k = 0; k < m; ++k) cv[k] = c(k);
  std::vector<Complex> r;
  eval_residual(pr, cv, r);

  OpaResult res;
  res.n = n;
  res.p = 2.0;
  res.coeffs = TaylorPoly(cv);
  res.residual_norm = p_norm(BoundaryGrid(std::vector<Complex>(r)), 2.0);
  res.orth_residuals = relative_orth_residuals(pr, r, res.residual_norm);
  res.iterations = 1;
  res.converged = true;
  for (double v : res.orth_residuals) res.converged = res.converged && v <= 1e-9;
  return res;
}

OpaResult solve(const HpFunction& f, int n, double p, const SolverOptions& opts) {
  if (!(p > 1.0) || !std::isfinite(p))
    throw std::invalid_argument("solve: p must lie in (1, inf)");
  if (n < 0) throw std::invalid_argument("solve: n must be nonnegative");
  validate_options(opts);

  Problem pr = make_problem(f, n, p);
  if (pr.f_pnorm == 0.0)
    throw std::invalid_argument("solve: f is identically zero");

  std::vector<Complex> c(pr.m, Complex{0.0, 0.0});
  if (opts.init == SolverOptions::Init::L2) {
    const OpaResult warm = solve_l2(f, n);
    c = warm.coeffs.coeffs();
    c.resize(pr.m, Complex{0.0, 0.0});
  }

  std::vector<double> stages;
  if (p < 2.0) stages = opts.epsilon_schedule;
  stages.push_back(0.0);

  const double stage_tol = std::max(0.1 * opts.grad_tol, 1e-11);

  OpaResult res;
  res.n = n;
  res.p = p;
  res.iterations = 0;
  res.converged = false;

  std::vector<Complex> r, g, d, c_try, r_try;
  Eigen::MatrixXcd P, S;
  bool done = false;

  for (std::size_t si = 0; si < stages.size() && !done; ++si) {
    const double eps = stages[si];
    const bool final_stage = (si + 1 == stages.size());

    for (int it = 0; it < opts.max_iters; ++it) {
      eval_residual(pr, c, r);
      const double rn = p_norm(BoundaryGrid(std::vector<Complex>(r)), p);
      if (rn <= kExactResidualTol) {
        res.converged = true;
        done = true;
        break;
      }
      if (final_stage) {
        const std::vector<double> rel = relative_orth_residuals(pr, r, rn);
        double worst = 0.0;
        for (double v : rel) worst = std::max(worst, v);
        if (worst <= opts.grad_tol) {
          res.converged = true;
          done = true;
          break;
        }
      }

      smoothed_gradient(pr, r, eps, g);
      if (!final_stage) {
        // Stage exit on the smoothed certificate; the final stage insists on
        // the unsmoothed one above.
        const double rn_sm = std::pow(smoothed_objective(r, p, eps), 1.0 / p);
        const double denom = p * std::pow(rn_sm, p - 1.0) * pr.f_pnorm;
        double worst = 0.0;
        for (const Complex& v : g) worst = std::max(worst, std::abs(v) / denom);
        if (worst <= stage_tol) break;
      }

      hessian_blocks(pr, r, eps, P, S);
      d = newton_direction(P, S, g);
      const double dd = directional_derivative(g, d);
      if (!(dd < 0.0)) break;  // stationary up to roundoff

      const double phi0 = smoothed_objective(r, p, eps);
      // Near the optimum the decrease drops below the precision of the
      // objective itself; the allowance lets the full Newton step through so
      // the quadratic local phase can finish the job.
      const double allowance = 1e-15 * (1.0 + std::abs(phi0));
      double eta = 1.0;
      bool accepted = false;
      for (int ls = 0; ls < 60; ++ls) {
        c_try = c;
        for (int k = 0; k < pr.m; ++k) c_try[k] += eta * d[k];
        eval_residual(pr, c_try, r_try);
        const double phi_try = smoothed_objective(r_try, p, eps);
        if (phi_try <= phi0 + opts.line_search_c1 * eta * dd + allowance) {
          assert(phi_try <= phi0 + allowance);  // descent, up to roundoff
          c = c_try;
          accepted = true;
          break;
        }
        eta *= opts.line_search_shrink;
      }
      ++res.iterations;
      if (!accepted) break;  // no further progress at this smoothing level
    }
  }

  eval_residual(pr, c, r);
  res.coeffs = TaylorPoly(c);
  res.residual_norm = p_norm(BoundaryGrid(std::vector<Complex>(r)), p);
  res.orth_residuals = relative_orth_residuals(pr, r, res.residual_norm);
  if (!res.converged) {
    double worst = 0.0;
    for (double v : res.orth_residuals) worst = std::max(worst, v);
    res.converged = res.residual_norm <= kExactResidualTol || worst <= opts.grad_tol;
  }
  return res;
}

std::optional<LinearOpa> linear_factor(const OpaResult& res) {
  if (res.n != 1)
    throw std::invalid_argument("linear_factor: result must have degree bound 1");
  const std::vector<Complex>& c = res.coeffs.coeffs();
  const Complex c0 = c.empty() ? Complex{0.0, 0.0} : c[0];
  const Complex c1 = c.size() > 1 ? c[1] : Complex{0.0, 0.0};
  if (!(std::abs(c1) > 1e-12 * std::abs(c0))) return std::nullopt;
  LinearOpa lin;
  lin.a = c1;
  lin.w = -c0 / c1;
  lin.source = res;
  return lin;
}

}  // namespace hpopa
