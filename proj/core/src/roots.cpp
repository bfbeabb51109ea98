#include "hpopa/roots.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace hpopa {

namespace {

Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex acc{0.0, 0.0};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Complex horner_derivative(const std::vector<Complex>& c, Complex z) {
  Complex acc{0.0, 0.0};
  for (int k = static_cast<int>(c.size()) - 1; k >= 1; --k)
    acc = acc * z + static_cast<double>(k) * c[k];
  return acc;
}

}  // namespace

std::vector<Complex> polynomial_roots(const TaylorPoly& q, double residual_tol) {
  // Normalize so the residual gate is scale-free.
  const TaylorPoly trimmed = q.trimmed(1e-12);
  const int d = trimmed.degree();
  if (d <= 0) return {};

  std::vector<Complex> c = trimmed.coeffs();
  double max_mag = 0.0;
  for (const Complex& v : c) max_mag = std::max(max_mag, std::abs(v));
  for (Complex& v : c) v /= max_mag;

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -c[i] / c[d];

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion, false);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("polynomial_roots: eigenvalue solve failed");

  std::vector<Complex> roots(d);
  for (int i = 0; i < d; ++i) {
    Complex z = es.eigenvalues()(i);
    for (int it = 0; it < 3; ++it) {  // Newton polish
      const Complex dp = horner_derivative(c, z);
      if (std::abs(dp) < 1e-30) break;
      z -= horner(c, z) / dp;
    }
    if (std::abs(horner(c, z)) > residual_tol)
      throw std::domain_error("polynomial_roots: root residual above tolerance");
    roots[i] = z;
  }
  return roots;
}

}  // namespace hpopa
