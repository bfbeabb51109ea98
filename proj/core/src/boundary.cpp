#include "hpopa/boundary.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hpopa/types.hpp"

namespace hpopa {

namespace {

constexpr double kZeroMag = 1e-300;

bool finite(Complex v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

void require_finite(const std::vector<Complex>& vals, const char* what) {
  for (const Complex& v : vals) {
    if (!finite(v)) throw std::invalid_argument(std::string(what) + ": non-finite value");
  }
}

void require_grid_size(int m) {
  if (m < 4 || (m & (m - 1)) != 0)
    throw std::invalid_argument("grid size must be a power of two, at least 4");
}

}  // namespace

TaylorPoly::TaylorPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  require_finite(coeffs_, "TaylorPoly");
}

TaylorPoly TaylorPoly::constant(Complex c) { return TaylorPoly({c}); }

bool TaylorPoly::is_zero(double tol) const {
  for (const Complex& c : coeffs_)
    if (std::abs(c) > tol) return false;
  return true;
}

int TaylorPoly::degree() const {
  for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k)
    if (coeffs_[k] != Complex{0.0, 0.0}) return k;
  return -1;
}

Complex TaylorPoly::at_zero() const {
  return coeffs_.empty() ? Complex{0.0, 0.0} : coeffs_[0];
}

Complex TaylorPoly::eval(Complex z) const {
  Complex acc{0.0, 0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

TaylorPoly TaylorPoly::times_z(int k) const {
  if (k == 0 || coeffs_.empty()) return *this;
  std::vector<Complex> out(coeffs_.size() + static_cast<std::size_t>(k), Complex{0.0, 0.0});
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + k] = coeffs_[i];
  return TaylorPoly(std::move(out));
}

TaylorPoly TaylorPoly::scaled(Complex s) const {
  std::vector<Complex> out(coeffs_);
  for (Complex& c : out) c *= s;
  return TaylorPoly(std::move(out));
}

TaylorPoly TaylorPoly::product(const TaylorPoly& other) const {
  if (coeffs_.empty() || other.coeffs_.empty()) return TaylorPoly{};
  std::vector<Complex> out(coeffs_.size() + other.coeffs_.size() - 1, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * other.coeffs_[j];
  return TaylorPoly(std::move(out));
}

TaylorPoly TaylorPoly::minus_constant(Complex c) const {
  std::vector<Complex> out(coeffs_);
  if (out.empty()) out.push_back(-c);
  else out[0] -= c;
  return TaylorPoly(std::move(out));
}

TaylorPoly TaylorPoly::trimmed(double rel_tol) const {
  double max_mag = 0.0;
  for (const Complex& c : coeffs_) max_mag = std::max(max_mag, std::abs(c));
  std::size_t len = coeffs_.size();
  while (len > 0 && std::abs(coeffs_[len - 1]) <= rel_tol * max_mag) --len;
  return TaylorPoly(std::vector<Complex>(coeffs_.begin(), coeffs_.begin() + len));
}

BlaschkeProduct::BlaschkeProduct(std::vector<Complex> zeros, Complex unimodular_factor)
    : zeros_(std::move(zeros)), factor_(unimodular_factor) {
  require_finite(zeros_, "BlaschkeProduct");
  for (const Complex& z : zeros_) {
    if (!(std::abs(z) < 1.0))
      throw std::domain_error("BlaschkeProduct: zero must lie strictly inside the unit disk");
  }
  if (std::abs(std::abs(factor_) - 1.0) > 1e-12)
    throw std::invalid_argument("BlaschkeProduct: factor must be unimodular");
}

Complex BlaschkeProduct::eval(Complex z) const {
  Complex acc = factor_;
  for (const Complex& a : zeros_) acc *= (z - a) / (1.0 - std::conj(a) * z);
  return acc;
}

BoundaryGrid::BoundaryGrid(std::vector<Complex> samples) : samples_(std::move(samples)) {
  require_finite(samples_, "BoundaryGrid");
}

HpFunction::HpFunction(TaylorPoly form, int grid_size)
    : form_(std::move(form)) {
  const TaylorPoly& p = std::get<TaylorPoly>(form_);
  grid_ = sample(p, grid_size);
  f0_ = p.at_zero();
}

HpFunction::HpFunction(BlaschkeProduct form, int grid_size)
    : form_(std::move(form)) {
  const BlaschkeProduct& b = std::get<BlaschkeProduct>(form_);
  grid_ = sample(b, grid_size);
  f0_ = b.eval(Complex{0.0, 0.0});
}

std::vector<Complex> unit_roots(int m) {
  std::vector<Complex> out(static_cast<std::size_t>(m));
  const double step = 2.0 * std::numbers::pi / static_cast<double>(m);
  for (int j = 0; j < m; ++j) out[j] = std::polar(1.0, step * j);
  return out;
}

BoundaryGrid sample(const TaylorPoly& f, int grid_size) {
  require_grid_size(grid_size);
  std::vector<Complex> roots = unit_roots(grid_size);
  std::vector<Complex> out(roots.size());
  for (std::size_t j = 0; j < roots.size(); ++j) out[j] = f.eval(roots[j]);
  return BoundaryGrid(std::move(out));
}

BoundaryGrid sample(const BlaschkeProduct& f, int grid_size) {
  require_grid_size(grid_size);
  std::vector<Complex> roots = unit_roots(grid_size);
  std::vector<Complex> out(roots.size());
  for (std::size_t j = 0; j < roots.size(); ++j) out[j] = f.eval(roots[j]);
  return BoundaryGrid(std::move(out));
}

double p_norm(const BoundaryGrid& g, double p) {
  if (!(p > 1.0) || !std::isfinite(p))
    throw std::invalid_argument("p_norm: p must lie in (1, inf)");
  if (g.size() == 0) throw std::invalid_argument("p_norm: empty grid");
  double acc = 0.0;
  for (const Complex& v : g.samples()) acc += std::pow(std::abs(v), p);
  return std::pow(acc / g.size(), 1.0 / p);
}

Complex dual_power(Complex a, double s) {
  if (!(s > 0.0)) throw std::invalid_argument("dual_power: s must be positive");
  const double r = std::abs(a);
  if (r < kZeroMag) return {0.0, 0.0};
  return std::polar(std::pow(r, s), -std::arg(a));
}

BoundaryGrid dual_function(const BoundaryGrid& g, double s) {
  if (!(s > 0.0)) throw std::invalid_argument("dual_function: s must be positive");
  std::vector<Complex> out(g.samples());
  for (Complex& v : out) v = dual_power(v, s);
  return BoundaryGrid(std::move(out));
}

Complex pairing(const BoundaryGrid& g, const BoundaryGrid& h) {
  if (g.size() != h.size()) throw std::invalid_argument("pairing: grid size mismatch");
  Complex acc{0.0, 0.0};
  for (int j = 0; j < g.size(); ++j) acc += g[j] * std::conj(h[j]);
  return acc / static_cast<double>(g.size());
}

Complex dual_pairing(const BoundaryGrid& g, const BoundaryGrid& h) {
  if (g.size() != h.size()) throw std::invalid_argument("dual_pairing: grid size mismatch");
  Complex acc{0.0, 0.0};
  for (int j = 0; j < g.size(); ++j) acc += g[j] * h[j];
  return acc / static_cast<double>(g.size());
}

Complex taylor_coeff(const BoundaryGrid& g, int k) {
  if (k < 0 || k >= g.size()) throw std::invalid_argument("taylor_coeff: k out of range");
  const int m = g.size();
  const double step = 2.0 * std::numbers::pi / static_cast<double>(m);
  Complex acc{0.0, 0.0};
  for (int j = 0; j < m; ++j) acc += g[j] * std::polar(1.0, -step * k * j);
  return acc / static_cast<double>(m);
}

}  // namespace hpopa
