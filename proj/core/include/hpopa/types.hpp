#pragma once

#include <complex>
#include <variant>
#include <vector>

namespace hpopa {

using Complex = std::complex<double>;

/// Polynomial in z with complex coefficients; index k holds the coefficient
/// of z^k. An empty coefficient list denotes the zero polynomial. The stored
/// length is preserved (trailing zeros are kept unless trimmed() is called),
/// so a degree-n solver result always carries exactly n+1 entries.
class TaylorPoly {
public:
  TaylorPoly() = default;
  explicit TaylorPoly(std::vector<Complex> coeffs);
  TaylorPoly(std::initializer_list<Complex> coeffs)
      : TaylorPoly(std::vector<Complex>(coeffs)) {}
  static TaylorPoly constant(Complex c);

  const std::vector<Complex>& coeffs() const { return coeffs_; }
  bool is_zero(double tol = 0.0) const;
  /// Degree by trailing nonzero coefficient; -1 for the zero polynomial.
  int degree() const;
  Complex at_zero() const;
  Complex eval(Complex z) const;

  TaylorPoly times_z(int k = 1) const;
  TaylorPoly scaled(Complex s) const;
  TaylorPoly product(const TaylorPoly& other) const;
  TaylorPoly minus_constant(Complex c) const;
  /// Drops trailing coefficients below rel_tol * max |coeff|.
  TaylorPoly trimmed(double rel_tol = 1e-12) const;

private:
  std::vector<Complex> coeffs_;
};

/// Finite Blaschke product: a unimodular constant times factors
/// (z - a) / (1 - conj(a) z) with every zero strictly inside the unit disk.
/// Boundary values are unimodular.
class BlaschkeProduct {
public:
  explicit BlaschkeProduct(std::vector<Complex> zeros,
                           Complex unimodular_factor = Complex{1.0, 0.0});
  BlaschkeProduct(std::initializer_list<Complex> zeros)
      : BlaschkeProduct(std::vector<Complex>(zeros)) {}

  const std::vector<Complex>& zeros() const { return zeros_; }
  Complex unimodular_factor() const { return factor_; }
  Complex eval(Complex z) const;

private:
  std::vector<Complex> zeros_;
  Complex factor_;
};

/// M uniform samples of a function on the unit circle; sample j holds the
/// value at exp(2*pi*i*j/M). All quadrature in the library is the sample
/// mean, i.e. the integral against normalized arc length.
class BoundaryGrid {
public:
  BoundaryGrid() = default;
  explicit BoundaryGrid(std::vector<Complex> samples);

  int size() const { return static_cast<int>(samples_.size()); }
  const std::vector<Complex>& samples() const { return samples_; }
  const Complex& operator[](int j) const { return samples_[j]; }

private:
  std::vector<Complex> samples_;
};

/// A function on the disk given by an exact form (polynomial or finite
/// Blaschke product) together with its materialized boundary samples.
/// The value at the origin is computed from the exact form, not the grid.
class HpFunction {
public:
  HpFunction(TaylorPoly form, int grid_size);
  HpFunction(BlaschkeProduct form, int grid_size);

  const BoundaryGrid& grid() const { return grid_; }
  int grid_size() const { return grid_.size(); }
  Complex value_at_zero() const { return f0_; }

  const TaylorPoly* poly() const { return std::get_if<TaylorPoly>(&form_); }
  const BlaschkeProduct* blaschke() const {
    return std::get_if<BlaschkeProduct>(&form_);
  }

private:
  std::variant<TaylorPoly, BlaschkeProduct> form_;
  BoundaryGrid grid_;
  Complex f0_;
};

inline constexpr int kDefaultGridSize = 4096;

}  // namespace hpopa
