#pragma once

#include <vector>

#include "hpopa/types.hpp"

namespace hpopa {

/// The M-th roots of unity, exp(2*pi*i*j/M) for j = 0..M-1.
std::vector<Complex> unit_roots(int m);

/// Pointwise evaluation at the M roots of unity. M must be a power of two,
/// M >= 4.
BoundaryGrid sample(const TaylorPoly& f, int grid_size);
BoundaryGrid sample(const BlaschkeProduct& f, int grid_size);

/// ((1/M) sum |g_j|^p)^(1/p) for p in (1, inf).
double p_norm(const BoundaryGrid& g, double p);

/// The dual power a^<s>: writing a = r e^{i t}, returns r^s e^{-i t};
/// zero maps to zero. s = 1 is complex conjugation, and a^<p-1> is the
/// (unnormalized) norming functional density of a p-norm unit vector.
Complex dual_power(Complex a, double s);

/// Pointwise dual power of every sample.
BoundaryGrid dual_function(const BoundaryGrid& g, double s);

/// Sesquilinear inner product (1/M) sum g_j conj(h_j). Conjugate-symmetric;
/// pairing(g, g) is the squared 2-norm.
Complex pairing(const BoundaryGrid& g, const BoundaryGrid& h);

/// Bilinear duality pairing (1/M) sum g_j h_j, used against dual-power
/// objects: dual_pairing(f, dual_function(f, p-1)) equals ||f||_p^p.
Complex dual_pairing(const BoundaryGrid& g, const BoundaryGrid& h);

/// Discrete Fourier coefficient (1/M) sum g_j exp(-i k theta_j); exact for
/// a polynomial sampling of degree < M - k. Requires 0 <= k < M.
Complex taylor_coeff(const BoundaryGrid& g, int k);

}  // namespace hpopa
