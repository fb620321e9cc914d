#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mpcodes/ensemble.hpp"

namespace mpcodes {

/// Sorted spectrum of a normalized Gram matrix.
///
/// Eigenvalues below -1e-10 are a numerical failure; values in [-1e-10, 0)
/// are solver noise on a PSD matrix, clamped to 0 and counted.
struct SpectralSample {
  std::vector<double> eigenvalues;  // ascending
  unsigned p = 0;
  unsigned n = 0;
  double y = 0.0;
  std::uint64_t seed = 0;
  unsigned clamped = 0;
};

SpectralSample eigenvalues(const GramMatrix& g);

/// Empirical spectral distribution: right-continuous step CDF of the sample.
double esd(const SpectralSample& s, double z);

/// Marchenko-Pastur law with aspect ratio y in (0, 1);
/// support [a, b] = [(1-sqrt y)^2, (1+sqrt y)^2].
struct MPLaw {
  explicit MPLaw(double y);
  double y;
  double a;
  double b;
};

double mp_pdf(const MPLaw& law, double z);

/// CDF by adaptive quadrature of the density (absolute tolerance 1e-10),
/// clamped to [0, 1].
double mp_cdf(const MPLaw& law, double z);

/// l-th moment, evaluated exactly in rational arithmetic:
/// sum_{i=0}^{l-1} y^i/(i+1) C(l,i) C(l-1,i); l = 0 gives 1.
double mp_moment(double y, unsigned l);

/// l-th moment by quadrature of z^l against the density (independent route;
/// the rational formula above is its cross-check).
double mp_moment_by_quadrature(const MPLaw& law, unsigned l);

/// Exact sup of |ESD - F| for a continuous CDF F, evaluated at the jump
/// points: max_i max(|F(x_i) - i/p|, |F(x_i) - (i-1)/p|).
double sup_distance(const SpectralSample& s, const MPLaw& law);
double sup_distance(const SpectralSample& s, const std::function<double(double)>& cdf);

/// Exact sup distance between two empirical spectral distributions.
double sup_distance_between(const SpectralSample& a, const SpectralSample& b);

/// Distribution-distance bound 800/(sqrt(y)(1-y)) * log log n / log n.
/// Requires n >= 16 and y in (0, 1).
double sup_distance_bound(std::uint64_t n, double y);

}  // namespace mpcodes
