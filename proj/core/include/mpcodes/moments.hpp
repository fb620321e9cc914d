#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mpcodes/spectra.hpp"

namespace mpcodes {

/// One row of a Monte Carlo moment experiment.
struct MomentReport {
  unsigned l = 0;
  double empirical_mean = 0.0;
  std::optional<double> std_error;  ///< unset for a single trial
  unsigned trials = 0;
  double main_term = 0.0;   ///< equals mp_moment(y, l)
  double error_bound = 0.0;
  std::optional<double> exact_expectation;  ///< exact path-sum value when requested
  bool hypothesis_warning = false;          ///< l^2 >= p: outside the guaranteed regime
};

/// l-th spectral moment (1/p) sum lambda_i^l from eigenvalue power sums.
/// l <= 64; RangeError if lambda_max^l would overflow.
double empirical_moment(const SpectralSample& s, unsigned l);
double empirical_moment(const GramMatrix& g, unsigned l);

/// Main term of the moment expansion; identical to mp_moment (shared
/// implementation), restricted to l >= 2.
double moment_main_term(double y, unsigned l);

/// Constant 3 + 2 sqrt(2A/(q-1) + 1/4) controlling the non-leading
/// solution-count classes; A counts weight-4 dual codewords.
double moment_error_constant(double weight4_dual_count, unsigned q);

/// Bound on the moment error term: (C_A + 1) l^{l+1} / n.
double moment_error_bound(unsigned l, unsigned n, double weight4_dual_count, unsigned q);

/// Monte Carlo estimate of the spectral moments for l = 2..l_max over
/// independent trials (trial t uses the RNG sub-stream t of `seed`).
/// Deterministic in all arguments; trials run on `workers` threads with a
/// seed-ordered fold. When `with_exact` is set, the exact closed-path
/// expectation is attached to every row (ResourceError if out of budget).
std::vector<MomentReport> monte_carlo_moments(const LinearCode& code, unsigned p,
                                              unsigned l_max, unsigned trials,
                                              std::uint64_t seed, unsigned workers = 1,
                                              bool with_exact = false);

/// Centered law moment E((x-1)^l), exact via binomial expansion.
double mp_centered_moment(double y, unsigned l);

/// Bound l^3 (8e^2)^l y / (8 pi) on the centered moments, l >= 2.
double centered_moment_bound(double y, unsigned l);

}  // namespace mpcodes
