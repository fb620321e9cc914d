#include "mpcodes/moments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mpcodes/parallel.hpp"
#include "mpcodes/paths.hpp"
#include "rational.hpp"

namespace mpcodes {

double empirical_moment(const SpectralSample& s, unsigned l) {
  if (l > 64) throw UsageError("empirical_moment: l must be <= 64");
  if (l == 0) return 1.0;
  if (s.eigenvalues.empty()) throw UsageError("empirical_moment: empty sample");
  const double lmax = s.eigenvalues.back();
  if (lmax > 1.0 && static_cast<double>(l) * std::log(lmax) > 700.0)
    throw RangeError("empirical_moment: lambda_max^l overflows");
  double sum = 0.0;
  for (double v : s.eigenvalues) {
    double pw = 1.0;
    for (unsigned i = 0; i < l; ++i) pw *= v;
    sum += pw;
  }
  return sum / static_cast<double>(s.eigenvalues.size());
}

double empirical_moment(const GramMatrix& g, unsigned l) {
  return empirical_moment(eigenvalues(g), l);
}

double moment_main_term(double y, unsigned l) {
  if (l < 2) throw UsageError("moment_main_term: l must be >= 2");
  return mp_moment(y, l);
}

double moment_error_constant(double weight4_dual_count, unsigned q) {
  if (q < 2) throw UsageError("moment_error_constant: q must be >= 2");
  if (weight4_dual_count < 0) throw UsageError("moment_error_constant: A must be >= 0");
  return 3.0 + 2.0 * std::sqrt(2.0 * weight4_dual_count / (q - 1) + 0.25);
}

double moment_error_bound(unsigned l, unsigned n, double weight4_dual_count, unsigned q) {
  if (l < 2) throw UsageError("moment_error_bound: l must be >= 2");
  if (n < 1) throw UsageError("moment_error_bound: n must be >= 1");
  return (moment_error_constant(weight4_dual_count, q) + 1.0) *
         std::pow(static_cast<double>(l), static_cast<double>(l) + 1.0) / n;
}

std::vector<MomentReport> monte_carlo_moments(const LinearCode& code, unsigned p,
                                              unsigned l_max, unsigned trials,
                                              std::uint64_t seed, unsigned workers,
                                              bool with_exact) {
  if (trials < 1) throw UsageError("monte_carlo_moments: trials must be >= 1");
  if (l_max < 2) throw UsageError("monte_carlo_moments: l_max must be >= 2");
  const unsigned n = code.length();
  if (p < 1 || p >= n) throw UsageError("monte_carlo_moments: requires 1 <= p < n");
  const double y = static_cast<double>(p) / n;

  // Weight-4 dual count feeds the error bound; compute before the parallel
  // section so the lazy cache is filled once.
  const double a4 = code.weight4_dual_count().get_d();
  const unsigned q = code.field().size();

  const unsigned n_moments = l_max - 1;  // l = 2..l_max
  std::vector<std::vector<double>> per_trial(trials, std::vector<double>(n_moments, 0.0));
  parallel_for(trials, workers, [&](unsigned t) {
    const std::uint64_t trial_seed = CounterRng::stream(seed, t).next();
    const SpectralSample s = eigenvalues(gram(sample_matrix(code, p, trial_seed)));
    for (unsigned l = 2; l <= l_max; ++l) per_trial[t][l - 2] = empirical_moment(s, l);
  });

  std::vector<MomentReport> out(n_moments);
  for (unsigned l = 2; l <= l_max; ++l) {
    MomentReport& r = out[l - 2];
    r.l = l;
    r.trials = trials;
    double mean = 0.0;
    for (unsigned t = 0; t < trials; ++t) mean += per_trial[t][l - 2];
    mean /= trials;
    r.empirical_mean = mean;
    if (trials >= 2) {
      double ss = 0.0;
      for (unsigned t = 0; t < trials; ++t) {
        const double d = per_trial[t][l - 2] - mean;
        ss += d * d;
      }
      r.std_error = std::sqrt(ss / (trials - 1)) / std::sqrt(static_cast<double>(trials));
    }
    r.main_term = moment_main_term(y, l);
    r.error_bound = moment_error_bound(l, n, a4, q);
    r.hypothesis_warning = static_cast<double>(l) * l >= static_cast<double>(p);
    if (with_exact) r.exact_expectation = exact_expected_moment(code, p, l);
  }
  return out;
}

double mp_centered_moment(double y, unsigned l) {
  return detail::mp_centered_moment_rational(y, l).get_d();
}

double centered_moment_bound(double y, unsigned l) {
  if (l < 2) throw UsageError("centered_moment_bound: l must be >= 2");
  const double e2 = std::numbers::e * std::numbers::e;
  return static_cast<double>(l) * l * l * std::pow(8.0 * e2, static_cast<double>(l)) * y /
         (8.0 * std::numbers::pi);
}

}  // namespace mpcodes
