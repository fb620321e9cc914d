#include "mpcodes/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "rational.hpp"

namespace mpcodes {

namespace {

constexpr double kClampFloor = -1e-10;

boost::math::quadrature::tanh_sinh<double>& integrator() {
  thread_local boost::math::quadrature::tanh_sinh<double> quad;
  return quad;
}

}  // namespace

SpectralSample eigenvalues(const GramMatrix& g) {
  SpectralSample out;
  out.p = g.size();
  out.n = g.sample_length();
  out.y = g.aspect_ratio();
  out.seed = g.seed();

  Eigen::VectorXd ev;
  if (g.is_real()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g.real_data(),
                                                          Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
      throw NumericalError("eigenvalues: solver failed (code " + g.code_id() + ", seed " +
                           std::to_string(g.seed()) + ")");
    ev = solver.eigenvalues();
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(g.complex_data(),
                                                           Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
      throw NumericalError("eigenvalues: solver failed (code " + g.code_id() + ", seed " +
                           std::to_string(g.seed()) + ")");
    ev = solver.eigenvalues();
  }

  out.eigenvalues.resize(static_cast<std::size_t>(ev.size()));
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    double v = ev[i];
    if (v < kClampFloor)
      throw NumericalError("eigenvalues: eigenvalue " + std::to_string(v) +
                           " below the PSD floor (code " + g.code_id() + ", seed " +
                           std::to_string(g.seed()) + ")");
    if (v < 0.0) {
      v = 0.0;
      ++out.clamped;
    }
    out.eigenvalues[static_cast<std::size_t>(i)] = v;
  }
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());

  double sum = 0.0;
  for (double v : out.eigenvalues) sum += v;
  if (std::abs(sum - out.p) > 1e-8 * out.p)
    throw NumericalError("eigenvalues: trace identity violated (sum " + std::to_string(sum) +
                         " for p = " + std::to_string(out.p) + ")");
  return out;
}

double esd(const SpectralSample& s, double z) {
  const auto it = std::upper_bound(s.eigenvalues.begin(), s.eigenvalues.end(), z);
  return static_cast<double>(it - s.eigenvalues.begin()) / s.eigenvalues.size();
}

MPLaw::MPLaw(double y_) : y(y_) {
  if (!(y > 0.0 && y < 1.0)) throw UsageError("MPLaw: y must lie in (0, 1)");
  const double s = std::sqrt(y);
  a = (1.0 - s) * (1.0 - s);
  b = (1.0 + s) * (1.0 + s);
}

double mp_pdf(const MPLaw& law, double z) {
  if (z <= law.a || z >= law.b) return 0.0;
  return std::sqrt((law.b - z) * (z - law.a)) / (2.0 * std::numbers::pi * z * law.y);
}

double mp_cdf(const MPLaw& law, double z) {
  if (z <= law.a) return 0.0;
  if (z >= law.b) return 1.0;
  const double v = integrator().integrate([&](double t) { return mp_pdf(law, t); }, law.a, z,
                                          1e-12);
  return std::clamp(v, 0.0, 1.0);
}

double mp_moment(double y, unsigned l) {
  return detail::mp_moment_rational(y, l).get_d();
}

double mp_moment_by_quadrature(const MPLaw& law, unsigned l) {
  return integrator().integrate(
      [&](double t) { return std::pow(t, static_cast<double>(l)) * mp_pdf(law, t); }, law.a,
      law.b, 1e-12);
}

namespace {
double sup_distance_impl(const SpectralSample& s, const std::function<double(double)>& cdf) {
  const std::size_t p = s.eigenvalues.size();
  if (p == 0) throw UsageError("sup_distance: empty sample");
  double sup = 0.0;
  for (std::size_t i = 1; i <= p; ++i) {
    const double f = cdf(s.eigenvalues[i - 1]);
    sup = std::max(sup, std::abs(f - static_cast<double>(i) / p));
    sup = std::max(sup, std::abs(f - static_cast<double>(i - 1) / p));
  }
  return sup;
}
}  // namespace

double sup_distance(const SpectralSample& s, const MPLaw& law) {
  return sup_distance_impl(s, [&](double z) { return mp_cdf(law, z); });
}

double sup_distance(const SpectralSample& s, const std::function<double(double)>& cdf) {
  return sup_distance_impl(s, cdf);
}

double sup_distance_between(const SpectralSample& a, const SpectralSample& b) {
  const auto& x = a.eigenvalues;
  const auto& y = b.eigenvalues;
  if (x.empty() || y.empty()) throw UsageError("sup_distance_between: empty sample");
  double sup = 0.0;
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    double z;
    if (j >= y.size() || (i < x.size() && x[i] <= y[j]))
      z = x[i];
    else
      z = y[j];
    while (i < x.size() && x[i] <= z) ++i;
    while (j < y.size() && y[j] <= z) ++j;
    sup = std::max(sup, std::abs(static_cast<double>(i) / x.size() -
                                 static_cast<double>(j) / y.size()));
  }
  return sup;
}

double sup_distance_bound(std::uint64_t n, double y) {
  if (n < 16) throw DomainError("sup_distance_bound: requires n >= 16");
  if (!(y > 0.0 && y < 1.0)) throw DomainError("sup_distance_bound: y must lie in (0, 1)");
  const double ln = std::log(static_cast<double>(n));
  return 800.0 / (std::sqrt(y) * (1.0 - y)) * std::log(ln) / ln;
}

}  // namespace mpcodes
