#include "rational.hpp"

namespace mpcodes::detail {

namespace {
mpz_class binom(unsigned long n, unsigned long k) {
  mpz_class out;
  if (k > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}
}  // namespace

mpq_class mp_moment_rational(double y, unsigned l) {
  if (l == 0) return {1};
  const mpq_class yq(y);  // exact from the double
  mpq_class sum = 0;
  mpq_class ypow = 1;
  for (unsigned i = 0; i < l; ++i) {
    mpq_class term = ypow * binom(l, i) * binom(l - 1, i);
    term /= static_cast<unsigned long>(i + 1);
    sum += term;
    ypow *= yq;
  }
  return sum;
}

mpq_class mp_centered_moment_rational(double y, unsigned l) {
  mpq_class sum = 0;
  for (unsigned t = 0; t <= l; ++t) {
    mpq_class term = binom(l, t) * mp_moment_rational(y, t);
    if ((l - t) & 1u)
      sum -= term;
    else
      sum += term;
  }
  return sum;
}

}  // namespace mpcodes::detail
