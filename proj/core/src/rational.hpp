#pragma once

// Internal exact-arithmetic helpers shared by the spectra and moments modules.

#include <gmpxx.h>

namespace mpcodes::detail {

/// Exact l-th Marchenko-Pastur moment as a rational in y (y taken exactly
/// from its double representation).
mpq_class mp_moment_rational(double y, unsigned l);

/// Exact centered moment E((x-1)^l) via binomial expansion of the raw moments.
mpq_class mp_centered_moment_rational(double y, unsigned l);

}  // namespace mpcodes::detail
