#pragma once

#include <string>

#include "grext/io.hpp"

namespace grext {

/// Residuals below 1e-11 are reported as 0, larger ones to 3 significant
/// digits, so that reports do not depend on last-bit rounding.
Json residual_json(double x);
/// Norms and similar magnitudes to 9 significant digits.
Json magnitude_json(double x);

inline const char* status_text(bool ok) { return ok ? "pass" : "fail"; }

}  // namespace grext
