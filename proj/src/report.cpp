#include "grext/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace grext {

namespace {

double rounded(double x, const char* format) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, x);
  return std::strtod(buf, nullptr);
}

}  // namespace

Json residual_json(double x) {
  if (!std::isfinite(x)) return "nan";
  if (std::abs(x) < 1e-11) return 0;
  return rounded(x, "%.2e");
}

Json magnitude_json(double x) {
  if (!std::isfinite(x)) return "nan";
  if (std::abs(x) < 1e-11) return 0;
  return rounded(x, "%.8e");
}

}  // namespace grext
