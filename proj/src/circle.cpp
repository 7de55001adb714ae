#include "grext/circle.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "grext/error.hpp"

namespace grext {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

double wrap_turns(double t) {
  double r = t - std::floor(t);
  return r >= 1.0 ? 0.0 : r;
}

}  // namespace

Angle::Angle(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::kInvalidInput, "angle with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num = floor_mod(num, den);
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Angle Angle::operator+(const Angle& other) const {
  const std::int64_t g = std::gcd(den_, other.den_);
  const std::int64_t l = den_ / g * other.den_;
  const std::int64_t a = num_ * (l / den_);
  const std::int64_t b = other.num_ * (l / other.den_);
  return Angle(floor_mod(a + b, l), l);
}

Angle Angle::operator-() const { return Angle(den_ - num_, den_); }

Angle Angle::times(std::int64_t n) const {
  // Reduce n first so the product stays small.
  const std::int64_t m = floor_mod(n, den_);
  return Angle(static_cast<std::int64_t>((static_cast<__int128>(num_) * m) % den_), den_);
}

Angle Angle::parse(const std::string& text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    auto first = s.data();
    if (!s.empty() && s.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw Error(ErrorKind::kInvalidInput, "malformed rational angle '" + text + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Angle(parse_int(text), 1);
  std::string_view sv(text);
  return Angle(parse_int(sv.substr(0, slash)), parse_int(sv.substr(slash + 1)));
}

std::string Angle::to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

CircleScalar CircleScalar::from_turns(double turns) {
  if (!std::isfinite(turns)) throw Error(ErrorKind::kInvalidInput, "non-finite angle");
  return CircleScalar(wrap_turns(turns));
}

CircleScalar CircleScalar::from_complex(std::complex<double> z) {
  if (std::abs(std::abs(z) - 1.0) > kModulusTolerance)
    throw Error(ErrorKind::kInvalidInput, "circle value is not of unit modulus");
  return from_turns(std::arg(z) / (2.0 * std::numbers::pi));
}

const Angle& CircleScalar::angle() const {
  if (!is_exact()) throw Error(ErrorKind::kPrecondition, "exact angles required");
  return std::get<Angle>(value_);
}

double CircleScalar::turns() const {
  if (const auto* a = std::get_if<Angle>(&value_))
    return static_cast<double>(a->num()) / static_cast<double>(a->den());
  return std::get<double>(value_);
}

std::complex<double> CircleScalar::value() const {
  if (const auto* a = std::get_if<Angle>(&value_)) {
    // Hit the axis points exactly so that ±1, ±i carry no rounding.
    const std::int64_t p = a->num(), q = a->den();
    if (p == 0) return {1.0, 0.0};
    if (2 * p == q) return {-1.0, 0.0};
    if (4 * p == q) return {0.0, 1.0};
    if (4 * p == 3 * q) return {0.0, -1.0};
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * turns());
}

bool CircleScalar::is_one(double tol) const {
  if (const auto* a = std::get_if<Angle>(&value_)) return a->is_zero();
  return std::abs(value() - 1.0) <= tol;
}

CircleScalar CircleScalar::operator*(const CircleScalar& other) const {
  if (is_exact() && other.is_exact()) return CircleScalar(angle() + other.angle());
  return CircleScalar(wrap_turns(turns() + other.turns()));
}

CircleScalar CircleScalar::conj() const {
  if (is_exact()) return CircleScalar(-angle());
  return CircleScalar(wrap_turns(-turns()));
}

CircleScalar CircleScalar::pow(std::int64_t n) const {
  if (is_exact()) return CircleScalar(angle().times(n));
  return CircleScalar(wrap_turns(turns() * static_cast<double>(n)));
}

bool CircleScalar::equals(const CircleScalar& other, double tol) const {
  if (is_exact() && other.is_exact()) return angle() == other.angle();
  return distance(other) <= tol;
}

double CircleScalar::distance(const CircleScalar& other) const { return std::abs(value() - other.value()); }

std::string CircleScalar::to_string() const {
  if (is_exact()) return angle().to_string();
  std::ostringstream os;
  os.precision(17);
  os << turns();
  return os.str();
}

}  // namespace grext
