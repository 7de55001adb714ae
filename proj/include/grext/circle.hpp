#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <variant>

namespace grext {

/// A point of ℚ/ℤ, stored as a reduced fraction num/den with 0 <= num < den.
class Angle {
 public:
  constexpr Angle() = default;
  Angle(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  Angle operator+(const Angle& other) const;
  Angle operator-() const;
  Angle operator-(const Angle& other) const { return *this + (-other); }
  Angle times(std::int64_t n) const;

  friend bool operator==(const Angle&, const Angle&) = default;
  friend auto operator<=>(const Angle&, const Angle&) = default;

  /// Parses "p/q" or an integer "p".
  static Angle parse(const std::string& text);
  std::string to_string() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Element of the circle group 𝕋.
///
/// Exact values are rational angles (e^{2πi·p/q}); approximate values keep a
/// floating angle in [0,1) so that they are unit-modulus by construction.
/// Arithmetic between two exact values stays exact.
class CircleScalar {
 public:
  static constexpr double kModulusTolerance = 1e-12;

  CircleScalar() : value_(Angle{}) {}
  explicit CircleScalar(Angle a) : value_(a) {}

  static CircleScalar one() { return CircleScalar(); }
  static CircleScalar exact(std::int64_t num, std::int64_t den) { return CircleScalar(Angle(num, den)); }
  /// Approximate value e^{2πi·turns}.
  static CircleScalar from_turns(double turns);
  /// Throws if | |z| - 1 | exceeds kModulusTolerance.
  static CircleScalar from_complex(std::complex<double> z);

  bool is_exact() const { return std::holds_alternative<Angle>(value_); }
  const Angle& angle() const;  // exact only
  double turns() const;        // in [0,1)
  std::complex<double> value() const;

  bool is_one(double tol = 1e-10) const;

  CircleScalar operator*(const CircleScalar& other) const;
  CircleScalar& operator*=(const CircleScalar& other) { return *this = *this * other; }
  CircleScalar conj() const;
  CircleScalar pow(std::int64_t n) const;

  /// Exact comparison when both sides are exact, otherwise |z - w| <= tol.
  bool equals(const CircleScalar& other, double tol = 1e-10) const;
  double distance(const CircleScalar& other) const;

  std::string to_string() const;

 private:
  explicit CircleScalar(double turns) : value_(turns) {}
  std::variant<Angle, double> value_;
};

}  // namespace grext
