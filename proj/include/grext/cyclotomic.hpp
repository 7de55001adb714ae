#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace grext {

/// Exact element of the cyclotomic field ℚ(ζ_N), ζ_N = e^{2πi/N}.
///
/// Stored as (Σ_j c_j ζ^j) / d with integer c_j, j < N. The representation
/// is not unique; equality reduces the difference modulo the N-th
/// cyclotomic polynomial. Operands of different orders are lifted to the
/// least common multiple.
class Cyclotomic {
 public:
  explicit Cyclotomic(int order = 1);

  static Cyclotomic root(int order, std::int64_t power);
  static Cyclotomic rational(int order, std::int64_t num, std::int64_t den = 1);

  int order() const { return static_cast<int>(coeff_.size()); }

  Cyclotomic operator+(const Cyclotomic& other) const;
  Cyclotomic operator-(const Cyclotomic& other) const;
  Cyclotomic operator*(const Cyclotomic& other) const;
  Cyclotomic& operator+=(const Cyclotomic& other) { return *this = *this + other; }
  Cyclotomic scaled(std::int64_t num, std::int64_t den) const;
  /// Complex conjugate: ζ^j -> ζ^{-j}.
  Cyclotomic conj() const;
  Cyclotomic lifted(int order) const;

  bool is_zero() const;
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return (a - b).is_zero(); }

  std::complex<double> value() const;
  std::string to_string() const;

 private:
  void reduce();

  std::vector<std::int64_t> coeff_;
  std::int64_t den_ = 1;
};

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<std::int64_t> cyclotomic_polynomial(int n);

}  // namespace grext
