#include "grext/cyclotomic.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>
#include <sstream>

#include "grext/error.hpp"

namespace grext {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Exact quotient of integer polynomials, divisor monic.
std::vector<std::int64_t> divide_exact(std::vector<std::int64_t> num, const std::vector<std::int64_t>& div) {
  const std::size_t dn = div.size() - 1;
  std::vector<std::int64_t> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    q[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * div[j];
  }
  return q;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(int n) {
  if (n < 1) throw Error(ErrorKind::kInvalidInput, "cyclotomic polynomial of order < 1");
  std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(d));
  return p;
}

Cyclotomic::Cyclotomic(int order) {
  if (order < 1) throw Error(ErrorKind::kInvalidInput, "cyclotomic order < 1");
  coeff_.assign(static_cast<std::size_t>(order), 0);
}

Cyclotomic Cyclotomic::root(int order, std::int64_t power) {
  Cyclotomic z(order);
  z.coeff_[static_cast<std::size_t>(mod(power, order))] = 1;
  return z;
}

Cyclotomic Cyclotomic::rational(int order, std::int64_t num, std::int64_t den) {
  Cyclotomic z(order);
  z.coeff_[0] = num;
  z.den_ = den;
  z.reduce();
  return z;
}

Cyclotomic Cyclotomic::lifted(int order) const {
  if (order % this->order() != 0) throw Error(ErrorKind::kInvalidInput, "cannot lift to a non-multiple order");
  const int step = order / this->order();
  Cyclotomic z(order);
  for (std::size_t j = 0; j < coeff_.size(); ++j) z.coeff_[j * static_cast<std::size_t>(step)] = coeff_[j];
  z.den_ = den_;
  return z;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& other) const {
  if (order() != other.order()) {
    const int l = std::lcm(order(), other.order());
    return lifted(l) + other.lifted(l);
  }
  Cyclotomic z(order());
  const std::int64_t g = std::gcd(den_, other.den_);
  const std::int64_t fa = other.den_ / g, fb = den_ / g;
  for (std::size_t j = 0; j < coeff_.size(); ++j) z.coeff_[j] = coeff_[j] * fa + other.coeff_[j] * fb;
  z.den_ = den_ * fa;
  z.reduce();
  return z;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& other) const { return *this + other.scaled(-1, 1); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& other) const {
  if (order() != other.order()) {
    const int l = std::lcm(order(), other.order());
    return lifted(l) * other.lifted(l);
  }
  const std::size_t n = coeff_.size();
  Cyclotomic z(order());
  for (std::size_t i = 0; i < n; ++i) {
    if (coeff_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (other.coeff_[j] != 0) z.coeff_[(i + j) % n] += coeff_[i] * other.coeff_[j];
  }
  z.den_ = den_ * other.den_;
  z.reduce();
  return z;
}

Cyclotomic Cyclotomic::scaled(std::int64_t num, std::int64_t den) const {
  if (den == 0) throw Error(ErrorKind::kInvalidInput, "division by zero");
  Cyclotomic z = *this;
  for (auto& c : z.coeff_) c *= num;
  z.den_ *= den;
  z.reduce();
  return z;
}

Cyclotomic Cyclotomic::conj() const {
  const std::size_t n = coeff_.size();
  Cyclotomic z(order());
  for (std::size_t j = 0; j < n; ++j) z.coeff_[(n - j) % n] = coeff_[j];
  z.den_ = den_;
  return z;
}

void Cyclotomic::reduce() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : coeff_) c = -c;
  }
  std::int64_t g = den_;
  for (auto c : coeff_) g = std::gcd(g, c);
  if (g > 1) {
    den_ /= g;
    for (auto& c : coeff_) c /= g;
  }
}

bool Cyclotomic::is_zero() const {
  if (std::all_of(coeff_.begin(), coeff_.end(), [](std::int64_t c) { return c == 0; })) return true;
  const auto phi = cyclotomic_polynomial(order());
  std::vector<std::int64_t> r = coeff_;
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = r.size(); i-- > deg;) {
    const std::int64_t c = r[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) r[i - deg + j] -= c * phi[j];
  }
  for (std::size_t i = 0; i < std::min(deg, r.size()); ++i)
    if (r[i] != 0) return false;
  return true;
}

std::complex<double> Cyclotomic::value() const {
  std::complex<double> acc = 0.0;
  const double n = static_cast<double>(coeff_.size());
  for (std::size_t j = 0; j < coeff_.size(); ++j)
    if (coeff_[j] != 0)
      acc += static_cast<double>(coeff_[j]) * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / n);
  return acc / static_cast<double>(den_);
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (std::size_t j = 0; j < coeff_.size(); ++j) {
    if (coeff_[j] == 0) continue;
    os << (first ? "" : " + ") << coeff_[j] << "·ζ" << order() << "^" << j;
    first = false;
  }
  if (first) os << "0";
  os << ")/" << den_;
  return os.str();
}

}  // namespace grext
