#include "grext/ext_reference.hpp"

#include <numbers>

#include "grext/error.hpp"

namespace grext::reference {

namespace {

Complex unit_root(std::size_t points, std::int64_t j) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(points));
}

Complex power_of(Complex t, std::int64_t e) {
  Complex r = 1.0;
  const Complex base = e < 0 ? std::conj(t) : t;  // |t| = 1
  for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) r *= base;
  return r;
}

}  // namespace

ExtPoint ext_multiply(const TwoCocycle& w, const ExtPoint& a, const ExtPoint& b) {
  const auto c = w.base().compose(a.arrow, b.arrow);
  if (!c) throw Error(ErrorKind::kInvalidInput, "extension points are not composable");
  return {a.t * b.t * w(a.arrow, b.arrow), *c};
}

ExtPoint ext_inverse(const TwoCocycle& w, const ExtPoint& a) {
  const ArrowId inv = w.base().inverse(a.arrow);
  return {a.t.conj() * w(a.arrow, inv).conj(), inv};
}

Complex evaluate(const ModeCoefficients& f, Complex t, ArrowId gamma) {
  Complex acc = 0.0;
  for (const auto& [n, c] : f) acc += power_of(t, -n) * c[gamma];
  return acc;
}

ModeCoefficients convolve(const TwoCocycle& w, const ModeCoefficients& f, const ModeCoefficients& g) {
  const auto& G = w.base();
  const std::size_t arrows = G.arrow_count();
  ModeCoefficients out;
  // With (s,η)⁻¹(t,γ) = (s̄ t c, η⁻¹γ), the mode-m term of F against the mode-n
  // term of G carries s^{n−m} t^{−n} c^{−n}; integrating over s keeps m = n.
  for (const auto& [m, fm] : f)
    for (const auto& [n, gn] : g) {
      if (torus_integral(n - m) == 0) continue;
      auto& acc = out.try_emplace(n, std::vector<Complex>(arrows, 0.0)).first->second;
      for (ArrowId eta = 0; eta < arrows; ++eta) {
        if (fm[eta] == 0.0) continue;
        const ExtPoint eta_inv = ext_inverse(w, {CircleScalar::one(), eta});
        for (ArrowId gamma : G.range_fiber(G.range(eta))) {
          const ExtPoint x = ext_multiply(w, eta_inv, {CircleScalar::one(), gamma});
          if (gn[x.arrow] == 0.0) continue;
          acc[gamma] += fm[eta] * gn[x.arrow] * x.t.pow(-n).value();
        }
      }
    }
  return out;
}

ModeCoefficients adjoint(const TwoCocycle& w, const ModeCoefficients& f) {
  ModeCoefficients out;
  for (const auto& [n, fn] : f) {
    std::vector<Complex> c(fn.size(), 0.0);
    for (ArrowId gamma = 0; gamma < fn.size(); ++gamma) {
      // (t,γ)⁻¹ = (t̄ d, γ⁻¹), so F((t,γ)⁻¹) has mode-n part tⁿ d^{−n} F_n(γ⁻¹).
      const ExtPoint inv = ext_inverse(w, {CircleScalar::one(), gamma});
      c[gamma] = std::conj(inv.t.pow(-n).value() * fn[inv.arrow]);
    }
    out.emplace(n, std::move(c));
  }
  return out;
}

std::optional<BasisProduct> basis_product(const TwoCocycle& w, std::int64_t m, ArrowId a, std::int64_t n, ArrowId b) {
  if (torus_integral(n - m) == 0) return std::nullopt;
  const auto ab = w.base().compose(a, b);
  if (!ab) return std::nullopt;
  // Product at (t, ab) comes from η = a only; c is the phase of (1,a)⁻¹(1,ab).
  const ExtPoint x = ext_multiply(w, ext_inverse(w, {CircleScalar::one(), a}), {CircleScalar::one(), *ab});
  return BasisProduct{n, *ab, x.t.pow(-n)};
}

Complex fourier_projection(const ModeCoefficients& f, std::int64_t n, Complex t, ArrowId gamma, std::size_t points) {
  Complex acc = 0.0;
  for (std::size_t j = 0; j < points; ++j) {
    const Complex s = unit_root(points, static_cast<std::int64_t>(j));
    acc += evaluate(f, s * t, gamma) * power_of(s, n);
  }
  return acc / static_cast<double>(points);
}

ModeCoefficients fourier_modes(const std::function<Complex(Complex, ArrowId)>& f, std::size_t arrows,
                               std::int64_t first, std::int64_t last, std::size_t points) {
  ModeCoefficients out;
  for (std::int64_t n = first; n <= last; ++n) {
    std::vector<Complex> c(arrows, 0.0);
    for (ArrowId gamma = 0; gamma < arrows; ++gamma) {
      Complex acc = 0.0;
      for (std::size_t j = 0; j < points; ++j) {
        const Complex t = unit_root(points, static_cast<std::int64_t>(j));
        acc += f(t, gamma) * power_of(t, n);
      }
      c[gamma] = acc / static_cast<double>(points);
    }
    out.emplace(n, std::move(c));
  }
  return out;
}

}  // namespace grext::reference
