#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "grext/cocycle.hpp"
#include "grext/linalg.hpp"

// Direct evaluation of the extension groupoid 𝕋 ×_ω G on the Laurent span.
// Products are computed from the multiplication of 𝕋 ×_ω G and Fourier
// orthogonality on 𝕋, without going through the twisted algebras; the graded
// model is checked against this route.
namespace grext::reference {

/// Mode n -> coefficients of s^{−n}, one per arrow.
using ModeCoefficients = std::map<std::int64_t, std::vector<Complex>>;

/// ∫_𝕋 t^e dt for the normalized Haar measure.
inline int torus_integral(std::int64_t e) { return e == 0 ? 1 : 0; }

/// A point (t, γ) of 𝕋 ×_ω G.
struct ExtPoint {
  CircleScalar t;
  ArrowId arrow = 0;
};

/// (s,η)(t,γ) = (s t ω(η,γ), ηγ).
ExtPoint ext_multiply(const TwoCocycle& w, const ExtPoint& a, const ExtPoint& b);
/// (t,γ)⁻¹ = (t̄ conj ω(γ,γ⁻¹), γ⁻¹).
ExtPoint ext_inverse(const TwoCocycle& w, const ExtPoint& a);

/// F(t, γ) = Σ_n t^{−n} F_n(γ).
Complex evaluate(const ModeCoefficients& f, Complex t, ArrowId gamma);

/// Convolution on 𝕋 ×_ω G: ∫_𝕋 Σ_{r(η)=r(γ)} F(s,η) G((s,η)⁻¹(t,γ)) ds.
ModeCoefficients convolve(const TwoCocycle& w, const ModeCoefficients& f, const ModeCoefficients& g);
/// F*(x) = conj F(x⁻¹).
ModeCoefficients adjoint(const TwoCocycle& w, const ModeCoefficients& f);

struct BasisProduct {
  std::int64_t mode = 0;
  ArrowId arrow = 0;
  CircleScalar phase;
};

/// (s^{−m}⊗δ_a)(s^{−n}⊗δ_b), exactly; nullopt when it vanishes.
std::optional<BasisProduct> basis_product(const TwoCocycle& w, std::int64_t m, ArrowId a, std::int64_t n, ArrowId b);

/// ∫_𝕋 F(s t, γ) sⁿ ds by an N-point rule, exact when N exceeds the spread
/// of modes of F around n.
Complex fourier_projection(const ModeCoefficients& f, std::int64_t n, Complex t, ArrowId gamma, std::size_t points);

/// Fourier coefficients n ∈ [first, last] of a function on 𝕋 × arrows.
ModeCoefficients fourier_modes(const std::function<Complex(Complex, ArrowId)>& f, std::size_t arrows,
                               std::int64_t first, std::int64_t last, std::size_t points);

}  // namespace grext::reference
