#pragma once

#include <cstdint>
#include <vector>

#include "grext/algebra.hpp"
#include "grext/extension.hpp"

namespace grext {

/// A function on units, an element of C(G⁰).
using BimoduleElement = std::vector<Complex>;

/// Functions on the orbit space G\G⁰ with pointwise operations.
struct FixedPointAlgebra {
  std::vector<std::vector<UnitId>> orbits;
  std::size_t dimension() const { return orbits.size(); }
};

/// Throws ErrorKind::kPrecondition on non-principal groupoids.
FixedPointAlgebra fixed_point_algebra(const FiniteGroupoid& g);

/// ⟨f,g⟩(γ) = f(r(γ)) conj g(s(γ)) in C(G) = C(G, ω⁰).
AlgebraElement left_inner(const TwistedAlgebra& algebra, const BimoduleElement& f, const BimoduleElement& g);

/// ⟨f,g⟩ read as a function on 𝕋 ×_ω G, (t,γ) ↦ f(r(γ)) conj g(s(γ)), and
/// expanded in Fourier modes n ∈ [−reach, reach].
LaurentElement lift_left_inner(const ExtensionModel& model, const BimoduleElement& f, const BimoduleElement& g,
                               std::int64_t reach);

/// True when every mode other than 0 vanishes to within 1e-12.
bool supported_in_mode_zero(const LaurentElement& f);

struct FullnessCertificate {
  std::size_t ideal_dimension = 0;
  std::size_t algebra_dimension = 0;
  std::size_t orbit_count = 0;
  bool full() const { return ideal_dimension == algebra_dimension; }
};

/// Two-sided ideal of C(G) generated by ⟨δ_u, δ_v⟩, by span closure under
/// left and right multiplication with the δ-basis.
FullnessCertificate fullness_check(const FiniteGroupoid& g);

struct PositivityReport {
  double min_eigenvalue = 0.0;
  bool positive = true;
};

/// Π^u(⟨f,f⟩) ⪰ 0 at every unit, with eigenvalue tolerance 1e-12.
PositivityReport positivity_check(const FiniteGroupoid& g, const BimoduleElement& f);

struct NonSaturationReport {
  std::int64_t reach = 0;
  std::size_t ideal_dimension = 0;   // of the generated ideal, all modes
  double off_mode_mass = 0.0;        // largest coefficient outside mode 0
  bool mode_zero_only() const { return off_mode_mass == 0.0; }
};

/// Closes {⟨δ_u,δ_v⟩} under extension products with s^{−n}⊗δ_a for
/// |n| ≤ reach and reports whether anything leaves mode 0.
NonSaturationReport non_saturation_check(const ExtensionModel& model, std::int64_t reach);

}  // namespace grext
