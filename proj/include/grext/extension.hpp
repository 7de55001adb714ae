#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "grext/algebra.hpp"
#include "grext/cocycle.hpp"

namespace grext {

/// Σ_n s^{−n} ⊗ f_n with f_n ∈ C(G, ωⁿ). Component n is the coefficient of
/// s^{−n}, so it is homogeneous of degree n: F(s·x) = s^{−n} F(x).
struct LaurentElement {
  std::uint64_t groupoid = 0;
  std::uint64_t cocycle = 0;
  std::map<std::int64_t, AlgebraElement> modes;

  /// Modes carrying a nonzero coefficient.
  std::vector<std::int64_t> support(double tol = 0.0) const;
};

struct ModeWindow {
  std::int64_t first = 0;
  std::int64_t last = 0;  // inclusive

  bool contains(std::int64_t n) const { return first <= n && n <= last; }
  std::size_t size() const { return last < first ? 0 : static_cast<std::size_t>(last - first + 1); }
};

struct Decomposition {
  std::map<std::int64_t, AlgebraElement> components;
  std::map<std::int64_t, double> norms;
  double norm = 0.0;  // max over modes
};

/// The graded model of C_c(G^ω) for a normalized cocycle ω.
class ExtensionModel {
 public:
  explicit ExtensionModel(TwoCocycle omega);

  const TwoCocycle& cocycle() const { return omega_; }
  const FiniteGroupoid& groupoid() const { return omega_.base(); }
  TwistedAlgebra mode_algebra(std::int64_t n) const { return TwistedAlgebra(omega_, n); }

  LaurentElement zero() const;
  /// s^{−n} ⊗ f; f must belong to C(G, ωⁿ).
  LaurentElement from_mode(std::int64_t n, const AlgebraElement& f) const;
  LaurentElement monomial(std::int64_t n, ArrowId a) const;
  LaurentElement identity() const;

  LaurentElement add(const LaurentElement& a, const LaurentElement& b) const;
  LaurentElement scaled(const LaurentElement& a, Complex c) const;
  /// Graded product: (F*G)_n = F_n *_{ωⁿ} G_n.
  LaurentElement product(const LaurentElement& a, const LaurentElement& b) const;
  LaurentElement adjoint(const LaurentElement& a) const;

  /// Projection onto mode n.
  LaurentElement chi(const LaurentElement& a, std::int64_t n) const;
  /// Mode-n component as an element of C(G, ωⁿ).
  AlgebraElement upsilon(const LaurentElement& a, std::int64_t n) const;
  Decomposition decompose(const LaurentElement& a) const;

  void require(const LaurentElement& a) const;

 private:
  TwoCocycle omega_;
};

/// Largest coefficient difference, missing modes read as zero.
double max_difference(const LaurentElement& a, const LaurentElement& b);

// ---------------------------------------------------------------------------
// Regular representation of the extension against the decomposition

/// s^{−n} ⊗ ξ for ξ ∈ ℓ²(s⁻¹(u)): records the basis correspondence used to
/// identify ⊕_n ℓ²(s⁻¹(u)) with the windowed span.
struct ModeUnitary {
  UnitId unit = 0;
  std::int64_t mode = 0;
  std::vector<ArrowId> basis;  // s⁻¹(u)
  std::size_t offset = 0;      // first row of this block in the windowed basis
};

std::vector<ModeUnitary> mode_unitaries(const FiniteGroupoid& g, UnitId u, ModeWindow window);

/// Gram matrix of the windowed basis vectors s^{−m}⊗δ_γ under
/// ⟨F, G⟩ = ∫_𝕋 Σ_γ conj F(t,γ) G(t,γ) dt.
Matrix mode_gram_matrix(const FiniteGroupoid& g, UnitId u, ModeWindow window);

struct IntertwineResult {
  double residual = 0.0;
  std::size_t dimension = 0;
  Matrix extension_block;  // R^u(F) in the windowed basis
  Matrix decomposed_block; // V (⊕_n L_n^u(Υ_n F)) V*
};

/// Throws ErrorKind::kPrecondition listing the modes of F outside the window.
IntertwineResult intertwine_check(const ExtensionModel& model, const LaurentElement& f, UnitId u, ModeWindow window);

struct ReducedDecomposeCertificate {
  std::size_t samples = 0;
  double max_deviation = 0.0;
  double tolerance = 1e-9;
  bool passed() const { return max_deviation <= tolerance; }
};

/// ‖R^u(F)‖ against max_n ‖L_n^u(Υ_n F)‖ at every unit, for each sample.
ReducedDecomposeCertificate reduced_decompose_check(const ExtensionModel& model,
                                                    const std::vector<LaurentElement>& samples);

}  // namespace grext
