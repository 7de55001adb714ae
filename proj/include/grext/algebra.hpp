#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grext/cocycle.hpp"
#include "grext/groupoid.hpp"
#include "grext/linalg.hpp"

namespace grext {

/// Identifies the twisted product: which groupoid, which ω, which power n.
struct AlgebraTag {
  std::uint64_t groupoid = 0;
  std::uint64_t cocycle = 0;
  std::int64_t power = 0;

  friend bool operator==(const AlgebraTag&, const AlgebraTag&) = default;
  std::string to_string() const;
};

/// A complex function on arrows, tagged with the algebra it lives in.
struct AlgebraElement {
  AlgebraTag tag;
  std::vector<Complex> coeff;

  Complex operator()(ArrowId a) const { return coeff[a]; }
  std::size_t size() const { return coeff.size(); }

  AlgebraElement operator+(const AlgebraElement& other) const;
  AlgebraElement operator-(const AlgebraElement& other) const;
  AlgebraElement scaled(Complex c) const;
  bool is_zero(double tol = 0.0) const;
};

/// Largest coefficient difference; throws on tag mismatch.
double max_difference(const AlgebraElement& a, const AlgebraElement& b);

/// δ_a * δ_b = phase · δ_arrow when (a, b) is composable.
struct StructureConstant {
  ArrowId arrow;
  CircleScalar phase;
};

struct RegularRep {
  UnitId unit;
  std::vector<ArrowId> basis;  // s⁻¹(u), increasing
  Matrix matrix;
};

struct NormReport {
  double reduced_norm = 0.0;
  std::optional<UnitId> attained_at;
  std::vector<double> unit_norms;
  bool faithful = true;
  std::size_t rank = 0;
};

struct FullNormCertificate {
  bool faithful = false;
  std::size_t dimension = 0;
  std::size_t rank = 0;
  std::string argument;
};

/// The twisted convolution *-algebra C(G, ωⁿ) with counting-measure Haar
/// system. Dense tables of σ = ωⁿ are built once at construction.
class TwistedAlgebra {
 public:
  TwistedAlgebra(const TwoCocycle& omega, std::int64_t n);

  const FiniteGroupoid& groupoid() const { return twist_.base(); }
  const TwoCocycle& twist() const { return twist_; }
  std::int64_t power() const { return tag_.power; }
  const AlgebraTag& tag() const { return tag_; }
  std::size_t dimension() const { return groupoid().arrow_count(); }

  AlgebraElement zero() const;
  AlgebraElement delta(ArrowId a) const;
  AlgebraElement element(std::vector<Complex> coeff) const;

  /// (f*g)(γ) = Σ_{r(η)=r(γ)} f(η) g(η⁻¹γ) σ(η, η⁻¹γ).
  AlgebraElement convolve(const AlgebraElement& f, const AlgebraElement& g) const;
  /// f*(γ) = conj(f(γ⁻¹)) conj(σ(γ, γ⁻¹)).
  AlgebraElement involute(const AlgebraElement& f) const;
  /// Σ_u δ_{unit_arrow(u)}; throws if σ is not normalized.
  AlgebraElement identity_element() const;

  std::optional<StructureConstant> structure_constant(ArrowId a, ArrowId b) const;

  /// M[γ,η] = f(γη⁻¹) σ(γη⁻¹, η) on the basis s⁻¹(u).
  RegularRep regular_rep(const AlgebraElement& f, UnitId u) const;
  /// ⟨Π^u(f)ξ, ζ⟩ on ℓ²(s⁻¹(u)).
  Complex representation_form(const AlgebraElement& f, UnitId u, const Vector& xi, const Vector& zeta) const;
  NormReport reduced_norm(const AlgebraElement& f) const;
  FullNormCertificate full_norm_certificate() const;

  /// Rank of f ↦ ⊕_u Π^u(f) on the δ-basis.
  std::size_t representation_rank() const;
  std::size_t center_dimension() const;
  bool is_commutative() const;

 private:
  void require(const AlgebraElement& f) const;
  Complex sigma(ArrowId a, ArrowId b) const { return sigma_[static_cast<std::size_t>(a) * dimension() + b]; }

  TwoCocycle twist_;
  AlgebraTag tag_;
  std::vector<Complex> sigma_;  // dense, 0 on non-composable pairs
};

/// Cohomology transport f ↦ (γ ↦ b(γ) f(γ)) from C(G, ω) to C(G, ω·conj(δb)).
AlgebraElement transport(const TwistedAlgebra& target, const OneCochain& b, const AlgebraElement& f);

}  // namespace grext
