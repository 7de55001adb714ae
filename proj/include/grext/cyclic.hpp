#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "grext/cocycle.hpp"
#include "grext/cyclotomic.hpp"
#include "grext/extension.hpp"
#include "grext/linalg.hpp"

namespace grext {

/// The finite groupoid μ_k ×_ω G with (s,η)(t,γ) = (s t ω(η,γ), ηγ).
///
/// Arrow (ζ_k^j, γ) has id γ·k + j; units are those of G. The algebra on it
/// below is coded separately from the twisted algebras (untwisted product,
/// Haar weight 1/k on each μ_k fiber) and serves as an oracle for the graded
/// model.
struct CyclicExtension {
  std::int64_t k = 1;
  TwoCocycle cocycle;
  FiniteGroupoid groupoid;
  std::vector<std::int64_t> winding;  // ω(a,b) = ζ_k^{winding[a·|A|+b]}, dense, 0 off G⁽²⁾

  std::size_t base_arrows() const { return cocycle.base().arrow_count(); }
  ArrowId arrow(std::int64_t j, ArrowId gamma) const;
  ArrowId base_arrow(ArrowId x) const { return static_cast<ArrowId>(x / static_cast<ArrowId>(k)); }
  std::int64_t fiber_index(ArrowId x) const { return static_cast<std::int64_t>(x % static_cast<ArrowId>(k)); }
  /// x ↦ base_arrow(x): the projection onto G.
  std::vector<ArrowId> projection() const;
};

/// Throws naming the pair if some ω(a,b) is not a k-th root of unity, or if ω
/// is not normalized.
CyclicExtension cyclic_extension(const TwoCocycle& w, std::int64_t k);

// ---------------------------------------------------------------------------
// Oracle algebra C(μ_k ×_ω G)

using OracleElement = std::vector<Complex>;
using ExactOracleElement = std::map<ArrowId, Cyclotomic>;  // sparse

/// (f*g)(x) = (1/k) Σ_{yz = x} f(y) g(z).
OracleElement oracle_convolve(const CyclicExtension& e, const OracleElement& f, const OracleElement& g);
ExactOracleElement oracle_convolve(const CyclicExtension& e, const ExactOracleElement& f, const ExactOracleElement& g);
/// f*(x) = conj f(x⁻¹).
OracleElement oracle_involute(const CyclicExtension& e, const OracleElement& f);
ExactOracleElement oracle_involute(const CyclicExtension& e, const ExactOracleElement& f);
/// p_n(f)(t,γ) = (1/k) Σ_{s ∈ μ_k} f(st,γ) sⁿ.
OracleElement oracle_project(const CyclicExtension& e, const OracleElement& f, std::int64_t n);
ExactOracleElement oracle_project(const CyclicExtension& e, const ExactOracleElement& f, std::int64_t n);
/// Σ_t ζ^{−nt} δ_{(t,γ)}, the element of Image(p_n) with value δ_γ at t = 1.
ExactOracleElement oracle_mode_basis(const CyclicExtension& e, std::int64_t n, ArrowId gamma);

/// (1/k) f(xy⁻¹) on s⁻¹(u).
Matrix oracle_regular_rep(const CyclicExtension& e, const OracleElement& f, UnitId u);
double oracle_reduced_norm(const CyclicExtension& e, const OracleElement& f);
std::size_t oracle_representation_rank(const CyclicExtension& e);

/// F ↦ (t,γ) ↦ Σ_n t^{−n} F_n(γ). Throws if two modes of F agree mod k.
OracleElement oracle_lift(const CyclicExtension& e, const LaurentElement& f);

struct CyclicSummand {
  std::int64_t mode = 0;
  std::size_t dimension = 0;
  std::size_t center_dimension = 0;
  std::size_t graded_center_dimension = 0;  // of C(G, ωⁿ)
  bool structure_exact = false;     // e_a e_b = ωⁿ(a,b) e_{ab} in ℚ(ζ_k)
  double structure_residual = 0.0;  // same in floating point
  bool involution_exact = false;
};

struct CyclicDecomposition {
  std::int64_t k = 1;
  std::size_t total_dimension = 0;
  std::vector<CyclicSummand> summands;
  bool projections_sum_to_identity = false;
  bool projections_orthogonal = false;  // p_n p_m = δ_{nm} p_n
  bool cross_products_vanish = false;   // Image(p_n) Image(p_m) = 0, n ≠ m
  bool faithful = false;                // ⊕_u Π^u injective on C(μ_k ×_ω G)

  bool passed() const;
};

CyclicDecomposition cyclic_decompose(const CyclicExtension& e);

}  // namespace grext
