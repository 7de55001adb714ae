#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "grext/circle.hpp"
#include "grext/groupoid.hpp"

namespace grext {

/// A 𝕋-valued 1-cochain, one value per arrow.
struct OneCochain {
  std::vector<CircleScalar> values;

  const CircleScalar& operator()(ArrowId a) const { return values[a]; }
  static OneCochain constant(std::size_t arrows, CircleScalar c) { return {std::vector<CircleScalar>(arrows, c)}; }
};

/// A 𝕋-valued function on composable pairs.
///
/// Values are stored sparsely: pairs without an entry carry the value 1.
/// Whether the cocycle identity and the normalization condition hold is
/// computed once at construction and exposed through identity_checked() and
/// normalized(); a TwoCocycle whose identity fails is still a valid object so
/// that it can be reported on.
class TwoCocycle {
 public:
  TwoCocycle(std::shared_ptr<const FiniteGroupoid> base, std::map<ComposablePair, CircleScalar> values);

  static TwoCocycle trivial(std::shared_ptr<const FiniteGroupoid> base);
  static TwoCocycle from_function(std::shared_ptr<const FiniteGroupoid> base,
                                  const std::function<CircleScalar(ArrowId, ArrowId)>& value);

  const FiniteGroupoid& base() const { return *base_; }
  const std::shared_ptr<const FiniteGroupoid>& base_ptr() const { return base_; }

  /// ω(a, b); throws if (a, b) is not composable.
  CircleScalar operator()(ArrowId a, ArrowId b) const;
  /// Stored (non-unit) values only.
  const std::map<ComposablePair, CircleScalar>& entries() const { return values_; }

  bool identity_checked() const { return identity_holds_; }
  bool normalized() const { return normalized_; }
  bool is_exact() const;
  /// Smallest k with every value in μ_k, for exact cocycles.
  std::optional<std::int64_t> order() const;

  std::uint64_t fingerprint() const { return fingerprint_; }

 private:
  std::shared_ptr<const FiniteGroupoid> base_;
  std::map<ComposablePair, CircleScalar> values_;
  bool identity_holds_ = false;
  bool normalized_ = false;
  std::uint64_t fingerprint_ = 0;
};

struct CocycleViolation {
  ArrowId a, b, c;
  CircleScalar lhs;  // ω(a,b) ω(ab,c)
  CircleScalar rhs;  // ω(b,c) ω(a,bc)
};

struct CocycleReport {
  std::vector<CocycleViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks ω(γ,η)ω(γη,ξ) = ω(η,ξ)ω(γ,ηξ) on every composable triple.
CocycleReport check_identity(const TwoCocycle& w, double tol = 1e-10);
bool is_normalized(const TwoCocycle& w, double tol = 1e-10);

struct Normalization {
  TwoCocycle cocycle;  // ω · conj(δb)
  OneCochain cochain;  // b(γ) = ω(r(γ), γ)
};

Normalization normalize(const TwoCocycle& w);

TwoCocycle power(const TwoCocycle& w, std::int64_t n);
TwoCocycle multiply(const TwoCocycle& a, const TwoCocycle& b);

/// δb(γ,η) = b(γ) b(η) conj(b(γη)).
TwoCocycle coboundary(std::shared_ptr<const FiniteGroupoid> base, const OneCochain& b);

/// Pointwise comparison on all composable pairs.
bool same_values(const TwoCocycle& a, const TwoCocycle& b, double tol = 1e-10);
double max_distance(const TwoCocycle& a, const TwoCocycle& b);

/// Pullback along an arrow map from `g` into w.base().
TwoCocycle pullback(const TwoCocycle& w, std::shared_ptr<const FiniteGroupoid> g, std::span<const ArrowId> arrow_map);

/// b with δb = ω on a principal groupoid, using the smallest unit of each
/// orbit as base point: b(γ) = ω(γ, α_γ) where α_γ runs from the base unit
/// to s(γ). Throws ErrorKind::kIsotropyObstruction on non-principal input.
OneCochain trivialize_principal(const TwoCocycle& w);

/// Decides whether an exact cocycle is a coboundary by solving
/// β(γ) + β(η) − β(γη) ≡ angle ω(γ,η) (mod 1) over ℚ/ℤ. The returned cochain
/// is verified pointwise. Throws if any value is approximate.
std::optional<OneCochain> solve_coboundary(const TwoCocycle& w);

/// λ_{ijk}(x), or nullopt when undefined. Set indices are 0-based.
using CechFunction =
    std::function<std::optional<CircleScalar>(std::size_t i, std::size_t j, std::size_t k, std::size_t x)>;

/// ω_λ(((x,i),(x,j)),((x,j),(x,k))) = λ_{ijk}(x) on the cover groupoid.
/// Throws naming (i,j,k,x) when λ is undefined on a needed triple overlap.
TwoCocycle cech_cocycle(const CoverGroupoid& cover, const CechFunction& lambda);

}  // namespace grext
