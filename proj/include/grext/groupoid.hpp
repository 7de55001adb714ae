#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

namespace grext {

using ArrowId = std::uint32_t;
using UnitId = std::uint32_t;

inline constexpr ArrowId kNoArrow = std::numeric_limits<ArrowId>::max();

struct ComposablePair {
  ArrowId first = 0;
  ArrowId second = 0;

  friend bool operator==(const ComposablePair&, const ComposablePair&) = default;
  friend auto operator<=>(const ComposablePair&, const ComposablePair&) = default;
};

/// Raw table description of a finite groupoid. Nothing here is assumed to
/// satisfy the groupoid axioms; see validate().
struct GroupoidTables {
  std::vector<std::string> unit_names;
  std::vector<std::string> arrow_names;
  std::vector<UnitId> range;
  std::vector<UnitId> source;
  std::vector<ArrowId> inverse;
  std::vector<ArrowId> unit_arrow;
  /// (a, b, c) meaning a∘b = c. Pairs not listed are not composable.
  std::vector<std::tuple<ArrowId, ArrowId, ArrowId>> compose;
};

/// A finite groupoid with dense integer ids for units and arrows.
///
/// Construction only checks that the tables are well formed (indices in
/// range, no duplicated compose entries, unique names). The groupoid axioms
/// are checked separately by validate() so that broken tables can be
/// inspected. Instances are immutable.
class FiniteGroupoid {
 public:
  FiniteGroupoid() = default;
  explicit FiniteGroupoid(GroupoidTables tables);

  std::size_t unit_count() const { return unit_names_.size(); }
  std::size_t arrow_count() const { return arrow_names_.size(); }

  UnitId range(ArrowId a) const { return range_[a]; }
  UnitId source(ArrowId a) const { return source_[a]; }
  ArrowId inverse(ArrowId a) const { return inverse_[a]; }
  ArrowId unit_arrow(UnitId u) const { return unit_arrow_[u]; }

  /// a∘b if the table defines it.
  std::optional<ArrowId> compose(ArrowId a, ArrowId b) const {
    const ArrowId c = compose_[static_cast<std::size_t>(a) * arrow_count() + b];
    if (c == kNoArrow) return std::nullopt;
    return c;
  }
  bool composable(ArrowId a, ArrowId b) const { return source_[a] == range_[b]; }

  /// Arrows with range u, in increasing id order (the support of λ^u).
  std::span<const ArrowId> range_fiber(UnitId u) const { return range_fiber_[u]; }
  /// Arrows with source u, in increasing id order.
  std::span<const ArrowId> source_fiber(UnitId u) const { return source_fiber_[u]; }

  const std::string& unit_name(UnitId u) const { return unit_names_[u]; }
  const std::string& arrow_name(ArrowId a) const { return arrow_names_[a]; }
  std::optional<ArrowId> find_arrow(const std::string& name) const;
  std::optional<UnitId> find_unit(const std::string& name) const;

  bool is_unit_arrow(ArrowId a) const { return unit_arrow_[range_[a]] == a || unit_arrow_[source_[a]] == a; }

  /// Pairs (a, b) with source(a) = range(b), ordered by (a, b).
  std::vector<ComposablePair> composable_pairs() const;

  GroupoidTables tables() const;
  /// Content hash of the tables (names excluded), used for algebra tags.
  std::uint64_t fingerprint() const { return fingerprint_; }

  friend bool operator==(const FiniteGroupoid& a, const FiniteGroupoid& b);

 private:
  std::vector<std::string> unit_names_;
  std::vector<std::string> arrow_names_;
  std::vector<UnitId> range_;
  std::vector<UnitId> source_;
  std::vector<ArrowId> inverse_;
  std::vector<ArrowId> unit_arrow_;
  std::vector<ArrowId> compose_;  // dense |A|x|A| partial table
  std::vector<std::vector<ArrowId>> range_fiber_;
  std::vector<std::vector<ArrowId>> source_fiber_;
  std::uint64_t fingerprint_ = 0;
};

// ---------------------------------------------------------------------------
// Validation

enum class ViolationKind {
  kComposability,       // compose defined iff source(a) = range(b)
  kCompositeEndpoints,  // r(ab) = r(a), s(ab) = s(b)
  kAssociativity,
  kUnitEndpoints,       // r(unit_arrow(u)) = s(unit_arrow(u)) = u
  kLeftUnit,
  kRightUnit,
  kInverseInvolution,
  kInverseEndpoints,    // r(γ⁻¹) = s(γ)
  kInverseUnitLaw,      // γγ⁻¹ = r(γ), γ⁻¹γ = s(γ)
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<ArrowId> witness;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool cites(ViolationKind kind, ArrowId a) const;
};

ValidationReport validate(const FiniteGroupoid& g);

// ---------------------------------------------------------------------------
// Constructions

/// Pair groupoid on n points: arrows (i,j), (i,j)(j,k) = (i,k). Arrow (i,j)
/// has id i*n + j (0-based), names are 1-based.
FiniteGroupoid pair_groupoid(std::size_t n);

/// A finite group as a one-unit groupoid. `product[a][b]` is the index of
/// ab; element 0 must be the identity.
FiniteGroupoid group_groupoid(const std::vector<std::vector<std::size_t>>& product,
                              std::vector<std::string> names = {});

/// Z_{m1} x ... x Z_{mr} as a one-unit groupoid. Elements are ordered
/// lexicographically (last coordinate fastest) and named "(a,b,...)", or "a"
/// for a single factor.
FiniteGroupoid abelian_group(const std::vector<std::size_t>& orders);

/// Decodes an element id of abelian_group(orders) into coordinates.
std::vector<std::size_t> abelian_coordinates(const std::vector<std::size_t>& orders, ArrowId id);

FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b);

/// Product groupoid; arrow (x, y) has id x * |B| + y.
FiniteGroupoid product_groupoid(const FiniteGroupoid& a, const FiniteGroupoid& b);

/// The groupoid R(Ψ) of a cover {U_i} of a finite set: units (x,i) with
/// x ∈ U_i, arrows ((x,i),(x,j)) for x ∈ U_i ∩ U_j. Units are ordered by
/// (i, x) and arrows by (i, j, x). `cover` holds indices into `points`.
struct CoverGroupoid {
  FiniteGroupoid groupoid;
  std::vector<std::string> points;
  std::size_t set_count = 0;
  std::vector<std::size_t> unit_point;  // x of unit (x,i)
  std::vector<std::size_t> unit_set;    // i of unit (x,i)

  /// Arrow ((x,i),(x,j)) if x ∈ U_i ∩ U_j.
  std::optional<ArrowId> arrow(std::size_t x, std::size_t i, std::size_t j) const;
  std::optional<UnitId> unit(std::size_t x, std::size_t i) const;
};

CoverGroupoid cover_groupoid(const std::vector<std::string>& points,
                             const std::vector<std::vector<std::size_t>>& cover);

// ---------------------------------------------------------------------------
// Structure

bool is_principal(const FiniteGroupoid& g);
bool is_transitive(const FiniteGroupoid& g);

struct ProperReport {
  bool proper = true;
  const char* note = "every map out of a finite discrete space is proper";
};
/// (r, s) is always proper for finite groupoids; kept so reports mirror the
/// usual hypotheses.
ProperReport is_proper(const FiniteGroupoid& g);

struct OrbitDecomposition {
  std::vector<std::size_t> orbit_of;             // unit -> orbit id
  std::vector<std::vector<UnitId>> orbits;       // orbit id -> units, increasing
  std::vector<std::vector<ArrowId>> isotropy;    // unit -> arrows with r = s = u

  std::size_t orbit_count() const { return orbits.size(); }
};

/// Orbits are numbered in order of their smallest unit.
OrbitDecomposition orbits(const FiniteGroupoid& g);

/// A non-unit arrow with r = s, if any.
std::optional<ArrowId> nontrivial_isotropy_arrow(const FiniteGroupoid& g);

struct IsotropyQuotient {
  FiniteGroupoid quotient;
  std::vector<ArrowId> projection;  // arrow of g -> arrow of quotient
  std::vector<ArrowId> representative;  // quotient arrow -> minimal arrow of its class
};

/// G/A for the isotropy bundle A: classes γA_{s(γ)}, canonicalized by their
/// minimal arrow id; quotient arrows are numbered in that order.
IsotropyQuotient quotient_by_isotropy(const FiniteGroupoid& g);

struct MorphismCheck {
  bool morphism = false;  // preserves range, source, composition, inverses, units
  bool bijective = false;
  std::string failure;

  bool isomorphism() const { return morphism && bijective; }
};

MorphismCheck check_morphism(const FiniteGroupoid& from, const FiniteGroupoid& to,
                             std::span<const UnitId> unit_map, std::span<const ArrowId> arrow_map);

}  // namespace grext
