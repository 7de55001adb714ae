#include "grext/groupoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "grext/error.hpp"
#include "hash.hpp"

namespace grext {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw Error(ErrorKind::kInvalidInput, what);
}

}  // namespace

FiniteGroupoid::FiniteGroupoid(GroupoidTables t)
    : unit_names_(std::move(t.unit_names)),
      arrow_names_(std::move(t.arrow_names)),
      range_(std::move(t.range)),
      source_(std::move(t.source)),
      inverse_(std::move(t.inverse)),
      unit_arrow_(std::move(t.unit_arrow)) {
  const std::size_t na = arrow_names_.size();
  const std::size_t nu = unit_names_.size();
  require(range_.size() == na && source_.size() == na && inverse_.size() == na,
          "range/source/inverse tables must have one entry per arrow");
  require(unit_arrow_.size() == nu, "unit_arrow table must have one entry per unit");
  for (std::size_t a = 0; a < na; ++a) {
    require(range_[a] < nu && source_[a] < nu, "arrow '" + arrow_names_[a] + "' has an unknown endpoint");
    require(inverse_[a] < na, "arrow '" + arrow_names_[a] + "' has an unknown inverse");
  }
  for (std::size_t u = 0; u < nu; ++u)
    require(unit_arrow_[u] < na, "unit '" + unit_names_[u] + "' has an unknown identity arrow");
  {
    std::set<std::string> seen(arrow_names_.begin(), arrow_names_.end());
    require(seen.size() == na, "arrow names must be unique");
    std::set<std::string> useen(unit_names_.begin(), unit_names_.end());
    require(useen.size() == nu, "unit names must be unique");
  }

  compose_.assign(na * na, kNoArrow);
  for (const auto& [a, b, c] : t.compose) {
    require(a < na && b < na && c < na, "compose entry refers to an unknown arrow");
    auto& slot = compose_[static_cast<std::size_t>(a) * na + b];
    require(slot == kNoArrow, "duplicate compose entry for (" + arrow_names_[a] + ", " + arrow_names_[b] + ")");
    slot = c;
  }

  range_fiber_.assign(nu, {});
  source_fiber_.assign(nu, {});
  for (ArrowId a = 0; a < na; ++a) {
    range_fiber_[range_[a]].push_back(a);
    source_fiber_[source_[a]].push_back(a);
  }

  Fnv1a h;
  h.add(nu);
  h.add(na);
  for (std::size_t a = 0; a < na; ++a) {
    h.add(range_[a]);
    h.add(source_[a]);
    h.add(inverse_[a]);
  }
  for (auto x : unit_arrow_) h.add(x);
  for (auto x : compose_) h.add(x);
  fingerprint_ = h.value();
}

std::optional<ArrowId> FiniteGroupoid::find_arrow(const std::string& name) const {
  auto it = std::find(arrow_names_.begin(), arrow_names_.end(), name);
  if (it == arrow_names_.end()) return std::nullopt;
  return static_cast<ArrowId>(it - arrow_names_.begin());
}

std::optional<UnitId> FiniteGroupoid::find_unit(const std::string& name) const {
  auto it = std::find(unit_names_.begin(), unit_names_.end(), name);
  if (it == unit_names_.end()) return std::nullopt;
  return static_cast<UnitId>(it - unit_names_.begin());
}

std::vector<ComposablePair> FiniteGroupoid::composable_pairs() const {
  std::vector<ComposablePair> out;
  for (ArrowId a = 0; a < arrow_count(); ++a)
    for (ArrowId b : range_fiber(source(a))) out.push_back({a, b});
  return out;
}

GroupoidTables FiniteGroupoid::tables() const {
  GroupoidTables t{unit_names_, arrow_names_, range_, source_, inverse_, unit_arrow_, {}};
  const std::size_t na = arrow_count();
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < na; ++b)
      if (auto c = compose_[a * na + b]; c != kNoArrow)
        t.compose.emplace_back(static_cast<ArrowId>(a), static_cast<ArrowId>(b), c);
  return t;
}

bool operator==(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  return a.unit_names_ == b.unit_names_ && a.arrow_names_ == b.arrow_names_ && a.range_ == b.range_ &&
         a.source_ == b.source_ && a.inverse_ == b.inverse_ && a.unit_arrow_ == b.unit_arrow_ &&
         a.compose_ == b.compose_;
}

// ---------------------------------------------------------------------------

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kComposability: return "composability";
    case ViolationKind::kCompositeEndpoints: return "composite_endpoints";
    case ViolationKind::kAssociativity: return "associativity";
    case ViolationKind::kUnitEndpoints: return "unit_endpoints";
    case ViolationKind::kLeftUnit: return "left_unit";
    case ViolationKind::kRightUnit: return "right_unit";
    case ViolationKind::kInverseInvolution: return "inverse_involution";
    case ViolationKind::kInverseEndpoints: return "inverse_endpoints";
    case ViolationKind::kInverseUnitLaw: return "inverse_unit_law";
  }
  return "unknown";
}

bool ValidationReport::cites(ViolationKind kind, ArrowId a) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) {
    return v.kind == kind && std::find(v.witness.begin(), v.witness.end(), a) != v.witness.end();
  });
}

ValidationReport validate(const FiniteGroupoid& g) {
  ValidationReport report;
  auto add = [&](ViolationKind kind, std::vector<ArrowId> witness, std::string detail) {
    report.violations.push_back({kind, std::move(witness), std::move(detail)});
  };
  const auto& name = [&](ArrowId a) -> const std::string& { return g.arrow_name(a); };
  const std::size_t na = g.arrow_count();

  for (ArrowId a = 0; a < na; ++a) {
    for (ArrowId b = 0; b < na; ++b) {
      const auto c = g.compose(a, b);
      if (c.has_value() != g.composable(a, b)) {
        add(ViolationKind::kComposability, {a, b},
            c ? name(a) + "∘" + name(b) + " is defined but s(a) != r(b)"
              : name(a) + "∘" + name(b) + " is undefined although s(a) = r(b)");
        continue;
      }
      if (c && (g.range(*c) != g.range(a) || g.source(*c) != g.source(b)))
        add(ViolationKind::kCompositeEndpoints, {a, b, *c},
            name(a) + "∘" + name(b) + " = " + name(*c) + " has the wrong range or source");
    }
  }

  for (ArrowId a = 0; a < na; ++a) {
    for (ArrowId b : g.range_fiber(g.source(a))) {
      const auto ab = g.compose(a, b);
      if (!ab) continue;
      for (ArrowId c : g.range_fiber(g.source(b))) {
        const auto bc = g.compose(b, c);
        if (!bc) continue;
        const auto lhs = g.compose(*ab, c);
        const auto rhs = g.compose(a, *bc);
        if (lhs != rhs)
          add(ViolationKind::kAssociativity, {a, b, c},
              "(" + name(a) + "∘" + name(b) + ")∘" + name(c) + " != " + name(a) + "∘(" + name(b) + "∘" + name(c) + ")");
      }
    }
  }

  for (UnitId u = 0; u < g.unit_count(); ++u) {
    const ArrowId e = g.unit_arrow(u);
    if (g.range(e) != u || g.source(e) != u)
      add(ViolationKind::kUnitEndpoints, {e}, "identity arrow of unit '" + g.unit_name(u) + "' is not a loop at it");
  }

  for (ArrowId a = 0; a < na; ++a) {
    if (g.compose(g.unit_arrow(g.range(a)), a) != std::optional<ArrowId>(a))
      add(ViolationKind::kLeftUnit, {a}, "r(γ)∘γ != γ at " + name(a));
    if (g.compose(a, g.unit_arrow(g.source(a))) != std::optional<ArrowId>(a))
      add(ViolationKind::kRightUnit, {a}, "γ∘s(γ) != γ at " + name(a));

    const ArrowId inv = g.inverse(a);
    if (g.inverse(inv) != a) add(ViolationKind::kInverseInvolution, {a, inv}, "(γ⁻¹)⁻¹ != γ at " + name(a));
    if (g.range(inv) != g.source(a) || g.source(inv) != g.range(a))
      add(ViolationKind::kInverseEndpoints, {a, inv}, "r(γ⁻¹) != s(γ) at " + name(a));
    if (g.compose(a, inv) != std::optional<ArrowId>(g.unit_arrow(g.range(a))))
      add(ViolationKind::kInverseUnitLaw, {a, inv}, "γ∘γ⁻¹ != r(γ) at " + name(a));
    if (g.compose(inv, a) != std::optional<ArrowId>(g.unit_arrow(g.source(a))))
      add(ViolationKind::kInverseUnitLaw, {a, inv}, "γ⁻¹∘γ != s(γ) at " + name(a));
  }
  return report;
}

// ---------------------------------------------------------------------------

FiniteGroupoid pair_groupoid(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::kInvalidInput, "pair groupoid needs at least one point");
  GroupoidTables t;
  for (std::size_t i = 0; i < n; ++i) {
    t.unit_names.push_back(std::to_string(i + 1));
    t.unit_arrow.push_back(static_cast<ArrowId>(i * n + i));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      t.arrow_names.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      t.range.push_back(static_cast<UnitId>(i));
      t.source.push_back(static_cast<UnitId>(j));
      t.inverse.push_back(static_cast<ArrowId>(j * n + i));
      for (std::size_t k = 0; k < n; ++k)
        t.compose.emplace_back(static_cast<ArrowId>(i * n + j), static_cast<ArrowId>(j * n + k),
                               static_cast<ArrowId>(i * n + k));
    }
  return FiniteGroupoid(std::move(t));
}

FiniteGroupoid group_groupoid(const std::vector<std::vector<std::size_t>>& product, std::vector<std::string> names) {
  const std::size_t n = product.size();
  if (n == 0) throw Error(ErrorKind::kInvalidInput, "empty group");
  if (names.empty())
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  if (names.size() != n) throw Error(ErrorKind::kInvalidInput, "group element names do not match the table");

  GroupoidTables t;
  t.unit_names = {"e"};
  t.unit_arrow = {0};
  t.arrow_names = std::move(names);
  t.range.assign(n, 0);
  t.source.assign(n, 0);
  t.inverse.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    if (product[a].size() != n) throw Error(ErrorKind::kInvalidInput, "group table is not square");
    bool found = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (product[a][b] >= n) throw Error(ErrorKind::kInvalidInput, "group table entry out of range");
      t.compose.emplace_back(static_cast<ArrowId>(a), static_cast<ArrowId>(b), static_cast<ArrowId>(product[a][b]));
      if (!found && product[a][b] == 0) {
        t.inverse[a] = static_cast<ArrowId>(b);
        found = true;
      }
    }
  }
  return FiniteGroupoid(std::move(t));
}

std::vector<std::size_t> abelian_coordinates(const std::vector<std::size_t>& orders, ArrowId id) {
  std::vector<std::size_t> coords(orders.size());
  std::size_t rest = id;
  for (std::size_t i = orders.size(); i-- > 0;) {
    coords[i] = rest % orders[i];
    rest /= orders[i];
  }
  return coords;
}

FiniteGroupoid abelian_group(const std::vector<std::size_t>& orders) {
  if (orders.empty()) throw Error(ErrorKind::kInvalidInput, "abelian group needs at least one factor");
  for (auto m : orders)
    if (m == 0) throw Error(ErrorKind::kInvalidInput, "cyclic factor of order zero");
  const std::size_t n = std::accumulate(orders.begin(), orders.end(), std::size_t{1}, std::multiplies<>());
  auto encode = [&](const std::vector<std::size_t>& c) {
    std::size_t id = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) id = id * orders[i] + c[i];
    return id;
  };
  std::vector<std::vector<std::size_t>> product(n, std::vector<std::size_t>(n));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    const auto ca = abelian_coordinates(orders, static_cast<ArrowId>(a));
    std::string nm = orders.size() == 1 ? "" : "(";
    for (std::size_t i = 0; i < ca.size(); ++i) nm += (i ? "," : "") + std::to_string(ca[i]);
    if (orders.size() != 1) nm += ")";
    names.push_back(nm);
    for (std::size_t b = 0; b < n; ++b) {
      auto cb = abelian_coordinates(orders, static_cast<ArrowId>(b));
      for (std::size_t i = 0; i < cb.size(); ++i) cb[i] = (ca[i] + cb[i]) % orders[i];
      product[a][b] = encode(cb);
    }
  }
  return group_groupoid(product, std::move(names));
}

FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  auto ta = a.tables();
  auto tb = b.tables();
  const auto ua = static_cast<UnitId>(a.unit_count());
  const auto aa = static_cast<ArrowId>(a.arrow_count());
  GroupoidTables t;
  auto tag = [](const std::string& s, const char* side) { return std::string(side) + s; };
  for (auto& s : ta.unit_names) t.unit_names.push_back(tag(s, "a:"));
  for (auto& s : tb.unit_names) t.unit_names.push_back(tag(s, "b:"));
  for (auto& s : ta.arrow_names) t.arrow_names.push_back(tag(s, "a:"));
  for (auto& s : tb.arrow_names) t.arrow_names.push_back(tag(s, "b:"));
  t.range = ta.range;
  t.source = ta.source;
  t.inverse = ta.inverse;
  t.unit_arrow = ta.unit_arrow;
  for (auto x : tb.range) t.range.push_back(x + ua);
  for (auto x : tb.source) t.source.push_back(x + ua);
  for (auto x : tb.inverse) t.inverse.push_back(x + aa);
  for (auto x : tb.unit_arrow) t.unit_arrow.push_back(x + aa);
  t.compose = ta.compose;
  for (auto [x, y, z] : tb.compose) t.compose.emplace_back(x + aa, y + aa, z + aa);
  return FiniteGroupoid(std::move(t));
}

FiniteGroupoid product_groupoid(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  const std::size_t nb = b.arrow_count(), ub = b.unit_count();
  GroupoidTables t;
  for (UnitId x = 0; x < a.unit_count(); ++x)
    for (UnitId y = 0; y < ub; ++y) {
      t.unit_names.push_back("(" + a.unit_name(x) + "," + b.unit_name(y) + ")");
      t.unit_arrow.push_back(static_cast<ArrowId>(a.unit_arrow(x) * nb + b.unit_arrow(y)));
    }
  for (ArrowId x = 0; x < a.arrow_count(); ++x)
    for (ArrowId y = 0; y < nb; ++y) {
      t.arrow_names.push_back("(" + a.arrow_name(x) + "," + b.arrow_name(y) + ")");
      t.range.push_back(static_cast<UnitId>(a.range(x) * ub + b.range(y)));
      t.source.push_back(static_cast<UnitId>(a.source(x) * ub + b.source(y)));
      t.inverse.push_back(static_cast<ArrowId>(a.inverse(x) * nb + b.inverse(y)));
    }
  for (ArrowId x1 = 0; x1 < a.arrow_count(); ++x1)
    for (ArrowId x2 = 0; x2 < a.arrow_count(); ++x2) {
      const auto x = a.compose(x1, x2);
      if (!x) continue;
      for (ArrowId y1 = 0; y1 < nb; ++y1)
        for (ArrowId y2 = 0; y2 < nb; ++y2)
          if (const auto y = b.compose(y1, y2))
            t.compose.emplace_back(static_cast<ArrowId>(x1 * nb + y1), static_cast<ArrowId>(x2 * nb + y2),
                                   static_cast<ArrowId>(*x * nb + *y));
    }
  return FiniteGroupoid(std::move(t));
}

std::optional<ArrowId> CoverGroupoid::arrow(std::size_t x, std::size_t i, std::size_t j) const {
  const auto ri = unit(x, i);
  const auto sj = unit(x, j);
  if (!ri || !sj) return std::nullopt;
  for (ArrowId a : groupoid.range_fiber(*ri))
    if (groupoid.source(a) == *sj) return a;
  return std::nullopt;
}

std::optional<UnitId> CoverGroupoid::unit(std::size_t x, std::size_t i) const {
  for (UnitId u = 0; u < unit_point.size(); ++u)
    if (unit_point[u] == x && unit_set[u] == i) return u;
  return std::nullopt;
}

CoverGroupoid cover_groupoid(const std::vector<std::string>& points, const std::vector<std::vector<std::size_t>>& cover) {
  std::vector<std::vector<bool>> member(cover.size(), std::vector<bool>(points.size(), false));
  for (std::size_t i = 0; i < cover.size(); ++i)
    for (auto x : cover[i]) {
      if (x >= points.size()) throw Error(ErrorKind::kInvalidInput, "cover set refers to an unknown point");
      member[i][x] = true;
    }
  for (std::size_t x = 0; x < points.size(); ++x) {
    bool covered = false;
    for (std::size_t i = 0; i < cover.size(); ++i) covered = covered || member[i][x];
    if (!covered) throw Error(ErrorKind::kInvalidInput, "point '" + points[x] + "' lies outside every cover set");
  }

  CoverGroupoid out;
  out.points = points;
  out.set_count = cover.size();
  std::map<std::pair<std::size_t, std::size_t>, UnitId> unit_id;  // (x, i) -> unit
  GroupoidTables t;
  auto unit_label = [&](std::size_t x, std::size_t i) { return "(" + points[x] + "," + std::to_string(i + 1) + ")"; };
  for (std::size_t i = 0; i < cover.size(); ++i)
    for (std::size_t x = 0; x < points.size(); ++x)
      if (member[i][x]) {
        unit_id[{x, i}] = static_cast<UnitId>(t.unit_names.size());
        t.unit_names.push_back(unit_label(x, i));
        out.unit_point.push_back(x);
        out.unit_set.push_back(i);
      }
  t.unit_arrow.assign(t.unit_names.size(), 0);

  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, ArrowId> arrow_id;  // (x, i, j)
  for (std::size_t i = 0; i < cover.size(); ++i)
    for (std::size_t j = 0; j < cover.size(); ++j)
      for (std::size_t x = 0; x < points.size(); ++x)
        if (member[i][x] && member[j][x]) {
          const auto id = static_cast<ArrowId>(t.arrow_names.size());
          arrow_id[{x, i, j}] = id;
          t.arrow_names.push_back("(" + unit_label(x, i) + "," + unit_label(x, j) + ")");
          t.range.push_back(unit_id.at({x, i}));
          t.source.push_back(unit_id.at({x, j}));
          if (i == j) t.unit_arrow[unit_id.at({x, i})] = id;
        }
  t.inverse.resize(t.arrow_names.size());
  for (const auto& [key, id] : arrow_id) {
    const auto [x, i, j] = key;
    t.inverse[id] = arrow_id.at({x, j, i});
    for (std::size_t k = 0; k < cover.size(); ++k)
      if (member[k][x]) t.compose.emplace_back(id, arrow_id.at({x, j, k}), arrow_id.at({x, i, k}));
  }
  out.groupoid = FiniteGroupoid(std::move(t));
  return out;
}

// ---------------------------------------------------------------------------

bool is_principal(const FiniteGroupoid& g) {
  std::set<std::pair<UnitId, UnitId>> seen;
  for (ArrowId a = 0; a < g.arrow_count(); ++a)
    if (!seen.insert({g.range(a), g.source(a)}).second) return false;
  return true;
}

bool is_transitive(const FiniteGroupoid& g) { return orbits(g).orbit_count() <= 1; }

ProperReport is_proper(const FiniteGroupoid&) { return {}; }

OrbitDecomposition orbits(const FiniteGroupoid& g) {
  const std::size_t nu = g.unit_count();
  std::vector<std::size_t> parent(nu);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (ArrowId a = 0; a < g.arrow_count(); ++a) {
    auto x = find(g.range(a)), y = find(g.source(a));
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
  OrbitDecomposition out;
  out.orbit_of.assign(nu, 0);
  std::map<std::size_t, std::size_t> root_to_orbit;
  for (UnitId u = 0; u < nu; ++u) {
    auto [it, fresh] = root_to_orbit.try_emplace(find(u), out.orbits.size());
    if (fresh) out.orbits.emplace_back();
    out.orbit_of[u] = it->second;
    out.orbits[it->second].push_back(u);
  }
  out.isotropy.assign(nu, {});
  for (ArrowId a = 0; a < g.arrow_count(); ++a)
    if (g.range(a) == g.source(a)) out.isotropy[g.range(a)].push_back(a);
  return out;
}

std::optional<ArrowId> nontrivial_isotropy_arrow(const FiniteGroupoid& g) {
  for (ArrowId a = 0; a < g.arrow_count(); ++a)
    if (g.range(a) == g.source(a) && g.unit_arrow(g.range(a)) != a) return a;
  return std::nullopt;
}

IsotropyQuotient quotient_by_isotropy(const FiniteGroupoid& g) {
  const auto orb = orbits(g);
  const std::size_t na = g.arrow_count();
  std::vector<ArrowId> rep(na, kNoArrow);
  for (ArrowId a = 0; a < na; ++a) {
    ArrowId best = a;
    for (ArrowId alpha : orb.isotropy[g.source(a)])
      if (auto c = g.compose(a, alpha)) best = std::min(best, *c);
    rep[a] = best;
  }
  IsotropyQuotient out;
  std::map<ArrowId, ArrowId> class_of_rep;
  for (ArrowId a = 0; a < na; ++a)
    if (rep[a] == a) {
      class_of_rep[a] = static_cast<ArrowId>(out.representative.size());
      out.representative.push_back(a);
    }
  out.projection.resize(na);
  for (ArrowId a = 0; a < na; ++a) out.projection[a] = class_of_rep.at(rep[a]);

  GroupoidTables t;
  for (UnitId u = 0; u < g.unit_count(); ++u) {
    t.unit_names.push_back(g.unit_name(u));
    t.unit_arrow.push_back(out.projection[g.unit_arrow(u)]);
  }
  for (ArrowId r : out.representative) {
    t.arrow_names.push_back("[" + g.arrow_name(r) + "]");
    t.range.push_back(g.range(r));
    t.source.push_back(g.source(r));
    t.inverse.push_back(out.projection[g.inverse(r)]);
  }
  const auto nq = static_cast<ArrowId>(out.representative.size());
  for (ArrowId x = 0; x < nq; ++x)
    for (ArrowId y = 0; y < nq; ++y)
      if (auto c = g.compose(out.representative[x], out.representative[y]))
        t.compose.emplace_back(x, y, out.projection[*c]);
  out.quotient = FiniteGroupoid(std::move(t));
  return out;
}

MorphismCheck check_morphism(const FiniteGroupoid& from, const FiniteGroupoid& to, std::span<const UnitId> unit_map,
                             std::span<const ArrowId> arrow_map) {
  MorphismCheck out;
  if (unit_map.size() != from.unit_count() || arrow_map.size() != from.arrow_count()) {
    out.failure = "map sizes do not match the source groupoid";
    return out;
  }
  for (auto u : unit_map)
    if (u >= to.unit_count()) {
      out.failure = "unit image out of range";
      return out;
    }
  for (auto a : arrow_map)
    if (a >= to.arrow_count()) {
      out.failure = "arrow image out of range";
      return out;
    }
  for (UnitId u = 0; u < from.unit_count(); ++u)
    if (arrow_map[from.unit_arrow(u)] != to.unit_arrow(unit_map[u])) {
      out.failure = "identity arrow of " + from.unit_name(u) + " not preserved";
      return out;
    }
  for (ArrowId a = 0; a < from.arrow_count(); ++a) {
    const ArrowId fa = arrow_map[a];
    if (to.range(fa) != unit_map[from.range(a)] || to.source(fa) != unit_map[from.source(a)]) {
      out.failure = "range/source not preserved at " + from.arrow_name(a);
      return out;
    }
    if (arrow_map[from.inverse(a)] != to.inverse(fa)) {
      out.failure = "inverse not preserved at " + from.arrow_name(a);
      return out;
    }
    for (ArrowId b : from.range_fiber(from.source(a))) {
      const auto ab = from.compose(a, b);
      const auto image = to.compose(fa, arrow_map[b]);
      if (!ab || !image || arrow_map[*ab] != *image) {
        out.failure = "composition not preserved at (" + from.arrow_name(a) + ", " + from.arrow_name(b) + ")";
        return out;
      }
    }
  }
  out.morphism = true;
  std::set<ArrowId> arrows(arrow_map.begin(), arrow_map.end());
  std::set<UnitId> units(unit_map.begin(), unit_map.end());
  out.bijective = arrows.size() == from.arrow_count() && from.arrow_count() == to.arrow_count() &&
                  units.size() == from.unit_count() && from.unit_count() == to.unit_count();
  return out;
}

}  // namespace grext
