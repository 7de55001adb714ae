#include <doctest.h>

#include <numeric>
#include <set>

#include "grext/cyclic.hpp"
#include "support.hpp"

using namespace grext;
using namespace grext::test;

namespace {

std::vector<UnitId> identity_units(const FiniteGroupoid& g) {
  std::vector<UnitId> m(g.unit_count());
  std::iota(m.begin(), m.end(), 0);
  return m;
}

// Associativity, units and inverses checked directly from the tables.
bool axioms_hold(const FiniteGroupoid& g) {
  for (ArrowId a = 0; a < g.arrow_count(); ++a) {
    if (g.compose(g.unit_arrow(g.range(a)), a) != a || g.compose(a, g.unit_arrow(g.source(a))) != a) return false;
    if (g.compose(a, g.inverse(a)) != g.unit_arrow(g.range(a))) return false;
    for (ArrowId b = 0; b < g.arrow_count(); ++b) {
      if (g.compose(a, b).has_value() != (g.source(a) == g.range(b))) return false;
      if (!g.compose(a, b)) continue;
      for (ArrowId c = 0; c < g.arrow_count(); ++c) {
        if (!g.compose(b, c)) continue;
        if (g.compose(*g.compose(a, b), c) != g.compose(a, *g.compose(b, c))) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("groupoid") {

TEST_CASE("pair groupoid on two points validates") {
  const FiniteGroupoid g = pair_groupoid(2);
  CHECK(validate(g).ok());
  CHECK(g.arrow_count() == 4);
  CHECK(g.compose(arrow(g, "(1,2)"), arrow(g, "(2,1)")) == arrow(g, "(1,1)"));
  CHECK_FALSE(g.compose(arrow(g, "(1,2)"), arrow(g, "(1,2)")));
}

TEST_CASE("redirected composite is reported at (1,2)") {
  GroupoidTables t = pair_groupoid(2).tables();
  const FiniteGroupoid ref = pair_groupoid(2);
  const ArrowId a12 = arrow(ref, "(1,2)"), a21 = arrow(ref, "(2,1)"), a22 = arrow(ref, "(2,2)");
  for (auto& [a, b, c] : t.compose)
    if (a == a12 && b == a21) c = a22;
  const FiniteGroupoid broken(t);
  const ValidationReport r = validate(broken);
  CHECK_FALSE(r.ok());
  CHECK(r.cites(ViolationKind::kInverseUnitLaw, a12));
}

TEST_CASE("Z2 as a one-unit groupoid validates") {
  const FiniteGroupoid g = abelian_group({2});
  CHECK(validate(g).ok());
  CHECK(g.unit_count() == 1);
  CHECK_FALSE(is_principal(g));
  CHECK(is_transitive(g));
}

TEST_CASE("pair groupoid sizes and isotropy") {
  CHECK(pair_groupoid(1).unit_count() == 1);
  CHECK(pair_groupoid(1).arrow_count() == 1);
  const FiniteGroupoid g2 = pair_groupoid(2);
  CHECK(is_principal(g2));
  CHECK(is_transitive(g2));
  const FiniteGroupoid g3 = pair_groupoid(3);
  CHECK(g3.arrow_count() == 9);
  for (UnitId u = 0; u < 3; ++u) {
    std::size_t loops = 0;
    for (ArrowId a = 0; a < 9; ++a) loops += g3.range(a) == u && g3.source(a) == u;
    CHECK(loops == 1);
    CHECK(orbits(g3).isotropy[u].size() == 1);
  }
  CHECK(thrown_kind([] { pair_groupoid(0); }).has_value());
}

TEST_CASE("cover groupoid of three copies of a point is the pair groupoid on three points") {
  const CoverGroupoid c = cover_groupoid({"x"}, {{0}, {0}, {0}});
  CHECK(validate(c.groupoid).ok());
  const FiniteGroupoid p = pair_groupoid(3);
  REQUIRE(c.groupoid.arrow_count() == 9);
  std::vector<UnitId> units(3);
  std::vector<ArrowId> arrows(9);
  for (std::size_t i = 0; i < 3; ++i) {
    units[*c.unit(0, i)] = static_cast<UnitId>(i);
    for (std::size_t j = 0; j < 3; ++j) arrows[*c.arrow(0, i, j)] = static_cast<ArrowId>(3 * i + j);
  }
  CHECK(check_morphism(c.groupoid, p, units, arrows).isomorphism());
}

TEST_CASE("cover with disjoint sets has isolated units") {
  const CoverGroupoid c = cover_groupoid({"1", "2"}, {{0}, {1}});
  CHECK(c.groupoid.unit_count() == 2);
  CHECK(c.groupoid.arrow_count() == 2);
  CHECK_FALSE(is_transitive(c.groupoid));
  CHECK(is_principal(c.groupoid));
}

TEST_CASE("cover with one overlap") {
  const CoverGroupoid c = cover_groupoid({"1", "2"}, {{0, 1}, {0}});
  CHECK(validate(c.groupoid).ok());
  CHECK(c.groupoid.unit_count() == 3);
  CHECK(c.unit(0, 0));
  CHECK(c.unit(1, 0));
  CHECK(c.unit(0, 1));
  CHECK_FALSE(c.unit(1, 1));
  CHECK(c.groupoid.arrow_count() == 5);
  const ArrowId there = *c.arrow(0, 0, 1);
  CHECK(c.groupoid.range(there) == *c.unit(0, 0));
  CHECK(c.groupoid.source(there) == *c.unit(0, 1));
  CHECK_FALSE(c.arrow(1, 0, 1));
}

TEST_CASE("uncovered point is rejected") {
  CHECK(thrown_kind([] { cover_groupoid({"1", "2"}, {{0}}); }) == ErrorKind::kInvalidInput);
}

TEST_CASE("disjoint union is not transitive") {
  const FiniteGroupoid g = disjoint_union(pair_groupoid(2), pair_groupoid(1));
  CHECK(validate(g).ok());
  CHECK_FALSE(is_transitive(g));
  CHECK(is_principal(g));
  CHECK(orbits(g).orbit_count() == 2);
  CHECK(is_proper(g).proper);
}

TEST_CASE("product of groupoids") {
  const FiniteGroupoid g = product_groupoid(pair_groupoid(2), abelian_group({3}));
  CHECK(validate(g).ok());
  CHECK(g.arrow_count() == 12);
  CHECK_FALSE(is_principal(g));
}

TEST_CASE("quotient of a principal groupoid is itself") {
  const FiniteGroupoid g = pair_groupoid(2);
  const IsotropyQuotient q = quotient_by_isotropy(g);
  CHECK(q.quotient.arrow_count() == 4);
  CHECK(check_morphism(g, q.quotient, identity_units(g), q.projection).isomorphism());
}

TEST_CASE("quotient of Z2 is the one-arrow groupoid") {
  const IsotropyQuotient q = quotient_by_isotropy(abelian_group({2}));
  CHECK(q.quotient.arrow_count() == 1);
  CHECK(q.quotient.unit_count() == 1);
  CHECK(q.projection == std::vector<ArrowId>{0, 0});
}

TEST_CASE("quotient of the μ2 extension of the pair groupoid") {
  auto g = share(pair_groupoid(2));
  const CyclicExtension e = cyclic_extension(TwoCocycle::trivial(g), 2);
  const IsotropyQuotient q = quotient_by_isotropy(e.groupoid);
  REQUIRE(q.quotient.arrow_count() == 4);
  std::vector<ArrowId> to_base(4);
  for (ArrowId c = 0; c < 4; ++c) to_base[c] = e.base_arrow(q.representative[c]);
  CHECK(check_morphism(q.quotient, *g, identity_units(*g), to_base).isomorphism());
}

TEST_CASE("orbit membership matches arrow existence") {
  Rng rng(11);
  for (int i = 0; i < 30; ++i) {
    const RandomInstance inst = random_instance(rng, 2);
    const FiniteGroupoid& g = *inst.groupoid;
    const OrbitDecomposition o = orbits(g);
    for (UnitId u = 0; u < g.unit_count(); ++u)
      for (UnitId v = 0; v < g.unit_count(); ++v) {
        bool linked = false;
        for (ArrowId a = 0; a < g.arrow_count(); ++a) linked |= g.range(a) == u && g.source(a) == v;
        CHECK(linked == (o.orbit_of[u] == o.orbit_of[v]));
      }
  }
}

TEST_CASE("generated groupoids satisfy the axioms and their quotients validate") {
  Rng rng(5);
  for (int i = 0; i < 40; ++i) {
    const RandomInstance inst = random_instance(rng, 3);
    const FiniteGroupoid& g = *inst.groupoid;
    CHECK(g.arrow_count() <= 12);
    CHECK(validate(g).ok());
    CHECK(axioms_hold(g));
    const IsotropyQuotient q = quotient_by_isotropy(g);
    CHECK(validate(q.quotient).ok());
    CHECK(axioms_hold(q.quotient));
    CHECK(is_principal(q.quotient));
    const MorphismCheck m = check_morphism(g, q.quotient, identity_units(g), q.projection);
    CHECK(m.morphism);
    CHECK(m.bijective == is_principal(g));
  }
}

TEST_CASE("principal means (r, s) is injective") {
  Rng rng(8);
  for (int i = 0; i < 30; ++i) {
    const RandomInstance inst = random_instance(rng, 2);
    const FiniteGroupoid& g = *inst.groupoid;
    std::set<std::pair<UnitId, UnitId>> ends;
    for (ArrowId a = 0; a < g.arrow_count(); ++a) ends.emplace(g.range(a), g.source(a));
    CHECK(is_principal(g) == (ends.size() == g.arrow_count()));
  }
}

TEST_CASE("cover groupoids are principal") {
  Rng rng(21);
  for (int i = 0; i < 20; ++i) {
    const std::size_t points = 1 + rng.below(3), sets = 1 + rng.below(3);
    std::vector<std::string> names;
    for (std::size_t x = 0; x < points; ++x) names.push_back(std::to_string(x));
    std::vector<std::vector<std::size_t>> cover(sets);
    for (std::size_t x = 0; x < points; ++x) {
      cover[rng.below(sets)].push_back(x);
      for (std::size_t s = 0; s < sets; ++s)
        if (rng.below(2) && std::find(cover[s].begin(), cover[s].end(), x) == cover[s].end()) cover[s].push_back(x);
    }
    for (auto& s : cover) std::sort(s.begin(), s.end());
    const CoverGroupoid c = cover_groupoid(names, cover);
    CHECK(validate(c.groupoid).ok());
    CHECK(is_principal(c.groupoid));
  }
}

TEST_CASE("isotropy groups are closed under composition") {
  const FiniteGroupoid g = disjoint_union(abelian_group({2, 2}), pair_groupoid(2));
  const OrbitDecomposition o = orbits(g);
  for (UnitId u = 0; u < g.unit_count(); ++u)
    for (ArrowId a : o.isotropy[u])
      for (ArrowId b : o.isotropy[u]) {
        const auto c = g.compose(a, b);
        REQUIRE(c);
        CHECK(std::find(o.isotropy[u].begin(), o.isotropy[u].end(), *c) != o.isotropy[u].end());
      }
  CHECK(nontrivial_isotropy_arrow(g).has_value());
  CHECK_FALSE(nontrivial_isotropy_arrow(pair_groupoid(3)).has_value());
}

}  // TEST_SUITE
