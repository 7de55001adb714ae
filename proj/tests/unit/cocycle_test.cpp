#include <doctest.h>

#include <set>
#include <tuple>

#include "support.hpp"

using namespace grext;
using namespace grext::test;

namespace {

using Triple = std::tuple<ArrowId, ArrowId, ArrowId>;

// Both sides of the cocycle identity evaluated from scratch.
std::set<Triple> violating_triples(const TwoCocycle& w) {
  const FiniteGroupoid& g = w.base();
  std::set<Triple> out;
  for (ArrowId a = 0; a < g.arrow_count(); ++a)
    for (ArrowId b = 0; b < g.arrow_count(); ++b) {
      if (!g.composable(a, b)) continue;
      for (ArrowId c = 0; c < g.arrow_count(); ++c) {
        if (!g.composable(b, c)) continue;
        const ArrowId ab = *g.compose(a, b), bc = *g.compose(b, c);
        const std::complex<double> lhs = w(a, b).value() * w(ab, c).value();
        const std::complex<double> rhs = w(b, c).value() * w(a, bc).value();
        if (std::abs(lhs - rhs) > 1e-9) out.emplace(a, b, c);
      }
    }
  return out;
}

TwoCocycle with_value(const TwoCocycle& w, ArrowId a, ArrowId b, CircleScalar z) {
  std::map<ComposablePair, CircleScalar> values;
  for (const auto& [x, y] : w.base().composable_pairs()) values.emplace(ComposablePair{x, y}, w(x, y));
  values[{a, b}] = z;
  return TwoCocycle(w.base_ptr(), values);
}

// Exhaustive search for b: G -> μ_order with δb = ω.
bool coboundary_by_search(const TwoCocycle& w, std::int64_t order) {
  const std::size_t n = w.base().arrow_count();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::size_t>(order);
  for (std::size_t code = 0; code < total; ++code) {
    OneCochain b;
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      b.values.push_back(CircleScalar::exact(static_cast<std::int64_t>(c % order), order));
      c /= static_cast<std::size_t>(order);
    }
    if (same_values(coboundary(w.base_ptr(), b), w, 0.0)) return true;
  }
  return false;
}

OneCochain product(const OneCochain& a, const OneCochain& b) {
  OneCochain out;
  for (std::size_t i = 0; i < a.values.size(); ++i) out.values.push_back(a.values[i] * b.values[i]);
  return out;
}

OneCochain conj(const OneCochain& a) {
  OneCochain out;
  for (const auto& z : a.values) out.values.push_back(z.conj());
  return out;
}

}  // namespace

TEST_SUITE("cocycle") {

TEST_CASE("trivial cocycle satisfies the identity") {
  const TwoCocycle w = TwoCocycle::trivial(share(pair_groupoid(3)));
  CHECK(check_identity(w).ok());
  CHECK(w.identity_checked());
  CHECK(w.normalized());
  CHECK(w.order() == 1);
}

TEST_CASE("the Pauli cocycle satisfies the identity on all 64 triples") {
  const TwoCocycle w = pauli_cocycle();
  CHECK(violating_triples(w).empty());
  CHECK(check_identity(w).ok());
  CHECK(w.normalized());
  CHECK(w.order() == 2);
  const FiniteGroupoid& g = w.base();
  CHECK(w(arrow(g, "(0,1)"), arrow(g, "(1,0)")).angle() == Angle(1, 2));
  CHECK(w(arrow(g, "(1,0)"), arrow(g, "(0,1)")).is_one(0.0));
  CHECK(w(arrow(g, "(1,1)"), arrow(g, "(1,1)")).angle() == Angle(1, 2));
}

TEST_CASE("negating one value breaks the identity at the triples through that pair") {
  const TwoCocycle w = pauli_cocycle();
  const FiniteGroupoid& g = w.base();
  const ArrowId x = arrow(g, "(0,1)"), y = arrow(g, "(1,0)");
  const TwoCocycle broken = with_value(w, x, y, w(x, y) * CircleScalar::exact(1, 2));
  CHECK_FALSE(broken.identity_checked());
  const CocycleReport r = check_identity(broken);
  REQUIRE_FALSE(r.ok());
  std::set<Triple> reported;
  for (const auto& v : r.violations) {
    reported.emplace(v.a, v.b, v.c);
    CHECK_FALSE(v.lhs.equals(v.rhs));
    const ArrowId ab = *g.compose(v.a, v.b), bc = *g.compose(v.b, v.c);
    const bool touches = (v.a == x && v.b == y) || (ab == x && v.c == y) || (v.b == x && v.c == y) ||
                         (v.a == x && bc == y);
    CHECK(touches);
  }
  CHECK(reported == violating_triples(broken));
}

TEST_CASE("normalize leaves a normalized cocycle alone") {
  const TwoCocycle w = pauli_cocycle();
  const Normalization n = normalize(w);
  CHECK(same_values(n.cocycle, w, 0.0));
  for (const auto& z : n.cochain.values) CHECK(z.is_one(0.0));
}

TEST_CASE("normalize the constant cocycle e^{2πi/3} on Z2") {
  auto g = share(abelian_group({2}));
  const TwoCocycle w = TwoCocycle::from_function(g, [](ArrowId, ArrowId) { return CircleScalar::exact(1, 3); });
  CHECK(w.identity_checked());
  CHECK_FALSE(w.normalized());
  const Normalization n = normalize(w);
  CHECK(n.cocycle.normalized());
  CHECK(check_identity(n.cocycle).ok());
  CHECK(n.cocycle(0, 1).is_one(0.0));
  CHECK(n.cocycle(1, 0).is_one(0.0));
  CHECK(n.cocycle(1, 1).is_one(0.0));
  for (const auto& z : n.cochain.values) CHECK(z.angle() == Angle(1, 3));
  // ω' = ω · conj(δb)
  CHECK(same_values(multiply(n.cocycle, coboundary(g, n.cochain)), w, 0.0));
}

TEST_CASE("normalize output is normalized on random cocycles of the pair groupoid") {
  Rng rng(3);
  auto g = share(pair_groupoid(2));
  for (int i = 0; i < 100; ++i) {
    const TwoCocycle w = coboundary(g, random_cochain(rng, *g, 1 + static_cast<std::int64_t>(rng.below(6)), false));
    REQUIRE(w.identity_checked());
    const Normalization n = normalize(w);
    CHECK(n.cocycle.normalized());
    CHECK(n.cocycle.identity_checked());
    CHECK(same_values(multiply(n.cocycle, coboundary(g, n.cochain)), w, 0.0));
    CHECK(same_values(normalize(n.cocycle).cocycle, n.cocycle, 0.0));
  }
}

TEST_CASE("normalize accepts approximate values") {
  auto g = share(abelian_group({3}));
  const TwoCocycle w = TwoCocycle::from_function(g, [](ArrowId, ArrowId) { return CircleScalar::from_turns(0.2); });
  const Normalization n = normalize(w);
  CHECK(n.cocycle.normalized());
  CHECK(check_identity(n.cocycle).ok());
}

TEST_CASE("powers") {
  const TwoCocycle w = pauli_cocycle();
  const TwoCocycle trivial = TwoCocycle::trivial(w.base_ptr());
  CHECK(same_values(power(w, 0), trivial, 0.0));
  CHECK(same_values(power(w, 2), trivial, 0.0));
  CHECK(same_values(power(w, -1), w, 0.0));
  auto g = share(abelian_group({2}));
  const TwoCocycle c = TwoCocycle::from_function(g, [](ArrowId, ArrowId) { return CircleScalar::exact(2, 7); });
  CHECK(same_values(power(c, 7), TwoCocycle::trivial(g), 0.0));
  CHECK_FALSE(same_values(power(c, 3), TwoCocycle::trivial(g), 0.0));
  Rng rng(4);
  auto p3 = share(pair_groupoid(3));
  const TwoCocycle r = coboundary(p3, random_cochain(rng, *p3, 6, true));
  for (std::int64_t m = -3; m <= 3; ++m)
    for (std::int64_t n = -3; n <= 3; ++n) CHECK(same_values(power(r, m + n), multiply(power(r, m), power(r, n)), 0.0));
}

TEST_CASE("coboundaries") {
  auto p2 = share(pair_groupoid(2));
  CHECK(same_values(coboundary(p2, OneCochain::constant(4, CircleScalar::one())), TwoCocycle::trivial(p2), 0.0));
  Rng rng(9);
  for (int i = 0; i < 50; ++i) {
    const OneCochain b = random_cochain(rng, *p2, 5, false);
    CHECK(check_identity(coboundary(p2, b)).ok());
  }
  // b ≡ i on Z2: δb(g,h) = b(g) b(h) conj b(gh) = i everywhere.
  auto z2 = share(abelian_group({2}));
  const OneCochain b = OneCochain::constant(2, CircleScalar::exact(1, 4));
  const TwoCocycle db = coboundary(z2, b);
  for (ArrowId g = 0; g < 2; ++g)
    for (ArrowId h = 0; h < 2; ++h) CHECK(db(g, h).angle() == Angle(1, 4));
  CHECK(db(1, 1).equals(b(1) * b(1) * b(0).conj(), 0.0));
  CHECK_FALSE(db.normalized());
}

TEST_CASE("trivialize the trivial cocycle") {
  auto g = share(pair_groupoid(3));
  const OneCochain b = trivialize_principal(TwoCocycle::trivial(g));
  for (const auto& z : b.values) CHECK(z.is_one(0.0));
}

TEST_CASE("trivialize reproduces random normalized cocycles on the pair groupoid") {
  Rng rng(12);
  auto g = share(pair_groupoid(3));
  CHECK(g->composable_pairs().size() == 27);
  for (int i = 0; i < 100; ++i) {
    const TwoCocycle w = normalize(coboundary(g, random_cochain(rng, *g, 12, false))).cocycle;
    REQUIRE(w.normalized());
    const OneCochain b = trivialize_principal(w);
    for (const auto& [x, y] : g->composable_pairs()) CHECK(coboundary(g, b)(x, y).equals(w(x, y), 0.0));
  }
}

TEST_CASE("trivialize on non-principal groupoids names the isotropy obstruction") {
  std::string message;
  CHECK(thrown_kind([] { trivialize_principal(pauli_cocycle()); }, &message) == ErrorKind::kIsotropyObstruction);
  CHECK(message.find("isotropy obstruction") != std::string::npos);
  CHECK(message.find("(0,1)") != std::string::npos);
}

TEST_CASE("cech cocycles on a cover") {
  const CoverGroupoid c = cover_groupoid({"x"}, {{0}, {0}, {0}});
  const TwoCocycle one = cech_cocycle(c, [](auto...) { return std::optional(CircleScalar::one()); });
  CHECK(same_values(one, TwoCocycle::trivial(one.base_ptr()), 0.0));

  // λ = δμ with μ₁₂ = ζ₅.
  auto mu = [](std::size_t i, std::size_t j) {
    if (i == 0 && j == 1) return CircleScalar::exact(1, 5);
    if (i == 1 && j == 0) return CircleScalar::exact(4, 5);
    return CircleScalar::one();
  };
  const TwoCocycle w = cech_cocycle(c, [&](std::size_t i, std::size_t j, std::size_t k, std::size_t) {
    return std::optional(mu(i, j) * mu(j, k) * mu(i, k).conj());
  });
  CHECK(check_identity(w).ok());
  CHECK(w(*c.arrow(0, 0, 1), *c.arrow(0, 1, 2)).angle() == Angle(1, 5));

  const OneCochain b = trivialize_principal(w);
  CHECK(same_values(coboundary(w.base_ptr(), b), w, 0.0));
  const auto solved = solve_coboundary(w);
  REQUIRE(solved);
  CHECK(same_values(coboundary(w.base_ptr(), *solved), w, 0.0));
  // The recovered cochain differs from μ by a closed cochain.
  OneCochain m;
  for (ArrowId a = 0; a < w.base().arrow_count(); ++a)
    m.values.push_back(mu(c.unit_set[w.base().range(a)], c.unit_set[w.base().source(a)]));
  const TwoCocycle closed = coboundary(w.base_ptr(), product(b, conj(m)));
  CHECK(same_values(closed, TwoCocycle::trivial(w.base_ptr()), 0.0));
}

TEST_CASE("cech condition failures show up in the identity check") {
  const CoverGroupoid c = cover_groupoid({"x"}, {{0}, {0}, {0}});
  const TwoCocycle w = cech_cocycle(c, [](std::size_t i, std::size_t j, std::size_t k, std::size_t) {
    return std::optional(i == 0 && j == 1 && k == 2 ? CircleScalar::exact(1, 5) : CircleScalar::one());
  });
  CHECK_FALSE(check_identity(w).ok());
}

TEST_CASE("missing cech values are named") {
  const CoverGroupoid c = cover_groupoid({"x"}, {{0}, {0}, {0}});
  std::string message;
  const auto kind = thrown_kind(
      [&] {
        cech_cocycle(c, [](std::size_t i, std::size_t j, std::size_t k, std::size_t) -> std::optional<CircleScalar> {
          if (i == 0 && j == 1 && k == 2) return std::nullopt;
          return CircleScalar::one();
        });
      },
      &message);
  CHECK(kind == ErrorKind::kInvalidInput);
  CHECK(message.find("(1,2,3,x)") != std::string::npos);
}

TEST_CASE("solve_coboundary") {
  auto p3 = share(pair_groupoid(3));
  const auto t = solve_coboundary(TwoCocycle::trivial(p3));
  REQUIRE(t);
  CHECK(same_values(coboundary(p3, *t), TwoCocycle::trivial(p3), 0.0));

  Rng rng(2);
  for (int i = 0; i < 60; ++i) {
    const RandomInstance inst = random_instance(rng, 2 + static_cast<std::int64_t>(rng.below(5)));
    const OneCochain b0 = random_cochain(rng, *inst.groupoid, 12, false);
    const TwoCocycle w = coboundary(inst.groupoid, b0);
    const auto b = solve_coboundary(w);
    REQUIRE(b);
    CHECK(same_values(coboundary(inst.groupoid, *b), w, 0.0));
  }
}

TEST_CASE("solve_coboundary uses angles outside the value group") {
  // b(1) = i on Z2 gives a μ₂-valued δb that no μ₂-valued cochain bounds.
  auto z2 = share(abelian_group({2}));
  OneCochain b = OneCochain::constant(2, CircleScalar::one());
  b.values[1] = CircleScalar::exact(1, 4);
  const TwoCocycle w = coboundary(z2, b);
  CHECK(w.order() == 2);
  const auto s = solve_coboundary(w);
  REQUIRE(s);
  CHECK(same_values(coboundary(z2, *s), w, 0.0));
  CHECK_FALSE(coboundary_by_search(w, 2));
  CHECK(coboundary_by_search(w, 4));
}

TEST_CASE("the Pauli class is nontrivial") {
  const TwoCocycle w = pauli_cocycle();
  CHECK_FALSE(solve_coboundary(w).has_value());
  CHECK_FALSE(coboundary_by_search(w, 4));
  auto z33 = share(abelian_group({3, 3}));
  const TwoCocycle h = TwoCocycle::from_function(z33, [](ArrowId x, ArrowId y) {
    return CircleScalar::exact(static_cast<std::int64_t>((x % 3) * (y / 3)), 3);
  });
  CHECK(h.identity_checked());
  CHECK_FALSE(solve_coboundary(h).has_value());
}

TEST_CASE("solve_coboundary refuses approximate values") {
  auto g = share(abelian_group({2}));
  const TwoCocycle w = TwoCocycle::from_function(g, [](ArrowId, ArrowId) { return CircleScalar::from_turns(0.5); });
  std::string message;
  CHECK(thrown_kind([&] { solve_coboundary(w); }, &message) == ErrorKind::kPrecondition);
  CHECK(message == "exact angles required");
}

TEST_CASE("solve and trivialize agree up to a closed cochain on principal groupoids") {
  Rng rng(31);
  for (int i = 0; i < 40; ++i) {
    const RandomInstance inst = random_principal_instance(rng, 4);
    const OneCochain b = trivialize_principal(inst.cocycle);
    const auto s = solve_coboundary(inst.cocycle);
    REQUIRE(s);
    CHECK(same_values(coboundary(inst.groupoid, product(b, conj(*s))), TwoCocycle::trivial(inst.groupoid), 0.0));
  }
}

TEST_CASE("pullback along the identity") {
  const TwoCocycle w = pauli_cocycle();
  const std::vector<ArrowId> id = {0, 1, 2, 3};
  CHECK(same_values(pullback(w, w.base_ptr(), id), w, 0.0));
}

TEST_CASE("fingerprints separate cocycles") {
  const TwoCocycle w = pauli_cocycle();
  CHECK(w.fingerprint() == pauli_cocycle().fingerprint());
  CHECK(w.fingerprint() != TwoCocycle::trivial(w.base_ptr()).fingerprint());
}

}  // TEST_SUITE
