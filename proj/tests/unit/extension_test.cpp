#include <doctest.h>

#include <numbers>

#include "grext/ext_reference.hpp"
#include "grext/extension.hpp"
#include "grext/fixtures.hpp"
#include "grext/linalg.hpp"
#include "support.hpp"

using namespace grext;
using namespace grext::test;

namespace {

reference::ModeCoefficients coefficients(const LaurentElement& f) {
  reference::ModeCoefficients c;
  for (const auto& [n, e] : f.modes) c.emplace(n, e.coeff);
  return c;
}

double distance(const reference::ModeCoefficients& a, const LaurentElement& b) {
  double d = 0.0;
  for (const auto& [n, v] : a) {
    auto it = b.modes.find(n);
    for (std::size_t i = 0; i < v.size(); ++i) d = std::max(d, std::abs(v[i] - (it == b.modes.end() ? 0.0 : it->second.coeff[i])));
  }
  for (const auto& [n, e] : b.modes)
    if (!a.count(n))
      for (Complex c : e.coeff) d = std::max(d, std::abs(c));
  return d;
}

TwoCocycle random_mu4_on_pair3(Rng& rng) {
  auto g = share(pair_groupoid(3));
  return normalize(coboundary(g, random_cochain(rng, *g, 4, false))).cocycle;
}

Complex root(double turns) { return std::polar(1.0, 2 * std::numbers::pi * turns); }

}  // namespace

TEST_SUITE("extension") {

TEST_CASE("mode zero is the untwisted product") {
  const ExtensionModel m(TwoCocycle::trivial(share(pair_groupoid(2))));
  const FiniteGroupoid& g = m.groupoid();
  const LaurentElement p = m.product(m.monomial(0, arrow(g, "(1,2)")), m.monomial(0, arrow(g, "(2,1)")));
  CHECK(max_difference(p, m.monomial(0, arrow(g, "(1,1)"))) == 0.0);
}

TEST_CASE("products across modes vanish") {
  Rng rng(1);
  const ExtensionModel m(pauli_cocycle());
  for (int i = 0; i < 20; ++i) {
    const LaurentElement f = random_laurent(rng, m, {1, 1}), g = random_laurent(rng, m, {0, 0});
    CHECK(m.product(f, g).support().empty());
    CHECK(m.product(g, f).support().empty());
  }
}

TEST_CASE("same-mode product carries the twist") {
  const ExtensionModel m(pauli_cocycle());
  const FiniteGroupoid& g = m.groupoid();
  const LaurentElement f = m.monomial(1, arrow(g, "(0,1)"));
  const LaurentElement p = m.product(f, f);
  CHECK(max_difference(p, m.monomial(1, arrow(g, "(0,0)"))) == 0.0);
  const LaurentElement q = m.product(m.monomial(1, arrow(g, "(0,1)")), m.monomial(1, arrow(g, "(1,0)")));
  CHECK(max_difference(q, m.scaled(m.monomial(1, arrow(g, "(1,1)")), -1.0)) == 0.0);
  const LaurentElement r = m.product(m.monomial(2, arrow(g, "(0,1)")), m.monomial(2, arrow(g, "(1,0)")));
  CHECK(max_difference(r, m.monomial(2, arrow(g, "(1,1)"))) == 0.0);
}

TEST_CASE("components are homogeneous of their degree") {
  const ExtensionModel m(pauli_cocycle());
  Rng rng(2);
  const LaurentElement f = random_laurent(rng, m, {-2, 2});
  const auto c = coefficients(f);
  for (std::int64_t n = -2; n <= 2; ++n) {
    const reference::ModeCoefficients only{{n, c.at(n)}};
    const Complex t = root(0.3), s = root(0.11);
    for (ArrowId a = 0; a < 4; ++a) {
      CHECK(close(reference::evaluate(only, t, a), std::pow(t, -static_cast<double>(n)) * c.at(n)[a]));
      CHECK(close(reference::evaluate(only, s * t, a), std::pow(s, -static_cast<double>(n)) * reference::evaluate(only, t, a)));
    }
  }
}

TEST_CASE("extension multiplication") {
  const TwoCocycle w = pauli_cocycle();
  const FiniteGroupoid& g = w.base();
  const ArrowId x = arrow(g, "(0,1)"), y = arrow(g, "(1,0)");
  const reference::ExtPoint a{CircleScalar::exact(1, 4), x}, b{CircleScalar::one(), y};
  const reference::ExtPoint ab = reference::ext_multiply(w, a, b);
  CHECK(ab.arrow == arrow(g, "(1,1)"));
  CHECK(ab.t.angle() == Angle(3, 4));
  const reference::ExtPoint unit = reference::ext_multiply(w, a, reference::ext_inverse(w, a));
  CHECK(unit.arrow == g.unit_arrow(0));
  CHECK(unit.t.is_one(0.0));
}

TEST_CASE("basis products follow the twist with sign c^{-n}") {
  const TwoCocycle w = pauli_cocycle();
  const FiniteGroupoid& g = w.base();
  const ArrowId x = arrow(g, "(0,1)"), y = arrow(g, "(1,0)");
  CHECK_FALSE(reference::basis_product(w, 1, x, 0, y));
  for (std::int64_t n = -3; n <= 3; ++n) {
    const auto p = reference::basis_product(w, n, x, n, y);
    REQUIRE(p);
    CHECK(p->mode == n);
    CHECK(p->arrow == arrow(g, "(1,1)"));
    CHECK(p->phase.equals(w(x, y).pow(n), 0.0));
  }
}

TEST_CASE("graded product agrees with convolution on the extension groupoid") {
  Rng rng(3);
  for (const std::string name : {"pair2", "pair3_mu4", "pauli", "z3_heisenberg", "cover3", "disjoint"}) {
    const ExtensionModel m(build_fixture(name).cocycle_or_trivial());
    for (int i = 0; i < 10; ++i) {
      const LaurentElement f = random_laurent(rng, m, {-2, 1}), g = random_laurent(rng, m, {-1, 2});
      CHECK(distance(reference::convolve(m.cocycle(), coefficients(f), coefficients(g)), m.product(f, g)) < 1e-12);
      CHECK(distance(reference::adjoint(m.cocycle(), coefficients(f)), m.adjoint(f)) < 1e-12);
    }
  }
}

TEST_CASE("the reference route sees the orientation of the twist") {
  const TwoCocycle w = build_fixture("z3_heisenberg").cocycle_or_trivial();
  const ExtensionModel m(w);
  const ExtensionModel flipped(power(w, -1));
  Rng rng(4);
  const LaurentElement f = random_laurent(rng, m, {1, 1});
  const LaurentElement g = random_laurent(rng, m, {1, 1});
  LaurentElement ff = flipped.zero(), gf = flipped.zero();
  ff.modes.emplace(1, flipped.mode_algebra(1).element(f.modes.at(1).coeff));
  gf.modes.emplace(1, flipped.mode_algebra(1).element(g.modes.at(1).coeff));
  CHECK(distance(reference::convolve(w, coefficients(f), coefficients(g)), flipped.product(ff, gf)) > 1e-3);
}

TEST_CASE("chi projects onto a mode") {
  const ExtensionModel m(pauli_cocycle());
  Rng rng(5);
  const AlgebraElement f = m.mode_algebra(1).element(random_coefficients(rng, 4));
  const AlgebraElement g = m.mode_algebra(0).element(random_coefficients(rng, 4));
  const LaurentElement F = m.add(m.from_mode(1, f), m.from_mode(0, g));
  CHECK(max_difference(m.chi(F, 1), m.from_mode(1, f)) == 0.0);
  CHECK(max_difference(m.chi(F, 0), m.from_mode(0, g)) == 0.0);
  CHECK(m.chi(F, 2).support().empty());
  CHECK(max_difference(m.chi(m.chi(F, 1), 1), m.chi(F, 1)) == 0.0);
  CHECK(max_difference(m.upsilon(F, 1), f) == 0.0);
  CHECK(m.upsilon(F, 5).is_zero());
  CHECK(m.upsilon(F, 5).tag.power == 5);
}

TEST_CASE("chi by quadrature matches the stored modes") {
  const ExtensionModel m(pauli_cocycle());
  Rng rng(6);
  const LaurentElement F = random_laurent(rng, m, {-2, 2});
  const auto c = coefficients(F);
  const Complex t = root(0.37);
  for (std::int64_t n = -3; n <= 3; ++n) {
    const LaurentElement chi = m.chi(F, n);
    for (ArrowId a = 0; a < 4; ++a) {
      const Complex expected = reference::evaluate(coefficients(chi), t, a);
      CHECK(close(reference::fourier_projection(c, n, t, a, 16), expected));
    }
  }
  const auto modes = reference::fourier_modes(
      [&](Complex s, ArrowId a) { return reference::evaluate(c, s, a); }, 4, -3, 3, 16);
  CHECK(distance(modes, F) < 1e-12);
}

TEST_CASE("chi and upsilon are *-homomorphisms") {
  Rng rng(7);
  for (const std::string name : {"pair2", "pauli", "z3_heisenberg", "pair3_mu4"}) {
    const ExtensionModel m(build_fixture(name).cocycle_or_trivial());
    for (int i = 0; i < 25; ++i) {
      const LaurentElement F = random_laurent(rng, m, {-2, 2}), G = random_laurent(rng, m, {-2, 2});
      for (std::int64_t n = -2; n <= 2; ++n) {
        CHECK(max_difference(m.chi(m.product(F, G), n), m.product(m.chi(F, n), m.chi(G, n))) < 1e-12);
        CHECK(max_difference(m.chi(m.adjoint(F), n), m.adjoint(m.chi(F, n))) < 1e-12);
        const TwistedAlgebra A = m.mode_algebra(n);
        CHECK(max_difference(m.upsilon(m.product(F, G), n), A.convolve(m.upsilon(F, n), m.upsilon(G, n))) < 1e-12);
        CHECK(max_difference(m.upsilon(m.adjoint(F), n), A.involute(m.upsilon(F, n))) < 1e-12);
      }
      // Σ_n χ_n(F) = F
      LaurentElement sum = m.zero();
      for (std::int64_t n = -2; n <= 2; ++n) sum = m.add(sum, m.chi(F, n));
      CHECK(max_difference(sum, F) == 0.0);
    }
  }
}

TEST_CASE("upsilon is exact on the delta basis of the pair groupoid") {
  const ExtensionModel m(build_fixture("pair2").cocycle_or_trivial());
  const std::size_t n_arrows = m.groupoid().arrow_count();
  for (std::int64_t n = -2; n <= 2; ++n) {
    const TwistedAlgebra A = m.mode_algebra(n);
    for (ArrowId a = 0; a < n_arrows; ++a)
      for (ArrowId b = 0; b < n_arrows; ++b) {
        const LaurentElement p = m.product(m.monomial(n, a), m.monomial(n, b));
        CHECK(max_difference(m.upsilon(p, n), A.convolve(A.delta(a), A.delta(b))) == 0.0);
        const auto ref = reference::basis_product(m.cocycle(), n, a, n, b);
        CHECK(ref.has_value() == !p.support().empty());
      }
  }
}

TEST_CASE("elements must carry the right power") {
  const ExtensionModel m(pauli_cocycle());
  CHECK(thrown_kind([&] { m.from_mode(1, m.mode_algebra(2).delta(0)); }) == ErrorKind::kTagMismatch);
  const ExtensionModel other(TwoCocycle::trivial(share(abelian_group({2, 2}))));
  CHECK(thrown_kind([&] { m.product(m.identity(), other.identity()); }) == ErrorKind::kTagMismatch);
}

TEST_CASE("the extension model needs a normalized cocycle") {
  auto g = share(abelian_group({2}));
  const TwoCocycle c = TwoCocycle::from_function(g, [](ArrowId, ArrowId) { return CircleScalar::exact(1, 3); });
  CHECK(thrown_kind([&] { ExtensionModel{c}; }) == ErrorKind::kPrecondition);
}

TEST_CASE("decompose") {
  const ExtensionModel m(pauli_cocycle());
  const Decomposition id = m.decompose(m.identity());
  CHECK(id.norm == doctest::Approx(1.0).epsilon(1e-14));
  for (const auto& [n, v] : id.norms) CHECK(v == doctest::Approx(n == 0 ? 1.0 : 0.0));

  const FiniteGroupoid& g = m.groupoid();
  const LaurentElement F = m.add(m.monomial(1, arrow(g, "(0,1)")), m.monomial(0, arrow(g, "(0,0)")));
  const Decomposition d = m.decompose(F);
  REQUIRE(d.norms.size() == 2);
  CHECK(d.norms.at(0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(d.norms.at(1) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(d.norm == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(max_difference(d.components.at(1), m.mode_algebra(1).delta(arrow(g, "(0,1)"))) == 0.0);

  const Decomposition z = m.decompose(m.zero());
  CHECK(z.norm == 0.0);
  CHECK(z.components.empty());
}

TEST_CASE("empty groupoid") {
  auto g = share(FiniteGroupoid(GroupoidTables{}));
  CHECK(validate(*g).ok());
  const ExtensionModel m(TwoCocycle::trivial(g));
  CHECK(m.decompose(m.zero()).norm == 0.0);
  const TwistedAlgebra A(TwoCocycle::trivial(g), 1);
  CHECK(A.reduced_norm(A.zero()).reduced_norm == 0.0);
  CHECK(A.full_norm_certificate().faithful);
  CHECK(A.center_dimension() == 0);
}

TEST_CASE("windowed basis is orthonormal") {
  const FiniteGroupoid g = pair_groupoid(3);
  for (UnitId u = 0; u < 3; ++u) {
    const Matrix gram = mode_gram_matrix(g, u, {-2, 1});
    CHECK(gram.rows() == 12);
    CHECK(max_abs_entry(gram - Matrix::Identity(12, 12)) == 0.0);
    const auto blocks = mode_unitaries(g, u, {-2, 1});
    REQUIRE(blocks.size() == 4);
    CHECK(blocks[2].mode == 0);
    CHECK(blocks[2].offset == 6);
    for (ArrowId a : blocks[0].basis) CHECK(g.source(a) == u);
  }
}

TEST_CASE("intertwining on a matrix unit") {
  const ExtensionModel m(TwoCocycle::trivial(share(pair_groupoid(2))));
  const FiniteGroupoid& g = m.groupoid();
  const IntertwineResult r = intertwine_check(m, m.monomial(0, arrow(g, "(1,2)")), unit(g, "1"), {0, 0});
  CHECK(r.residual == 0.0);
  CHECK(r.dimension == 2);
  // (1,2) maps δ_(2,1) to δ_(1,1) in the basis {(1,1),(2,1)}.
  CHECK(r.extension_block(0, 1) == Complex(1.0));
  CHECK(max_abs_entry(r.extension_block) == 1.0);
  CHECK(r.extension_block.cwiseAbs().sum() == 1.0);
}

TEST_CASE("intertwining on random Pauli elements") {
  const ExtensionModel m(pauli_cocycle());
  Rng rng(8);
  for (int i = 0; i < 30; ++i) {
    const LaurentElement F = random_laurent(rng, m, {-1, 1});
    const IntertwineResult r = intertwine_check(m, F, 0, {-1, 1});
    CHECK(r.residual <= 1e-12);
    CHECK(r.dimension == 12);
    CHECK(intertwine_check(m, F, 0, {-3, 2}).residual <= 1e-12);
  }
}

TEST_CASE("a window that cuts off modes is refused") {
  const ExtensionModel m(pauli_cocycle());
  const LaurentElement F = m.add(m.monomial(-1, 1), m.monomial(2, 3));
  std::string message;
  CHECK(thrown_kind([&] { intertwine_check(m, F, 0, {0, 1}); }, &message) == ErrorKind::kPrecondition);
  CHECK(message.find("-1") != std::string::npos);
  CHECK(message.find(" 2") != std::string::npos);
}

TEST_CASE("reduced norms split as a maximum over modes") {
  const ExtensionModel id_model(pauli_cocycle());
  const ReducedDecomposeCertificate c = reduced_decompose_check(id_model, {id_model.identity()});
  CHECK(c.passed());
  CHECK(c.max_deviation <= 1e-14);
  CHECK(id_model.decompose(id_model.identity()).norm == doctest::Approx(1.0));

  Rng rng(9);
  std::vector<LaurentElement> samples;
  const ExtensionModel m(random_mu4_on_pair3(rng));
  for (int i = 0; i < 100; ++i) samples.push_back(random_laurent(rng, m, {-2, 2}));
  const ReducedDecomposeCertificate r = reduced_decompose_check(m, samples);
  CHECK(r.samples == 100);
  CHECK(r.max_deviation <= 1e-9);
}

}  // TEST_SUITE
