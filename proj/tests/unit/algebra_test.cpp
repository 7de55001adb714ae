#include <doctest.h>

#include "grext/linalg.hpp"
#include "support.hpp"

using namespace grext;
using namespace grext::test;

namespace {

// Σ over factorizations ηξ = γ, read off the composition table.
AlgebraElement convolve_by_factorization(const TwistedAlgebra& A, const AlgebraElement& f, const AlgebraElement& g) {
  const FiniteGroupoid& G = A.groupoid();
  AlgebraElement out = A.zero();
  for (ArrowId a = 0; a < G.arrow_count(); ++a)
    for (ArrowId b = 0; b < G.arrow_count(); ++b)
      if (auto c = G.compose(a, b)) out.coeff[*c] += f(a) * g(b) * A.twist()(a, b).value();
  return out;
}

AlgebraElement random_element(Rng& rng, const TwistedAlgebra& A, double density = 1.0) {
  return A.element(random_coefficients(rng, A.dimension(), density));
}

std::vector<RandomInstance> instances(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<RandomInstance> out;
  for (int i = 0; i < count; ++i) out.push_back(random_instance(rng, std::vector<std::int64_t>{2, 3, 4, 6}[i % 4]));
  return out;
}

}  // namespace

TEST_SUITE("twisted_algebra") {

TEST_CASE("matrix units of the pair groupoid") {
  const TwistedAlgebra A(TwoCocycle::trivial(share(pair_groupoid(2))), 1);
  const FiniteGroupoid& g = A.groupoid();
  const ArrowId a12 = arrow(g, "(1,2)"), a21 = arrow(g, "(2,1)"), a11 = arrow(g, "(1,1)");
  CHECK(max_difference(A.convolve(A.delta(a12), A.delta(a21)), A.delta(a11)) == 0.0);
  CHECK(A.convolve(A.delta(a12), A.delta(a12)).is_zero());
  CHECK(max_difference(A.involute(A.delta(a12)), A.delta(a21)) == 0.0);
}

TEST_CASE("Pauli generators anticommute") {
  const TwistedAlgebra A(pauli_cocycle(), 1);
  const FiniteGroupoid& g = A.groupoid();
  const ArrowId x = arrow(g, "(0,1)"), y = arrow(g, "(1,0)"), xy = arrow(g, "(1,1)");
  CHECK(max_difference(A.convolve(A.delta(x), A.delta(y)), A.delta(xy).scaled(-1.0)) == 0.0);
  CHECK(max_difference(A.convolve(A.delta(y), A.delta(x)), A.delta(xy)) == 0.0);
  CHECK(max_difference(A.involute(A.delta(xy)), A.delta(xy).scaled(-1.0)) == 0.0);
  const auto sc = A.structure_constant(x, y);
  REQUIRE(sc);
  CHECK(sc->arrow == xy);
  CHECK(sc->phase.angle() == Angle(1, 2));
  CHECK_FALSE(A.is_commutative());
}

TEST_CASE("identity element") {
  const TwistedAlgebra P(TwoCocycle::trivial(share(pair_groupoid(2))), 1);
  const FiniteGroupoid& g = P.groupoid();
  const AlgebraElement e = P.identity_element();
  CHECK(max_difference(e, P.delta(arrow(g, "(1,1)")) + P.delta(arrow(g, "(2,2)"))) == 0.0);
  CHECK(max_difference(P.convolve(e, P.delta(arrow(g, "(1,2)"))), P.delta(arrow(g, "(1,2)"))) == 0.0);
  const TwistedAlgebra Q(pauli_cocycle(), 1);
  CHECK(max_difference(Q.identity_element(), Q.delta(arrow(Q.groupoid(), "(0,0)"))) == 0.0);

  for (const RandomInstance& inst : instances(40, 100)) {
    const TwistedAlgebra A(inst.cocycle, 1);
    Rng rng(inst.groupoid->fingerprint());
    const AlgebraElement f = random_element(rng, A);
    CHECK(max_difference(A.convolve(A.identity_element(), f), f) < 1e-14);
    CHECK(max_difference(A.convolve(f, A.identity_element()), f) < 1e-14);
  }
}

TEST_CASE("identity element needs a normalized cocycle") {
  auto g = share(abelian_group({2}));
  const TwoCocycle c = TwoCocycle::from_function(g, [](ArrowId, ArrowId) { return CircleScalar::exact(1, 3); });
  const TwistedAlgebra A(c, 1);
  CHECK(thrown_kind([&] { A.identity_element(); }) == ErrorKind::kPrecondition);
}

TEST_CASE("a cocycle failing the identity is refused") {
  auto g = share(abelian_group({3}));
  std::map<ComposablePair, CircleScalar> v{{{1, 1}, CircleScalar::exact(1, 4)}};
  const TwoCocycle bad(g, v);
  REQUIRE_FALSE(bad.identity_checked());
  CHECK(thrown_kind([&] { TwistedAlgebra(bad, 1); }) == ErrorKind::kPrecondition);
}

TEST_CASE("elements of different algebras do not mix") {
  const TwoCocycle w = pauli_cocycle();
  const TwistedAlgebra A(w, 1), B(w, 2), C(TwoCocycle::trivial(share(abelian_group({4}))), 1);
  CHECK(thrown_kind([&] { A.convolve(A.delta(1), B.delta(1)); }) == ErrorKind::kTagMismatch);
  CHECK(thrown_kind([&] { A.involute(C.delta(1)); }) == ErrorKind::kTagMismatch);
  CHECK(thrown_kind([&] { A.delta(1) + B.delta(1); }) == ErrorKind::kTagMismatch);
  CHECK(A.tag().power == 1);
  CHECK(B.tag().power == 2);
  CHECK_FALSE(A.tag() == B.tag());
}

TEST_CASE("convolution agrees with the sum over factorizations and is associative") {
  for (const RandomInstance& inst : instances(41, 60)) {
    for (std::int64_t n : {1, 2, -1}) {
      const TwistedAlgebra A(inst.cocycle, n);
      Rng rng(inst.groupoid->fingerprint() + static_cast<std::uint64_t>(n));
      const AlgebraElement f = random_element(rng, A), g = random_element(rng, A), h = random_element(rng, A, 0.5);
      CHECK(max_difference(A.convolve(f, g), convolve_by_factorization(A, f, g)) < 1e-12);
      CHECK(max_difference(A.convolve(A.convolve(f, g), h), A.convolve(f, A.convolve(g, h))) < 1e-12);
      CHECK(max_difference(A.involute(A.involute(f)), f) < 1e-14);
      CHECK(max_difference(A.involute(A.convolve(f, g)), A.convolve(A.involute(g), A.involute(f))) < 1e-12);
    }
  }
}

TEST_CASE("associativity on the delta basis") {
  const TwistedAlgebra A(pauli_cocycle(), 1);
  for (ArrowId a = 0; a < 4; ++a)
    for (ArrowId b = 0; b < 4; ++b)
      for (ArrowId c = 0; c < 4; ++c)
        CHECK(max_difference(A.convolve(A.convolve(A.delta(a), A.delta(b)), A.delta(c)),
                             A.convolve(A.delta(a), A.convolve(A.delta(b), A.delta(c)))) == 0.0);
}

TEST_CASE("regular representation of a matrix unit") {
  const TwistedAlgebra A(TwoCocycle::trivial(share(pair_groupoid(2))), 1);
  const FiniteGroupoid& g = A.groupoid();
  const RegularRep rep = A.regular_rep(A.delta(arrow(g, "(2,1)")), unit(g, "1"));
  REQUIRE(rep.basis == std::vector<ArrowId>{arrow(g, "(1,1)"), arrow(g, "(2,1)")});
  Matrix e21 = Matrix::Zero(2, 2);
  e21(1, 0) = 1.0;
  CHECK(max_abs_entry(rep.matrix - e21) == 0.0);
  const RegularRep id = A.regular_rep(A.identity_element(), unit(g, "2"));
  CHECK(max_abs_entry(id.matrix - Matrix::Identity(2, 2)) == 0.0);
  CHECK(thrown_kind([&] { A.regular_rep(A.delta(0), 7); }) == ErrorKind::kInvalidInput);
}

TEST_CASE("Pauli regular representation is a signed permutation squaring to one") {
  const TwistedAlgebra A(pauli_cocycle(), 1);
  const Matrix m = A.regular_rep(A.delta(arrow(A.groupoid(), "(0,1)")), 0).matrix;
  REQUIRE(m.rows() == 4);
  for (Eigen::Index i = 0; i < 4; ++i) {
    int nonzero = 0;
    for (Eigen::Index j = 0; j < 4; ++j) {
      if (m(i, j) == Complex(0.0)) continue;
      ++nonzero;
      CHECK((m(i, j) == Complex(1.0) || m(i, j) == Complex(-1.0)));
    }
    CHECK(nonzero == 1);
  }
  CHECK(max_abs_entry(m * m - Matrix::Identity(4, 4)) < 1e-15);
  CHECK(m.cwiseAbs().sum() == doctest::Approx(4.0));
  // Some entry carries the sign of ω.
  CHECK(m.real().minCoeff() == -1.0);
}

TEST_CASE("the representation form reads matrix entries") {
  const TwistedAlgebra A(pauli_cocycle(), 1);
  Rng rng(3);
  const AlgebraElement f = random_element(rng, A);
  const Matrix m = A.regular_rep(f, 0).matrix;
  for (Eigen::Index i = 0; i < 4; ++i)
    for (Eigen::Index j = 0; j < 4; ++j) {
      const Vector xi = Vector::Unit(4, j), zeta = Vector::Unit(4, i);
      CHECK(close(A.representation_form(f, 0, xi, zeta), m(i, j)));
    }
}

TEST_CASE("regular representations are multiplicative and *-preserving") {
  for (const RandomInstance& inst : instances(42, 60)) {
    const TwistedAlgebra A(inst.cocycle, 1);
    Rng rng(inst.groupoid->fingerprint() ^ 7);
    const AlgebraElement f = random_element(rng, A), g = random_element(rng, A);
    for (UnitId u = 0; u < A.groupoid().unit_count(); ++u) {
      const Matrix pf = A.regular_rep(f, u).matrix, pg = A.regular_rep(g, u).matrix;
      CHECK(max_abs_entry(A.regular_rep(A.convolve(f, g), u).matrix - pf * pg) < 1e-12);
      CHECK(max_abs_entry(A.regular_rep(A.involute(f), u).matrix - pf.adjoint()) < 1e-14);
    }
  }
}

TEST_CASE("reduced norms") {
  const TwistedAlgebra P(TwoCocycle::trivial(share(pair_groupoid(2))), 1);
  const FiniteGroupoid& g = P.groupoid();
  const NormReport flip = P.reduced_norm(P.delta(arrow(g, "(1,2)")) + P.delta(arrow(g, "(2,1)")));
  CHECK(flip.reduced_norm == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(flip.faithful);
  CHECK(flip.unit_norms.size() == 2);
  CHECK(P.reduced_norm(P.identity_element()).reduced_norm == doctest::Approx(1.0).epsilon(1e-14));

  const TwistedAlgebra Q(pauli_cocycle(), 1);
  const NormReport two = Q.reduced_norm(Q.delta(arrow(Q.groupoid(), "(0,0)")) + Q.delta(arrow(Q.groupoid(), "(0,1)")));
  CHECK(two.reduced_norm == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(two.attained_at == 0u);
  CHECK(Q.reduced_norm(Q.zero()).reduced_norm == 0.0);

  for (const RandomInstance& inst : instances(43, 30)) {
    const TwistedAlgebra A(inst.cocycle, 1);
    CHECK(A.reduced_norm(A.identity_element()).reduced_norm == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("C*-identity and subadditivity") {
  for (const RandomInstance& inst : instances(44, 40)) {
    const TwistedAlgebra A(inst.cocycle, 1);
    Rng rng(inst.groupoid->fingerprint() ^ 9);
    const AlgebraElement f = random_element(rng, A), g = random_element(rng, A);
    const double nf = A.reduced_norm(f).reduced_norm;
    CHECK(A.reduced_norm(A.convolve(A.involute(f), f)).reduced_norm == doctest::Approx(nf * nf).epsilon(1e-9));
    CHECK(A.reduced_norm(A.involute(f)).reduced_norm == doctest::Approx(nf).epsilon(1e-9));
    CHECK(A.reduced_norm(A.convolve(f, g)).reduced_norm <= nf * A.reduced_norm(g).reduced_norm + 1e-9);
  }
}

TEST_CASE("faithfulness and full norm certificates") {
  const TwistedAlgebra P(TwoCocycle::trivial(share(pair_groupoid(2))), 1);
  FullNormCertificate c = P.full_norm_certificate();
  CHECK(c.faithful);
  CHECK(c.dimension == 4);
  CHECK(c.rank == 4);
  // Each unit sees all of M₂.
  for (UnitId u = 0; u < 2; ++u) {
    std::vector<Vector> images;
    for (ArrowId a = 0; a < 4; ++a) {
      const Matrix m = P.regular_rep(P.delta(a), u).matrix;
      images.push_back(Eigen::Map<const Vector>(m.data(), m.size()));
    }
    CHECK(span_dimension(images) == 4);
  }
  const TwistedAlgebra Q(pauli_cocycle(), 1);
  c = Q.full_norm_certificate();
  CHECK(c.faithful);
  CHECK(c.dimension == 4);
  CHECK(Q.center_dimension() == 1);
  const TwistedAlgebra T(TwoCocycle::trivial(share(abelian_group({2, 2}))), 1);
  CHECK(T.full_norm_certificate().faithful);
  CHECK(T.is_commutative());
  CHECK(T.center_dimension() == 4);
  CHECK(TwistedAlgebra(pauli_cocycle(), 2).is_commutative());

  for (const RandomInstance& inst : instances(45, 40)) {
    const TwistedAlgebra A(inst.cocycle, 1);
    CHECK(A.representation_rank() == A.dimension());
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    const TwistedAlgebra A(TwoCocycle::trivial(share(pair_groupoid(n))), 1);
    CHECK(A.representation_rank() == n * n);
    CHECK(A.center_dimension() == 1);
  }
}

TEST_CASE("cohomologous twists give isomorphic algebras") {
  Rng rng(46);
  for (int i = 0; i < 40; ++i) {
    const RandomInstance inst = random_instance(rng, 4);
    const OneCochain b = random_cochain(rng, *inst.groupoid, 6, true);
    const TwoCocycle shifted = multiply(inst.cocycle, power(coboundary(inst.groupoid, b), -1));
    const TwistedAlgebra A(inst.cocycle, 1), B(shifted, 1);
    for (ArrowId x = 0; x < A.dimension(); ++x) {
      for (ArrowId y = 0; y < A.dimension(); ++y) {
        const AlgebraElement lhs = transport(B, b, A.convolve(A.delta(x), A.delta(y)));
        const AlgebraElement rhs = B.convolve(transport(B, b, A.delta(x)), transport(B, b, A.delta(y)));
        CHECK(max_difference(lhs, rhs) < 1e-14);
      }
      CHECK(max_difference(transport(B, b, A.involute(A.delta(x))), B.involute(transport(B, b, A.delta(x)))) < 1e-14);
    }
  }
}

TEST_CASE("multiplying the twist by δb instead of its conjugate breaks the transport") {
  auto g = share(pair_groupoid(2));
  OneCochain b = OneCochain::constant(4, CircleScalar::one());
  b.values[arrow(*g, "(1,2)")] = CircleScalar::exact(1, 4);
  const TwoCocycle w = TwoCocycle::trivial(g);
  const TwistedAlgebra A(w, 1), B(multiply(w, coboundary(g, b)), 1);
  const ArrowId x = arrow(*g, "(1,2)"), y = arrow(*g, "(2,1)");
  const AlgebraElement lhs = transport(B, b, A.convolve(A.delta(x), A.delta(y)));
  const AlgebraElement rhs = B.convolve(transport(B, b, A.delta(x)), transport(B, b, A.delta(y)));
  CHECK(max_difference(lhs, rhs) > 0.5);
}

}  // TEST_SUITE
