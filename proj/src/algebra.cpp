#include "grext/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "grext/error.hpp"

namespace grext {

std::string AlgebraTag::to_string() const {
  std::ostringstream os;
  os << std::hex << "G" << groupoid << "/w" << cocycle << std::dec << "^" << power;
  return os.str();
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& other) const {
  if (!(tag == other.tag)) throw Error(ErrorKind::kTagMismatch, "adding elements of different algebras");
  AlgebraElement r = *this;
  for (std::size_t i = 0; i < coeff.size(); ++i) r.coeff[i] += other.coeff[i];
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& other) const { return *this + other.scaled(-1.0); }

AlgebraElement AlgebraElement::scaled(Complex c) const {
  AlgebraElement r = *this;
  for (auto& x : r.coeff) x *= c;
  return r;
}

bool AlgebraElement::is_zero(double tol) const {
  return std::all_of(coeff.begin(), coeff.end(), [tol](Complex c) { return std::abs(c) <= tol; });
}

double max_difference(const AlgebraElement& a, const AlgebraElement& b) {
  if (!(a.tag == b.tag)) throw Error(ErrorKind::kTagMismatch, "comparing elements of different algebras");
  double d = 0.0;
  for (std::size_t i = 0; i < a.coeff.size(); ++i) d = std::max(d, std::abs(a.coeff[i] - b.coeff[i]));
  return d;
}

TwistedAlgebra::TwistedAlgebra(const TwoCocycle& omega, std::int64_t n)
    : twist_(grext::power(omega, n)),
      tag_{omega.base().fingerprint(), omega.fingerprint(), n} {
  if (!omega.identity_checked())
    throw Error(ErrorKind::kPrecondition, "twisted algebra needs a cocycle satisfying the cocycle identity");
  const std::size_t m = dimension();
  sigma_.assign(m * m, Complex(0.0));
  for (const auto& p : groupoid().composable_pairs()) sigma_[p.first * m + p.second] = twist_(p.first, p.second).value();
}

void TwistedAlgebra::require(const AlgebraElement& f) const {
  if (!(f.tag == tag_))
    throw Error(ErrorKind::kTagMismatch, "element of " + f.tag.to_string() + " used in " + tag_.to_string());
}

AlgebraElement TwistedAlgebra::zero() const { return {tag_, std::vector<Complex>(dimension(), 0.0)}; }

AlgebraElement TwistedAlgebra::delta(ArrowId a) const {
  if (a >= dimension()) throw Error(ErrorKind::kInvalidInput, "arrow id out of range");
  AlgebraElement f = zero();
  f.coeff[a] = 1.0;
  return f;
}

AlgebraElement TwistedAlgebra::element(std::vector<Complex> coeff) const {
  if (coeff.size() != dimension()) throw Error(ErrorKind::kInvalidInput, "coefficient vector has the wrong length");
  return {tag_, std::move(coeff)};
}

AlgebraElement TwistedAlgebra::convolve(const AlgebraElement& f, const AlgebraElement& g) const {
  require(f);
  require(g);
  const auto& G = groupoid();
  AlgebraElement h = zero();
  // Sum over pairs (η, ζ) with η ζ = γ; equivalent to the r-fiber sum.
  for (ArrowId eta = 0; eta < dimension(); ++eta) {
    if (f.coeff[eta] == 0.0) continue;
    for (ArrowId zeta : G.range_fiber(G.source(eta))) {
      if (g.coeff[zeta] == 0.0) continue;
      h.coeff[*G.compose(eta, zeta)] += f.coeff[eta] * g.coeff[zeta] * sigma(eta, zeta);
    }
  }
  return h;
}

AlgebraElement TwistedAlgebra::involute(const AlgebraElement& f) const {
  require(f);
  const auto& G = groupoid();
  AlgebraElement h = zero();
  for (ArrowId g = 0; g < dimension(); ++g) h.coeff[g] = std::conj(f.coeff[G.inverse(g)]) * std::conj(sigma(g, G.inverse(g)));
  return h;
}

AlgebraElement TwistedAlgebra::identity_element() const {
  if (!twist_.normalized())
    throw Error(ErrorKind::kPrecondition, "identity element requires a normalized cocycle");
  AlgebraElement e = zero();
  for (UnitId u = 0; u < groupoid().unit_count(); ++u) e.coeff[groupoid().unit_arrow(u)] = 1.0;
  return e;
}

std::optional<StructureConstant> TwistedAlgebra::structure_constant(ArrowId a, ArrowId b) const {
  const auto c = groupoid().compose(a, b);
  if (!c) return std::nullopt;
  return StructureConstant{*c, twist_(a, b)};
}

RegularRep TwistedAlgebra::regular_rep(const AlgebraElement& f, UnitId u) const {
  require(f);
  const auto& G = groupoid();
  if (u >= G.unit_count()) throw Error(ErrorKind::kInvalidInput, "unknown unit " + std::to_string(u));
  RegularRep rep{u, {G.source_fiber(u).begin(), G.source_fiber(u).end()}, {}};
  const auto n = static_cast<Eigen::Index>(rep.basis.size());
  rep.matrix = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const ArrowId gamma = rep.basis[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < n; ++j) {
      const ArrowId eta = rep.basis[static_cast<std::size_t>(j)];
      const ArrowId x = *G.compose(gamma, G.inverse(eta));
      if (f.coeff[x] != 0.0) rep.matrix(i, j) = f.coeff[x] * sigma(x, eta);
    }
  }
  return rep;
}

Complex TwistedAlgebra::representation_form(const AlgebraElement& f, UnitId u, const Vector& xi,
                                            const Vector& zeta) const {
  const RegularRep rep = regular_rep(f, u);
  if (xi.size() != rep.matrix.cols() || zeta.size() != rep.matrix.rows())
    throw Error(ErrorKind::kInvalidInput, "vector length does not match the source fiber");
  return zeta.dot(rep.matrix * xi);
}

NormReport TwistedAlgebra::reduced_norm(const AlgebraElement& f) const {
  require(f);
  NormReport report;
  for (UnitId u = 0; u < groupoid().unit_count(); ++u) {
    const double norm = spectral_norm(regular_rep(f, u).matrix);
    report.unit_norms.push_back(norm);
    if (!report.attained_at || norm > report.reduced_norm) {
      report.reduced_norm = norm;
      report.attained_at = u;
    }
  }
  report.rank = representation_rank();
  report.faithful = report.rank == dimension();
  return report;
}

std::size_t TwistedAlgebra::representation_rank() const {
  const auto& G = groupoid();
  Eigen::Index rows = 0;
  for (UnitId u = 0; u < G.unit_count(); ++u) rows += static_cast<Eigen::Index>(G.source_fiber(u).size() * G.source_fiber(u).size());
  Matrix m = Matrix::Zero(rows, static_cast<Eigen::Index>(dimension()));
  for (ArrowId a = 0; a < dimension(); ++a) {
    const AlgebraElement d = delta(a);
    Eigen::Index row = 0;
    for (UnitId u = 0; u < G.unit_count(); ++u) {
      const Matrix pm = regular_rep(d, u).matrix;
      for (Eigen::Index i = 0; i < pm.size(); ++i) m(row + i, a) = pm.data()[i];
      row += pm.size();
    }
  }
  return numeric_rank(m);
}

FullNormCertificate TwistedAlgebra::full_norm_certificate() const {
  FullNormCertificate cert;
  cert.dimension = dimension();
  cert.rank = representation_rank();
  cert.faithful = cert.rank == cert.dimension;
  cert.argument = cert.faithful
                      ? "the direct sum of regular representations is injective on this finite-dimensional *-algebra, "
                        "so it is a C*-algebra with a unique C*-norm and the full norm equals the reduced norm"
                      : "the direct sum of regular representations is not injective: internal inconsistency";
  return cert;
}

std::size_t TwistedAlgebra::center_dimension() const {
  const std::size_t m = dimension();
  if (m == 0) return 0;
  // Rows (a, c): coefficient of δ_c in z*δ_a − δ_a*z; columns z_b.
  Matrix sys = Matrix::Zero(static_cast<Eigen::Index>(m * m), static_cast<Eigen::Index>(m));
  const auto& G = groupoid();
  for (ArrowId a = 0; a < m; ++a)
    for (ArrowId b = 0; b < m; ++b) {
      if (auto ba = G.compose(b, a)) sys(static_cast<Eigen::Index>(a * m + *ba), b) += sigma(b, a);
      if (auto ab = G.compose(a, b)) sys(static_cast<Eigen::Index>(a * m + *ab), b) -= sigma(a, b);
    }
  return m - numeric_rank(sys);
}

bool TwistedAlgebra::is_commutative() const {
  for (ArrowId a = 0; a < dimension(); ++a)
    for (ArrowId b = a + 1; b < dimension(); ++b) {
      const auto x = structure_constant(a, b);
      const auto y = structure_constant(b, a);
      if (x.has_value() != y.has_value()) return false;
      if (x && (x->arrow != y->arrow || !x->phase.equals(y->phase))) return false;
    }
  return true;
}

AlgebraElement transport(const TwistedAlgebra& target, const OneCochain& b, const AlgebraElement& f) {
  if (b.values.size() != f.size() || f.size() != target.dimension())
    throw Error(ErrorKind::kInvalidInput, "cochain and element sizes differ");
  AlgebraElement r = target.zero();
  for (ArrowId a = 0; a < f.size(); ++a) r.coeff[a] = b(a).value() * f.coeff[a];
  return r;
}

}  // namespace grext
