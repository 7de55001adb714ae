#include "grext/morita.hpp"

#include <algorithm>

#include "grext/error.hpp"
#include "grext/ext_reference.hpp"

namespace grext {

namespace {

void require_principal(const FiniteGroupoid& g) {
  if (!is_principal(g)) {
    const auto w = nontrivial_isotropy_arrow(g);
    throw Error(ErrorKind::kPrecondition,
                "proposition hypotheses not met: groupoid is not principal (loop '" + g.arrow_name(*w) + "')");
  }
}

void require_units(const FiniteGroupoid& g, const BimoduleElement& f) {
  if (f.size() != g.unit_count()) throw Error(ErrorKind::kInvalidInput, "bimodule element needs one value per unit");
}

// Greedy span basis: keeps vectors that raise the rank.
class SpanBasis {
 public:
  explicit SpanBasis(std::size_t dim) : dim_(dim) {}

  bool add(const Vector& v) {
    if (v.cwiseAbs().maxCoeff() <= 1e-12) return false;
    std::vector<Vector> trial = vectors_;
    trial.push_back(v);
    if (span_dimension(trial) <= vectors_.size()) return false;
    vectors_.push_back(v);
    return true;
  }
  const std::vector<Vector>& vectors() const { return vectors_; }
  std::size_t size() const { return vectors_.size(); }
  bool full() const { return vectors_.size() == dim_; }

 private:
  std::size_t dim_;
  std::vector<Vector> vectors_;
};

Vector as_vector(const std::vector<Complex>& c) {
  return Eigen::Map<const Vector>(c.data(), static_cast<Eigen::Index>(c.size()));
}

}  // namespace

FixedPointAlgebra fixed_point_algebra(const FiniteGroupoid& g) {
  require_principal(g);
  return {orbits(g).orbits};
}

AlgebraElement left_inner(const TwistedAlgebra& algebra, const BimoduleElement& f, const BimoduleElement& g) {
  const auto& G = algebra.groupoid();
  if (algebra.power() != 0)
    throw Error(ErrorKind::kPrecondition, "proposition hypotheses not met: inner product lives in the untwisted algebra");
  require_principal(G);
  require_units(G, f);
  require_units(G, g);
  AlgebraElement h = algebra.zero();
  for (ArrowId a = 0; a < G.arrow_count(); ++a) h.coeff[a] = f[G.range(a)] * std::conj(g[G.source(a)]);
  return h;
}

LaurentElement lift_left_inner(const ExtensionModel& model, const BimoduleElement& f, const BimoduleElement& g,
                               std::int64_t reach) {
  const auto& G = model.groupoid();
  require_principal(G);
  require_units(G, f);
  require_units(G, g);
  // r(t,γ) = r(γ) and s(t,γ) = s(γ) on the extension.
  auto value = [&](Complex, ArrowId gamma) { return f[G.range(gamma)] * std::conj(g[G.source(gamma)]); };
  const auto modes = reference::fourier_modes(value, G.arrow_count(), -reach, reach,
                                              static_cast<std::size_t>(2 * reach + 3));
  LaurentElement out = model.zero();
  for (const auto& [n, c] : modes) out.modes.emplace(n, model.mode_algebra(n).element(c));
  return out;
}

bool supported_in_mode_zero(const LaurentElement& f) {
  const auto s = f.support(1e-12);
  return std::all_of(s.begin(), s.end(), [](std::int64_t n) { return n == 0; });
}

FullnessCertificate fullness_check(const FiniteGroupoid& g) {
  require_principal(g);
  const TwistedAlgebra algebra(TwoCocycle::trivial(std::make_shared<FiniteGroupoid>(g)), 0);
  const std::size_t dim = algebra.dimension();
  FullnessCertificate cert;
  cert.algebra_dimension = dim;
  cert.orbit_count = orbits(g).orbit_count();

  SpanBasis span(dim);
  std::vector<AlgebraElement> frontier;
  for (UnitId u = 0; u < g.unit_count(); ++u)
    for (UnitId v = 0; v < g.unit_count(); ++v) {
      BimoduleElement du(g.unit_count(), 0.0), dv(g.unit_count(), 0.0);
      du[u] = 1.0;
      dv[v] = 1.0;
      const auto x = left_inner(algebra, du, dv);
      if (span.add(as_vector(x.coeff))) frontier.push_back(x);
    }
  while (!frontier.empty() && !span.full()) {
    std::vector<AlgebraElement> next;
    for (const auto& x : frontier)
      for (ArrowId a = 0; a < dim; ++a) {
        const auto d = algebra.delta(a);
        for (const auto& y : {algebra.convolve(d, x), algebra.convolve(x, d)})
          if (span.add(as_vector(y.coeff))) next.push_back(y);
      }
    frontier = std::move(next);
  }
  cert.ideal_dimension = span.size();
  return cert;
}

PositivityReport positivity_check(const FiniteGroupoid& g, const BimoduleElement& f) {
  const TwistedAlgebra algebra(TwoCocycle::trivial(std::make_shared<FiniteGroupoid>(g)), 0);
  const auto x = left_inner(algebra, f, f);
  PositivityReport report;
  for (UnitId u = 0; u < g.unit_count(); ++u) {
    const double e = min_hermitian_eigenvalue(algebra.regular_rep(x, u).matrix);
    report.min_eigenvalue = u == 0 ? e : std::min(report.min_eigenvalue, e);
  }
  report.positive = report.min_eigenvalue >= -1e-12;
  return report;
}

NonSaturationReport non_saturation_check(const ExtensionModel& model, std::int64_t reach) {
  const auto& G = model.groupoid();
  require_principal(G);
  const std::size_t arrows = G.arrow_count();
  const std::size_t modes = static_cast<std::size_t>(2 * reach + 1);
  NonSaturationReport report;
  report.reach = reach;

  // Coordinates: mode block (n + reach), then arrow.
  auto flatten = [&](const reference::ModeCoefficients& c) {
    Vector v = Vector::Zero(static_cast<Eigen::Index>(modes * arrows));
    for (const auto& [n, cn] : c) {
      if (n < -reach || n > reach) continue;
      for (ArrowId a = 0; a < arrows; ++a) v(static_cast<Eigen::Index>(static_cast<std::size_t>(n + reach) * arrows + a)) = cn[a];
    }
    return v;
  };
  auto note_off_mode = [&](const reference::ModeCoefficients& c) {
    for (const auto& [n, cn] : c)
      if (n != 0)
        for (Complex z : cn) report.off_mode_mass = std::max(report.off_mode_mass, std::abs(z));
  };

  SpanBasis span(modes * arrows);
  std::vector<reference::ModeCoefficients> frontier;
  const TwistedAlgebra untwisted = model.mode_algebra(0);
  for (UnitId u = 0; u < G.unit_count(); ++u)
    for (UnitId v = 0; v < G.unit_count(); ++v) {
      BimoduleElement du(G.unit_count(), 0.0), dv(G.unit_count(), 0.0);
      du[u] = 1.0;
      dv[v] = 1.0;
      reference::ModeCoefficients x{{0, left_inner(untwisted, du, dv).coeff}};
      if (span.add(flatten(x))) frontier.push_back(std::move(x));
    }
  while (!frontier.empty()) {
    std::vector<reference::ModeCoefficients> next;
    for (const auto& x : frontier)
      for (std::int64_t n = -reach; n <= reach; ++n)
        for (ArrowId a = 0; a < arrows; ++a) {
          reference::ModeCoefficients d{{n, std::vector<Complex>(arrows, 0.0)}};
          d[n][a] = 1.0;
          for (const auto& y : {reference::convolve(model.cocycle(), d, x), reference::convolve(model.cocycle(), x, d)}) {
            note_off_mode(y);
            if (span.add(flatten(y))) next.push_back(y);
          }
        }
    frontier = std::move(next);
  }
  report.ideal_dimension = span.size();
  return report;
}

}  // namespace grext
