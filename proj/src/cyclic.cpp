#include "grext/cyclic.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "grext/algebra.hpp"
#include "grext/error.hpp"

namespace grext {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

Complex root_value(std::int64_t k, std::int64_t j) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(mod(j, k)) / static_cast<double>(k));
}

// Exponent j with z = ζ_k^j, if z is a k-th root of unity.
std::optional<std::int64_t> winding_of(const CircleScalar& z, std::int64_t k) {
  if (z.is_exact()) {
    const Angle& a = z.angle();
    if (k % a.den() != 0) return std::nullopt;
    return a.num() * (k / a.den());
  }
  const double scaled = z.turns() * static_cast<double>(k);
  const double j = std::round(scaled);
  if (std::abs(z.value() - root_value(k, static_cast<std::int64_t>(j))) > 1e-10) return std::nullopt;
  return mod(static_cast<std::int64_t>(j), k);
}

Cyclotomic exact_root(std::int64_t k, std::int64_t j) { return Cyclotomic::root(static_cast<int>(k), j); }

void add_to(ExactOracleElement& f, ArrowId x, const Cyclotomic& c) {
  auto [it, fresh] = f.try_emplace(x, c);
  if (!fresh) it->second += c;
}

bool same(const ExactOracleElement& a, const ExactOracleElement& b) {
  std::set<ArrowId> keys;
  for (const auto& [x, c] : a) keys.insert(x);
  for (const auto& [x, c] : b) keys.insert(x);
  for (ArrowId x : keys) {
    auto ia = a.find(x);
    auto ib = b.find(x);
    if (ia == a.end() && ib == b.end()) continue;
    if (ia == a.end()) {
      if (!ib->second.is_zero()) return false;
    } else if (ib == b.end()) {
      if (!ia->second.is_zero()) return false;
    } else if (!(ia->second == ib->second)) {
      return false;
    }
  }
  return true;
}

bool vanishes(const ExactOracleElement& a) { return same(a, {}); }

OracleElement to_float(const CyclicExtension& e, const ExactOracleElement& f) {
  OracleElement v(e.groupoid.arrow_count(), 0.0);
  for (const auto& [x, c] : f) v[x] = c.value();
  return v;
}

}  // namespace

ArrowId CyclicExtension::arrow(std::int64_t j, ArrowId gamma) const {
  return static_cast<ArrowId>(static_cast<std::int64_t>(gamma) * k + mod(j, k));
}

std::vector<ArrowId> CyclicExtension::projection() const {
  std::vector<ArrowId> p(groupoid.arrow_count());
  for (ArrowId x = 0; x < p.size(); ++x) p[x] = base_arrow(x);
  return p;
}

CyclicExtension cyclic_extension(const TwoCocycle& w, std::int64_t k) {
  if (k < 1) throw Error(ErrorKind::kInvalidInput, "k must be positive");
  if (!w.normalized()) throw Error(ErrorKind::kPrecondition, "cyclic extension requires a normalized cocycle");
  const FiniteGroupoid& g = w.base();
  const std::size_t m = g.arrow_count();
  CyclicExtension e{k, w, {}, std::vector<std::int64_t>(m * m, 0)};
  for (const auto& p : g.composable_pairs()) {
    const auto j = winding_of(w(p.first, p.second), k);
    if (!j)
      throw Error(ErrorKind::kPrecondition, "cocycle value at (" + g.arrow_name(p.first) + ", " +
                                                g.arrow_name(p.second) + ") is not a " + std::to_string(k) +
                                                "-th root of unity");
    e.winding[p.first * m + p.second] = *j;
  }

  GroupoidTables t;
  for (UnitId u = 0; u < g.unit_count(); ++u) t.unit_names.push_back(g.unit_name(u));
  const std::size_t n = m * static_cast<std::size_t>(k);
  t.arrow_names.resize(n);
  t.range.resize(n);
  t.source.resize(n);
  t.inverse.resize(n);
  for (ArrowId gamma = 0; gamma < m; ++gamma) {
    const ArrowId inv = g.inverse(gamma);
    for (std::int64_t j = 0; j < k; ++j) {
      const ArrowId x = e.arrow(j, gamma);
      t.arrow_names[x] = "(" + std::to_string(j) + "," + g.arrow_name(gamma) + ")";
      t.range[x] = g.range(gamma);
      t.source[x] = g.source(gamma);
      t.inverse[x] = e.arrow(-j - e.winding[gamma * m + inv], inv);
    }
  }
  for (UnitId u = 0; u < g.unit_count(); ++u) t.unit_arrow.push_back(e.arrow(0, g.unit_arrow(u)));
  for (const auto& p : g.composable_pairs()) {
    const ArrowId c = *g.compose(p.first, p.second);
    for (std::int64_t i = 0; i < k; ++i)
      for (std::int64_t j = 0; j < k; ++j)
        t.compose.emplace_back(e.arrow(i, p.first), e.arrow(j, p.second),
                               e.arrow(i + j + e.winding[p.first * m + p.second], c));
  }
  e.groupoid = FiniteGroupoid(std::move(t));
  return e;
}

OracleElement oracle_convolve(const CyclicExtension& e, const OracleElement& f, const OracleElement& g) {
  const auto& X = e.groupoid;
  OracleElement h(X.arrow_count(), 0.0);
  const double weight = 1.0 / static_cast<double>(e.k);
  for (ArrowId y = 0; y < X.arrow_count(); ++y) {
    if (f[y] == 0.0) continue;
    for (ArrowId z = 0; z < X.arrow_count(); ++z) {
      if (g[z] == 0.0) continue;
      if (auto x = X.compose(y, z)) h[*x] += weight * f[y] * g[z];
    }
  }
  return h;
}

ExactOracleElement oracle_convolve(const CyclicExtension& e, const ExactOracleElement& f, const ExactOracleElement& g) {
  ExactOracleElement h;
  for (const auto& [y, fy] : f)
    for (const auto& [z, gz] : g)
      if (auto x = e.groupoid.compose(y, z)) add_to(h, *x, (fy * gz).scaled(1, e.k));
  return h;
}

OracleElement oracle_involute(const CyclicExtension& e, const OracleElement& f) {
  OracleElement h(f.size());
  for (ArrowId x = 0; x < f.size(); ++x) h[x] = std::conj(f[e.groupoid.inverse(x)]);
  return h;
}

ExactOracleElement oracle_involute(const CyclicExtension& e, const ExactOracleElement& f) {
  ExactOracleElement h;
  for (const auto& [x, c] : f) h.emplace(e.groupoid.inverse(x), c.conj());
  return h;
}

OracleElement oracle_project(const CyclicExtension& e, const OracleElement& f, std::int64_t n) {
  OracleElement h(f.size(), 0.0);
  for (ArrowId gamma = 0; gamma < e.base_arrows(); ++gamma)
    for (std::int64_t t = 0; t < e.k; ++t) {
      Complex acc = 0.0;
      for (std::int64_t s = 0; s < e.k; ++s) acc += f[e.arrow(s + t, gamma)] * root_value(e.k, s * n);
      h[e.arrow(t, gamma)] = acc / static_cast<double>(e.k);
    }
  return h;
}

ExactOracleElement oracle_project(const CyclicExtension& e, const ExactOracleElement& f, std::int64_t n) {
  ExactOracleElement h;
  for (const auto& [x, c] : f) {
    // δ_{(j,γ)} contributes at (t,γ) with s = j − t.
    const ArrowId gamma = e.base_arrow(x);
    const std::int64_t j = e.fiber_index(x);
    for (std::int64_t t = 0; t < e.k; ++t)
      add_to(h, e.arrow(t, gamma), (c * exact_root(e.k, (j - t) * n)).scaled(1, e.k));
  }
  return h;
}

ExactOracleElement oracle_mode_basis(const CyclicExtension& e, std::int64_t n, ArrowId gamma) {
  ExactOracleElement h;
  for (std::int64_t t = 0; t < e.k; ++t) h.emplace(e.arrow(t, gamma), exact_root(e.k, -n * t));
  return h;
}

Matrix oracle_regular_rep(const CyclicExtension& e, const OracleElement& f, UnitId u) {
  const auto& X = e.groupoid;
  const auto fiber = X.source_fiber(u);
  const auto n = static_cast<Eigen::Index>(fiber.size());
  Matrix m = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = f[*X.compose(fiber[static_cast<std::size_t>(i)], X.inverse(fiber[static_cast<std::size_t>(j)]))] /
                static_cast<double>(e.k);
  return m;
}

double oracle_reduced_norm(const CyclicExtension& e, const OracleElement& f) {
  double norm = 0.0;
  for (UnitId u = 0; u < e.groupoid.unit_count(); ++u) norm = std::max(norm, spectral_norm(oracle_regular_rep(e, f, u)));
  return norm;
}

std::size_t oracle_representation_rank(const CyclicExtension& e) {
  const auto& X = e.groupoid;
  Eigen::Index rows = 0;
  for (UnitId u = 0; u < X.unit_count(); ++u) rows += static_cast<Eigen::Index>(X.source_fiber(u).size() * X.source_fiber(u).size());
  Matrix m = Matrix::Zero(rows, static_cast<Eigen::Index>(X.arrow_count()));
  for (ArrowId x = 0; x < X.arrow_count(); ++x) {
    OracleElement d(X.arrow_count(), 0.0);
    d[x] = 1.0;
    Eigen::Index row = 0;
    for (UnitId u = 0; u < X.unit_count(); ++u) {
      const Matrix pm = oracle_regular_rep(e, d, u);
      for (Eigen::Index i = 0; i < pm.size(); ++i) m(row + i, x) = pm.data()[i];
      row += pm.size();
    }
  }
  return numeric_rank(m);
}

OracleElement oracle_lift(const CyclicExtension& e, const LaurentElement& f) {
  std::set<std::int64_t> residues;
  for (const auto& [n, fn] : f.modes)
    if (!residues.insert(mod(n, e.k)).second)
      throw Error(ErrorKind::kPrecondition,
                  "modes of the Laurent element alias modulo k = " + std::to_string(e.k));
  OracleElement h(e.groupoid.arrow_count(), 0.0);
  for (const auto& [n, fn] : f.modes)
    for (ArrowId gamma = 0; gamma < e.base_arrows(); ++gamma)
      for (std::int64_t t = 0; t < e.k; ++t) h[e.arrow(t, gamma)] += root_value(e.k, -n * t) * fn.coeff[gamma];
  return h;
}

bool CyclicDecomposition::passed() const {
  if (!projections_sum_to_identity || !projections_orthogonal || !cross_products_vanish || !faithful) return false;
  std::size_t dims = 0;
  for (const auto& s : summands) {
    if (!s.structure_exact || !s.involution_exact || s.structure_residual > 1e-10) return false;
    if (s.center_dimension != s.graded_center_dimension) return false;
    dims += s.dimension;
  }
  return dims == total_dimension;
}

CyclicDecomposition cyclic_decompose(const CyclicExtension& e) {
  const auto& X = e.groupoid;
  const std::size_t m = e.base_arrows();
  const std::int64_t k = e.k;
  CyclicDecomposition d;
  d.k = k;
  d.total_dimension = X.arrow_count();
  d.faithful = oracle_representation_rank(e) == X.arrow_count();

  auto delta = [&](ArrowId x) { return ExactOracleElement{{x, Cyclotomic::rational(static_cast<int>(k), 1)}}; };

  d.projections_sum_to_identity = true;
  d.projections_orthogonal = true;
  for (ArrowId x = 0; x < X.arrow_count(); ++x) {
    ExactOracleElement sum;
    std::vector<ExactOracleElement> images;
    for (std::int64_t n = 0; n < k; ++n) {
      images.push_back(oracle_project(e, delta(x), n));
      for (const auto& [y, c] : images.back()) add_to(sum, y, c);
    }
    if (!same(sum, delta(x))) d.projections_sum_to_identity = false;
    for (std::int64_t n = 0; n < k && d.projections_orthogonal; ++n)
      for (std::int64_t p = 0; p < k; ++p) {
        const auto twice = oracle_project(e, images[static_cast<std::size_t>(p)], n);
        if (!same(twice, n == p ? images[static_cast<std::size_t>(n)] : ExactOracleElement{})) {
          d.projections_orthogonal = false;
          break;
        }
      }
  }

  std::vector<std::vector<ExactOracleElement>> basis(static_cast<std::size_t>(k));
  for (std::int64_t n = 0; n < k; ++n)
    for (ArrowId a = 0; a < m; ++a) basis[static_cast<std::size_t>(n)].push_back(oracle_mode_basis(e, n, a));

  d.cross_products_vanish = true;
  for (std::int64_t n = 0; n < k && d.cross_products_vanish; ++n)
    for (std::int64_t p = 0; p < k && d.cross_products_vanish; ++p) {
      if (n == p) continue;
      for (ArrowId a = 0; a < m && d.cross_products_vanish; ++a)
        for (ArrowId b = 0; b < m; ++b)
          if (!vanishes(oracle_convolve(e, basis[static_cast<std::size_t>(n)][a], basis[static_cast<std::size_t>(p)][b]))) {
            d.cross_products_vanish = false;
            break;
          }
    }

  for (std::int64_t n = 0; n < k; ++n) {
    const auto& bn = basis[static_cast<std::size_t>(n)];
    const TwistedAlgebra graded(e.cocycle, n);
    CyclicSummand s;
    s.mode = n;

    // Image(p_n) is spanned by p_n(δ_x); its dimension is the rank of p_n.
    Matrix proj(static_cast<Eigen::Index>(X.arrow_count()), static_cast<Eigen::Index>(X.arrow_count()));
    for (ArrowId x = 0; x < X.arrow_count(); ++x) {
      OracleElement dx(X.arrow_count(), 0.0);
      dx[x] = 1.0;
      proj.col(x) = Eigen::Map<const Vector>(oracle_project(e, dx, n).data(), static_cast<Eigen::Index>(X.arrow_count()));
    }
    s.dimension = numeric_rank(proj);

    s.structure_exact = true;
    s.involution_exact = true;
    std::vector<std::vector<OracleElement>> products(m, std::vector<OracleElement>(m));
    for (ArrowId a = 0; a < m; ++a) {
      for (ArrowId b = 0; b < m; ++b) {
        const auto got = oracle_convolve(e, bn[a], bn[b]);
        ExactOracleElement expected;
        if (auto sc = graded.structure_constant(a, b)) {
          const auto j = winding_of(sc->phase, k);
          if (!j) throw Error(ErrorKind::kInternal, "graded structure constant outside μ_k");
          for (const auto& [y, c] : bn[sc->arrow]) expected.emplace(y, c * exact_root(k, *j));
        }
        if (!same(got, expected)) s.structure_exact = false;
        products[a][b] = to_float(e, got);
        // Float route: same product computed in floating point.
        const auto fa = to_float(e, bn[a]);
        const auto fb = to_float(e, bn[b]);
        const auto fp = oracle_convolve(e, fa, fb);
        const auto fe = to_float(e, expected);
        for (ArrowId y = 0; y < fp.size(); ++y) s.structure_residual = std::max(s.structure_residual, std::abs(fp[y] - fe[y]));
      }
      const AlgebraElement star = graded.involute(graded.delta(a));
      ExactOracleElement expected;
      const ArrowId inv = e.cocycle.base().inverse(a);
      const auto j = winding_of(CircleScalar::from_complex(star.coeff[inv]), k);
      if (!j) throw Error(ErrorKind::kInternal, "graded involution outside μ_k");
      for (const auto& [y, c] : bn[inv]) expected.emplace(y, c * exact_root(k, *j));
      if (!same(oracle_involute(e, bn[a]), expected)) s.involution_exact = false;
    }

    // Center of Image(p_n): z = Σ c_b e_b with z e_a = e_a z for every a.
    Matrix sys = Matrix::Zero(static_cast<Eigen::Index>(m * X.arrow_count()), static_cast<Eigen::Index>(m));
    for (ArrowId b = 0; b < m; ++b)
      for (ArrowId a = 0; a < m; ++a)
        for (ArrowId y = 0; y < X.arrow_count(); ++y)
          sys(static_cast<Eigen::Index>(a * X.arrow_count() + y), b) = products[b][a][y] - products[a][b][y];
    s.center_dimension = m - numeric_rank(sys);
    s.graded_center_dimension = graded.center_dimension();
    d.summands.push_back(s);
  }
  return d;
}

}  // namespace grext
