#include "grext/extension.hpp"

#include <algorithm>
#include <sstream>

#include "grext/error.hpp"
#include "grext/ext_reference.hpp"

namespace grext {

std::vector<std::int64_t> LaurentElement::support(double tol) const {
  std::vector<std::int64_t> out;
  for (const auto& [n, f] : modes)
    if (!f.is_zero(tol)) out.push_back(n);
  return out;
}

ExtensionModel::ExtensionModel(TwoCocycle omega) : omega_(std::move(omega)) {
  if (!omega_.identity_checked()) throw Error(ErrorKind::kPrecondition, "cocycle identity fails");
  if (!omega_.normalized()) throw Error(ErrorKind::kPrecondition, "extension model requires a normalized cocycle");
}

void ExtensionModel::require(const LaurentElement& a) const {
  if (a.groupoid != groupoid().fingerprint() || a.cocycle != omega_.fingerprint())
    throw Error(ErrorKind::kTagMismatch, "Laurent element belongs to a different extension");
  for (const auto& [n, f] : a.modes)
    if (!(f.tag == AlgebraTag{a.groupoid, a.cocycle, n}))
      throw Error(ErrorKind::kTagMismatch, "mode " + std::to_string(n) + " carries the wrong cocycle power");
}

LaurentElement ExtensionModel::zero() const { return {groupoid().fingerprint(), omega_.fingerprint(), {}}; }

LaurentElement ExtensionModel::from_mode(std::int64_t n, const AlgebraElement& f) const {
  LaurentElement r = zero();
  r.modes.emplace(n, f);
  require(r);
  return r;
}

LaurentElement ExtensionModel::monomial(std::int64_t n, ArrowId a) const { return from_mode(n, mode_algebra(n).delta(a)); }

LaurentElement ExtensionModel::identity() const { return from_mode(0, mode_algebra(0).identity_element()); }

LaurentElement ExtensionModel::add(const LaurentElement& a, const LaurentElement& b) const {
  require(a);
  require(b);
  LaurentElement r = a;
  for (const auto& [n, f] : b.modes) {
    auto it = r.modes.find(n);
    if (it == r.modes.end())
      r.modes.emplace(n, f);
    else
      it->second = it->second + f;
  }
  return r;
}

LaurentElement ExtensionModel::scaled(const LaurentElement& a, Complex c) const {
  require(a);
  LaurentElement r = a;
  for (auto& [n, f] : r.modes) f = f.scaled(c);
  return r;
}

LaurentElement ExtensionModel::product(const LaurentElement& a, const LaurentElement& b) const {
  require(a);
  require(b);
  LaurentElement r = zero();
  for (const auto& [n, f] : a.modes) {
    auto it = b.modes.find(n);
    if (it == b.modes.end()) continue;
    r.modes.emplace(n, mode_algebra(n).convolve(f, it->second));
  }
  return r;
}

LaurentElement ExtensionModel::adjoint(const LaurentElement& a) const {
  require(a);
  LaurentElement r = zero();
  for (const auto& [n, f] : a.modes) r.modes.emplace(n, mode_algebra(n).involute(f));
  return r;
}

LaurentElement ExtensionModel::chi(const LaurentElement& a, std::int64_t n) const {
  require(a);
  LaurentElement r = zero();
  if (auto it = a.modes.find(n); it != a.modes.end()) r.modes.emplace(n, it->second);
  return r;
}

AlgebraElement ExtensionModel::upsilon(const LaurentElement& a, std::int64_t n) const {
  require(a);
  if (auto it = a.modes.find(n); it != a.modes.end()) return it->second;
  return mode_algebra(n).zero();
}

Decomposition ExtensionModel::decompose(const LaurentElement& a) const {
  require(a);
  Decomposition d;
  for (const auto& [n, f] : a.modes) {
    const double norm = mode_algebra(n).reduced_norm(f).reduced_norm;
    d.components.emplace(n, f);
    d.norms.emplace(n, norm);
    d.norm = std::max(d.norm, norm);
  }
  return d;
}

double max_difference(const LaurentElement& a, const LaurentElement& b) {
  if (a.groupoid != b.groupoid || a.cocycle != b.cocycle)
    throw Error(ErrorKind::kTagMismatch, "comparing Laurent elements of different extensions");
  double d = 0.0;
  auto absorb = [&d](const LaurentElement& x, const LaurentElement& y) {
    for (const auto& [n, f] : x.modes) {
      auto it = y.modes.find(n);
      if (it == y.modes.end())
        for (Complex c : f.coeff) d = std::max(d, std::abs(c));
      else
        d = std::max(d, max_difference(f, it->second));
    }
  };
  absorb(a, b);
  absorb(b, a);
  return d;
}

// ---------------------------------------------------------------------------

std::vector<ModeUnitary> mode_unitaries(const FiniteGroupoid& g, UnitId u, ModeWindow window) {
  if (u >= g.unit_count()) throw Error(ErrorKind::kInvalidInput, "unknown unit " + std::to_string(u));
  std::vector<ModeUnitary> out;
  const std::vector<ArrowId> basis(g.source_fiber(u).begin(), g.source_fiber(u).end());
  std::size_t offset = 0;
  for (std::int64_t n = window.first; n <= window.last; ++n) {
    out.push_back({u, n, basis, offset});
    offset += basis.size();
  }
  return out;
}

Matrix mode_gram_matrix(const FiniteGroupoid& g, UnitId u, ModeWindow window) {
  const auto blocks = mode_unitaries(g, u, window);
  const Eigen::Index dim = blocks.empty() ? 0 : static_cast<Eigen::Index>(blocks.size() * blocks.front().basis.size());
  Matrix gram = Matrix::Zero(dim, dim);
  for (const auto& bm : blocks)
    for (const auto& bn : blocks)
      for (std::size_t i = 0; i < bm.basis.size(); ++i)
        for (std::size_t j = 0; j < bn.basis.size(); ++j)
          gram(static_cast<Eigen::Index>(bm.offset + i), static_cast<Eigen::Index>(bn.offset + j)) =
              static_cast<double>(reference::torus_integral(bn.mode - bm.mode) * (bm.basis[i] == bn.basis[j] ? 1 : 0));
  return gram;
}

namespace {

reference::ModeCoefficients coefficients_of(const LaurentElement& f) {
  reference::ModeCoefficients c;
  for (const auto& [n, e] : f.modes) c.emplace(n, e.coeff);
  return c;
}

// R^u(F) on the windowed basis s^{−m}⊗δ_γ, γ ∈ s⁻¹(u), by extension convolution.
Matrix extension_block(const TwoCocycle& w, const reference::ModeCoefficients& f,
                       const std::vector<ModeUnitary>& blocks) {
  const Eigen::Index dim = blocks.empty() ? 0 : static_cast<Eigen::Index>(blocks.size() * blocks.front().basis.size());
  Matrix r = Matrix::Zero(dim, dim);
  const std::size_t arrows = w.base().arrow_count();
  for (const auto& col : blocks)
    for (std::size_t j = 0; j < col.basis.size(); ++j) {
      reference::ModeCoefficients xi;
      xi[col.mode] = std::vector<Complex>(arrows, 0.0);
      xi[col.mode][col.basis[j]] = 1.0;
      const auto image = reference::convolve(w, f, xi);
      for (const auto& row : blocks) {
        auto it = image.find(row.mode);
        if (it == image.end()) continue;
        for (std::size_t i = 0; i < row.basis.size(); ++i)
          r(static_cast<Eigen::Index>(row.offset + i), static_cast<Eigen::Index>(col.offset + j)) =
              it->second[row.basis[i]];
      }
    }
  return r;
}

}  // namespace

IntertwineResult intertwine_check(const ExtensionModel& model, const LaurentElement& f, UnitId u, ModeWindow window) {
  model.require(f);
  std::vector<std::int64_t> truncated;
  for (std::int64_t n : f.support())
    if (!window.contains(n)) truncated.push_back(n);
  if (!truncated.empty()) {
    std::ostringstream os;
    os << "mode window [" << window.first << ", " << window.last << "] truncates modes";
    for (auto n : truncated) os << " " << n;
    throw Error(ErrorKind::kPrecondition, os.str());
  }
  const auto blocks = mode_unitaries(model.groupoid(), u, window);
  IntertwineResult result;
  result.extension_block = extension_block(model.cocycle(), coefficients_of(f), blocks);
  const Eigen::Index dim = result.extension_block.rows();
  result.dimension = static_cast<std::size_t>(dim);

  // V maps block n of ⊕_n ℓ²(s⁻¹(u)) onto s^{−n}⊗ℓ²(s⁻¹(u)); its matrix in
  // the windowed basis is assembled from the block correspondences.
  Matrix v = Matrix::Zero(dim, dim);
  Matrix direct_sum = Matrix::Zero(dim, dim);
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.basis.size(); ++i)
      v(static_cast<Eigen::Index>(b.offset + i), static_cast<Eigen::Index>(b.offset + i)) = 1.0;
    const auto rep = model.mode_algebra(b.mode).regular_rep(model.upsilon(f, b.mode), u);
    direct_sum.block(static_cast<Eigen::Index>(b.offset), static_cast<Eigen::Index>(b.offset), rep.matrix.rows(),
                     rep.matrix.cols()) = rep.matrix;
  }
  result.decomposed_block = v * direct_sum * v.adjoint();
  result.residual = max_abs_entry(result.extension_block - result.decomposed_block);
  return result;
}

ReducedDecomposeCertificate reduced_decompose_check(const ExtensionModel& model,
                                                    const std::vector<LaurentElement>& samples) {
  ReducedDecomposeCertificate cert;
  const auto& g = model.groupoid();
  for (const auto& f : samples) {
    model.require(f);
    ++cert.samples;
    if (f.modes.empty()) continue;
    const ModeWindow window{f.modes.begin()->first, f.modes.rbegin()->first};
    const auto coeffs = coefficients_of(f);
    for (UnitId u = 0; u < g.unit_count(); ++u) {
      const double lhs = spectral_norm(extension_block(model.cocycle(), coeffs, mode_unitaries(g, u, window)));
      double rhs = 0.0;
      for (const auto& [n, fn] : f.modes)
        rhs = std::max(rhs, spectral_norm(model.mode_algebra(n).regular_rep(fn, u).matrix));
      cert.max_deviation = std::max(cert.max_deviation, std::abs(lhs - rhs));
    }
  }
  return cert;
}

}  // namespace grext
