#include "grext/linalg.hpp"

#include <algorithm>

namespace grext {

double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

std::size_t numeric_rank(const Matrix& m, double tol) {
  if (m.size() == 0) return 0;
  // BDCSVD handles the tall commutator systems faster than Jacobi.
  Eigen::BDCSVD<Matrix> svd(m);
  const auto& s = svd.singularValues();
  const double cut = tol * std::max(1.0, s(0));
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cut) ++r;
  return r;
}

double min_hermitian_eigenvalue(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  const Matrix h = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

double max_abs_entry(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

std::size_t span_dimension(const std::vector<Vector>& vectors, double tol) {
  if (vectors.empty()) return 0;
  Matrix m(vectors.front().size(), static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = vectors[i];
  return numeric_rank(m, tol);
}

}  // namespace grext
