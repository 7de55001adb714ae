#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace grext {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Largest singular value; 0 for an empty matrix.
double spectral_norm(const Matrix& m);

/// Rank with singular values below tol·max(1, σ_max) treated as zero.
std::size_t numeric_rank(const Matrix& m, double tol = 1e-10);

/// Smallest eigenvalue of the Hermitian part of m.
double min_hermitian_eigenvalue(const Matrix& m);

double max_abs_entry(const Matrix& m);

/// Dimension of the span of the given vectors (columns of a matrix).
std::size_t span_dimension(const std::vector<Vector>& vectors, double tol = 1e-10);

}  // namespace grext
