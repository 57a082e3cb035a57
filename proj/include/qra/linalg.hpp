#pragma once

#include "qra/rng.hpp"

#include <Eigen/Dense>

#include <stdexcept>
#include <vector>

namespace qra {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Ascending eigenvalues and orthonormal eigenvectors of a symmetric matrix,
/// with the residual contract ||Av - lv|| <= 1e-9 ||A|| checked on sampled
/// columns.
struct SymEig {
  Vector values;
  Matrix vectors;
};

inline SymEig sym_eig(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a);
  if (solver.info() != Eigen::Success) throw std::runtime_error("sym_eig: solver failed");
  SymEig out{solver.eigenvalues(), solver.eigenvectors()};
  double scale = a.cwiseAbs().maxCoeff() * a.rows();
  if (scale > 0) {
    int n = static_cast<int>(a.rows());
    for (int k : {0, n / 2, n - 1}) {
      double resid = (a * out.vectors.col(k) - out.values[k] * out.vectors.col(k)).norm();
      if (resid > 1e-9 * scale) throw std::runtime_error("sym_eig: residual contract violated");
    }
  }
  return out;
}

/// Descending singular values of a (via the symmetric eigenproblem on the
/// smaller Gram matrix).
inline Vector singular_values(const Matrix& a) {
  bool wide = a.rows() >= a.cols();
  Matrix gram = wide ? Matrix(a.transpose() * a) : Matrix(a * a.transpose());
  SymEig eig = sym_eig(gram);
  int n = static_cast<int>(gram.rows());
  Vector out(n);
  for (int i = 0; i < n; ++i) out[i] = std::sqrt(std::max(0.0, eig.values[n - 1 - i]));
  return out;
}

/// Cluster boundaries of a descending value sequence at relative gap `tol`
/// (gaps measured against the largest magnitude). Returns [start,end) pairs.
inline std::vector<std::pair<int, int>> cluster_descending(const Vector& values, double tol) {
  std::vector<std::pair<int, int>> out;
  int n = static_cast<int>(values.size());
  if (n == 0) return out;
  double scale = std::max(std::abs(values[0]), std::abs(values[n - 1]));
  if (scale == 0) scale = 1;
  int start = 0;
  for (int i = 1; i <= n; ++i) {
    if (i == n || std::abs(values[i - 1] - values[i]) > tol * scale) {
      out.emplace_back(start, i);
      start = i;
    }
  }
  return out;
}

/// Numeric rank with singular values cut at tol * sigma_max, computed from
/// the Gram matrix of the rows.
inline int rank_of_rows(const Matrix& rows, double tol) {
  if (rows.rows() == 0) return 0;
  Matrix gram = rows * rows.transpose();
  SymEig eig = sym_eig(gram);
  double top = eig.values.maxCoeff();
  if (top <= 0) return 0;
  int rank = 0;
  for (int i = 0; i < eig.values.size(); ++i)
    if (eig.values[i] > tol * tol * top) ++rank;
  return rank;
}

/// Orthonormal basis of the nullspace of A (columns), at relative tolerance.
inline Matrix nullspace(const Matrix& a, double tol) {
  Matrix gram = a.transpose() * a;
  SymEig eig = sym_eig(gram);
  double top = eig.values.maxCoeff();
  double cut = (top > 0 ? tol * tol * top : 1.0);
  int dim = 0;
  for (int i = 0; i < eig.values.size(); ++i)
    if (eig.values[i] <= cut) ++dim;
  Matrix out(a.cols(), dim);
  int k = 0;
  for (int i = 0; i < eig.values.size(); ++i)
    if (eig.values[i] <= cut) out.col(k++) = eig.vectors.col(i);
  return out;
}

} // namespace qra
