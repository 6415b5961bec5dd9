// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <complex>

namespace swipt {

/// Real symmetric embedding of a Hermitian matrix H = A + iB:
///   embed(H) = [ A  -B ]
///              [ B   A ]
/// embed(H) is symmetric iff H is Hermitian, and PSD iff H is PSD, which is
/// what lets a real-cone solver enforce complex PSD constraints.
Eigen::MatrixXd embed_hermitian(const Eigen::MatrixXcd& h);

/// Inverse of embed_hermitian (averages the two redundant copies, so it is
/// exact on true embeddings and a projection otherwise).
Eigen::MatrixXcd lift_hermitian(const Eigen::MatrixXd& s);

/// Isometric vectorization of a real symmetric n x n matrix: diagonal
/// entries as-is, strict upper triangle scaled by sqrt(2), column-major
/// order; svec(A) . svec(B) = <A, B>_F. Dimension n(n+1)/2.
Eigen::VectorXd svec(const Eigen::MatrixXd& a);
Eigen::MatrixXd smat(const Eigen::VectorXd& v);

inline Eigen::Index svec_dim(Eigen::Index n) { return n * (n + 1) / 2; }

/// Index of entry (i, j), i <= j, inside svec of an n x n matrix.
inline Eigen::Index svec_index(Eigen::Index i, Eigen::Index j, Eigen::Index) {
  // column-major lower-triangle-free layout: column j contributes j+1 slots
  return j * (j + 1) / 2 + i;
}

/// Isometric real parameter vector of a Hermitian n x n matrix:
/// [diag; sqrt(2) Re upper; sqrt(2) Im upper], dimension n^2, with
/// ||hvec(H)|| = ||H||_F. This is the decision-variable representation of
/// the relaxed energy covariance matrices.
Eigen::VectorXd hvec(const Eigen::MatrixXcd& h);
Eigen::MatrixXcd hmat(const Eigen::VectorXd& v);

inline Eigen::Index hvec_dim(Eigen::Index n) { return n * n; }

/// Positions of Hermitian parameters inside hvec for an n x n matrix.
struct HvecLayout {
  Eigen::Index n = 0;
  Eigen::Index diag(Eigen::Index i) const { return i; }
  Eigen::Index re(Eigen::Index i, Eigen::Index j) const {  // i < j
    return n + pair_index(i, j);
  }
  Eigen::Index im(Eigen::Index i, Eigen::Index j) const {  // i < j
    return n + n * (n - 1) / 2 + pair_index(i, j);
  }
  Eigen::Index pair_index(Eigen::Index i, Eigen::Index j) const {
    return j * (j - 1) / 2 + i;
  }
};

}  // namespace swipt
