// SPDX-License-Identifier: Apache-2.0
#include "swipt/embedding.hpp"

#include <cmath>
#include <stdexcept>

namespace swipt {

Eigen::MatrixXd embed_hermitian(const Eigen::MatrixXcd& h) {
  const Eigen::Index n = h.rows();
  if (h.cols() != n) throw std::invalid_argument("embed_hermitian: square input required");
  Eigen::MatrixXd s(2 * n, 2 * n);
  const Eigen::MatrixXd re = h.real();
  const Eigen::MatrixXd im = h.imag();
  s.topLeftCorner(n, n) = re;
  s.bottomRightCorner(n, n) = re;
  s.topRightCorner(n, n) = -im;
  s.bottomLeftCorner(n, n) = im;
  return s;
}

Eigen::MatrixXcd lift_hermitian(const Eigen::MatrixXd& s) {
  const Eigen::Index m = s.rows();
  if (s.cols() != m || m % 2 != 0)
    throw std::invalid_argument("lift_hermitian: even-sized square input required");
  const Eigen::Index n = m / 2;
  const Eigen::MatrixXd re =
      0.5 * (s.topLeftCorner(n, n) + s.bottomRightCorner(n, n));
  const Eigen::MatrixXd im =
      0.5 * (s.bottomLeftCorner(n, n) - s.topRightCorner(n, n));
  return re.cast<std::complex<double>>() +
         std::complex<double>(0, 1) * im.cast<std::complex<double>>();
}

Eigen::VectorXd svec(const Eigen::MatrixXd& a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("svec: square input required");
  Eigen::VectorXd v(svec_dim(n));
  const double s2 = std::sqrt(2.0);
  Eigen::Index idx = 0;
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i <= j; ++i)
      v(idx++) = i == j ? a(i, i) : s2 * 0.5 * (a(i, j) + a(j, i));
  return v;
}

Eigen::MatrixXd smat(const Eigen::VectorXd& v) {
  const Eigen::Index n =
      static_cast<Eigen::Index>((std::sqrt(8.0 * static_cast<double>(v.size()) + 1.0) - 1.0) / 2.0 + 0.5);
  if (svec_dim(n) != v.size())
    throw std::invalid_argument("smat: input is not a triangular-packed length");
  Eigen::MatrixXd a(n, n);
  const double inv_s2 = 1.0 / std::sqrt(2.0);
  Eigen::Index idx = 0;
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i <= j; ++i) {
      const double x = v(idx++);
      if (i == j) {
        a(i, i) = x;
      } else {
        a(i, j) = inv_s2 * x;
        a(j, i) = inv_s2 * x;
      }
    }
  return a;
}

Eigen::VectorXd hvec(const Eigen::MatrixXcd& h) {
  const Eigen::Index n = h.rows();
  if (h.cols() != n) throw std::invalid_argument("hvec: square input required");
  HvecLayout layout{n};
  Eigen::VectorXd v(hvec_dim(n));
  const double s2 = std::sqrt(2.0);
  for (Eigen::Index i = 0; i < n; ++i) v(layout.diag(i)) = h(i, i).real();
  for (Eigen::Index j = 1; j < n; ++j)
    for (Eigen::Index i = 0; i < j; ++i) {
      v(layout.re(i, j)) = s2 * h(i, j).real();
      v(layout.im(i, j)) = s2 * h(i, j).imag();
    }
  return v;
}

Eigen::MatrixXcd hmat(const Eigen::VectorXd& v) {
  const Eigen::Index n =
      static_cast<Eigen::Index>(std::sqrt(static_cast<double>(v.size())) + 0.5);
  if (hvec_dim(n) != v.size())
    throw std::invalid_argument("hmat: input is not a square-packed length");
  HvecLayout layout{n};
  Eigen::MatrixXcd h(n, n);
  const double inv_s2 = 1.0 / std::sqrt(2.0);
  for (Eigen::Index i = 0; i < n; ++i) h(i, i) = v(layout.diag(i));
  for (Eigen::Index j = 1; j < n; ++j)
    for (Eigen::Index i = 0; i < j; ++i) {
      const std::complex<double> x(inv_s2 * v(layout.re(i, j)),
                                   inv_s2 * v(layout.im(i, j)));
      h(i, j) = x;
      h(j, i) = std::conj(x);
    }
  return h;
}

}  // namespace swipt
