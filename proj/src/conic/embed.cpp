// SPDX-License-Identifier: Apache-2.0
#include <stdexcept>

#include "swipt/conic.hpp"

namespace swipt::conic {

Mat hermitian_embed(const CMat& h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("hermitian_embed: matrix not square");
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw std::invalid_argument("hermitian_embed: matrix not Hermitian");
  const Eigen::Index n = h.rows();
  Mat out(2 * n, 2 * n);
  out.topLeftCorner(n, n) = h.real();
  out.topRightCorner(n, n) = -h.imag();
  out.bottomLeftCorner(n, n) = h.imag();
  out.bottomRightCorner(n, n) = h.real();
  return 0.5 * (out + out.transpose());
}

CMat hermitian_unembed(const Mat& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0) throw std::invalid_argument("hermitian_unembed: bad shape");
  const Eigen::Index n = m.rows() / 2;
  // Average the duplicated parts so symmetric perturbations stay Hermitian.
  Mat re = 0.5 * (m.topLeftCorner(n, n) + m.bottomRightCorner(n, n));
  Mat im = 0.5 * (m.bottomLeftCorner(n, n) - m.topRightCorner(n, n));
  CMat out(n, n);
  out.real() = re;
  out.imag() = im;
  return 0.5 * (out + out.adjoint());
}

Mat embed_coefficient(const CMat& a) { return 0.5 * hermitian_embed(a); }

}  // namespace swipt::conic
