// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <stdexcept>

#include "detail.hpp"

namespace swipt::moop {

namespace {

int steps_for(double step) {
  if (!(step > 0.0 && step <= 1.0)) throw std::invalid_argument("weight step must lie in (0,1]");
  const double n = std::round(1.0 / step);
  if (std::abs(n * step - 1.0) > 1e-9) throw std::invalid_argument("weight step must divide 1");
  return static_cast<int>(n);
}

}  // namespace

std::vector<size_t> pareto_filter(const std::vector<std::vector<double>>& points, const std::vector<Sense>& senses,
                                  double tol) {
  auto better_eq = [&](const std::vector<double>& a, const std::vector<double>& b, size_t i) {
    return senses[i] == Sense::Maximize ? a[i] >= b[i] : a[i] <= b[i];
  };
  auto strictly = [&](const std::vector<double>& a, const std::vector<double>& b, size_t i) {
    return senses[i] == Sense::Maximize ? a[i] > b[i] + tol : a[i] < b[i] - tol;
  };
  std::vector<size_t> keep;
  for (size_t p = 0; p < points.size(); ++p) {
    if (points[p].size() != senses.size()) throw std::invalid_argument("point dimension mismatch");
    bool dominated = false;
    for (size_t q = 0; q < points.size() && !dominated; ++q) {
      if (q == p) continue;
      bool all = true, one = false;
      for (size_t i = 0; i < senses.size(); ++i) {
        all = all && better_eq(points[q], points[p], i);
        one = one || strictly(points[q], points[p], i);
      }
      dominated = all && one;
    }
    if (!dominated) keep.push_back(p);
  }
  return keep;
}

std::vector<WeightVector> sweep_weights(double step) {
  const int n = steps_for(step);
  std::vector<WeightVector> out;
  for (int i = n; i >= 0; --i)
    for (int j = 0; j <= n - i; ++j) {
      const int k = n - i - j;
      out.push_back({static_cast<double>(i) / n, static_cast<double>(j) / n, static_cast<double>(k) / n});
    }
  return out;
}

std::vector<WeightVector> pairwise_weights(double step, int zero_axis) {
  if (zero_axis < 1 || zero_axis > 3) throw std::invalid_argument("zero axis must be 1, 2 or 3");
  const int n = steps_for(step);
  std::vector<WeightVector> out;
  for (int t = 0; t <= n; ++t) {
    const double a = static_cast<double>(t) / n, b = static_cast<double>(n - t) / n;
    switch (zero_axis) {
      case 1: out.push_back({0.0, a, b}); break;
      case 2: out.push_back({a, 0.0, b}); break;
      default: out.push_back({a, b, 0.0}); break;
    }
  }
  return out;
}

RankOne rank_one_extract(const CMat& w) {
  RankOne r;
  r.v = CVec::Zero(w.rows());
  if (w.rows() == 0) return r;
  Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (w + w.adjoint()));
  const Eigen::Index n = w.rows();
  const double l1 = es.eigenvalues()(n - 1);
  if (!(l1 > 0.0) || !(w.trace().real() > 0.0)) return r;
  const double l2 = n > 1 ? std::max(0.0, es.eigenvalues()(n - 2)) : 0.0;
  r.ratio = l2 / l1;
  CVec v = std::sqrt(l1) * es.eigenvectors().col(n - 1);
  const double thresh = 1e-12 * v.norm();
  for (Eigen::Index i = 0; i < n; ++i)
    if (std::abs(v(i)) > thresh) {
      v *= std::conj(v(i)) / std::abs(v(i));
      v(i) = std::abs(v(i));
      break;
    }
  r.v = v;
  return r;
}

KktReport kkt_structure_check(const MoopAllocation& a, const ChannelSet& ch) {
  KktReport r;
  const double wn = a.w_i.norm();
  if (wn == 0.0) return r;
  CMat basis(ch.h.size(), 2);
  basis.col(0) = ch.h;
  basis.col(1) = ch.g;
  Eigen::HouseholderQR<CMat> qr(basis);
  const CMat q = qr.householderQ() * CMat::Identity(ch.h.size(), 2);
  r.span_residual = (a.w_i - q * (q.adjoint() * a.w_i)).norm() / wn;
  r.sin_angle_h = detail::sin_angle(a.w_i, ch.h);
  r.sin_angle_g = detail::sin_angle(a.w_i, ch.g);
  return r;
}

}  // namespace swipt::moop
