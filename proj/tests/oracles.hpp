// SPDX-License-Identifier: Apache-2.0
// Reference computations that do not go through the conic solver.
#pragma once

#include <random>

#include "swipt/conic.hpp"
#include "swipt/sysmodel.hpp"

namespace swipt::oracle {

inline CMat random_hermitian(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> nd;
  CMat m(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) m(i, j) = cdouble(nd(rng), nd(rng));
  return 0.5 * (m + m.adjoint());
}

inline CVec random_cvec(std::mt19937_64& rng, int n, double scale = 1.0) {
  std::normal_distribution<double> nd(0.0, std::sqrt(0.5));
  CVec v(n);
  for (int i = 0; i < n; ++i) v(i) = scale * cdouble(nd(rng), nd(rng));
  return v;
}

// min <C,X> s.t. <A,X> = rhs with A > 0: value rhs * lambda_min(C, A).
struct GevInstance {
  bool complex = false;
  Mat c_real, a_real;
  double rhs = 1.0;
  double value = 0.0;
};

inline GevInstance random_gev(std::mt19937_64& rng, int n, bool complex) {
  std::uniform_real_distribution<double> ud(0.5, 3.0);
  GevInstance g;
  g.complex = complex;
  g.rhs = ud(rng);
  CMat c = random_hermitian(rng, n);
  CMat f = random_hermitian(rng, n);
  CMat a = f * f.adjoint() + CMat::Identity(n, n);
  if (!complex) {
    c = CMat(c.real());
    a = CMat(a.real());
  }
  if (complex) {
    Eigen::GeneralizedSelfAdjointEigenSolver<Mat> es(conic::hermitian_embed(c), conic::hermitian_embed(a));
    g.value = g.rhs * es.eigenvalues()(0);
    g.c_real = conic::embed_coefficient(c);
    g.a_real = conic::embed_coefficient(a);
  } else {
    Eigen::GeneralizedSelfAdjointEigenSolver<Mat> es(c.real(), a.real());
    g.value = g.rhs * es.eigenvalues()(0);
    g.c_real = c.real();
    g.a_real = a.real();
  }
  return g;
}

// min c'x s.t. Ax = b, x >= 0 solved by enumerating bases.
struct LpInstance {
  Mat a;
  Vec b, c;
  double value = 0.0;
};

inline double enumerate_vertices(const Mat& a, const Vec& b, const Vec& c) {
  const int m = static_cast<int>(a.rows()), n = static_cast<int>(a.cols());
  double best = INFINITY;
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  for (;;) {
    Mat ab(m, m);
    Vec cb(m);
    for (int k = 0; k < m; ++k) {
      ab.col(k) = a.col(idx[k]);
      cb(k) = c(idx[k]);
    }
    Eigen::FullPivLU<Mat> lu(ab);
    if (lu.isInvertible()) {
      const Vec xb = lu.solve(b);
      if (xb.minCoeff() >= -1e-12) best = std::min(best, cb.dot(xb));
    }
    int k = m - 1;
    while (k >= 0 && idx[k] == n - m + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
  return best;
}

inline LpInstance random_lp(std::mt19937_64& rng, int m, int n) {
  std::normal_distribution<double> nd;
  std::uniform_real_distribution<double> ud(0.1, 2.0);
  LpInstance lp;
  lp.a = Mat(m, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i) lp.a(i, j) = nd(rng);
  Vec x0(n), c(n);
  for (int j = 0; j < n; ++j) {
    x0(j) = ud(rng);
    c(j) = ud(rng) + 0.3 * nd(rng);
  }
  lp.b = lp.a * x0;
  lp.c = c.cwiseAbs();
  lp.value = enumerate_vertices(lp.a, lp.b, lp.c);
  return lp;
}

// Max over scalar power p of log2(1+p a)/(p/xi + c0): dense grid then golden section.
inline double iree_scalar_power(double a, const SystemParams& p) {
  auto f = [&](double x) { return std::log2(1.0 + x * a) / (x / p.pa_efficiency + p.circuit_power()); };
  const int n = 4000;
  int best = 0;
  double bv = -1.0;
  for (int i = 0; i <= n; ++i) {
    const double x = p.p_max * std::pow(10.0, -9.0 + 9.0 * i / n);
    if (f(x) > bv) {
      bv = f(x);
      best = i;
    }
  }
  double lo = p.p_max * std::pow(10.0, -9.0 + 9.0 * std::max(0, best - 1) / n);
  double hi = p.p_max * std::pow(10.0, -9.0 + 9.0 * std::min(n, best + 1) / n);
  for (int it = 0; it < 200; ++it) {
    const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    if (f(m1) < f(m2))
      lo = m1;
    else
      hi = m2;
  }
  return std::max(bv, f(0.5 * (lo + hi)));
}

}  // namespace swipt::oracle
