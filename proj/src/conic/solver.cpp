// SPDX-License-Identifier: Apache-2.0
// Homogeneous self-dual interior point method with Nesterov-Todd scaling and
// Mehrotra predictor-corrector steps.
#include <algorithm>
#include <cmath>
#include <limits>

#include "swipt/conic.hpp"

namespace swipt::conic {

namespace {

constexpr double kStepFraction = 0.99;

// min <C,X> + c'x  s.t.  A(X) + a x = b,  X psd,  x >= 0.
struct StdForm {
  int m = 0;
  std::vector<int> n;
  int nlp = 0;
  std::vector<std::vector<std::pair<int, Mat>>> a_psd;
  Mat a_lp;
  Vec b;
  std::vector<Mat> c_psd;
  Vec c_lp;
  std::vector<int> pos, neg;  // lp index of each original scalar (neg = -1 unless free)
  Vec row_scale;
  double obj_scale = 1.0;
};

StdForm to_standard(const Problem& p) {
  StdForm sf;
  sf.m = p.num_constraints();
  for (int b = 0; b < p.num_psd(); ++b) sf.n.push_back(p.psd_size(b));
  sf.pos.assign(p.num_scalars(), -1);
  sf.neg.assign(p.num_scalars(), -1);
  int nlp = 0;
  for (int j = 0; j < p.num_scalars(); ++j) {
    sf.pos[j] = nlp++;
    if (p.domain(j) == Domain::Free) sf.neg[j] = nlp++;
  }
  std::vector<int> slack(sf.m, -1);
  for (int i = 0; i < sf.m; ++i)
    if (p.constraints()[i].rel != Relation::Equal) slack[i] = nlp++;
  sf.nlp = nlp;

  sf.a_psd.resize(p.num_psd());
  sf.a_lp = Mat::Zero(sf.m, nlp);
  sf.b = Vec::Zero(sf.m);
  sf.row_scale = Vec::Ones(sf.m);
  for (int i = 0; i < sf.m; ++i) {
    const auto& con = p.constraints()[i];
    double norm2 = 0.0;
    for (const auto& [b, mat] : con.lhs.psd_terms()) norm2 += mat.squaredNorm();
    for (const auto& [j, c] : con.lhs.scalar_terms()) norm2 += (sf.neg[j] >= 0 ? 2.0 : 1.0) * c * c;
    const double d = norm2 > 0.0 ? 1.0 / std::sqrt(norm2) : 1.0;
    sf.row_scale(i) = d;
    for (const auto& [b, mat] : con.lhs.psd_terms()) sf.a_psd[b].emplace_back(i, d * mat);
    for (const auto& [j, c] : con.lhs.scalar_terms()) {
      sf.a_lp(i, sf.pos[j]) += d * c;
      if (sf.neg[j] >= 0) sf.a_lp(i, sf.neg[j]) -= d * c;
    }
    if (con.rel == Relation::GreaterEqual) sf.a_lp(i, slack[i]) = -d;
    if (con.rel == Relation::LessEqual) sf.a_lp(i, slack[i]) = d;
    sf.b(i) = d * con.rhs;
  }

  double cnorm2 = 0.0;
  for (const auto& [b, mat] : p.objective().psd_terms()) cnorm2 += mat.squaredNorm();
  for (const auto& [j, c] : p.objective().scalar_terms()) cnorm2 += c * c;
  sf.obj_scale = cnorm2 > 0.0 ? 1.0 / std::sqrt(cnorm2) : 1.0;
  for (int b = 0; b < p.num_psd(); ++b) sf.c_psd.push_back(Mat::Zero(sf.n[b], sf.n[b]));
  sf.c_lp = Vec::Zero(nlp);
  for (const auto& [b, mat] : p.objective().psd_terms()) sf.c_psd[b] = sf.obj_scale * mat;
  for (const auto& [j, c] : p.objective().scalar_terms()) {
    sf.c_lp(sf.pos[j]) += sf.obj_scale * c;
    if (sf.neg[j] >= 0) sf.c_lp(sf.neg[j]) -= sf.obj_scale * c;
  }
  return sf;
}

struct Cone {
  std::vector<Mat> psd;
  Vec lp;
};

double inner(const Cone& a, const Cone& b) {
  double v = a.lp.dot(b.lp);
  for (size_t k = 0; k < a.psd.size(); ++k) v += a.psd[k].cwiseProduct(b.psd[k]).sum();
  return v;
}

double norm(const Cone& a) { return std::sqrt(inner(a, a)); }

Cone axpy(const Cone& a, double t, const Cone& d) {
  Cone out = a;
  for (size_t k = 0; k < a.psd.size(); ++k) out.psd[k] += t * d.psd[k];
  out.lp += t * d.lp;
  return out;
}

Vec apply_a(const StdForm& sf, const Cone& x) {
  Vec out = sf.a_lp * x.lp;
  for (size_t b = 0; b < sf.a_psd.size(); ++b)
    for (const auto& [i, a] : sf.a_psd[b]) out(i) += a.cwiseProduct(x.psd[b]).sum();
  return out;
}

Cone apply_at(const StdForm& sf, const Vec& y) {
  Cone out;
  for (size_t b = 0; b < sf.a_psd.size(); ++b) {
    Mat s = Mat::Zero(sf.n[b], sf.n[b]);
    for (const auto& [i, a] : sf.a_psd[b]) s += y(i) * a;
    out.psd.push_back(std::move(s));
  }
  out.lp = sf.a_lp.transpose() * y;
  return out;
}

struct Scaling {
  std::vector<Mat> r, w;
  std::vector<Vec> lam;
  Vec lp_w, lp_lam;
};

bool nt_scaling(const Cone& x, const Cone& s, Scaling& sc) {
  sc.r.clear();
  sc.w.clear();
  sc.lam.clear();
  for (size_t b = 0; b < x.psd.size(); ++b) {
    Eigen::LLT<Mat> lx(x.psd[b]), ls(s.psd[b]);
    if (lx.info() != Eigen::Success || ls.info() != Eigen::Success) return false;
    Mat lxm = lx.matrixL();
    Mat lsm = ls.matrixL();
    Eigen::JacobiSVD<Mat> svd(lsm.transpose() * lxm, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Vec lam = svd.singularValues();
    if (!(lam.minCoeff() > 0.0)) return false;
    Mat r = lxm * svd.matrixV() * lam.cwiseSqrt().cwiseInverse().asDiagonal();
    sc.w.push_back(r * r.transpose());
    sc.r.push_back(std::move(r));
    sc.lam.push_back(std::move(lam));
  }
  if ((x.lp.array() <= 0.0).any() || (s.lp.array() <= 0.0).any()) return false;
  sc.lp_w = (x.lp.array() / s.lp.array()).sqrt();
  sc.lp_lam = (x.lp.array() * s.lp.array()).sqrt();
  return true;
}

// Largest step keeping I + t * Lam^{-1/2} dz Lam^{-1/2} psd.
double max_step_scaled(const Vec& lam, const Mat& dz) {
  Vec is = lam.cwiseSqrt().cwiseInverse();
  Mat z = is.asDiagonal() * dz * is.asDiagonal();
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (z + z.transpose()), Eigen::EigenvaluesOnly);
  const double e = es.eigenvalues()(0);
  return e < 0.0 ? -1.0 / e : std::numeric_limits<double>::infinity();
}

struct Direction {
  Cone dx, ds;
  Cone dxs, dss;  // scaled
  Vec dy;
  double dtau = 0.0, dkappa = 0.0;
  bool inaccurate = false;  // linear solve error comparable to the residual it targets
};

class Hsd {
 public:
  Hsd(const StdForm& sf, const Options& opts) : sf_(sf), opts_(opts) {}

  Solution run(const Problem& problem);

 private:
  bool factor();
  Direction solve_newton(const Vec& r1, const Cone& r2, double r3, const std::vector<Mat>& rc, const Vec& rc_lp,
                         double r4);
  Direction refined_newton(double eta, const std::vector<Mat>& rc, const Vec& rc_lp, double r4);
  double step_length(const Direction& d) const;
  Solution finish(const Problem& problem, Status status, int iters) const;
  // Breakdown exit: falls back to the best iterate when it meets the reduced tolerance.
  Solution stalled(const Problem& problem, int iters);

  const StdForm& sf_;
  Options opts_;
  Cone x_, s_;
  Vec y_;
  double tau_ = 1.0, kappa_ = 1.0;
  Scaling sc_;
  Cone best_x_, best_s_;
  Vec best_y_;
  double best_tau_ = 1.0, best_kappa_ = 1.0;
  double best_err_ = std::numeric_limits<double>::infinity();
  Eigen::ColPivHouseholderQR<Mat> qr_;
  Vec u_;  // A(WCW)
  double cw_ = 0.0;
  double denom_base_ = 0.0;
  Vec rp_;
  Cone rd_;
  double rg_ = 0.0;
};

bool Hsd::factor() {
  // M = G'G with column i of G holding R'A_iR per block and the scaled LP row; a QR
  // of G gives the Cholesky factor of M without forming it.
  const int m = sf_.m;
  int k = sf_.nlp;
  for (int n : sf_.n) k += n * n;
  Mat g = Mat::Zero(k, m);
  Cone wcw;
  int off = 0;
  for (size_t b = 0; b < sf_.n.size(); ++b) {
    const int n = sf_.n[b];
    const Mat& r = sc_.r[b];
    for (const auto& [i, a] : sf_.a_psd[b]) {
      const Mat t = r.transpose() * a * r;
      g.col(i).segment(off, n * n) += Eigen::Map<const Vec>(t.data(), n * n);
    }
    off += n * n;
    wcw.psd.push_back(sc_.w[b] * sf_.c_psd[b] * sc_.w[b]);
  }
  g.bottomRows(sf_.nlp) = sc_.lp_w.asDiagonal() * sf_.a_lp.transpose();
  const Vec w2 = sc_.lp_w.cwiseAbs2();
  wcw.lp = w2.cwiseProduct(sf_.c_lp);
  u_ = apply_a(sf_, wcw);
  const Cone c{sf_.c_psd, sf_.c_lp};
  cw_ = inner(c, wcw);
  qr_.compute(g);
  // (u-b)'M^{-1}(u+b) - c'WcW expands to -|(I-QQ')c_hat|^2 - |R^{-T}P'b|^2, which
  // avoids the cancellation in the direct form.
  Vec chat(k);
  off = 0;
  for (size_t b = 0; b < sf_.n.size(); ++b) {
    const int n = sf_.n[b];
    const Mat t = sc_.r[b].transpose() * sf_.c_psd[b] * sc_.r[b];
    chat.segment(off, n * n) = Eigen::Map<const Vec>(t.data(), n * n);
    off += n * n;
  }
  chat.tail(sf_.nlp) = sc_.lp_w.cwiseProduct(sf_.c_lp);
  Vec qc = qr_.householderQ().adjoint() * chat;
  Vec pb = qr_.colsPermutation().transpose() * sf_.b;
  qr_.matrixR().topLeftCorner(m, m).template triangularView<Eigen::Upper>().transpose().solveInPlace(pb);
  denom_base_ = -(qc.tail(k - m).squaredNorm() + pb.squaredNorm());
  const Vec diag = qr_.matrixR().diagonal().head(m).cwiseAbs();
  return m == 0 || (diag.allFinite() && diag.minCoeff() > 1e-15 * diag.maxCoeff());
}

Direction Hsd::solve_newton(const Vec& r1, const Cone& r2, double r3, const std::vector<Mat>& rc, const Vec& rc_lp,
                            double r4) {
  auto msolve = [&](const Vec& v) -> Vec {
    const int m = sf_.m;
    const auto r = qr_.matrixR().topLeftCorner(m, m).template triangularView<Eigen::Upper>();
    Vec z = qr_.colsPermutation().transpose() * v;
    r.transpose().solveInPlace(z);
    r.solveInPlace(z);
    return qr_.colsPermutation() * z;
  };

  // P = R D R' - W r2 W, with D solving Lam o D = rc.
  Cone pdir;
  std::vector<Mat> dmat;
  for (size_t b = 0; b < sf_.n.size(); ++b) {
    const Vec& lam = sc_.lam[b];
    const int n = sf_.n[b];
    Mat d(n, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) d(i, j) = 2.0 * rc[b](i, j) / (lam(i) + lam(j));
    const Mat& r = sc_.r[b];
    const Mat& w = sc_.w[b];
    pdir.psd.push_back(r * d * r.transpose() - w * r2.psd[b] * w);
    dmat.push_back(std::move(d));
  }
  const Vec dlp = rc_lp.cwiseQuotient(sc_.lp_lam);
  pdir.lp = sc_.lp_w.cwiseProduct(dlp) - sc_.lp_w.cwiseAbs2().cwiseProduct(r2.lp);

  const Cone c{sf_.c_psd, sf_.c_lp};
  const Vec q1 = r1 - apply_a(sf_, pdir);
  const double q3 = r3 - r4 / tau_ - inner(c, pdir);
  const Vec y1 = msolve(q1);
  const Vec y2 = msolve(u_ + sf_.b);
  const Vec umb = u_ - sf_.b;
  const double denom = denom_base_ - kappa_ / tau_;

  Direction dir;
  dir.dtau = (q3 - umb.dot(y1)) / denom;
  dir.dy = y1 + y2 * dir.dtau;
  dir.dkappa = (r4 - kappa_ * dir.dtau) / tau_;

  Cone aty = apply_at(sf_, dir.dy);
  for (size_t b = 0; b < sf_.n.size(); ++b) {
    Mat ds = r2.psd[b] - aty.psd[b] + c.psd[b] * dir.dtau;
    ds = 0.5 * (ds + ds.transpose());
    const Mat& r = sc_.r[b];
    Mat dss = r.transpose() * ds * r;
    Mat dxs = dmat[b] - dss;
    dir.dx.psd.push_back(r * dxs * r.transpose());
    dir.ds.psd.push_back(std::move(ds));
    dir.dss.psd.push_back(std::move(dss));
    dir.dxs.psd.push_back(std::move(dxs));
  }
  Vec ds = r2.lp - aty.lp + c.lp * dir.dtau;
  const Vec rlp = sc_.lp_w.cwiseSqrt();
  dir.dss.lp = ds.cwiseProduct(rlp.cwiseAbs2());
  dir.dxs.lp = dlp - dir.dss.lp;
  dir.dx.lp = dir.dxs.lp.cwiseProduct(rlp.cwiseAbs2());
  dir.ds.lp = std::move(ds);
  return dir;
}

// Up to three passes of iterative refinement on the equations the elimination does not
// satisfy by construction; each pass is kept only when it halves their residual.
Direction Hsd::refined_newton(double eta, const std::vector<Mat>& rc, const Vec& rc_lp, double r4) {
  const Vec r1 = eta * rp_;
  Cone r2 = rd_;
  for (auto& m : r2.psd) m *= eta;
  r2.lp *= eta;
  const double r3 = eta * rg_;
  const Cone c{sf_.c_psd, sf_.c_lp};
  auto residual = [&](const Direction& t, Vec& e1, double& e3) {
    e1 = r1 - (apply_a(sf_, t.dx) - sf_.b * t.dtau);
    e3 = r3 - (inner(c, t.dx) - sf_.b.dot(t.dy) + t.dkappa);
    return std::sqrt(e1.squaredNorm() + e3 * e3);
  };
  Direction d = solve_newton(r1, r2, r3, rc, rc_lp, r4);
  Vec e1;
  double e3 = 0.0;
  const double err = residual(d, e1, e3);
  if (!(err > 0.0)) return d;

  std::vector<Mat> zero_rc;
  for (int n : sf_.n) zero_rc.push_back(Mat::Zero(n, n));
  double best = err;
  for (int pass = 0; pass < 3; ++pass) {
    const Cone e2 = axpy(axpy(axpy(r2, -1.0, apply_at(sf_, d.dy)), -1.0, d.ds), d.dtau, c);
    const Direction corr = solve_newton(e1, e2, e3, zero_rc, Vec::Zero(sf_.nlp), 0.0);
    Direction t = d;
    t.dx = axpy(t.dx, 1.0, corr.dx);
    t.ds = axpy(t.ds, 1.0, corr.ds);
    t.dxs = axpy(t.dxs, 1.0, corr.dxs);
    t.dss = axpy(t.dss, 1.0, corr.dss);
    t.dy += corr.dy;
    t.dtau += corr.dtau;
    t.dkappa += corr.dkappa;
    Vec f1;
    double f3 = 0.0;
    const double e = residual(t, f1, f3);
    if (!(e < 0.5 * best)) break;
    best = e;
    d = std::move(t);
    e1 = std::move(f1);
    e3 = f3;
  }
  d.inaccurate = best > 0.5 * std::sqrt(r1.squaredNorm() + r3 * r3);
  return d;
}

double Hsd::step_length(const Direction& d) const {
  double a = std::numeric_limits<double>::infinity();
  for (size_t b = 0; b < sf_.n.size(); ++b) {
    a = std::min(a, max_step_scaled(sc_.lam[b], d.dxs.psd[b]));
    a = std::min(a, max_step_scaled(sc_.lam[b], d.dss.psd[b]));
  }
  for (int k = 0; k < sf_.nlp; ++k) {
    if (d.dx.lp(k) < 0.0) a = std::min(a, -x_.lp(k) / d.dx.lp(k));
    if (d.ds.lp(k) < 0.0) a = std::min(a, -s_.lp(k) / d.ds.lp(k));
  }
  if (d.dtau < 0.0) a = std::min(a, -tau_ / d.dtau);
  if (d.dkappa < 0.0) a = std::min(a, -kappa_ / d.dkappa);
  return a;
}

Solution Hsd::run(const Problem& problem) {
  for (int n : sf_.n) {
    x_.psd.push_back(Mat::Identity(n, n));
    s_.psd.push_back(Mat::Identity(n, n));
  }
  x_.lp = Vec::Ones(sf_.nlp);
  s_.lp = Vec::Ones(sf_.nlp);
  y_ = Vec::Zero(sf_.m);
  tau_ = kappa_ = 1.0;
  int nu = sf_.nlp;
  for (int n : sf_.n) nu += n;

  const Cone c{sf_.c_psd, sf_.c_lp};
  const double bnorm = sf_.b.norm();
  const double cnorm = norm(c);

  for (int iter = 0; iter <= opts_.max_iters; ++iter) {
    const Vec ax_v = apply_a(sf_, x_);
    const Cone aty = apply_at(sf_, y_);
    rp_ = sf_.b * tau_ - ax_v;
    rd_ = c;
    for (size_t b = 0; b < sf_.n.size(); ++b) rd_.psd[b] = c.psd[b] * tau_ - aty.psd[b] - s_.psd[b];
    rd_.lp = c.lp * tau_ - aty.lp - s_.lp;
    const double cx = inner(c, x_);
    const double by = sf_.b.dot(y_);
    rg_ = by - cx - kappa_;
    const double mu = (inner(x_, s_) + tau_ * kappa_) / (nu + 1);

    const double pres = rp_.norm() / tau_ / (1.0 + bnorm);
    const double dres = norm(rd_) / tau_ / (1.0 + cnorm);
    const double pobj = cx / tau_, dobj = by / tau_;
    const double gap = std::abs(pobj - dobj) / (1.0 + std::abs(pobj));
    if (pres <= opts_.feas_tol && dres <= opts_.feas_tol && gap <= opts_.gap_tol)
      return finish(problem, Status::Optimal, iter);
    if (tau_ > kappa_ && std::max({pres, dres, gap}) < best_err_) {
      best_err_ = std::max({pres, dres, gap});
      best_x_ = x_;
      best_s_ = s_;
      best_y_ = y_;
      best_tau_ = tau_;
      best_kappa_ = kappa_;
    }
    if (tau_ < kappa_) {
      if (by > 0.0) {
        if (norm(axpy(aty, 1.0, s_)) / by <= opts_.feas_tol) return finish(problem, Status::Infeasible, iter);
      }
      if (cx < 0.0 && ax_v.norm() / -cx <= opts_.feas_tol) return finish(problem, Status::Unbounded, iter);
    }
    if (iter == opts_.max_iters) break;

    if (!nt_scaling(x_, s_, sc_) || !factor()) return stalled(problem, iter);

    std::vector<Mat> rc;
    for (size_t b = 0; b < sf_.n.size(); ++b) rc.push_back(-Mat(sc_.lam[b].cwiseAbs2().asDiagonal()));
    Vec rc_lp = -sc_.lp_lam.cwiseAbs2();
    Direction aff = refined_newton(1.0, rc, rc_lp, -tau_ * kappa_);
    if (aff.inaccurate) return stalled(problem, iter);
    const double a_aff = std::min(1.0, step_length(aff));
    const double sigma = std::pow(1.0 - a_aff, 3);

    for (size_t b = 0; b < sf_.n.size(); ++b) {
      Mat corr = aff.dxs.psd[b] * aff.dss.psd[b];
      rc[b] += sigma * mu * Mat::Identity(sf_.n[b], sf_.n[b]) - 0.5 * (corr + corr.transpose());
    }
    rc_lp += Vec::Constant(sf_.nlp, sigma * mu) - aff.dxs.lp.cwiseProduct(aff.dss.lp);
    Direction dir = refined_newton(1.0 - sigma, rc, rc_lp, sigma * mu - tau_ * kappa_ - aff.dtau * aff.dkappa);
    const double alpha = std::min(1.0, kStepFraction * step_length(dir));
    if (dir.inaccurate || !std::isfinite(alpha) || !std::isfinite(dir.dtau) || !dir.dy.allFinite())
      return stalled(problem, iter);

    x_ = axpy(x_, alpha, dir.dx);
    s_ = axpy(s_, alpha, dir.ds);
    for (auto& m : x_.psd) m = 0.5 * (m + m.transpose()).eval();
    for (auto& m : s_.psd) m = 0.5 * (m + m.transpose()).eval();
    y_ += alpha * dir.dy;
    tau_ += alpha * dir.dtau;
    kappa_ += alpha * dir.dkappa;
    if (alpha < 1e-10) return stalled(problem, iter + 1);
  }
  return stalled(problem, opts_.max_iters);
}

Solution Hsd::stalled(const Problem& problem, int iters) {
  if (!(best_err_ <= opts_.reduced_tol)) return finish(problem, Status::NumericalLimit, iters);
  x_ = best_x_;
  s_ = best_s_;
  y_ = best_y_;
  tau_ = best_tau_;
  kappa_ = best_kappa_;
  return finish(problem, Status::Optimal, iters);
}

Solution Hsd::finish(const Problem& problem, Status status, int iters) const {
  Solution sol;
  sol.status = status;
  sol.iterations = iters;
  double xs = 1.0, ys = 1.0;
  if (status == Status::Infeasible) {
    xs = 0.0;
    ys = 1.0 / sf_.b.dot(y_);
  } else if (status == Status::Unbounded) {
    Cone c{sf_.c_psd, sf_.c_lp};
    xs = -1.0 / (inner(c, x_) / sf_.obj_scale);
    ys = 0.0;
  } else {
    xs = ys = 1.0 / tau_;
  }
  for (size_t b = 0; b < sf_.n.size(); ++b) sol.primal.psd.push_back(x_.psd[b] * xs);
  sol.primal.scalars = Vec::Zero(problem.num_scalars());
  for (int j = 0; j < problem.num_scalars(); ++j) {
    double v = x_.lp(sf_.pos[j]);
    if (sf_.neg[j] >= 0) v -= x_.lp(sf_.neg[j]);
    sol.primal.scalars(j) = v * xs;
  }
  sol.duals = Vec::Zero(sf_.m);
  for (int i = 0; i < sf_.m; ++i) sol.duals(i) = y_(i) * ys * sf_.row_scale(i);
  if (status != Status::Infeasible) sol.duals /= sf_.obj_scale;
  if (status == Status::Infeasible) {
    double by = 0.0;
    for (int i = 0; i < sf_.m; ++i) by += sol.duals(i) * problem.constraints()[i].rhs;
    if (by > 0.0) sol.duals /= by;
  }

  sol.primal_objective = evaluate(problem.objective(), sol.primal);
  double dobj = 0.0;
  for (int i = 0; i < sf_.m; ++i) dobj += sol.duals(i) * problem.constraints()[i].rhs;
  sol.dual_objective = dobj;
  sol.gap = std::abs(sol.primal_objective - dobj) / (1.0 + std::abs(sol.primal_objective));
  if (status == Status::Optimal || status == Status::NumericalLimit) {
    const KktResiduals k = kkt_residuals(problem, sol);
    sol.primal_residual = k.primal_res;
    sol.dual_residual = k.dual_res;
  }
  return sol;
}

}  // namespace

Solution solve(const Problem& problem, const Options& opts) {
  problem.validate();
  const StdForm sf = to_standard(problem);
  Hsd hsd(sf, opts);
  return hsd.run(problem);
}

}  // namespace swipt::conic
