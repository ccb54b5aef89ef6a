// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "swipt/conic.hpp"

namespace swipt::conic {

const char* to_string(Status s) {
  switch (s) {
    case Status::Optimal: return "optimal";
    case Status::Infeasible: return "infeasible";
    case Status::Unbounded: return "unbounded";
    case Status::NumericalLimit: return "numerical-limit";
  }
  return "unknown";
}

Functional& Functional::psd(int block, const Mat& coeff) {
  if (coeff.rows() != coeff.cols()) throw std::invalid_argument("psd coefficient must be square");
  Mat sym = 0.5 * (coeff + coeff.transpose());
  auto it = psd_.find(block);
  if (it == psd_.end()) {
    psd_.emplace(block, std::move(sym));
  } else {
    if (it->second.rows() != sym.rows()) throw std::invalid_argument("psd coefficient size mismatch");
    it->second += sym;
  }
  return *this;
}

Functional& Functional::psd_entry(int block, int i, int j, double v) {
  entries_.push_back({block, i, j, v});
  return *this;
}

Functional& Functional::scalar(int var, double c) {
  scalar_[var] += c;
  return *this;
}

int Problem::add_psd(int n) {
  if (n < 1) throw std::invalid_argument("psd block size must be >= 1");
  psd_sizes_.push_back(n);
  return num_psd() - 1;
}

int Problem::add_scalar(Domain d) {
  domains_.push_back(d);
  return num_scalars() - 1;
}

void Problem::normalize(Functional& f) const {
  for (const auto& e : f.entries_) {
    if (e.block < 0 || e.block >= num_psd()) throw std::out_of_range("functional references unknown psd block");
    const int n = psd_sizes_[e.block];
    if (e.i < 0 || e.j < 0 || e.i >= n || e.j >= n) throw std::out_of_range("psd entry outside block");
    Mat c = Mat::Zero(n, n);
    if (e.i == e.j) {
      c(e.i, e.i) = e.v;
    } else {
      c(e.i, e.j) = 0.5 * e.v;
      c(e.j, e.i) = 0.5 * e.v;
    }
    f.psd(e.block, c);
  }
  f.entries_.clear();
  for (const auto& [b, m] : f.psd_) {
    if (b < 0 || b >= num_psd()) throw std::out_of_range("functional references unknown psd block");
    if (m.rows() != psd_sizes_[b]) throw std::invalid_argument("psd coefficient size mismatch");
  }
  for (const auto& [j, c] : f.scalar_) {
    (void)c;
    if (j < 0 || j >= num_scalars()) throw std::out_of_range("functional references unknown scalar");
  }
}

void Problem::minimize(Functional f) {
  normalize(f);
  objective_ = std::move(f);
}

int Problem::constrain(Functional f, Relation rel, double rhs) {
  if (!std::isfinite(rhs)) throw std::invalid_argument("constraint rhs must be finite");
  normalize(f);
  constraints_.push_back({std::move(f), rel, rhs});
  return num_constraints() - 1;
}

void Problem::validate() const {
  auto check = [&](const Functional& f) {
    for (const auto& [b, m] : f.psd_terms()) {
      if (b < 0 || b >= num_psd() || m.rows() != psd_sizes_[b]) throw std::invalid_argument("bad psd footprint");
      if (!m.allFinite()) throw std::invalid_argument("non-finite coefficient");
    }
    for (const auto& [j, c] : f.scalar_terms())
      if (j < 0 || j >= num_scalars() || !std::isfinite(c)) throw std::invalid_argument("bad scalar footprint");
  };
  check(objective_);
  for (const auto& c : constraints_) check(c.lhs);
}

double evaluate(const Functional& f, const Point& p) {
  double v = 0.0;
  for (const auto& [b, m] : f.psd_terms()) v += m.cwiseProduct(p.psd.at(b)).sum();
  for (const auto& [j, c] : f.scalar_terms()) v += c * p.scalars(j);
  return v;
}

namespace {

double min_eigenvalue(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

// Dual slack C - sum y_i A_i (or -sum y_i A_i without the objective).
Point dual_slack(const Problem& problem, const Vec& y, bool with_objective) {
  Point s;
  for (int b = 0; b < problem.num_psd(); ++b) s.psd.push_back(Mat::Zero(problem.psd_size(b), problem.psd_size(b)));
  s.scalars = Vec::Zero(problem.num_scalars());
  auto add = [&](const Functional& f, double w) {
    for (const auto& [b, m] : f.psd_terms()) s.psd[b] += w * m;
    for (const auto& [j, c] : f.scalar_terms()) s.scalars(j) += w * c;
  };
  if (with_objective) add(problem.objective(), 1.0);
  for (int i = 0; i < problem.num_constraints(); ++i) add(problem.constraints()[i].lhs, -y(i));
  return s;
}

double dual_cone_violation(const Problem& problem, const Point& s) {
  double v = 0.0;
  for (const auto& m : s.psd) v = std::max(v, -min_eigenvalue(m));
  for (int j = 0; j < problem.num_scalars(); ++j)
    v = std::max(v, problem.domain(j) == Domain::Free ? std::abs(s.scalars(j)) : -s.scalars(j));
  return v;
}

double dual_sign_violation(const Problem& problem, const Vec& y) {
  double v = 0.0;
  for (int i = 0; i < problem.num_constraints(); ++i) {
    const auto rel = problem.constraints()[i].rel;
    if (rel == Relation::GreaterEqual) v = std::max(v, -y(i));
    if (rel == Relation::LessEqual) v = std::max(v, y(i));
  }
  return v;
}

double primal_cone_violation(const Problem& problem, const Point& x) {
  double v = 0.0;
  for (const auto& m : x.psd) v = std::max(v, -min_eigenvalue(m));
  for (int j = 0; j < problem.num_scalars(); ++j)
    if (problem.domain(j) == Domain::Nonneg) v = std::max(v, -x.scalars(j));
  return v;
}

}  // namespace

KktResiduals kkt_residuals(const Problem& problem, const Solution& solution) {
  KktResiduals r;
  const Point& x = solution.primal;
  double pres = 0.0;
  for (const auto& c : problem.constraints()) {
    const double v = evaluate(c.lhs, x) - c.rhs;
    const double viol = c.rel == Relation::Equal ? std::abs(v) : c.rel == Relation::GreaterEqual ? -v : v;
    pres = std::max(pres, viol);
  }
  r.min_eig = 0.0;
  bool first = true;
  for (const auto& m : x.psd) {
    const double e = min_eigenvalue(m);
    r.min_eig = first ? e : std::min(r.min_eig, e);
    first = false;
  }
  r.primal_res = std::max(pres, primal_cone_violation(problem, x));
  const Point s = dual_slack(problem, solution.duals, true);
  r.dual_res = std::max(dual_cone_violation(problem, s), dual_sign_violation(problem, solution.duals));
  const double pobj = evaluate(problem.objective(), x);
  double dobj = 0.0;
  for (int i = 0; i < problem.num_constraints(); ++i) dobj += solution.duals(i) * problem.constraints()[i].rhs;
  r.gap = pobj - dobj;
  r.rel_gap = std::abs(r.gap) / (1.0 + std::abs(pobj));
  return r;
}

double infeasibility_certificate_error(const Problem& problem, const Vec& y) {
  double by = 0.0;
  for (int i = 0; i < problem.num_constraints(); ++i) by += y(i) * problem.constraints()[i].rhs;
  if (!(by > 0.0)) return INFINITY;
  const Point s = dual_slack(problem, y, false);
  return std::max(dual_cone_violation(problem, s), dual_sign_violation(problem, y)) / by;
}

double unboundedness_certificate_error(const Problem& problem, const Point& ray) {
  const double cx = evaluate(problem.objective(), ray);
  if (!(cx < 0.0)) return INFINITY;
  double v = primal_cone_violation(problem, ray);
  for (const auto& c : problem.constraints()) {
    const double a = evaluate(c.lhs, ray);
    const double viol = c.rel == Relation::Equal ? std::abs(a) : c.rel == Relation::GreaterEqual ? -a : a;
    v = std::max(v, viol);
  }
  return v / -cx;
}

void dump_triplets(const Problem& problem, std::ostream& os) {
  os.precision(17);
  os << "# blocks";
  for (int b = 0; b < problem.num_psd(); ++b) os << ' ' << problem.psd_size(b);
  os << "\n# scalars " << problem.num_scalars() << '\n';
  for (int j = 0; j < problem.num_scalars(); ++j)
    if (problem.domain(j) == Domain::Free) os << "# free " << j << '\n';
  auto emit = [&](const std::string& tag, const Functional& f) {
    for (const auto& [b, m] : f.psd_terms())
      for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i <= j; ++i)
          if (m(i, j) != 0.0) os << tag << ' ' << b << ' ' << i << ' ' << j << ' ' << m(i, j) << '\n';
    for (const auto& [j, c] : f.scalar_terms())
      if (c != 0.0) os << tag << " s " << j << ' ' << j << ' ' << c << '\n';
  };
  emit("obj", problem.objective());
  for (int i = 0; i < problem.num_constraints(); ++i) {
    const auto& c = problem.constraints()[i];
    const char* rel = c.rel == Relation::Equal ? "=" : c.rel == Relation::LessEqual ? "<=" : ">=";
    os << "con " << i << ' ' << rel << ' ' << c.rhs << '\n';
    emit("a" + std::to_string(i), c.lhs);
  }
}

}  // namespace swipt::conic
