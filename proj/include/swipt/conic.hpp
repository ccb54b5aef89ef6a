// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "swipt/sysmodel.hpp"

namespace swipt::conic {

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class Domain { Nonneg, Free };
enum class Status { Optimal, Infeasible, Unbounded, NumericalLimit };

const char* to_string(Status s);

// Linear functional over PSD blocks and scalars: sum_b <C_b, X_b> + sum_j c_j x_j.
class Functional {
 public:
  Functional& psd(int block, const Mat& coeff);
  // Adds v * X(i,j) (the symmetric partner entry gets no separate weight).
  Functional& psd_entry(int block, int i, int j, double v);
  Functional& scalar(int var, double c);

  const std::map<int, Mat>& psd_terms() const { return psd_; }
  const std::map<int, double>& scalar_terms() const { return scalar_; }

 private:
  struct Entry {
    int block, i, j;
    double v;
  };
  std::map<int, Mat> psd_;
  std::map<int, double> scalar_;
  std::vector<Entry> entries_;
  friend class Problem;
};

struct Constraint {
  Functional lhs;
  Relation rel;
  double rhs;
};

class Problem {
 public:
  int add_psd(int n);
  int add_scalar(Domain d = Domain::Nonneg);

  void minimize(Functional f);
  int constrain(Functional f, Relation rel, double rhs);

  int num_psd() const { return static_cast<int>(psd_sizes_.size()); }
  int psd_size(int b) const { return psd_sizes_.at(b); }
  int num_scalars() const { return static_cast<int>(domains_.size()); }
  Domain domain(int j) const { return domains_.at(j); }
  const Functional& objective() const { return objective_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  int num_constraints() const { return static_cast<int>(constraints_.size()); }

  void validate() const;

 private:
  void normalize(Functional& f) const;

  std::vector<int> psd_sizes_;
  std::vector<Domain> domains_;
  Functional objective_;
  std::vector<Constraint> constraints_;
};

struct Point {
  std::vector<Mat> psd;
  Vec scalars;
};

double evaluate(const Functional& f, const Point& p);

struct Options {
  double gap_tol = 1e-8;
  double feas_tol = 1e-8;
  double eig_tol = 1e-9;
  int max_iters = 200;
  // On numerical breakdown the best iterate is still reported optimal if its
  // residuals and gap are below this.
  double reduced_tol = 1e-8;
};

struct Solution {
  Status status = Status::NumericalLimit;
  Point primal;
  // Multipliers y_i with C - sum y_i A_i in the dual cone; y_i >= 0 for >=, <= 0 for <=.
  Vec duals;
  double primal_objective = 0.0;
  double dual_objective = 0.0;
  double gap = 0.0;  // relative
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  int iterations = 0;
  // Infeasible: duals hold a ray with b'y = 1.  Unbounded: primal holds a ray with objective -1.
};

Solution solve(const Problem& problem, const Options& opts = {});

struct KktResiduals {
  double primal_res = 0.0;
  double dual_res = 0.0;
  double gap = 0.0;      // primal minus dual objective
  double rel_gap = 0.0;
  double min_eig = 0.0;
};

KktResiduals kkt_residuals(const Problem& problem, const Solution& solution);

// Farkas check for an Infeasible verdict: b'y > 0 and C-free dual slack violation, scaled by b'y.
double infeasibility_certificate_error(const Problem& problem, const Vec& y);
// Ray check for an Unbounded verdict: constraint violation of the homogeneous system, scaled by -<C,X>.
double unboundedness_certificate_error(const Problem& problem, const Point& ray);

Mat hermitian_embed(const CMat& h);
CMat hermitian_unembed(const Mat& m);
// Coefficient on an embedded block that reproduces Re Tr(A X) of the complex model.
Mat embed_coefficient(const CMat& a);

void dump_triplets(const Problem& problem, std::ostream& os);

}  // namespace swipt::conic
