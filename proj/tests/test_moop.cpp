// SPDX-License-Identifier: Apache-2.0
#include <catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "swipt/metrics.hpp"
#include "swipt/moop.hpp"

using namespace swipt;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

ChannelSet channels(int trial, int n_tx = 8) { return generate_sep_channels(table_2_1(n_tx), 7, trial); }

bool j1_binding(const moop::MoopAllocation& a, const moop::Anchors& an) {
  const double j1 = a.weights.w1 * (1.0 - a.rate_param * a.lifted.theta / an.phi_ir_star);
  return j1 >= a.tau - 1e-7;
}

}  // namespace

TEST_CASE("power minimization returns the zero allocation") {
  const SystemParams p = table_2_1();
  const auto a = moop::solve_power_min(p);
  CHECK(a.w_i.norm() == 0.0);
  CHECK(a.w_e.norm() == 0.0);
  CHECK(a.objectives.p_tx == 0.0);
  CHECK(a.objectives.ir_ee == 0.0);
  CHECK(a.objectives.eh_ee == 0.0);
  CHECK_THAT(a.theta, WithinRel(1.0 / (8 * 0.075 + 1.0), 1e-15));
  CHECK(moop::normalize(-0.0, 0.0, -p.p_max) == 1.0);
}

TEST_CASE("normalize anchors") {
  CHECK(moop::normalize(0.0, 2.0, 0.0) == 0.0);
  CHECK(moop::normalize(2.0, 2.0, 0.0) == 1.0);
  CHECK(moop::normalize(1.0, 2.0, 0.0) == 0.5);
  CHECK_THROWS_AS(moop::normalize(1.0, 2.0, 2.0), std::invalid_argument);
}

TEST_CASE("EH-EE closed form") {
  SystemParams p = table_2_1(1);
  ChannelSet ch;
  ch.h = CVec::Constant(1, cdouble(1e-3, 0.0));
  ch.g = CVec::Constant(1, cdouble(std::sqrt(1e-3), 0.0));
  const auto a = moop::solve_ehee_max(ch, p);
  CHECK_THAT(a.objectives.eh_ee, WithinRel(0.8e-3 / 3.575, 1e-12));
  CHECK_THAT(a.objectives.eh_ee, WithinRel(2.238e-4, 1e-3));
  ch.g *= 2.0;
  CHECK_THAT(moop::solve_ehee_max(ch, p).objectives.eh_ee, WithinRel(4.0 * 0.8e-3 / 3.575, 1e-12));
  ch.g.setZero();
  CHECK_THROWS_AS(moop::solve_ehee_max(ch, p), std::domain_error);
}

TEST_CASE("EH-EE SDP path matches the closed form") {
  const SystemParams p = table_2_1();
  for (int t = 0; t < 10; ++t) {
    const ChannelSet ch = channels(t);
    const auto cf = moop::solve_ehee_max(ch, p);
    const auto sdp = moop::solve_ehee_max_sdp(ch, p);
    REQUIRE(sdp.status == conic::Status::Optimal);
    CHECK_THAT(sdp.objectives.eh_ee, WithinRel(cf.objectives.eh_ee, 1e-4));
    CHECK(moop::kkt_structure_check(sdp, ch).sin_angle_g <= 1e-6);
  }
}

TEST_CASE("IR-EE maximum matches the scalar power oracle") {
  const SystemParams p = table_2_1();
  for (int t = 0; t < 4; ++t) {
    const ChannelSet ch = channels(t);
    const auto a = moop::solve_iree_max(ch, p);
    REQUIRE(a.status == conic::Status::Optimal);
    const double oracle = oracle::iree_scalar_power(ch.h.squaredNorm() / p.noise_power, p);
    CHECK_THAT(a.objectives.ir_ee, WithinRel(oracle, 1e-4));
    CHECK(moop::kkt_structure_check(a, ch).sin_angle_h <= 1e-6);
    CHECK(a.w_e.norm() == 0.0);
    CHECK(std::abs(a.budget_residual) <= 1e-6);
  }
}

TEST_CASE("IR-EE maximum reacts to noise and circuit power") {
  SystemParams p = table_2_1();
  const ChannelSet ch = channels(0);
  const double base = moop::solve_iree_max(ch, p).objectives.ir_ee;
  SystemParams pc = p;
  pc.p_c *= 2.0;
  CHECK(moop::solve_iree_max(ch, pc).objectives.ir_ee < base);
  SystemParams pn = p;
  pn.noise_power *= 1e12;
  CHECK(moop::solve_iree_max(ch, pn).objectives.ir_ee < 1e-3 * base);
}

TEST_CASE("lift and recover round trip") {
  const SystemParams p = table_2_1(4);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    const CVec wi = oracle::random_cvec(rng, 4, 0.3);
    const CVec u = oracle::random_cvec(rng, 4, 0.2);
    const CMat we = u * u.adjoint();
    const auto lv = moop::lift(wi, we, p);
    CHECK(lv.theta == 1.0 / metrics::total_power(wi, we, p));
    const auto [ri, re] = moop::recover(lv);
    CHECK((ri * ri.adjoint() - wi * wi.adjoint()).norm() <= 1e-10);
    CHECK((re - we).norm() <= 1e-10);
    CHECK_THAT(moop::budget_identity(lv, p), WithinAbs(1.0, 1e-12));
  }
  const auto z = moop::lift(CVec::Zero(4), CMat::Zero(4, 4), p);
  CHECK_THAT(z.theta, WithinRel(1.0 / (4 * 0.075 + 1.0), 1e-15));
  CHECK_THROWS_AS(moop::recover(moop::LiftedVars{CMat::Zero(4, 4), CMat::Zero(4, 4), 0.0}), std::invalid_argument);
}

TEST_CASE("weight vectors are validated") {
  CHECK_NOTHROW(moop::WeightVector{0.2, 0.3, 0.5}.validate());
  CHECK_THROWS_AS((moop::WeightVector{0.5, 0.6, -0.1}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((moop::WeightVector{0.5, 0.6, 0.0}.validate()), std::invalid_argument);
}

TEST_CASE("weight sweeps") {
  CHECK(moop::sweep_weights(0.5).size() == 6);
  const auto w = moop::sweep_weights(0.04);
  CHECK(w.size() == 351);
  for (const auto& x : w) CHECK_NOTHROW(x.validate());
  CHECK(w.front().w1 == 1.0);
  CHECK(w.back().w2 == 1.0);
  CHECK_THROWS_AS(moop::sweep_weights(0.3), std::invalid_argument);
  CHECK_THROWS_AS(moop::sweep_weights(0.0), std::invalid_argument);
  const auto pw = moop::pairwise_weights(0.01, 3);
  CHECK(pw.size() == 101);
  for (const auto& x : pw) CHECK(x.w3 == 0.0);
  CHECK(pw.front().w1 == 0.0);
  CHECK(pw.back().w1 == 1.0);
  CHECK_THROWS_AS(moop::pairwise_weights(0.01, 4), std::invalid_argument);
}

TEST_CASE("pareto filter") {
  using moop::Sense;
  const std::vector<Sense> mm{Sense::Maximize, Sense::Maximize};
  CHECK(moop::pareto_filter({{1, 1}, {2, 0.5}, {0.5, 0.5}}, mm) == std::vector<size_t>{0, 1});
  CHECK(moop::pareto_filter({{3, 4}}, mm) == std::vector<size_t>{0});
  CHECK(moop::pareto_filter({{1, 1}, {1, 1}, {1, 1}}, mm) == std::vector<size_t>{0, 1, 2});
  const std::vector<Sense> mn{Sense::Maximize, Sense::Minimize};
  CHECK(moop::pareto_filter({{1, 1}, {1, 2}, {2, 3}}, mn) == std::vector<size_t>{0, 2});
  CHECK(moop::pareto_filter({{1, 1}, {1 + 1e-9, 1}}, mm, 1e-6) == std::vector<size_t>{0, 1});
  CHECK_THROWS_AS(moop::pareto_filter({{1, 1, 1}}, mm), std::invalid_argument);
}

TEST_CASE("rank-one extraction") {
  std::mt19937_64 rng(11);
  const CVec v = oracle::random_cvec(rng, 5);
  const auto r = moop::rank_one_extract(v * v.adjoint());
  CHECK(r.ratio <= 1e-14);
  CHECK((r.v * r.v.adjoint() - v * v.adjoint()).norm() <= 1e-12 * v.squaredNorm());
  CHECK(r.v(0).imag() == 0.0);
  CHECK(r.v(0).real() >= 0.0);
  CHECK_THAT(moop::rank_one_extract(CMat::Identity(2, 2)).ratio, WithinAbs(1.0, 1e-15));
  const auto z = moop::rank_one_extract(CMat::Zero(3, 3));
  CHECK(z.ratio == 0.0);
  CHECK(z.v.norm() == 0.0);
}

TEST_CASE("weighted min-max at the extreme weights") {
  const SystemParams p = table_2_1();
  for (int t = 0; t < 3; ++t) {
    const ChannelSet ch = channels(t);
    const auto an = moop::compute_anchors(ch, p);
    const auto ir = moop::solve_weighted_minmax({1, 0, 0}, ch, p, an);
    CHECK_THAT(ir.objectives.ir_ee, WithinRel(moop::solve_iree_max(ch, p).objectives.ir_ee, 1e-4));
    CHECK(moop::kkt_structure_check(ir, ch).sin_angle_h <= 1e-6);
    const auto eh = moop::solve_weighted_minmax({0, 1, 0}, ch, p, an);
    CHECK_THAT(eh.objectives.eh_ee, WithinRel(moop::solve_ehee_max(ch, p).objectives.eh_ee, 1e-4));
    CHECK(moop::kkt_structure_check(eh, ch).sin_angle_g <= 1e-6);
    const auto pw = moop::solve_weighted_minmax({0, 0, 1}, ch, p, an);
    CHECK(pw.objectives.p_tx <= 1e-6);
    for (const auto* a : {&ir, &eh}) {
      CHECK(a->tau >= 0.0);
      CHECK(a->tau <= 1.0);
      CHECK(std::abs(a->budget_residual) <= 1e-6);
    }
  }
}

TEST_CASE("mixed weights give rank-one information beams") {
  const SystemParams p = table_2_1();
  const std::vector<moop::WeightVector> ws{{0.5, 0.5, 0.0}, {0.5, 0.0, 0.5}, {0.0, 0.5, 0.5}, {0.3, 0.3, 0.4},
                                           {0.1, 0.8, 0.1}, {0.8, 0.1, 0.1}, {0.2, 0.7, 0.1}};
  for (int t = 0; t < 2; ++t) {
    const ChannelSet ch = channels(t);
    const auto an = moop::compute_anchors(ch, p);
    for (const auto& w : ws) {
      const auto a = moop::solve_weighted_minmax(w, ch, p, an);
      REQUIRE(a.status == conic::Status::Optimal);
      CHECK(a.rank_ratio <= 1e-6);
      CHECK(a.w_e.norm() == 0.0);
      CHECK(a.lifted.w_e.norm() == 0.0);
      if (w.w1 > 0.0 && w.w2 > 0.0 && j1_binding(a, an)) CHECK(a.raw_we_norm <= 1e-8);
      CHECK(a.tau >= 0.0);
      CHECK(a.tau <= 1.0 + 1e-9);
      CHECK(std::abs(a.budget_residual) <= 1e-6);
      CHECK(a.objectives.p_tx <= p.p_max + 1e-9);
      const auto k = moop::kkt_structure_check(a, ch);
      CHECK(k.span_residual <= 1e-6);
      if (w.w2 == 0.0) CHECK(k.sin_angle_h <= 1e-6);
    }
  }
}

TEST_CASE("rate search agrees with a dense grid") {
  const SystemParams p = table_2_1();
  const ChannelSet ch = channels(1);
  const auto an = moop::compute_anchors(ch, p);
  const double snr = p.p_max * ch.h.squaredNorm() / p.noise_power;
  for (const moop::WeightVector w : {moop::WeightVector{0.5, 0.5, 0.0}, moop::WeightVector{0.4, 0.3, 0.3}}) {
    const auto a = moop::solve_weighted_minmax(w, ch, p, an);
    double dense = 1e300;
    std::vector<double> vals;
    for (int i = 0; i < 1024; ++i) {
      const double frac = std::pow(10.0, -6.0 + 6.0 * i / 1023.0) * (1.0 - 1e-6);
      vals.push_back(moop::minmax_value_at(std::log2(1.0 + frac * snr), w, ch, p, an));
      dense = std::min(dense, vals.back());
    }
    CHECK(a.tau <= dense + 1e-7);
    // The value curve has a single valley.
    size_t k = 0;
    for (size_t i = 1; i < vals.size(); ++i)
      if (vals[i] < vals[k]) k = i;
    for (size_t i = 1; i <= k; ++i) CHECK(vals[i] <= vals[i - 1] + 1e-7);
    for (size_t i = k + 1; i < vals.size(); ++i) CHECK(vals[i] >= vals[i - 1] - 1e-7);
  }
}

TEST_CASE("sweep points on one realization are mutually non-dominated") {
  const SystemParams p = table_2_1();
  const ChannelSet ch = channels(2);
  const auto an = moop::compute_anchors(ch, p);
  moop::SearchOptions opts;
  std::vector<std::vector<double>> pts;
  for (const auto& w : moop::sweep_weights(0.2)) {
    const auto a = moop::solve_weighted_minmax(w, ch, p, an, opts);
    pts.push_back({a.objectives.ir_ee, a.objectives.eh_ee, a.objectives.p_tx});
  }
  using moop::Sense;
  CHECK(moop::pareto_filter(pts, {Sense::Maximize, Sense::Maximize, Sense::Minimize}, 1e-6).size() == pts.size());
}

TEST_CASE("throughput baseline extremes") {
  const SystemParams p = table_2_1();
  for (int t = 0; t < 3; ++t) {
    const ChannelSet ch = channels(t);
    const auto an = moop::throughput_anchors(ch, p);
    const auto r = moop::solve_throughput_minmax({1, 0, 0}, ch, p);
    REQUIRE(r.status == conic::Status::Optimal);
    CHECK_THAT(r.objectives.rate, WithinAbs(an.rate_star, 1e-6));
    const auto h = moop::solve_throughput_minmax({0, 1, 0}, ch, p);
    CHECK_THAT(h.objectives.harvested, WithinRel(an.harvest_star, 1e-6));
    CHECK(moop::solve_throughput_minmax({0, 0, 1}, ch, p).objectives.p_tx == 0.0);
    const auto m = moop::solve_throughput_minmax({0.4, 0.4, 0.2}, ch, p);
    CHECK(m.rank_ratio <= 1e-6);
    CHECK(m.tau >= 0.0);
    CHECK(m.tau <= 1.0);
    CHECK(m.objectives.p_tx <= p.p_max + 1e-9);
  }
}
