// Copyright 2026 The DecoGuard Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "decoguard/channels.hpp"
#include "decoguard/cli.hpp"
#include "decoguard/instruments.hpp"
#include "decoguard/metrics.hpp"
#include "decoguard/optimizer.hpp"
#include "decoguard/schemes.hpp"
#include "test_support.hpp"

namespace decoguard {
namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects sub-check failures; the first few are kept for the report.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  void le(double value, double bound, const std::string& what) {
    expect(value <= bound, what + " = " + cli::format_number(value) + " > " + cli::format_number(bound));
  }
  Outcome done(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " violations: " + notes_};
  }

 private:
  int failures_ = 0;
  std::string notes_;
};

ComplexMatrix pair_sum(const MeasurementPair& m) {
  return m.ops[0].adjoint() * m.ops[0] + m.ops[1].adjoint() * m.ops[1];
}

Outcome channel_algebra() {
  Checker c;
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const DensityMatrix rho = testing::random_mixed(rng);
    const double r = u(rng);
    const BlochVector b = density_to_bloch(rho);
    const BlochVector pd = density_to_bloch(apply_channel(rho, pd_kraus(r)));
    c.le(std::abs(pd.z - b.z), 1e-12, "PD z drift");
    c.le(std::abs(pd.x - std::sqrt(1 - r) * b.x), 1e-12, "PD x scale");
    c.le(std::abs(pd.y - std::sqrt(1 - r) * b.y), 1e-12, "PD y scale");

    const BranchEnsemble branches = ad_unravel(rho, r);
    c.le(max_abs_diff(branches.accepted_sum(), apply_channel(rho, ad_kraus(r)).mat()), 1e-12, "AD unravel sum");

    const double r1 = 0.5 * u(rng);
    c.le(max_abs_diff(pd_flip(rho, r1).mat(), apply_channel(rho, pd_kraus(pd_flip_to_kraus_r(r1))).mat()), 1e-12,
         "PD flip/Kraus");
  }
  return c.done("100 random states, PD shape, AD unraveling and flip/Kraus equivalence within 1e-12");
}

Outcome operator_completeness() {
  Checker c;
  const ComplexMatrix id = ComplexMatrix::identity(2);
  for (double theta : GridSpec::angle_grid(30)) {
    for (Axis axis : {Axis::kX, Axis::kY, Axis::kZ}) {
      c.le(max_abs_diff(pair_sum(povm_axis(axis, theta)), id), 1e-12, "axis pair");
    }
    const double cc = std::cos(theta / 2);
    c.le(max_abs_diff(pair_sum(pre_wm_pair(cc * cc)), id), 1e-12, "pre-measurement pair");
    for (int j = 0; j < 8; ++j) {
      c.le(max_abs_diff(pair_sum(povm_generalized(theta, 2 * kPi * j / 8)), id), 1e-12, "phase pair");
    }
    for (Axis axis : {Axis::kX, Axis::kY, Axis::kZ}) {
      for (int sign : {+1, -1}) {
        const ComplexMatrix r = rotation(axis, theta, sign).matrix;
        c.le(max_abs_diff(r.adjoint() * r, id), 1e-12, "rotation unitarity");
      }
    }
  }
  return c.done("31-point theta grid x 8 beta values, all pairs complete and rotations unitary within 1e-12");
}

Outcome exact_reversal() {
  Checker c;
  std::mt19937_64 rng(303);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const DensityMatrix rho = testing::random_pure(rng);
    for (auto [p1, r] : {std::pair{0.1, 0.2}, {0.3, 0.5}, {0.5, 0.8}, {0.8, 0.4}, {0.9, 0.9}}) {
      // The no-jump channel alone is the operator A0 = diag(1, sqrt(1 - r)).
      BranchEnsemble e = partial_measure(rho, wm_map(p1));
      e = partial_measure(e, wm_map(r));
      e = partial_measure(e, qmr_map(matched_reversal_strength(p1, r)));
      const double f = fidelity(rho, e.accepted_state());
      worst = std::max(worst, 1.0 - f);
      c.le(1.0 - f, 1e-9, "no-jump reversal infidelity");
    }
    for (double p : {0.5, 0.7, 0.9}) {
      const double f = run_qffc_ps(rho, 0.0, p).fidelity;
      worst = std::max(worst, 1.0 - f);
      c.le(1.0 - f, 1e-9, "feed-forward reversal infidelity");
    }
  }
  return c.done("50 states x 5 (p1, r) pairs and 3 pre-measurement strengths, worst infidelity " +
                cli::format_number(worst));
}

Outcome metric_correctness() {
  Checker c;
  const DensityMatrix plus = bloch_to_density({1, 0, 0});
  const double f = fidelity(plus, apply_channel(plus, pd_kraus(0.5)));
  c.le(std::abs(f - std::sqrt((1 + std::sqrt(0.5)) / 2)), 1e-9, "PD fidelity");
  c.le(std::abs(f - 0.923880), 1e-6, "PD fidelity quoted value");

  const double h = std::sqrt(0.5);
  const DensityMatrix bell = DensityMatrix::pure(std::array<Complex, 4>{h, 0.0, 0.0, h});
  const DensityMatrix ground(ComplexMatrix::diagonal({1.0, 0.0, 0.0, 0.0}));
  ComplexMatrix w = bell.mat() * Complex(0.5);
  w += ComplexMatrix::identity(4) * Complex(0.125);
  const DensityMatrix werner(w);
  for (auto [rho, expected, name] : {std::tuple{bell, 1.0, "Bell"}, {ground, 0.0, "|00>"}, {werner, 0.25, "Werner"}}) {
    c.le(std::abs(concurrence(rho) - expected), 1e-9, std::string(name) + " concurrence");
    c.le(std::abs(testing::oracle_concurrence(rho.mat()) - expected), 1e-9, std::string(name) + " oracle");
  }
  return c.done("fidelity " + cli::format_number(f) + ", concurrences 1 / 0 / 0.25 match the eigen oracle");
}

struct Surfaces {
  // Keyed by (phi index, noise index).
  std::vector<SweepResult> sweeps;
  std::vector<std::string> csv;
};

const ChannelKind kNoises[2] = {ChannelKind::kAmplitudeDamping, ChannelKind::kPhaseDamping};

Surfaces run_surfaces(std::size_t threads) {
  const GridSpec grid = GridSpec::defaults();
  Surfaces s;
  for (double phi : grid.phi_set) {
    for (ChannelKind noise : kNoises) {
      s.sweeps.push_back(sweep_fig6(phi, noise, grid, threads));
      s.csv.push_back(cli::sweep_csv(s.sweeps.back()));
    }
  }
  return s;
}

std::string case_name(double phi, ChannelKind noise) {
  return to_string(noise) + " phi=" + cli::format_number(phi / kPi) + "pi";
}

Outcome surface_sign(const Surfaces& s) {
  Checker c;
  double lowest = 1.0;
  for (const SweepResult& sweep : s.sweeps) {
    for (const SweepRow& row : sweep.rows) {
      lowest = std::min(lowest, row.result.diff);
      c.expect(row.result.diff >= -0.01, case_name(row.phi, row.noise) + " alpha=" + cli::format_number(row.alpha) +
                                             " r=" + cli::format_number(row.r) + " F_diff=" +
                                             cli::format_number(row.result.diff));
    }
  }
  return c.done("6 surfaces x 900 cells, min F_diff " + cli::format_number(lowest) + " >= -0.01");
}

Outcome noiseless_column(const Surfaces& s) {
  Checker c;
  double worst = 0.0;
  for (const SweepResult& sweep : s.sweeps) {
    for (const SweepRow& row : sweep.rows) {
      if (row.r != 0.0) continue;
      worst = std::max(worst, std::abs(row.result.diff));
      c.le(std::abs(row.result.diff), 1e-12, case_name(row.phi, row.noise) + " |F_diff| at r=0");
    }
  }
  return c.done("max |F_diff| at r=0 is " + cli::format_number(worst));
}

Outcome peak_at_strong_damping(const Surfaces& s) {
  const GridSpec grid = GridSpec::defaults();
  const double r_top = grid.r_grid.back();
  bool pass = true;
  std::string detail;
  for (std::size_t pi = 0; pi < grid.phi_set.size(); ++pi) {
    const double phi = grid.phi_set[pi];
    if (phi == 0.0) continue;
    for (std::size_t ni = 0; ni < 2; ++ni) {
      double peak = -1.0;
      for (const SweepRow& row : s.sweeps[pi * 2 + ni].rows) {
        if (row.r == r_top) peak = std::max(peak, row.result.diff);
      }
      const bool ok = peak >= 0.4 && peak <= 0.55;
      pass = pass && ok;
      detail += (detail.empty() ? "" : ", ") + case_name(phi, kNoises[ni]) + " max F_diff " +
                cli::format_number(peak) + (ok ? "" : " (outside [0.4, 0.55])");
    }
  }
  return {pass, "at r=" + cli::format_number(r_top) + ": " + detail};
}

Outcome shrinks_toward_pole() {
  // Evaluated at exactly r = 0.5, which is not a sweep grid point.
  const GridSpec grid = GridSpec::defaults();
  bool pass = true;
  std::string detail;
  for (ChannelKind noise : kNoises) {
    double near_equator = 0.0, near_pole = 0.0;
    int n_eq = 0, n_pole = 0;
    for (double alpha : grid.alpha_grid) {
      const bool low = alpha <= kPi / 8;
      const bool high = alpha >= 3 * kPi / 8;
      if (!low && !high) continue;
      const double d = f_diff(state_from_angles({alpha, 0.0, +1}), make_noise(noise, 0.5), grid).diff;
      if (low) near_equator += d, ++n_eq;
      if (high) near_pole += d, ++n_pole;
    }
    near_equator /= n_eq;
    near_pole /= n_pole;
    const bool ok = near_pole < near_equator;
    pass = pass && ok;
    detail += (detail.empty() ? "" : ", ") + to_string(noise) + " mean F_diff alpha<=pi/8 " +
              cli::format_number(near_equator) + " vs alpha>=3pi/8 " + cli::format_number(near_pole) +
              (ok ? "" : " (not smaller)");
  }
  return {pass, "phi=0, r=0.5: " + detail};
}

Outcome entanglement_protection() {
  Checker c;
  const double h = std::sqrt(0.5);
  const DensityMatrix bell = DensityMatrix::pure(std::array<Complex, 4>{h, 0.0, 0.0, h});
  const SchemeResult bare = run_ent_wmqmr(bell, 0.6, 0.6, 0.0, 0.0, ProtectedSide::kOne);
  const SchemeResult prot = run_ent_wmqmr(bell, 0.6, 0.6, 0.8, std::nullopt, ProtectedSide::kOne);
  c.expect(*prot.concurrence > *bare.concurrence, "protected concurrence not higher");
  c.expect(prot.success_prob < 1.0, "success probability not below 1");
  double last = 2.0;
  for (int k = 0; k < 10; ++k) {
    const double s = run_ent_wmqmr(bell, 0.6, 0.6, k / 10.0, std::nullopt, ProtectedSide::kOne).success_prob;
    c.expect(s <= last, "success rose at p1=" + cli::format_number(k / 10.0));
    last = s;
  }
  return c.done("concurrence " + cli::format_number(*bare.concurrence) + " -> " +
                cli::format_number(*prot.concurrence) + ", success " + cli::format_number(prot.success_prob) +
                ", success non-increasing over p1 = 0..0.9");
}

Outcome determinism(const Surfaces& first) {
  const Surfaces again = run_surfaces(2);
  for (std::size_t i = 0; i < first.csv.size(); ++i) {
    if (first.csv[i] != again.csv[i]) return {false, "surface " + std::to_string(i) + " differs on repeat"};
  }
  return {true, "6 CSV tables bitwise identical across repeats and thread counts"};
}

int failures = 0;

void report(const std::string& id, const std::string& title, double budget_s, const std::function<Outcome()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o = fn();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_s > 0 && secs > budget_s) {
    o.pass = false;
    o.detail += " (runtime over " + cli::format_number(budget_s) + " s)";
  }
  if (!o.pass) ++failures;
  std::printf("%s [%s] %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id.c_str(), title.c_str(), o.detail.c_str(), secs);
  std::fflush(stdout);
}

}  // namespace
}  // namespace decoguard

int main() {
  using namespace decoguard;
  report("1", "channel algebra", 1.0, channel_algebra);
  report("2", "operator completeness", 1.0, operator_completeness);
  report("3", "exact-reversal oracles", 5.0, exact_reversal);
  report("4", "metric correctness", 1.0, metric_correctness);

  Surfaces surfaces;
  const auto start = std::chrono::steady_clock::now();
  surfaces = run_surfaces(0);
  const double sweep_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("info: six 30x30 surfaces computed in %.2f s (budget 300 s)\n", sweep_s);
  report("5a", "F_diff never meaningfully negative", 0, [&] { return surface_sign(surfaces); });
  report("5b", "F_diff vanishes without noise", 0, [&] { return noiseless_column(surfaces); });
  report("5c", "F_diff peak at strongest damping in [0.4, 0.55]", 0, [&] { return peak_at_strong_damping(surfaces); });
  report("5d", "F_diff smaller near alpha=pi/2 than near alpha=0", 0, shrinks_toward_pole);
  if (sweep_s > 300.0) {
    std::printf("FAIL [5] runtime: %.2f s over the 300 s budget\n", sweep_s);
    ++failures;
  }
  report("6", "entanglement protection", 5.0, entanglement_protection);
  report("7", "determinism", 0, [&] { return determinism(surfaces); });
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
