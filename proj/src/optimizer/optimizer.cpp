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

#include <algorithm>
#include <array>
#include <cmath>
#include <tuple>

#include "decoguard/error.hpp"
#include "decoguard/hermitian_eig.hpp"
#include "decoguard/kernels.hpp"
#include "decoguard/optimizer.hpp"

namespace decoguard {
namespace {

using kernels::HermitianForm2;
using kernels::SpinorBatch;

constexpr double kPureThreshold = 1.0 - 1e-10;

// (theta, eta, measurement axis, rotation axis, binding); lexicographically
// smaller wins ties.
using TieKey = std::tuple<std::size_t, std::size_t, int, int, int>;

struct Best {
  double fidelity = -1.0;
  TieKey key{};
  bool set = false;

  bool offer(double f, const TieKey& k) {
    if (!set || f > fidelity || (f == fidelity && k < key)) {
      fidelity = f;
      key = k;
      set = true;
      return true;
    }
    return false;
  }
};

double to_fidelity(double overlap) { return std::clamp(std::sqrt(std::max(overlap, 0.0)), 0.0, 1.0); }

Spinor leading_vector(const DensityMatrix& rho) {
  const HermitianEigen eig = eig_hermitian(rho.mat());
  return Spinor{eig.vectors(0, 0), eig.vectors(1, 0)};
}

Spinor times(const ComplexMatrix& m, const Spinor& v) {
  return Spinor{m(0, 0) * v[0] + m(0, 1) * v[1], m(1, 0) * v[0] + m(1, 1) * v[1]};
}

// v_j = R(sign * eta_j)^dagger psi, so that <psi|R S R^dagger|psi> = <v|S|v>.
SpinorBatch rotated_probes(const Spinor& psi, Axis axis, int sign, const std::vector<double>& etas) {
  SpinorBatch batch;
  for (double eta : etas) batch.push_back(times(rotation_matrix(axis, sign * eta).adjoint(), psi));
  return batch;
}

int sign_of(SignBinding b, std::size_t outcome) {
  const int first = b == SignBinding::kPlus ? +1 : -1;
  return outcome == 0 ? first : -first;
}

constexpr std::array<SignBinding, 2> kBindings{SignBinding::kPlus, SignBinding::kMinus};

Optimum optimize_qfbc_pure(const Spinor& psi, const DensityMatrix& rho_in, const KrausChannel& noise,
                           const GridSpec& grid) {
  const ComplexMatrix damped = apply_kraus(rho_in.mat(), noise);

  // probes[axis][0] for +eta, [1] for -eta
  std::vector<std::array<SpinorBatch, 2>> probes;
  for (Axis a : grid.rot_axes) {
    probes.push_back({rotated_probes(psi, a, +1, grid.eta_grid), rotated_probes(psi, a, -1, grid.eta_grid)});
  }

  const kernels::AccumulateFn accumulate = kernels::resolve(kernels::active_backend());
  const std::size_t n = grid.eta_grid.size();
  std::vector<double> overlap(n);
  Best best;
  Optimum opt;
  opt.kind = SchemeKind::kQfbc;

  for (std::size_t ti = 0; ti < grid.theta_grid.size(); ++ti) {
    for (Axis m : grid.meas_axes) {
      const MeasurementPair pair = povm_axis(m, grid.theta_grid[ti]);
      const std::array<HermitianForm2, 2> forms = {kernels::to_form(conjugate_by(pair.ops[0], damped)),
                                                   kernels::to_form(conjugate_by(pair.ops[1], damped))};
      for (std::size_t ai = 0; ai < grid.rot_axes.size(); ++ai) {
        for (SignBinding b : kBindings) {
          std::fill(overlap.begin(), overlap.end(), 0.0);
          for (std::size_t k = 0; k < 2; ++k) {
            const SpinorBatch& v = probes[ai][sign_of(b, k) > 0 ? 0 : 1];
            accumulate(forms[k], v.re0.data(), v.im0.data(), v.re1.data(), v.im1.data(), overlap.data(), n);
          }
          for (std::size_t ei = 0; ei < n; ++ei) {
            const TieKey key{ti, ei, static_cast<int>(m), static_cast<int>(grid.rot_axes[ai]),
                             static_cast<int>(b)};
            if (best.offer(to_fidelity(overlap[ei]), key)) {
              opt.theta = grid.theta_grid[ti];
              opt.eta = grid.eta_grid[ei];
              opt.meas_axis = m;
              opt.rot_axis = grid.rot_axes[ai];
              opt.binding = b;
              opt.theta_index = ti;
              opt.eta_index = ei;
            }
          }
        }
      }
    }
  }
  opt.fidelity = best.fidelity;
  return opt;
}

// Shared by qffc_rot and wmppf; wmppf passes etas = {0}.
Optimum optimize_feed_forward_pure(SchemeKind kind, const Spinor& psi, const DensityMatrix& rho_in,
                                   const KrausChannel& noise, const GridSpec& grid,
                                   const std::vector<double>& etas) {
  const std::array<SpinorBatch, 2> probes = {rotated_probes(psi, Axis::kY, +1, etas),
                                             rotated_probes(psi, Axis::kY, -1, etas)};
  const ComplexMatrix x = pauli::x();
  const std::vector<double> strengths = grid.strength_grid();
  const kernels::AccumulateFn accumulate = kernels::resolve(kernels::active_backend());
  const std::size_t n = etas.size();
  std::vector<double> overlap(n);
  Best best;
  Optimum opt;
  opt.kind = kind;

  for (std::size_t ti = 0; ti < grid.theta_grid.size(); ++ti) {
    const MeasurementPair pre = pre_wm_pair(strengths[ti]);
    const ComplexMatrix path1 = apply_kraus(conjugate_by(pre.ops[0], rho_in.mat()), noise);
    const ComplexMatrix path2 = conjugate_by(x, apply_kraus(conjugate_by(x * pre.ops[1], rho_in.mat()), noise));
    const std::array<HermitianForm2, 2> forms = {kernels::to_form(path1), kernels::to_form(path2)};
    for (SignBinding b : kBindings) {
      if (kind == SchemeKind::kWmppf && b == SignBinding::kMinus) continue;
      std::fill(overlap.begin(), overlap.end(), 0.0);
      for (std::size_t k = 0; k < 2; ++k) {
        const SpinorBatch& v = probes[sign_of(b, k) > 0 ? 0 : 1];
        accumulate(forms[k], v.re0.data(), v.im0.data(), v.re1.data(), v.im1.data(), overlap.data(), n);
      }
      for (std::size_t ei = 0; ei < n; ++ei) {
        const TieKey key{ti, ei, 0, 0, static_cast<int>(b)};
        if (best.offer(to_fidelity(overlap[ei]), key)) {
          opt.theta = grid.theta_grid[ti];
          opt.p = strengths[ti];
          opt.eta = etas[ei];
          opt.binding = b;
          opt.theta_index = ti;
          opt.eta_index = ei;
        }
      }
    }
  }
  opt.fidelity = best.fidelity;
  return opt;
}

// Mixed inputs: evaluate every grid point through the scheme pipelines.
Optimum optimize_mixed(SchemeKind kind, const DensityMatrix& rho_in, const KrausChannel& noise,
                       const GridSpec& grid) {
  Best best;
  Optimum opt;
  opt.kind = kind;
  const std::vector<double> strengths = grid.strength_grid();
  const std::vector<double> etas = kind == SchemeKind::kWmppf ? std::vector<double>{0.0} : grid.eta_grid;
  for (std::size_t ti = 0; ti < grid.theta_grid.size(); ++ti) {
    for (std::size_t ei = 0; ei < etas.size(); ++ei) {
      if (kind == SchemeKind::kQfbc) {
        for (Axis m : grid.meas_axes) {
          for (Axis a : grid.rot_axes) {
            for (SignBinding b : kBindings) {
              const QfbcParams q{m, grid.theta_grid[ti], a, etas[ei], b, std::nullopt};
              const double f = run_qfbc(rho_in, noise, q).fidelity;
              if (best.offer(f, TieKey{ti, ei, static_cast<int>(m), static_cast<int>(a), static_cast<int>(b)})) {
                opt.theta = q.theta;
                opt.eta = q.eta;
                opt.meas_axis = m;
                opt.rot_axis = a;
                opt.binding = b;
                opt.theta_index = ti;
                opt.eta_index = ei;
              }
            }
          }
        }
      } else {
        for (SignBinding b : kBindings) {
          if (kind == SchemeKind::kWmppf && b == SignBinding::kMinus) continue;
          const double f = run_qffc_rot(rho_in, noise, strengths[ti], etas[ei], b).fidelity;
          if (best.offer(f, TieKey{ti, ei, 0, 0, static_cast<int>(b)})) {
            opt.theta = grid.theta_grid[ti];
            opt.p = strengths[ti];
            opt.eta = etas[ei];
            opt.binding = b;
            opt.theta_index = ti;
            opt.eta_index = ei;
          }
        }
      }
    }
  }
  opt.fidelity = best.fidelity;
  return opt;
}

}  // namespace

Optimum optimize_scheme(SchemeKind kind, const DensityMatrix& rho_in, const KrausChannel& noise,
                        const GridSpec& grid) {
  if (kind != SchemeKind::kQfbc && kind != SchemeKind::kQffcRotation && kind != SchemeKind::kWmppf) {
    throw DomainError("optimize_scheme supports the deterministic schemes qfbc, qffc_rot and wmppf, not " +
                      to_string(kind));
  }
  grid.validate_controls();
  if (rho_in.dim() != 2 || noise.dim() != 2) throw DomainError("optimize_scheme works on one qubit");

  if (rho_in.purity() < kPureThreshold) return optimize_mixed(kind, rho_in, noise, grid);

  const Spinor psi = leading_vector(rho_in);
  switch (kind) {
    case SchemeKind::kQfbc:
      return optimize_qfbc_pure(psi, rho_in, noise, grid);
    case SchemeKind::kQffcRotation:
      return optimize_feed_forward_pure(kind, psi, rho_in, noise, grid, grid.eta_grid);
    default:
      return optimize_feed_forward_pure(kind, psi, rho_in, noise, grid, {0.0});
  }
}

FidelityDifference f_diff(const DensityMatrix& rho_in, const KrausChannel& noise, const GridSpec& grid) {
  FidelityDifference out;
  out.qfbc = optimize_scheme(SchemeKind::kQfbc, rho_in, noise, grid);
  out.qffc = optimize_scheme(SchemeKind::kQffcRotation, rho_in, noise, grid);
  out.diff = out.qfbc.fidelity - out.qffc.fidelity;
  return out;
}

}  // namespace decoguard
