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

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "decoguard/channels.hpp"
#include "decoguard/instruments.hpp"
#include "decoguard/schemes.hpp"
#include "decoguard/state.hpp"

namespace decoguard {

/// Search and sweep dimensions. Angles are in radians.
struct GridSpec {
  std::vector<double> theta_grid;
  std::vector<double> eta_grid;
  std::vector<Axis> meas_axes{Axis::kX, Axis::kY, Axis::kZ};
  std::vector<Axis> rot_axes{Axis::kX, Axis::kY, Axis::kZ};
  std::vector<double> alpha_grid;
  std::vector<double> r_grid;
  std::vector<double> phi_set;

  /// Control angles 0..pi/2 in pi/60 steps; 30 alpha points over [0, pi/2];
  /// r = k/29 for k < 29 plus 0.999; phi in {0, pi/4, pi/2}.
  static GridSpec defaults();

  /// steps + 1 points (pi/2) * k / steps, both endpoints exact.
  static std::vector<double> angle_grid(std::size_t steps);
  /// count points: k / (count - 1) for k < count - 1, then r_max.
  static std::vector<double> damping_grid(std::size_t count, double r_max = 0.999);

  /// Pre-measurement strengths p = cos^2(theta/2), one per theta_grid entry.
  std::vector<double> strength_grid() const;

  /// Throws DomainError on an empty control grid or out-of-range entries.
  void validate_controls() const;
};

/// Grid-optimal controls for one scheme. Entries not used by the scheme keep
/// their defaults (qfbc uses theta, eta, axes, binding; qffc_rot uses theta,
/// p, eta, binding; wmppf uses theta, p).
struct Optimum {
  SchemeKind kind = SchemeKind::kQfbc;
  double fidelity = 0.0;
  double success_prob = 1.0;
  double theta = 0.0;
  double eta = 0.0;
  double p = 0.0;
  Axis meas_axis = Axis::kX;
  Axis rot_axis = Axis::kX;
  SignBinding binding = SignBinding::kPlus;
  std::size_t theta_index = 0;
  std::size_t eta_index = 0;
};

/// Exhaustive search over the scheme's grid for qfbc, qffc_rot or wmppf.
/// Ties go to the smallest theta, then eta, then measurement axis, then
/// rotation axis (x < y < z), then binding + before -.
/// Throws DomainError for post-selected schemes or an empty grid.
Optimum optimize_scheme(SchemeKind kind, const DensityMatrix& rho_in, const KrausChannel& noise,
                        const GridSpec& grid);

struct FidelityDifference {
  Optimum qfbc;
  Optimum qffc;
  double diff = 0.0;
};

/// Optimal qfbc fidelity minus optimal qffc_rot fidelity on the same noise.
FidelityDifference f_diff(const DensityMatrix& rho_in, const KrausChannel& noise, const GridSpec& grid);

struct SweepRow {
  double alpha = 0.0;
  double phi = 0.0;
  double r = 0.0;
  ChannelKind noise = ChannelKind::kAmplitudeDamping;
  FidelityDifference result;
};

struct SweepResult {
  std::vector<SweepRow> rows;
};

/// Noise channel of the given kind at damping r (Kraus forms).
KrausChannel make_noise(ChannelKind kind, double r);

/// F_diff over alpha_grid x r_grid for one phi and noise kind. Rows are
/// alpha-major, r-minor, independent of how many worker threads run.
/// threads == 0 picks std::thread::hardware_concurrency().
SweepResult sweep_fig6(double phi, ChannelKind noise_kind, const GridSpec& grid, std::size_t threads = 1);

}  // namespace decoguard
