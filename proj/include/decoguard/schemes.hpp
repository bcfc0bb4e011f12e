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

#include <functional>
#include <optional>
#include <string>

#include "decoguard/branches.hpp"
#include "decoguard/channels.hpp"
#include "decoguard/instruments.hpp"
#include "decoguard/state.hpp"

namespace decoguard {

enum class SchemeKind {
  kWmqmr,
  kQfbc,
  kQffcPostSelected,
  kQffcRotation,
  kWmppf,
  kComposite,
  kEntWmqmr,
};

std::string to_string(SchemeKind kind);
/// Accepts the names printed by to_string ("wmqmr", "qfbc", "qffc_ps",
/// "qffc_rot", "wmppf", "composite", "ent_wmqmr"), case-insensitive.
SchemeKind parse_scheme_kind(const std::string& text);

/// Which outcome receives the positive rotation. kPlus: the first outcome
/// ("+" or "M1") rotates by +eta and the second by -eta; kMinus swaps them.
enum class SignBinding { kPlus, kMinus };

std::string to_string(SignBinding binding);

enum class ProtectedSide { kOne, kBoth };

struct QfbcParams {
  Axis meas_axis = Axis::kY;
  double theta = 0.0;
  Axis rot_axis = Axis::kZ;
  double eta = 0.0;
  SignBinding binding = SignBinding::kPlus;
  /// When set, the measurement is the phase-generalized z pair and
  /// meas_axis is ignored.
  std::optional<double> beta;
};

struct SchemeResult {
  /// Deterministic schemes: the full output. Post-selected schemes: the
  /// normalized accepted mixture, empty when nothing was accepted.
  std::optional<DensityMatrix> output_state;
  double success_prob = 0.0;
  /// Against the scheme input; conditional on acceptance where applicable.
  double fidelity = 0.0;
  BranchEnsemble branch_trace;
  /// Two-qubit schemes only.
  std::optional<double> concurrence;
};

/// p2 = 1 - (1 - p1)(1 - r): undoes WM followed by the no-jump damping branch.
double matched_reversal_strength(double p1, double r);

/// p_u = p_v = (2p - 1)/p, clamped to 0 for p <= 1/2 where no reversal exists.
double matched_post_strength(double p);

/// Weak measurement, noise, reversing measurement; null-result post-selected.
SchemeResult run_wmqmr(const DensityMatrix& rho_in, const KrausChannel& noise, double p1,
                       std::optional<double> p2 = std::nullopt);
/// Amplitude damping with probability r.
SchemeResult run_wmqmr(const DensityMatrix& rho_in, double r, double p1,
                       std::optional<double> p2 = std::nullopt);

/// Noise, then a two-outcome measurement whose outcome selects R(+eta) or
/// R(-eta). Deterministic.
SchemeResult run_qfbc(const DensityMatrix& rho_in, const KrausChannel& noise, const QfbcParams& params);

/// Pre-measurement and flip, noise, flip back, branch-matched post-weak
/// measurement (N1 on the M1 path, W1 on the M2 path); post-selected.
SchemeResult run_qffc_ps(const DensityMatrix& rho_in, const KrausChannel& noise, double p,
                         std::optional<double> p_u = std::nullopt,
                         std::optional<double> p_v = std::nullopt);
SchemeResult run_qffc_ps(const DensityMatrix& rho_in, double r, double p,
                         std::optional<double> p_u = std::nullopt,
                         std::optional<double> p_v = std::nullopt);

/// Pre-measurement and flip, noise, flip back, then R_y(+-eta) per path.
/// Deterministic.
SchemeResult run_qffc_rot(const DensityMatrix& rho_in, const KrausChannel& noise, double p, double eta,
                          SignBinding binding = SignBinding::kPlus);

/// run_qffc_rot without the final rotation.
SchemeResult run_wmppf(const DensityMatrix& rho_in, const KrausChannel& noise, double p);

/// run_qffc_ps followed by R_y(+-eta) on each accepted branch, keyed to the
/// pre-measurement path. A post-measurement discard signal is rejected.
SchemeResult run_composite(const DensityMatrix& rho_in, const KrausChannel& noise, double p,
                           std::optional<double> p_u, std::optional<double> p_v, double eta,
                           SignBinding binding = SignBinding::kPlus);

/// Two-qubit WMQMR with independent amplitude damping r1, r2 on each qubit.
/// kOne protects qubit 1 only. When p2 is not given it is matched per
/// protected qubit to that qubit's damping.
SchemeResult run_ent_wmqmr(const DensityMatrix& rho_2q, double r1, double r2, double p1,
                           std::optional<double> p2, ProtectedSide side);

/// All control inputs of a scheme by name; unset entries take the scheme's
/// defaults.
struct SchemeParams {
  std::optional<double> theta, eta, beta, p, p1, p2, p_u, p_v;
  std::optional<double> r2;
  Axis meas_axis = Axis::kY;
  Axis rot_axis = Axis::kZ;
  SignBinding binding = SignBinding::kPlus;
  ProtectedSide side = ProtectedSide::kOne;
};

struct SchemeSpec {
  SchemeKind kind;
  KrausChannel noise;
  SchemeParams params;
};

/// Range-checks every populated parameter, then dispatches to run_*.
SchemeResult run_scheme(const SchemeSpec& spec, const DensityMatrix& rho_in);

/// Equal-prior average fidelity over both members of a nonorthogonal pair.
double pair_average_fidelity(const InitialState& s,
                             const std::function<SchemeResult(const DensityMatrix&)>& run);

}  // namespace decoguard
