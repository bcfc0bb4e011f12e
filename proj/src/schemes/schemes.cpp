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

#include "decoguard/schemes.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include "decoguard/error.hpp"
#include "decoguard/metrics.hpp"

namespace decoguard {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

BranchEnsemble apply_unitary(const BranchEnsemble& in, const ComplexMatrix& u, const std::string& label) {
  std::vector<Branch> out;
  for (const Branch& b : in.branches()) {
    if (!b.accepted) {
      out.push_back(b);
      continue;
    }
    out.push_back(Branch{join_label(b.label, label), conjugate_by(u, b.state), true});
  }
  return BranchEnsemble(std::move(out));
}

void append(BranchEnsemble& into, const BranchEnsemble& from) {
  for (const Branch& b : from.branches()) into.branches().push_back(b);
}

void require_single_qubit(const DensityMatrix& rho, const KrausChannel& noise) {
  if (rho.dim() != 2) throw DomainError("scheme input must be a single-qubit state");
  if (noise.dim() != 2) throw DomainError("scheme noise must act on one qubit");
}

void require_trace_preserving(const BranchEnsemble& e) {
  const double drift = std::abs(e.total_weight() - 1.0);
  if (drift > 1e-12) throw DomainError("protocol lost trace: drift " + std::to_string(drift));
}

SchemeResult deterministic_result(const DensityMatrix& rho_in, BranchEnsemble trace) {
  require_trace_preserving(trace);
  SchemeResult res;
  res.output_state = DensityMatrix::normalized(trace.accepted_sum());
  res.success_prob = 1.0;
  res.fidelity = fidelity(rho_in, *res.output_state);
  res.branch_trace = std::move(trace);
  return res;
}

SchemeResult post_selected_result(const DensityMatrix& rho_in, BranchEnsemble trace) {
  require_trace_preserving(trace);
  SchemeResult res;
  res.success_prob = std::clamp(trace.accepted_weight(), 0.0, 1.0);
  if (res.success_prob > 0.0) {
    res.output_state = trace.accepted_state();
    res.fidelity = fidelity(rho_in, *res.output_state);
  }
  res.branch_trace = std::move(trace);
  return res;
}

// Pre-measurement path k (0 -> M1/F1, 1 -> M2/F2) up to and including the
// reversed flip.
BranchEnsemble feed_forward_path(const DensityMatrix& rho_in, const KrausChannel& noise,
                                 const MeasurementPair& pre, std::size_t k) {
  const auto [f1, f2] = flips();
  const ComplexMatrix& flip = k == 0 ? f1 : f2;
  const std::string flip_label = k == 0 ? "F1" : "F2";
  BranchEnsemble e({Branch{pre.labels[k], conjugate_by(pre.ops[k], rho_in.mat()), true}});
  e = apply_unitary(e, flip, flip_label);
  e = unravel(e, noise);
  return apply_unitary(e, flip, flip_label);
}

int path_sign(std::size_t k, SignBinding binding) {
  const int first = binding == SignBinding::kPlus ? +1 : -1;
  return k == 0 ? first : -first;
}

std::string rotation_label(int sign) { return sign > 0 ? "R+" : "R-"; }

}  // namespace

std::string to_string(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::kWmqmr:
      return "wmqmr";
    case SchemeKind::kQfbc:
      return "qfbc";
    case SchemeKind::kQffcPostSelected:
      return "qffc_ps";
    case SchemeKind::kQffcRotation:
      return "qffc_rot";
    case SchemeKind::kWmppf:
      return "wmppf";
    case SchemeKind::kComposite:
      return "composite";
    case SchemeKind::kEntWmqmr:
      return "ent_wmqmr";
  }
  return "unknown";
}

SchemeKind parse_scheme_kind(const std::string& text) {
  std::string t = text;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  for (SchemeKind k : {SchemeKind::kWmqmr, SchemeKind::kQfbc, SchemeKind::kQffcPostSelected,
                       SchemeKind::kQffcRotation, SchemeKind::kWmppf, SchemeKind::kComposite,
                       SchemeKind::kEntWmqmr}) {
    if (to_string(k) == t) return k;
  }
  throw DomainError("unknown scheme '" + text + "'");
}

std::string to_string(SignBinding binding) { return binding == SignBinding::kPlus ? "+" : "-"; }

double matched_reversal_strength(double p1, double r) {
  require_in_range(p1, 0.0, 1.0, "p1");
  require_in_range(r, 0.0, 1.0, "r");
  return 1.0 - (1.0 - p1) * (1.0 - r);
}

double matched_post_strength(double p) {
  require_in_range(p, 0.0, 1.0, "p");
  if (p <= 0.5) return 0.0;
  return (2.0 * p - 1.0) / p;
}

SchemeResult run_wmqmr(const DensityMatrix& rho_in, const KrausChannel& noise, double p1,
                       std::optional<double> p2) {
  require_single_qubit(rho_in, noise);
  const double reversal = p2.value_or(matched_reversal_strength(p1, noise.r()));
  const PartialMeasurement wm = wm_map(p1);
  const PartialMeasurement qmr = qmr_map(reversal);

  BranchEnsemble e = partial_measure(rho_in, wm);
  e = unravel(e, noise);
  e = partial_measure(e, qmr);
  return post_selected_result(rho_in, std::move(e));
}

SchemeResult run_wmqmr(const DensityMatrix& rho_in, double r, double p1, std::optional<double> p2) {
  return run_wmqmr(rho_in, ad_kraus(r), p1, p2);
}

SchemeResult run_qfbc(const DensityMatrix& rho_in, const KrausChannel& noise, const QfbcParams& params) {
  require_single_qubit(rho_in, noise);
  const MeasurementPair pair =
      params.beta ? povm_generalized(params.theta, *params.beta) : povm_axis(params.meas_axis, params.theta);
  const int first = params.binding == SignBinding::kPlus ? +1 : -1;
  const std::array<Rotation, 2> rots = {rotation(params.rot_axis, params.eta, first),
                                        rotation(params.rot_axis, params.eta, -first)};

  ComplexMatrix completeness(2);
  for (std::size_t k = 0; k < 2; ++k) {
    const ComplexMatrix rm = rots[k].matrix * pair.ops[k];
    completeness += rm.adjoint() * rm;
  }
  if (max_abs_diff(completeness, ComplexMatrix::identity(2)) > 1e-12) {
    throw DomainError("feedback map is not trace preserving");
  }

  BranchEnsemble e = unravel(BranchEnsemble(rho_in), noise);
  e = measure(e, pair);
  for (Branch& b : e.branches()) {
    const std::size_t k = b.label.ends_with(pair.labels[0]) ? 0 : 1;
    b.state = conjugate_by(rots[k].matrix, b.state);
    b.label = join_label(b.label, rotation_label(rots[k].sign));
  }
  return deterministic_result(rho_in, std::move(e));
}

SchemeResult run_qffc_ps(const DensityMatrix& rho_in, const KrausChannel& noise, double p,
                         std::optional<double> p_u, std::optional<double> p_v) {
  require_single_qubit(rho_in, noise);
  const MeasurementPair pre = pre_wm_pair(p);
  const double matched = matched_post_strength(p);
  const auto [n1, w1] = post_wm_ops(p_u.value_or(matched), p_v.value_or(matched));

  BranchEnsemble all;
  for (std::size_t k = 0; k < 2; ++k) {
    append(all, partial_measure(feed_forward_path(rho_in, noise, pre, k), k == 0 ? n1 : w1));
  }
  return post_selected_result(rho_in, std::move(all));
}

SchemeResult run_qffc_ps(const DensityMatrix& rho_in, double r, double p, std::optional<double> p_u,
                         std::optional<double> p_v) {
  return run_qffc_ps(rho_in, ad_kraus(r), p, p_u, p_v);
}

SchemeResult run_qffc_rot(const DensityMatrix& rho_in, const KrausChannel& noise, double p, double eta,
                          SignBinding binding) {
  require_single_qubit(rho_in, noise);
  const MeasurementPair pre = pre_wm_pair(p);
  BranchEnsemble all;
  for (std::size_t k = 0; k < 2; ++k) {
    const Rotation rot = rotation(Axis::kY, eta, path_sign(k, binding));
    append(all, apply_unitary(feed_forward_path(rho_in, noise, pre, k), rot.matrix, rotation_label(rot.sign)));
  }
  return deterministic_result(rho_in, std::move(all));
}

SchemeResult run_wmppf(const DensityMatrix& rho_in, const KrausChannel& noise, double p) {
  SchemeResult res = run_qffc_rot(rho_in, noise, p, 0.0, SignBinding::kPlus);
  res.success_prob = 1.0;
  return res;
}

SchemeResult run_composite(const DensityMatrix& rho_in, const KrausChannel& noise, double p,
                           std::optional<double> p_u, std::optional<double> p_v, double eta,
                           SignBinding binding) {
  require_single_qubit(rho_in, noise);
  require_in_range(eta, 0.0, kHalfPi, "rotation angle eta");
  const MeasurementPair pre = pre_wm_pair(p);
  const double matched = matched_post_strength(p);
  const auto [n1, w1] = post_wm_ops(p_u.value_or(matched), p_v.value_or(matched));

  BranchEnsemble all;
  for (std::size_t k = 0; k < 2; ++k) {
    BranchEnsemble e = partial_measure(feed_forward_path(rho_in, noise, pre, k), k == 0 ? n1 : w1);
    const Rotation rot = rotation(Axis::kY, eta, path_sign(k, binding));
    append(all, apply_unitary(e, rot.matrix, rotation_label(rot.sign)));
  }
  return post_selected_result(rho_in, std::move(all));
}

SchemeResult run_ent_wmqmr(const DensityMatrix& rho_2q, double r1, double r2, double p1,
                           std::optional<double> p2, ProtectedSide side) {
  if (rho_2q.dim() != 4) throw DomainError("entanglement protection needs a two-qubit state");
  require_in_range(p1, 0.0, 1.0, "p1");
  const std::array<double, 2> damping = {r1, r2};
  const std::vector<int> protected_qubits =
      side == ProtectedSide::kOne ? std::vector<int>{1} : std::vector<int>{1, 2};

  BranchEnsemble e(rho_2q);
  for (int q : protected_qubits) e = partial_measure(e, lift_local(wm_map(p1), q));
  e = unravel(e, lift_local(ad_kraus(r1), 1));
  e = unravel(e, lift_local(ad_kraus(r2), 2));
  for (int q : protected_qubits) {
    const double reversal = p2.value_or(matched_reversal_strength(p1, damping[q - 1]));
    e = partial_measure(e, lift_local(qmr_map(reversal), q));
  }

  SchemeResult res = post_selected_result(rho_2q, std::move(e));
  res.concurrence = res.output_state ? concurrence(*res.output_state) : 0.0;
  return res;
}

SchemeResult run_scheme(const SchemeSpec& spec, const DensityMatrix& rho_in) {
  const SchemeParams& q = spec.params;
  switch (spec.kind) {
    case SchemeKind::kWmqmr:
      return run_wmqmr(rho_in, spec.noise, q.p1.value_or(0.0), q.p2);
    case SchemeKind::kQfbc:
      return run_qfbc(rho_in, spec.noise,
                      QfbcParams{q.meas_axis, q.theta.value_or(kHalfPi), q.rot_axis, q.eta.value_or(0.0),
                                 q.binding, q.beta});
    case SchemeKind::kQffcPostSelected:
      return run_qffc_ps(rho_in, spec.noise, q.p.value_or(0.5), q.p_u, q.p_v);
    case SchemeKind::kQffcRotation:
      return run_qffc_rot(rho_in, spec.noise, q.p.value_or(0.5), q.eta.value_or(0.0), q.binding);
    case SchemeKind::kWmppf:
      return run_wmppf(rho_in, spec.noise, q.p.value_or(0.5));
    case SchemeKind::kComposite:
      return run_composite(rho_in, spec.noise, q.p.value_or(0.5), q.p_u, q.p_v, q.eta.value_or(0.0),
                           q.binding);
    case SchemeKind::kEntWmqmr:
      if (spec.noise.kind() != ChannelKind::kAmplitudeDamping) {
        throw DomainError("ent_wmqmr is defined for amplitude damping only");
      }
      return run_ent_wmqmr(rho_in, spec.noise.r(), q.r2.value_or(spec.noise.r()), q.p1.value_or(0.0), q.p2,
                           q.side);
  }
  throw DomainError("unhandled scheme kind");
}

double pair_average_fidelity(const InitialState& s,
                             const std::function<SchemeResult(const DensityMatrix&)>& run) {
  double sum = 0.0;
  for (int sign : {+1, -1}) {
    InitialState member = s;
    member.pair_sign = sign;
    sum += run(state_from_angles(member)).fidelity;
  }
  return 0.5 * sum;
}

}  // namespace decoguard
