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

#include "decoguard/instruments.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include "decoguard/error.hpp"
#include "decoguard/hermitian_eig.hpp"

namespace decoguard {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

std::pair<Spinor, Spinor> axis_eigenstates(Axis axis) {
  const double r = std::numbers::sqrt2 / 2;
  switch (axis) {
    case Axis::kX:
      return {Spinor{r, r}, Spinor{r, -r}};
    case Axis::kY:
      return {Spinor{r, Complex(0, r)}, Spinor{r, Complex(0, -r)}};
    case Axis::kZ:
      break;
  }
  return {Spinor{1.0, 0.0}, Spinor{0.0, 1.0}};
}

ComplexMatrix projector(const Spinor& v) { return ComplexMatrix::outer(v.data(), v.data(), 2); }

}  // namespace

std::string to_string(Axis axis) {
  switch (axis) {
    case Axis::kX:
      return "x";
    case Axis::kY:
      return "y";
    case Axis::kZ:
      return "z";
  }
  return "z";
}

Axis parse_axis(const std::string& text) {
  std::string t = text;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "x") return Axis::kX;
  if (t == "y") return Axis::kY;
  if (t == "z") return Axis::kZ;
  throw DomainError("unknown axis '" + text + "' (expected x, y or z)");
}

MeasurementPair povm_axis(Axis axis, double theta) {
  require_in_range(theta, 0.0, kHalfPi, "measurement angle theta");
  const auto [up, down] = axis_eigenstates(axis);
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  const ComplexMatrix p_up = projector(up);
  const ComplexMatrix p_down = projector(down);
  MeasurementPair pair;
  pair.ops = {p_up * Complex(c) + p_down * Complex(s), p_up * Complex(s) + p_down * Complex(c)};
  pair.labels = {"+", "-"};
  pair.family = MeasurementPair::Family::kAxis;
  pair.axis = axis;
  pair.theta = theta;
  return pair;
}

MeasurementPair povm_generalized(double theta, double beta) {
  require_in_range(theta, 0.0, kHalfPi, "measurement angle theta");
  if (!std::isfinite(beta)) throw DomainError("phase beta must be finite");
  const double c = std::cos(theta / 2);
  const Complex weak = std::polar(std::sin(theta / 2), beta);
  MeasurementPair pair;
  pair.ops = {ComplexMatrix::diagonal({c, weak}), ComplexMatrix::diagonal({weak, c})};
  pair.labels = {"+", "-"};
  pair.family = MeasurementPair::Family::kGeneralized;
  pair.axis = Axis::kZ;
  pair.theta = theta;
  pair.beta = beta;
  return pair;
}

MeasurementPair pre_wm_pair(double p) {
  require_in_range(p, 0.0, 1.0, "pre-measurement strength p");
  const double a = std::sqrt(p);
  const double b = std::sqrt(1.0 - p);
  MeasurementPair pair;
  pair.ops = {ComplexMatrix::diagonal({a, b}), ComplexMatrix::diagonal({b, a})};
  pair.labels = {"M1", "M2"};
  pair.family = MeasurementPair::Family::kPreWeak;
  pair.axis = Axis::kZ;
  // p = cos^2(theta/2) only has a theta in [0, pi/2] for p >= 1/2.
  pair.theta = 2.0 * std::acos(std::clamp(a, 0.0, 1.0));
  return pair;
}

PartialMeasurement wm_map(double p1) {
  require_in_range(p1, 0.0, 1.0, "weak-measurement strength p1");
  return {ComplexMatrix::diagonal({1.0, std::sqrt(1.0 - p1)}), p1, PartialMeasurement::Role::kWeak};
}

PartialMeasurement qmr_map(double p2) {
  require_in_range(p2, 0.0, 1.0, "reversal strength p2");
  return {ComplexMatrix::diagonal({std::sqrt(1.0 - p2), 1.0}), p2, PartialMeasurement::Role::kReversal};
}

std::pair<PartialMeasurement, PartialMeasurement> post_wm_ops(double p_u, double p_v) {
  require_in_range(p_u, 0.0, 1.0, "post-measurement strength p_u");
  require_in_range(p_v, 0.0, 1.0, "post-measurement strength p_v");
  return {{ComplexMatrix::diagonal({std::sqrt(1.0 - p_u), 1.0}), p_u, PartialMeasurement::Role::kPostWeakN},
          {ComplexMatrix::diagonal({1.0, std::sqrt(1.0 - p_v)}), p_v, PartialMeasurement::Role::kPostWeakW}};
}

std::pair<ComplexMatrix, ComplexMatrix> flips() { return {ComplexMatrix::identity(2), pauli::x()}; }

ComplexMatrix rotation_matrix(Axis axis, double signed_eta) {
  const double c = std::cos(signed_eta / 2);
  const double s = std::sin(signed_eta / 2);
  switch (axis) {
    case Axis::kX:
      return ComplexMatrix(2, {c, Complex(0, -s), Complex(0, -s), c});
    case Axis::kY:
      return ComplexMatrix(2, {c, -s, s, c});
    case Axis::kZ:
      break;
  }
  return ComplexMatrix::diagonal({Complex(c, s), Complex(c, -s)});
}

Rotation rotation(Axis axis, double eta, int sign) {
  require_in_range(eta, 0.0, kHalfPi, "rotation angle eta");
  if (sign != 1 && sign != -1) throw DomainError("rotation sign must be +1 or -1");
  return Rotation{axis, eta, sign, rotation_matrix(axis, sign * eta)};
}

BranchEnsemble measure(const BranchEnsemble& in, const MeasurementPair& pair) {
  std::vector<Branch> out;
  for (const Branch& b : in.branches()) {
    if (!b.accepted) {
      out.push_back(b);
      continue;
    }
    if (b.state.dim() != pair.ops[0].dim()) throw DomainError("measurement and state dimensions differ");
    for (std::size_t k = 0; k < 2; ++k) {
      out.push_back(Branch{join_label(b.label, pair.labels[k]), conjugate_by(pair.ops[k], b.state), true});
    }
  }
  return BranchEnsemble(std::move(out));
}

BranchEnsemble measure(const DensityMatrix& rho, const MeasurementPair& pair) {
  return measure(BranchEnsemble(rho), pair);
}

BranchEnsemble partial_measure(const BranchEnsemble& in, const PartialMeasurement& pm) {
  const std::size_t n = pm.op.dim();
  const HermitianEigen eig = eig_hermitian(pm.op.adjoint() * pm.op);
  if (eig.values.front() > 1.0 + 1e-12) throw DomainError("partial measurement operator exceeds identity");
  const ComplexMatrix complement =
      spectral_apply(eig, [](double l) { return std::sqrt(std::clamp(1.0 - l, 0.0, 1.0)); });

  std::vector<Branch> out;
  for (const Branch& b : in.branches()) {
    if (!b.accepted) {
      out.push_back(b);
      continue;
    }
    if (b.state.dim() != n) throw DomainError("measurement and state dimensions differ");
    out.push_back(Branch{join_label(b.label, "accept"), conjugate_by(pm.op, b.state), true});
    out.push_back(Branch{join_label(b.label, "reject"), conjugate_by(complement, b.state), false});
  }
  return BranchEnsemble(std::move(out));
}

BranchEnsemble partial_measure(const DensityMatrix& rho, const PartialMeasurement& pm) {
  return partial_measure(BranchEnsemble(rho), pm);
}

PartialMeasurement lift_local(const PartialMeasurement& pm, int qubit) {
  if (pm.op.dim() != 2) throw DomainError("lift_local expects a single-qubit operator");
  if (qubit != 1 && qubit != 2) throw DomainError("qubit index must be 1 or 2");
  const ComplexMatrix id = ComplexMatrix::identity(2);
  return {qubit == 1 ? tensor(pm.op, id) : tensor(id, pm.op), pm.strength, pm.role};
}

}  // namespace decoguard
