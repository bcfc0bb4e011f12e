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

#include <cmath>
#include <numbers>

#include "decoguard/error.hpp"
#include "decoguard/optimizer.hpp"

namespace decoguard {

std::vector<double> GridSpec::angle_grid(std::size_t steps) {
  if (steps == 0) return {0.0};
  std::vector<double> out;
  out.reserve(steps + 1);
  for (std::size_t k = 0; k <= steps; ++k) {
    out.push_back(std::numbers::pi / 2 * (static_cast<double>(k) / static_cast<double>(steps)));
  }
  return out;
}

std::vector<double> GridSpec::damping_grid(std::size_t count, double r_max) {
  require_in_range(r_max, 0.0, 1.0, "r_max");
  if (count == 0) return {};
  if (count == 1) return {0.0};
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t k = 0; k + 1 < count; ++k) {
    out.push_back(static_cast<double>(k) / static_cast<double>(count - 1));
  }
  out.push_back(r_max);
  return out;
}

GridSpec GridSpec::defaults() {
  GridSpec g;
  g.theta_grid = angle_grid(30);
  g.eta_grid = angle_grid(30);
  g.alpha_grid = angle_grid(29);
  g.r_grid = damping_grid(30);
  g.phi_set = {0.0, std::numbers::pi / 4, std::numbers::pi / 2};
  return g;
}

std::vector<double> GridSpec::strength_grid() const {
  std::vector<double> out;
  out.reserve(theta_grid.size());
  for (double theta : theta_grid) {
    const double c = std::cos(theta / 2);
    out.push_back(c * c);
  }
  return out;
}

void GridSpec::validate_controls() const {
  if (theta_grid.empty() || eta_grid.empty()) throw DomainError("control grid is empty");
  if (meas_axes.empty() || rot_axes.empty()) throw DomainError("axis set is empty");
  for (double t : theta_grid) require_in_range(t, 0.0, std::numbers::pi / 2, "theta grid entry");
  for (double e : eta_grid) require_in_range(e, 0.0, std::numbers::pi / 2, "eta grid entry");
}

}  // namespace decoguard
