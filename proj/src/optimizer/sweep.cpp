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
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "decoguard/error.hpp"
#include "decoguard/optimizer.hpp"

namespace decoguard {

KrausChannel make_noise(ChannelKind kind, double r) {
  switch (kind) {
    case ChannelKind::kAmplitudeDamping:
      return ad_kraus(r);
    case ChannelKind::kPhaseDamping:
      return pd_kraus(r);
    case ChannelKind::kCustom:
      break;
  }
  throw DomainError("sweeps support AD and PD noise only");
}

SweepResult sweep_fig6(double phi, ChannelKind noise_kind, const GridSpec& grid, std::size_t threads) {
  grid.validate_controls();
  make_noise(noise_kind, 0.0);
  const std::size_t n_alpha = grid.alpha_grid.size();
  const std::size_t n_r = grid.r_grid.size();
  const std::size_t cells = n_alpha * n_r;

  SweepResult result;
  result.rows.resize(cells);
  if (cells == 0) return result;

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, cells);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t cell = next.fetch_add(1);
      if (cell >= cells) return;
      try {
        SweepRow& row = result.rows[cell];
        row.alpha = grid.alpha_grid[cell / n_r];
        row.r = grid.r_grid[cell % n_r];
        row.phi = phi;
        row.noise = noise_kind;
        const DensityMatrix rho = state_from_angles(InitialState{row.alpha, phi, +1});
        row.result = f_diff(rho, make_noise(noise_kind, row.r), grid);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(cells);
        return;
      }
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return result;
}

}  // namespace decoguard
