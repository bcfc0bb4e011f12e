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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "decoguard/channels.hpp"
#include "decoguard/optimizer.hpp"
#include "decoguard/schemes.hpp"

namespace decoguard::cli {

/// Parses an angle in radians, or as a multiple of pi with a "pi" suffix
/// ("0.25pi", "pi", "-0.5pi"). Throws DomainError on malformed text.
double parse_angle(const std::string& text);

/// Reads "key = value" lines; '#' starts a comment, blank lines are skipped.
/// Throws DomainError for lines without '=' or an unreadable file.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::filesystem::path& path);

/// %.12g without locale influence; negative zero prints as 0.
std::string format_number(double v);

/// Writes to path.tmp, then renames over path.
void write_file_atomically(const std::filesystem::path& path, const std::string& content);

inline constexpr const char* kSweepHeader =
    "alpha,phi,r,noise,f_qfbc,f_qffc,f_diff,theta_opt,eta_opt,meas_axis,rot_axis,p_opt";

/// One header line plus one line per row, '\n' terminated.
std::string sweep_csv(const SweepResult& sweep);

/// File name of one fig6 surface, e.g. "fig6_ad_phi_0.25pi.csv".
std::string fig6_file_name(ChannelKind noise, double phi);

/// Everything a command needs, after config-file and flag merging.
struct RunConfig {
  std::string command;
  std::string scheme_kind = "qfbc";
  std::string noise_kind = "ad";
  std::string state = "";
  std::optional<double> alpha, phi, r, lambda, gamma, time;
  std::optional<double> theta, eta, beta, p, p1, p2, p_u, p_v, r2;
  int pair_sign = +1;
  std::string meas_axis = "y";
  std::string rot_axis = "z";
  std::string binding = "+";
  std::string side = "one";
  std::string bell = "phi";
  std::size_t theta_steps = 30;
  std::size_t eta_steps = 30;
  std::size_t alpha_count = 30;
  std::size_t r_count = 30;
  double r_max = 0.999;
  std::string output;
  std::uint64_t seed = 20240607;
  std::size_t threads = 0;
  std::string kernel = "auto";
};

/// Grid built from a config's step counts.
GridSpec grid_from_config(const RunConfig& cfg);

int cmd_channel(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_scheme(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_fig6(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full command-line entry point; args excludes the program name.
/// Returns 0 on success, 1 on usage or domain errors, 2 on I/O failure,
/// 3 when a self-check on the produced numbers fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace decoguard::cli
