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

#include <cerrno>
#include <charconv>
#include <fstream>
#include <numbers>
#include <system_error>

#include "decoguard/cli.hpp"
#include "decoguard/error.hpp"

namespace decoguard::cli {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_real(const std::string& text) {
  double v = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  if (!text.empty() && *begin == '+') ++begin;
  const auto res = std::from_chars(begin, end, v);
  if (res.ec != std::errc() || res.ptr != end) throw DomainError("not a number: '" + text + "'");
  return v;
}

}  // namespace

double parse_angle(const std::string& raw) {
  const std::string text = trim(raw);
  if (text.size() >= 2 && text.compare(text.size() - 2, 2, "pi") == 0) {
    const std::string factor = text.substr(0, text.size() - 2);
    if (factor.empty() || factor == "+") return std::numbers::pi;
    if (factor == "-") return -std::numbers::pi;
    return parse_real(factor) * std::numbers::pi;
  }
  return parse_real(text);
}

std::vector<std::pair<std::string, std::string>> read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::system_error(errno, std::generic_category(), "cannot read config file " + path.string());
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw DomainError(path.string() + ":" + std::to_string(number) + ": expected 'key = value'");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw DomainError(path.string() + ":" + std::to_string(number) + ": empty key");
    entries.emplace_back(std::move(key), std::move(value));
  }
  return entries;
}

GridSpec grid_from_config(const RunConfig& cfg) {
  if (cfg.theta_steps == 0 || cfg.eta_steps == 0) throw DomainError("angle grids need at least one step");
  if (cfg.alpha_count == 0 || cfg.r_count == 0) throw DomainError("sweep grids need at least one point");
  GridSpec g = GridSpec::defaults();
  g.theta_grid = GridSpec::angle_grid(cfg.theta_steps);
  g.eta_grid = GridSpec::angle_grid(cfg.eta_steps);
  g.alpha_grid = cfg.alpha_count == 1 ? std::vector<double>{0.0} : GridSpec::angle_grid(cfg.alpha_count - 1);
  g.r_grid = GridSpec::damping_grid(cfg.r_count, cfg.r_max);
  return g;
}

}  // namespace decoguard::cli
