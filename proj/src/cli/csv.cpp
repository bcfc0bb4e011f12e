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

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <system_error>

#include "decoguard/cli.hpp"
#include "decoguard/error.hpp"

namespace decoguard::cli {

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // drops the sign of -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

void write_file_atomically(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::system_error(errno, std::generic_category(), "cannot open " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw std::system_error(errno, std::generic_category(), "cannot write " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::system_error(ec, "cannot rename onto " + path.string());
  }
}

std::string sweep_csv(const SweepResult& sweep) {
  std::string out = kSweepHeader;
  out += '\n';
  for (const SweepRow& row : sweep.rows) {
    const Optimum& fb = row.result.qfbc;
    const Optimum& ff = row.result.qffc;
    out += format_number(row.alpha) + ',' + format_number(row.phi) + ',' + format_number(row.r) + ',' +
           to_string(row.noise) + ',' + format_number(fb.fidelity) + ',' + format_number(ff.fidelity) + ',' +
           format_number(row.result.diff) + ',' + format_number(fb.theta) + ',' + format_number(fb.eta) + ',' +
           to_string(fb.meas_axis) + ',' + to_string(fb.rot_axis) + ',' + format_number(ff.p) + '\n';
  }
  return out;
}

std::string fig6_file_name(ChannelKind noise, double phi) {
  std::string tag = to_string(noise);
  for (char& c : tag) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  const double turns = phi / std::numbers::pi;
  const std::string phi_text = turns == 0.0 ? "0" : format_number(std::round(turns * 1e6) / 1e6) + "pi";
  return "fig6_" + tag + "_phi_" + phi_text + ".csv";
}

}  // namespace decoguard::cli
