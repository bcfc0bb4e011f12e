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
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>
#include <system_error>

#include "CLI11.hpp"
#include "decoguard/cli.hpp"
#include "decoguard/error.hpp"
#include "decoguard/kernels.hpp"
#include "decoguard/metrics.hpp"

namespace decoguard::cli {
namespace {

constexpr const char* kAngleUnit = "(radians, or a multiple of pi such as 0.25pi)";
constexpr const char* kProbUnit = "(probability in [0, 1])";

int fail(std::ostream& err, const std::string& message, int code = 1) {
  err << "decoguard: " << message << '\n';
  return code;
}

// Writes to the configured path, or to out when no path is set.
void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty() || cfg.output == "-") {
    out << text;
  } else {
    write_file_atomically(cfg.output, text);
  }
}

ChannelKind parse_noise(const std::string& text) {
  if (text == "ad" || text == "AD") return ChannelKind::kAmplitudeDamping;
  if (text == "pd" || text == "PD") return ChannelKind::kPhaseDamping;
  throw DomainError("unknown noise kind '" + text + "' (expected ad or pd)");
}

std::string matrix_columns(const ComplexMatrix& m) {
  std::string s;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      s += ',' + format_number(m(i, j).real()) + ',' + format_number(m(i, j).imag());
    }
  }
  return s;
}

DensityMatrix named_state(const RunConfig& cfg) {
  const std::string& s = cfg.state;
  if (s.empty()) {
    if (cfg.alpha || cfg.phi) {
      return state_from_angles(InitialState{cfg.alpha.value_or(0.0), cfg.phi.value_or(0.0), cfg.pair_sign});
    }
    return bloch_to_density({1.0, 0.0, 0.0});
  }
  if (s == "+x") return bloch_to_density({1.0, 0.0, 0.0});
  if (s == "-x") return bloch_to_density({-1.0, 0.0, 0.0});
  if (s == "+y") return bloch_to_density({0.0, 1.0, 0.0});
  if (s == "-y") return bloch_to_density({0.0, -1.0, 0.0});
  if (s == "+z" || s == "ground" || s == "0") return bloch_to_density({0.0, 0.0, 1.0});
  if (s == "-z" || s == "excited" || s == "+z-excited" || s == "1") return bloch_to_density({0.0, 0.0, -1.0});
  if (s == "mixed") return bloch_to_density({0.0, 0.0, 0.0});
  if (s == "random") {
    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> normal;
    BlochVector b{normal(rng), normal(rng), normal(rng)};
    const double n = b.norm();
    return bloch_to_density({b.x / n, b.y / n, b.z / n});
  }
  throw DomainError("unknown state '" + s + "'");
}

DensityMatrix bell_state(const std::string& which) {
  const double h = std::sqrt(0.5);
  if (which == "phi") return DensityMatrix::pure(std::array<Complex, 4>{h, 0.0, 0.0, h});
  if (which == "psi") return DensityMatrix::pure(std::array<Complex, 4>{0.0, h, h, 0.0});
  throw DomainError("unknown Bell state '" + which + "' (expected phi or psi)");
}

SignBinding parse_binding(const std::string& text) {
  if (text == "+" || text == "plus") return SignBinding::kPlus;
  if (text == "-" || text == "minus") return SignBinding::kMinus;
  throw DomainError("binding must be + or -");
}

void apply_kernel_choice(const std::string& kernel) {
  if (kernel == "auto") return;
  if (kernel == "scalar") return kernels::set_backend(kernels::Backend::kScalar);
  if (kernel == "avx2") return kernels::set_backend(kernels::Backend::kAvx2);
  throw DomainError("unknown kernel '" + kernel + "' (expected auto, scalar or avx2)");
}

std::size_t worker_count(const RunConfig& cfg) {
  if (cfg.threads > 0) return cfg.threads;
  if (const char* env = std::getenv("DECO_GUARD_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<std::size_t>(n);
  }
  return 0;
}

// Self-checks shared by sweep and fig6.
std::string check_sweep(const SweepResult& sweep) {
  for (const SweepRow& row : sweep.rows) {
    const double fb = row.result.qfbc.fidelity;
    const double ff = row.result.qffc.fidelity;
    if (!(fb >= 0.0 && fb <= 1.0 && ff >= 0.0 && ff <= 1.0)) return "fidelity outside [0, 1]";
    if (row.r == 0.0 && std::abs(row.result.diff) > 1e-12) return "nonzero F_diff on the noiseless column";
  }
  return "";
}

}  // namespace

int cmd_channel(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const DensityMatrix input = named_state(cfg);
  const int forms = (cfg.r ? 1 : 0) + (cfg.lambda ? 1 : 0) + ((cfg.gamma || cfg.time) ? 1 : 0);
  if (forms != 1) return fail(err, "give exactly one of --r, --lambda, or --gamma with --time");

  const std::string& kind = cfg.noise_kind;
  std::optional<DensityMatrix> output;
  if (kind == "pd-flip") {
    if (cfg.gamma || cfg.time) return fail(err, "--gamma/--time apply to amplitude damping only");
    const double r = cfg.r ? *cfg.r : pd_lambda_to_r(*cfg.lambda);
    output = pd_flip(input, r);
  } else if (kind == "pd") {
    if (cfg.gamma || cfg.time) return fail(err, "--gamma/--time apply to amplitude damping only");
    const double r = cfg.r ? *cfg.r : pd_flip_to_kraus_r(pd_lambda_to_r(*cfg.lambda));
    output = apply_channel(input, pd_kraus(r));
  } else if (kind == "ad") {
    if (cfg.lambda) return fail(err, "--lambda applies to phase damping only");
    if (!cfg.r && !(cfg.gamma && cfg.time)) return fail(err, "--gamma needs --time");
    const double r = cfg.r ? *cfg.r : ad_rate_to_r(*cfg.gamma, *cfg.time);
    output = apply_channel(input, ad_kraus(r));
  } else {
    return fail(err, "unknown channel kind '" + kind + "' (expected pd, pd-flip or ad)");
  }

  std::string csv = "stage,re00,im00,re01,im01,re10,im10,re11,im11,x,y,z\n";
  for (const auto& [stage, rho] : {std::pair{"input", input}, std::pair{"output", *output}}) {
    const BlochVector b = density_to_bloch(rho);
    csv += std::string(stage) + matrix_columns(rho.mat()) + ',' + format_number(b.x) + ',' +
           format_number(b.y) + ',' + format_number(b.z) + '\n';
  }
  emit(cfg, out, csv);
  return 0;
}

int cmd_scheme(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const SchemeKind kind = parse_scheme_kind(cfg.scheme_kind);
  const double r = cfg.r.value_or(0.0);
  const bool two_qubit = kind == SchemeKind::kEntWmqmr;
  KrausChannel noise = cfg.noise_kind == "none" ? KrausChannel::identity(2)
                                                : make_noise(parse_noise(cfg.noise_kind), r);
  if (two_qubit && noise.kind() != ChannelKind::kAmplitudeDamping) {
    return fail(err, "ent_wmqmr runs under amplitude damping (--noise ad)");
  }

  SchemeParams q;
  q.meas_axis = parse_axis(cfg.meas_axis);
  q.rot_axis = parse_axis(cfg.rot_axis);
  q.binding = parse_binding(cfg.binding);
  if (cfg.side == "one") {
    q.side = ProtectedSide::kOne;
  } else if (cfg.side == "both") {
    q.side = ProtectedSide::kBoth;
  } else {
    return fail(err, "--side must be one or both");
  }

  // Resolve defaults up front so the printed row shows the values used.
  switch (kind) {
    case SchemeKind::kWmqmr:
    case SchemeKind::kEntWmqmr:
      q.p1 = cfg.p1.value_or(0.0);
      q.p2 = cfg.p2 ? cfg.p2 : std::optional<double>(matched_reversal_strength(*q.p1, noise.r()));
      if (two_qubit) {
        q.r2 = cfg.r2.value_or(r);
        // Per-qubit matching when both sides are protected and damping differs.
        if (!cfg.p2 && q.side == ProtectedSide::kBoth) q.p2.reset();
      }
      break;
    case SchemeKind::kQfbc:
      q.theta = cfg.theta.value_or(std::numbers::pi / 2);
      q.eta = cfg.eta.value_or(0.0);
      q.beta = cfg.beta;
      break;
    case SchemeKind::kQffcPostSelected:
    case SchemeKind::kComposite:
      q.p = cfg.p.value_or(0.5);
      q.p_u = cfg.p_u.value_or(matched_post_strength(*q.p));
      q.p_v = cfg.p_v.value_or(matched_post_strength(*q.p));
      if (kind == SchemeKind::kComposite) q.eta = cfg.eta.value_or(0.0);
      break;
    case SchemeKind::kQffcRotation:
      q.p = cfg.p.value_or(0.5);
      q.eta = cfg.eta.value_or(0.0);
      break;
    case SchemeKind::kWmppf:
      q.p = cfg.p.value_or(0.5);
      break;
  }

  const DensityMatrix input = two_qubit ? bell_state(cfg.bell) : named_state(cfg);
  const SchemeResult res = run_scheme(SchemeSpec{kind, noise, q}, input);

  const bool deterministic =
      kind == SchemeKind::kQfbc || kind == SchemeKind::kQffcRotation || kind == SchemeKind::kWmppf;
  auto opt = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string(); };
  const bool uses_axes = kind == SchemeKind::kQfbc;
  const bool uses_binding = uses_axes || kind == SchemeKind::kQffcRotation || kind == SchemeKind::kComposite;

  std::ostringstream row;
  row << "scheme,noise,r,alpha,phi,pair_sign,theta,eta,beta,p,p1,p2,p_u,p_v,meas_axis,rot_axis,binding,"
         "fidelity,success_prob,concurrence,branches\n";
  row << to_string(kind) << ',' << (cfg.noise_kind == "none" ? "none" : to_string(noise.kind())) << ','
      << format_number(r) << ',' << (two_qubit ? "" : opt(cfg.alpha.value_or(0.0))) << ','
      << (two_qubit ? "" : opt(cfg.phi.value_or(0.0))) << ',' << (two_qubit ? "" : std::to_string(cfg.pair_sign))
      << ',' << opt(q.theta) << ',' << opt(q.eta) << ',' << opt(q.beta) << ',' << opt(q.p) << ',' << opt(q.p1)
      << ',' << opt(q.p2) << ',' << opt(q.p_u) << ',' << opt(q.p_v) << ','
      << (uses_axes && !q.beta ? to_string(q.meas_axis) : "") << ',' << (uses_axes ? to_string(q.rot_axis) : "")
      << ',' << (uses_binding ? to_string(q.binding) : "") << ',' << format_number(res.fidelity) << ','
      << format_number(res.success_prob) << ',' << opt(res.concurrence) << ',' << res.branch_trace.summary()
      << '\n';
  emit(cfg, out, row.str());

  if (!(res.fidelity >= 0.0 && res.fidelity <= 1.0)) return fail(err, "self-check: fidelity outside [0, 1]", 3);
  if (!(res.success_prob >= 0.0 && res.success_prob <= 1.0)) {
    return fail(err, "self-check: success probability outside [0, 1]", 3);
  }
  if (deterministic && res.success_prob != 1.0) {
    return fail(err, "self-check: deterministic scheme lost probability", 3);
  }
  return 0;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  apply_kernel_choice(cfg.kernel);
  const GridSpec grid = grid_from_config(cfg);
  const SweepResult sweep = sweep_fig6(cfg.phi.value_or(0.0), parse_noise(cfg.noise_kind), grid, worker_count(cfg));
  emit(cfg, out, sweep_csv(sweep));
  if (const std::string problem = check_sweep(sweep); !problem.empty()) {
    return fail(err, "self-check: " + problem, 3);
  }
  return 0;
}

int cmd_fig6(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  apply_kernel_choice(cfg.kernel);
  const GridSpec grid = grid_from_config(cfg);
  const std::filesystem::path dir = std::filesystem::path(cfg.output.empty() ? "fig6" : cfg.output);
  std::filesystem::create_directories(dir);

  int status = 0;
  for (double phi : grid.phi_set) {
    for (ChannelKind noise : {ChannelKind::kAmplitudeDamping, ChannelKind::kPhaseDamping}) {
      const SweepResult sweep = sweep_fig6(phi, noise, grid, worker_count(cfg));
      const std::filesystem::path path = dir / fig6_file_name(noise, phi);
      write_file_atomically(path, sweep_csv(sweep));

      double lo = 1.0;
      double hi = -1.0;
      for (const SweepRow& row : sweep.rows) {
        lo = std::min(lo, row.result.diff);
        hi = std::max(hi, row.result.diff);
      }
      out << path.string() << ": " << sweep.rows.size() << " rows, f_diff in [" << format_number(lo) << ", "
          << format_number(hi) << "]\n";
      if (const std::string problem = check_sweep(sweep); !problem.empty()) {
        err << "decoguard: self-check failed for " << path.string() << ": " << problem << '\n';
        status = 3;
      }
    }
  }
  return status;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  // Pull out --config so its entries can be placed ahead of the flags;
  // with take-last semantics, flags on the command line then win.
  std::vector<std::string> args;
  std::optional<std::string> config_path;
  for (std::size_t i = 0; i < raw_args.size(); ++i) {
    const std::string& a = raw_args[i];
    if (a == "--config") {
      if (i + 1 >= raw_args.size()) return fail(err, "--config needs a file name");
      config_path = raw_args[++i];
    } else if (a.rfind("--config=", 0) == 0) {
      config_path = a.substr(9);
    } else {
      args.push_back(a);
    }
  }

  RunConfig cfg;
  std::optional<std::string> alpha, phi, lambda, theta, eta, beta;

  CLI::App app{"Weak-measurement state protection simulator", "decoguard"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  std::string config_help;
  auto add_config = [&](CLI::App* sub) {
    sub->add_option("--config", config_help, "Optional file of 'key = value' lines; flags override it");
  };
  auto add_out = [&](CLI::App* sub, const char* what) { sub->add_option("-o,--out", cfg.output, what); };
  auto add_state = [&](CLI::App* sub) {
    sub->add_option("--state", cfg.state,
                    "Named input: +x -x +y -y +z(ground) -z(excited, alias +z-excited) mixed random");
    sub->add_option("--alpha", alpha, std::string("Input polar angle in [0, pi/2] ") + kAngleUnit);
    sub->add_option("--phi", phi, std::string("Input azimuth in [0, 2pi) ") + kAngleUnit);
    sub->add_option("--pair_sign,--pair-sign", cfg.pair_sign, "Member of the nonorthogonal pair: 1 or -1")
        ->check(CLI::IsMember({1, -1}));
  };
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--theta_steps,--theta-steps", cfg.theta_steps,
                    "Measurement-angle grid: steps over [0, pi/2] (default 30, i.e. pi/60)");
    sub->add_option("--eta_steps,--eta-steps", cfg.eta_steps,
                    "Rotation-angle grid: steps over [0, pi/2] (default 30, i.e. pi/60)");
    sub->add_option("--alpha_count,--alpha-count", cfg.alpha_count, "Number of alpha points over [0, pi/2]");
    sub->add_option("--r_count,--r-count", cfg.r_count, "Number of damping points (last one is --r_max)");
    sub->add_option("--r_max,--r-max", cfg.r_max, std::string("Largest damping probability ") + kProbUnit)
        ->check(CLI::Range(0.0, 1.0));
    sub->add_option("--threads", cfg.threads,
                    "Worker threads (0: DECO_GUARD_THREADS or all cores); output does not depend on it");
    sub->add_option("--kernel", cfg.kernel, "Inner-loop kernel: auto, scalar or avx2");
  };
  auto prob = [&](CLI::App* sub, const char* name, std::optional<double>& field, const char* what) {
    sub->add_option(name, field, std::string(what) + ' ' + kProbUnit)->check(CLI::Range(0.0, 1.0));
  };

  CLI::App* channel = app.add_subcommand("channel", "Apply one damping channel and print states before/after");
  add_config(channel);
  channel->add_option("--kind", cfg.noise_kind, "pd (Kraus), pd-flip (r Z.Z + (1-r) id) or ad")->required();
  prob(channel, "--r", cfg.r, "Damping probability (pd-flip: at most 0.5)");
  channel->add_option("--lambda", lambda, std::string("Phase kick angle, r_flip = sin^2(lambda/2) ") + kAngleUnit);
  channel->add_option("--gamma", cfg.gamma, "AD decay rate (1/time), r = 1 - exp(-2 gamma t)");
  channel->add_option("--time", cfg.time, "AD evolution time (same time unit as 1/gamma)");
  add_state(channel);
  channel->add_option("--seed", cfg.seed, "Seed for --state random");
  add_out(channel, "CSV output file (default stdout)");

  CLI::App* scheme = app.add_subcommand("scheme", "Run one protection scheme and print fidelity and success");
  add_config(scheme);
  scheme->add_option("--scheme", cfg.scheme_kind, "wmqmr qfbc qffc_ps qffc_rot wmppf composite ent_wmqmr")
      ->required();
  scheme->add_option("--noise", cfg.noise_kind, "ad, pd or none");
  prob(scheme, "--r", cfg.r, "Damping probability (ent_wmqmr: qubit 1)");
  prob(scheme, "--r2", cfg.r2, "ent_wmqmr damping on qubit 2 (default --r)");
  add_state(scheme);
  scheme->add_option("--theta", theta, std::string("Measurement angle in [0, pi/2] ") + kAngleUnit);
  scheme->add_option("--eta", eta, std::string("Rotation angle in [0, pi/2] ") + kAngleUnit);
  scheme->add_option("--beta", beta, std::string("Phase of the generalized QFBC measurement ") + kAngleUnit);
  prob(scheme, "--p", cfg.p, "Pre-measurement strength");
  prob(scheme, "--p1", cfg.p1, "Weak-measurement strength");
  prob(scheme, "--p2", cfg.p2, "Reversal strength (default matched)");
  prob(scheme, "--p_u,--p-u", cfg.p_u, "Post-measurement N1 strength (default matched)");
  prob(scheme, "--p_v,--p-v", cfg.p_v, "Post-measurement W1 strength (default matched)");
  scheme->add_option("--meas_axis,--meas-axis", cfg.meas_axis, "QFBC measurement axis x, y or z");
  scheme->add_option("--rot_axis,--rot-axis", cfg.rot_axis, "QFBC rotation axis x, y or z");
  scheme->add_option("--binding", cfg.binding, "Which outcome gets +eta: + (first) or - (second)");
  scheme->add_option("--side", cfg.side, "ent_wmqmr: protect qubit one or both");
  scheme->add_option("--bell", cfg.bell, "ent_wmqmr input: phi (|00>+|11>) or psi (|01>+|10>)");
  add_out(scheme, "CSV output file (default stdout)");

  CLI::App* sweep = app.add_subcommand("sweep", "F_diff table over alpha x r for one phi and noise kind");
  add_config(sweep);
  sweep->add_option("--phi", phi, std::string("Input azimuth ") + kAngleUnit);
  sweep->add_option("--noise", cfg.noise_kind, "ad or pd");
  add_grid(sweep);
  add_out(sweep, "CSV output file (default stdout)");

  CLI::App* fig6 = app.add_subcommand("fig6", "All six F_diff surfaces (phi 0, pi/4, pi/2; AD and PD)");
  add_config(fig6);
  add_grid(fig6);
  add_out(fig6, "Output directory (default ./fig6)");

  try {
    std::vector<std::string> tokens;
    if (!args.empty()) tokens.push_back(args.front());
    if (config_path) {
      CLI::App* sub = args.empty() ? nullptr : app.get_subcommand_no_throw(args.front());
      if (sub == nullptr) return fail(err, "--config needs a command (channel, scheme, sweep, fig6)");
      for (const auto& [key, value] : read_config_file(*config_path)) {
        if (key == "config" || sub->get_option_no_throw("--" + key) == nullptr) {
          return fail(err, "unknown config key '" + key + "' for " + args.front());
        }
        tokens.push_back("--" + key);
        tokens.push_back(value);
      }
    }
    tokens.insert(tokens.end(), args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(tokens.begin(), tokens.end());
    app.parse(tokens);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return 0;
  } catch (const CLI::ParseError& e) {
    return fail(err, e.what());
  } catch (const DomainError& e) {
    return fail(err, e.what());
  } catch (const std::system_error& e) {
    return fail(err, e.what(), 2);
  }

  try {
    if (alpha) cfg.alpha = parse_angle(*alpha);
    if (phi) cfg.phi = parse_angle(*phi);
    if (lambda) cfg.lambda = parse_angle(*lambda);
    if (theta) cfg.theta = parse_angle(*theta);
    if (eta) cfg.eta = parse_angle(*eta);
    if (beta) cfg.beta = parse_angle(*beta);

    if (channel->parsed()) return cfg.command = "channel", cmd_channel(cfg, out, err);
    if (scheme->parsed()) return cfg.command = "scheme", cmd_scheme(cfg, out, err);
    if (sweep->parsed()) return cfg.command = "sweep", cmd_sweep(cfg, out, err);
    if (fig6->parsed()) return cfg.command = "fig6", cmd_fig6(cfg, out, err);
  } catch (const DomainError& e) {
    return fail(err, e.what());
  } catch (const std::system_error& e) {
    return fail(err, e.what(), 2);
  }
  return fail(err, "no command given");
}

}  // namespace decoguard::cli
