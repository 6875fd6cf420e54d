// Command-line front end: eigen, evolve, measure, bell, verify, sweep.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error or
// unsupported target.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diamond/entanglement.hpp"
#include "diamond/evolution.hpp"
#include "diamond/manifest.hpp"
#include "diamond/measurement.hpp"
#include "diamond/protocols.hpp"
#include "diamond/sweep.hpp"
#include "diamond/verify.hpp"

namespace {

using namespace diamond;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

const std::vector<std::string> kCommands{"eigen", "evolve", "measure", "bell", "verify", "sweep"};

void add_param_options(CLI::App *cmd, ClusterParams &p) {
  cmd->add_option("--J", p.J, "XY coupling of the central pair")->capture_default_str();
  cmd->add_option("--Jz", p.Jz, "z coupling of the central pair")->capture_default_str();
  cmd->add_option("--J0", p.J0, "Ising coupling between central and side spins")->capture_default_str();
  cmd->add_option("--h", p.h, "field on the side pair")->capture_default_str();
  cmd->add_option("--hp", p.hp, "field on the central pair")->capture_default_str();
}

std::string ket_label(int index) {
  const SpinTuple s = decode(BasisIndex{index});
  auto c = [](SpinLabel l) { return l == SpinLabel::Up ? 'u' : 'd'; };
  return std::string("|") + c(s.s1) + c(s.s2) + c(s.sa) + c(s.sb) + ">";
}

std::string format_complex(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%+.6f%+.6fi", z.real(), z.imag());
  return buf;
}

std::string pair_amplitudes(const TwoQubitState &s) {
  std::string out;
  for (int k = 0; k < 4; ++k) out += (k ? " " : "") + format_complex(s[k]);
  return out;
}

template <int Dim>
std::string expansion(const StateVector<Dim> &v, std::string (*label)(int)) {
  std::string out;
  for (int k = 0; k < Dim; ++k) {
    if (std::abs(v[k]) < 1e-12) continue;
    if (!out.empty()) out += " ";
    out += "(" + format_complex(v[k]) + ")" + label(k);
  }
  return out;
}

int run_eigen(const ClusterParams &p) {
  const Matrix16 H = build_hamiltonian(p).total();
  double worst = 0.0;
  int n = 1;
  std::printf("%-3s %-14s %-10s %s\n", "n", "energy", "residual", "state");
  for (const auto &pair : analytic_eigensystem(p)) {
    const double residual =
        (H * pair.state.amplitudes() - pair.energy * pair.state.amplitudes()).norm();
    worst = std::max(worst, residual);
    std::printf("%-3d %-+14.9f %-10.2e %s\n", n++, pair.energy, residual,
                expansion(pair.state, ket_label).c_str());
  }
  std::printf("max residual %.3e\n", worst);
  return worst < 1e-12 ? kExitOk : kExitVerifyFailed;
}

int run_evolve(const ClusterParams &p, double t, const std::string &out_path, RunManifest manifest) {
  const DecomposedState dec = evolve_xplus_decomposed(p, t);
  const StateVector16 oracle = evolve_oracle(build_hamiltonian(p).total(), xplus_initial_state(), t);
  const char *names[] = {"1", "2", "3"};
  for (int k = 0; k < 3; ++k)
    std::printf("xi%s  C=%.9f  %s\n", names[k], concurrence_pure(dec.xi[k]),
                pair_amplitudes(dec.xi[k]).c_str());
  for (int k = 0; k < 3; ++k)
    std::printf("phi%s C=%.9f  %s\n", names[k], concurrence_pure(dec.phi[k]),
                pair_amplitudes(dec.phi[k]).c_str());
  const double distance = std::max(phase_distance(dec.from_central_branches(), oracle),
                                   phase_distance(dec.from_side_branches(), oracle));
  std::printf("closed form vs propagator: %.3e\n", distance);

  if (!out_path.empty()) {
    const std::filesystem::path path(out_path);
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
    out << "index,ket,re,im\n";
    for (int k = 0; k < 16; ++k)
      out << k << "," << ket_label(k) << "," << format_value(oracle[k].real()) << ","
          << format_value(oracle[k].imag()) << "\n";
    manifest.outputs = {out_path};
    manifest.write_alongside_outputs();
  }
  return distance < 1e-10 ? kExitOk : kExitVerifyFailed;
}

int run_measure(const ClusterParams &p, const std::string &pair_name, double theta, double phi,
                double t, std::optional<std::uint64_t> seed) {
  const MeasuredPair pair = pair_name == "sides" ? MeasuredPair::Sides : MeasuredPair::Centrals;
  const MeasurementDirection d = MeasurementDirection::canonical(theta, phi);
  const StateVector16 psi = evolve_oracle(build_hamiltonian(p).total(), xplus_initial_state(), t);
  std::printf("%-3s %-12s %-12s %s\n", "out", "probability", "concurrence", "post state");
  for (const auto &rec : measure_pair(psi, pair, d)) {
    if (rec.reachable())
      std::printf("%-3s %-12.9f %-12.9f %s\n", to_string(rec.outcome()), rec.probability(),
                  concurrence_pure(rec.post_state()), pair_amplitudes(rec.post_state()).c_str());
    else
      std::printf("%-3s %-12.9f %-12s unreachable\n", to_string(rec.outcome()), rec.probability(),
                  "-");
  }
  if (seed) {
    const MeasurementRecord drawn = sample_measurement(psi, pair, d, *seed);
    std::printf("sampled %s (seed %llu)\n", to_string(drawn.outcome()),
                static_cast<unsigned long long>(*seed));
  }
  return kExitOk;
}

BellTarget parse_target(const std::string &name) {
  for (BellTarget t : {BellTarget::PhiPlus, BellTarget::PhiMinus, BellTarget::PsiPlus,
                       BellTarget::PsiMinus})
    if (name == to_string(t)) return t;
  throw CLI::ValidationError("--target", "unknown Bell target '" + name + "'");
}

BellRoute parse_route(const std::string &name) {
  if (name == "default") return BellRoute::Default;
  if (name == "plus-plus") return BellRoute::PlusPlus;
  if (name == "plus-minus") return BellRoute::PlusMinus;
  if (name == "minus-minus") return BellRoute::MinusMinus;
  throw CLI::ValidationError("--branch", "unknown branch '" + name + "'");
}

int run_bell(const ClusterParams &p, const std::string &target_name, const std::string &branch,
             int quarter, std::optional<int> n) {
  const BellTarget target = parse_target(target_name);
  const ProtocolRecipe recipe =
      prepare_bell_on_centrals(p, target, {parse_route(branch), quarter, n});
  const RecipeExecution run = execute_recipe(p, recipe);
  std::printf("target            %s\n", to_string(recipe.target));
  std::printf("measure           side pair along theta=%.9f phi=%.9f\n",
              recipe.measure_direction.theta, recipe.measure_direction.phi);
  std::printf("time              %.9f\n", recipe.time);
  std::printf("hp                %.9f (n=%d)\n", recipe.required_hp, recipe.field_index);
  std::printf("branch            %s%s\n", to_string(recipe.required_branch),
              recipe.accepts_mirror_branch ? " (and mirror)" : "");
  std::printf("probability       %.9f (expected %.9f)\n", run.probability,
              recipe.expected_probability);
  std::printf("fidelity          %.12f (expected %.12f)\n", run.fidelity, recipe.expected_fidelity);
  std::printf("concurrence       %.12f\n", run.concurrence);
  std::printf("central state     %s\n", pair_amplitudes(run.state).c_str());
  const bool ok = std::abs(run.fidelity - recipe.expected_fidelity) < 1e-9 &&
                  std::abs(run.probability - recipe.expected_probability) < 1e-9;
  return ok ? kExitOk : kExitVerifyFailed;
}

int run_verify(int trials, std::uint64_t seed) {
  verify::Options options;
  options.trials = trials;
  options.seed = seed;
  const auto results = verify::run_all(options);
  verify::print_report(std::cout, results);
  const bool ok = verify::all_passed(results);
  std::cout << (ok ? "all suites passed" : "verification FAILED") << "\n";
  return ok ? kExitOk : kExitVerifyFailed;
}

struct SweepArgs {
  std::string quantity = "concurrence-xy";
  std::vector<std::string> axes;
  std::vector<std::string> fixed;
  std::string out;
  std::string preset;
  double dphi = 0.0;
  std::string out_dir = ".";
  unsigned threads = 1;
};

std::map<std::string, double> parse_fixed(const std::vector<std::string> &items) {
  std::map<std::string, double> fixed;
  for (const auto &item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw SweepError("--fixed expects key=value, got '" + item + "'");
    try {
      std::size_t used = 0;
      const double v = std::stod(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("trailing characters");
      fixed[item.substr(0, eq)] = v;
    } catch (const std::logic_error &) {
      throw SweepError("--fixed: bad number in '" + item + "'");
    }
  }
  return fixed;
}

int run_sweep_command(const SweepArgs &args, RunManifest manifest) {
  std::vector<SweepConfig> configs;
  if (!args.preset.empty()) {
    if (!args.axes.empty() || !args.fixed.empty() || !args.out.empty())
      throw SweepError("--preset cannot be combined with --axis, --fixed or --out");
    configs = preset_configs(args.preset, {args.dphi, args.out_dir, args.threads});
    manifest.extra.emplace_back("preset", args.preset);
    manifest.extra.emplace_back("dphi", format_exact(args.dphi));
  } else {
    if (args.out.empty()) throw SweepError("--out is required without --preset");
    SweepConfig cfg;
    cfg.quantity = parse_quantity(args.quantity);
    for (const auto &a : args.axes) cfg.axes.push_back(parse_axis(a));
    cfg.fixed = parse_fixed(args.fixed);
    cfg.output_path = args.out;
    cfg.threads = args.threads;
    configs.push_back(cfg);
  }
  for (const auto &cfg : configs) validate(cfg);

  for (const auto &cfg : configs) {
    write_csv(run_sweep(cfg), cfg.output_path);
    RunManifest m = manifest;
    m.params = {0, 0, 0, 0, 0};
    auto get = [&](const char *k, double &dst) {
      if (auto it = cfg.fixed.find(k); it != cfg.fixed.end()) dst = it->second;
    };
    get("J", m.params.J);
    get("Jz", m.params.Jz);
    get("J0", m.params.J0);
    get("h", m.params.h);
    get("hp", m.params.hp);
    m.extra.emplace_back("quantity", to_string(cfg.quantity));
    for (const auto &axis : cfg.axes)
      m.extra.emplace_back("axis", axis.name + ":" + format_exact(axis.start) + ":" +
                                       format_exact(axis.stop) + ":" + std::to_string(axis.count));
    for (const auto &[key, value] : cfg.fixed) m.extra.emplace_back("fixed." + key, format_exact(value));
    m.extra.emplace_back("threads", std::to_string(cfg.threads));
    m.outputs = {cfg.output_path};
    m.write_alongside_outputs();
    std::printf("wrote %s\n", cfg.output_path.c_str());
  }
  return kExitOk;
}

// Splices `key = value` lines from --config into the argument list right
// after the subcommand, ahead of explicit flags so those win.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::optional<std::string> path;
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (args[k] == "--config" && k + 1 < args.size()) {
      path = args[k + 1];
      args.erase(args.begin() + k, args.begin() + k + 2);
      break;
    }
    if (args[k].rfind("--config=", 0) == 0) {
      path = args[k].substr(9);
      args.erase(args.begin() + k);
      break;
    }
  }
  if (!path) return args;
  std::size_t insert_at = args.size();
  for (std::size_t k = 0; k < args.size(); ++k)
    if (std::find(kCommands.begin(), kCommands.end(), args[k]) != kCommands.end()) {
      insert_at = k + 1;
      break;
    }
  std::vector<std::string> injected;
  for (const auto &[key, value] : read_key_values(*path))
    injected.push_back("--" + key + "=" + value);
  args.insert(args.begin() + static_cast<std::ptrdiff_t>(insert_at), injected.begin(),
              injected.end());
  return args;
}

}  // namespace

int main(int argc, char **argv) {
  std::vector<std::string> raw(argv + 1, argv + argc);
  try {
    raw = expand_config(raw);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App app{"Diamond spin cluster: exact dynamics, measurement and Bell-state protocols"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.set_help_flag("--help", "print this help message and exit");
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "flat key = value file with option defaults");

  ClusterParams params{1.0, 2.0, 1.0, 0.0, 0.0};
  double t = 1.0, theta = 0.0, phi = 0.0;
  std::string pair = "sides", target, branch = "default", evolve_out;
  int quarter = 1, trials = 100;
  std::optional<int> field_index;
  std::optional<std::uint64_t> sample_seed;
  std::uint64_t verify_seed = 7;
  SweepArgs sweep;

  auto *eigen = app.add_subcommand("eigen", "analytic eigenpairs and their residuals");
  add_param_options(eigen, params);

  auto *evolve = app.add_subcommand("evolve", "evolve the all-|+x> state and decompose it");
  add_param_options(evolve, params);
  evolve->add_option("--t", t, "evolution time")->capture_default_str();
  evolve->add_option("--out", evolve_out, "write the 16 amplitudes as CSV");

  auto *measure = app.add_subcommand("measure", "measure one pair of the evolved all-|+x> state");
  add_param_options(measure, params);
  measure->add_option("--pair", pair, "pair to measure")
      ->check(CLI::IsMember({"sides", "centrals"}))
      ->capture_default_str();
  measure->add_option("--theta", theta, "polar angle of the axis")->capture_default_str();
  measure->add_option("--phi", phi, "azimuth of the axis")->capture_default_str();
  measure->add_option("--t", t, "evolution time")->capture_default_str();
  measure->add_option("--seed", sample_seed, "draw one outcome with this seed");

  auto *bell = app.add_subcommand("bell", "prepare a Bell state on the central pair");
  add_param_options(bell, params);
  bell->add_option("--target", target, "phi-plus, phi-minus, psi-plus or psi-minus")->required();
  bell->add_option("--branch", branch, "default, plus-plus, plus-minus or minus-minus")
      ->check(CLI::IsMember({"default", "plus-plus", "plus-minus", "minus-minus"}))
      ->capture_default_str();
  bell->add_option("--quarter", quarter, "1 or 3 quarter periods on the plus-minus branch")
      ->check(CLI::IsMember({1, 3}))
      ->capture_default_str();
  bell->add_option("--n", field_index, "field index n in hp T = n pi / 2");

  auto *verify_cmd = app.add_subcommand("verify", "check closed forms against simulation");
  verify_cmd->add_option("--trials", trials, "random draws per suite")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify_seed, "generator seed")->capture_default_str();

  auto *sweep_cmd = app.add_subcommand("sweep", "evaluate a quantity over a grid and write CSV");
  sweep_cmd->add_option("--quantity", sweep.quantity, "quantity to tabulate")->capture_default_str();
  sweep_cmd->add_option("--axis", sweep.axes, "name:start:stop:count (one or two)")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  sweep_cmd->add_option("--fixed", sweep.fixed, "key=value held constant")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  sweep_cmd->add_option("--out", sweep.out, "output CSV path");
  sweep_cmd->add_option("--preset", sweep.preset, "fig2, fig3 or fig4");
  sweep_cmd->add_option("--dphi", sweep.dphi, "phase difference for fig2")->capture_default_str();
  sweep_cmd->add_option("--out-dir", sweep.out_dir, "directory for preset files")
      ->capture_default_str();
  sweep_cmd->add_option("--threads", sweep.threads, "worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::vector<std::string> reversed(raw.rbegin(), raw.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  RunManifest manifest;
  manifest.arguments = raw;
  manifest.params = params;
  try {
    if (eigen->parsed()) return run_eigen(params);
    if (evolve->parsed()) {
      manifest.command = "evolve";
      manifest.extra.emplace_back("t", format_exact(t));
      return run_evolve(params, t, evolve_out, manifest);
    }
    if (measure->parsed()) return run_measure(params, pair, theta, phi, t, sample_seed);
    if (bell->parsed()) return run_bell(params, target, branch, quarter, field_index);
    if (verify_cmd->parsed()) return run_verify(trials, verify_seed);
    manifest.command = "sweep";
    return run_sweep_command(sweep, manifest);
  } catch (const UnsupportedTarget &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ValidationError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SweepError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
}
