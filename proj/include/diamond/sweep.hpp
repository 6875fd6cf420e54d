#pragma once

// Grid evaluation of closed-form curves and simulated quantities, written as
// deterministic CSV.
//
// Axes are named after the dimensionless products used on figure axes (Jt,
// Jzt, J0t) or after raw inputs (t, dphi, theta, phi). A product axis sets
// its coupling to value / t, with t taken from a `t` axis or the fixed map
// (default 1), so only the product matters for the closed forms.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "diamond/hamiltonian.hpp"

namespace diamond {

enum class SweepQuantity {
  ConcurrenceXY,
  ConcurrenceXi,
  ConcurrencePsi3,
  BellFidelities,
  OracleConcurrence,
  MeasureProbabilities,
};

const char *to_string(SweepQuantity q);
/// Accepts the enumerator name or its kebab-case form ("concurrence-xy").
SweepQuantity parse_quantity(const std::string &name);
std::vector<std::string> quantity_columns(SweepQuantity q);

struct SweepAxis {
  std::string name;
  double start = 0.0;
  double stop = 1.0;
  int count = 2;

  double value(int i) const;
};

/// Parses "name:start:stop:count".
SweepAxis parse_axis(const std::string &spec);

struct SweepConfig {
  SweepQuantity quantity = SweepQuantity::ConcurrenceXY;
  std::vector<SweepAxis> axes;
  /// Keys: J, Jz, J0, h, hp, t, dphi, theta, phi.
  std::map<std::string, double> fixed;
  std::string output_path;
  unsigned threads = 1;
};

class SweepError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws SweepError when the configuration is invalid.
void validate(const SweepConfig &cfg);

struct SweepTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  std::string to_csv() const;
};

/// Rows ordered lexicographically by axes (first axis outermost). Throws
/// SweepError for an invalid config or a non-finite value.
SweepTable run_sweep(const SweepConfig &cfg);

void write_csv(const SweepTable &table, const std::string &path);

/// Formats with 12 significant digits, as used in every CSV cell.
std::string format_value(double v);

struct PresetOptions {
  double dphi = 0.0;
  std::string out_dir = ".";
  unsigned threads = 1;
};

/// Grids behind the published figures: "fig2" (concurrence over Jt x Jzt at
/// one dphi), "fig3" (Bell branch probabilities over J0t), "fig4" (psi3
/// concurrence versus t at J0 = 1 for several anisotropies Jz - J).
std::vector<SweepConfig> preset_configs(const std::string &preset, const PresetOptions &options);

/// Anisotropy ratios (Jz - J)/J0 emitted by the fig4 preset.
const std::vector<double> &fig4_ratios();

}  // namespace diamond
