#include "diamond/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <thread>

#include "diamond/entanglement.hpp"
#include "diamond/evolution.hpp"
#include "diamond/measurement.hpp"

namespace diamond {

using std::numbers::pi;

namespace {

struct QuantityInfo {
  SweepQuantity quantity;
  const char *name;
  const char *kebab;
  std::vector<std::string> columns;
};

const std::vector<QuantityInfo> &quantity_table() {
  static const std::vector<QuantityInfo> table{
      {SweepQuantity::ConcurrenceXY, "ConcurrenceXY", "concurrence-xy", {"C"}},
      {SweepQuantity::ConcurrenceXi, "ConcurrenceXi", "concurrence-xi", {"C"}},
      {SweepQuantity::ConcurrencePsi3, "ConcurrencePsi3", "concurrence-psi3", {"C"}},
      {SweepQuantity::BellFidelities, "BellFidelities", "bell-fidelities", {"F1", "F2", "F3"}},
      {SweepQuantity::OracleConcurrence, "OracleConcurrence", "oracle-concurrence",
       {"C_pp", "C_pm", "C_mp", "C_mm"}},
      {SweepQuantity::MeasureProbabilities, "MeasureProbabilities", "measure-probabilities",
       {"P_pp", "P_pm", "P_mp", "P_mm"}},
  };
  return table;
}

const QuantityInfo &info(SweepQuantity q) {
  for (const auto &entry : quantity_table())
    if (entry.quantity == q) return entry;
  throw SweepError("unknown sweep quantity");
}

const std::set<std::string> kAxisNames{"Jt", "Jzt", "J0t", "dphi", "theta", "phi", "t"};
const std::set<std::string> kFixedNames{"J", "Jz", "J0", "h", "hp", "t", "dphi", "theta", "phi"};

struct SweepPoint {
  ClusterParams params;
  double t = 1.0;
  double dphi = 0.0;
  MeasurementDirection direction;
};

double lookup(const std::map<std::string, double> &m, const std::string &key, double fallback) {
  auto it = m.find(key);
  return it == m.end() ? fallback : it->second;
}

SweepPoint make_point(const SweepConfig &cfg, const std::vector<double> &coords) {
  std::map<std::string, double> axis_values;
  for (std::size_t k = 0; k < cfg.axes.size(); ++k) axis_values[cfg.axes[k].name] = coords[k];

  SweepPoint pt;
  const auto &f = cfg.fixed;
  pt.params = {lookup(f, "J", 0.0), lookup(f, "Jz", 0.0), lookup(f, "J0", 0.0),
               lookup(f, "h", 0.0), lookup(f, "hp", 0.0)};
  pt.t = lookup(axis_values, "t", lookup(f, "t", 1.0));
  pt.dphi = lookup(axis_values, "dphi", lookup(f, "dphi", 0.0));
  pt.direction = {lookup(axis_values, "theta", lookup(f, "theta", 0.0)),
                  lookup(axis_values, "phi", lookup(f, "phi", 0.0))};

  auto scaled = [&](const char *axis, double &coupling) {
    auto it = axis_values.find(axis);
    if (it != axis_values.end()) coupling = it->second / pt.t;
  };
  scaled("Jt", pt.params.J);
  scaled("Jzt", pt.params.Jz);
  scaled("J0t", pt.params.J0);
  return pt;
}

std::vector<double> evaluate(SweepQuantity q, const SweepPoint &pt) {
  const ClusterParams &p = pt.params;
  switch (q) {
    case SweepQuantity::ConcurrenceXY: return {concurrence_xy(p.J, p.Jz, pt.dphi, pt.t)};
    case SweepQuantity::ConcurrenceXi: return {concurrence_xi(p.J, p.Jz, pt.t)};
    case SweepQuantity::ConcurrencePsi3: return {concurrence_psi3(p.J, p.Jz, p.J0, pt.t)};
    case SweepQuantity::BellFidelities: {
      const BellFidelities f = bell_fidelity_curves(p.J0, pt.t);
      return {f.f1, f.f2, f.f3};
    }
    case SweepQuantity::OracleConcurrence:
    case SweepQuantity::MeasureProbabilities: {
      const StateVector16 psi = evolve_oracle(build_hamiltonian(p).total(), xplus_initial_state(), pt.t);
      const MeasurementRecords records = measure_pair(psi, MeasuredPair::Sides, pt.direction);
      std::vector<double> out;
      for (const auto &r : records) {
        if (q == SweepQuantity::MeasureProbabilities)
          out.push_back(r.probability());
        else  // unreachable branches have no state; reported as 0 (their P column is 0 too)
          out.push_back(r.reachable() ? concurrence_pure(r.post_state()) : 0.0);
      }
      return out;
    }
  }
  throw SweepError("unknown sweep quantity");
}

}  // namespace

const char *to_string(SweepQuantity q) { return info(q).name; }

SweepQuantity parse_quantity(const std::string &name) {
  for (const auto &entry : quantity_table())
    if (name == entry.name || name == entry.kebab) return entry.quantity;
  throw SweepError("unknown sweep quantity '" + name + "'");
}

std::vector<std::string> quantity_columns(SweepQuantity q) { return info(q).columns; }

double SweepAxis::value(int i) const {
  if (i == count - 1) return stop;
  return start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
}

SweepAxis parse_axis(const std::string &spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() != 4) throw SweepError("axis '" + spec + "' is not name:start:stop:count");
  try {
    std::size_t used = 0;
    SweepAxis axis{parts[0], std::stod(parts[1]), std::stod(parts[2]), std::stoi(parts[3], &used)};
    if (used != parts[3].size()) throw SweepError("axis count must be an integer");
    return axis;
  } catch (const std::logic_error &) {
    throw SweepError("axis '" + spec + "' has a malformed number");
  }
}

void validate(const SweepConfig &cfg) {
  if (cfg.axes.empty() || cfg.axes.size() > 2) throw SweepError("a sweep needs one or two axes");
  std::set<std::string> seen;
  for (const auto &axis : cfg.axes) {
    if (!kAxisNames.contains(axis.name)) throw SweepError("unknown axis name '" + axis.name + "'");
    if (!seen.insert(axis.name).second) throw SweepError("duplicate axis '" + axis.name + "'");
    if (axis.count < 2) throw SweepError("axis '" + axis.name + "' needs count >= 2");
    if (!std::isfinite(axis.start) || !std::isfinite(axis.stop))
      throw SweepError("axis '" + axis.name + "' has a non-finite range");
  }
  for (const auto &[key, value] : cfg.fixed) {
    if (!kFixedNames.contains(key)) throw SweepError("unknown fixed parameter '" + key + "'");
    if (!std::isfinite(value)) throw SweepError("fixed parameter '" + key + "' is not finite");
  }
  const bool product_axis = seen.contains("Jt") || seen.contains("Jzt") || seen.contains("J0t");
  if (product_axis) {
    if (seen.contains("t")) throw SweepError("a product axis (Jt, Jzt, J0t) cannot be combined with a t axis");
    if (lookup(cfg.fixed, "t", 1.0) == 0.0) throw SweepError("product axes need a nonzero fixed t");
  }
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string SweepTable::to_csv() const {
  std::string out;
  for (std::size_t k = 0; k < header.size(); ++k) {
    if (k) out += ',';
    out += header[k];
  }
  out += '\n';
  for (const auto &row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out += ',';
      out += format_value(row[k]);
    }
    out += '\n';
  }
  return out;
}

SweepTable run_sweep(const SweepConfig &cfg) {
  validate(cfg);

  const std::size_t outer = cfg.axes[0].count;
  const std::size_t inner = cfg.axes.size() == 2 ? cfg.axes[1].count : 1;
  const std::size_t total = outer * inner;

  SweepTable table;
  for (const auto &axis : cfg.axes) table.header.push_back(axis.name);
  for (const auto &col : quantity_columns(cfg.quantity)) table.header.push_back(col);
  table.rows.resize(total);

  auto coords_of = [&](std::size_t n) {
    std::vector<double> coords{cfg.axes[0].value(static_cast<int>(n / inner))};
    if (cfg.axes.size() == 2) coords.push_back(cfg.axes[1].value(static_cast<int>(n % inner)));
    return coords;
  };

  // Each worker fills a disjoint stride of rows; output order is fixed by index.
  const std::size_t workers = std::clamp<std::size_t>(cfg.threads, 1, 64);
  std::vector<std::exception_ptr> failures(workers);
  auto work = [&](std::size_t first) {
    try {
      for (std::size_t n = first; n < total; n += workers) {
        std::vector<double> row = coords_of(n);
        const std::vector<double> values = evaluate(cfg.quantity, make_point(cfg, row));
        row.insert(row.end(), values.begin(), values.end());
        table.rows[n] = std::move(row);
      }
    } catch (...) {
      failures[first] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (const auto &failure : failures)
    if (failure) std::rethrow_exception(failure);

  for (const auto &row : table.rows) {
    for (std::size_t k = cfg.axes.size(); k < row.size(); ++k) {
      if (std::isfinite(row[k])) continue;
      std::string where;
      for (std::size_t a = 0; a < cfg.axes.size(); ++a)
        where += (a ? ", " : "") + cfg.axes[a].name + "=" + format_value(row[a]);
      throw SweepError("non-finite " + table.header[k] + " at " + where);
    }
  }
  return table;
}

void write_csv(const SweepTable &table, const std::string &path) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw SweepError("cannot open '" + path + "' for writing");
  out << table.to_csv();
  if (!out) throw SweepError("failed writing '" + path + "'");
}

const std::vector<double> &fig4_ratios() {
  static const std::vector<double> ratios{0.5, 1.0, 2.0, 4.0};
  return ratios;
}

std::vector<SweepConfig> preset_configs(const std::string &preset, const PresetOptions &options) {
  const std::filesystem::path dir(options.out_dir);
  std::vector<SweepConfig> configs;
  if (preset == "fig2") {
    // Spacing pi/40 puts the (Jz -+ J)t = pi loci exactly on grid points.
    SweepConfig cfg;
    cfg.quantity = SweepQuantity::ConcurrenceXY;
    cfg.axes = {{"Jt", 0.0, 4 * pi, 161}, {"Jzt", 0.0, 4 * pi, 161}};
    cfg.fixed = {{"dphi", options.dphi}};
    cfg.output_path = (dir / ("fig2_dphi" + format_value(options.dphi) + ".csv")).string();
    configs.push_back(cfg);
  } else if (preset == "fig3") {
    SweepConfig cfg;
    cfg.quantity = SweepQuantity::BellFidelities;
    cfg.axes = {{"J0t", 0.0, 4 * pi, 401}};
    cfg.output_path = (dir / "fig3.csv").string();
    configs.push_back(cfg);
  } else if (preset == "fig4") {
    for (double ratio : fig4_ratios()) {
      SweepConfig cfg;
      cfg.quantity = SweepQuantity::ConcurrencePsi3;
      cfg.axes = {{"t", 0.0, 2 * pi, 2001}};
      cfg.fixed = {{"J0", 1.0}, {"J", 0.0}, {"Jz", ratio}};
      cfg.output_path = (dir / ("fig4_ratio" + format_value(ratio) + ".csv")).string();
      configs.push_back(cfg);
    }
  } else {
    throw SweepError("unknown preset '" + preset + "' (expected fig2, fig3 or fig4)");
  }
  for (auto &cfg : configs) cfg.threads = options.threads;
  return configs;
}

}  // namespace diamond
