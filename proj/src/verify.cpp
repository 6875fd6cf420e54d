#include "diamond/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "diamond/entanglement.hpp"
#include "diamond/evolution.hpp"
#include "diamond/measurement.hpp"
#include "diamond/protocols.hpp"

namespace diamond::verify {

namespace {

using std::numbers::pi;

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  ClusterParams params() {
    return {uniform(-10, 10), uniform(-10, 10), uniform(-10, 10), uniform(-10, 10), uniform(-10, 10)};
  }

  double time() { return uniform(0.0, 10.0); }

  MeasurementDirection direction() { return {uniform(0.0, pi), uniform(0.0, 2 * pi)}; }

  SpinState spin() {
    const Complex a(uniform(-1, 1), uniform(-1, 1)), b(uniform(-1, 1), uniform(-1, 1));
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    return SpinState(a / n, b / n);
  }

  InitialProductState product_state() {
    const SpinState a = spin(), b = spin();
    const int side = static_cast<int>(uniform(0.0, 4.0)) & 3;
    return {a(0), a(1), b(0), b(1), side & 2 ? SpinLabel::Down : SpinLabel::Up,
            side & 1 ? SpinLabel::Down : SpinLabel::Up};
  }

 private:
  std::mt19937_64 rng_;
};

StateVector16 oracle_xplus(const ClusterParams &p, double t) {
  return evolve_oracle(build_hamiltonian(p).total(), xplus_initial_state(), t);
}

// Accumulates the worst value seen for one suite.
struct Tracker {
  SuiteResult result;
  void see(double v) { result.worst = std::max(result.worst, std::isfinite(v) ? v : INFINITY); }
};

Tracker suite(const char *name, double tolerance) { return {{name, 0.0, tolerance}}; }

}  // namespace

std::vector<SuiteResult> run_all(const Options &options) {
  const auto psi3 = options.psi3_concurrence ? options.psi3_concurrence
                                             : std::function<double(double, double, double, double)>(
                                                   concurrence_psi3);
  Sampler rng(options.seed);
  std::vector<SuiteResult> out;

  auto commutators = suite("commutators", 1e-13);
  auto residuals = suite("eigen-residuals", 1e-12);
  auto spectrum = suite("spectrum-match", 1e-10);
  for (int k = 0; k < options.trials; ++k) {
    const ClusterParams p = rng.params();
    commutators.see(commutator_norms(p).max());
    const Matrix16 H = build_hamiltonian(p).total();
    std::vector<double> analytic;
    for (const auto &pair : analytic_eigensystem(p)) {
      residuals.see((H * pair.state.amplitudes() - pair.energy * pair.state.amplitudes()).norm());
      analytic.push_back(pair.energy);
    }
    std::sort(analytic.begin(), analytic.end());
    const Propagator prop(H);
    for (int n = 0; n < 16; ++n) spectrum.see(std::abs(analytic[n] - prop.energies()(n)));
  }
  out.insert(out.end(), {commutators.result, residuals.result, spectrum.result});

  auto stationary = suite("stationary-evolution", 1e-10);
  auto xplus = suite("xplus-evolution", 1e-10);
  for (int k = 0; k < options.trials; ++k) {
    const ClusterParams p = rng.params();
    const double t = rng.time();
    const InitialProductState init = rng.product_state();
    const StateVector16 full = evolve_oracle(build_hamiltonian(p).total(), init.full_state(), t);
    stationary.see(phase_distance(evolve_stationary_sides(p, init, t),
                                  central_slice(full, init.side_index())));

    const DecomposedState dec = evolve_xplus_decomposed(p, t);
    const StateVector16 oracle = oracle_xplus(p, t);
    xplus.see(phase_distance(dec.from_central_branches(), oracle));
    xplus.see(phase_distance(dec.from_side_branches(), oracle));
  }
  out.insert(out.end(), {stationary.result, xplus.result});

  auto c_stationary = suite("concurrence-stationary", 1e-10);
  auto c_xy = suite("concurrence-xy", 1e-10);
  auto c_xi = suite("concurrence-xi", 1e-10);
  auto c_psi3 = suite("concurrence-psi3", 1e-10);
  for (int k = 0; k < options.trials; ++k) {
    const ClusterParams p = rng.params();
    const double t = rng.time();
    const Matrix16 H = build_hamiltonian(p).total();

    const InitialProductState init = rng.product_state();
    const StateVector16 full = evolve_oracle(H, init.full_state(), t);
    c_stationary.see(std::abs(concurrence_stationary(p, init, t) -
                              concurrence_pure(central_slice(full, init.side_index()))));

    const double phi1 = rng.uniform(0, 2 * pi), phi2 = rng.uniform(0, 2 * pi);
    const double r = 1.0 / std::sqrt(2.0);
    const InitialProductState plane(r, r * std::polar(1.0, phi1), r, r * std::polar(1.0, phi2));
    const StateVector16 plane_t = evolve_oracle(H, plane.full_state(), t);
    c_xy.see(std::abs(concurrence_xy(p.J, p.Jz, phi1 - phi2, t) -
                      concurrence_pure(central_slice(plane_t, plane.side_index()))));

    const StateVector16 psi = evolve_oracle(H, xplus_initial_state(), t);
    for (const auto &rec : measure_pair(psi, MeasuredPair::Sides, {0.0, 0.0}))
      c_xi.see(std::abs(concurrence_xi(p.J, p.Jz, t) - concurrence_pure(rec.post_state())));

    const auto bell = measure_pair(psi, MeasuredPair::Sides, bell_direction(p.h, t));
    c_psi3.see(std::abs(psi3(p.J, p.Jz, p.J0, t) - concurrence_pure(bell[3].post_state())));
  }
  // |sin(Jt)| special case over Jt in [0, 4pi].
  auto c_sin = suite("concurrence-sin-Jt", 1e-12);
  {
    const ClusterParams p{1.0, 0.7, 0.4, 0.3, 0.2};
    const InitialProductState init(1.0, 0.0, 0.0, 1.0);
    const Propagator prop(build_hamiltonian(p).total());
    for (int k = 0; k <= 400; ++k) {
      const double t = 4 * pi * k / 400.0;
      const double c = concurrence_pure(central_slice(prop.evolve(init.full_state(), t), 0));
      c_sin.see(std::abs(c - std::abs(std::sin(p.J * t))));
    }
  }
  out.insert(out.end(), {c_stationary.result, c_xy.result, c_xi.result, c_psi3.result, c_sin.result});

  auto table1 = suite("table1-probabilities", 1e-12);
  auto table2 = suite("table2-probabilities", 1e-12);
  auto table2_states = suite("table2-states", 1e-10);
  auto sides_z = suite("side-z-branches", 1e-12);
  for (int k = 0; k < options.trials; ++k) {
    const ClusterParams p = rng.params();
    const double t = rng.time();
    const StateVector16 psi = oracle_xplus(p, t);
    for (const auto &rec : measure_pair(psi, MeasuredPair::Sides, {0.0, 0.0}))
      table1.see(std::abs(rec.probability() - 0.25));

    const MeasurementDirection d = rng.direction();
    const SideMeasurementClosedForm closed = side_measurement_closed_form(p, d, t);
    for (const auto &rec : measure_pair(psi, MeasuredPair::Sides, d)) {
      const ClosedFormBranch &branch = closed.branch_for(rec.outcome());
      table2.see(std::abs(rec.probability() - branch.probability()));
      if (rec.reachable() && branch.state && rec.probability() > 1e-6)
        table2_states.see(phase_distance(rec.post_state(), *branch.state));
    }

    // Measuring the centrals along z: ++ -> phi1, +- and -+ -> phi2, -- -> phi3
    // with probabilities 1/4, 1/2, 1/4 and product post states.
    const MeasurementRecords centrals = measure_pair(psi, MeasuredPair::Centrals, {0.0, 0.0});
    sides_z.see(std::abs(centrals[0].probability() - 0.25));
    sides_z.see(std::abs(centrals[1].probability() + centrals[2].probability() - 0.5));
    sides_z.see(std::abs(centrals[3].probability() - 0.25));
    sides_z.see(phase_distance(centrals[1].post_state(), centrals[2].post_state()));
    for (const auto &rec : centrals) sides_z.see(concurrence_pure(rec.post_state()));
  }
  out.insert(out.end(), {table1.result, table2.result, table2_states.result, sides_z.result});

  auto closure = suite("bell-closure", 1e-12);
  auto curves = suite("bell-curves-vs-oracle", 1e-10);
  for (int k = 0; k < options.trials; ++k) {
    ClusterParams p = rng.params();
    const double t = rng.time();
    const BellFidelities f = bell_fidelity_curves(p.J0, t);
    closure.see(std::abs(f.f1 + 2 * f.f2 + f.f3 - 1.0));
    const auto recs = measure_pair(oracle_xplus(p, t), MeasuredPair::Sides, bell_direction(p.h, t));
    curves.see(std::abs(recs[0].probability() - f.f1));
    curves.see(std::abs(recs[1].probability() - f.f2));
    curves.see(std::abs(recs[2].probability() - f.f2));
    curves.see(std::abs(recs[3].probability() - f.f3));
  }
  out.insert(out.end(), {closure.result, curves.result});

  auto recipes = suite("bell-recipes", 1e-9);
  for (int k = 0; k < options.trials; ++k) {
    ClusterParams p = rng.params();
    if (std::abs(p.J0) < 0.5) p.J0 = std::copysign(0.5, p.J0 == 0.0 ? 1.0 : p.J0);
    struct Case {
      BellTarget target;
      RecipeOptions opts;
    };
    const Case cases[] = {
        {BellTarget::PsiPlus, {}},
        {BellTarget::PhiPlus, {}},
        {BellTarget::PhiMinus, {}},
        {BellTarget::PhiPlus, {BellRoute::PlusMinus, 1, std::nullopt}},
        {BellTarget::PhiMinus, {BellRoute::PlusMinus, 1, std::nullopt}},
        {BellTarget::PhiPlus, {BellRoute::PlusMinus, 3, 3}},
        {BellTarget::PhiMinus, {BellRoute::PlusMinus, 3, std::nullopt}},
    };
    for (const auto &c : cases) {
      const ProtocolRecipe recipe = prepare_bell_on_centrals(p, c.target, c.opts);
      const RecipeExecution run = execute_recipe(p, recipe);
      recipes.see(std::abs(run.fidelity - recipe.expected_fidelity));
      recipes.see(std::abs(run.probability - recipe.expected_probability));
    }
  }
  out.push_back(recipes.result);
  return out;
}

bool all_passed(const std::vector<SuiteResult> &results) {
  return std::all_of(results.begin(), results.end(), [](const SuiteResult &r) { return r.passed(); });
}

void print_report(std::ostream &os, const std::vector<SuiteResult> &results) {
  char line[160];
  for (const auto &r : results) {
    std::snprintf(line, sizeof line, "%-26s worst=%.3e  tol=%.0e  %s\n", r.name.c_str(), r.worst,
                  r.tolerance, r.passed() ? "PASS" : "FAIL");
    os << line;
  }
}

}  // namespace diamond::verify
