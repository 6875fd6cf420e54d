#include "diamond/protocols.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

namespace diamond {

using std::numbers::pi;

const char *to_string(BellTarget t) {
  switch (t) {
    case BellTarget::PhiPlus: return "phi-plus";
    case BellTarget::PhiMinus: return "phi-minus";
    case BellTarget::PsiPlus: return "psi-plus";
    case BellTarget::PsiMinus: return "psi-minus";
  }
  return "?";
}

TwoQubitState bell_state(BellTarget t) {
  const double r = 1.0 / std::sqrt(2.0);
  switch (t) {
    case BellTarget::PhiPlus: return {r, 0.0, 0.0, r};
    case BellTarget::PhiMinus: return {r, 0.0, 0.0, -r};
    case BellTarget::PsiPlus: return {0.0, r, r, 0.0};
    case BellTarget::PsiMinus: return {0.0, r, -r, 0.0};
  }
  throw std::invalid_argument("unknown Bell target");
}

MeasurementDirection bell_direction(double h, double t) {
  return {pi / 2, wrap_angle(h * t - pi)};
}

namespace {

// Smallest |n| with the requested parity.
int default_index(bool odd) { return odd ? 1 : 0; }

int checked_index(const RecipeOptions &options, bool odd) {
  if (!options.field_index) return default_index(odd);
  const int n = *options.field_index;
  if ((std::abs(n) % 2 == 1) != odd)
    throw std::invalid_argument("field index parity does not produce the requested Bell sign");
  return n;
}

}  // namespace

ProtocolRecipe prepare_bell_on_centrals(const ClusterParams &p, BellTarget target,
                                        const RecipeOptions &options) {
  if (target == BellTarget::PsiMinus)
    throw UnsupportedTarget("psi-minus: no recipe in source protocol family");
  if (p.J0 == 0.0 || !std::isfinite(p.J0))
    throw std::invalid_argument("Bell preparation needs a nonzero Ising coupling J0");

  const double J0 = std::abs(p.J0);
  BellRoute route = options.route;
  if (route == BellRoute::Default)
    route = target == BellTarget::PsiPlus ? BellRoute::MinusMinus : BellRoute::PlusPlus;

  const bool phi_target = target == BellTarget::PhiPlus || target == BellTarget::PhiMinus;
  if (phi_target == (route == BellRoute::MinusMinus))
    throw std::invalid_argument(std::string("route does not reach ") + to_string(target));

  ProtocolRecipe r{};
  r.target = target;
  r.pair_prepared = MeasuredPair::Centrals;
  r.expected_fidelity = 1.0;
  r.accepts_mirror_branch = false;

  switch (route) {
    case BellRoute::MinusMinus:
      // -- branch collapses onto the triplet once cos(J0 T / 2) = 0.
      r.time = pi / J0;
      r.required_hp = p.hp;
      r.field_index = 0;
      r.required_branch = {Outcome::Minus, Outcome::Minus};
      r.expected_probability = bell_fidelity_curves(J0, r.time).f3;
      break;
    case BellRoute::PlusPlus:
      // ++ branch is (|UpUp> + e^{2ih'T}|DownDown>)/sqrt2.
      r.time = pi / J0;
      r.field_index = checked_index(options, target == BellTarget::PhiMinus);
      r.required_branch = {Outcome::Plus, Outcome::Plus};
      r.expected_probability = bell_fidelity_curves(J0, r.time).f1;
      break;
    case BellRoute::PlusMinus:
      // +- branch is (|UpUp> - e^{2ih'T}|DownDown>)/sqrt2.
      if (options.quarter_period != 1 && options.quarter_period != 3)
        throw std::invalid_argument("quarter_period must be 1 or 3");
      r.time = options.quarter_period * pi / (2 * J0);
      r.field_index = checked_index(options, target == BellTarget::PhiPlus);
      r.required_branch = {Outcome::Plus, Outcome::Minus};
      r.accepts_mirror_branch = true;
      r.expected_probability = bell_fidelity_curves(J0, r.time).mixed_branch();
      break;
    case BellRoute::Default:
      break;
  }
  if (route != BellRoute::MinusMinus) r.required_hp = r.field_index * pi / (2 * r.time);
  r.measure_direction = bell_direction(p.h, r.time);
  return r;
}

ClusterParams recipe_params(const ClusterParams &p, const ProtocolRecipe &recipe) {
  ClusterParams q = p;
  q.hp = recipe.required_hp;
  return q;
}

RecipeExecution execute_recipe(const ClusterParams &p, const ProtocolRecipe &recipe) {
  const ClusterParams q = recipe_params(p, recipe);
  const StateVector16 psi =
      evolve_oracle(build_hamiltonian(q).total(), xplus_initial_state(), recipe.time);
  const MeasuredPair measured =
      recipe.pair_prepared == MeasuredPair::Centrals ? MeasuredPair::Sides : MeasuredPair::Centrals;
  const MeasurementRecords records = measure_pair(psi, measured, recipe.measure_direction);

  const MeasurementRecord &hit = records[recipe.required_branch.index()];
  double probability = hit.probability();
  if (recipe.accepts_mirror_branch) {
    const PairOutcome mirror{recipe.required_branch.second, recipe.required_branch.first};
    if (!(mirror == recipe.required_branch)) probability += records[mirror.index()].probability();
  }
  const TwoQubitState &state = hit.post_state();
  return {probability, fidelity(state, bell_state(recipe.target)), concurrence_pure(state), state,
          records};
}

MeasurementRecords prepare_on_sides(const ClusterParams &p, const MeasurementDirection &d,
                                    double t) {
  const StateVector16 psi = evolve_xplus_decomposed(p, t).from_side_branches();
  return measure_pair(psi, MeasuredPair::Centrals, d);
}

}  // namespace diamond
