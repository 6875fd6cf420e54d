#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "diamond/entanglement.hpp"
#include "diamond/measurement.hpp"

namespace diamond {

enum class BellTarget { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

const char *to_string(BellTarget t);

/// Phi+- = (|UpUp> +- |DownDown>)/sqrt2, Psi+- = (|UpDown> +- |DownUp>)/sqrt2.
TwoQubitState bell_state(BellTarget t);

/// The requested target has no recipe in this protocol family.
class UnsupportedTarget : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Side-pair measurement axis that confines the ++ branch to span{|UpUp>, |DownDown>}:
/// theta = pi/2 and phi = h t - pi (mod 2pi).
MeasurementDirection bell_direction(double h, double t);

/// Which measurement branch carries the prepared state.
enum class BellRoute {
  Default,     // ++ for Phi+-, -- for Psi+
  PlusPlus,    // Phi+- at T = pi/|J0|, probability 1/2
  PlusMinus,   // Phi+- at T = pi/(2|J0|) or 3pi/(2|J0|), probability 1/4 over +- and -+
  MinusMinus,  // Psi+ at T = pi/|J0|, probability 1/2
};

struct RecipeOptions {
  BellRoute route = BellRoute::Default;
  /// 1 or 3: selects T = pi/(2|J0|) or 3pi/(2|J0|) on the +- route.
  int quarter_period = 1;
  /// The integer n in h' T = n pi / 2. Its parity picks the Bell sign; when
  /// unset, the smallest |n| of the right parity is used.
  std::optional<int> field_index;
};

struct ProtocolRecipe {
  BellTarget target;
  MeasuredPair pair_prepared = MeasuredPair::Centrals;
  MeasurementDirection measure_direction;
  double time;
  double required_hp;
  int field_index;
  PairOutcome required_branch;
  /// The mirrored outcome (-+ for +-) leaves the same state and is accepted too.
  bool accepts_mirror_branch;
  double expected_probability;
  double expected_fidelity;
};

/// Recipe for a Bell state on the central pair by measuring the side pair of
/// the evolved all-|+x> state. The couplings J, Jz, h of `p` are kept; h' is
/// overridden by the recipe (except on the Psi+ route, where it is free).
///
/// Throws std::invalid_argument for J0 = 0 or an inconsistent route/target,
/// UnsupportedTarget for Psi-.
ProtocolRecipe prepare_bell_on_centrals(const ClusterParams &p, BellTarget target,
                                        const RecipeOptions &options = {});

struct RecipeExecution {
  double probability;  // summed over accepted branches
  double fidelity;     // to the target Bell state
  double concurrence;
  TwoQubitState state;
  MeasurementRecords records;
};

/// Runs the recipe through build_hamiltonian -> evolve_oracle -> measure_pair.
RecipeExecution execute_recipe(const ClusterParams &p, const ProtocolRecipe &recipe);

/// The cluster parameters a recipe actually runs with.
ClusterParams recipe_params(const ClusterParams &p, const ProtocolRecipe &recipe);

/// Measures the central pair of the evolved all-|+x> state along d and
/// returns the side-pair records.
MeasurementRecords prepare_on_sides(const ClusterParams &p, const MeasurementDirection &d,
                                    double t);

}  // namespace diamond
