#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "diamond/hamiltonian.hpp"

namespace diamond {

/// Spherical angles of a measurement axis; both spins of a pair are measured
/// along the same axis.
struct MeasurementDirection {
  double theta = 0.0;  // polar, [0, pi]
  double phi = 0.0;    // azimuth, [0, 2pi)

  /// Folds arbitrary angles into the canonical ranges without changing the
  /// measured axis (the basis kets change at most by a global phase).
  static MeasurementDirection canonical(double theta, double phi);
};

/// Wraps an angle into [0, 2pi).
double wrap_angle(double a);

enum class Outcome { Plus = 0, Minus = 1 };

struct PairOutcome {
  Outcome first = Outcome::Plus;
  Outcome second = Outcome::Plus;

  int index() const { return 2 * static_cast<int>(first) + static_cast<int>(second); }
  static PairOutcome from_index(int i);
  friend bool operator==(const PairOutcome &, const PairOutcome &) = default;
};

/// "++", "+-", "-+", "--"
const char *to_string(PairOutcome o);

enum class MeasuredPair { Sides, Centrals };

struct DirectionBasis {
  SpinState plus;
  SpinState minus;
};

/// |+> = cos(theta/2)|Up> + sin(theta/2)e^{i phi}|Down>,
/// |-> = -sin(theta/2)e^{-i phi}|Up> + cos(theta/2)|Down>.
DirectionBasis direction_basis(const MeasurementDirection &d);

/// Coefficients of `s` over |++>, |+->, |-+>, |--> of direction d.
TwoQubitState pair_basis_change(const TwoQubitState &s, const MeasurementDirection &d);

/// One outcome of a pair measurement. The post-measurement state belongs to
/// the pair that was NOT measured.
class MeasurementRecord {
 public:
  static constexpr double kReachableThreshold = 1e-12;

  MeasurementRecord(PairOutcome outcome, double probability, std::optional<TwoQubitState> post);

  PairOutcome outcome() const { return outcome_; }
  double probability() const { return probability_; }
  bool reachable() const { return post_.has_value(); }

  /// Throws std::logic_error for an unreachable outcome.
  const TwoQubitState &post_state() const;

 private:
  PairOutcome outcome_;
  double probability_;
  std::optional<TwoQubitState> post_;
};

using MeasurementRecords = std::array<MeasurementRecord, 4>;

/// Projective measurement of one pair along d; records in ++, +-, -+, -- order.
MeasurementRecords measure_pair(const StateVector16 &psi, MeasuredPair pair,
                                const MeasurementDirection &d);

/// Draws a single Born outcome with a generator seeded from `seed`.
MeasurementRecord sample_measurement(const StateVector16 &psi, MeasuredPair pair,
                                     const MeasurementDirection &d, std::uint64_t seed);

/// Outcomes whose post states coincide up to phase, with summed probability.
struct BranchGroup {
  std::vector<PairOutcome> outcomes;
  double probability = 0.0;
  TwoQubitState state;
};

std::vector<BranchGroup> merge_equivalent(const MeasurementRecords &records, double tol = 1e-10);

/// Closed-form central-pair states after measuring the side pair of the
/// evolved all-|+x> state along d:
///   ++ -> psi1, +- and -+ -> psi2, -- -> psi3,
/// with amplitude A_i normalizing each branch and outcome probability
/// 1 / (16 A_i^2). A branch with vanishing norm has A = +inf and no state.
struct ClosedFormBranch {
  double amplitude;
  std::optional<TwoQubitState> state;

  double probability() const;
};

struct SideMeasurementClosedForm {
  ClosedFormBranch psi1, psi2, psi3;

  const ClosedFormBranch &branch_for(PairOutcome o) const;
};

SideMeasurementClosedForm side_measurement_closed_form(const ClusterParams &p,
                                                       const MeasurementDirection &d, double t);

}  // namespace diamond
