#pragma once

#include "diamond/evolution.hpp"

namespace diamond {

/// Pure-state concurrence 2|ad - bc|, in [0, 1] for normalized input.
double concurrence_pure(const TwoQubitState &s);

/// |<u|v>|^2
template <int Dim>
double fidelity(const StateVector<Dim> &u, const StateVector<Dim> &v) {
  return std::norm(inner(u, v));
}

/// Runtime-sized variant; throws std::invalid_argument on a dimension mismatch.
double fidelity(const Eigen::VectorXcd &u, const Eigen::VectorXcd &v);

// Closed-form concurrence and probability curves. They exist alongside the
// simulated pipeline so sweeps can evaluate them without a 16-dim evolution.

/// Concurrence of the stationary-side central-pair state at time t.
double concurrence_stationary(const ClusterParams &p, const InitialProductState &init, double t);

/// Stationary-side concurrence for central spins prepared in the xy plane
/// with azimuths differing by dphi.
double concurrence_xy(double J, double Jz, double dphi, double t);

/// Concurrence shared by the three central branches after a z measurement
/// of the side pair: |sin((Jz - J) t / 2)|.
double concurrence_xi(double J, double Jz, double t);

/// Concurrence of the -- branch under the Bell measurement condition.
double concurrence_psi3(double J, double Jz, double J0, double t);

/// Outcome probabilities under the Bell measurement condition.
///
/// f1 is the ++ outcome, f2 each of +- and -+ (they share one post state),
/// f3 the -- outcome; f1 + 2 f2 + f3 = 1.
struct BellFidelities {
  double f1, f2, f3;

  /// Probability of landing in the shared +-/-+ state, 2 f2.
  double mixed_branch() const { return 2 * f2; }
};

BellFidelities bell_fidelity_curves(double J0, double t);

}  // namespace diamond
