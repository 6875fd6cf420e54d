#pragma once

#include <array>

#include "diamond/hamiltonian.hpp"

namespace diamond {

/// exp(-iHt) applied through a cached Hermitian eigendecomposition,
/// U exp(-i Lambda t) U^dagger. Immutable once built.
class Propagator {
 public:
  explicit Propagator(const Matrix16 &H);

  StateVector16 evolve(const StateVector16 &psi0, double t) const;

  const Eigen::Matrix<double, 16, 1> &energies() const { return energies_; }
  const Matrix16 &eigenvectors() const { return vectors_; }

 private:
  Eigen::Matrix<double, 16, 1> energies_;
  Matrix16 vectors_;
};

StateVector16 evolve_oracle(const Matrix16 &H, const StateVector16 &psi0, double t);

/// |s1 s2>_12 (C1|Up> + C2|Down>)_a (C3|Up> + C4|Down>)_b with the side pair
/// in an Sz eigenstate, so it never evolves.
class InitialProductState {
 public:
  /// Throws std::invalid_argument unless |C1|^2+|C2|^2 = |C3|^2+|C4|^2 = 1
  /// within 1e-9.
  InitialProductState(Complex C1, Complex C2, Complex C3, Complex C4,
                      SpinLabel s1 = SpinLabel::Up, SpinLabel s2 = SpinLabel::Up);

  Complex C1() const { return c_[0]; }
  Complex C2() const { return c_[1]; }
  Complex C3() const { return c_[2]; }
  Complex C4() const { return c_[3]; }
  SpinLabel s1() const { return s1_; }
  SpinLabel s2() const { return s2_; }

  /// Index 0..3 of the side ket within the pair basis.
  int side_index() const { return 2 * bit(s1_) + bit(s2_); }
  /// Sz_1 + Sz_2 of the side ket.
  double side_magnetization() const { return sz(s1_) + sz(s2_); }

  TwoQubitState central_state() const;
  StateVector16 full_state() const;

 private:
  std::array<Complex, 4> c_;
  SpinLabel s1_, s2_;
};

/// Closed-form central-pair factor at time t. The side ket only contributes
/// a global phase and the effective field J0 (Sz_1 + Sz_2).
TwoQubitState evolve_stationary_sides(const ClusterParams &p, const InitialProductState &init,
                                      double t);

/// |psi(t)> from the all-|+x> initial state, split two ways:
///   1/2 ( xi1 |UpUp>_12 + xi2 (|UpDown> + |DownUp>)_12 + xi3 |DownDown>_12 )
///   1/2 ( phi1 |UpUp>_ab + phi2 (|UpDown> + |DownUp>)_ab + phi3 |DownDown>_ab )
/// xi are states of the central pair, phi of the side pair; all normalized.
struct DecomposedState {
  std::array<TwoQubitState, 3> xi;
  std::array<TwoQubitState, 3> phi;
  double time = 0.0;

  StateVector16 from_central_branches() const;
  StateVector16 from_side_branches() const;
};

/// (|Up> + |Down>)/sqrt2 on all four spins.
StateVector16 xplus_initial_state();

DecomposedState evolve_xplus_decomposed(const ClusterParams &p, double t);

}  // namespace diamond
