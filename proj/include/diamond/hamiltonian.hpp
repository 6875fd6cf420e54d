#pragma once

#include <array>

#include "diamond/hilbert.hpp"

namespace diamond {

using Matrix16 = Eigen::Matrix<Complex, 16, 16>;

/// Couplings and fields of the diamond cluster, hbar = 1 (angular-frequency units).
struct ClusterParams {
  double J = 0.0;   // XY exchange of the central pair
  double Jz = 0.0;  // zz exchange of the central pair
  double J0 = 0.0;  // Ising coupling between the central and side pairs
  double h = 0.0;   // field on the side spins
  double hp = 0.0;  // field on the central spins (h')

  bool is_finite() const;
  /// Same couplings with the two fields exchanged.
  ClusterParams with_fields_swapped() const { return {J, Jz, J0, hp, h}; }
};

/// H = H_ab + H_12 + H_int as dense matrices, spin operators S = sigma / 2.
struct ClusterHamiltonian {
  Matrix16 central;      // H_ab: J(SxSx + SySy) + Jz SzSz + h'(Sz_a + Sz_b)
  Matrix16 sides;        // H_12: h(Sz_1 + Sz_2)
  Matrix16 interaction;  // H_int: J0(Sz_a + Sz_b)(Sz_1 + Sz_2)

  Matrix16 total() const { return central + sides + interaction; }
};

/// Throws std::invalid_argument for non-finite parameters.
ClusterHamiltonian build_hamiltonian(const ClusterParams &p);

struct EigenPair {
  double energy;
  StateVector16 state;
};

/// The sixteen closed-form eigenpairs, psi_1 ... psi_16 in order.
///
/// Block n = 0..3 of four consecutive pairs fixes the side pair to
/// |UpUp>, |UpDown>, |DownUp>, |DownDown>; inside each block the central pair
/// runs over |UpUp>, triplet (|UpDown> + |DownUp>)/sqrt2,
/// singlet (|UpDown> - |DownUp>)/sqrt2, |DownDown>.
std::array<EigenPair, 16> analytic_eigensystem(const ClusterParams &p);

struct CommutatorNorms {
  double central_sides;
  double central_interaction;
  double sides_interaction;

  double max() const;
};

/// Max-norms of the three pairwise commutators of the Hamiltonian terms.
CommutatorNorms commutator_norms(const ClusterParams &p);

/// max_ij |A_ij|
double max_norm(const Matrix16 &m);

}  // namespace diamond
