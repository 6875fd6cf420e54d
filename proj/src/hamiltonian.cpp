#include "diamond/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>

namespace diamond {

namespace {

// Sz of the spin stored at `shift` in a basis index.
double sz_at(int index, int shift) { return ((index >> shift) & 1) ? -0.5 : 0.5; }

constexpr int kShiftS1 = 3;
constexpr int kShiftS2 = 2;
constexpr int kShiftSa = 1;
constexpr int kShiftSb = 0;

}  // namespace

bool ClusterParams::is_finite() const {
  return std::isfinite(J) && std::isfinite(Jz) && std::isfinite(J0) && std::isfinite(h) &&
         std::isfinite(hp);
}

ClusterHamiltonian build_hamiltonian(const ClusterParams &p) {
  if (!p.is_finite()) throw std::invalid_argument("cluster parameters must be finite");

  ClusterHamiltonian H{Matrix16::Zero(), Matrix16::Zero(), Matrix16::Zero()};
  for (int k = 0; k < 16; ++k) {
    const double sa = sz_at(k, kShiftSa), sb = sz_at(k, kShiftSb);
    const double s1 = sz_at(k, kShiftS1), s2 = sz_at(k, kShiftS2);

    H.central(k, k) = p.Jz * sa * sb + p.hp * (sa + sb);
    H.sides(k, k) = p.h * (s1 + s2);
    H.interaction(k, k) = p.J0 * (sa + sb) * (s1 + s2);

    // J(SxSx + SySy) = (J/2)(S+S- + S-S+) flips an antiparallel central pair.
    if (sa != sb) {
      const int flipped = k ^ ((1 << kShiftSa) | (1 << kShiftSb));
      H.central(flipped, k) += 0.5 * p.J;
    }
  }
  return H;
}

std::array<EigenPair, 16> analytic_eigensystem(const ClusterParams &p) {
  const double r = 1.0 / std::sqrt(2.0);
  const std::array<TwoQubitState, 4> central_states{
      TwoQubitState::basis(0), TwoQubitState(0.0, r, r, 0.0), TwoQubitState(0.0, r, -r, 0.0),
      TwoQubitState::basis(3)};
  // Total Sz of the side pair for |UpUp>, |UpDown>, |DownUp>, |DownDown>.
  const std::array<double, 4> side_m{1.0, 0.0, 0.0, -1.0};

  std::array<EigenPair, 16> pairs;
  for (int side = 0; side < 4; ++side) {
    const double m = side_m[side];
    const double field = p.hp + p.J0 * m;  // effective field felt by the central pair
    const std::array<double, 4> central_energy{
        p.Jz / 4 + field, p.J / 2 - p.Jz / 4, -p.J / 2 - p.Jz / 4, p.Jz / 4 - field};
    for (int c = 0; c < 4; ++c) {
      pairs[4 * side + c] = {p.h * m + central_energy[c],
                             kron(TwoQubitState::basis(side), central_states[c])};
    }
  }
  return pairs;
}

double max_norm(const Matrix16 &m) { return m.cwiseAbs().maxCoeff(); }

double CommutatorNorms::max() const {
  return std::max({central_sides, central_interaction, sides_interaction});
}

CommutatorNorms commutator_norms(const ClusterParams &p) {
  const ClusterHamiltonian H = build_hamiltonian(p);
  auto comm = [](const Matrix16 &a, const Matrix16 &b) -> double {
    return max_norm(a * b - b * a);
  };
  return {comm(H.central, H.sides), comm(H.central, H.interaction),
          comm(H.sides, H.interaction)};
}

}  // namespace diamond
