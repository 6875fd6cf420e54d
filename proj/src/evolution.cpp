#include "diamond/evolution.hpp"

#include <cmath>
#include <stdexcept>

namespace diamond {

namespace {

using namespace std::complex_literals;

Complex phase(double angle) { return std::polar(1.0, angle); }

}  // namespace

Propagator::Propagator(const Matrix16 &H) {
  Eigen::SelfAdjointEigenSolver<Matrix16> solver(H);
  if (solver.info() != Eigen::Success) throw std::runtime_error("Hermitian eigensolver failed");
  energies_ = solver.eigenvalues();
  vectors_ = solver.eigenvectors();
}

StateVector16 Propagator::evolve(const StateVector16 &psi0, double t) const {
  if (t == 0.0) return psi0;
  StateVector16::Amplitudes coeffs = vectors_.adjoint() * psi0.amplitudes();
  for (int n = 0; n < 16; ++n) coeffs(n) *= phase(-energies_(n) * t);
  return StateVector16(vectors_ * coeffs);
}

StateVector16 evolve_oracle(const Matrix16 &H, const StateVector16 &psi0, double t) {
  return Propagator(H).evolve(psi0, t);
}

InitialProductState::InitialProductState(Complex C1, Complex C2, Complex C3, Complex C4,
                                         SpinLabel s1, SpinLabel s2)
    : c_{C1, C2, C3, C4}, s1_(s1), s2_(s2) {
  constexpr double tol = 1e-9;
  if (std::abs(std::norm(C1) + std::norm(C2) - 1.0) > tol ||
      std::abs(std::norm(C3) + std::norm(C4) - 1.0) > tol)
    throw std::invalid_argument("initial spin amplitudes are not normalized");
}

TwoQubitState InitialProductState::central_state() const {
  return kron(SpinState(c_[0], c_[1]), SpinState(c_[2], c_[3]));
}

StateVector16 InitialProductState::full_state() const {
  return kron(TwoQubitState::basis(side_index()), central_state());
}

TwoQubitState evolve_stationary_sides(const ClusterParams &p, const InitialProductState &init,
                                      double t) {
  const double field = p.hp + p.J0 * init.side_magnetization();
  const Complex C1 = init.C1(), C2 = init.C2(), C3 = init.C3(), C4 = init.C4();
  const double c = std::cos(p.J * t / 2), s = std::sin(p.J * t / 2);
  const Complex mix = phase(p.Jz * t / 4);
  return {C1 * C3 * phase(-(p.Jz / 4 + field) * t),
          mix * (C1 * C4 * c - 1i * C2 * C3 * s),
          mix * (C2 * C3 * c - 1i * C1 * C4 * s),
          C2 * C4 * phase(-(p.Jz / 4 - field) * t)};
}

StateVector16 xplus_initial_state() {
  StateVector16::Amplitudes v;
  v.setConstant(0.25);
  return StateVector16(v);
}

namespace {

// 1/2 [e^{-i a t}|UpUp> + e^{-i b t}(|UpDown> + |DownUp>) + e^{-i c t}|DownDown>]
TwoQubitState symmetric_branch(double a, double b, double c, double t) {
  const Complex mid = 0.5 * phase(-b * t);
  return {0.5 * phase(-a * t), mid, mid, 0.5 * phase(-c * t)};
}

}  // namespace

DecomposedState evolve_xplus_decomposed(const ClusterParams &p, double t) {
  const double J = p.J, Jz = p.Jz, J0 = p.J0, h = p.h, hp = p.hp;
  const double triplet = J / 2 - Jz / 4;

  DecomposedState out;
  out.time = t;
  // Central pair, conditioned on the side pair |UpUp>, |UpDown>+|DownUp>, |DownDown>.
  out.xi = {symmetric_branch(Jz / 4 + J0 + h + hp, triplet + h, Jz / 4 - J0 + h - hp, t),
            symmetric_branch(Jz / 4 + hp, triplet, Jz / 4 - hp, t),
            symmetric_branch(Jz / 4 - J0 - h + hp, triplet - h, Jz / 4 + J0 - h - hp, t)};
  // Side pair, conditioned on the central pair.
  out.phi = {symmetric_branch(Jz / 4 + J0 + h + hp, Jz / 4 + hp, Jz / 4 - J0 - h + hp, t),
             symmetric_branch(triplet + h, triplet, triplet - h, t),
             symmetric_branch(Jz / 4 - J0 + h - hp, Jz / 4 - hp, Jz / 4 + J0 - h - hp, t)};
  return out;
}

namespace {

// 1/2 (b0 (x) k0 + b1 (x) (k1 + k2) + b2 (x) k3) with `branch_is_side` choosing
// which pair carries the branch states.
StateVector16 reassemble(const std::array<TwoQubitState, 3> &branch, bool branch_is_side) {
  StateVector16::Amplitudes v = StateVector16::Amplitudes::Zero();
  auto add = [&](const TwoQubitState &b, int ket) {
    const StateVector16 term = branch_is_side ? kron(b, TwoQubitState::basis(ket))
                                              : kron(TwoQubitState::basis(ket), b);
    v += 0.5 * term.amplitudes();
  };
  add(branch[0], 0);
  add(branch[1], 1);
  add(branch[1], 2);
  add(branch[2], 3);
  return StateVector16(v);
}

}  // namespace

StateVector16 DecomposedState::from_central_branches() const { return reassemble(xi, false); }

StateVector16 DecomposedState::from_side_branches() const { return reassemble(phi, true); }

}  // namespace diamond
