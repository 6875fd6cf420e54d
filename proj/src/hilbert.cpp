#include "diamond/hilbert.hpp"

#include <stdexcept>

namespace diamond {

BasisIndex basis_index(SpinLabel s1, SpinLabel s2, SpinLabel sa, SpinLabel sb) {
  return {8 * bit(s1) + 4 * bit(s2) + 2 * bit(sa) + bit(sb)};
}

SpinTuple decode(BasisIndex index) {
  if (index.value < 0 || index.value > 15) throw std::out_of_range("basis index outside [0, 15]");
  auto label = [&](int shift) {
    return ((index.value >> shift) & 1) ? SpinLabel::Down : SpinLabel::Up;
  };
  return {label(3), label(2), label(1), label(0)};
}

StateVector16 kron(const TwoQubitState &sides, const TwoQubitState &centrals) {
  StateVector16::Amplitudes v;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) v(4 * i + j) = sides[i] * centrals[j];
  return StateVector16(v);
}

TwoQubitState kron(const SpinState &first, const SpinState &second) {
  return {first(0) * second(0), first(0) * second(1), first(1) * second(0),
          first(1) * second(1)};
}

TwoQubitState central_slice(const StateVector16 &psi, int side_index) {
  const int base = 4 * side_index;
  return {psi[base], psi[base + 1], psi[base + 2], psi[base + 3]};
}

TwoQubitState side_slice(const StateVector16 &psi, int central_index) {
  return {psi[central_index], psi[4 + central_index], psi[8 + central_index],
          psi[12 + central_index]};
}

}  // namespace diamond
