#include "diamond/entanglement.hpp"

#include <cmath>
#include <stdexcept>

namespace diamond {

using namespace std::complex_literals;

double concurrence_pure(const TwoQubitState &s) {
  return 2.0 * std::abs(s.a() * s.d() - s.b() * s.c());
}

double fidelity(const Eigen::VectorXcd &u, const Eigen::VectorXcd &v) {
  if (u.size() != v.size()) throw std::invalid_argument("fidelity of states with different dimensions");
  return std::norm(u.dot(v));
}

double concurrence_stationary(const ClusterParams &p, const InitialProductState &init, double t) {
  const Complex C1 = init.C1(), C2 = init.C2(), C3 = init.C3(), C4 = init.C4();
  const Complex zphase = std::polar(1.0, p.Jz * t);
  const Complex value = C1 * C2 * C3 * C4 * (1.0 - zphase * std::cos(p.J * t)) +
                        0.5i * zphase * (C1 * C1 * C4 * C4 + C2 * C2 * C3 * C3) * std::sin(p.J * t);
  return 2.0 * std::abs(value);
}

double concurrence_xy(double J, double Jz, double dphi, double t) {
  const double x = std::cos(Jz * t) - std::cos(J * t);
  const double y = std::sin(Jz * t) - std::sin(J * t) * std::cos(dphi);
  return 0.5 * std::sqrt(x * x + y * y);
}

double concurrence_xi(double J, double Jz, double t) {
  return std::abs(std::sin((Jz - J) * t / 2));
}

double concurrence_psi3(double J, double Jz, double J0, double t) {
  const double c4 = std::pow(std::cos(J0 * t / 2), 4);
  const double radicand = 1.0 + c4 * c4 - 2.0 * c4 * std::cos((Jz - J) * t);
  return std::sqrt(std::max(0.0, radicand)) / (1.0 + c4);
}

BellFidelities bell_fidelity_curves(double J0, double t) {
  const double x = J0 * t;
  const double s = std::sin(x / 2), c = std::cos(x / 2);
  return {0.5 * std::pow(s, 4), std::pow(std::sin(x), 2) / 8.0, 0.5 * (std::pow(c, 4) + 1.0)};
}

}  // namespace diamond
