#pragma once

// Reference implementations that share no code with the library: Pauli
// Kronecker products, the dense matrix exponential, reduced-density
// concurrence and the printed rotated-basis expansion of the evolved state.

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <complex>

namespace oracle {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline const cd I(0.0, 1.0);

inline Mat pauli(char axis) {
  Mat m(2, 2);
  switch (axis) {
    case 'x': m << 0, 1, 1, 0; break;
    case 'y': m << 0, -I, I, 0; break;
    case 'z': m << 1, 0, 0, -1; break;
    default: m = Mat::Identity(2, 2);
  }
  return m;
}

inline Mat kron(const Mat &a, const Mat &b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// S^axis = sigma^axis / 2 on one of the sites 0..3 = (1, 2, a, b).
inline Mat spin(char axis, int site) {
  Mat out = Mat::Identity(1, 1);
  for (int k = 0; k < 4; ++k) out = kron(out, k == site ? Mat(0.5 * pauli(axis)) : pauli('1'));
  return out;
}

struct Params {
  double J, Jz, J0, h, hp;
};

inline Mat hamiltonian(const Params &p) {
  const int s1 = 0, s2 = 1, a = 2, b = 3;
  Mat H = p.J * (spin('x', a) * spin('x', b) + spin('y', a) * spin('y', b)) +
          p.Jz * spin('z', a) * spin('z', b) + p.hp * (spin('z', a) + spin('z', b)) +
          p.h * (spin('z', s1) + spin('z', s2)) +
          p.J0 * (spin('z', a) + spin('z', b)) * (spin('z', s1) + spin('z', s2));
  return H;
}

inline Vec evolve(const Mat &H, const Vec &psi, double t) {
  const Mat generator = (-I * t) * H;
  return generator.exp() * psi;
}

/// Pure-state concurrence from the reduced density matrix:
/// C = sqrt(2 (1 - Tr rho_A^2)).
inline double concurrence(const Vec &pair) {
  Mat rho_a = Mat::Zero(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      for (int j = 0; j < 2; ++j) rho_a(i, k) += pair(2 * i + j) * std::conj(pair(2 * k + j));
  const double purity = (rho_a * rho_a).trace().real();
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
}

inline Vec ket_plus(double theta, double phi) {
  Vec v(2);
  v << std::cos(theta / 2), std::sin(theta / 2) * std::exp(I * phi);
  return v;
}

inline Vec ket_minus(double theta, double phi) {
  Vec v(2);
  v << -std::sin(theta / 2) * std::exp(-I * phi), std::cos(theta / 2);
  return v;
}

inline Vec xplus_state() { return Vec::Constant(16, cd(0.25, 0.0)); }

/// Unnormalized state of the other pair after projecting `pair` (0 = sides,
/// 1 = centrals) onto |o1 o2> along (theta, phi), built from a 16x16
/// projector.
inline Vec project(const Vec &psi, int pair, int o1, int o2, double theta, double phi) {
  const Vec k1 = o1 == 0 ? ket_plus(theta, phi) : ket_minus(theta, phi);
  const Vec k2 = o2 == 0 ? ket_plus(theta, phi) : ket_minus(theta, phi);
  const Vec ket = kron(k1, k2);
  const Mat P = ket * ket.adjoint();
  const Mat full = pair == 0 ? kron(P, Mat::Identity(4, 4)) : kron(Mat::Identity(4, 4), P);
  const Vec projected = full * psi;
  Vec out = Vec::Zero(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const cd amp = pair == 0 ? projected(4 * i + j) : projected(4 * j + i);
      out(j) += std::conj(ket(i)) * amp;
    }
  return out;
}

/// The evolved all-|+x> state written term by term in the rotated basis of
/// the central pair, as printed, then mapped back to the z basis.
inline Vec rotated_central_expansion(const Params &p, double theta, double phi, double t) {
  const double J = p.J, Jz = p.Jz, J0 = p.J0, h = p.h, hp = p.hp;
  const double c2 = std::pow(std::cos(theta / 2), 2), s2 = std::pow(std::sin(theta / 2), 2);
  const double st = std::sin(theta), ct = std::cos(theta);
  const cd ex = std::exp(-I * (phi - hp * t));
  const cd aniso = std::exp(-I * (J / 2 - Jz / 2) * t);

  Vec pp(4), pm(4), mm(4);
  pp(0) = std::exp(-I * h * t) *
          (c2 * std::exp(-I * J0 * t) + st * ex * aniso + s2 * ex * ex * std::exp(I * J0 * t));
  pp(1) = pp(2) = c2 + st * ex * aniso + s2 * ex * ex;
  pp(3) = std::exp(I * h * t) *
          (c2 * std::exp(I * J0 * t) + st * ex * aniso + s2 * ex * ex * std::exp(-I * J0 * t));
  pp *= 0.25 * std::exp(-I * (Jz / 4 + hp) * t);

  pm(0) = std::exp(-I * h * t) * (ct * aniso + I * st * std::sin((hp + J0) * t - phi));
  pm(1) = pm(2) = ct * aniso + I * st * std::sin(hp * t - phi);
  pm(3) = std::exp(I * h * t) * (ct * aniso + I * st * std::sin((hp - J0) * t - phi));
  pm *= 0.25 * std::exp(-I * Jz / 4.0 * t);

  const cd ey = std::exp(I * (phi - hp * t));
  mm(0) = std::exp(-I * h * t) *
          (s2 * ey * ey * std::exp(-I * J0 * t) - st * ey * aniso + c2 * std::exp(I * J0 * t));
  mm(1) = mm(2) = s2 * ey * ey - st * ey * aniso + c2;
  mm(3) = std::exp(I * h * t) *
          (s2 * ey * ey * std::exp(I * J0 * t) - st * ey * aniso + c2 * std::exp(-I * J0 * t));
  mm *= 0.25 * std::exp(-I * (Jz / 4 - hp) * t);

  const Vec plus = ket_plus(theta, phi), minus = ket_minus(theta, phi);
  const Vec ab_pp = kron(plus, plus);
  const Vec ab_pm = kron(plus, minus) + kron(minus, plus);
  const Vec ab_mm = kron(minus, minus);
  return kron(pp, ab_pp) + kron(pm, ab_pm) + kron(mm, ab_mm);
}

/// min over alpha of |u - e^{i alpha} v|
inline double ray_distance(const Vec &u, const Vec &v) {
  const cd overlap = v.dot(u);
  const double mag = std::abs(overlap);
  const cd phase = mag > 0.0 ? overlap / mag : cd(1.0);
  return (u - phase * v).norm();
}

}  // namespace oracle
