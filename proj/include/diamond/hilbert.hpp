#pragma once

// Basis conventions and state containers for the four-spin diamond cluster.
//
// Tensor ordering is (S1, S2, Sa, Sb): the side pair occupies the two high
// bits of a basis index and the central pair the two low bits, so
//
//     index = 8*b(s1) + 4*b(s2) + 2*b(sa) + b(sb),   b(Up) = 0, b(Down) = 1.
//
// Every pair state uses the same layout: |UpUp>, |UpDown>, |DownUp>,
// |DownDown> at indices 0..3. A full cluster state is therefore the
// Kronecker product side (x) central with full[4*i + j] = side[i] * central[j].

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace diamond {

using Complex = std::complex<double>;

inline constexpr double kNormTolerance = 1e-12;

enum class SpinLabel { Up = 0, Down = 1 };

constexpr int bit(SpinLabel s) { return s == SpinLabel::Up ? 0 : 1; }

/// Sz eigenvalue of a spin-1/2 in the given label (+1/2 or -1/2).
constexpr double sz(SpinLabel s) { return s == SpinLabel::Up ? 0.5 : -0.5; }

struct SpinTuple {
  SpinLabel s1, s2, sa, sb;
  friend bool operator==(const SpinTuple &, const SpinTuple &) = default;
};

struct BasisIndex {
  int value;
  friend bool operator==(const BasisIndex &, const BasisIndex &) = default;
};

BasisIndex basis_index(SpinLabel s1, SpinLabel s2, SpinLabel sa, SpinLabel sb);
SpinTuple decode(BasisIndex index);

/// Normalized-or-not complex amplitude vector of fixed dimension.
///
/// No operation renormalizes implicitly; call normalized() explicitly.
template <int Dim>
class StateVector {
 public:
  using Amplitudes = Eigen::Matrix<Complex, Dim, 1>;

  StateVector() : amps_(Amplitudes::Zero()) {}
  explicit StateVector(const Amplitudes &amps) : amps_(amps) {}

  static StateVector basis(int index) {
    Amplitudes v = Amplitudes::Zero();
    v(index) = 1.0;
    return StateVector(v);
  }

  static constexpr int dimension() { return Dim; }

  const Amplitudes &amplitudes() const { return amps_; }
  Complex operator[](int i) const { return amps_(i); }

  double norm() const { return amps_.norm(); }
  bool is_normalized(double tol = kNormTolerance) const {
    return std::abs(amps_.squaredNorm() - 1.0) < tol;
  }

  /// Throws std::domain_error for the zero vector.
  StateVector normalized() const;

 private:
  Amplitudes amps_;
};

using StateVector16 = StateVector<16>;

/// State of one spin pair: a|UpUp> + b|UpDown> + c|DownUp> + d|DownDown>.
class TwoQubitState : public StateVector<4> {
 public:
  using StateVector<4>::StateVector;
  TwoQubitState(const StateVector<4> &s) : StateVector<4>(s) {}
  TwoQubitState(Complex a, Complex b, Complex c, Complex d)
      : StateVector<4>(Amplitudes(a, b, c, d)) {}

  static TwoQubitState basis(int index) { return StateVector<4>::basis(index); }

  Complex a() const { return (*this)[0]; }
  Complex b() const { return (*this)[1]; }
  Complex c() const { return (*this)[2]; }
  Complex d() const { return (*this)[3]; }

  TwoQubitState normalized() const { return StateVector<4>::normalized(); }
};

/// Single-spin state alpha|Up> + beta|Down>.
using SpinState = Eigen::Vector2cd;

/// <u|v>, conjugate-linear in the first argument.
template <int Dim>
Complex inner(const StateVector<Dim> &u, const StateVector<Dim> &v) {
  return u.amplitudes().dot(v.amplitudes());
}

/// Distance between rays: min over alpha of |u - e^{i alpha} v|.
///
/// For normalized inputs this equals sqrt(2 - 2|<u|v>|), but evaluating the
/// aligned difference directly keeps full precision near zero, where the
/// closed form loses half its digits.
template <int Dim>
double phase_distance(const StateVector<Dim> &u, const StateVector<Dim> &v) {
  const Complex overlap = inner(v, u);
  const double mag = std::abs(overlap);
  const Complex phase = mag > 0.0 ? overlap / mag : Complex(1.0);
  return (u.amplitudes() - phase * v.amplitudes()).norm();
}

/// side (x) central, in the cluster ordering documented above.
StateVector16 kron(const TwoQubitState &sides, const TwoQubitState &centrals);
TwoQubitState kron(const SpinState &first, const SpinState &second);

/// Amplitudes of the central pair with the side pair pinned to `side_index`
/// (0..3), unnormalized.
TwoQubitState central_slice(const StateVector16 &psi, int side_index);
/// Amplitudes of the side pair with the central pair pinned, unnormalized.
TwoQubitState side_slice(const StateVector16 &psi, int central_index);

template <int Dim>
StateVector<Dim> StateVector<Dim>::normalized() const {
  const double n = amps_.norm();
  if (n == 0.0) throw std::domain_error("cannot normalize the zero vector");
  return StateVector(amps_ / n);
}

}  // namespace diamond
