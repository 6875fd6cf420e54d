#pragma once

// Seeded random inputs for property tests.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "diamond/evolution.hpp"
#include "diamond/measurement.hpp"
#include "oracle.hpp"

namespace gen {

using namespace diamond;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  ClusterParams params(double bound = 10.0) {
    return {uniform(-bound, bound), uniform(-bound, bound), uniform(-bound, bound),
            uniform(-bound, bound), uniform(-bound, bound)};
  }

  double time(double max = 10.0) { return uniform(0.0, max); }

  MeasurementDirection direction() {
    return {uniform(0.0, std::numbers::pi), uniform(0.0, 2 * std::numbers::pi)};
  }

  Complex complex() { return {std::normal_distribution<double>()(rng_), std::normal_distribution<double>()(rng_)}; }

  template <int Dim>
  StateVector<Dim> state() {
    typename StateVector<Dim>::Amplitudes v;
    for (int k = 0; k < Dim; ++k) v(k) = complex();
    return StateVector<Dim>(v).normalized();
  }

  TwoQubitState pair() { return state<4>(); }

  SpinState spin() {
    SpinState s(complex(), complex());
    return s / s.norm();
  }

  SpinLabel label() { return integer(0, 1) ? SpinLabel::Down : SpinLabel::Up; }

  InitialProductState product_state() {
    const SpinState a = spin(), b = spin();
    return {a(0), a(1), b(0), b(1), label(), label()};
  }

 private:
  std::mt19937_64 rng_;
};

inline oracle::Params to_oracle(const ClusterParams &p) { return {p.J, p.Jz, p.J0, p.h, p.hp}; }

template <int Dim>
oracle::Vec to_vec(const StateVector<Dim> &s) {
  return s.amplitudes();
}

}  // namespace gen
