#pragma once

// Formula-versus-simulation cross-checks run by `diamond verify`.
//
// Every suite draws random parameters from a seeded generator, evaluates a
// closed form and the brute-force pipeline (dense Hamiltonian, eigensystem
// propagation, projective measurement), and records the worst discrepancy.

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace diamond::verify {

struct SuiteResult {
  std::string name;
  double worst = 0.0;
  double tolerance = 0.0;
  bool passed() const { return worst < tolerance; }
};

struct Options {
  int trials = 100;
  std::uint64_t seed = 7;
  /// Closed form under test for the -- branch concurrence. Replaceable so a
  /// harness can check that a broken formula is caught.
  std::function<double(double J, double Jz, double J0, double t)> psi3_concurrence;
};

std::vector<SuiteResult> run_all(const Options &options);

bool all_passed(const std::vector<SuiteResult> &results);

/// One line per suite: name, worst residual, tolerance, PASS/FAIL.
void print_report(std::ostream &os, const std::vector<SuiteResult> &results);

}  // namespace diamond::verify
