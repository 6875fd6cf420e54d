#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "diamond/entanglement.hpp"
#include "diamond/verify.hpp"

using namespace diamond;

TEST(Verify, DefaultRunPasses) {
  const auto results = verify::run_all({});
  EXPECT_TRUE(verify::all_passed(results));
  EXPECT_GE(results.size(), 15u);
  for (const auto &r : results) {
    EXPECT_TRUE(r.passed()) << r.name << " worst " << r.worst;
    EXPECT_LE(r.tolerance, 1e-9) << r.name;
  }
}

TEST(Verify, SignFlipInPsi3FormulaIsCaught) {
  verify::Options options;
  options.psi3_concurrence = [](double J, double Jz, double J0, double t) {
    const double c4 = std::pow(std::cos(J0 * t / 2), 4);
    const double num = 1 + c4 * c4 + 2 * c4 * std::cos((Jz - J) * t);
    return std::sqrt(std::max(0.0, num)) / (1 + c4);
  };
  const auto results = verify::run_all(options);
  EXPECT_FALSE(verify::all_passed(results));
  for (const auto &r : results) {
    if (r.name == "concurrence-psi3")
      EXPECT_FALSE(r.passed());
    else
      EXPECT_TRUE(r.passed()) << r.name;
  }
}

TEST(Verify, SeededReportIsDeterministic) {
  verify::Options options;
  options.trials = 40;
  options.seed = 7;
  std::ostringstream a, b;
  verify::print_report(a, verify::run_all(options));
  verify::print_report(b, verify::run_all(options));
  EXPECT_EQ(a.str(), b.str());
  EXPECT_NE(a.str().find("commutators"), std::string::npos);
  EXPECT_NE(a.str().find("PASS"), std::string::npos);
}

TEST(Verify, NonFiniteResidualFails) {
  verify::Options options;
  options.trials = 5;
  options.psi3_concurrence = [](double, double, double, double) { return std::nan(""); };
  const auto results = verify::run_all(options);
  EXPECT_FALSE(verify::all_passed(results));
}
