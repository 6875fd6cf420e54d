#include "diamond/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace diamond {

namespace {

using std::numbers::pi;
using namespace std::complex_literals;

Complex phase(double angle) { return std::polar(1.0, angle); }

}  // namespace

double wrap_angle(double a) {
  double w = std::fmod(a, 2 * pi);
  if (w < 0) w += 2 * pi;
  if (w >= 2 * pi) w = 0.0;
  return w;
}

MeasurementDirection MeasurementDirection::canonical(double theta, double phi) {
  double th = wrap_angle(theta);
  double ph = phi;
  if (th > pi) {
    // (2pi - theta, phi + pi) is the same axis.
    th = 2 * pi - th;
    ph += pi;
  }
  return {th, wrap_angle(ph)};
}

PairOutcome PairOutcome::from_index(int i) {
  if (i < 0 || i > 3) throw std::out_of_range("pair outcome index outside [0, 3]");
  return {static_cast<Outcome>(i >> 1), static_cast<Outcome>(i & 1)};
}

const char *to_string(PairOutcome o) {
  static constexpr const char *names[] = {"++", "+-", "-+", "--"};
  return names[o.index()];
}

DirectionBasis direction_basis(const MeasurementDirection &d) {
  const double c = std::cos(d.theta / 2), s = std::sin(d.theta / 2);
  return {SpinState(c, s * phase(d.phi)), SpinState(-s * phase(-d.phi), c)};
}

namespace {

// Row k holds the conjugated ket of outcome k, so M * v gives <k|v>.
Eigen::Matrix4cd outcome_bras(const MeasurementDirection &d) {
  const DirectionBasis b = direction_basis(d);
  const std::array<SpinState, 2> kets{b.plus, b.minus};
  Eigen::Matrix4cd M;
  for (int k = 0; k < 4; ++k) {
    const PairOutcome o = PairOutcome::from_index(k);
    const TwoQubitState ket =
        kron(kets[static_cast<int>(o.first)], kets[static_cast<int>(o.second)]);
    M.row(k) = ket.amplitudes().adjoint();
  }
  return M;
}

}  // namespace

TwoQubitState pair_basis_change(const TwoQubitState &s, const MeasurementDirection &d) {
  return TwoQubitState(Eigen::Vector4cd(outcome_bras(d) * s.amplitudes()));
}

MeasurementRecord::MeasurementRecord(PairOutcome outcome, double probability,
                                     std::optional<TwoQubitState> post)
    : outcome_(outcome), probability_(probability), post_(std::move(post)) {}

const TwoQubitState &MeasurementRecord::post_state() const {
  if (!post_) throw std::logic_error(std::string("outcome ") + to_string(outcome_) +
                                     " is unreachable; it has no post-measurement state");
  return *post_;
}

MeasurementRecords measure_pair(const StateVector16 &psi, MeasuredPair pair,
                                const MeasurementDirection &d) {
  // Reshape so rows index the measured pair and columns the other one.
  Eigen::Matrix4cd grid;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) grid(i, j) = psi[4 * i + j];
  if (pair == MeasuredPair::Centrals) grid.transposeInPlace();

  const Eigen::Matrix4cd projected = outcome_bras(d) * grid;

  auto record = [&](int k) {
    const Eigen::Vector4cd residual = projected.row(k).transpose();
    const double p = residual.squaredNorm();
    std::optional<TwoQubitState> post;
    if (p > MeasurementRecord::kReachableThreshold)
      post = TwoQubitState(Eigen::Vector4cd(residual / std::sqrt(p)));
    return MeasurementRecord(PairOutcome::from_index(k), p, post);
  };
  return {record(0), record(1), record(2), record(3)};
}

MeasurementRecord sample_measurement(const StateVector16 &psi, MeasuredPair pair,
                                     const MeasurementDirection &d, std::uint64_t seed) {
  const MeasurementRecords records = measure_pair(psi, pair, d);
  std::mt19937_64 rng(seed);
  double total = 0.0;
  for (const auto &r : records) total += r.probability();
  const double u = std::uniform_real_distribution<double>(0.0, total)(rng);

  double acc = 0.0;
  for (const auto &r : records) {
    if (!r.reachable()) continue;
    acc += r.probability();
    if (u < acc) return r;
  }
  // u landed on the upper edge through rounding; take the last reachable outcome.
  for (int k = 3; k >= 0; --k)
    if (records[k].reachable()) return records[k];
  throw std::logic_error("state has no reachable measurement outcome");
}

std::vector<BranchGroup> merge_equivalent(const MeasurementRecords &records, double tol) {
  std::vector<BranchGroup> groups;
  for (const auto &r : records) {
    if (!r.reachable()) continue;
    auto it = std::find_if(groups.begin(), groups.end(), [&](const BranchGroup &g) {
      return phase_distance(g.state, r.post_state()) < tol;
    });
    if (it == groups.end()) {
      groups.push_back({{r.outcome()}, r.probability(), r.post_state()});
    } else {
      it->outcomes.push_back(r.outcome());
      it->probability += r.probability();
    }
  }
  return groups;
}

double ClosedFormBranch::probability() const {
  if (!std::isfinite(amplitude)) return 0.0;
  return 1.0 / (16.0 * amplitude * amplitude);
}

const ClosedFormBranch &SideMeasurementClosedForm::branch_for(PairOutcome o) const {
  switch (o.index()) {
    case 0: return psi1;
    case 3: return psi3;
    default: return psi2;
  }
}

SideMeasurementClosedForm side_measurement_closed_form(const ClusterParams &p,
                                                       const MeasurementDirection &d, double t) {
  const double J = p.J, Jz = p.Jz, J0 = p.J0, h = p.h, hp = p.hp;
  const double th = d.theta, ph = d.phi;
  const double c = std::cos(th / 2), s = std::sin(th / 2);

  const Complex up = phase(-(Jz / 4 + hp) * t);
  const Complex mid = phase(-(J / 2 - Jz / 4) * t);
  const Complex down = phase(-(Jz / 4 - hp) * t);

  auto sq = [](Complex z) { return z * z; };
  auto make = [](double inverse_amplitude_squared, Complex a, Complex b, Complex dd) {
    ClosedFormBranch branch{std::numeric_limits<double>::infinity(), std::nullopt};
    if (inverse_amplitude_squared > 16.0 * MeasurementRecord::kReachableThreshold) {
      branch.amplitude = 1.0 / std::sqrt(inverse_amplitude_squared);
      branch.state = TwoQubitState(branch.amplitude * a, branch.amplitude * b,
                                   branch.amplitude * b, branch.amplitude * dd);
    }
    return branch;
  };

  const double sin_th = std::sin(th), cos_th = std::cos(th);
  const double a_sum = J0 * t + h * t - ph;   // (J0 + h)t - phi
  const double a_field = h * t - ph;          // ht - phi
  const double a_diff = J0 * t - h * t + ph;  // (J0 - h)t + phi

  SideMeasurementClosedForm out{};

  // ++ branch
  {
    const double inv2 = std::pow(1 + sin_th * std::cos(a_sum), 2) +
                        2 * std::pow(1 + sin_th * std::cos(a_field), 2) +
                        std::pow(1 + sin_th * std::cos(a_diff), 2);
    out.psi1 = make(inv2,
                    up * sq(c * phase(-(J0 + h) / 2 * t) + s * phase((J0 + h) / 2 * t - ph)),
                    mid * sq(c * phase(-h / 2 * t) + s * phase(h / 2 * t - ph)),
                    down * sq(c * phase((J0 - h) / 2 * t) + s * phase(-((J0 - h) / 2 * t + ph))));
  }
  // +- and -+ branches
  {
    const double inv2 = 4 * cos_th * cos_th +
                        sin_th * sin_th * std::pow(std::sin(a_sum), 2) +
                        2 * sin_th * sin_th * std::pow(std::sin(a_field), 2) +
                        sin_th * sin_th * std::pow(std::sin(a_diff), 2);
    out.psi2 = make(inv2, up * (cos_th + 1i * sin_th * std::sin((h + J0) * t - ph)),
                    mid * (cos_th + 1i * sin_th * std::sin(h * t - ph)),
                    down * (cos_th + 1i * sin_th * std::sin((h - J0) * t - ph)));
  }
  // -- branch
  {
    const double inv2 = std::pow(1 - sin_th * std::cos(a_sum), 2) +
                        2 * std::pow(1 - sin_th * std::cos(a_field), 2) +
                        std::pow(1 - sin_th * std::cos(a_diff), 2);
    out.psi3 = make(inv2,
                    up * sq(c * phase((J0 + h) / 2 * t) - s * phase(-((J0 + h) / 2 * t - ph))),
                    mid * sq(c * phase(h / 2 * t) - s * phase(-(h / 2 * t - ph))),
                    down * sq(c * phase(-(J0 - h) / 2 * t) - s * phase((J0 - h) / 2 * t + ph)));
  }
  return out;
}

}  // namespace diamond
