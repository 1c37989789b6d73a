#include "steiner/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "steiner/errors.hpp"

namespace steiner {

namespace {

template <typename T>
T ipow(T base, int e) {
  T out(1);
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

double cot_squared(int n) {
  switch (n) {
    case 3: return 1.0 / 3.0;
    case 4: return 1.0;
    case 6: return 3.0;
    default: {
      const double t = std::tan(std::numbers::pi / n);
      return 1.0 / (t * t);
    }
  }
}

double moment_of(const Eigen::ArrayXd& bends, int k) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < bends.size(); ++i) sum += ipow(bends(i), k);
  return sum;
}

std::complex<double> complex_moment_of(const Eigen::ArrayXd& bends, const Eigen::ArrayXcd& z,
                                       int k, int m) {
  std::complex<double> sum = 0.0;
  for (Eigen::Index i = 0; i < bends.size(); ++i) sum += ipow(bends(i), k) * ipow(z(i), m);
  return sum;
}

}  // namespace

double bending_moment(const SteinerChain& chain, int k) {
  if (k < 1) throw DomainError("bending_moment: k must be positive");
  return moment_of(chain.bends(), k);
}

std::complex<double> complex_moment(const SteinerChain& chain, int k, int m) {
  if (k < 0 || m < 0) throw DomainError("complex_moment: negative index");
  return complex_moment_of(chain.bends(), chain.centers(), k, m);
}

std::vector<MomentIndex> invariant_moment_indices(int n) {
  std::vector<MomentIndex> out;
  for (int k = 0; k < n; ++k)
    for (int m = 0; m <= k; ++m) out.emplace_back(k, m);
  return out;
}

MomentSet moment_set(const SteinerChain& chain, int max_k) {
  const Eigen::ArrayXd b = chain.bends();
  const Eigen::ArrayXcd z = chain.centers();
  MomentSet set;
  set.n = chain.gauge.n;
  for (int k = 1; k <= max_k; ++k) set.bending.push_back(moment_of(b, k));
  for (const auto& [k, m] : invariant_moment_indices(set.n))
    set.complex[{k, m}] = complex_moment_of(b, z, k, m);
  return set;
}

double closed_form_I(int n, int k, const Gauge& g) {
  const double A = -1.0 / g.R;
  const double a = 1.0 / g.r;
  if (n == 3 && k == 1) return (A + a) / 2.0;
  if (n == 3 && k == 2) return (A * A + 6.0 * A * a + a * a) / 8.0;
  if (n == 4 && k == 1) return 2.0 * (A + a);
  if (n == 4 && k == 2) return (3.0 * A * A + 10.0 * A * a + 3.0 * a * a) / 2.0;
  if (n == 4 && k == 3)
    return (5.0 * A * A * A + 27.0 * A * A * a + 27.0 * A * a * a + 5.0 * a * a * a) / 4.0;
  throw DomainError("closed_form_I: no closed form for this (n, k)");
}

FirstTwoMoments first_two_moments_general(const Gauge& g) {
  if (g.n < 3) throw InvalidInput("first_two_moments_general: n must be at least 3");
  const double A = -1.0 / g.R;
  const double a = 1.0 / g.r;
  const double c = cot_squared(g.n);
  FirstTwoMoments out;
  out.params.s = c * (A + a) / 2.0;
  out.params.p = c * A * a;
  out.I1 = g.n * out.params.s;
  out.I2 = g.n / 2.0 * (3.0 * out.params.s * out.params.s + out.params.p);
  return out;
}

double third_moment_relation_residual(double I1, double I2, double I3) {
  return I3 - (0.75 * I1 * I2 - 0.125 * I1 * I1 * I1);
}

double InvarianceReport::max_invariant_deviation() const {
  double worst = 0.0;
  for (double v : bending_deviation) worst = std::max(worst, v);
  for (const auto& [idx, v] : complex_deviation) worst = std::max(worst, v);
  return worst;
}

std::vector<SweepSample> sweep_samples(const Gauge& g, int samples) {
  if (samples < 2) throw InvalidInput("sweep: need at least two samples");
  require_valid(g);
  const auto indices = invariant_moment_indices(g.n);
  const double period = 2.0 * std::numbers::pi / g.n;

  std::vector<SweepSample> rows(static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j) {
    const SteinerChain chain = chain_at_phase(g, period * j / samples);
    const Eigen::ArrayXd b = chain.bends();
    const Eigen::ArrayXcd z = chain.centers();
    SweepSample& row = rows[static_cast<std::size_t>(j)];
    row.phase = chain.phase;
    for (int k = 1; k <= g.n; ++k) row.bending.push_back(moment_of(b, k));
    for (const auto& [k, m] : indices) row.complex.push_back(complex_moment_of(b, z, k, m));
  }
  return rows;
}

InvarianceReport invariance_sweep(const Gauge& g, int samples) {
  const auto rows = sweep_samples(g, samples);
  const auto indices = invariant_moment_indices(g.n);

  InvarianceReport report;
  report.n = g.n;
  report.samples = samples;

  for (int k = 1; k <= g.n; ++k) {
    double lo = rows.front().bending[std::size_t(k - 1)];
    double hi = lo;
    for (const auto& row : rows) {
      lo = std::min(lo, row.bending[std::size_t(k - 1)]);
      hi = std::max(hi, row.bending[std::size_t(k - 1)]);
    }
    if (k < g.n)
      report.bending_deviation.push_back(hi - lo);
    else
      report.control_deviation = hi - lo;
  }

  for (std::size_t i = 0; i < indices.size(); ++i) {
    const std::complex<double> ref = rows.front().complex[i];
    double dev = 0.0;
    for (const auto& row : rows) {
      dev = std::max(dev, std::abs(row.complex[i] - ref));
      report.max_imaginary = std::max(report.max_imaginary, std::abs(row.complex[i].imag()));
    }
    report.complex_deviation[indices[i]] = dev;
  }
  return report;
}

}  // namespace steiner
