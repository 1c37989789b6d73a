#pragma once

#include <complex>
#include <map>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "steiner/porism.hpp"

namespace steiner {

// I_k = sum_i b_i^k
double bending_moment(const SteinerChain& chain, int k);

// J_{k,m} = sum_i b_i^k z_i^m, z_i the canonical-frame centers.
std::complex<double> complex_moment(const SteinerChain& chain, int k, int m);

using MomentIndex = std::pair<int, int>;  // (k, m)

// Index pairs 0 <= m <= k <= n-1 of the invariant complex moments, k-major.
std::vector<MomentIndex> invariant_moment_indices(int n);

struct MomentSet {
  int n = 0;
  std::vector<double> bending;  // I_1 .. I_K
  std::map<MomentIndex, std::complex<double>> complex;
};

MomentSet moment_set(const SteinerChain& chain, int max_k);

// Printed closed forms of I_k for (n, k) in {(3,1), (3,2), (4,1), (4,2), (4,3)}.
double closed_form_I(int n, int k, const Gauge& g);

struct GeneralMomentParams {
  double s = 0.0;  // cot^2(pi/n) (A + a) / 2
  double p = 0.0;  // cot^2(pi/n) A a
};

struct FirstTwoMoments {
  double I1 = 0.0;
  double I2 = 0.0;
  GeneralMomentParams params;
};

FirstTwoMoments first_two_moments_general(const Gauge& g);

// I3 - (3/4 I1 I2 - 1/8 I1^3); vanishes on Steiner 4-chains.
double third_moment_relation_residual(double I1, double I2, double I3);

struct InvarianceReport {
  int n = 0;
  int samples = 0;
  std::vector<double> bending_deviation;  // max-min of I_1 .. I_{n-1}
  std::map<MomentIndex, double> complex_deviation;  // max |J - J(first sample)|, per invariant pair
  double max_imaginary = 0.0;       // over invariant J_{k,m}
  double control_deviation = 0.0;   // max-min of I_n, expected to vary

  double max_invariant_deviation() const;
};

// Evaluates all invariant moments over `samples` phases uniformly spaced in [0, 2*pi/n).
InvarianceReport invariance_sweep(const Gauge& g, int samples);

// One row of a phase sweep: I_1..I_n and the invariant J_{k,m} in
// invariant_moment_indices order.
struct SweepSample {
  double phase = 0.0;
  std::vector<double> bending;
  std::vector<std::complex<double>> complex;
};

std::vector<SweepSample> sweep_samples(const Gauge& g, int samples);

}  // namespace steiner
