// Copyright 2026 The cvqss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cvqss/symplectic.hpp"

// Euler-angle parametrization of U(n) and Haar-uniform sampling of passive
// interferometers.  Two independent samplers are provided so that their
// statistics can be cross-validated: "euler" composes elementary two-level
// rotations with angles drawn from the invariant-measure marginals, and
// "orthonormalize" orthonormalizes a complex Ginibre matrix with the phase
// correction that makes the result exactly Haar.

namespace cvqss {

/// Angles (phi_{jk}, psi_{jk}) for 1 <= j < k <= n plus chi_1..chi_{n-1} and
/// a global phase eta: n^2 parameters in total.  phi in [0, pi/2), all other
/// angles in [0, 2*pi).
struct EulerAngles {
  int n = 0;
  std::vector<double> phi;  ///< pair angles, lexicographic (j,k) order
  std::vector<double> psi;  ///< pair phases, same order as phi
  std::vector<double> chi;  ///< per-level phases, chi[l-1] for level l
  double eta = 0.0;         ///< global phase

  /// Position of the (j,k) pair, 1 <= j < k <= n, in phi/psi.
  static int pair_index(int n, int j, int k);

  /// Throws if counts or ranges are inconsistent.
  void validate() const;
};

/// The n x n two-level rotation E^{(j,k)}: identity except
///   E_jj = cos(phi) e^{i psi},   E_jk = sin(phi) e^{i chi},
///   E_kj = -sin(phi) e^{-i chi}, E_kk = cos(phi) e^{-i psi}.
/// Indices are 1-based with j < k.
ComplexMatrix elementary_rotation(int n, int j, int k, double phi, double psi,
                                  double chi);

/// e^{i eta} E_1 E_2 ... E_{n-1} with E_l the composite rotation
/// E^{(l,l+1)} E^{(l-1,l+1)} ... E^{(1,l+1)}; chi_l enters the last factor.
ComplexMatrix compose_from_angles(const EulerAngles& angles);

/// Invariant-measure density over the angle domain,
///   [prod_k Vol(S^{2k-1})]^{-1} * prod_{j<k} sin^{2j-1}(phi_jk).
double haar_density(const EulerAngles& angles);

struct RngSeed {
  std::uint64_t value = 0;
};

/// Seedable, portable random stream: a fixed 64-bit Mersenne Twister with
/// hand-rolled uniform and normal transforms, so that identical seeds give
/// bit-identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  explicit Rng(RngSeed seed) : gen_(seed.value) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi);
  /// Standard normal via Box-Muller.
  double normal();

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

enum class SampleMethod { euler, orthonormalize };

/// Draws the angle set for one Haar sample (used by the euler method).
EulerAngles sample_euler_angles(int n, Rng& rng);

/// Haar-uniform passive interferometer on n modes; deterministic in
/// (n, seed, method).
PassiveInterferometer sample_haar(int n, RngSeed seed, SampleMethod method);

/// Batch sampling; sample i uses child seed (seed.value ^ i), so results are
/// independent of the parallel schedule.  threads = 0 picks the OpenMP
/// default, threads = 1 runs serially.
std::vector<PassiveInterferometer> sample_haar_batch(int n, int count,
                                                     RngSeed seed,
                                                     SampleMethod method,
                                                     int threads = 0);

/// Plain-loop twin of sample_haar_batch, kept as the reference for tests.
std::vector<PassiveInterferometer> sample_haar_batch_reference(
    int n, int count, RngSeed seed, SampleMethod method);

}  // namespace cvqss
