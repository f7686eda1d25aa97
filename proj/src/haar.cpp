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

#include "cvqss/haar.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <omp.h>

namespace cvqss {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Hypersurface volume of S^{2k-1}, the unit sphere in 2k real dimensions:
/// 2 pi^k / (k-1)!.
double sphere_surface(int k) {
  double fact = 1.0;
  for (int i = 2; i < k; ++i) fact *= i;
  return 2.0 * std::pow(std::numbers::pi, k) / fact;
}

}  // namespace

int EulerAngles::pair_index(int n, int j, int k) {
  if (j < 1 || k <= j || k > n) {
    throw std::invalid_argument("EulerAngles: require 1 <= j < k <= n");
  }
  // Pairs in lexicographic order: (1,2), (1,3), ..., (1,n), (2,3), ...
  const int jm = j - 1;
  return jm * n - jm * (jm + 1) / 2 + (k - j - 1);
}

void EulerAngles::validate() const {
  if (n < 1) throw std::invalid_argument("EulerAngles: n must be >= 1");
  const int pairs = n * (n - 1) / 2;
  if (static_cast<int>(phi.size()) != pairs ||
      static_cast<int>(psi.size()) != pairs ||
      static_cast<int>(chi.size()) != n - 1) {
    throw std::invalid_argument("EulerAngles: wrong parameter counts");
  }
  for (double v : phi) {
    if (!(v >= 0.0 && v < std::numbers::pi / 2)) {
      throw std::invalid_argument("EulerAngles: phi out of [0, pi/2)");
    }
  }
  auto in_circle = [](double v) { return v >= 0.0 && v < kTwoPi; };
  for (double v : psi) {
    if (!in_circle(v)) throw std::invalid_argument("EulerAngles: psi range");
  }
  for (double v : chi) {
    if (!in_circle(v)) throw std::invalid_argument("EulerAngles: chi range");
  }
  if (!in_circle(eta)) throw std::invalid_argument("EulerAngles: eta range");
}

ComplexMatrix elementary_rotation(int n, int j, int k, double phi, double psi,
                                  double chi) {
  if (j < 1 || k <= j || k > n) {
    throw std::invalid_argument("elementary_rotation: require 1 <= j < k <= n");
  }
  ComplexMatrix E = ComplexMatrix::Identity(n, n);
  const std::complex<double> i1(0.0, 1.0);
  const double c = std::cos(phi), s = std::sin(phi);
  E(j - 1, j - 1) = c * std::exp(i1 * psi);
  E(j - 1, k - 1) = s * std::exp(i1 * chi);
  E(k - 1, j - 1) = -s * std::exp(-i1 * chi);
  E(k - 1, k - 1) = c * std::exp(-i1 * psi);
  return E;
}

ComplexMatrix compose_from_angles(const EulerAngles& a) {
  a.validate();
  const int n = a.n;
  ComplexMatrix U = ComplexMatrix::Identity(n, n);
  U *= std::exp(std::complex<double>(0.0, a.eta));
  for (int l = 1; l < n; ++l) {
    // E_l = E^{(l,l+1)} E^{(l-1,l+1)} ... E^{(1,l+1)}
    ComplexMatrix El = ComplexMatrix::Identity(n, n);
    for (int j = l; j >= 1; --j) {
      const int idx = EulerAngles::pair_index(n, j, l + 1);
      const double chi = (j == 1) ? a.chi[l - 1] : 0.0;
      El = El * elementary_rotation(n, j, l + 1, a.phi[idx], a.psi[idx], chi);
    }
    U = U * El;
  }
  return U;
}

double haar_density(const EulerAngles& a) {
  a.validate();
  double norm = 1.0;
  for (int k = 1; k <= a.n; ++k) norm *= sphere_surface(k);
  double density = 1.0 / norm;
  for (int j = 1; j < a.n; ++j) {
    for (int k = j + 1; k <= a.n; ++k) {
      const double s = std::sin(a.phi[EulerAngles::pair_index(a.n, j, k)]);
      density *= std::pow(s, 2 * j - 1);
    }
  }
  return density;
}

double Rng::uniform() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  have_spare_ = true;
  spare_ = radius * std::sin(kTwoPi * u2);
  return radius * std::cos(kTwoPi * u2);
}

EulerAngles sample_euler_angles(int n, Rng& rng) {
  EulerAngles a;
  a.n = n;
  const int pairs = n * (n - 1) / 2;
  a.phi.resize(pairs);
  a.psi.resize(pairs);
  a.chi.resize(n - 1);
  for (int j = 1; j < n; ++j) {
    for (int k = j + 1; k <= n; ++k) {
      const int idx = EulerAngles::pair_index(n, j, k);
      // The last row of the level-k composite is the nested chain
      //   (sin(phi_1k) prod_{i>1} cos(phi_ik), ..., sin(phi_{k-1,k}),
      //    prod_i cos(phi_ik))
      // up to phases.  The composite therefore carries a uniform point on
      // the complex sphere S^{2k-1} exactly when sin^2(phi_jk) ~
      // Beta(1, j), i.e. when phi_jk has distribution function
      // 1 - cos^{2j}(phi).  Invert that directly; v > 0 keeps phi strictly
      // below pi/2.
      const double v = 1.0 - rng.uniform();
      const double s2 = 1.0 - std::pow(v, 1.0 / j);
      a.phi[idx] = std::asin(std::sqrt(s2));
      a.psi[idx] = rng.uniform(0.0, kTwoPi);
    }
  }
  for (int l = 0; l < n - 1; ++l) a.chi[l] = rng.uniform(0.0, kTwoPi);
  a.eta = rng.uniform(0.0, kTwoPi);
  return a;
}

namespace {

PassiveInterferometer sample_orthonormalize(int n, Rng& rng) {
  ComplexMatrix Z(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double re = rng.normal();
      const double im = rng.normal();
      Z(i, j) = std::complex<double>(re, im);
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(Z);
  ComplexMatrix Q = qr.householderQ();
  const ComplexMatrix R = qr.matrixQR();
  // Fix the column phases so that the distribution is exactly the invariant
  // one rather than depending on the QR sign convention.
  for (int j = 0; j < n; ++j) {
    const std::complex<double> rjj = R(j, j);
    const double mag = std::abs(rjj);
    if (mag > 0.0) Q.col(j) *= rjj / mag;
  }
  return unitary_to_symplectic(Q, 1e-10);
}

}  // namespace

PassiveInterferometer sample_haar(int n, RngSeed seed, SampleMethod method) {
  if (n < 1) throw std::invalid_argument("sample_haar: n must be >= 1");
  Rng rng(seed);
  if (method == SampleMethod::euler) {
    return unitary_to_symplectic(compose_from_angles(sample_euler_angles(n, rng)),
                                 1e-10);
  }
  return sample_orthonormalize(n, rng);
}

std::vector<PassiveInterferometer> sample_haar_batch(int n, int count,
                                                     RngSeed seed,
                                                     SampleMethod method,
                                                     int threads) {
  std::vector<PassiveInterferometer> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    out.push_back(PassiveInterferometer(Matrix::Identity(n, n),
                                        Matrix::Zero(n, n)));
  }
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nthreads) \
    if (nthreads > 1)
  for (int i = 0; i < count; ++i) {
    out[i] = sample_haar(n, RngSeed{seed.value ^ static_cast<std::uint64_t>(i)},
                         method);
  }
  return out;
}

std::vector<PassiveInterferometer> sample_haar_batch_reference(
    int n, int count, RngSeed seed, SampleMethod method) {
  std::vector<PassiveInterferometer> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    out.push_back(sample_haar(
        n, RngSeed{seed.value ^ static_cast<std::uint64_t>(i)}, method));
  }
  return out;
}

}  // namespace cvqss
