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

#include <utility>
#include <vector>

#include "cvqss/sharing.hpp"

// Reconstruction-quality metrics.  Encoding followed by decoding acts on the
// secret as an additive-noise Gaussian channel: the mean is untouched and
// the covariance picks up N = B Diag(sigma^2(r_j)) B^T with
// sigma^2(r) = e^{-2r}/2 the squeezed momentum variance of each ancilla.

namespace cvqss {

/// 2m x 2m symmetric positive-semidefinite additive noise.
class NoiseMatrix {
 public:
  explicit NoiseMatrix(Matrix N);

  const Matrix& matrix() const { return n_; }
  int modes() const { return static_cast<int>(n_.rows()) / 2; }

 private:
  Matrix n_;
};

/// N = B Diag(e^{-2 r_1}/2 .. e^{-2 r_n}/2) B^T.
NoiseMatrix noise_matrix(const Matrix& B, const SqueezerProfile& r);

/// Same with uniform squeezing r on every ancilla.
NoiseMatrix noise_matrix(const Matrix& B, double r);

/// The encode-decode channel: covariance -> covariance + N, mean unchanged.
std::pair<Matrix, Vector> apply_channel(const Matrix& cov, const Vector& mean,
                                        const NoiseMatrix& N);

/// Fidelity between a coherent secret and the channel output for a
/// single-mode secret under uniform squeezing r:
///   F = 1 / sqrt(1 + sigma^2 Tr(B B^T) + sigma^4 det(B B^T)).
double fidelity_coherent(const Matrix& B, double r);

/// F = 1 / sqrt(det(I + N)): the Wigner overlap of a pure coherent secret
/// with the channel output; independent of the coherent amplitude.
double fidelity_gaussian(const NoiseMatrix& N);

/// Largest eigenvalue of the noise matrix: the size of the smallest
/// phase-space features that survive the channel.
double nu_max(const NoiseMatrix& N);

enum class ChannelClass { entanglement_breaking, intermediate, best_copy };
const char* to_string(ChannelClass c);

/// nu > 1: entanglement-breaking; nu < 0.5: the receiver holds the best
/// copy allowed by no-cloning; in between: intermediate.
ChannelClass classify_channel(double nu);

struct PartyCurvePoint {
  PlayerSubset party;
  double nu_max = 0.0;
  double fidelity = 0.0;
  ChannelClass cls = ChannelClass::intermediate;
};

struct SqueezeGridPoint {
  double db = 0.0;  ///< input squeezing in decibels, db = (20/ln 10) r
  double r = 0.0;
  std::vector<PartyCurvePoint> parties;  ///< in caller-provided party order
  int worst = 0;  ///< index of the party with the largest nu_max
  int best = 0;   ///< index of the party with the smallest nu_max
};

/// Evaluates nu_max, fidelity and channel class for each (grid point,
/// party).  All parties must be decodable; throws otherwise.  Grid points
/// are evaluated OpenMP-parallel; threads = 1 forces a serial run.
std::vector<SqueezeGridPoint> sweep(const SharingScheme& scheme,
                                    const std::vector<PlayerSubset>& parties,
                                    const std::vector<double>& db_grid,
                                    int threads = 0);

/// Plain-loop twin of sweep, kept as the reference for tests.
std::vector<SqueezeGridPoint> sweep_reference(
    const SharingScheme& scheme, const std::vector<PlayerSubset>& parties,
    const std::vector<double>& db_grid);

}  // namespace cvqss
