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

#include <string>
#include <vector>

#include "cvqss/haar.hpp"
#include "cvqss/symplectic.hpp"

// The secret-sharing core.
//
// A dealer couples m secret modes with n momentum-squeezed ancilla modes in
// a passive interferometer on n_tot = n + m modes and hands one output mode
// to each player.  Input mode layout: ancillas are modes 1..n, secret modes
// are n+1..n+m, so the input quadrature vector is
//   (q^sqz_1..q^sqz_n, q^s_1..q^s_m, p^sqz_1..p^sqz_n, p^s_1..p^s_m).
//
// For a subset A of k players, the rows of the interferometer restricted to
// A's output quadratures split into blocks
//   xi^A = M q^sqz + N p^sqz + H xi^s,
// and A can reconstruct the secret exactly when 2m independent combinations
// of its quadratures cancel all antisqueezed q^sqz contributions while
// acting invertibly on the secret block.  The decoder is D = pinv(R H) R
// with R an orthonormal basis of ker(M^T); the residual noise weights are
// B = D N.

namespace cvqss {

struct SharingScheme {
  /// Validates n, m >= 1 and that the interferometer acts on n + m modes.
  SharingScheme(int ancillas, int secret_modes, PassiveInterferometer u);

  int ancillas;       ///< n, squeezed input modes
  int secret_modes;   ///< m
  PassiveInterferometer interferometer;

  int total_modes() const { return ancillas + secret_modes; }
};

/// A set of player indices, 1-based, strictly increasing.
struct PlayerSubset {
  std::vector<int> indices;

  PlayerSubset() = default;
  PlayerSubset(std::initializer_list<int> idx);
  explicit PlayerSubset(std::vector<int> idx);

  int size() const { return static_cast<int>(indices.size()); }
  std::string label() const;  ///< e.g. "1-2-4"
};

/// Minimum access-party size: k = m + ceil(n/2).
int threshold(int n, int m);

/// All subsets of size threshold(n, m), in lexicographic order.
std::vector<PlayerSubset> threshold_subsets(const SharingScheme& scheme);

struct EncodingBlocks {
  Matrix M;  ///< 2k x n, antisqueezed-quadrature coefficients
  Matrix N;  ///< 2k x n, squeezed-quadrature coefficients
  Matrix H;  ///< 2k x 2m, secret-quadrature coefficients
};

/// Rows of the scheme's 2 n_tot x 2 n_tot symplectic matrix at the subset's
/// (q, p) output positions, split by input column group.
EncodingBlocks extract_blocks(const SharingScheme& scheme,
                              const PlayerSubset& A);

/// Orthonormal rows spanning ker(M^T); d = rows(M) - rank(M) of them.
/// Rank decisions use singular values above tol * sigma_max.
Matrix kernel_basis(const Matrix& M, double tol = 1e-8);

/// True iff rank([M | H]) = rank(M) + 2m, i.e. the subset can cancel all
/// antisqueezing while keeping an invertible handle on the secret.
bool decodability(const SharingScheme& scheme, const PlayerSubset& A);

struct DecodingPlan {
  EncodingBlocks blocks;
  Matrix kernel;   ///< d x 2k orthonormal rows of ker(M^T)
  bool decodable = false;
  Matrix D;        ///< 2m x 2k; D M = 0, D H = I (empty when not decodable)
  Matrix B;        ///< 2m x n residual noise weights, B = D N
};

/// Non-decodability is reported through the flag, not as an error.
DecodingPlan decoding_plan(const SharingScheme& scheme, const PlayerSubset& A);

/// rank([M | H]) - rank(M) clamped to [0, 2m]: the number of independent
/// antisqueezing-free secret combinations available to the subset.
int recoverable_count(const SharingScheme& scheme, const PlayerSubset& Z);

enum class AccessClass { full, partial, none };
const char* to_string(AccessClass c);

struct AccessReport {
  PlayerSubset subset;
  AccessClass cls = AccessClass::none;
  int recoverable = 0;
};

/// Classifies every nonempty subset (full iff recoverable = 2m, none iff 0).
/// Subsets are enumerated in bitmask order: the report for mask b covers the
/// players {i : bit i-1 of b set}.  Requires n + m <= 16.  OpenMP-parallel;
/// threads = 1 forces a serial run, 0 uses the runtime default.
std::vector<AccessReport> access_structure(const SharingScheme& scheme,
                                           int threads = 0);

/// Plain-loop twin of access_structure, kept as the reference for tests.
std::vector<AccessReport> access_structure_reference(
    const SharingScheme& scheme);

}  // namespace cvqss
