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

#include <stdexcept>
#include <vector>

#include "cvqss/symplectic.hpp"

// Turns a decoding matrix D (2m x 2k, with symplectic rows) into an explicit
// Gaussian unitary on the access party's k modes: a symplectic matrix whose
// rows 1..m and k+1..k+m are the rows of D, optionally factored into
// physical stages.  After applying it, the first m modes carry the secret
// (up to the finite-squeezing noise B p^sqz).

namespace cvqss {

enum class StageKind { passive, squeezer, shear, controlled_z };
const char* to_string(StageKind k);

struct DecoderStage {
  StageKind kind;
  Matrix matrix;  ///< 2k x 2k symplectic stage
};

struct FactoredDecoder {
  /// Stages in application order; composed = stages[last] * ... * stages[0].
  std::vector<DecoderStage> stages;
  SymplecticMatrix composed;
  Matrix embedded;  ///< the source D
};

struct synthesis_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Symplectic Gram-Schmidt completion: extends the m canonical row pairs of
/// D with k - m further pairs picked greedily from coordinate directions.
/// Throws std::invalid_argument if D J D^T differs from J^(m) beyond 1e-8.
SymplecticMatrix complete_symplectic_generic(const Matrix& D);

/// Structured completion for single-mode secrets (m = 1).  Builds, in
/// application order: a passive basis change O1, a squeezer K1 fixing the
/// row norm, a shear removing the position component of the momentum row,
/// a passive stage concentrating the remaining momentum mismatch onto mode
/// 2, and a single controlled-Z between modes 1 and 2 (omitted when no
/// mismatch remains).  All squeezing sits in stages acting on the first two
/// modes only, so the Bloch-Messiah squeezer count is at most 2.
FactoredDecoder complete_m1(const Matrix& D);

/// Best-effort minimal-squeezing completion for any m: splits off the
/// impure part of D D^T with a Williamson normal form of the complement
/// block, keeps the correlated pairs as purification rows, factors the
/// enlarged block as (symplectic on m+l modes) x (orthonormal symplectic
/// rows), and extends the orthonormal factor passively.  The Bloch-Messiah
/// squeezer count of the result is at most m + l <= 2m.  Throws
/// synthesis_error when the purification residual check fails; callers can
/// fall back to complete_symplectic_generic.
SymplecticMatrix purification_completion(const Matrix& D);

struct SqueezerBudget {
  int count = 0;                    ///< entries with |r| > 1e-9
  std::vector<double> magnitudes;   ///< the |r| values above threshold
};

/// Bloch-Messiah squeezer count of a symplectic matrix.
SqueezerBudget squeezer_budget(const SymplecticMatrix& S);

}  // namespace cvqss
