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

#include <vector>

#include "cvqss/sharing.hpp"

// Random search for encoding interferometers with low worst-party noise.
// A scheme is scored by max over threshold-size parties of lambda_max(BB^T);
// since uniform squeezing scales every nu_max by the same e^{-2r}, the
// argmin is squeezing-independent and the criterion needs no grid.

namespace cvqss {

/// max over threshold-size subsets of lambda_max(B B^T); +infinity when a
/// threshold subset cannot decode.
double scheme_score(const SharingScheme& scheme);

struct SearchResult {
  int samples = 0;
  int winner_index = 0;           ///< sample index of the argmin
  double winner_score = 0.0;
  std::vector<double> scores;     ///< score per sample index
};

/// Draws `samples` schemes with child seeds seed ^ index, scores each, and
/// returns the argmin (ties broken by the smaller index).  The winner is
/// identical for any thread count.  Throws if every sample fails to decode.
SearchResult search_schemes(int ancillas, int secret_modes, int samples,
                            RngSeed seed,
                            SampleMethod method = SampleMethod::orthonormalize,
                            int threads = 0);

/// Plain-loop twin of search_schemes, kept as the reference for tests.
SearchResult search_schemes_reference(
    int ancillas, int secret_modes, int samples, RngSeed seed,
    SampleMethod method = SampleMethod::orthonormalize);

/// Rebuilds the winning scheme from its sample index.
SharingScheme rebuild_sample(int ancillas, int secret_modes, RngSeed seed,
                             SampleMethod method, int index);

}  // namespace cvqss
