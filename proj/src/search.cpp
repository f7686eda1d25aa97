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

#include "cvqss/search.hpp"

#include <limits>
#include <stdexcept>

#include <omp.h>

namespace cvqss {

double scheme_score(const SharingScheme& scheme) {
  double worst = 0.0;
  for (const PlayerSubset& party : threshold_subsets(scheme)) {
    const DecodingPlan plan = decoding_plan(scheme, party);
    if (!plan.decodable) return std::numeric_limits<double>::infinity();
    Eigen::SelfAdjointEigenSolver<Matrix> es(plan.B * plan.B.transpose());
    worst = std::max(worst, es.eigenvalues().maxCoeff());
  }
  return worst;
}

SharingScheme rebuild_sample(int ancillas, int secret_modes, RngSeed seed,
                             SampleMethod method, int index) {
  const RngSeed child{seed.value ^ static_cast<std::uint64_t>(index)};
  return SharingScheme(ancillas, secret_modes,
                       sample_haar(ancillas + secret_modes, child, method));
}

namespace {

SearchResult pick_winner(std::vector<double> scores) {
  SearchResult result;
  result.samples = static_cast<int>(scores.size());
  result.winner_index = 0;
  result.winner_score = scores[0];
  for (int i = 1; i < result.samples; ++i) {
    if (scores[i] < result.winner_score) {
      result.winner_score = scores[i];
      result.winner_index = i;
    }
  }
  if (!std::isfinite(result.winner_score)) {
    throw std::runtime_error("search: no sample produced a decodable scheme");
  }
  result.scores = std::move(scores);
  return result;
}

}  // namespace

SearchResult search_schemes(int ancillas, int secret_modes, int samples,
                            RngSeed seed, SampleMethod method, int threads) {
  if (samples < 1) throw std::invalid_argument("search: samples must be >= 1");
  std::vector<double> scores(samples);
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nthreads) \
    if (nthreads > 1)
  for (int i = 0; i < samples; ++i) {
    scores[i] =
        scheme_score(rebuild_sample(ancillas, secret_modes, seed, method, i));
  }
  return pick_winner(std::move(scores));
}

SearchResult search_schemes_reference(int ancillas, int secret_modes,
                                      int samples, RngSeed seed,
                                      SampleMethod method) {
  if (samples < 1) throw std::invalid_argument("search: samples must be >= 1");
  std::vector<double> scores(samples);
  for (int i = 0; i < samples; ++i) {
    scores[i] =
        scheme_score(rebuild_sample(ancillas, secret_modes, seed, method, i));
  }
  return pick_winner(std::move(scores));
}

}  // namespace cvqss
