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

#include "cvqss/sharing.hpp"

#include <algorithm>
#include <stdexcept>

#include <omp.h>

namespace cvqss {

namespace {

constexpr double kRankTol = 1e-8;

int rank_of(const Matrix& M) {
  if (M.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(M);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int r = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > kRankTol * sv(0)) ++r;
  }
  return r;
}

void check_subset(const SharingScheme& scheme, const PlayerSubset& A) {
  for (int i = 0; i < A.size(); ++i) {
    if (A.indices[i] < 1 || A.indices[i] > scheme.total_modes()) {
      throw std::invalid_argument("PlayerSubset: index out of range");
    }
    if (i > 0 && A.indices[i] <= A.indices[i - 1]) {
      throw std::invalid_argument("PlayerSubset: indices must be increasing");
    }
  }
}

}  // namespace

SharingScheme::SharingScheme(int n, int m, PassiveInterferometer u)
    : ancillas(n), secret_modes(m), interferometer(std::move(u)) {
  if (n < 1 || m < 1) {
    throw std::invalid_argument("SharingScheme: need n >= 1 and m >= 1");
  }
  if (interferometer.modes() != n + m) {
    throw std::invalid_argument(
        "SharingScheme: interferometer must act on n + m modes");
  }
}

PlayerSubset::PlayerSubset(std::initializer_list<int> idx) : indices(idx) {}
PlayerSubset::PlayerSubset(std::vector<int> idx) : indices(std::move(idx)) {}

std::string PlayerSubset::label() const {
  std::string s;
  for (int i = 0; i < size(); ++i) {
    if (i) s += '-';
    s += std::to_string(indices[i]);
  }
  return s;
}

int threshold(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("threshold: n, m >= 1");
  return m + (n + 1) / 2;
}

std::vector<PlayerSubset> threshold_subsets(const SharingScheme& scheme) {
  const int t = scheme.total_modes();
  const int k = threshold(scheme.ancillas, scheme.secret_modes);
  std::vector<PlayerSubset> out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i + 1;
  while (true) {
    out.emplace_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == t - k + i + 1) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

EncodingBlocks extract_blocks(const SharingScheme& scheme,
                              const PlayerSubset& A) {
  check_subset(scheme, A);
  const int n = scheme.ancillas;
  const int m = scheme.secret_modes;
  const int ntot = scheme.total_modes();
  const int k = A.size();
  const Matrix S = scheme.interferometer.symplectic();

  // Row a-1 holds q_a^net, row ntot + a - 1 holds p_a^net.
  Matrix sub(2 * k, 2 * ntot);
  for (int i = 0; i < k; ++i) {
    sub.row(i) = S.row(A.indices[i] - 1);
    sub.row(k + i) = S.row(ntot + A.indices[i] - 1);
  }

  EncodingBlocks b;
  b.M = sub.middleCols(0, n);         // q^sqz columns
  b.N = sub.middleCols(ntot, n);      // p^sqz columns
  b.H.resize(2 * k, 2 * m);
  b.H.leftCols(m) = sub.middleCols(n, m);          // q^s columns
  b.H.rightCols(m) = sub.middleCols(ntot + n, m);  // p^s columns
  return b;
}

Matrix kernel_basis(const Matrix& M, double tol) {
  const int rows = static_cast<int>(M.rows());
  Eigen::JacobiSVD<Matrix> svd(M, Eigen::ComputeFullU);
  int rank = 0;
  const auto& sv = svd.singularValues();
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(0) > 0.0 && sv(i) > tol * sv(0)) ++rank;
  }
  // Left singular vectors past the rank span ker(M^T).
  return svd.matrixU().rightCols(rows - rank).transpose();
}

namespace {

/// rank([M | H]) - rank(M), the core quantity behind both decodability and
/// the partial-access count.
int free_secret_combinations(const SharingScheme& scheme,
                             const PlayerSubset& A) {
  if (A.size() == 0) return 0;
  const EncodingBlocks b = extract_blocks(scheme, A);
  Matrix MH(b.M.rows(), b.M.cols() + b.H.cols());
  MH << b.M, b.H;
  return rank_of(MH) - rank_of(b.M);
}

}  // namespace

bool decodability(const SharingScheme& scheme, const PlayerSubset& A) {
  return free_secret_combinations(scheme, A) == 2 * scheme.secret_modes;
}

DecodingPlan decoding_plan(const SharingScheme& scheme,
                           const PlayerSubset& A) {
  DecodingPlan plan;
  if (A.size() == 0) return plan;
  plan.blocks = extract_blocks(scheme, A);
  plan.kernel = kernel_basis(plan.blocks.M);
  const int m2 = 2 * scheme.secret_modes;

  const Matrix T = plan.kernel * plan.blocks.H;  // d x 2m
  if (rank_of(T) != m2) {
    plan.decodable = false;
    return plan;
  }
  // Minimum-norm left inverse; reduces to T^{-1} R when d = 2m and is
  // independent of the choice of orthonormal kernel basis.
  Eigen::JacobiSVD<Matrix> svd(T, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  Vector inv(sv.size());
  for (int i = 0; i < sv.size(); ++i) {
    inv(i) = sv(i) > kRankTol * sv(0) ? 1.0 / sv(i) : 0.0;
  }
  const Matrix pinvT =
      svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
  plan.decodable = true;
  plan.D = pinvT * plan.kernel;
  plan.B = plan.D * plan.blocks.N;
  return plan;
}

int recoverable_count(const SharingScheme& scheme, const PlayerSubset& Z) {
  const int m2 = 2 * scheme.secret_modes;
  return std::clamp(free_secret_combinations(scheme, Z), 0, m2);
}

const char* to_string(AccessClass c) {
  switch (c) {
    case AccessClass::full: return "full";
    case AccessClass::partial: return "partial";
    case AccessClass::none: return "none";
  }
  return "?";
}

namespace {

AccessReport classify_mask(const SharingScheme& scheme, unsigned mask) {
  std::vector<int> idx;
  for (int i = 0; i < scheme.total_modes(); ++i) {
    if (mask & (1u << i)) idx.push_back(i + 1);
  }
  AccessReport rep;
  rep.subset = PlayerSubset(std::move(idx));
  rep.recoverable = recoverable_count(scheme, rep.subset);
  const int m2 = 2 * scheme.secret_modes;
  rep.cls = rep.recoverable == m2  ? AccessClass::full
            : rep.recoverable == 0 ? AccessClass::none
                                   : AccessClass::partial;
  return rep;
}

}  // namespace

std::vector<AccessReport> access_structure(const SharingScheme& scheme,
                                           int threads) {
  const int t = scheme.total_modes();
  if (t > 16) {
    throw std::invalid_argument(
        "access_structure: enumeration limited to n + m <= 16 modes");
  }
  const unsigned total = (1u << t) - 1u;
  std::vector<AccessReport> out(total);
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 8) num_threads(nthreads) \
    if (nthreads > 1)
  for (unsigned mask = 1; mask <= total; ++mask) {
    out[mask - 1] = classify_mask(scheme, mask);
  }
  return out;
}

std::vector<AccessReport> access_structure_reference(
    const SharingScheme& scheme) {
  const int t = scheme.total_modes();
  if (t > 16) {
    throw std::invalid_argument(
        "access_structure: enumeration limited to n + m <= 16 modes");
  }
  std::vector<AccessReport> out;
  for (unsigned mask = 1; mask < (1u << t); ++mask) {
    out.push_back(classify_mask(scheme, mask));
  }
  return out;
}

}  // namespace cvqss
