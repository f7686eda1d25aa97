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

#include "cvqss/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <omp.h>

namespace cvqss {

namespace {

double squeezed_variance(double r) { return std::exp(-2.0 * r) / 2.0; }

}  // namespace

NoiseMatrix::NoiseMatrix(Matrix N) : n_(std::move(N)) {
  if (n_.rows() != n_.cols() || n_.rows() % 2 != 0 || n_.rows() == 0) {
    throw std::invalid_argument(
        "NoiseMatrix: expected a square matrix of even dimension");
  }
  const double scale = std::max(1.0, n_.cwiseAbs().maxCoeff());
  if ((n_ - Matrix(n_.transpose())).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw std::invalid_argument("NoiseMatrix: not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(n_);
  if (es.eigenvalues()(0) < -1e-10 * scale) {
    throw std::invalid_argument("NoiseMatrix: not positive-semidefinite");
  }
}

NoiseMatrix noise_matrix(const Matrix& B, const SqueezerProfile& r) {
  if (B.cols() != r.modes() || B.rows() % 2 != 0 || B.rows() == 0) {
    throw std::invalid_argument(
        "noise_matrix: B must be 2m x n with one squeezing entry per column");
  }
  Vector var(r.modes());
  for (int i = 0; i < r.modes(); ++i) var(i) = squeezed_variance(r.r[i]);
  return NoiseMatrix(B * var.asDiagonal() * B.transpose());
}

NoiseMatrix noise_matrix(const Matrix& B, double r) {
  SqueezerProfile p;
  p.r.assign(B.cols(), r);
  return noise_matrix(B, p);
}

std::pair<Matrix, Vector> apply_channel(const Matrix& cov, const Vector& mean,
                                        const NoiseMatrix& N) {
  if (cov.rows() != N.matrix().rows() || cov.cols() != N.matrix().cols() ||
      mean.size() != cov.rows()) {
    throw std::invalid_argument("apply_channel: dimension mismatch");
  }
  const double scale = std::max(1.0, cov.cwiseAbs().maxCoeff());
  if ((cov - Matrix(cov.transpose())).cwiseAbs().maxCoeff() > 1e-9 * scale) {
    throw std::invalid_argument("apply_channel: covariance not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(cov);
  if (es.eigenvalues()(0) <= 0.0) {
    throw std::invalid_argument(
        "apply_channel: covariance not positive-definite");
  }
  return {cov + N.matrix(), mean};
}

double fidelity_coherent(const Matrix& B, double r) {
  if (B.rows() != 2) {
    throw std::invalid_argument(
        "fidelity_coherent: single-mode secrets only (B must have 2 rows)");
  }
  const Matrix BBt = B * B.transpose();
  const double eta = BBt.trace();
  const double zeta = BBt.determinant();
  const double s2 = squeezed_variance(r);
  return 1.0 / std::sqrt(1.0 + s2 * eta + s2 * s2 * zeta);
}

double fidelity_gaussian(const NoiseMatrix& N) {
  const auto dim = N.matrix().rows();
  const Matrix A = Matrix::Identity(dim, dim) + N.matrix();
  return 1.0 / std::sqrt(A.determinant());
}

double nu_max(const NoiseMatrix& N) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(N.matrix());
  return es.eigenvalues().maxCoeff();
}

const char* to_string(ChannelClass c) {
  switch (c) {
    case ChannelClass::entanglement_breaking: return "entanglement_breaking";
    case ChannelClass::intermediate: return "intermediate";
    case ChannelClass::best_copy: return "best_copy";
  }
  return "?";
}

ChannelClass classify_channel(double nu) {
  if (nu < 0.0) throw std::invalid_argument("classify_channel: nu < 0");
  if (nu > 1.0) return ChannelClass::entanglement_breaking;
  if (nu < 0.5) return ChannelClass::best_copy;
  return ChannelClass::intermediate;
}

namespace {

SqueezeGridPoint evaluate_grid_point(double db,
                                     const std::vector<PlayerSubset>& parties,
                                     const std::vector<Matrix>& noise_weights) {
  SqueezeGridPoint point;
  point.db = db;
  point.r = db * std::numbers::ln10 / 20.0;
  point.parties.resize(parties.size());
  for (std::size_t p = 0; p < parties.size(); ++p) {
    const NoiseMatrix N = noise_matrix(noise_weights[p], point.r);
    PartyCurvePoint& c = point.parties[p];
    c.party = parties[p];
    c.nu_max = nu_max(N);
    c.fidelity = fidelity_gaussian(N);
    c.cls = classify_channel(c.nu_max);
    if (c.nu_max > point.parties[point.worst].nu_max) {
      point.worst = static_cast<int>(p);
    }
    if (c.nu_max < point.parties[point.best].nu_max) {
      point.best = static_cast<int>(p);
    }
  }
  return point;
}

std::vector<Matrix> collect_noise_weights(
    const SharingScheme& scheme, const std::vector<PlayerSubset>& parties) {
  if (parties.empty()) {
    throw std::invalid_argument("sweep: no parties given");
  }
  std::vector<Matrix> weights;
  weights.reserve(parties.size());
  for (const PlayerSubset& p : parties) {
    DecodingPlan plan = decoding_plan(scheme, p);
    if (!plan.decodable) {
      throw std::invalid_argument("sweep: party " + p.label() +
                                  " cannot decode this scheme");
    }
    weights.push_back(std::move(plan.B));
  }
  return weights;
}

}  // namespace

std::vector<SqueezeGridPoint> sweep(const SharingScheme& scheme,
                                    const std::vector<PlayerSubset>& parties,
                                    const std::vector<double>& db_grid,
                                    int threads) {
  const std::vector<Matrix> weights = collect_noise_weights(scheme, parties);
  std::vector<SqueezeGridPoint> out(db_grid.size());
  const int count = static_cast<int>(db_grid.size());
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(nthreads) \
    if (nthreads > 1)
  for (int g = 0; g < count; ++g) {
    out[g] = evaluate_grid_point(db_grid[g], parties, weights);
  }
  return out;
}

std::vector<SqueezeGridPoint> sweep_reference(
    const SharingScheme& scheme, const std::vector<PlayerSubset>& parties,
    const std::vector<double>& db_grid) {
  const std::vector<Matrix> weights = collect_noise_weights(scheme, parties);
  std::vector<SqueezeGridPoint> out;
  out.reserve(db_grid.size());
  for (double db : db_grid) {
    out.push_back(evaluate_grid_point(db, parties, weights));
  }
  return out;
}

}  // namespace cvqss
