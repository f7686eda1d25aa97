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

#include "cvqss/synthesis.hpp"

#include <cmath>
#include <utility>

namespace cvqss {

namespace {

constexpr double kRowTol = 1e-8;

void check_symplectic_rows(const Matrix& D) {
  if (D.rows() % 2 != 0 || D.cols() % 2 != 0 || D.rows() == 0 ||
      D.rows() > D.cols()) {
    throw std::invalid_argument("synthesis: D must be 2m x 2k with m <= k");
  }
  const int m = static_cast<int>(D.rows()) / 2;
  const int k = static_cast<int>(D.cols()) / 2;
  const Matrix J = symplectic_form(k);
  const Matrix dev = D * J * D.transpose() - symplectic_form(m);
  if (dev.cwiseAbs().maxCoeff() > kRowTol) {
    throw std::invalid_argument(
        "synthesis: rows of D do not form canonical pairs (D J D^T != J)");
  }
}

/// Removes the symplectic projection onto the pairs collected so far:
/// w -> w - sum_i (a_i x_i + b_i y_i) with a_i = -<y_i, w>, b_i = <x_i, w>.
Vector symplectic_residual(const Vector& w, const Matrix& J,
                           const std::vector<Vector>& xs,
                           const std::vector<Vector>& ys) {
  Vector out = w;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double a = -ys[i].dot(J * w);
    const double b = xs[i].dot(J * w);
    out -= a * xs[i] + b * ys[i];
  }
  return out;
}

}  // namespace

const char* to_string(StageKind k) {
  switch (k) {
    case StageKind::passive: return "passive";
    case StageKind::squeezer: return "squeezer";
    case StageKind::shear: return "shear";
    case StageKind::controlled_z: return "controlled_z";
  }
  return "?";
}

SymplecticMatrix complete_symplectic_generic(const Matrix& D) {
  check_symplectic_rows(D);
  const int m = static_cast<int>(D.rows()) / 2;
  const int k = static_cast<int>(D.cols()) / 2;
  const Matrix J = symplectic_form(k);

  std::vector<Vector> xs, ys;
  for (int i = 0; i < m; ++i) {
    xs.push_back(D.row(i).transpose());
    ys.push_back(D.row(m + i).transpose());
  }
  while (static_cast<int>(xs.size()) < k) {
    // Greedy coordinate pick: largest residual after projecting out the
    // span of the pairs found so far.
    Vector best;
    double best_norm = -1.0;
    for (int c = 0; c < 2 * k; ++c) {
      const Vector w = symplectic_residual(Vector::Unit(2 * k, c), J, xs, ys);
      if (w.norm() > best_norm) {
        best_norm = w.norm();
        best = w;
      }
    }
    Vector x = best / best_norm;
    // Canonical partner: -J x projected into the remaining space has
    // symplectic product 1 with x up to the removed components.
    Vector u = symplectic_residual(-J * x, J, xs, ys);
    double gamma = x.dot(J * u);
    if (std::abs(gamma) < 1e-10) {
      // Fall back to coordinate candidates for the partner.
      for (int c = 0; c < 2 * k && std::abs(gamma) < 1e-10; ++c) {
        u = symplectic_residual(Vector::Unit(2 * k, c), J, xs, ys);
        gamma = x.dot(J * u);
      }
      if (std::abs(gamma) < 1e-10) {
        throw std::invalid_argument(
            "complete_symplectic_generic: failed to find canonical partner");
      }
    }
    xs.push_back(x);
    ys.push_back(u / gamma);
  }

  Matrix S(2 * k, 2 * k);
  for (int i = 0; i < k; ++i) {
    S.row(i) = xs[i].transpose();
    S.row(k + i) = ys[i].transpose();
  }
  return SymplecticMatrix(std::move(S), 1e-7);
}

FactoredDecoder complete_m1(const Matrix& D) {
  if (D.rows() != 2) {
    throw std::invalid_argument("complete_m1: D must have exactly two rows");
  }
  check_symplectic_rows(D);
  const int k = static_cast<int>(D.cols()) / 2;
  const Matrix J = symplectic_form(k);
  const Vector x = D.row(0).transpose();
  const Vector y = D.row(1).transpose();

  const double xnorm = x.norm();

  // O1: orthogonal-symplectic rows starting from x / ||x||.
  const Vector x1 = x / xnorm;
  const Matrix O1 = extend_orthosymplectic_basis(k, {x1}, {-J * x1});
  std::vector<DecoderStage> stages;
  stages.push_back({StageKind::passive, O1});

  // K1 rescales mode 1 so the first row becomes x itself.
  SqueezerProfile k1;
  k1.r.assign(k, 0.0);
  k1.r[0] = std::log(xnorm);
  const Matrix K1 = squeezer_matrix(k1).matrix();
  stages.push_back({StageKind::squeezer, K1});

  // Expand y in the row basis of K1 O1: the coefficients follow from the
  // symplectic inverse, c = -J (K1 O1) J y.
  const Matrix P1 = K1 * O1;
  const Vector c = -(J * (P1 * (J * y)));
  const double alpha1 = c(0);

  // Shear on mode 1 removes the alpha1 x component from the momentum row.
  Matrix KS = Matrix::Identity(2 * k, 2 * k);
  KS(k, 0) = alpha1;
  stages.push_back({StageKind::shear, KS});

  Matrix composed = KS * P1;

  double s2 = 0.0;
  for (int j = 1; j < k; ++j) s2 += c(j) * c(j) + c(k + j) * c(k + j);
  if (s2 > 1e-20) {
    const double s = std::sqrt(s2);
    // Mode-wise rotations align each remaining pair contribution with its
    // position quadrature...
    Matrix C = Matrix::Identity(k, k);
    Matrix Sn = Matrix::Zero(k, k);
    for (int j = 1; j < k; ++j) {
      const double theta = std::atan2(-c(k + j), c(j));
      C(j, j) = std::cos(theta);
      Sn(j, j) = std::sin(theta);
    }
    Matrix O2(2 * k, 2 * k);
    O2.topLeftCorner(k, k) = C;
    O2.topRightCorner(k, k) = -Sn;
    O2.bottomLeftCorner(k, k) = Sn;
    O2.bottomRightCorner(k, k) = C;

    // ...and a Householder on modes 2..k concentrates their sum onto mode 2.
    Vector w1(k - 1);
    for (int j = 1; j < k; ++j) w1(j - 1) = std::hypot(c(j), c(k + j)) / s;
    Matrix W = Matrix::Identity(k - 1, k - 1);
    Vector v = w1 - Vector::Unit(k - 1, 0);
    if (v.norm() > 1e-12) {
      W -= (2.0 / v.squaredNorm()) * (v * v.transpose());
    }
    Matrix Wt = Matrix::Identity(k, k);
    Wt.bottomRightCorner(k - 1, k - 1) = W;
    Matrix O3 = Matrix::Zero(2 * k, 2 * k);
    O3.topLeftCorner(k, k) = Wt;
    O3.bottomRightCorner(k, k) = Wt;

    const Matrix Ot = O3 * O2;
    stages.push_back({StageKind::passive, Ot});

    // One controlled-Z between modes 1 and 2 restores the momentum row.
    Matrix KZ = Matrix::Identity(2 * k, 2 * k);
    KZ(k, 1) = s;
    KZ(k + 1, 0) = s;
    stages.push_back({StageKind::controlled_z, KZ});

    composed = KZ * Ot * composed;
  }

  return FactoredDecoder{std::move(stages), SymplecticMatrix(composed, 1e-8),
                         D};
}

SymplecticMatrix purification_completion(const Matrix& D) {
  check_symplectic_rows(D);
  const int m = static_cast<int>(D.rows()) / 2;
  const int k = static_cast<int>(D.cols()) / 2;
  if (k == m) {
    return SymplecticMatrix(D, kRowTol);
  }

  // Any symplectic completion makes the complement rows a set of canonical
  // pairs spanning the symplectic complement of D's row space.
  const Matrix S0 = complete_symplectic_generic(D).matrix();
  const int kc = k - m;
  Matrix C(2 * kc, 2 * k);
  C.topRows(kc) = S0.middleRows(m, kc);
  C.bottomRows(kc) = S0.middleRows(k + m, kc);

  // Williamson normal form of the complement Gram matrix: pairs with
  // symplectic eigenvalue 1 are pure and uncorrelated with D's rows, the
  // rest carry exactly the correlations that purify D D^T.
  const WilliamsonResult wb = williamson(C * C.transpose());
  const Matrix Cn = symplectic_inverse(wb.S.matrix()) * C;
  int l = 0;
  while (l < kc && wb.nu(l) > 1.0 + 1e-9) ++l;

  Matrix Dt(2 * (m + l), 2 * k);
  Dt.topRows(m) = D.topRows(m);
  Dt.middleRows(m, l) = Cn.topRows(l);
  Dt.middleRows(m + l, m) = D.bottomRows(m);
  Dt.bottomRows(l) = Cn.middleRows(kc, l);

  // The enlarged block is proportional to a pure covariance, so its
  // Williamson factor absorbs all scaling: Dt = S V with V orthonormal.
  const WilliamsonResult wp = williamson(Dt * Dt.transpose());
  if ((wp.nu.array() - 1.0).abs().maxCoeff() > 1e-6) {
    throw synthesis_error(
        "purification_completion: enlarged block is not pure");
  }
  const Matrix Sp = wp.S.matrix();
  const Matrix V = symplectic_inverse(Sp) * Dt;

  std::vector<Vector> xs, ys;
  for (int i = 0; i < m + l; ++i) {
    xs.push_back(V.row(i).transpose());
    ys.push_back(V.row(m + l + i).transpose());
  }
  const Matrix O = extend_orthosymplectic_basis(k, std::move(xs),
                                                std::move(ys));

  // Embed Sp on the first m + l modes; the identity elsewhere keeps the
  // singular values of the result equal to those of Sp, so the squeezer
  // count is at most m + l.
  Matrix Semb = Matrix::Identity(2 * k, 2 * k);
  const int q = m + l;
  Semb.block(0, 0, q, q) = Sp.topLeftCorner(q, q);
  Semb.block(0, k, q, q) = Sp.topRightCorner(q, q);
  Semb.block(k, 0, q, q) = Sp.bottomLeftCorner(q, q);
  Semb.block(k, k, q, q) = Sp.bottomRightCorner(q, q);

  return SymplecticMatrix(Semb * O, 1e-7);
}

SqueezerBudget squeezer_budget(const SymplecticMatrix& S) {
  const BlochMessiahFactors f = bloch_messiah(S);
  SqueezerBudget budget;
  for (double r : f.squeeze.r) {
    if (std::abs(r) > 1e-9) {
      ++budget.count;
      budget.magnitudes.push_back(std::abs(r));
    }
  }
  return budget;
}

}  // namespace cvqss
