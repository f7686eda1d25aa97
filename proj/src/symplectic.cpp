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

#include "cvqss/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace cvqss {

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

void require_even_square(const Matrix& S, const char* what) {
  if (S.rows() != S.cols() || S.rows() % 2 != 0 || S.rows() == 0) {
    throw std::invalid_argument(std::string(what) +
                                ": expected a square matrix of even dimension");
  }
}

}  // namespace

Matrix symplectic_form(int n) {
  if (n < 1) throw std::invalid_argument("symplectic_form: n must be >= 1");
  Matrix J = Matrix::Zero(2 * n, 2 * n);
  J.topRightCorner(n, n) = Matrix::Identity(n, n);
  J.bottomLeftCorner(n, n) = -Matrix::Identity(n, n);
  return J;
}

double symplectic_product(const Vector& x, const Vector& y) {
  if (x.size() != y.size() || x.size() % 2 != 0 || x.size() == 0) {
    throw std::invalid_argument(
        "symplectic_product: vectors must have equal even length");
  }
  const auto n = x.size() / 2;
  // x^T J y = x_q . y_p - x_p . y_q
  return x.head(n).dot(y.tail(n)) - x.tail(n).dot(y.head(n));
}

bool is_symplectic(const Matrix& S, double tol) {
  require_even_square(S, "is_symplectic");
  const int n = static_cast<int>(S.rows()) / 2;
  const Matrix J = symplectic_form(n);
  return max_abs(S * J * S.transpose() - J) <= tol;
}

PassiveInterferometer::PassiveInterferometer(Matrix X, Matrix Y, double tol)
    : x_(std::move(X)), y_(std::move(Y)) {
  if (x_.rows() == 0 || x_.rows() != x_.cols() || y_.rows() != x_.rows() ||
      y_.cols() != x_.cols()) {
    throw std::invalid_argument(
        "PassiveInterferometer: X and Y must be square of equal size");
  }
  const int n = modes();
  const Matrix I = Matrix::Identity(n, n);
  const double unitarity =
      std::max(max_abs(x_.transpose() * x_ + y_.transpose() * y_ - I),
               max_abs(x_.transpose() * y_ - y_.transpose() * x_));
  if (unitarity > tol) {
    throw std::invalid_argument(
        "PassiveInterferometer: X + iY is not unitary within tolerance");
  }
}

Matrix PassiveInterferometer::symplectic() const {
  const int n = modes();
  Matrix S(2 * n, 2 * n);
  S.topLeftCorner(n, n) = x_;
  S.topRightCorner(n, n) = -y_;
  S.bottomLeftCorner(n, n) = y_;
  S.bottomRightCorner(n, n) = x_;
  return S;
}

ComplexMatrix PassiveInterferometer::unitary() const {
  return x_.cast<std::complex<double>>() +
         std::complex<double>(0, 1) * y_.cast<std::complex<double>>();
}

PassiveInterferometer unitary_to_symplectic(const ComplexMatrix& U,
                                            double tol) {
  if (U.rows() != U.cols() || U.rows() == 0) {
    throw std::invalid_argument("unitary_to_symplectic: U must be square");
  }
  return PassiveInterferometer(U.real(), U.imag(), tol);
}

PassiveInterferometer passive_from_symplectic(const Matrix& S, double tol) {
  require_even_square(S, "passive_from_symplectic");
  const int n = static_cast<int>(S.rows()) / 2;
  PassiveInterferometer p(S.topLeftCorner(n, n), S.bottomLeftCorner(n, n),
                          tol);
  if (max_abs(S - p.symplectic()) > tol) {
    throw std::invalid_argument(
        "passive_from_symplectic: matrix lacks the [[X,-Y],[Y,X]] structure");
  }
  return p;
}

SymplecticMatrix::SymplecticMatrix(Matrix S, double tol) : m_(std::move(S)) {
  require_even_square(m_, "SymplecticMatrix");
  n_ = static_cast<int>(m_.rows()) / 2;
  if (!is_symplectic(m_, tol)) {
    throw std::invalid_argument("SymplecticMatrix: S J S^T != J");
  }
}

SymplecticMatrix squeezer_matrix(const SqueezerProfile& profile) {
  const int n = profile.modes();
  if (n == 0) throw std::invalid_argument("squeezer_matrix: empty profile");
  Vector d(2 * n);
  for (int i = 0; i < n; ++i) {
    d(i) = std::exp(profile.r[i]);
    d(n + i) = std::exp(-profile.r[i]);
  }
  return SymplecticMatrix(d.asDiagonal());
}

Matrix symplectic_inverse(const Matrix& S) {
  require_even_square(S, "symplectic_inverse");
  const int n = static_cast<int>(S.rows()) / 2;
  const Matrix J = symplectic_form(n);
  return J.transpose() * S.transpose() * J;
}

Matrix extend_orthosymplectic_basis(int k, std::vector<Vector> xs,
                                    std::vector<Vector> ys) {
  if (xs.size() != ys.size() || static_cast<int>(xs.size()) > k) {
    throw std::invalid_argument(
        "extend_orthosymplectic_basis: inconsistent seed pairs");
  }
  const int dim = 2 * k;
  const Matrix J = symplectic_form(k);
  while (static_cast<int>(xs.size()) < k) {
    Matrix proj = Matrix::Identity(dim, dim);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      proj -= xs[i] * xs[i].transpose();
      proj -= ys[i] * ys[i].transpose();
    }
    Eigen::JacobiSVD<Matrix> svd(proj, Eigen::ComputeThinU);
    Vector x = svd.matrixU().col(0);
    x.normalize();
    xs.push_back(x);
    ys.push_back(-J * x);
  }
  Matrix O(dim, dim);
  for (int i = 0; i < k; ++i) {
    O.row(i) = xs[i].transpose();
    O.row(k + i) = ys[i].transpose();
  }
  return O;
}

BlochMessiahFactors bloch_messiah(const SymplecticMatrix& Sm, double tol) {
  const Matrix& S = Sm.matrix();
  const int n = Sm.modes();
  const int dim = 2 * n;
  const Matrix J = symplectic_form(n);

  // Eigensystem of S S^T = P^2.  The polar factor P is symplectic and
  // symmetric, so P (J u) = lambda^{-1} (J u) whenever P u = lambda u.
  Eigen::SelfAdjointEigenSolver<Matrix> es(S * S.transpose());
  if (es.info() != Eigen::Success) {
    throw std::invalid_argument("bloch_messiah: eigensolver failed");
  }

  constexpr double kClusterTol = 1e-9;
  std::vector<std::pair<double, int>> squeezed;  // (lambda, eigen index)
  std::vector<int> unit_cluster;
  for (int i = 0; i < dim; ++i) {
    const double lam = std::sqrt(std::max(es.eigenvalues()(i), 0.0));
    if (lam > 1.0 + kClusterTol) {
      squeezed.emplace_back(lam, i);
    } else if (lam >= 1.0 / (1.0 + kClusterTol)) {
      unit_cluster.push_back(i);
    }
    // lambda < 1 entries are the J-partners of the squeezed set.
  }
  std::stable_sort(squeezed.begin(), squeezed.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  if (static_cast<int>(squeezed.size() * 2 + unit_cluster.size()) != dim) {
    throw std::invalid_argument(
        "bloch_messiah: eigenvalues do not pair up; input not symplectic?");
  }

  std::vector<Vector> xs, ys;
  std::vector<double> d;
  for (const auto& [lam, idx] : squeezed) {
    xs.push_back(es.eigenvectors().col(idx));
    ys.push_back(-J * xs.back());
    d.push_back(std::log(lam));
  }
  // The near-unit eigenspace is J-invariant but the eigensolver basis need
  // not respect the pairing; run a symplectic Gram-Schmidt inside it.
  std::vector<Vector> cluster;
  for (int idx : unit_cluster) cluster.push_back(es.eigenvectors().col(idx));
  while (static_cast<int>(xs.size()) < n) {
    Vector best;
    double best_norm = -1.0;
    for (const Vector& c : cluster) {
      Vector w = c;
      for (std::size_t i = squeezed.size(); i < xs.size(); ++i) {
        w -= xs[i].dot(c) * xs[i] + ys[i].dot(c) * ys[i];
      }
      if (w.norm() > best_norm) {
        best_norm = w.norm();
        best = w;
      }
    }
    if (best_norm < 1e-6) {
      throw std::invalid_argument(
          "bloch_messiah: degenerate unit eigenspace; input not symplectic?");
    }
    best.normalize();
    xs.push_back(best);
    ys.push_back(-J * best);
    d.push_back(0.0);
  }

  Matrix Q(dim, dim);
  for (int i = 0; i < n; ++i) {
    Q.col(i) = xs[i];
    Q.col(n + i) = ys[i];
  }

  // O = P^{-1} S with P^{-1} built from the same eigensystem.
  Matrix inv_sqrt =
      es.eigenvectors() *
      es.eigenvalues().cwiseMax(1e-300).cwiseSqrt().cwiseInverse().asDiagonal() *
      es.eigenvectors().transpose();
  const Matrix O = inv_sqrt * S;
  const Matrix right = Q.transpose() * O;

  const double ptol = std::max(kDefaultTol, 100.0 * tol);
  SqueezerProfile squeeze{std::move(d)};
  return BlochMessiahFactors{passive_from_symplectic(Q, ptol),
                             std::move(squeeze),
                             passive_from_symplectic(right, ptol)};
}

WilliamsonResult williamson(const Matrix& G) {
  require_even_square(G, "williamson");
  const int n = static_cast<int>(G.rows()) / 2;
  const int dim = 2 * n;
  if (max_abs(G - G.transpose()) > 1e-9 * std::max(1.0, max_abs(G))) {
    throw std::invalid_argument("williamson: G is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (G + G.transpose()));
  if (es.info() != Eigen::Success || es.eigenvalues()(0) <= 0.0) {
    throw std::invalid_argument("williamson: G is not positive-definite");
  }
  const Matrix half = es.eigenvectors() *
                      es.eigenvalues().cwiseSqrt().asDiagonal() *
                      es.eigenvectors().transpose();
  const Matrix J = symplectic_form(n);
  Matrix A = half * J * half;
  A = 0.5 * (A - Matrix(A.transpose()));

  // Canonical form of the skew-symmetric A via the Hermitian problem iA:
  // eigenpairs come as (+nu, w), (-nu, conj w); the real and imaginary
  // parts of w span the canonical plane and the nu are the symplectic
  // eigenvalues of G.  Cross-pair orthogonality in R^{2n} follows from
  // Hermitian orthogonality of both w and conj(w), so degenerate nu are
  // handled uniformly.
  const std::complex<double> i1(0.0, 1.0);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> hes(i1 *
                                                   A.cast<std::complex<double>>());
  if (hes.info() != Eigen::Success) {
    throw std::invalid_argument("williamson: eigensolver failed");
  }
  struct Pair {
    double nu;
    int idx;
  };
  std::vector<Pair> pairs;
  for (int i = 0; i < dim; ++i) {
    if (hes.eigenvalues()(i) > 0.0) pairs.push_back({hes.eigenvalues()(i), i});
  }
  if (static_cast<int>(pairs.size()) != n) {
    throw std::invalid_argument(
        "williamson: eigenvalues do not pair up; G near-singular?");
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const Pair& a, const Pair& b) { return a.nu > b.nu; });

  Matrix S(dim, dim);
  Vector nu(n);
  const double sqrt2 = std::numbers::sqrt2;
  for (int j = 0; j < n; ++j) {
    const Eigen::VectorXcd w = hes.eigenvectors().col(pairs[j].idx);
    const double scale = sqrt2 / std::sqrt(pairs[j].nu);
    // A (Im w) = -nu Re w and A (Re w) = nu Im w, so (Im w, Re w) is the
    // positively oriented canonical pair.
    S.col(j) = half * w.imag() * scale;
    S.col(n + j) = half * w.real() * scale;
    nu(j) = pairs[j].nu;
  }
  return WilliamsonResult{SymplecticMatrix(std::move(S), 1e-7), std::move(nu)};
}

}  // namespace cvqss
