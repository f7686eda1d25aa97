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

#include <Eigen/Dense>
#include <vector>

// Real symplectic and orthogonal-symplectic matrix algebra.
//
// Conventions used everywhere in this library:
//   * Quadratures of an n-mode system are ordered (q_1..q_n, p_1..p_n).
//   * The symplectic form is J = [[0, I], [-I, 0]].
//   * A passive interferometer with unitary U = X + iY acts on quadratures
//     as the orthogonal-symplectic matrix [[X, -Y], [Y, X]].
//   * A squeezer with parameters r acts as diag(e^{r_1}..e^{r_n},
//     e^{-r_1}..e^{-r_n}); r > 0 squeezes the momentum quadrature.
//   * Vacuum quadrature variance is 1/2.

namespace cvqss {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kDefaultTol = 1e-9;

/// The 2n x 2n symplectic form J = [[0, I], [-I, 0]].  Throws for n < 1.
Matrix symplectic_form(int n);

/// x^T J y for two quadrature-coefficient vectors of equal even length.
double symplectic_product(const Vector& x, const Vector& y);

/// True iff max-abs entry of S J S^T - J is at most tol.  Throws if S is not
/// square with even dimension.
bool is_symplectic(const Matrix& S, double tol = kDefaultTol);

/// A photon-number-preserving Gaussian unitary, stored as the real and
/// imaginary blocks of its n_tot x n_tot unitary matrix.
class PassiveInterferometer {
 public:
  /// Validates that X + iY is unitary within tol.
  PassiveInterferometer(Matrix X, Matrix Y, double tol = kDefaultTol);

  int modes() const { return static_cast<int>(x_.rows()); }
  const Matrix& X() const { return x_; }
  const Matrix& Y() const { return y_; }

  /// The induced 2n x 2n orthogonal-symplectic matrix [[X, -Y], [Y, X]].
  Matrix symplectic() const;
  ComplexMatrix unitary() const;

 private:
  Matrix x_, y_;
};

/// X = Re U, Y = Im U.  Throws if U deviates from unitarity beyond tol.
PassiveInterferometer unitary_to_symplectic(const ComplexMatrix& U,
                                            double tol = kDefaultTol);

/// Reads the X and Y blocks back out of an orthogonal-symplectic matrix.
/// Throws if the matrix does not have the [[X, -Y], [Y, X]] structure.
PassiveInterferometer passive_from_symplectic(const Matrix& S,
                                              double tol = kDefaultTol);

/// Per-mode squeezing parameters; r > 0 squeezes momentum.
struct SqueezerProfile {
  std::vector<double> r;

  int modes() const { return static_cast<int>(r.size()); }
};

/// A 2n x 2n real matrix validated to satisfy S J S^T = J within tol.
class SymplecticMatrix {
 public:
  explicit SymplecticMatrix(Matrix S, double tol = kDefaultTol);

  int modes() const { return n_; }
  const Matrix& matrix() const { return m_; }

 private:
  int n_;
  Matrix m_;
};

/// diag(e^{r_1}..e^{r_n}, e^{-r_1}..e^{-r_n}); symplectic by construction.
SymplecticMatrix squeezer_matrix(const SqueezerProfile& profile);

/// S = left * K(squeeze) * right with passive outer factors and all
/// squeeze entries >= 0.
struct BlochMessiahFactors {
  PassiveInterferometer left;
  SqueezerProfile squeeze;
  PassiveInterferometer right;
};

/// Bloch-Messiah (Euler) decomposition of a symplectic matrix.
///
/// Decomposes via the polar factor P = (S S^T)^{1/2}: P is symmetric
/// positive-definite and symplectic, so J exchanges its e^{d} and e^{-d}
/// eigenspaces, which yields an orthogonal-symplectic eigenbasis.
/// Degenerate singular values are allowed; the near-unit eigenvalue cluster
/// is handled by a symplectic Gram-Schmidt pass.
BlochMessiahFactors bloch_messiah(const SymplecticMatrix& S,
                                  double tol = kDefaultTol);

struct WilliamsonResult {
  SymplecticMatrix S;  ///< symplectic congruence factor
  Vector nu;           ///< symplectic eigenvalues, sorted descending
};

/// Williamson normal form G = S diag(nu, nu) S^T of a symmetric
/// positive-definite matrix.  Throws for non-positive-definite input.
WilliamsonResult williamson(const Matrix& G);

/// Extends orthonormal symplectic row pairs (x_i, y_i) -- satisfying
/// x_i^T J y_j = delta_ij with all rows orthonormal -- to a full 2k x 2k
/// orthogonal-symplectic matrix with rows (x_1..x_k, y_1..y_k).  New pairs
/// are chosen as y = -J x with x the dominant left-singular direction of the
/// projector onto the orthogonal complement of the rows picked so far.
Matrix extend_orthosymplectic_basis(int k, std::vector<Vector> xs,
                                    std::vector<Vector> ys);

/// S^{-1} = J^T S^T J for a symplectic S on n modes.
Matrix symplectic_inverse(const Matrix& S);

}  // namespace cvqss
