#!/usr/bin/env python3
# Copyright 2026 The cvqss Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Reference pipeline that pins the regression values used by the C++ tests.

Everything here is computed with numpy/scipy only, independently of the C++
library, and frozen into tests/fixture_expected.inc.  Run from the repo root:

    python3 tests/oracle/fixture_oracle.py > tests/fixture_expected.inc
"""

import math
import sys
from itertools import combinations

import numpy as np
import scipy.linalg

# Built-in interferometer fixtures: (name, ancillas n, secret modes m, X, Y).
FIXTURES = [
    (
        "m1n2bad", 2, 1,
        [[-0.293099, -0.803506, -0.311073],
         [0.128259, -0.376779, 0.463209],
         [-0.633935, -0.0662967, 0.145639]],
        [[0.0921935, 0.16507, 0.368724],
         [0.650109, -0.23828, -0.384196],
         [-0.254222, 0.352131, -0.619594]],
    ),
    (
        "m1n2good", 2, 1,
        [[0.596667, 0.175214, 0.100266],
         [0.108915, 0.458534, -0.680759],
         [0.426961, -0.608681, -0.134113]],
        [[-0.0698255, 0.405573, 0.658688],
         [-0.457902, 0.174213, -0.272814],
         [-0.485058, -0.440131, 0.0151496]],
    ),
    (
        "m1n4", 4, 1,
        [[0.300365, 0.29053, -0.291467, 0.497589, -0.0499837],
         [0.0193436, -0.0889674, -0.576899, 0.216171, -0.181089],
         [0.068743, -0.627185, 0.0456175, 0.267772, 0.488823],
         [0.313121, -0.292716, 0.202423, -0.254404, -0.472559],
         [0.591341, 0.0132897, -0.118776, -0.45464, 0.0190248]],
        [[0.312353, -0.285854, 0.469979, 0.285289, -0.0937025],
         [0.0839586, -0.117954, -0.320784, -0.442078, 0.509978],
         [0.445916, -0.00774418, -0.243163, 0.0854139, -0.15446],
         [0.382669, 0.26366, 0.163123, 0.252382, 0.425447],
         [-0.0840343, -0.513083, -0.339929, 0.121405, -0.16842]],
    ),
    (
        "m2n2", 2, 2,
        [[-0.17138, 0.363352, 0.220969, 0.0345219],
         [0.158628, -0.268691, 0.342882, -0.0159773],
         [0.478503, -0.474253, -0.255255, 0.12308],
         [-0.435812, -0.0371908, 0.0669927, -0.343434]],
        [[-0.529669, -0.40525, 0.435797, 0.392287],
         [0.460908, 0.266619, 0.628541, 0.325934],
         [-0.130468, -0.312016, -0.235265, 0.544141],
         [-0.128694, 0.486635, -0.351609, 0.556099]],
    ),
]

DB_GRID = [0.0, 10.0, 20.0, 30.0, 40.0]


def orthosymplectic(X, Y):
    X = np.asarray(X, dtype=float)
    Y = np.asarray(Y, dtype=float)
    return np.block([[X, -Y], [Y, X]])


def decode_noise_weights(S, n, m, subset):
    """Return the residual-noise weight matrix B for the given player subset.

    Input mode layout of S: ancilla positions 0..n-1, secret positions n..n+m-1,
    then the momenta in the same order.  `subset` holds 1-based player indices.
    """
    ntot = n + m
    rows = [a - 1 for a in subset] + [ntot + a - 1 for a in subset]
    sub = S[rows, :]
    M = sub[:, 0:n]
    H = np.hstack([sub[:, n:n + m], sub[:, 2 * n + m:2 * (n + m)]])
    N = sub[:, n + m:2 * n + m]
    R = scipy.linalg.null_space(M.T).T          # orthonormal rows, ker(M^T)
    T = R @ H
    if np.linalg.matrix_rank(T, tol=1e-8 * max(1.0, np.linalg.norm(T, 2))) < 2 * m:
        return None
    D = np.linalg.pinv(T) @ R
    return D @ N


def fidelity(B, r):
    sigma2 = math.exp(-2.0 * r) / 2.0
    N = sigma2 * (B @ B.T)
    return 1.0 / math.sqrt(np.linalg.det(np.eye(N.shape[0]) + N))


def nu_max(B, r):
    sigma2 = math.exp(-2.0 * r) / 2.0
    return sigma2 * np.linalg.eigvalsh(B @ B.T).max()


def crossing_db(B, level):
    """Decibel value where nu_max falls to `level`, found by bisection."""
    def f(db):
        return nu_max(B, db * math.log(10.0) / 20.0) - level
    lo, hi = 0.0, 120.0
    if f(lo) < 0.0:
        return 0.0
    assert f(hi) < 0.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if f(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def main():
    out = sys.stdout
    out.write("// Generated by tests/oracle/fixture_oracle.py -- do not edit.\n")
    out.write("// Pinned regression values for the interferometer fixtures.\n\n")
    out.write("#pragma once\n\n")
    out.write("namespace cvqss_test_expected {\n\n")
    out.write("struct FixtureCurve {\n")
    out.write("  const char* name;\n")
    out.write("  int worst_party[4];   // 1-based player indices, -1 padded\n")
    out.write("  int best_party[4];\n")
    out.write("  double db[5];\n")
    out.write("  double nu_worst[5];\n")
    out.write("  double fid_worst[5];\n")
    out.write("  double nu_best[5];\n")
    out.write("  double fid_best[5];\n")
    out.write("};\n\n")

    rows = []
    extras = {}
    for name, n, m, X, Y in FIXTURES:
        S = orthosymplectic(X, Y)
        ntot = n + m
        k = m + (n + 1) // 2
        parties = list(combinations(range(1, ntot + 1), k))
        scored = []
        for p in parties:
            B = decode_noise_weights(S, n, m, p)
            assert B is not None, (name, p)
            lam = np.linalg.eigvalsh(B @ B.T).max()
            scored.append((lam, p, B))
        worst = max(scored, key=lambda t: t[0])
        best = min(scored, key=lambda t: t[0])
        row = {
            "name": name,
            "worst": worst[1],
            "best": best[1],
            "nu_worst": [nu_max(worst[2], db * math.log(10.0) / 20.0) for db in DB_GRID],
            "fid_worst": [fidelity(worst[2], db * math.log(10.0) / 20.0) for db in DB_GRID],
            "nu_best": [nu_max(best[2], db * math.log(10.0) / 20.0) for db in DB_GRID],
            "fid_best": [fidelity(best[2], db * math.log(10.0) / 20.0) for db in DB_GRID],
        }
        rows.append(row)
        if name in ("m1n2bad", "m1n2good"):
            extras[name + "_worst_cross_half_db"] = crossing_db(worst[2], 0.5)
        if name == "m1n2good":
            extras["m1n2good_worst_cross_one_db"] = crossing_db(worst[2], 1.0)
            extras["m1n2good_best_fid_40db"] = fidelity(
                best[2], 40.0 * math.log(10.0) / 20.0)

    def fmt(x):
        return repr(float(x))

    def party(p):
        q = list(p) + [-1] * (4 - len(p))
        return "{" + ", ".join(str(i) for i in q) + "}"

    out.write("inline constexpr FixtureCurve kFixtureCurves[] = {\n")
    for row in rows:
        out.write("    {\"%s\",\n" % row["name"])
        out.write("     %s,\n" % party(row["worst"]))
        out.write("     %s,\n" % party(row["best"]))
        out.write("     {%s},\n" % ", ".join(fmt(d) for d in DB_GRID))
        for key in ("nu_worst", "fid_worst", "nu_best", "fid_best"):
            out.write("     {%s},\n" % ", ".join(fmt(v) for v in row[key]))
        out.write("    },\n")
    out.write("};\n\n")
    for key in sorted(extras):
        out.write("inline constexpr double k_%s = %s;\n" % (key, fmt(extras[key])))
    out.write("\n}  // namespace cvqss_test_expected\n")


if __name__ == "__main__":
    main()
