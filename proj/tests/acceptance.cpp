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

// End-to-end acceptance suite.  Each numbered criterion prints exactly one
// PASS/FAIL line; the process exits nonzero if any of them fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "cvqss/channel.hpp"
#include "cvqss/scheme_io.hpp"
#include "cvqss/search.hpp"
#include "cvqss/sharing.hpp"
#include "cvqss/synthesis.hpp"
#include "fixture_expected.inc"
#include "test_support.hpp"

using namespace cvqss;
using cvqss_test::max_abs;

namespace {

int g_failures = 0;

void report(int criterion, const char* name, bool ok,
            const std::string& detail) {
  std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion,
              name, detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++g_failures;
}

double seconds_since(
    const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

bool rel_close(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({1e-300, std::abs(a), std::abs(b)});
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

// ---------------------------------------------------------------------------

void criterion1_decoder_algebra() {
  const auto t0 = std::chrono::steady_clock::now();
  int bad = 0;
  int done = 0;
  for (std::uint64_t seed = 1; done < 500; ++seed) {
    const int n = 1 + static_cast<int>(seed % 6);
    const int m = 1 + static_cast<int>(seed % 2);
    const auto scheme = cvqss_test::random_scheme(n, m, seed * 7919 + 13);
    const auto parties = threshold_subsets(scheme);
    const PlayerSubset& A = parties[seed % parties.size()];
    const DecodingPlan plan = decoding_plan(scheme, A);
    ++done;
    if (!plan.decodable) {
      ++bad;
      continue;
    }
    const int k = A.size();
    if (max_abs(plan.D * plan.blocks.M) > 1e-8 ||
        max_abs(plan.D * plan.blocks.H - Matrix::Identity(2 * m, 2 * m)) >
            1e-8 ||
        max_abs(plan.D * symplectic_form(k) * plan.D.transpose() -
                symplectic_form(m)) > 1e-8) {
      ++bad;
    }
  }
  const double dt = seconds_since(t0);
  report(1, "decoder algebra (D M = 0, D H = I, D J D^T = J at 1e-8)",
         bad == 0 && dt < 30.0,
         std::to_string(500 - bad) + "/500 instances, " +
             std::to_string(dt).substr(0, 5) + " s");
}

void criterion2_haar_typicality() {
  const auto t0 = std::chrono::steady_clock::now();
  int non_decodable = 0;
  const std::vector<std::pair<int, int>> configs = {{2, 1}, {4, 1}, {2, 2}};
  for (std::size_t c = 0; c < configs.size(); ++c) {
    const auto [n, m] = configs[c];
    for (int i = 0; i < 1000; ++i) {
      const auto scheme = cvqss_test::random_scheme(
          n, m, 0x5eed0000 + 1000 * c + static_cast<std::uint64_t>(i));
      for (const PlayerSubset& A : threshold_subsets(scheme)) {
        if (!decodability(scheme, A)) ++non_decodable;
      }
    }
  }
  const double dt = seconds_since(t0);
  report(2, "Haar typicality (3000 samples, all threshold subsets decode)",
         non_decodable == 0 && dt < 120.0,
         std::to_string(non_decodable) + " non-decodable, " +
             std::to_string(dt).substr(0, 5) + " s");
}

void criterion3_ramp_structure() {
  bool ok = true;
  for (int i = 0; i < 100 && ok; ++i) {
    const auto scheme =
        cvqss_test::random_scheme(2, 2, 0xaa00 + static_cast<std::uint64_t>(i));
    for (const AccessReport& rep : access_structure_reference(scheme)) {
      const int size = rep.subset.size();
      if (size >= 3 && rep.cls != AccessClass::full) ok = false;
      if (size == 2 && rep.recoverable != 2) ok = false;
      if (size == 1 && rep.recoverable != 0) ok = false;
    }
  }
  // Single-mode secrets: a pure threshold structure, class decided by size.
  for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 1}, {4, 1}}) {
    const int k = threshold(n, m);
    for (int i = 0; i < 100 && ok; ++i) {
      const auto scheme = cvqss_test::random_scheme(
          n, m, 0xbb00 + static_cast<std::uint64_t>(i));
      for (const AccessReport& rep : access_structure_reference(scheme)) {
        const AccessClass expect =
            rep.subset.size() >= k ? AccessClass::full : AccessClass::none;
        if (rep.cls != expect) ok = false;
      }
    }
  }
  report(3, "ramp structure at (2,2) and threshold structure at m = 1", ok,
         "");
}

void criterion4_fidelity_oracles() {
  // Quadrature oracle: 2 pi * int W_alpha W_out, tensor Gauss-Legendre.
  auto overlap = [](const Matrix& N) {
    const Matrix A = Matrix::Identity(2, 2) + 2.0 * N;
    const Matrix Ainv = A.inverse();
    const double norm_out = 1.0 / std::sqrt(A.determinant());
    std::vector<double> nodes, weights;
    cvqss_test::gauss_legendre(160, -12.0, 12.0, nodes, weights);
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (std::size_t j = 0; j < nodes.size(); ++j) {
        Vector xi(2);
        xi << nodes[i], nodes[j];
        acc += weights[i] * weights[j] * std::exp(-xi.dot(xi)) * norm_out *
               std::exp(-xi.dot(Ainv * xi));
      }
    }
    return 2.0 * acc / std::numbers::pi;
  };

  Rng rng(0xfade);
  double worst_quad = 0.0, worst_pair = 0.0;
  for (int t = 0; t < 20; ++t) {
    Matrix A(2, 2);
    for (int i = 0; i < 4; ++i) A(i / 2, i % 2) = rng.uniform(-1, 1);
    Matrix N = A * A.transpose();
    const double top =
        Eigen::SelfAdjointEigenSolver<Matrix>(N).eigenvalues().maxCoeff();
    N *= rng.uniform(0.05, 1.0) * 5.0 / top;
    worst_quad = std::max(
        worst_quad, std::abs(fidelity_gaussian(NoiseMatrix(N)) - overlap(N)));
  }
  for (int t = 0; t < 50; ++t) {
    const int n = 1 + t % 5;
    Matrix B(2, n);
    for (int i = 0; i < 2 * n; ++i) B(i / n, i % n) = rng.uniform(-2, 2);
    const double r = rng.uniform(0.0, 2.5);
    worst_pair = std::max(
        worst_pair, std::abs(fidelity_coherent(B, r) -
                             fidelity_gaussian(noise_matrix(B, r))));
  }
  report(4, "fidelity vs quadrature oracle (1e-5) and formula pair (1e-12)",
         worst_quad <= 1e-5 && worst_pair <= 1e-12,
         "quad dev " + sci(worst_quad) + ", pair dev " + sci(worst_pair));
}

void criterion5_exact_scaling() {
  bool ok = true;
  for (const char* name : {"m1n2bad", "m1n2good", "m1n4", "m2n2"}) {
    const auto scheme = fixture_scheme(name).scheme;
    for (const PlayerSubset& A : threshold_subsets(scheme)) {
      const DecodingPlan plan = decoding_plan(scheme, A);
      const double nu0 = nu_max(noise_matrix(plan.B, 0.0));
      double prev_f = 0.0;
      for (int i = 0; i < 100; ++i) {
        const double db = 40.0 * i / 99.0;
        const double r = db * std::numbers::ln10 / 20.0;
        const double nu = nu_max(noise_matrix(plan.B, r));
        if (!rel_close(nu, std::exp(-2.0 * r) * nu0, 1e-12)) ok = false;
        const double f = fidelity_gaussian(noise_matrix(plan.B, r));
        if (f <= prev_f) ok = false;
        prev_f = f;
      }
    }
  }
  report(5, "exact nu_max scaling (1e-12) and fidelity monotonicity", ok, "");
}

void criterion6_fixture_regression() {
  bool ok = true;
  std::string detail;
  for (const auto& fix : cvqss_test_expected::kFixtureCurves) {
    const auto scheme = fixture_scheme(fix.name).scheme;
    const auto parties = threshold_subsets(scheme);
    std::vector<double> grid(fix.db, fix.db + 5);
    const auto curve = sweep_reference(scheme, parties, grid);
    for (int i = 0; i < 5; ++i) {
      const auto& worst = curve[i].parties[curve[i].worst];
      const auto& best = curve[i].parties[curve[i].best];
      if (!rel_close(worst.nu_max, fix.nu_worst[i], 1e-6) ||
          !rel_close(worst.fidelity, fix.fid_worst[i], 1e-6) ||
          !rel_close(best.nu_max, fix.nu_best[i], 1e-6) ||
          !rel_close(best.fidelity, fix.fid_best[i], 1e-6)) {
        ok = false;
        detail = std::string("mismatch in ") + fix.name;
      }
    }
  }

  // Best-party fidelity at 40 dB checked against the pinned value, which
  // itself certifies F >= 1 - 1e-3.
  {
    const auto scheme = fixture_scheme("m1n2good").scheme;
    const DecodingPlan plan = decoding_plan(scheme, PlayerSubset{1, 2});
    const double f40 = fidelity_gaussian(
        noise_matrix(plan.B, 40.0 * std::numbers::ln10 / 20.0));
    if (!rel_close(f40, cvqss_test_expected::k_m1n2good_best_fid_40db, 1e-6) ||
        !(cvqss_test_expected::k_m1n2good_best_fid_40db >= 1.0 - 1e-3)) {
      ok = false;
      detail = "best-party 40 dB fidelity";
    }
  }

  // Crossing comparison: the unlucky interferometer needs strictly more
  // squeezing to stop being entanglement-degrading.
  auto crossing = [](const SharingScheme& scheme, const PlayerSubset& party,
                     double level) {
    const DecodingPlan plan = decoding_plan(scheme, party);
    double lo = 0.0, hi = 120.0;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double nu =
          nu_max(noise_matrix(plan.B, mid * std::numbers::ln10 / 20.0));
      (nu > level ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };
  const double gh =
      crossing(fixture_scheme("m1n2good").scheme, PlayerSubset{1, 3}, 0.5);
  const double bh =
      crossing(fixture_scheme("m1n2bad").scheme, PlayerSubset{2, 3}, 0.5);
  if (!rel_close(gh, cvqss_test_expected::k_m1n2good_worst_cross_half_db,
                 1e-6) ||
      !rel_close(bh, cvqss_test_expected::k_m1n2bad_worst_cross_half_db,
                 1e-6) ||
      !(bh > gh)) {
    ok = false;
    detail = "crossing points";
  }
  report(6, "fixture curve regression against pinned oracle values (1e-6)",
         ok, detail);
}

void criterion7_synthesis() {
  bool ok = true;
  std::string detail;
  int done = 0;
  for (std::uint64_t seed = 1; done < 100; ++seed) {
    const int n = 1 + static_cast<int>(seed % 6);
    const auto scheme = cvqss_test::random_scheme(n, 1, seed * 104729 + 7);
    const auto parties = threshold_subsets(scheme);
    const DecodingPlan plan =
        decoding_plan(scheme, parties[seed % parties.size()]);
    if (!plan.decodable) continue;
    ++done;
    const FactoredDecoder dec = complete_m1(plan.D);
    const Matrix& S = dec.composed.matrix();
    const int k = dec.composed.modes();
    if (max_abs(S.row(0) - plan.D.row(0)) > 1e-8 ||
        max_abs(S.row(k) - plan.D.row(1)) > 1e-8) {
      ok = false;
      detail = "embedding";
    }
    if (!is_symplectic(S, 1e-8)) {
      ok = false;
      detail = "symplecticity";
    }
    if (squeezer_budget(dec.composed).count > 2) {
      ok = false;
      detail = "squeezer budget";
    }
  }
  Rng rng(0xb10c);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 6;
    const Matrix S = cvqss_test::random_symplectic(n, rng);
    const auto f = bloch_messiah(SymplecticMatrix(S));
    const Matrix rebuilt = f.left.symplectic() *
                           squeezer_matrix(f.squeeze).matrix() *
                           f.right.symplectic();
    if (max_abs(rebuilt - S) > 1e-8) {
      ok = false;
      detail = "factorization round-trip";
    }
  }
  report(7,
         "synthesis (embed + symplectic at 1e-8, <= 2 squeezers, "
         "factorization round-trip)",
         ok, detail);
}

void criterion8_sampler_statistics() {
  const int N = 10000;
  const double crit1 = cvqss_test::ks_critical(0.01) / std::sqrt(double(N));
  const double crit2 =
      cvqss_test::ks_critical(0.01) * std::sqrt(2.0 / double(N));
  auto samples = [&](SampleMethod m, std::uint64_t seed) {
    std::vector<double> out;
    out.reserve(N);
    for (const auto& p : sample_haar_batch(3, N, RngSeed{seed}, m)) {
      out.push_back(p.X()(0, 0) * p.X()(0, 0) + p.Y()(0, 0) * p.Y()(0, 0));
    }
    return out;
  };
  const auto beta_cdf = [](double t) { return 1.0 - (1.0 - t) * (1.0 - t); };
  const auto eu = samples(SampleMethod::euler, 0xe0e0);
  const auto on = samples(SampleMethod::orthonormalize, 0x0101);
  const double d_eu = cvqss_test::ks_statistic(eu, beta_cdf);
  const double d_on = cvqss_test::ks_statistic(on, beta_cdf);
  const double d_two = cvqss_test::ks_statistic_two(eu, on);
  report(8, "sampler statistics (KS vs Beta(1,2) and two-sample KS, 0.01)",
         d_eu < crit1 && d_on < crit1 && d_two < crit2,
         "D_euler " + sci(d_eu) + ", D_ortho " + sci(d_on) + ", D_two " +
             sci(d_two) + " (crit " + sci(crit1) + "/" + sci(crit2) + ")");
}

void criterion9_search_determinism() {
  const SearchResult a =
      search_schemes(2, 1, 1000, RngSeed{77}, SampleMethod::orthonormalize, 1);
  const SearchResult b =
      search_schemes(2, 1, 1000, RngSeed{77}, SampleMethod::orthonormalize, 4);
  const SearchResult c = search_schemes_reference(2, 1, 1000, RngSeed{77});

  auto serialize_winner = [](const SearchResult& r) {
    SharingScheme winner = rebuild_sample(2, 1, RngSeed{77},
                                          SampleMethod::orthonormalize,
                                          r.winner_index);
    nlohmann::ordered_json prov;
    prov["kind"] = "haar-search";
    prov["winner_index"] = r.winner_index;
    return serialize_scheme({std::move(winner), prov});
  };
  const std::string sa = serialize_winner(a);
  const std::string sb = serialize_winner(b);
  const std::string sc = serialize_winner(c);
  report(9, "search determinism across worker counts (byte-identical winner)",
         sa == sb && sb == sc && a.winner_score == b.winner_score &&
             b.winner_score == c.winner_score,
         "winner index " + std::to_string(a.winner_index));
}

}  // namespace

int main() {
  criterion1_decoder_algebra();
  criterion2_haar_typicality();
  criterion3_ramp_structure();
  criterion4_fidelity_oracles();
  criterion5_exact_scaling();
  criterion6_fixture_regression();
  criterion7_synthesis();
  criterion8_sampler_statistics();
  criterion9_search_determinism();
  if (g_failures > 0) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
