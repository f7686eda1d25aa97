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

// Command-line front end.  Exit codes: 0 success, 2 usage error,
// 3 validation/decodability error, 4 I/O error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cvqss/channel.hpp"
#include "cvqss/scheme_io.hpp"
#include "cvqss/search.hpp"
#include "cvqss/sharing.hpp"

namespace {

using nlohmann::ordered_json;

cvqss::SampleMethod parse_method(const std::string& name) {
  if (name == "euler") return cvqss::SampleMethod::euler;
  return cvqss::SampleMethod::orthonormalize;
}

std::vector<std::vector<double>> matrix_rows(const cvqss::Matrix& m) {
  std::vector<std::vector<double>> rows;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    std::vector<double> row;
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json subset_report(const cvqss::SharingScheme& scheme,
                           const cvqss::PlayerSubset& subset) {
  ordered_json j;
  j["indices"] = subset.indices;
  j["label"] = subset.label();
  const int rec = cvqss::recoverable_count(scheme, subset);
  const int full = 2 * scheme.secret_modes;
  j["recoverable"] = rec;
  j["class"] = rec == full ? "full" : rec == 0 ? "none" : "partial";
  const cvqss::DecodingPlan plan = cvqss::decoding_plan(scheme, subset);
  j["decodable"] = plan.decodable;
  if (plan.decodable) {
    j["d"] = matrix_rows(plan.D);
    j["b"] = matrix_rows(plan.B);
    j["tr_bbt"] = (plan.B * plan.B.transpose()).trace();
  }
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"Continuous-variable secret sharing with random passive "
               "interferometers"};
  app.require_subcommand(1);

  // --- sample ---------------------------------------------------------
  auto* sample = app.add_subcommand(
      "sample", "Draw a Haar-random sharing scheme and write it to a file");
  int s_n = 0, s_m = 0;
  std::uint64_t s_seed = 0;
  std::string s_method = "orthonormalize";
  std::string s_out;
  sample->add_option("--ancillas", s_n, "Squeezed ancilla mode count")
      ->required()->check(CLI::PositiveNumber);
  sample->add_option("--secret", s_m, "Secret mode count")
      ->required()->check(CLI::PositiveNumber);
  sample->add_option("--seed", s_seed, "RNG seed")->required();
  sample->add_option("--method", s_method, "euler|orthonormalize")
      ->check(CLI::IsMember({"euler", "orthonormalize"}));
  sample->add_option("--out", s_out, "Output scheme path")->required();

  // --- fixtures -------------------------------------------------------
  auto* fixtures = app.add_subcommand(
      "fixtures", "Write one of the built-in interferometer fixtures");
  std::string f_name, f_out;
  fixtures->add_option("--name", f_name, "m1n2bad|m1n2good|m1n4|m2n2")
      ->required();
  fixtures->add_option("--out", f_out, "Output scheme path")->required();

  // --- analyze --------------------------------------------------------
  auto* analyze = app.add_subcommand(
      "analyze", "Decodability report for player subsets (JSON on stdout)");
  std::string a_scheme, a_subset;
  bool a_all = false;
  analyze->add_option("scheme", a_scheme, "Scheme file")->required();
  auto* a_sub_opt =
      analyze->add_option("--subset", a_subset, "Comma-separated player "
                          "indices, e.g. 1,2,4");
  analyze->add_flag("--all", a_all, "Report every nonempty subset");
  a_sub_opt->excludes("--all");

  // --- sweep ----------------------------------------------------------
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "Reconstruction quality versus input squeezing (CSV)");
  std::string w_scheme, w_out, w_parties = "all-threshold";
  double w_min = 0.0, w_max = 40.0;
  int w_steps = 81, w_threads = 0;
  sweep_cmd->add_option("scheme", w_scheme, "Scheme file")->required();
  sweep_cmd->add_option("--db-min", w_min, "Grid start in dB");
  sweep_cmd->add_option("--db-max", w_max, "Grid end in dB");
  sweep_cmd->add_option("--steps", w_steps, "Number of grid points")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--parties", w_parties,
                        "Party selection (all-threshold)")
      ->check(CLI::IsMember({"all-threshold"}));
  sweep_cmd->add_option("--threads", w_threads, "Worker threads (0 = auto)");
  sweep_cmd->add_option("--out", w_out, "Output CSV path")->required();

  // --- search ---------------------------------------------------------
  auto* search_cmd = app.add_subcommand(
      "search", "Random search for a low-noise scheme");
  int r_n = 0, r_m = 0, r_samples = 0, r_threads = 0;
  std::uint64_t r_seed = 0;
  std::string r_method = "orthonormalize", r_criterion = "min-numax", r_out;
  search_cmd->add_option("--ancillas", r_n, "Squeezed ancilla mode count")
      ->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--secret", r_m, "Secret mode count")
      ->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--samples", r_samples, "Schemes to draw")
      ->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--seed", r_seed, "RNG seed")->required();
  search_cmd->add_option("--criterion", r_criterion, "min-numax")
      ->check(CLI::IsMember({"min-numax"}));
  search_cmd->add_option("--method", r_method, "euler|orthonormalize")
      ->check(CLI::IsMember({"euler", "orthonormalize"}));
  search_cmd->add_option("--threads", r_threads, "Worker threads (0 = auto)");
  search_cmd->add_option("--out", r_out, "Output path for the winner");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (sample->parsed()) {
    cvqss::SharingScheme scheme(
        s_n, s_m,
        cvqss::sample_haar(s_n + s_m, cvqss::RngSeed{s_seed},
                           parse_method(s_method)));
    ordered_json prov;
    prov["kind"] = "haar-sample";
    prov["seed"] = s_seed;
    prov["method"] = s_method;
    cvqss::save_scheme(s_out, {std::move(scheme), prov});
    return 0;
  }

  if (fixtures->parsed()) {
    cvqss::save_scheme(f_out, cvqss::fixture_scheme(f_name));
    return 0;
  }

  if (analyze->parsed()) {
    const cvqss::SchemeFile file = cvqss::load_scheme(a_scheme);
    ordered_json out;
    out["ancillas"] = file.scheme.ancillas;
    out["secret_modes"] = file.scheme.secret_modes;
    out["threshold"] =
        cvqss::threshold(file.scheme.ancillas, file.scheme.secret_modes);
    ordered_json subsets = ordered_json::array();
    if (a_all) {
      for (const cvqss::AccessReport& rep :
           cvqss::access_structure(file.scheme)) {
        subsets.push_back(subset_report(file.scheme, rep.subset));
      }
    } else if (!a_subset.empty()) {
      std::vector<int> idx;
      std::string token;
      std::istringstream ss(a_subset);
      while (std::getline(ss, token, ',')) {
        try {
          idx.push_back(std::stoi(token));
        } catch (const std::exception&) {
          std::cerr << "cvqss: bad subset token '" << token << "'\n";
          return 2;
        }
      }
      std::sort(idx.begin(), idx.end());
      if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) {
        std::cerr << "cvqss: repeated player index in --subset\n";
        return 2;
      }
      subsets.push_back(
          subset_report(file.scheme, cvqss::PlayerSubset(std::move(idx))));
    } else {
      std::cerr << "cvqss: analyze needs --subset or --all\n";
      return 2;
    }
    out["subsets"] = std::move(subsets);
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (sweep_cmd->parsed()) {
    if (w_parties != "all-threshold") {
      std::cerr << "cvqss: unsupported --parties value\n";
      return 2;
    }
    const cvqss::SchemeFile file = cvqss::load_scheme(w_scheme);
    std::vector<cvqss::PlayerSubset> parties;
    for (const cvqss::PlayerSubset& p : cvqss::threshold_subsets(file.scheme)) {
      if (cvqss::decodability(file.scheme, p)) parties.push_back(p);
    }
    if (parties.empty()) {
      throw std::invalid_argument("no decodable threshold-size party");
    }
    std::vector<double> grid;
    for (int i = 0; i < w_steps; ++i) {
      grid.push_back(w_steps == 1 ? w_min
                                  : w_min + (w_max - w_min) * i / (w_steps - 1));
    }
    const auto points = cvqss::sweep(file.scheme, parties, grid, w_threads);
    std::ofstream out(w_out, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + w_out);
    out << cvqss::curve_csv(points);
    if (!out) throw std::runtime_error("write failed: " + w_out);
    return 0;
  }

  if (search_cmd->parsed()) {
    if (r_criterion != "min-numax") {
      std::cerr << "cvqss: unsupported --criterion value\n";
      return 2;
    }
    const cvqss::SampleMethod method = parse_method(r_method);
    const cvqss::SearchResult result =
        cvqss::search_schemes(r_n, r_m, r_samples, cvqss::RngSeed{r_seed},
                              method, r_threads);
    ordered_json report;
    report["samples"] = result.samples;
    report["ancillas"] = r_n;
    report["secret_modes"] = r_m;
    report["threshold"] = cvqss::threshold(r_n, r_m);
    report["criterion"] = r_criterion;
    report["seed"] = r_seed;
    report["method"] = r_method;
    report["winner_index"] = result.winner_index;
    report["winner_score"] = result.winner_score;
    std::cout << report.dump(2) << "\n";
    if (!r_out.empty()) {
      cvqss::SharingScheme winner = cvqss::rebuild_sample(
          r_n, r_m, cvqss::RngSeed{r_seed}, method, result.winner_index);
      ordered_json prov;
      prov["kind"] = "haar-search";
      prov["seed"] = r_seed;
      prov["method"] = r_method;
      prov["samples"] = result.samples;
      prov["winner_index"] = result.winner_index;
      prov["criterion"] = r_criterion;
      cvqss::save_scheme(r_out, {std::move(winner), prov});
    }
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "cvqss: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "cvqss: " << e.what() << "\n";
    return 3;
  } catch (const std::runtime_error& e) {
    std::cerr << "cvqss: " << e.what() << "\n";
    return 4;
  }
}
