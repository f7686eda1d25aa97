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

#include "cvqss/scheme_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cvqss {

namespace {

// Published matrices are printed with six digits; accept their rounding
// error when validating unitarity on load.
constexpr double kLoadTol = 1e-5;

std::vector<double> row_major(const Matrix& m) {
  std::vector<double> out;
  out.reserve(m.size());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  }
  return out;
}

Matrix from_row_major(const std::vector<double>& v, int n) {
  if (static_cast<int>(v.size()) != n * n) {
    throw std::invalid_argument("scheme file: matrix entry count mismatch");
  }
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = v[i * n + j];
  }
  return m;
}

std::string format_double(double v, int precision) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v,
                           std::chars_format::general, precision);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string serialize_scheme(const SchemeFile& file) {
  nlohmann::ordered_json j;
  j["format"] = "cvqss-scheme";
  j["version"] = 1;
  j["ancillas"] = file.scheme.ancillas;
  j["secret_modes"] = file.scheme.secret_modes;
  j["x"] = row_major(file.scheme.interferometer.X());
  j["y"] = row_major(file.scheme.interferometer.Y());
  j["provenance"] = file.provenance;
  return j.dump(2) + "\n";
}

SchemeFile parse_scheme(const std::string& text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("scheme file: ") + e.what());
  }
  if (!j.is_object() || j.value("format", "") != "cvqss-scheme") {
    throw std::invalid_argument("scheme file: missing cvqss-scheme header");
  }
  if (j.value("version", 0) != 1) {
    throw std::invalid_argument("scheme file: unsupported version");
  }
  const int n = j.at("ancillas").get<int>();
  const int m = j.at("secret_modes").get<int>();
  if (n < 1 || m < 1) {
    throw std::invalid_argument("scheme file: invalid mode counts");
  }
  const int ntot = n + m;
  const auto x = j.at("x").get<std::vector<double>>();
  const auto y = j.at("y").get<std::vector<double>>();
  PassiveInterferometer u(from_row_major(x, ntot), from_row_major(y, ntot),
                          kLoadTol);
  SchemeFile file{SharingScheme(n, m, std::move(u)),
                  j.value("provenance", nlohmann::ordered_json::object())};
  return file;
}

void save_scheme(const std::string& path, const SchemeFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << serialize_scheme(file);
  if (!out) throw std::runtime_error("write failed: " + path);
}

SchemeFile load_scheme(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scheme(ss.str());
}

std::string curve_csv(const std::vector<SqueezeGridPoint>& grid) {
  std::string out = "db,r,party,nu_max,fidelity,class\n";
  auto row = [&out](const SqueezeGridPoint& g, const std::string& label,
                    const PartyCurvePoint& c) {
    out += format_double(g.db, 9);
    out += ',';
    out += format_double(g.r, 9);
    out += ',';
    out += label;
    out += ',';
    out += format_double(c.nu_max, 9);
    out += ',';
    out += format_double(c.fidelity, 9);
    out += ',';
    out += to_string(c.cls);
    out += '\n';
  };
  for (const SqueezeGridPoint& g : grid) {
    std::vector<const PartyCurvePoint*> sorted;
    for (const PartyCurvePoint& c : g.parties) sorted.push_back(&c);
    std::sort(sorted.begin(), sorted.end(),
              [](const PartyCurvePoint* a, const PartyCurvePoint* b) {
                return a->party.label() < b->party.label();
              });
    for (const PartyCurvePoint* c : sorted) row(g, c->party.label(), *c);
    row(g, "best", g.parties[g.best]);
    row(g, "worst", g.parties[g.worst]);
  }
  return out;
}

namespace {

struct FixtureDef {
  const char* name;
  int n, m;
  std::vector<std::vector<double>> x, y;
};

const std::vector<FixtureDef>& fixture_table() {
  static const std::vector<FixtureDef> table = {
      {"m1n2bad", 2, 1,
       {{-0.293099, -0.803506, -0.311073},
        {0.128259, -0.376779, 0.463209},
        {-0.633935, -0.0662967, 0.145639}},
       {{0.0921935, 0.16507, 0.368724},
        {0.650109, -0.23828, -0.384196},
        {-0.254222, 0.352131, -0.619594}}},
      {"m1n2good", 2, 1,
       {{0.596667, 0.175214, 0.100266},
        {0.108915, 0.458534, -0.680759},
        {0.426961, -0.608681, -0.134113}},
       {{-0.0698255, 0.405573, 0.658688},
        {-0.457902, 0.174213, -0.272814},
        {-0.485058, -0.440131, 0.0151496}}},
      {"m1n4", 4, 1,
       {{0.300365, 0.29053, -0.291467, 0.497589, -0.0499837},
        {0.0193436, -0.0889674, -0.576899, 0.216171, -0.181089},
        {0.068743, -0.627185, 0.0456175, 0.267772, 0.488823},
        {0.313121, -0.292716, 0.202423, -0.254404, -0.472559},
        {0.591341, 0.0132897, -0.118776, -0.45464, 0.0190248}},
       {{0.312353, -0.285854, 0.469979, 0.285289, -0.0937025},
        {0.0839586, -0.117954, -0.320784, -0.442078, 0.509978},
        {0.445916, -0.00774418, -0.243163, 0.0854139, -0.15446},
        {0.382669, 0.26366, 0.163123, 0.252382, 0.425447},
        {-0.0840343, -0.513083, -0.339929, 0.121405, -0.16842}}},
      {"m2n2", 2, 2,
       {{-0.17138, 0.363352, 0.220969, 0.0345219},
        {0.158628, -0.268691, 0.342882, -0.0159773},
        {0.478503, -0.474253, -0.255255, 0.12308},
        {-0.435812, -0.0371908, 0.0669927, -0.343434}},
       {{-0.529669, -0.40525, 0.435797, 0.392287},
        {0.460908, 0.266619, 0.628541, 0.325934},
        {-0.130468, -0.312016, -0.235265, 0.544141},
        {-0.128694, 0.486635, -0.351609, 0.556099}}},
  };
  return table;
}

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& f : fixture_table()) names.emplace_back(f.name);
  return names;
}

SchemeFile fixture_scheme(const std::string& name) {
  for (const auto& f : fixture_table()) {
    if (name == f.name) {
      const int ntot = f.n + f.m;
      Matrix X(ntot, ntot), Y(ntot, ntot);
      for (int i = 0; i < ntot; ++i) {
        for (int j = 0; j < ntot; ++j) {
          X(i, j) = f.x[i][j];
          Y(i, j) = f.y[i][j];
        }
      }
      nlohmann::ordered_json prov;
      prov["kind"] = "fixture";
      prov["name"] = name;
      return SchemeFile{
          SharingScheme(f.n, f.m, PassiveInterferometer(X, Y, kLoadTol)),
          prov};
    }
  }
  throw std::invalid_argument("unknown fixture: " + name);
}

}  // namespace cvqss
