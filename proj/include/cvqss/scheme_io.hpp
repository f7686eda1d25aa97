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

#include <string>
#include <vector>

#include <json.hpp>

#include "cvqss/channel.hpp"
#include "cvqss/sharing.hpp"

// File formats.
//
// Scheme files are versioned JSON with explicit field names and row-major
// X/Y matrices.  Serialization is deterministic and lossless: floats print
// with the shortest representation that parses back to the same double, so
// save -> load -> save is byte-identical and matrices entered with few
// digits keep their printed form.
//
// Curve files are CSV with header "db,r,party,nu_max,fidelity,class", one
// row per (grid point, party) sorted by (db ascending, party lexicographic),
// plus per grid point two marker rows with party "best" and "worst" carrying
// the flagged party's values.  Floats print with 9 significant digits and a
// '.' decimal separator regardless of locale.

namespace cvqss {

struct SchemeFile {
  SharingScheme scheme;
  nlohmann::ordered_json provenance;  ///< free-form metadata, kept verbatim
};

std::string serialize_scheme(const SchemeFile& file);
SchemeFile parse_scheme(const std::string& text);

/// Throws std::runtime_error on filesystem failures.
void save_scheme(const std::string& path, const SchemeFile& file);
SchemeFile load_scheme(const std::string& path);

/// Built-in interferometers: "m1n2bad", "m1n2good", "m1n4", "m2n2".
/// Matrix entries carry the six-digit precision they were published with.
SchemeFile fixture_scheme(const std::string& name);
std::vector<std::string> fixture_names();

std::string curve_csv(const std::vector<SqueezeGridPoint>& grid);

}  // namespace cvqss
