// Copyright 2026 The hodge-bounds Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef HODGE_BOUNDS_REPRODUCE_HPP
#define HODGE_BOUNDS_REPRODUCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "hodge_bounds/analysis.hpp"

namespace hodge {

enum class Verdict { Match, Erratum, Mismatch };

std::string to_string(Verdict v);

/// A published inequality. Linear rows are "lhs >= rhs"; root rows are
/// target >= lin + coef*sqrt(rad).
struct PublishedForm {
  std::string target;  // root rows only
  std::string lhs;     // linear: left side; root: lin
  std::string rhs;     // linear: right side; root: coef
  std::string rad;     // root rows only
};

struct Fixture {
  std::string id;
  std::string group;  // "first-order", "closed-form" or "rank"
  int d = 0;
  bool root = false;
  /// Provenance tag of the catalog constraint the row is derived from.
  std::string source;
  PublishedForm printed;
  /// Form the engine derives when the printed one is known to be wrong.
  std::optional<PublishedForm> corrected;
  std::string note;
};

const std::vector<Fixture>& published_fixtures();

struct ReproRow {
  std::string id;
  std::string group;
  int d = 0;
  std::string printed;
  std::string derived;
  Verdict verdict = Verdict::Mismatch;
  std::string note;
};

/// Derives every fixture row from a second-order catalog with m = d.
std::vector<ReproRow> reproduce_published();

/// "id  group  d  verdict  printed  derived" TSV with a header line.
std::string render_reproduce_tsv(const std::vector<ReproRow>& rows);
std::string render_reproduce_json(const std::vector<ReproRow>& rows);

}  // namespace hodge

#endif  // HODGE_BOUNDS_REPRODUCE_HPP
