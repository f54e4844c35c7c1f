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

#include "hodge_bounds/hodge_var.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace hodge {

std::string HodgeVar::name() const {
  if (is_irregularity()) return "q";
  if (p >= 0 && p <= 9 && j >= 0 && j <= 9) return "h" + std::to_string(p) + std::to_string(j);
  return "h" + std::to_string(p) + "_" + std::to_string(j);
}

std::string HodgeVar::latex() const {
  if (is_irregularity()) return "q";
  return "h^{" + std::to_string(p) + "," + std::to_string(j) + "}";
}

namespace {

std::optional<int> to_int(std::string_view s) {
  if (s.empty()) return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

std::optional<HodgeVar> parse_hodge_var(std::string_view text) {
  if (text == "q") return HodgeVar::irregularity();
  if (text.size() < 3 || text.front() != 'h') return std::nullopt;
  std::string_view body = text.substr(1);
  // h^{p,j}
  if (body.size() >= 5 && body.front() == '^' && body[1] == '{' && body.back() == '}') {
    std::string_view inner = body.substr(2, body.size() - 3);
    auto comma = inner.find(',');
    if (comma == std::string_view::npos) return std::nullopt;
    auto p = to_int(inner.substr(0, comma));
    auto j = to_int(inner.substr(comma + 1));
    if (!p || !j) return std::nullopt;
    return HodgeVar{*p, *j};
  }
  auto underscore = body.find('_');
  if (underscore != std::string_view::npos) {
    auto p = to_int(body.substr(0, underscore));
    auto j = to_int(body.substr(underscore + 1));
    if (!p || !j) return std::nullopt;
    return HodgeVar{*p, *j};
  }
  if (body.size() != 2 || !std::isdigit(static_cast<unsigned char>(body[0])) ||
      !std::isdigit(static_cast<unsigned char>(body[1])))
    return std::nullopt;
  return HodgeVar{body[0] - '0', body[1] - '0'};
}

std::vector<std::pair<int, int>> symmetry_orbit(int p, int j, int d) {
  std::vector<std::pair<int, int>> out{{p, j}, {j, p}, {d - p, d - j}, {d - j, d - p}};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

HodgeVar canonical_var(HodgeVar v, int d) {
  auto orbit = symmetry_orbit(v.p, v.j, d);
  return HodgeVar{orbit.front().first, orbit.front().second};
}

}  // namespace hodge
