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

#include "hodge_bounds/schur.hpp"

#include <algorithm>
#include <set>

#include "hodge_bounds/error.hpp"
#include "packed_poly.hpp"

namespace hodge {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) fail(ErrorCode::InvalidArgument, "partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) fail(ErrorCode::InvalidArgument, "partition parts must be weakly decreasing");
    weight_ += parts_[i];
  }
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  if (parts_.empty()) return Partition();
  for (int k = 1; k <= parts_.front(); ++k) {
    int count = 0;
    for (int part : parts_)
      if (part >= k) ++count;
    out.push_back(count);
  }
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

namespace {

// Partitions of n with parts at most cap, lexicographically descending.
void enumerate(int n, int cap, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(n, cap); part >= 1; --part) {
    prefix.push_back(part);
    enumerate(n - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_up_to_weight(int w) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  for (int n = 1; n <= w; ++n) enumerate(n, n, prefix, out);
  return out;
}

std::vector<MultiPoly> schur_batch(const std::vector<Partition>& partitions, const std::vector<MultiPoly>& c) {
  std::vector<MultiPoly> out;
  out.reserve(partitions.size());
  int weight = 0;
  for (const auto& lambda : partitions) weight = std::max(weight, lambda.weight());
  std::set<HodgeVar> seen;
  for (const auto& ck : c)
    for (const auto& v : ck.variables()) seen.insert(v);
  std::vector<HodgeVar> vars(seen.begin(), seen.end());
  bool packable = vars.size() <= static_cast<std::size_t>(detail::PackedPoly::kMaxVars) && weight < 200;
  if (!packable) {
    std::vector<MultiPoly> h = complete_from_chern(c, static_cast<std::size_t>(weight) + 1);
    for (const auto& lambda : partitions) out.push_back(schur_of_chern(lambda, c, h));
    return out;
  }
  std::vector<detail::PackedPoly> pc;
  pc.reserve(c.size());
  for (const auto& ck : c) pc.push_back(detail::PackedPoly::from(ck, vars));
  std::vector<detail::PackedPoly> ph = complete_from_chern(pc, static_cast<std::size_t>(weight) + 1);
  for (const auto& lambda : partitions) out.push_back(schur_of_chern(lambda, pc, ph).to_multi(vars));
  return out;
}

}  // namespace hodge
