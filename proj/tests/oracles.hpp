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


// Brute-force reference computations shared by the unit tests and the
// acceptance runner. They use none of the engine's algorithms.

#ifndef HODGE_BOUNDS_TESTS_ORACLES_HPP
#define HODGE_BOUNDS_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <vector>

#include "hodge_bounds/rational.hpp"
#include "hodge_bounds/schur.hpp"

namespace oracle {

using hodge::Integer;

// Schur polynomial at the given roots as a sum over semistandard tableaux
// with entries 1..n.
inline Integer schur_by_tableaux(const hodge::Partition& lambda, const std::vector<long>& roots) {
  const auto& shape = lambda.parts();
  int n = static_cast<int>(roots.size());
  std::vector<std::vector<int>> t;
  for (int len : shape) t.emplace_back(static_cast<std::size_t>(len), 0);
  Integer total = 0;
  std::function<void(std::size_t, std::size_t, const Integer&)> fill = [&](std::size_t r, std::size_t c,
                                                                           const Integer& acc) {
    if (r == t.size()) {
      total += acc;
      return;
    }
    if (c == t[r].size()) {
      fill(r + 1, 0, acc);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= n; ++v) {
      t[r][c] = v;
      fill(r, c + 1, acc * roots[static_cast<std::size_t>(v - 1)]);
    }
  };
  fill(0, 0, Integer(1));
  return total;
}

// Elementary symmetric values e_0..e_n of the roots.
inline std::vector<Integer> elementary(const std::vector<long>& roots) {
  std::vector<Integer> e(roots.size() + 1, Integer(0));
  e[0] = 1;
  for (long x : roots)
    for (std::size_t k = roots.size(); k >= 1; --k) e[k] += e[k - 1] * x;
  return e;
}

// (1 - j t)^n mod t^order by repeated multiplication with 1 - j t or with
// the geometric series 1 + j t + j^2 t^2 + ...
inline std::vector<Integer> power_by_multiplication(int j, int n, int order) {
  std::vector<Integer> out(static_cast<std::size_t>(order), Integer(0));
  if (order == 0) return out;
  out[0] = 1;
  for (int step = 0; step < std::abs(n); ++step) {
    std::vector<Integer> next(out.size(), Integer(0));
    for (std::size_t a = 0; a < out.size(); ++a) {
      if (n > 0) {
        next[a] += out[a];
        if (a + 1 < out.size()) next[a + 1] -= out[a] * j;
      } else {
        Integer w = 1;
        for (std::size_t b = a; b < out.size(); ++b, w *= j) next[b] += out[a] * w;
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace oracle

#endif  // HODGE_BOUNDS_TESTS_ORACLES_HPP
