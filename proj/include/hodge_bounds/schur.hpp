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

#ifndef HODGE_BOUNDS_SCHUR_HPP
#define HODGE_BOUNDS_SCHUR_HPP

#include <string>
#include <vector>

#include "hodge_bounds/poly.hpp"

namespace hodge {

class Partition {
 public:
  Partition() = default;
  /// Throws InvalidArgument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int weight() const noexcept { return weight_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  Partition conjugate() const;
  /// "(2,1)".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Every partition of weight 1..w, by weight and then lexicographically
/// descending.
std::vector<Partition> partitions_up_to_weight(int w);

/// det(M) for a square matrix over a commutative ring, by Laplace expansion
/// over column subsets; no division.
template <typename T>
T determinant(const std::vector<std::vector<T>>& m) {
  std::size_t n = m.size();
  if (n == 0) return T(1);
  // partial[mask] is the signed sum over placements of the first
  // popcount(mask) rows into the columns of mask.
  std::vector<T> partial(std::size_t{1} << n, T(0));
  std::vector<bool> reached(partial.size(), false);
  partial[0] = T(1);
  reached[0] = true;
  for (std::size_t mask = 0; mask < partial.size(); ++mask) {
    if (!reached[mask]) continue;
    std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (row == n) continue;
    for (std::size_t col = 0; col < n; ++col) {
      if (mask & (std::size_t{1} << col)) continue;
      if (m[row][col] == T(0)) continue;
      int above = __builtin_popcountll(mask >> (col + 1));
      std::size_t next = mask | (std::size_t{1} << col);
      T term = partial[mask] * m[row][col];
      if (above % 2 == 0)
        partial[next] += term;
      else
        partial[next] -= term;
      reached[next] = true;
    }
  }
  return partial.back();
}

/// Value at index k of a Chern sequence: c[0] = 1 implied, 0 outside the
/// stored range and for k < 0.
template <typename T>
T chern_at(const std::vector<T>& c, int k) {
  if (k < 0 || static_cast<std::size_t>(k) >= c.size()) return T(0);
  return c[static_cast<std::size_t>(k)];
}

/// Giambelli form det(c_{lambda'_i - i + j}) over the conjugate partition,
/// the Chern classes acting as elementary symmetric functions.
template <typename T>
T schur_giambelli(const Partition& lambda, const std::vector<T>& c) {
  const Partition conjugate = lambda.conjugate();
  const auto& conj = conjugate.parts();
  std::size_t n = conj.size();
  std::vector<std::vector<T>> m(n, std::vector<T>(n, T(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = chern_at(c, conj[i] - static_cast<int>(i) + static_cast<int>(j));
  return determinant(m);
}

/// Complete homogeneous sequence h_0..h_{n-1} of the roots: 1/C(-t).
template <typename T>
std::vector<T> complete_from_chern(const std::vector<T>& c, std::size_t n) {
  std::vector<T> h(n, T(0));
  if (n == 0) return h;
  h[0] = T(1);
  for (std::size_t k = 1; k < n; ++k) {
    T acc(0);
    for (std::size_t i = 1; i <= k; ++i) {
      T t = chern_at(c, static_cast<int>(i)) * h[k - i];
      if (i % 2 == 1)
        acc += t;
      else
        acc -= t;
    }
    h[k] = acc;
  }
  return h;
}

/// Schur function from both sequences, choosing whichever of the
/// Giambelli and Jacobi-Trudi matrices is smaller. h must reach index
/// lambda.weight().
template <typename T>
T schur_of_chern(const Partition& lambda, const std::vector<T>& c, const std::vector<T>& h) {
  if (lambda.length() == 0) return T(1);
  if (lambda.length() >= lambda.parts().front()) return schur_giambelli(lambda, c);
  const auto& parts = lambda.parts();
  std::size_t n = parts.size();
  std::vector<std::vector<T>> m(n, std::vector<T>(n, T(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = chern_at(h, parts[i] - static_cast<int>(i) + static_cast<int>(j));
  return determinant(m);
}

template <typename T>
T schur_of_chern(const Partition& lambda, const std::vector<T>& c) {
  return schur_of_chern(lambda, c, complete_from_chern(c, static_cast<std::size_t>(lambda.weight()) + 1));
}

/// Schur polynomials of every listed partition in one pass over the
/// sequence c; same values as schur_of_chern, faster on many variables.
std::vector<MultiPoly> schur_batch(const std::vector<Partition>& partitions, const std::vector<MultiPoly>& c);

}  // namespace hodge

#endif  // HODGE_BOUNDS_SCHUR_HPP
