// Copyright 2026 The dirclose Authors
//
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

#include "dirclose/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dirclose {

std::vector<double> average_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&values](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    // Tied block [i, j] shares the mean of ranks i+1 .. j+1.
    const double rank = static_cast<double>(i + j) / 2.0 + 1.0;
    for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = rank;
    i = j + 1;
  }
  return ranks;
}

namespace {

double pearson(std::span<const double> xs, std::span<const double> ys) {
  const std::size_t n = xs.size();
  const double mean_x = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(n);
  const double mean_y = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(n);
  double cov = 0.0;
  double var_x = 0.0;
  double var_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - mean_x;
    const double dy = ys[i] - mean_y;
    cov += dx * dy;
    var_x += dx * dx;
    var_y += dy * dy;
  }
  if (var_x == 0.0 || var_y == 0.0) {
    throw std::invalid_argument("correlation undefined for a constant sequence");
  }
  return std::clamp(cov / std::sqrt(var_x * var_y), -1.0, 1.0);
}

}  // namespace

double correlate(std::span<const double> xs, std::span<const double> ys,
                 CorrelationMethod method) {
  if (xs.size() != ys.size()) {
    throw std::invalid_argument("correlation inputs must have equal length");
  }
  if (xs.size() < 3) {
    throw std::invalid_argument("correlation needs at least 3 points");
  }
  for (const auto& seq : {xs, ys}) {
    for (double v : seq) {
      if (!std::isfinite(v)) throw std::invalid_argument("correlation input not finite");
    }
  }
  if (method == CorrelationMethod::Pearson) {
    return pearson(xs, ys);
  }
  const std::vector<double> rx = average_ranks(xs);
  const std::vector<double> ry = average_ranks(ys);
  return pearson(rx, ry);
}

}  // namespace dirclose
