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

#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "dirclose/correlation.hpp"
#include "dirclose/rng.hpp"
#include "test_util.hpp"

using dirclose::CorrelationMethod;
using dirclose::correlate;

TEST_CASE("affine relations have unit pearson correlation") {
  std::vector<double> xs{1, 2, 3, 4, 5, 6};
  std::vector<double> ys;
  for (const double x : xs) ys.push_back(2.0 * x + 1.0);
  CHECK(correlate(xs, ys, CorrelationMethod::Pearson) == doctest::Approx(1.0));
  std::vector<double> neg;
  for (const double x : xs) neg.push_back(-0.5 * x + 3.0);
  CHECK(correlate(xs, neg, CorrelationMethod::Pearson) == doctest::Approx(-1.0));
}

TEST_CASE("reversed order has spearman -1") {
  std::vector<double> xs{10, 20, 30, 40, 50};
  std::vector<double> ys{5, 4, 3, 2, 1};
  CHECK(correlate(xs, ys, CorrelationMethod::Spearman) == doctest::Approx(-1.0));
  // Monotone but nonlinear: spearman 1, pearson below 1.
  std::vector<double> exp_ys;
  for (const double x : xs) exp_ys.push_back(std::exp(x / 10.0));
  CHECK(correlate(xs, exp_ys, CorrelationMethod::Spearman) == doctest::Approx(1.0));
  CHECK(correlate(xs, exp_ys, CorrelationMethod::Pearson) < 1.0);
}

TEST_CASE("average ranks share tied positions") {
  const std::vector<double> v{10, 20, 20, 30};
  const auto ranks = dirclose::average_ranks(v);
  CHECK(ranks == std::vector<double>{1.0, 2.5, 2.5, 4.0});
}

TEST_CASE("both methods match the quadratic brute force") {
  dirclose::Rng rng(2718);
  for (int round = 0; round < 20; ++round) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (int i = 0; i < 20; ++i) {
      // Coarse values inject ties to exercise average ranks.
      xs.push_back(double(rng.uniform_index(8)));
      ys.push_back(rng.uniform01() + double(rng.uniform_index(3)));
    }
    const double pearson = correlate(xs, ys, CorrelationMethod::Pearson);
    CHECK(std::abs(pearson - dirclose::test::pearson_bruteforce(xs, ys)) < 1e-12);
    const double spearman = correlate(xs, ys, CorrelationMethod::Spearman);
    const double expected = dirclose::test::pearson_bruteforce(
        dirclose::test::ranks_bruteforce(xs), dirclose::test::ranks_bruteforce(ys));
    CHECK(std::abs(spearman - expected) < 1e-12);
  }
}

TEST_CASE("degenerate inputs are rejected") {
  const std::vector<double> xs{1, 2, 3};
  const std::vector<double> constant{4, 4, 4};
  const std::vector<double> two{1, 2};
  CHECK_THROWS_AS(correlate(xs, constant, CorrelationMethod::Pearson), std::invalid_argument);
  CHECK_THROWS_AS(correlate(constant, xs, CorrelationMethod::Spearman), std::invalid_argument);
  CHECK_THROWS_AS(correlate(two, two, CorrelationMethod::Pearson), std::invalid_argument);
  const std::vector<double> longer{1, 2, 3, 4};
  CHECK_THROWS_AS(correlate(xs, longer, CorrelationMethod::Pearson), std::invalid_argument);
}
