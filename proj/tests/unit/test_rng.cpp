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

#include <algorithm>
#include <numeric>
#include <vector>

#include <doctest.h>

#include "dirclose/prefix_weight_tree.hpp"
#include "dirclose/rng.hpp"

using dirclose::PrefixWeightTree;
using dirclose::Rng;

TEST_CASE("rng: fixed seed reproduces the stream") {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 1000; ++i) CHECK(a.next() == b.next());
}

TEST_CASE("rng: bounded draws stay in range and cover all values") {
  Rng rng(7);
  std::vector<int> seen(10, 0);
  for (int i = 0; i < 10000; ++i) {
    const auto v = rng.uniform_index(10);
    REQUIRE(v < 10);
    ++seen[v];
  }
  for (const int count : seen) CHECK(count > 800);
}

TEST_CASE("rng: unit-interval draws respect their bounds") {
  Rng rng(9);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const double v = rng.uniform01_open();
    CHECK(v > 0.0);
    CHECK(v < 1.0);
  }
}

TEST_CASE("rng: shuffle yields a permutation") {
  Rng rng(3);
  std::vector<int> values(50);
  std::iota(values.begin(), values.end(), 0);
  rng.shuffle(values);
  std::vector<int> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 50; ++i) CHECK(sorted[i] == i);
}

TEST_CASE("rng: substreams differ from the parent and from each other") {
  const Rng base(11);
  Rng s0 = base.substream(0);
  Rng s1 = base.substream(1);
  Rng s0b = base.substream(0);
  bool all_equal = true;
  for (int i = 0; i < 64; ++i) {
    const auto a = s0.next();
    const auto b = s1.next();
    CHECK(a == s0b.next());
    if (a != b) all_equal = false;
  }
  CHECK_FALSE(all_equal);
}

TEST_CASE("prefix tree: exact boundaries with integer weights") {
  PrefixWeightTree<std::uint64_t> tree(3);
  tree.add(0, 2);
  tree.add(2, 3);
  CHECK(tree.total() == 5);
  CHECK(tree.weight(0) == 2);
  CHECK(tree.weight(1) == 0);
  CHECK(tree.weight(2) == 3);
  CHECK(tree.find(0) == 0);
  CHECK(tree.find(1) == 0);
  CHECK(tree.find(2) == 2);
  CHECK(tree.find(4) == 2);
}

TEST_CASE("prefix tree: append grows capacity and keeps sums") {
  PrefixWeightTree<std::uint64_t> tree;
  for (std::uint64_t i = 0; i < 100; ++i) tree.push_back(i % 3);
  CHECK(tree.size() == 100);
  std::uint64_t total = 0;
  for (std::uint64_t i = 0; i < 100; ++i) total += i % 3;
  CHECK(tree.total() == total);
  // find must land on a slot with positive weight and honor prefix order.
  std::uint64_t cumulative = 0;
  for (std::size_t i = 0; i < 100; ++i) {
    if (tree.weight(i) == 0) continue;
    CHECK(tree.find(cumulative) == i);
    cumulative += tree.weight(i);
    CHECK(tree.find(cumulative - 1) == i);
  }
}

TEST_CASE("prefix tree: equal weights sample uniformly (chi-square)") {
  constexpr std::size_t kBins = 20;
  constexpr std::size_t kDraws = 100000;
  PrefixWeightTree<std::uint64_t> tree(kBins);
  for (std::size_t i = 0; i < kBins; ++i) tree.add(i, 1);

  Rng rng(123);
  std::vector<std::size_t> counts(kBins, 0);
  for (std::size_t i = 0; i < kDraws; ++i) {
    ++counts[tree.find(rng.uniform_index(tree.total()))];
  }
  const double expected = static_cast<double>(kDraws) / kBins;
  double stat = 0.0;
  for (const std::size_t count : counts) {
    const double diff = static_cast<double>(count) - expected;
    stat += diff * diff / expected;
  }
  // 0.999 quantile of chi-square with 19 degrees of freedom.
  CHECK(stat < 43.82);
}

TEST_CASE("prefix tree: floating weights never select zero-weight slots") {
  PrefixWeightTree<double> tree(8);
  tree.add(1, 0.25);
  tree.add(4, 0.5);
  tree.add(6, 0.125);
  Rng rng(5);
  for (int i = 0; i < 10000; ++i) {
    const std::size_t slot = tree.find(rng.uniform01() * tree.total());
    CHECK(tree.weight(slot) > 0.0);
  }
}
