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

#include "dirclose/rand_baseline.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace dirclose {

namespace {

// Edge indexing within the k-star: 0 is a->c, 1..k are a->b_i, k+1..2k are
// b_i->c. a->c exhibits closure iff some pair (a->b_i, b_i->c) fully
// precedes it.
bool star_trial_impl(unsigned k, Rng& rng, std::vector<std::uint32_t>& pos) {
  const std::size_t n = 2 * static_cast<std::size_t>(k) + 1;
  pos.resize(n);
  std::iota(pos.begin(), pos.end(), 0u);
  rng.shuffle(pos);  // pos[e] = arrival slot of edge e
  const std::uint32_t anchor = pos[0];
  for (unsigned i = 1; i <= k; ++i) {
    if (pos[i] < anchor && pos[k + i] < anchor) return true;
  }
  return false;
}

std::int64_t binomial(unsigned n, unsigned r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::int64_t result = 1;
  for (unsigned i = 1; i <= r; ++i) {
    result = result * static_cast<std::int64_t>(n - r + i) / static_cast<std::int64_t>(i);
  }
  return result;
}

// Walks all (2k+1)! arrival orders. Feasible through k = 4 (9! orders).
Rational enumerate_permutations(unsigned k) {
  const std::size_t n = 2 * static_cast<std::size_t>(k) + 1;
  std::vector<std::uint32_t> slot_to_edge(n);
  std::iota(slot_to_edge.begin(), slot_to_edge.end(), 0u);
  std::vector<std::uint32_t> pos(n);

  std::int64_t total = 0;
  std::int64_t closed = 0;
  do {
    for (std::size_t slot = 0; slot < n; ++slot) pos[slot_to_edge[slot]] = slot;
    const std::uint32_t anchor = pos[0];
    bool c = false;
    for (unsigned i = 1; i <= k && !c; ++i) c = pos[i] < anchor && pos[k + i] < anchor;
    ++total;
    if (c) ++closed;
  } while (std::next_permutation(slot_to_edge.begin(), slot_to_edge.end()));
  return Rational(closed, total);
}

// Exhausts the (anchor position, set of earlier edges) classes instead of raw
// permutations: the anchor lands at slot m with probability 1/(2k+1) and the
// m earlier edges form a uniform m-subset of the other 2k. Exact and cheap
// for k up to 6 (2^12 subsets).
Rational enumerate_arrival_classes(unsigned k) {
  const unsigned rest = 2 * k;
  std::vector<std::int64_t> subsets_with_pair(rest + 1, 0);
  for (std::uint32_t mask = 0; mask < (1u << rest); ++mask) {
    bool pair = false;
    for (unsigned i = 0; i < k && !pair; ++i) {
      pair = (mask & (1u << i)) != 0 && (mask & (1u << (k + i))) != 0;
    }
    if (pair) ++subsets_with_pair[std::popcount(mask)];
  }
  Rational p(0, 1);
  for (unsigned m = 0; m <= rest; ++m) {
    p = p + Rational(subsets_with_pair[m], binomial(rest, m));
  }
  return p * Rational(1, 2 * static_cast<std::int64_t>(k) + 1);
}

// sum_{j=1..k} (-1)^(j+1) C(k,j) / (2j+1): each j term covers the orderings
// where a specific set of j two-step paths fully precedes the anchor edge.
Rational inclusion_exclusion(unsigned k) {
  Rational p(0, 1);
  for (unsigned j = 1; j <= k; ++j) {
    const Rational term(binomial(k, j), 2 * static_cast<std::int64_t>(j) + 1);
    p = (j % 2 == 1) ? p + term : p - term;
  }
  return p;
}

constexpr unsigned kMaxEnumerate = 6;
constexpr unsigned kMaxPermutationEnumerate = 4;
constexpr unsigned kMaxFormula = 20;

}  // namespace

bool star_trial(unsigned k, Rng& rng) {
  std::vector<std::uint32_t> pos;
  return star_trial_impl(k, rng, pos);
}

Rational exact_star_closure_probability(unsigned k, ExactMode mode) {
  switch (mode) {
    case ExactMode::Enumerate:
      if (k > kMaxEnumerate) {
        throw std::invalid_argument(
            "enumeration supports k <= 6; use the Monte Carlo baseline for larger k");
      }
      return k <= kMaxPermutationEnumerate ? enumerate_permutations(k)
                                           : enumerate_arrival_classes(k);
    case ExactMode::Formula:
      if (k > kMaxFormula) {
        throw std::invalid_argument(
            "closed form supports k <= 20 in exact arithmetic; use the Monte Carlo baseline "
            "for larger k");
      }
      return inclusion_exclusion(k);
    case ExactMode::Auto: {
      if (k > kMaxFormula) {
        throw std::invalid_argument(
            "exact value supports k <= 20; use the Monte Carlo baseline for larger k");
      }
      const Rational formula = inclusion_exclusion(k);
      if (k <= kMaxEnumerate) {
        const Rational enumerated = exact_star_closure_probability(k, ExactMode::Enumerate);
        if (!(enumerated == formula)) {
          throw std::logic_error("enumeration and closed form disagree at k=" +
                                 std::to_string(k));
        }
      }
      return formula;
    }
  }
  throw std::invalid_argument("unknown ExactMode");
}

BaselineEstimate baseline_closure_fraction(unsigned k, std::size_t sample_size, unsigned runs,
                                           const Rng& rng) {
  if (sample_size < 1) throw std::invalid_argument("sample_size must be >= 1");
  if (runs < 1) throw std::invalid_argument("runs must be >= 1");

  BaselineEstimate estimate;
  estimate.k = k;
  estimate.sample_size = sample_size;
  estimate.runs = runs;

  std::vector<std::uint32_t> pos;
  double sum = 0.0;
  double lo = 1.0;
  double hi = 0.0;
  for (unsigned run = 0; run < runs; ++run) {
    Rng run_rng = rng.substream(k, run);
    std::size_t closed = 0;
    for (std::size_t s = 0; s < sample_size; ++s) {
      if (star_trial_impl(k, run_rng, pos)) ++closed;
    }
    const double fraction = static_cast<double>(closed) / static_cast<double>(sample_size);
    sum += fraction;
    lo = std::min(lo, fraction);
    hi = std::max(hi, fraction);
  }
  estimate.mean = sum / static_cast<double>(runs);
  estimate.min = lo;
  estimate.max = hi;
  return estimate;
}

RandTestReport rand_test(const TemporalDigraph& g, const ClosureFlags& flags, NodeId c,
                         const RandTestOptions& options, const Rng& rng) {
  RandTestReport report;
  report.node = c;
  report.runs = options.runs;
  report.min_group_size = options.min_group_size;
  report.k_mode = options.k_mode;

  const auto partition =
      k_linked_partition(g, flags, c, options.k_mode, options.evaluable_mask);
  for (const KLinkedStat& stat : partition) {
    if (stat.members.size() <= options.min_group_size) continue;
    if (!stat.closure_fraction.has_value()) continue;
    RandTestRow row;
    row.k = stat.k;
    row.group_size = stat.members.size();
    row.evaluable = stat.evaluable;
    row.observed = *stat.closure_fraction;
    row.baseline = baseline_closure_fraction(static_cast<unsigned>(stat.k), row.group_size,
                                             options.runs, rng.substream(stat.k));
    report.rows.push_back(row);
  }

  for (const RandTestRow& row : report.rows) {
    if (row.observed_within_band()) {
      report.crossover_k = row.k;
      break;
    }
  }
  return report;
}

}  // namespace dirclose
