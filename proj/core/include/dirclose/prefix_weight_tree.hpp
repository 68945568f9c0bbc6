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

#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace dirclose {

/// Fenwick tree over per-slot weights supporting O(log n) increment and
/// O(log n) weighted sampling (find the slot owning a point of the cumulative
/// weight). Slots can be appended; capacity grows by doubling with an O(n)
/// rebuild, amortized O(1) per append.
template <typename W>
class PrefixWeightTree {
 public:
  PrefixWeightTree() = default;

  explicit PrefixWeightTree(std::size_t size) { resize_capacity(size); size_ = size; }

  std::size_t size() const { return size_; }
  W total() const { return total_; }
  W weight(std::size_t i) const { return weight_[i]; }

  /// Appends a slot holding weight w.
  void push_back(W w) {
    if (size_ == capacity_) grow(capacity_ == 0 ? 1 : capacity_ * 2);
    ++size_;
    if (w != W{}) add(size_ - 1, w);
  }

  void add(std::size_t i, W delta) {
    assert(i < size_);
    weight_[i] += delta;
    total_ += delta;
    for (std::size_t pos = i + 1; pos <= capacity_; pos += pos & (~pos + 1)) {
      tree_[pos] += delta;
    }
  }

  /// Smallest index i such that weight(0) + ... + weight(i) > point.
  /// Requires total() > 0 and point < total(). With floating-point weights a
  /// point that lands exactly on a boundary is resolved to the nearest slot
  /// with positive weight.
  std::size_t find(W point) const {
    assert(total_ > W{});
    std::size_t pos = 0;
    W remaining = point;
    for (std::size_t bit = top_bit_; bit != 0; bit >>= 1) {
      const std::size_t next = pos + bit;
      if (next <= capacity_ && tree_[next] <= remaining) {
        pos = next;
        remaining -= tree_[next];
      }
    }
    // pos counts slots whose cumulative weight is <= point.
    std::size_t idx = pos;
    if (idx >= size_) idx = size_ - 1;
    if (weight_[idx] == W{}) {
      std::size_t back = idx;
      while (back > 0 && weight_[back] == W{}) --back;
      if (weight_[back] != W{}) return back;
      while (idx + 1 < size_ && weight_[idx] == W{}) ++idx;
    }
    return idx;
  }

 private:
  void resize_capacity(std::size_t n) {
    capacity_ = n;
    tree_.assign(capacity_ + 1, W{});
    weight_.assign(capacity_, W{});
    top_bit_ = 1;
    while (top_bit_ * 2 <= capacity_) top_bit_ *= 2;
    if (capacity_ == 0) top_bit_ = 0;
  }

  void grow(std::size_t new_capacity) {
    std::vector<W> old_weights(weight_.begin(), weight_.begin() + static_cast<std::ptrdiff_t>(size_));
    const std::size_t n = old_weights.size();
    resize_capacity(new_capacity);
    total_ = W{};
    size_ = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (old_weights[i] != W{}) add(i, old_weights[i]);
    }
  }

  std::size_t size_ = 0;
  std::size_t capacity_ = 0;
  std::size_t top_bit_ = 0;
  W total_{};
  std::vector<W> tree_;
  std::vector<W> weight_;
};

}  // namespace dirclose
