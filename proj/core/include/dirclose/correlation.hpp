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

#include <span>
#include <vector>

namespace dirclose {

enum class CorrelationMethod { Pearson, Spearman };

/// Average ranks (1-based; ties share the mean of their rank range).
std::vector<double> average_ranks(std::span<const double> values);

/// Pearson or Spearman (Pearson on average ranks) correlation coefficient.
/// Throws std::invalid_argument for mismatched lengths, fewer than 3 points,
/// or a constant input sequence.
double correlate(std::span<const double> xs, std::span<const double> ys,
                 CorrelationMethod method);

}  // namespace dirclose
