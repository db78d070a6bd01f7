// Copyright 2026 The distest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>

namespace distest {

// floor/ceil that forgive rounding noise, so that e.g. 4096^{1/3} counts as 16.
inline double safe_floor(double x) {
  return std::floor(x + 1e-9 * std::max(1.0, std::abs(x)));
}
inline double safe_ceil(double x) {
  return std::ceil(x - 1e-9 * std::max(1.0, std::abs(x)));
}

// Bisection root of the increasing function g on (lo, hi] with g(lo) < 0 <=
// g(hi); stops at relative width rel_tol. Throws std::runtime_error when
// max_iter is hit first.
double bisect_increasing(const std::function<double(double)>& g, double lo,
                         double hi, double rel_tol, int max_iter);

}  // namespace distest
