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

#include "distest/numeric.hpp"

#include <stdexcept>

namespace distest {

double bisect_increasing(const std::function<double(double)>& g, double lo,
                         double hi, double rel_tol, int max_iter) {
  if (g(hi) < 0.0) throw std::runtime_error("bisect_increasing: no sign change");
  for (int it = 0; it < max_iter; ++it) {
    if (hi - lo <= rel_tol * hi) return hi;
    const double mid = 0.5 * (lo + hi);
    if (g(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  throw std::runtime_error("bisect_increasing: no convergence");
}

}  // namespace distest
