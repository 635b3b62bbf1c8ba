/*
 *   Copyright 2026 The zetaren Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file selftest.hpp
 * @brief Named numerical self-checks against closed-form values.
 */

#ifndef ZETAREN_SELFTEST_HPP
#define ZETAREN_SELFTEST_HPP

#include <string>
#include <vector>

namespace zetaren {

struct CheckResult {
  std::string name;
  bool passed = false;
  double error = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

enum class SelftestLevel { Fast, Full };

/// tail_tol drives the spectral sums in the spectral-versus-closed checks.
std::vector<CheckResult> run_selftest(SelftestLevel level, double tail_tol = 1e-15);

}  // namespace zetaren

#endif
