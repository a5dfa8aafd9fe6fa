/*
 *  Copyright 2026 the mcw developers
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */

#ifndef MCW_ACCEPTANCE_HPP
#define MCW_ACCEPTANCE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace mcw {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;
};

/// Runs the full verification suite (construction equalities, size bounds,
/// theorem-level properties, geometry oracles) and returns one result per
/// criterion. Deterministic given the seed.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

/// One pass/fail line per criterion; returns true iff everything passed.
bool print_acceptance(const std::vector<CriterionResult>& results, std::ostream& os);

}  // namespace mcw

#endif
