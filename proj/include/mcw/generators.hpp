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

#ifndef MCW_GENERATORS_HPP
#define MCW_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "mcw/abp.hpp"
#include "mcw/circuit.hpp"
#include "mcw/geometry.hpp"

namespace mcw {

/// Deterministic splitmix64 stream; identical seeds give identical
/// instances on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  std::int64_t range(std::int64_t lo, std::int64_t hi);  // inclusive
  bool chance(std::uint32_t num, std::uint32_t den);

 private:
  std::uint64_t state_;
};

struct CircuitGenOptions {
  int n_true = 3;
  int n_aux = 2;
  int n_internal = 8;        // internal gate budget
  int max_const = 3;
  bool allow_project = false;
  bool allow_sum_prod = false;
  std::uint32_t mul_percent = 35;  // share of binary gates that multiply
};

/// Random monotone circuit in topological order; the output is the last
/// gate. Always passes validation.
Circuit random_monotone_circuit(Rng& rng, const CircuitGenOptions& opt);

/// Random quantified monotone circuit: plain inner over all declared aux
/// variables, prefix binding each of them once in random order.
QuantifiedCircuit random_quantified_circuit(Rng& rng, const CircuitGenOptions& opt);

/// Quantified circuit whose inner is homogeneous of the given degree in the
/// true variables by construction (the quantified expansion is then
/// homogeneous or zero).
QuantifiedCircuit random_homogeneous_quantified(Rng& rng, int n_true, int n_aux, int x_degree,
                                                int n_terms, int productions);

/// Random monotone succinct ABP encoding over u1..ur, v1..vr and n_x
/// x-variables.
SuccinctAbp random_abp(Rng& rng, int r, int n_x, int n_internal, long ell);

PointSet random_point_set(Rng& rng, std::size_t dim, std::size_t count, std::int64_t coord_bound);

}  // namespace mcw

#endif
