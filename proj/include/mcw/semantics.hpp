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

#ifndef MCW_SEMANTICS_HPP
#define MCW_SEMANTICS_HPP

#include <map>
#include <set>
#include <vector>

#include "mcw/circuit.hpp"
#include "mcw/geometry.hpp"
#include "mcw/polynomial.hpp"

namespace mcw {

/// Guards against runaway expansion: term count, total degree, prefix length.
struct ExpansionGuards {
  std::size_t max_terms = kDefaultMaxTerms;
  std::int64_t max_total_degree = 64;
  std::size_t max_prefix_length = 24;
};

/// Exact evaluation at a rational point, one value per output. Project,
/// Sum and Prod gates follow their defining identities via recursive
/// partial assignment of the bound variable -- this route never builds a
/// polynomial, so it can cross-check `expand`.
std::vector<Rational> evaluate(const Circuit& c, const std::map<VarId, Rational>& assignment);

/// Full expansion to polynomials, memoized per gate bottom-up.
std::vector<Polynomial> expand(const Circuit& c, const ExpansionGuards& guards = {});
Polynomial expand_single(const Circuit& c, const ExpansionGuards& guards = {});
/// Expansion of every gate, indexed by gate id.
std::vector<Polynomial> expand_all_gates(const Circuit& c, const ExpansionGuards& guards = {});

/// Prefix quantifiers applied innermost-first to the expansion of the
/// inner circuit; the result mentions only true variables.
Polynomial expand_quantified(const QuantifiedCircuit& qc, const ExpansionGuards& guards = {});

/// Support of p projected onto the given coordinates, duplicates merged.
std::set<ExponentVector> y_support(const Polynomial& p, const std::set<VarId>& true_vars);

/// Semantic aux-freeness of the outputs, decided by expansion.
bool outputs_aux_free(const Circuit& c, const ExpansionGuards& guards = {});

/// Replaces every true-variable leaf x_i by the Laurent monomial
/// w1^{M[0][i]} w2^{M[1][i]}; same gate structure over fresh true
/// variables {w1, w2}, aux variables unchanged.
Circuit shadow_substitute(const Circuit& c, const ShadowMatrix& m);

}  // namespace mcw

#endif
