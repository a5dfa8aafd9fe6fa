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

#ifndef MCW_ABP_HPP
#define MCW_ABP_HPP

#include <string>
#include <vector>

#include "mcw/circuit.hpp"
#include "mcw/semantics.hpp"
#include "mcw/transforms.hpp"

namespace mcw {

/// Succinct algebraic branching program on the vertex set {0,1}^r: the
/// monotone encoding circuit B(u, v, x) labels the edge from a to b with
/// B(u=a, v=b, x); the program computes the sum over all s-to-t walks of
/// length at most ell of the products of edge labels (zero labels are
/// absent edges). By convention the u/v variables are named u1..ur and
/// v1..vr among B's true variables.
struct SuccinctAbp {
  Circuit encoding;  // B
  int r = 1;
  std::vector<int> s_label, t_label;  // bit vectors of length r
  long ell = 1;

  std::vector<VarId> u_ids() const;
  std::vector<VarId> v_ids() const;
  std::vector<VarId> x_ids() const;  // remaining true variables
};

ValidationReport validate_abp(const SuccinctAbp& abp, int r_cap = 10);
void require_valid(const SuccinctAbp& abp, int r_cap = 10);

/// Exact expansion by dynamic programming over (vertex, walk length),
/// accumulating layers 1..ell. Walks may repeat vertices; self-loops are
/// expected (monotone encodings force them).
Polynomial abp_expand(const SuccinctAbp& abp, const ExpansionGuards& guards = {});

struct AbpExpSumStats {
  std::int64_t degree_bound = 0;   // d
  std::int64_t bits = 0;           // (d+1) * r summed variables
  std::int64_t max_intermediates = 0;  // path terms truncate here
  bool covers_all_lengths = false;     // min(d+2, ell) == ell
};

/// The weighted exponential sum over (d+1)*r boolean vertex-bits whose body
/// sums, for each intermediate count j, the corresponding walk product
/// scaled by 2^{-r(d+1-j)}. Identical to abp_expand whenever ell <= d+2
/// (pass a larger d to cover degenerate encodings with longer walks).
ExpSum abp_to_expsum(const SuccinctAbp& abp, std::int64_t degree_bound,
                     const ExpansionGuards& guards = {}, AbpExpSumStats* stats = nullptr);
/// Variant with d = deg_x(abp_expand), the proof's choice.
ExpSum abp_to_expsum(const SuccinctAbp& abp, const ExpansionGuards& guards = {},
                     AbpExpSumStats* stats = nullptr);

struct AbpLengthReport {
  long ell = 1;
  bool vacuous = false;          // ell == 1
  std::int64_t deg_f = -1;       // -1 for the zero polynomial
  bool hypothesis_met = false;   // chain factors nonzero and chain degree >= ell-2
  std::string hypothesis_note;   // which hypothesis failed, if any
  std::int64_t chain_degree = -1;
  bool bound_holds = true;       // ell <= deg_f + 2, checked when hypotheses hold
};

/// Checks ell <= deg(f) + 2 through the degree chain
/// B(s,1,x) * B(1,1,x)^{ell-2} * B(1,t,x); encodings with zero factors or a
/// low-degree chain are reported as hypothesis failures, not violations.
AbpLengthReport abp_length_bound_check(const SuccinctAbp& abp, const ExpansionGuards& guards = {});

/// (B', 0, 1, 1) with B'(u,v,x) = v * C(x): a one-vertex-pair program whose
/// single edge carries the whole circuit.
SuccinctAbp embed_mvp_circuit(const Circuit& c);

}  // namespace mcw

#endif
