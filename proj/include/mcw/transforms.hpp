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

#ifndef MCW_TRANSFORMS_HPP
#define MCW_TRANSFORMS_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mcw/circuit.hpp"
#include "mcw/polynomial.hpp"
#include "mcw/semantics.hpp"

namespace mcw {

// --- Sum/Prod lowering -------------------------------------------------------

/// Rewrites every summation gate as proj_{z->0} + proj_{z->1} and every
/// production gate as proj_{z->0} * proj_{z->1}. Adds at most 2 gates per
/// replaced gate; the expansion is unchanged.
Circuit lower_to_projections(const Circuit& c);

// --- homogeneous-component extraction ----------------------------------------

struct HomExtractStats {
  std::size_t input_size = 0;
  std::size_t output_size = 0;
  std::int64_t k = 0;
  /// output_size <= bound_constant * max(1, k^2) * input_size always holds;
  /// the construction keeps (k+1) replicas of each gate.
  static constexpr std::size_t bound_constant = 6;
};

/// Gate-replication construction: the result expands to the degree-k
/// homogeneous component (in the true variables) of the expansion of `c`.
/// `c` must be free of Sum/Prod gates (lower them first) and of Laurent
/// leaves.
Circuit extract_hom_circuit(const Circuit& c, std::int64_t k, HomExtractStats* stats = nullptr);

// --- exponential sums ---------------------------------------------------------

/// Exponential sum over boolean assignments to `summed_vars` of the plain
/// monotone body: semantics = sum over {0,1}^|summed_vars| of body(x, Y=a).
struct ExpSum {
  std::vector<VarId> summed_vars;  // aux ids of the body's universe
  Circuit body;                    // plain, single output

  std::size_t size() const { return summed_vars.size() + body.size(); }
  QuantifiedCircuit as_quantified() const;
};

/// Semantics of an ExpSum by iterated boolean summation of the body's
/// expansion.
Polynomial expand_expsum(const ExpSum& es, const ExpansionGuards& guards = {});

/// Normalized alternating prefix: maximal Sum-blocks and Prod-blocks,
/// starting and ending with (possibly empty) Sum-blocks.
struct AlternatingPrefix {
  std::vector<std::vector<VarId>> y_blocks;  // k+1 blocks (may be empty)
  std::vector<std::vector<VarId>> z_blocks;  // k non-empty blocks
  std::vector<std::int64_t> cumulative;      // M_i = m_1 + ... + m_i
  std::int64_t total_z() const { return z_blocks.empty() ? 0 : cumulative.back(); }
};

AlternatingPrefix normalize_prefix(const QuantifiedCircuit& qc);

struct TrivialExpSumStats {
  std::int64_t aux_count = 0;            // |Y|
  std::int64_t expected_aux_count = 0;   // sum over blocks of |y_j| * 2^{M_{j-1}}
  std::int64_t canonical_count = 0;      // 1 + sum_i 2^{M_i}; meaningful for
                                         // singleton Sum-blocks
  bool singleton_blocks = false;         // every non-empty Sum-block has 1 var
};

/// The direct quantified-to-exponential-sum rewriting: one copy of the
/// inner circuit per assignment a in {0,1}^{M_k}, with the Sum-block j+1
/// variables replicated per prefix a[:M_j]. Exact: the exponential sum
/// expands to the same polynomial as the quantified circuit.
ExpSum trivial_expsum(const QuantifiedCircuit& qc, const ExpansionGuards& guards = {},
                      TrivialExpSumStats* stats = nullptr);

struct HomExpSumStats {
  std::int64_t degree = 0;          // d = deg(f)
  std::int64_t inner_degree = 0;    // deg_x of the inner circuit's expansion
  int productions = 0;              // k
  bool degree_law_holds = false;    // deg(f) == 2^k * deg_x(inner)
  std::size_t expsum_size = 0;
  std::size_t quantified_size = 0;
  /// expsum_size <= bound_constant * quantified_size * degree is asserted
  /// for every non-degenerate homogeneous instance.
  static constexpr std::size_t bound_constant = 2;
};

/// For a quantified monotone circuit whose expansion is homogeneous in the
/// true variables: an exponential sum of size O(s * deg) computing the same
/// polynomial. Verifies k <= ceil(log2 d) and deg(f) = 2^k * deg_x(inner);
/// a failure of either on a verified-homogeneous monotone input signals an
/// implementation bug (Errc::InvariantBreach).
ExpSum homogeneous_quantified_to_expsum(const QuantifiedCircuit& qc,
                                        const ExpansionGuards& guards = {},
                                        HomExpSumStats* stats = nullptr);

// --- pruned exponential sum ----------------------------------------------------

/// f(x) = sum over b in {0,1}^|Y1| of A_table[b] * h(x, Y1 = b), where h is
/// the product of inner copies over the x-relevant assignments and A_table
/// materializes the x-free factor summed over the remaining variables.
struct PrunedExpSum {
  std::vector<VarId> y1;               // ids in h's universe
  Circuit h;                           // plain monotone, single output
  std::map<std::string, Rational> a_table;  // bitstring over y1 order -> value

  std::int64_t support_a = 0;          // |A| (x-relevant assignments)
  std::int64_t degree = 0;             // d = deg(f); -1 for the zero polynomial
  std::int64_t sum_prefix_vars = 0;    // number of Sum-quantified prefix variables
  bool degenerate_zero = false;        // f == 0
};

PrunedExpSum pruned_expsum(const QuantifiedCircuit& qc, const ExpansionGuards& guards = {},
                           std::size_t max_table_bits = 20);

/// Brute-force reconstruction sum_b A_table[b] * h(x, Y1=b).
Polynomial reconstruct_pruned(const PrunedExpSum& pr, const ExpansionGuards& guards = {});

// --- permanent via projection gates --------------------------------------------

/// Monotone circuit with projection gates over x{i}_{j} (true) and y{i}_{j}
/// (aux) whose expansion is the n x n permanent; O(n^3) gates.
/// `stage_roots`, when given, receives the gate ids of the n+1 running
/// stages: the row-product seed and the result of each column sweep.
Circuit build_perm_projection_circuit(int n, int cap = 6,
                                      std::vector<GateId>* stage_roots = nullptr);

// --- support preservation --------------------------------------------------------

struct SupportPreservationReport {
  bool supports_equal = false;   // supp(f) == supp(inner at aux = all-ones)
  bool degenerate_zero = false;  // f == 0
  std::size_t support_size = 0;
  enum class Decomposable { No, Yes, TooLarge } product_decomposable = Decomposable::TooLarge;
  /// False only if supp(f) is non-decomposable, f != 0, and the supports
  /// still differ -- which the support lemma rules out.
  bool lemma_consistent = true;
};

SupportPreservationReport support_preservation_check(const QuantifiedCircuit& qc,
                                                     const ExpansionGuards& guards = {},
                                                     std::size_t decompose_cap = 12);

/// True iff S equals a Minkowski sum A + B of non-negative exponent sets
/// with both factors non-trivial (a factor may be a singleton only if it is
/// not the origin). Exhaustive search anchored at the lexicographic minimum;
/// |S| <= cap or Errc::SearchTooLarge.
bool is_product_decomposable(const std::set<ExponentVector>& support, std::size_t cap = 12);

}  // namespace mcw

#endif
