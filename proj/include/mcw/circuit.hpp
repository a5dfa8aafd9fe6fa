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

#ifndef MCW_CIRCUIT_HPP
#define MCW_CIRCUIT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mcw/polynomial.hpp"
#include "mcw/rational.hpp"
#include "mcw/variable.hpp"

namespace mcw {

using GateId = std::uint32_t;

enum class GateKind : std::uint8_t {
  Const,        // rational leaf
  Var,          // variable leaf
  LaurentLeaf,  // coeff * monomial with integer exponents (high-powered circuits)
  Add,          // binary +
  Mul,          // binary *
  Project,      // proj_{z->b}, unary
  Sum,          // f(z=0) + f(z=1), unary
  Prod,         // f(z=0) * f(z=1), unary
};

const char* gate_kind_name(GateKind k);

struct Gate {
  GateKind kind = GateKind::Const;
  Rational value;        // Const value / LaurentLeaf coefficient
  ExponentVector exps;   // LaurentLeaf only
  VarId var = 0;         // Var / Project / Sum / Prod label
  std::uint8_t bit = 0;  // Project only
  GateId a = 0, b = 0;   // children (Add/Mul use both, unary gates use a)

  static Gate constant(Rational v);
  static Gate variable(VarId v);
  static Gate laurent(Rational coeff, ExponentVector exps);
  static Gate add(GateId l, GateId r);
  static Gate mul(GateId l, GateId r);
  static Gate project(VarId z, int bit, GateId child);
  static Gate sum(VarId z, GateId child);
  static Gate prod(VarId z, GateId child);

  bool is_leaf() const {
    return kind == GateKind::Const || kind == GateKind::Var || kind == GateKind::LaurentLeaf;
  }
  bool is_binary() const { return kind == GateKind::Add || kind == GateKind::Mul; }
  bool is_quantifier() const {
    return kind == GateKind::Project || kind == GateKind::Sum || kind == GateKind::Prod;
  }
};

/// DAG of gates in topological order (children precede parents, ids are the
/// positions). The universe partitions variables into true and auxiliary;
/// Project/Sum/Prod labels must be auxiliary.
struct Circuit {
  UniversePtr universe;
  std::vector<Gate> gates;
  std::vector<GateId> outputs;
  bool monotone_flag = true;
  bool high_powered_flag = false;

  std::size_t size() const { return gates.size(); }
  GateId single_output() const;

  bool has_gate_kind(GateKind k) const;
  /// Plain circuit: only Const/Var/Add/Mul gates.
  bool is_plain() const;
};

enum class Quantifier : std::uint8_t { Sum, Prod };

/// Prefix of Sum/Prod quantifiers over auxiliary variables applied to a
/// plain single-output circuit.
struct QuantifiedCircuit {
  std::vector<std::pair<Quantifier, VarId>> prefix;
  Circuit inner;

  std::size_t size() const { return prefix.size() + inner.size(); }
  int count_productions() const;
  int count_summations() const;
};

// --- validation -------------------------------------------------------------

struct Violation {
  std::string code;     // stable machine-readable tag
  std::string message;  // human-readable detail
  std::optional<GateId> gate;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  void add(std::string code, std::string message, std::optional<GateId> gate = std::nullopt);
};

ValidationReport validate(const Circuit& c);
ValidationReport validate(const QuantifiedCircuit& qc);
/// Throws Errc::ValidationError when the report is non-empty.
void require_valid(const Circuit& c);
void require_valid(const QuantifiedCircuit& qc);

// --- sizes ------------------------------------------------------------------

std::size_t circuit_size(const Circuit& c);
std::size_t quantified_size(const QuantifiedCircuit& qc);
int count_productions(const QuantifiedCircuit& qc);

// --- structure helpers ------------------------------------------------------

/// Gates reachable from the outputs, in the original order; ids remapped.
Circuit prune_unreachable(const Circuit& c);

/// Sufficient syntactic condition for aux-freeness of all outputs: on every
/// path from an aux leaf to an output some Project/Sum/Prod gate eliminates
/// that variable. (The exact semantic condition is checked by expansion in
/// the semantics module.)
bool syntactically_aux_free(const Circuit& c);

/// Incremental construction of a circuit in topological order.
class CircuitBuilder {
 public:
  explicit CircuitBuilder(UniversePtr u, bool monotone = true, bool high_powered = false);

  GateId constant(Rational v);
  GateId constant(long v) { return constant(Rational(v)); }
  GateId variable(VarId v);
  GateId variable(const std::string& name);
  GateId laurent(Rational coeff, ExponentVector exps);
  GateId add(GateId l, GateId r);
  GateId mul(GateId l, GateId r);
  GateId project(VarId z, int bit, GateId child);
  GateId sum(VarId z, GateId child);
  GateId prod(VarId z, GateId child);

  /// Balanced binary trees for n-ary sums/products. Empty input yields the
  /// neutral constant (0 for add, 1 for mul).
  GateId add_many(std::vector<GateId> xs);
  GateId mul_many(std::vector<GateId> xs);

  /// Appends a copy of `other`'s reachable gates, rewriting leaves through
  /// `map_leaf` (returns the replacement gate id for a leaf, or nullopt to
  /// copy it verbatim). Returns the id mapping of other's output gates.
  std::vector<GateId> splice(const Circuit& other,
                             const std::function<std::optional<GateId>(CircuitBuilder&, const Gate&)>& map_leaf);

  std::size_t size() const { return gates_.size(); }
  const Universe& universe() const { return *u_; }

  Circuit finish(std::vector<GateId> outputs) &&;

 private:
  GateId push(Gate g);
  UniversePtr u_;
  std::vector<Gate> gates_;
  bool monotone_;
  bool high_powered_;
};

}  // namespace mcw

#endif
