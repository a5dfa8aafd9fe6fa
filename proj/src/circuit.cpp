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

#include "mcw/circuit.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "mcw/error.hpp"

namespace mcw {

const char* gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::Const: return "const";
    case GateKind::Var: return "var";
    case GateKind::LaurentLeaf: return "laurent";
    case GateKind::Add: return "add";
    case GateKind::Mul: return "mul";
    case GateKind::Project: return "project";
    case GateKind::Sum: return "sum";
    case GateKind::Prod: return "prod";
  }
  return "?";
}

Gate Gate::constant(Rational v) {
  Gate g;
  g.kind = GateKind::Const;
  g.value = std::move(v);
  return g;
}

Gate Gate::variable(VarId v) {
  Gate g;
  g.kind = GateKind::Var;
  g.var = v;
  return g;
}

Gate Gate::laurent(Rational coeff, ExponentVector exps) {
  Gate g;
  g.kind = GateKind::LaurentLeaf;
  g.value = std::move(coeff);
  g.exps = std::move(exps);
  return g;
}

Gate Gate::add(GateId l, GateId r) {
  Gate g;
  g.kind = GateKind::Add;
  g.a = l;
  g.b = r;
  return g;
}

Gate Gate::mul(GateId l, GateId r) {
  Gate g;
  g.kind = GateKind::Mul;
  g.a = l;
  g.b = r;
  return g;
}

Gate Gate::project(VarId z, int bit, GateId child) {
  Gate g;
  g.kind = GateKind::Project;
  g.var = z;
  g.bit = static_cast<std::uint8_t>(bit);
  g.a = child;
  return g;
}

Gate Gate::sum(VarId z, GateId child) {
  Gate g;
  g.kind = GateKind::Sum;
  g.var = z;
  g.a = child;
  return g;
}

Gate Gate::prod(VarId z, GateId child) {
  Gate g;
  g.kind = GateKind::Prod;
  g.var = z;
  g.a = child;
  return g;
}

GateId Circuit::single_output() const {
  if (outputs.size() != 1)
    raise(Errc::PreconditionViolation, "circuit must have exactly one output");
  return outputs[0];
}

bool Circuit::has_gate_kind(GateKind k) const {
  return std::any_of(gates.begin(), gates.end(), [&](const Gate& g) { return g.kind == k; });
}

bool Circuit::is_plain() const {
  return std::all_of(gates.begin(), gates.end(), [](const Gate& g) {
    return g.kind == GateKind::Const || g.kind == GateKind::Var || g.kind == GateKind::Add ||
           g.kind == GateKind::Mul;
  });
}

int QuantifiedCircuit::count_productions() const {
  return static_cast<int>(
      std::count_if(prefix.begin(), prefix.end(),
                    [](const auto& q) { return q.first == Quantifier::Prod; }));
}

int QuantifiedCircuit::count_summations() const {
  return static_cast<int>(prefix.size()) - count_productions();
}

void ValidationReport::add(std::string code, std::string message, std::optional<GateId> gate) {
  violations.push_back({std::move(code), std::move(message), gate});
}

ValidationReport validate(const Circuit& c) {
  ValidationReport rep;
  if (!c.universe) {
    rep.add("no-universe", "circuit has no variable universe");
    return rep;
  }
  const auto n = static_cast<GateId>(c.gates.size());
  for (GateId i = 0; i < n; ++i) {
    const Gate& g = c.gates[i];
    auto check_child = [&](GateId ch) {
      if (ch >= i)
        rep.add("dangling-reference",
                "gate " + std::to_string(i) + " references gate " + std::to_string(ch) +
                    " which does not precede it in topological order",
                i);
    };
    switch (g.kind) {
      case GateKind::Const:
        if (c.monotone_flag && g.value.sign() < 0)
          rep.add("negative-constant",
                  "negative constant " + g.value.to_string() + " in a monotone circuit", i);
        break;
      case GateKind::Var:
        if (g.var >= c.universe->n_vars())
          rep.add("unknown-variable", "variable id out of range", i);
        break;
      case GateKind::LaurentLeaf:
        if (!c.high_powered_flag)
          rep.add("laurent-without-flag",
                  "Laurent leaf in a circuit without the high-powered flag", i);
        if (c.monotone_flag && g.value.sign() < 0)
          rep.add("negative-constant",
                  "negative Laurent coefficient in a monotone circuit", i);
        for (const auto& [var, exp] : g.exps.entries())
          if (var >= c.universe->n_vars())
            rep.add("unknown-variable", "Laurent leaf mentions a variable outside the universe", i);
        break;
      case GateKind::Add:
      case GateKind::Mul:
        check_child(g.a);
        check_child(g.b);
        break;
      case GateKind::Project:
        if (g.bit > 1) rep.add("bad-projection-bit", "projection bit must be 0 or 1", i);
        [[fallthrough]];
      case GateKind::Sum:
      case GateKind::Prod:
        check_child(g.a);
        if (g.var >= c.universe->n_vars())
          rep.add("unknown-variable", "quantifier label out of range", i);
        else if (!c.universe->is_aux_var(g.var))
          rep.add("quantifier-on-true-variable",
                  std::string(gate_kind_name(g.kind)) + " gate labeled by true variable '" +
                      c.universe->name(g.var) + "'",
                  i);
        break;
    }
  }
  if (c.outputs.empty()) rep.add("no-outputs", "circuit has no outputs");
  for (GateId o : c.outputs)
    if (o >= n) rep.add("dangling-reference", "output references a missing gate");
  return rep;
}

ValidationReport validate(const QuantifiedCircuit& qc) {
  ValidationReport rep = validate(qc.inner);
  if (!qc.inner.universe) return rep;
  if (qc.inner.outputs.size() != 1)
    rep.add("multi-output-quantified", "quantified circuit must have a single output");
  if (!qc.inner.is_plain())
    rep.add("non-plain-inner",
            "the inner circuit of a quantified circuit may only use const/var/add/mul gates");
  std::set<VarId> bound;
  for (const auto& [q, z] : qc.prefix) {
    if (z >= qc.inner.universe->n_vars()) {
      rep.add("unknown-variable", "prefix variable out of range");
      continue;
    }
    if (!qc.inner.universe->is_aux_var(z))
      rep.add("quantifier-on-true-variable",
              "prefix quantifier on true variable '" + qc.inner.universe->name(z) + "'");
    if (!bound.insert(z).second)
      rep.add("duplicate-prefix-variable",
              "variable '" + qc.inner.universe->name(z) + "' bound twice in the prefix");
  }
  for (GateId i = 0; i < qc.inner.gates.size(); ++i) {
    const Gate& g = qc.inner.gates[i];
    if (g.kind == GateKind::Var && qc.inner.universe->is_aux_var(g.var) && !bound.count(g.var))
      rep.add("unbound-aux-variable",
              "aux variable '" + qc.inner.universe->name(g.var) + "' is not bound by the prefix",
              i);
  }
  return rep;
}

void require_valid(const Circuit& c) {
  auto rep = validate(c);
  if (!rep.ok())
    raise(Errc::ValidationError, "invalid circuit: " + rep.violations.front().message);
}

void require_valid(const QuantifiedCircuit& qc) {
  auto rep = validate(qc);
  if (!rep.ok())
    raise(Errc::ValidationError, "invalid quantified circuit: " + rep.violations.front().message);
}

std::size_t circuit_size(const Circuit& c) { return c.gates.size(); }

std::size_t quantified_size(const QuantifiedCircuit& qc) { return qc.size(); }

int count_productions(const QuantifiedCircuit& qc) { return qc.count_productions(); }

Circuit prune_unreachable(const Circuit& c) {
  std::vector<bool> live(c.gates.size(), false);
  std::vector<GateId> stack(c.outputs.begin(), c.outputs.end());
  while (!stack.empty()) {
    GateId i = stack.back();
    stack.pop_back();
    if (live[i]) continue;
    live[i] = true;
    const Gate& g = c.gates[i];
    if (g.is_binary()) {
      stack.push_back(g.a);
      stack.push_back(g.b);
    } else if (g.is_quantifier()) {
      stack.push_back(g.a);
    }
  }
  std::vector<GateId> remap(c.gates.size(), 0);
  Circuit out;
  out.universe = c.universe;
  out.monotone_flag = c.monotone_flag;
  out.high_powered_flag = c.high_powered_flag;
  for (GateId i = 0; i < c.gates.size(); ++i) {
    if (!live[i]) continue;
    Gate g = c.gates[i];
    if (g.is_binary()) {
      g.a = remap[g.a];
      g.b = remap[g.b];
    } else if (g.is_quantifier()) {
      g.a = remap[g.a];
    }
    remap[i] = static_cast<GateId>(out.gates.size());
    out.gates.push_back(std::move(g));
  }
  out.outputs.reserve(c.outputs.size());
  for (GateId o : c.outputs) out.outputs.push_back(remap[o]);
  return out;
}

bool syntactically_aux_free(const Circuit& c) {
  // free aux variables per gate, propagated bottom-up
  std::vector<std::set<VarId>> free(c.gates.size());
  for (GateId i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    switch (g.kind) {
      case GateKind::Const: break;
      case GateKind::Var:
        if (c.universe->is_aux_var(g.var)) free[i].insert(g.var);
        break;
      case GateKind::LaurentLeaf:
        for (const auto& [var, exp] : g.exps.entries())
          if (c.universe->is_aux_var(var)) free[i].insert(var);
        break;
      case GateKind::Add:
      case GateKind::Mul:
        free[i] = free[g.a];
        free[i].insert(free[g.b].begin(), free[g.b].end());
        break;
      case GateKind::Project:
      case GateKind::Sum:
      case GateKind::Prod:
        free[i] = free[g.a];
        free[i].erase(g.var);
        break;
    }
  }
  return std::all_of(c.outputs.begin(), c.outputs.end(),
                     [&](GateId o) { return free[o].empty(); });
}

// --- CircuitBuilder ---------------------------------------------------------

CircuitBuilder::CircuitBuilder(UniversePtr u, bool monotone, bool high_powered)
    : u_(std::move(u)), monotone_(monotone), high_powered_(high_powered) {}

GateId CircuitBuilder::push(Gate g) {
  gates_.push_back(std::move(g));
  return static_cast<GateId>(gates_.size() - 1);
}

GateId CircuitBuilder::constant(Rational v) { return push(Gate::constant(std::move(v))); }

GateId CircuitBuilder::variable(VarId v) {
  if (v >= u_->n_vars()) raise(Errc::InvalidArgument, "variable id outside universe");
  return push(Gate::variable(v));
}

GateId CircuitBuilder::variable(const std::string& name) {
  auto id = u_->find(name);
  if (!id) raise(Errc::InvalidArgument, "unknown variable '" + name + "'");
  return variable(*id);
}

GateId CircuitBuilder::laurent(Rational coeff, ExponentVector exps) {
  return push(Gate::laurent(std::move(coeff), std::move(exps)));
}

GateId CircuitBuilder::add(GateId l, GateId r) { return push(Gate::add(l, r)); }
GateId CircuitBuilder::mul(GateId l, GateId r) { return push(Gate::mul(l, r)); }
GateId CircuitBuilder::project(VarId z, int bit, GateId child) {
  return push(Gate::project(z, bit, child));
}
GateId CircuitBuilder::sum(VarId z, GateId child) { return push(Gate::sum(z, child)); }
GateId CircuitBuilder::prod(VarId z, GateId child) { return push(Gate::prod(z, child)); }

GateId CircuitBuilder::add_many(std::vector<GateId> xs) {
  if (xs.empty()) return constant(Rational(0));
  while (xs.size() > 1) {
    std::vector<GateId> next;
    next.reserve((xs.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < xs.size(); i += 2) next.push_back(add(xs[i], xs[i + 1]));
    if (xs.size() % 2) next.push_back(xs.back());
    xs = std::move(next);
  }
  return xs[0];
}

GateId CircuitBuilder::mul_many(std::vector<GateId> xs) {
  if (xs.empty()) return constant(Rational(1));
  while (xs.size() > 1) {
    std::vector<GateId> next;
    next.reserve((xs.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < xs.size(); i += 2) next.push_back(mul(xs[i], xs[i + 1]));
    if (xs.size() % 2) next.push_back(xs.back());
    xs = std::move(next);
  }
  return xs[0];
}

std::vector<GateId> CircuitBuilder::splice(
    const Circuit& other,
    const std::function<std::optional<GateId>(CircuitBuilder&, const Gate&)>& map_leaf) {
  std::vector<GateId> remap(other.gates.size(), 0);
  for (GateId i = 0; i < other.gates.size(); ++i) {
    const Gate& g = other.gates[i];
    if (g.is_leaf()) {
      if (auto mapped = map_leaf(*this, g)) {
        remap[i] = *mapped;
        continue;
      }
      Gate copy = g;
      remap[i] = push(std::move(copy));
      continue;
    }
    Gate copy = g;
    copy.a = remap[g.a];
    if (copy.is_binary()) copy.b = remap[g.b];
    remap[i] = push(std::move(copy));
  }
  std::vector<GateId> outs;
  outs.reserve(other.outputs.size());
  for (GateId o : other.outputs) outs.push_back(remap[o]);
  return outs;
}

Circuit CircuitBuilder::finish(std::vector<GateId> outputs) && {
  Circuit c;
  c.universe = std::move(u_);
  c.gates = std::move(gates_);
  c.outputs = std::move(outputs);
  c.monotone_flag = monotone_;
  c.high_powered_flag = high_powered_;
  return c;
}

}  // namespace mcw
