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

#include "mcw/semantics.hpp"

#include <algorithm>

#include "mcw/error.hpp"

namespace mcw {

namespace {

// Binding environment for the recursive partial assignments created by
// Project/Sum/Prod gates. Encoded as a sorted (var, bit) list so it can key
// a memo table.
using Env = std::vector<std::pair<VarId, int>>;

Env env_with(const Env& env, VarId var, int bit) {
  Env e;
  e.reserve(env.size() + 1);
  bool placed = false;
  for (const auto& [v, b] : env) {
    if (v == var) {
      e.emplace_back(var, bit);
      placed = true;
    } else {
      if (!placed && v > var) {
        e.emplace_back(var, bit);
        placed = true;
      }
      e.emplace_back(v, b);
    }
  }
  if (!placed) e.emplace_back(var, bit);
  return e;
}

const int* env_lookup(const Env& env, VarId var) {
  auto it = std::lower_bound(env.begin(), env.end(), var,
                             [](const auto& e, VarId v) { return e.first < v; });
  if (it != env.end() && it->first == var) return &it->second;
  return nullptr;
}

struct Evaluator {
  const Circuit& c;
  const std::map<VarId, Rational>& assignment;
  std::map<std::pair<GateId, Env>, Rational> memo;

  Rational eval(GateId i, const Env& env) {
    auto key = std::make_pair(i, env);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const Gate& g = c.gates[i];
    Rational r;
    switch (g.kind) {
      case GateKind::Const:
        r = g.value;
        break;
      case GateKind::Var: {
        if (const int* bit = env_lookup(env, g.var)) {
          r = Rational(*bit);
        } else {
          auto it = assignment.find(g.var);
          if (it == assignment.end())
            raise(Errc::MissingAssignment,
                  "no value for variable '" + c.universe->name(g.var) + "'", i);
          r = it->second;
        }
        break;
      }
      case GateKind::LaurentLeaf: {
        r = g.value;
        for (const auto& [var, exp] : g.exps.entries()) {
          Rational v;
          if (const int* bit = env_lookup(env, var)) {
            v = Rational(*bit);
          } else {
            auto it = assignment.find(var);
            if (it == assignment.end())
              raise(Errc::MissingAssignment,
                    "no value for variable '" + c.universe->name(var) + "'", i);
            v = it->second;
          }
          r *= v.pow(exp);
        }
        break;
      }
      case GateKind::Add:
        r = eval(g.a, env) + eval(g.b, env);
        break;
      case GateKind::Mul:
        r = eval(g.a, env) * eval(g.b, env);
        break;
      case GateKind::Project:
        r = eval(g.a, env_with(env, g.var, g.bit));
        break;
      case GateKind::Sum:
        r = eval(g.a, env_with(env, g.var, 0)) + eval(g.a, env_with(env, g.var, 1));
        break;
      case GateKind::Prod:
        r = eval(g.a, env_with(env, g.var, 0)) * eval(g.a, env_with(env, g.var, 1));
        break;
    }
    memo.emplace(std::move(key), r);
    return r;
  }
};

void check_guards(const Polynomial& p, GateId gate, const ExpansionGuards& guards) {
  if (p.n_terms() > guards.max_terms)
    raise(Errc::ExpansionOverflow,
          "expansion at gate " + std::to_string(gate) + " exceeds " +
              std::to_string(guards.max_terms) + " terms",
          gate);
  std::int64_t worst = 0;
  for (const auto& [m, c] : p.terms()) worst = std::max(worst, m.total_abs_degree());
  if (worst > guards.max_total_degree)
    raise(Errc::ExpansionOverflow,
          "expansion at gate " + std::to_string(gate) + " exceeds total degree " +
              std::to_string(guards.max_total_degree),
          gate);
}

}  // namespace

std::vector<Rational> evaluate(const Circuit& c, const std::map<VarId, Rational>& assignment) {
  Evaluator ev{c, assignment, {}};
  std::vector<Rational> out;
  out.reserve(c.outputs.size());
  for (GateId o : c.outputs) out.push_back(ev.eval(o, {}));
  return out;
}

std::vector<Polynomial> expand(const Circuit& c, const ExpansionGuards& guards) {
  std::vector<Polynomial> val = expand_all_gates(c, guards);
  std::vector<Polynomial> out;
  out.reserve(c.outputs.size());
  for (GateId o : c.outputs) out.push_back(val[o]);
  return out;
}

std::vector<Polynomial> expand_all_gates(const Circuit& c, const ExpansionGuards& guards) {
  std::vector<Polynomial> val;
  val.reserve(c.gates.size());
  for (GateId i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    switch (g.kind) {
      case GateKind::Const:
        val.push_back(Polynomial::constant(c.universe, g.value, c.high_powered_flag));
        break;
      case GateKind::Var:
        val.push_back(Polynomial::variable(c.universe, g.var));
        break;
      case GateKind::LaurentLeaf:
        val.push_back(Polynomial::monomial(c.universe, g.value, g.exps, true));
        break;
      case GateKind::Add:
        val.push_back(poly_add(val[g.a], val[g.b]));
        break;
      case GateKind::Mul:
        try {
          val.push_back(poly_mul(val[g.a], val[g.b], guards.max_terms));
        } catch (const Error& e) {
          if (e.code() == Errc::ExpansionOverflow)
            raise(Errc::ExpansionOverflow, e.what(), i);
          throw;
        }
        break;
      case GateKind::Project:
        val.push_back(substitute(val[g.a], g.var, Rational(g.bit)));
        break;
      case GateKind::Sum:
        val.push_back(sum_over_bool(val[g.a], g.var));
        break;
      case GateKind::Prod:
        try {
          val.push_back(poly_mul(substitute(val[g.a], g.var, Rational(0)),
                                 substitute(val[g.a], g.var, Rational(1)), guards.max_terms));
        } catch (const Error& e) {
          if (e.code() == Errc::ExpansionOverflow)
            raise(Errc::ExpansionOverflow, e.what(), i);
          throw;
        }
        break;
    }
    check_guards(val.back(), i, guards);
  }
  return val;
}

Polynomial expand_single(const Circuit& c, const ExpansionGuards& guards) {
  GateId o = c.single_output();
  (void)o;
  return expand(c, guards)[0];
}

Polynomial expand_quantified(const QuantifiedCircuit& qc, const ExpansionGuards& guards) {
  if (qc.prefix.size() > guards.max_prefix_length)
    raise(Errc::ExpansionOverflow,
          "quantifier prefix longer than the guard of " +
              std::to_string(guards.max_prefix_length));
  Polynomial p = expand_single(qc.inner, guards);
  // innermost-first: the last prefix entry binds closest to the circuit
  for (auto it = qc.prefix.rbegin(); it != qc.prefix.rend(); ++it) {
    const auto& [q, z] = *it;
    if (q == Quantifier::Sum) {
      p = sum_over_bool(p, z);
    } else {
      p = poly_mul(substitute(p, z, Rational(0)), substitute(p, z, Rational(1)),
                   guards.max_terms);
    }
    check_guards(p, qc.inner.single_output(), guards);
  }
  return p;
}

std::set<ExponentVector> y_support(const Polynomial& p, const std::set<VarId>& true_vars) {
  return p.support_on(true_vars);
}

bool outputs_aux_free(const Circuit& c, const ExpansionGuards& guards) {
  if (syntactically_aux_free(c)) return true;
  auto polys = expand(c, guards);
  return std::none_of(polys.begin(), polys.end(),
                      [](const Polynomial& p) { return p.mentions_aux(); });
}

Circuit shadow_substitute(const Circuit& c, const ShadowMatrix& m) {
  const std::size_t n = c.universe->n_true();
  if (m.columns() != n)
    raise(Errc::ShapeError, "shadow matrix has " + std::to_string(m.columns()) +
                                " columns for " + std::to_string(n) + " true variables");
  if (c.has_gate_kind(GateKind::LaurentLeaf))
    raise(Errc::PreconditionViolation,
          "shadow substitution expects a circuit without Laurent leaves");

  std::string w1 = "w1", w2 = "w2";
  auto aux = c.universe->aux_names();
  auto clashes = [&](const std::string& s) {
    return std::find(aux.begin(), aux.end(), s) != aux.end();
  };
  while (clashes(w1)) w1 += "_";
  while (clashes(w2)) w2 += "_";
  auto u = Universe::make({w1, w2}, aux);

  Circuit out;
  out.universe = u;
  out.monotone_flag = c.monotone_flag;
  out.high_powered_flag = true;
  out.outputs = c.outputs;
  out.gates.reserve(c.gates.size());
  const VarId aux_base_old = static_cast<VarId>(c.universe->n_true());
  for (const Gate& g : c.gates) {
    Gate h = g;
    auto remap_var = [&](VarId v) -> VarId {
      // aux var ids shift to sit after the two fresh true variables
      return static_cast<VarId>(2 + (v - aux_base_old));
    };
    if (g.kind == GateKind::Var) {
      if (c.universe->is_true_var(g.var)) {
        std::vector<ExponentVector::Entry> entries;
        std::int64_t e1 = m.rows[0][g.var];
        std::int64_t e2 = m.rows[1][g.var];
        if (e1 != 0) entries.emplace_back(0, e1);
        if (e2 != 0) entries.emplace_back(1, e2);
        h = Gate::laurent(Rational(1), ExponentVector::from_entries(std::move(entries)));
      } else {
        h.var = remap_var(g.var);
      }
    } else if (g.is_quantifier()) {
      h.var = remap_var(g.var);
    }
    out.gates.push_back(std::move(h));
  }
  return out;
}

}  // namespace mcw
