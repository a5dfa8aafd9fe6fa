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

#include "mcw/transforms.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mcw/error.hpp"

namespace mcw {

// --- lowering ----------------------------------------------------------------

Circuit lower_to_projections(const Circuit& c) {
  Circuit out;
  out.universe = c.universe;
  out.monotone_flag = c.monotone_flag;
  out.high_powered_flag = c.high_powered_flag;
  std::vector<GateId> remap(c.gates.size());
  for (GateId i = 0; i < c.gates.size(); ++i) {
    Gate g = c.gates[i];
    if (g.kind == GateKind::Sum || g.kind == GateKind::Prod) {
      GateId child = remap[g.a];
      GateId p0 = static_cast<GateId>(out.gates.size());
      out.gates.push_back(Gate::project(g.var, 0, child));
      GateId p1 = static_cast<GateId>(out.gates.size());
      out.gates.push_back(Gate::project(g.var, 1, child));
      GateId joined = static_cast<GateId>(out.gates.size());
      out.gates.push_back(g.kind == GateKind::Sum ? Gate::add(p0, p1) : Gate::mul(p0, p1));
      remap[i] = joined;
      continue;
    }
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

// --- homogeneous component extraction ------------------------------------------

Circuit extract_hom_circuit(const Circuit& c, std::int64_t k, HomExtractStats* stats) {
  if (c.has_gate_kind(GateKind::Sum) || c.has_gate_kind(GateKind::Prod))
    raise(Errc::PreconditionViolation,
          "extract_hom_circuit expects Sum/Prod gates to be lowered to projections first");
  if (c.has_gate_kind(GateKind::LaurentLeaf))
    raise(Errc::PreconditionViolation, "extract_hom_circuit expects a non-Laurent circuit");
  if (k < 0) raise(Errc::InvalidArgument, "homogeneous component index must be >= 0");

  const std::size_t copies = static_cast<std::size_t>(k) + 1;
  // copy i of a gate computes the degree-i homogeneous component (in the
  // true variables) of the gate's polynomial; absent entries are the zero
  // polynomial and never materialize as gates
  using CopyRow = std::vector<std::optional<GateId>>;
  std::vector<CopyRow> rep(c.gates.size(), CopyRow(copies));

  Circuit out;
  out.universe = c.universe;
  out.monotone_flag = c.monotone_flag;
  out.high_powered_flag = false;

  auto push = [&](Gate g) {
    out.gates.push_back(std::move(g));
    return static_cast<GateId>(out.gates.size() - 1);
  };

  for (GateId i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    CopyRow& row = rep[i];
    switch (g.kind) {
      case GateKind::Const:
        if (!g.value.is_zero()) row[0] = push(Gate::constant(g.value));
        break;
      case GateKind::Var:
        if (c.universe->is_true_var(g.var)) {
          if (k >= 1) row[1] = push(Gate::variable(g.var));
        } else {
          row[0] = push(Gate::variable(g.var));
        }
        break;
      case GateKind::Add:
        for (std::size_t d = 0; d < copies; ++d) {
          const auto& u = rep[g.a][d];
          const auto& v = rep[g.b][d];
          if (u && v)
            row[d] = push(Gate::add(*u, *v));
          else if (u)
            row[d] = *u;
          else if (v)
            row[d] = *v;
        }
        break;
      case GateKind::Mul:
        for (std::size_t d = 0; d < copies; ++d) {
          std::vector<GateId> parts;
          for (std::size_t j = 0; j <= d; ++j) {
            const auto& u = rep[g.a][j];
            const auto& v = rep[g.b][d - j];
            if (u && v) parts.push_back(push(Gate::mul(*u, *v)));
          }
          if (parts.empty()) continue;
          while (parts.size() > 1) {
            std::vector<GateId> next;
            for (std::size_t t = 0; t + 1 < parts.size(); t += 2)
              next.push_back(push(Gate::add(parts[t], parts[t + 1])));
            if (parts.size() % 2) next.push_back(parts.back());
            parts = std::move(next);
          }
          row[d] = parts[0];
        }
        break;
      case GateKind::Project:
        for (std::size_t d = 0; d < copies; ++d)
          if (rep[g.a][d]) row[d] = push(Gate::project(g.var, g.bit, *rep[g.a][d]));
        break;
      default:
        break;  // unreachable, rejected above
    }
  }

  for (GateId o : c.outputs) {
    if (rep[o][static_cast<std::size_t>(k)]) {
      out.outputs.push_back(*rep[o][static_cast<std::size_t>(k)]);
    } else {
      out.outputs.push_back(push(Gate::constant(Rational(0))));
    }
  }
  out = prune_unreachable(out);
  if (stats) {
    stats->input_size = c.size();
    stats->output_size = out.size();
    stats->k = k;
  }
  return out;
}

// --- exponential sums -----------------------------------------------------------

QuantifiedCircuit ExpSum::as_quantified() const {
  QuantifiedCircuit qc;
  qc.inner = body;
  qc.prefix.reserve(summed_vars.size());
  for (VarId v : summed_vars) qc.prefix.emplace_back(Quantifier::Sum, v);
  return qc;
}

Polynomial expand_expsum(const ExpSum& es, const ExpansionGuards& guards) {
  Polynomial p = expand_single(es.body, guards);
  for (VarId v : es.summed_vars) {
    p = sum_over_bool(p, v);
    if (p.n_terms() > guards.max_terms)
      raise(Errc::ExpansionOverflow, "exponential sum exceeds the term guard");
  }
  return p;
}

AlternatingPrefix normalize_prefix(const QuantifiedCircuit& qc) {
  AlternatingPrefix ap;
  ap.y_blocks.emplace_back();
  for (const auto& [q, z] : qc.prefix) {
    if (q == Quantifier::Sum) {
      if (ap.y_blocks.size() == ap.z_blocks.size()) ap.y_blocks.emplace_back();
      ap.y_blocks.back().push_back(z);
    } else {
      if (ap.y_blocks.size() > ap.z_blocks.size()) ap.z_blocks.emplace_back();
      ap.z_blocks.back().push_back(z);
    }
  }
  while (ap.y_blocks.size() <= ap.z_blocks.size()) ap.y_blocks.emplace_back();
  std::int64_t m = 0;
  for (const auto& zb : ap.z_blocks) {
    m += static_cast<std::int64_t>(zb.size());
    ap.cumulative.push_back(m);
  }
  return ap;
}

namespace {

std::string bits_string(std::uint64_t assignment, std::int64_t length) {
  std::string s(static_cast<std::size_t>(length), '0');
  for (std::int64_t t = 0; t < length; ++t)
    if ((assignment >> t) & 1u) s[static_cast<std::size_t>(t)] = '1';
  return s;
}

struct CopyNamer {
  std::set<std::string> used;
  std::string fresh(std::string base) {
    while (used.count(base)) base += "_";
    used.insert(base);
    return base;
  }
};

// Shared layout of the trivial exponential sum: per-prefix copies of the
// Sum-block variables. Block j+1 gets one copy per assignment prefix of
// length M_j; block 1 is shared by all copies.
struct CopyLayout {
  AlternatingPrefix ap;
  std::int64_t total_z = 0;
  // copy name per (block index, prefix assignment, position in block)
  std::map<std::tuple<std::size_t, std::uint64_t, std::size_t>, std::string> names;
  std::vector<std::string> ordered_names;  // deterministic universe order

  static CopyLayout build(const QuantifiedCircuit& qc, CopyNamer& namer) {
    CopyLayout lay;
    lay.ap = normalize_prefix(qc);
    lay.total_z = lay.ap.total_z();
    const auto& u = *qc.inner.universe;
    for (std::size_t j = 0; j < lay.ap.y_blocks.size(); ++j) {
      std::int64_t prefix_len = j == 0 ? 0 : lay.ap.cumulative[j - 1];
      std::uint64_t n_prefixes = 1ull << prefix_len;
      for (std::uint64_t p = 0; p < n_prefixes; ++p) {
        for (std::size_t t = 0; t < lay.ap.y_blocks[j].size(); ++t) {
          std::string base = u.name(lay.ap.y_blocks[j][t]);
          if (j > 0) base += "@" + bits_string(p, prefix_len);
          std::string name = namer.fresh(std::move(base));
          lay.names[{j, p, t}] = name;
          lay.ordered_names.push_back(std::move(name));
        }
      }
    }
    return lay;
  }

  // name of the copy of prefix variable `z` (a Sum-block member) under the
  // full z-assignment `a`
  const std::string& copy_name(std::size_t block, std::size_t pos, std::uint64_t a) const {
    std::int64_t prefix_len = block == 0 ? 0 : ap.cumulative[block - 1];
    std::uint64_t p = prefix_len == 0 ? 0 : (a & ((1ull << prefix_len) - 1));
    return names.at({block, p, pos});
  }
};

// position of each prefix variable: Sum vars -> (block, pos), Prod vars -> z index
struct PrefixIndex {
  std::map<VarId, std::pair<std::size_t, std::size_t>> sum_pos;
  std::map<VarId, std::int64_t> z_index;

  static PrefixIndex build(const AlternatingPrefix& ap) {
    PrefixIndex idx;
    for (std::size_t j = 0; j < ap.y_blocks.size(); ++j)
      for (std::size_t t = 0; t < ap.y_blocks[j].size(); ++t)
        idx.sum_pos[ap.y_blocks[j][t]] = {j, t};
    std::int64_t z = 0;
    for (const auto& zb : ap.z_blocks)
      for (VarId v : zb) idx.z_index[v] = z++;
    return idx;
  }
};

}  // namespace

ExpSum trivial_expsum(const QuantifiedCircuit& qc, const ExpansionGuards& guards,
                      TrivialExpSumStats* stats) {
  require_valid(qc);
  CopyNamer namer;
  for (const auto& n : qc.inner.universe->true_names()) namer.used.insert(n);
  CopyLayout lay = CopyLayout::build(qc, namer);
  PrefixIndex pidx = PrefixIndex::build(lay.ap);

  if (lay.total_z > static_cast<std::int64_t>(guards.max_prefix_length))
    raise(Errc::ExpansionOverflow,
          "production prefix of " + std::to_string(lay.total_z) +
              " variables exceeds the prefix guard");
  if (lay.ordered_names.size() > guards.max_terms)
    raise(Errc::ExpansionOverflow, "exponential-sum variable set exceeds the term guard");
  const std::uint64_t n_assignments = 1ull << lay.total_z;
  if (n_assignments * qc.inner.size() > guards.max_terms * 8)
    raise(Errc::ExpansionOverflow, "exponential-sum body would exceed the size guard");

  auto u = Universe::make(qc.inner.universe->true_names(), lay.ordered_names);
  CircuitBuilder builder(u, qc.inner.monotone_flag, qc.inner.high_powered_flag);

  std::vector<GateId> copies;
  copies.reserve(n_assignments);
  for (std::uint64_t a = 0; a < n_assignments; ++a) {
    auto outs = builder.splice(
        qc.inner, [&](CircuitBuilder& b, const Gate& g) -> std::optional<GateId> {
          if (g.kind != GateKind::Var) return std::nullopt;
          if (qc.inner.universe->is_true_var(g.var)) return b.variable(g.var);
          if (auto it = pidx.z_index.find(g.var); it != pidx.z_index.end())
            return b.constant(Rational(static_cast<long>((a >> it->second) & 1)));
          auto [block, pos] = pidx.sum_pos.at(g.var);
          return b.variable(lay.copy_name(block, pos, a));
        });
    copies.push_back(outs[0]);
  }
  GateId root = builder.mul_many(std::move(copies));
  ExpSum es;
  es.body = std::move(builder).finish({root});
  for (const auto& name : lay.ordered_names) es.summed_vars.push_back(*u->find(name));

  if (stats) {
    stats->aux_count = static_cast<std::int64_t>(es.summed_vars.size());
    stats->expected_aux_count = 0;
    for (std::size_t j = 0; j < lay.ap.y_blocks.size(); ++j) {
      std::int64_t prefix_len = j == 0 ? 0 : lay.ap.cumulative[j - 1];
      stats->expected_aux_count +=
          static_cast<std::int64_t>(lay.ap.y_blocks[j].size()) * (1ll << prefix_len);
    }
    stats->canonical_count = 1;
    for (std::int64_t m : lay.ap.cumulative) stats->canonical_count += 1ll << m;
    stats->singleton_blocks =
        std::all_of(lay.ap.y_blocks.begin(), lay.ap.y_blocks.end(),
                    [](const auto& b) { return b.size() == 1; });
  }
  return es;
}

ExpSum homogeneous_quantified_to_expsum(const QuantifiedCircuit& qc,
                                        const ExpansionGuards& guards, HomExpSumStats* stats) {
  require_valid(qc);
  if (!qc.inner.monotone_flag)
    raise(Errc::PreconditionViolation,
          "homogeneous_quantified_to_expsum expects a monotone inner circuit");
  Polynomial f = expand_quantified(qc, guards);
  std::set<VarId> true_vars;
  for (VarId v : qc.inner.universe->true_ids()) true_vars.insert(v);
  DegreeValue d = DegreeValue::neg_infinity();
  if (!f.is_homogeneous_on(true_vars, &d))
    raise(Errc::PreconditionViolation,
          "quantified circuit does not expand to a homogeneous polynomial");

  Polynomial inner_poly = expand_single(qc.inner, guards);
  DegreeValue inner_deg = inner_poly.degree_on(true_vars);
  const int k = qc.count_productions();

  bool degenerate = f.is_zero() || d.value_or(0) == 0;
  if (!degenerate) {
    std::int64_t dv = d.value();
    std::int64_t ceil_log = 0;
    while ((1ll << ceil_log) < dv) ++ceil_log;
    if (k > ceil_log)
      raise(Errc::InvariantBreach,
            "production count " + std::to_string(k) + " exceeds ceil(log2 deg) = " +
                std::to_string(ceil_log) + " on a homogeneous monotone input");
    if (inner_deg.is_neg_infinity() || (1ll << k) * inner_deg.value() != dv)
      raise(Errc::InvariantBreach,
            "deg(f) != 2^k * deg_x(inner) on a homogeneous monotone input");
  }

  ExpSum es = trivial_expsum(qc, guards, nullptr);
  if (stats) {
    stats->degree = d.value_or(-1);
    stats->inner_degree = inner_deg.value_or(-1);
    stats->productions = k;
    stats->degree_law_holds =
        !degenerate && !inner_deg.is_neg_infinity() && (1ll << k) * inner_deg.value() == d.value();
    stats->expsum_size = es.size();
    stats->quantified_size = qc.size();
  }
  return es;
}

// --- pruned exponential sum -------------------------------------------------------

PrunedExpSum pruned_expsum(const QuantifiedCircuit& qc, const ExpansionGuards& guards,
                           std::size_t max_table_bits) {
  require_valid(qc);
  if (!qc.inner.monotone_flag)
    raise(Errc::PreconditionViolation, "pruned_expsum expects a monotone inner circuit");
  CopyNamer namer;
  for (const auto& n : qc.inner.universe->true_names()) namer.used.insert(n);
  CopyLayout lay = CopyLayout::build(qc, namer);
  PrefixIndex pidx = PrefixIndex::build(lay.ap);
  if (lay.total_z > static_cast<std::int64_t>(guards.max_prefix_length))
    raise(Errc::ExpansionOverflow, "production prefix exceeds the prefix guard");

  const auto& u_in = *qc.inner.universe;
  std::set<VarId> true_vars;
  for (VarId v : u_in.true_ids()) true_vars.insert(v);

  Polynomial g_poly = expand_single(qc.inner, guards);
  Polynomial f = expand_quantified(qc, guards);

  PrunedExpSum pr;
  pr.degenerate_zero = f.is_zero();
  pr.degree = f.degree_on(true_vars).value_or(-1);
  pr.sum_prefix_vars = 0;
  for (const auto& yb : lay.ap.y_blocks)
    pr.sum_prefix_vars += static_cast<std::int64_t>(yb.size());

  // A-set: assignments a of the production variables for which the inner
  // polynomial keeps a positive x-degree. Monotonicity makes y = all-ones
  // the dominating assignment, so a single check per a suffices.
  const std::uint64_t n_assignments = 1ull << lay.total_z;
  std::vector<std::uint64_t> a_set, a0_set;
  for (std::uint64_t a = 0; a < n_assignments; ++a) {
    Polynomial p = g_poly;
    for (const auto& [z, zi] : pidx.z_index)
      p = substitute(p, z, Rational(static_cast<long>((a >> zi) & 1)));
    for (const auto& [y, bp] : pidx.sum_pos) p = substitute(p, y, Rational(1));
    if (DegreeValue::of(0) < p.degree_on(true_vars))
      a_set.push_back(a);
    else
      a0_set.push_back(a);
  }
  pr.support_a = static_cast<std::int64_t>(a_set.size());
  if (!pr.degenerate_zero && pr.support_a > pr.degree)
    raise(Errc::InvariantBreach, "|A| > deg(f) on a monotone instance");

  // Y1: the copy variables used by the A-set copies, in layout order.
  std::set<std::string> y1_names;
  for (std::uint64_t a : a_set)
    for (const auto& [v, bp] : pidx.sum_pos)
      y1_names.insert(lay.copy_name(bp.first, bp.second, a));
  std::vector<std::string> y1_ordered;
  for (const auto& n : lay.ordered_names)
    if (y1_names.count(n)) y1_ordered.push_back(n);

  // h = product of the inner copies over the A-set.
  auto u_h = Universe::make(u_in.true_names(), y1_ordered);
  CircuitBuilder hb(u_h, qc.inner.monotone_flag, qc.inner.high_powered_flag);
  std::vector<GateId> h_parts;
  for (std::uint64_t a : a_set) {
    auto outs = hb.splice(qc.inner, [&](CircuitBuilder& b, const Gate& g) -> std::optional<GateId> {
      if (g.kind != GateKind::Var) return std::nullopt;
      if (u_in.is_true_var(g.var)) return b.variable(g.var);
      if (auto it = pidx.z_index.find(g.var); it != pidx.z_index.end())
        return b.constant(Rational(static_cast<long>((a >> it->second) & 1)));
      auto [block, pos] = pidx.sum_pos.at(g.var);
      return b.variable(lay.copy_name(block, pos, a));
    });
    h_parts.push_back(outs[0]);
  }
  GateId h_root = hb.mul_many(std::move(h_parts));
  pr.h = std::move(hb).finish({h_root});
  for (const auto& n : y1_ordered) pr.y1.push_back(*u_h->find(n));

  if (pr.y1.size() > max_table_bits)
    raise(Errc::ExpansionOverflow,
          "A-table over " + std::to_string(pr.y1.size()) + " variables exceeds the " +
              std::to_string(max_table_bits) + "-bit materialization cap");

  // A(w): the x-free factor, summed over the copies outside Y1. Work in a
  // scratch universe holding every copy variable.
  auto u_a = Universe::make(lay.ordered_names, {});
  auto var_in_a = [&](const std::string& name) { return *u_a->find(name); };

  // factors for the A0 copies, with x killed and y renamed to copies
  std::vector<Polynomial> factors;
  for (std::uint64_t a : a0_set) {
    Polynomial p = g_poly;
    for (const auto& [z, zi] : pidx.z_index)
      p = substitute(p, z, Rational(static_cast<long>((a >> zi) & 1)));
    for (VarId x : u_in.true_ids()) p = substitute(p, x, Rational(0));
    Polynomial q = Polynomial::zero(u_a);
    for (const auto& [m, coeff] : p.terms()) {
      std::vector<ExponentVector::Entry> entries;
      for (const auto& [var, exp] : m.entries()) {
        auto [block, pos] = pidx.sum_pos.at(var);
        entries.emplace_back(var_in_a(lay.copy_name(block, pos, a)), exp);
      }
      q.add_term(ExponentVector::from_entries(std::move(entries)), coeff);
    }
    factors.push_back(std::move(q));
  }

  // which copy variables occur in any factor
  std::set<VarId> occurs;
  for (const auto& fac : factors)
    for (const auto& [m, coeff] : fac.terms())
      for (const auto& [var, exp] : m.entries()) occurs.insert(var);

  std::set<VarId> y1_in_a;
  for (const auto& n : y1_ordered) y1_in_a.insert(var_in_a(n));

  // multiply factors, summing out settled Y0 variables as soon as no later
  // factor mentions them
  std::vector<std::set<VarId>> tail_vars(factors.size() + 1);
  for (std::size_t i = factors.size(); i-- > 0;) {
    tail_vars[i] = tail_vars[i + 1];
    for (const auto& [m, coeff] : factors[i].terms())
      for (const auto& [var, exp] : m.entries()) tail_vars[i].insert(var);
  }
  Polynomial acc = Polynomial::constant(u_a, Rational(1));
  for (std::size_t i = 0; i < factors.size(); ++i) {
    acc = poly_mul(acc, factors[i], guards.max_terms);
    std::set<VarId> live;
    for (const auto& [m, coeff] : acc.terms())
      for (const auto& [var, exp] : m.entries()) live.insert(var);
    for (VarId v : live)
      if (!y1_in_a.count(v) && !tail_vars[i + 1].count(v)) acc = sum_over_bool(acc, v);
  }
  for (VarId v : std::set<VarId>(occurs))
    if (!y1_in_a.count(v)) {
      // sum out any straggler (possible when a factor is constant)
      bool live = false;
      for (const auto& [m, coeff] : acc.terms())
        if (m.exponent(v) != 0) live = true;
      if (live) acc = sum_over_bool(acc, v);
    }

  // unused Y0 variables still double the sum once each
  std::int64_t unused_y0 = 0;
  for (const auto& n : lay.ordered_names) {
    VarId v = var_in_a(n);
    if (!y1_in_a.count(v) && !occurs.count(v)) ++unused_y0;
  }
  Rational scale = Rational(2).pow(unused_y0);

  const std::uint64_t table_size = 1ull << pr.y1.size();
  for (std::uint64_t b = 0; b < table_size; ++b) {
    Polynomial cell = acc;
    for (std::size_t t = 0; t < pr.y1.size(); ++t)
      cell = substitute(cell, var_in_a(y1_ordered[t]), Rational(static_cast<long>((b >> t) & 1)));
    if (!cell.terms().empty() && cell.n_terms() != 1)
      raise(Errc::InvariantBreach, "A-table cell did not reduce to a constant");
    Rational value = cell.is_zero() ? Rational(0) : cell.terms().begin()->second;
    value *= scale;
    if (value.sign() < 0)
      raise(Errc::InvariantBreach, "negative A-table entry for a monotone instance");
    pr.a_table.emplace(bits_string(b, static_cast<std::int64_t>(pr.y1.size())), value);
  }
  return pr;
}

Polynomial reconstruct_pruned(const PrunedExpSum& pr, const ExpansionGuards& guards) {
  Polynomial h_poly = expand_single(pr.h, guards);
  Polynomial total = Polynomial::zero(pr.h.universe);
  for (const auto& [bits, value] : pr.a_table) {
    if (value.is_zero()) continue;
    Polynomial cell = h_poly;
    for (std::size_t t = 0; t < pr.y1.size(); ++t)
      cell = substitute(cell, pr.y1[t], Rational(bits[t] == '1' ? 1 : 0));
    total = poly_add(total, poly_scale(cell, value));
    if (total.n_terms() > guards.max_terms)
      raise(Errc::ExpansionOverflow, "pruned reconstruction exceeds the term guard");
  }
  return total;
}

// --- permanent construction ---------------------------------------------------------

Circuit build_perm_projection_circuit(int n, int cap, std::vector<GateId>* stage_roots) {
  if (n < 1) raise(Errc::InvalidArgument, "permanent construction needs n >= 1");
  if (n > cap)
    raise(Errc::OracleTooLarge, "permanent construction: n = " + std::to_string(n) +
                                    " exceeds the cap of " + std::to_string(cap));
  std::vector<std::string> xs, ys;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      xs.push_back("x" + std::to_string(i) + "_" + std::to_string(j));
      ys.push_back("y" + std::to_string(i) + "_" + std::to_string(j));
    }
  auto u = Universe::make(xs, ys);
  CircuitBuilder b(u, /*monotone=*/true);
  auto x_id = [&](int i, int j) { return static_cast<VarId>((i - 1) * n + (j - 1)); };
  auto y_id = [&](int i, int j) { return static_cast<VarId>(n * n + (i - 1) * n + (j - 1)); };

  // P0 = prod_i (sum_j y_ij x_ij): every monomial picks one entry per row
  std::vector<GateId> rows;
  for (int i = 1; i <= n; ++i) {
    std::vector<GateId> terms;
    for (int j = 1; j <= n; ++j)
      terms.push_back(b.mul(b.variable(y_id(i, j)), b.variable(x_id(i, j))));
    rows.push_back(b.add_many(std::move(terms)));
  }
  GateId p = b.mul_many(std::move(rows));
  if (stage_roots) stage_roots->push_back(p);

  // column sweep: P_j keeps the monomials using column j exactly once,
  // clearing that column's auxiliary variables
  for (int j = 1; j <= n; ++j) {
    std::vector<GateId> branches;
    for (int i = 1; i <= n; ++i) {
      GateId g = p;
      for (int t = n; t >= 1; --t) g = b.project(y_id(t, j), t == i ? 1 : 0, g);
      branches.push_back(g);
    }
    p = b.add_many(std::move(branches));
    if (stage_roots) stage_roots->push_back(p);
  }
  return std::move(b).finish({p});
}

// --- support preservation --------------------------------------------------------------

SupportPreservationReport support_preservation_check(const QuantifiedCircuit& qc,
                                                     const ExpansionGuards& guards,
                                                     std::size_t decompose_cap) {
  require_valid(qc);
  if (!qc.inner.monotone_flag)
    raise(Errc::PreconditionViolation, "support_preservation_check expects a monotone inner");
  std::set<VarId> true_vars;
  for (VarId v : qc.inner.universe->true_ids()) true_vars.insert(v);

  Polynomial f = expand_quantified(qc, guards);
  Polynomial g1 = expand_single(qc.inner, guards);
  for (const auto& [q, z] : qc.prefix) g1 = substitute(g1, z, Rational(1));

  SupportPreservationReport rep;
  rep.degenerate_zero = f.is_zero();
  auto supp_f = f.support_on(true_vars);
  auto supp_g1 = g1.support_on(true_vars);
  rep.supports_equal = supp_f == supp_g1;
  rep.support_size = supp_f.size();
  if (supp_f.size() <= decompose_cap) {
    rep.product_decomposable = is_product_decomposable(supp_f, decompose_cap)
                                   ? SupportPreservationReport::Decomposable::Yes
                                   : SupportPreservationReport::Decomposable::No;
  } else {
    rep.product_decomposable = SupportPreservationReport::Decomposable::TooLarge;
  }
  rep.lemma_consistent =
      !(rep.product_decomposable == SupportPreservationReport::Decomposable::No &&
        !rep.degenerate_zero && !rep.supports_equal);
  return rep;
}

// --- Minkowski decomposability of supports -------------------------------------------

namespace {

using DenseVec = std::vector<std::int64_t>;

DenseVec densify(const ExponentVector& ev, const std::vector<VarId>& vars) {
  DenseVec v(vars.size(), 0);
  for (std::size_t i = 0; i < vars.size(); ++i) v[i] = ev.exponent(vars[i]);
  return v;
}

DenseVec vec_sub(const DenseVec& a, const DenseVec& b) {
  DenseVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

DenseVec vec_add(const DenseVec& a, const DenseVec& b) {
  DenseVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool is_zero_vec(const DenseVec& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

// componentwise floor needed to translate the factor back into exponents >= 0
DenseVec nonneg_offset(const std::vector<DenseVec>& pts, std::size_t dim) {
  DenseVec lo(dim, 0);
  for (const auto& p : pts)
    for (std::size_t c = 0; c < dim; ++c) lo[c] = std::max(lo[c], -p[c]);
  return lo;
}

// Does an integer point a* exist with lo <= a* <= hi (componentwise),
// a* != excl1 (when given) and a* != excl2 (when given)?
bool box_has_point(const DenseVec& lo, const DenseVec& hi, const DenseVec* excl1,
                   const DenseVec* excl2) {
  long double count = 1;
  for (std::size_t c = 0; c < lo.size(); ++c) {
    if (lo[c] > hi[c]) return false;
    count *= static_cast<long double>(hi[c] - lo[c] + 1);
    if (count > 8) count = 8;  // saturate; only smallness matters
  }
  int n_excl = (excl1 ? 1 : 0) + (excl2 ? 1 : 0);
  if (count > n_excl) return true;
  // box with at most 2 points: enumerate them
  std::vector<DenseVec> pts{lo};
  if (lo != hi) pts.push_back(hi);
  for (const auto& p : pts) {
    if (excl1 && p == *excl1) continue;
    if (excl2 && p == *excl2) continue;
    return true;
  }
  return false;
}

// Nontrivial monomial-set split: A = A' + a*, B = B' + b* with a* + b* = s*,
// all exponents >= 0, and neither factor equal to {1}.
bool admissible_split(const std::vector<DenseVec>& aset, const std::vector<DenseVec>& bset,
                      const DenseVec& star) {
  const std::size_t dim = star.size();
  DenseVec lo_a = nonneg_offset(aset, dim);
  DenseVec lo_b = nonneg_offset(bset, dim);
  DenseVec lo = lo_a;
  DenseVec hi = vec_sub(star, lo_b);
  DenseVec zero(dim, 0);
  const DenseVec* excl_a = aset.size() >= 2 ? nullptr : &zero;  // a* must differ from 0
  const DenseVec* excl_b = bset.size() >= 2 ? nullptr : &star;  // b* = star - a* must be nonzero
  return box_has_point(lo, hi, excl_a, excl_b);
}

}  // namespace

bool is_product_decomposable(const std::set<ExponentVector>& support, std::size_t cap) {
  if (support.size() > cap)
    raise(Errc::SearchTooLarge, "is_product_decomposable: support larger than " +
                                    std::to_string(cap) + " monomials");
  if (support.empty()) return false;
  // occurring variables define the dense coordinates
  std::set<VarId> vars_set;
  for (const auto& ev : support)
    for (const auto& [var, exp] : ev.entries()) {
      if (exp < 0)
        raise(Errc::PreconditionViolation, "product decomposition expects monomial supports");
      vars_set.insert(var);
    }
  std::vector<VarId> vars(vars_set.begin(), vars_set.end());

  std::vector<DenseVec> s;
  for (const auto& ev : support) s.push_back(densify(ev, vars));
  std::sort(s.begin(), s.end());

  if (s.size() == 1) {
    std::int64_t total = 0;
    for (std::int64_t c : s[0]) total += c;
    return total >= 2;  // a single monomial splits iff it is not 1 or a variable
  }

  const DenseVec star = s[0];  // lexicographic minimum; both factor minima anchor here
  std::vector<DenseVec> diff;
  for (const auto& p : s) diff.push_back(vec_sub(p, star));
  std::set<DenseVec> sprime(diff.begin(), diff.end());

  std::vector<DenseVec> nonzero(diff.begin() + 1, diff.end());
  const std::size_t nz = nonzero.size();

  for (std::uint64_t mask = 0; mask < (1ull << nz); ++mask) {
    std::vector<DenseVec> aset{DenseVec(star.size(), 0)};
    for (std::size_t i = 0; i < nz; ++i)
      if ((mask >> i) & 1) aset.push_back(nonzero[i]);
    // largest candidate counterpart: quotient of S' by A'
    std::vector<DenseVec> bmax;
    for (const auto& b : diff) {
      bool fits = std::all_of(aset.begin(), aset.end(),
                              [&](const DenseVec& a) { return sprime.count(vec_add(a, b)); });
      if (fits) bmax.push_back(b);
    }
    // coverage: A' + B'max must reproduce S' exactly (it is automatically
    // a subset; sizes certify equality)
    std::set<DenseVec> cover;
    for (const auto& a : aset)
      for (const auto& b : bmax) cover.insert(vec_add(a, b));
    if (cover != sprime) continue;
    if (admissible_split(aset, bmax, star)) return true;
    // rare fallback: a smaller counterpart may admit a split when the
    // maximal one cannot be translated into nonnegative exponents
    if (bmax.size() > 1 && bmax.size() <= 12) {
      std::vector<DenseVec> bnz;
      for (const auto& b : bmax)
        if (!is_zero_vec(b)) bnz.push_back(b);
      for (std::uint64_t bm = 0; bm < (1ull << bnz.size()); ++bm) {
        std::vector<DenseVec> bsub{DenseVec(star.size(), 0)};
        for (std::size_t i = 0; i < bnz.size(); ++i)
          if ((bm >> i) & 1) bsub.push_back(bnz[i]);
        if (bsub.size() == bmax.size()) continue;  // already tried
        std::set<DenseVec> c2;
        for (const auto& a : aset)
          for (const auto& b : bsub) c2.insert(vec_add(a, b));
        if (c2 != sprime) continue;
        if (admissible_split(aset, bsub, star)) return true;
      }
    }
  }
  return false;
}

}  // namespace mcw
