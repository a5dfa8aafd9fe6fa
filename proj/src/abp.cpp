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

#include "mcw/abp.hpp"

#include <algorithm>

#include "mcw/error.hpp"

namespace mcw {

namespace {

std::vector<VarId> named_ids(const Universe& u, char prefix, int r) {
  std::vector<VarId> ids;
  ids.reserve(static_cast<std::size_t>(r));
  for (int i = 1; i <= r; ++i) {
    auto id = u.find(std::string(1, prefix) + std::to_string(i));
    if (!id) return {};
    ids.push_back(*id);
  }
  return ids;
}

}  // namespace

std::vector<VarId> SuccinctAbp::u_ids() const {
  return named_ids(*encoding.universe, 'u', r);
}

std::vector<VarId> SuccinctAbp::v_ids() const {
  return named_ids(*encoding.universe, 'v', r);
}

std::vector<VarId> SuccinctAbp::x_ids() const {
  auto us = u_ids();
  auto vs = v_ids();
  std::set<VarId> uv(us.begin(), us.end());
  uv.insert(vs.begin(), vs.end());
  std::vector<VarId> xs;
  for (VarId id : encoding.universe->true_ids())
    if (!uv.count(id)) xs.push_back(id);
  return xs;
}

ValidationReport validate_abp(const SuccinctAbp& abp, int r_cap) {
  ValidationReport rep = validate(abp.encoding);
  if (abp.r < 1 || abp.r > r_cap)
    rep.add("bad-width", "vertex-encoding width r must be in [1, " + std::to_string(r_cap) + "]");
  if (abp.ell < 1) rep.add("bad-length", "length bound must be >= 1");
  if (!abp.encoding.monotone_flag)
    rep.add("non-monotone-encoding", "the encoding circuit must be monotone");
  if (!abp.encoding.is_plain())
    rep.add("non-plain-encoding", "the encoding circuit must use only const/var/add/mul gates");
  if (abp.encoding.outputs.size() != 1)
    rep.add("multi-output-encoding", "the encoding circuit must have a single output");
  if (static_cast<int>(abp.s_label.size()) != abp.r ||
      static_cast<int>(abp.t_label.size()) != abp.r)
    rep.add("bad-labels", "source/sink labels must have exactly r bits");
  if (abp.encoding.universe) {
    if (abp.u_ids().empty())
      rep.add("missing-u-vars", "encoding universe must name true variables u1..ur");
    if (abp.v_ids().empty())
      rep.add("missing-v-vars", "encoding universe must name true variables v1..vr");
  }
  return rep;
}

void require_valid(const SuccinctAbp& abp, int r_cap) {
  auto rep = validate_abp(abp, r_cap);
  if (!rep.ok()) raise(Errc::ValidationError, "invalid ABP: " + rep.violations.front().message);
}

namespace {

struct EdgeTable {
  const SuccinctAbp& abp;
  Polynomial base;  // expansion of B over (u, v, x)
  std::vector<VarId> us, vs;
  std::vector<std::optional<Polynomial>> cache;  // indexed by a * 2^r + b

  EdgeTable(const SuccinctAbp& a, const ExpansionGuards& guards)
      : abp(a), base(expand_single(a.encoding, guards)), us(a.u_ids()), vs(a.v_ids()),
        cache(1ull << (2 * a.r)) {}

  Polynomial substitute_bits(Polynomial p, const std::vector<VarId>& vars, std::uint64_t bits) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      p = substitute(p, vars[i], Rational(static_cast<long>((bits >> i) & 1)));
    return p;
  }

  const Polynomial& label(std::uint64_t a, std::uint64_t b) {
    std::size_t key = static_cast<std::size_t>((a << abp.r) | b);
    if (!cache[key])
      cache[key] = substitute_bits(substitute_bits(base, us, a), vs, b);
    return *cache[key];
  }
};

std::uint64_t bits_of(const std::vector<int>& label) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < label.size(); ++i)
    if (label[i]) v |= 1ull << i;
  return v;
}

}  // namespace

Polynomial abp_expand(const SuccinctAbp& abp, const ExpansionGuards& guards) {
  require_valid(abp);
  const std::uint64_t n_vertices = 1ull << abp.r;
  if (n_vertices * static_cast<std::uint64_t>(abp.ell) > guards.max_terms)
    raise(Errc::ExpansionOverflow, "2^r * ell exceeds the expansion guard");
  EdgeTable edges(abp, guards);
  const std::uint64_t s = bits_of(abp.s_label);
  const std::uint64_t t = bits_of(abp.t_label);

  auto zero = Polynomial::zero(abp.encoding.universe);
  // layer[b]: sum over s->b walks of exactly the current length
  std::vector<Polynomial> layer(n_vertices, zero);
  for (std::uint64_t b = 0; b < n_vertices; ++b) layer[b] = edges.label(s, b);
  Polynomial total = layer[t];
  for (long len = 2; len <= abp.ell; ++len) {
    std::vector<Polynomial> next(n_vertices, zero);
    for (std::uint64_t a = 0; a < n_vertices; ++a) {
      if (layer[a].is_zero()) continue;
      for (std::uint64_t b = 0; b < n_vertices; ++b) {
        const Polynomial& lab = edges.label(a, b);
        if (lab.is_zero()) continue;
        next[b] = poly_add(next[b], poly_mul(layer[a], lab, guards.max_terms));
        if (next[b].n_terms() > guards.max_terms)
          raise(Errc::ExpansionOverflow, "ABP layer exceeds the term guard");
      }
    }
    layer = std::move(next);
    total = poly_add(total, layer[t]);
  }
  return total;
}

ExpSum abp_to_expsum(const SuccinctAbp& abp, std::int64_t degree_bound,
                     const ExpansionGuards& guards, AbpExpSumStats* stats) {
  require_valid(abp);
  if (degree_bound < 0) raise(Errc::InvalidArgument, "degree bound must be >= 0");
  const std::int64_t d = degree_bound;
  const std::int64_t bits = static_cast<std::int64_t>(abp.r) * (d + 1);
  if (bits > static_cast<std::int64_t>(guards.max_prefix_length))
    raise(Errc::ExpansionOverflow,
          "r*(d+1) = " + std::to_string(bits) + " summed bits exceed the prefix guard");

  const auto& u_in = *abp.encoding.universe;
  auto us = abp.u_ids();
  auto vs = abp.v_ids();
  std::set<VarId> uv(us.begin(), us.end());
  uv.insert(vs.begin(), vs.end());

  // true variables of the body: the x part of the encoding
  std::vector<std::string> xs;
  for (VarId id : abp.x_ids()) xs.push_back(u_in.name(id));
  std::vector<std::string> aux;
  for (std::int64_t j = 1; j <= d + 1; ++j)
    for (int t = 1; t <= abp.r; ++t)
      aux.push_back("a" + std::to_string(j) + "_" + std::to_string(t));
  auto u_body = Universe::make(xs, aux);

  auto aux_id = [&](std::int64_t j, int t) {
    return static_cast<VarId>(xs.size() + static_cast<std::size_t>((j - 1) * abp.r + (t - 1)));
  };

  CircuitBuilder b(u_body, /*monotone=*/true);

  enum class EndKind { Source, Sink, Vertex };
  struct End {
    EndKind kind;
    std::int64_t vertex_index = 0;  // for EndKind::Vertex: which a_j
  };
  // one copy of the encoding circuit with u bound to `from` and v to `to`
  auto copy_edge = [&](End from, End to) {
    auto outs = b.splice(abp.encoding, [&](CircuitBuilder& bb, const Gate& g) -> std::optional<GateId> {
      if (g.kind != GateKind::Var) return std::nullopt;
      for (int t = 0; t < abp.r; ++t) {
        if (g.var == us[static_cast<std::size_t>(t)]) {
          switch (from.kind) {
            case EndKind::Source: return bb.constant(Rational(abp.s_label[static_cast<std::size_t>(t)]));
            case EndKind::Sink: return bb.constant(Rational(abp.t_label[static_cast<std::size_t>(t)]));
            case EndKind::Vertex: return bb.variable(aux_id(from.vertex_index, t + 1));
          }
        }
        if (g.var == vs[static_cast<std::size_t>(t)]) {
          switch (to.kind) {
            case EndKind::Source: return bb.constant(Rational(abp.s_label[static_cast<std::size_t>(t)]));
            case EndKind::Sink: return bb.constant(Rational(abp.t_label[static_cast<std::size_t>(t)]));
            case EndKind::Vertex: return bb.variable(aux_id(to.vertex_index, t + 1));
          }
        }
      }
      // x variable: same name, new universe
      return bb.variable(u_in.name(g.var));
    });
    return outs[0];
  };

  // walk terms truncate at ell-1 intermediates: longer walks are not part
  // of the program's semantics
  const std::int64_t max_j = std::min(d + 1, static_cast<std::int64_t>(abp.ell) - 1);

  std::vector<GateId> terms;
  // direct s->t edge, weighted so the 2^{r(d+1)} redundant assignments sum to one copy
  terms.push_back(b.mul(b.constant(Rational::pow2_inverse(abp.r * (d + 1))),
                        copy_edge({EndKind::Source}, {EndKind::Sink})));
  for (std::int64_t j = 1; j <= max_j; ++j) {
    std::vector<GateId> factors;
    factors.push_back(copy_edge({EndKind::Source}, {EndKind::Vertex, 1}));
    for (std::int64_t t = 1; t < j; ++t)
      factors.push_back(copy_edge({EndKind::Vertex, t}, {EndKind::Vertex, t + 1}));
    factors.push_back(copy_edge({EndKind::Vertex, j}, {EndKind::Sink}));
    GateId walk = b.mul_many(std::move(factors));
    terms.push_back(b.mul(b.constant(Rational::pow2_inverse(abp.r * (d + 1 - j))), walk));
  }
  GateId root = b.add_many(std::move(terms));

  ExpSum es;
  es.body = std::move(b).finish({root});
  for (std::int64_t j = 1; j <= d + 1; ++j)
    for (int t = 1; t <= abp.r; ++t) es.summed_vars.push_back(aux_id(j, t));
  if (stats) {
    stats->degree_bound = d;
    stats->bits = bits;
    stats->max_intermediates = max_j;
    stats->covers_all_lengths = (d + 2 >= abp.ell);
  }
  return es;
}

ExpSum abp_to_expsum(const SuccinctAbp& abp, const ExpansionGuards& guards,
                     AbpExpSumStats* stats) {
  Polynomial f = abp_expand(abp, guards);
  std::set<VarId> x_set;
  for (VarId id : abp.x_ids()) x_set.insert(id);
  std::int64_t d = f.degree_on(x_set).value_or(0);
  return abp_to_expsum(abp, d, guards, stats);
}

AbpLengthReport abp_length_bound_check(const SuccinctAbp& abp, const ExpansionGuards& guards) {
  require_valid(abp);
  AbpLengthReport rep;
  rep.ell = abp.ell;
  if (abp.ell == 1) {
    rep.vacuous = true;
    rep.hypothesis_met = true;
    rep.hypothesis_note = "ell = 1: nothing to check";
    return rep;
  }
  Polynomial f = abp_expand(abp, guards);
  std::set<VarId> x_set;
  for (VarId id : abp.x_ids()) x_set.insert(id);
  rep.deg_f = f.degree_on(x_set).value_or(-1);

  EdgeTable edges(abp, guards);
  const std::uint64_t s = bits_of(abp.s_label);
  const std::uint64_t t = bits_of(abp.t_label);
  const std::uint64_t ones = (1ull << abp.r) - 1;
  const Polynomial& first = edges.label(s, ones);
  const Polynomial& middle = edges.label(ones, ones);
  const Polynomial& last = edges.label(ones, t);
  if (first.is_zero() || middle.is_zero() || last.is_zero()) {
    rep.hypothesis_met = false;
    rep.hypothesis_note = "zero edge label in the s->1->...->1->t walk";
    return rep;
  }
  rep.chain_degree = first.degree_on(x_set).value() +
                     (abp.ell - 2) * middle.degree_on(x_set).value() +
                     last.degree_on(x_set).value();
  if (rep.chain_degree < abp.ell - 2) {
    rep.hypothesis_met = false;
    rep.hypothesis_note = "degree chain below ell - 2 (constant-heavy labels)";
    return rep;
  }
  rep.hypothesis_met = true;
  rep.bound_holds = (rep.deg_f >= 0) && (abp.ell <= rep.deg_f + 2);
  return rep;
}

SuccinctAbp embed_mvp_circuit(const Circuit& c) {
  require_valid(c);
  if (!c.is_plain() || !c.monotone_flag)
    raise(Errc::PreconditionViolation, "embed_mvp_circuit expects a plain monotone circuit");
  if (c.universe->n_aux() != 0)
    raise(Errc::PreconditionViolation, "embed_mvp_circuit expects an aux-free universe");
  c.single_output();
  for (const auto& name : c.universe->names())
    if (name == "u1" || name == "v1")
      raise(Errc::PreconditionViolation,
            "circuit variable '" + name + "' collides with the ABP naming convention");
  std::vector<std::string> names{"u1", "v1"};
  for (const auto& n : c.universe->names()) names.push_back(n);
  auto u = Universe::make(names, {});
  CircuitBuilder b(u, c.monotone_flag);
  auto outs = b.splice(c, [&](CircuitBuilder& bb, const Gate& g) -> std::optional<GateId> {
    if (g.kind != GateKind::Var) return std::nullopt;
    return bb.variable(c.universe->name(g.var));
  });
  GateId root = b.mul(b.variable(std::string("v1")), outs[0]);
  SuccinctAbp abp;
  abp.encoding = std::move(b).finish({root});
  abp.r = 1;
  abp.s_label = {0};
  abp.t_label = {1};
  abp.ell = 1;
  return abp;
}

}  // namespace mcw
