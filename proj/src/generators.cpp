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

#include "mcw/generators.hpp"

#include <algorithm>

#include "mcw/error.hpp"

namespace mcw {

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

bool Rng::chance(std::uint32_t num, std::uint32_t den) {
  return next() % den < num;
}

namespace {

UniversePtr gen_universe(int n_true, int n_aux) {
  std::vector<std::string> xs, zs;
  for (int i = 1; i <= n_true; ++i) xs.push_back("x" + std::to_string(i));
  for (int i = 1; i <= n_aux; ++i) zs.push_back("z" + std::to_string(i));
  return Universe::make(xs, zs);
}

}  // namespace

Circuit random_monotone_circuit(Rng& rng, const CircuitGenOptions& opt) {
  auto u = gen_universe(opt.n_true, opt.n_aux);
  CircuitBuilder b(u, /*monotone=*/true);
  std::vector<GateId> pool;
  for (VarId v = 0; v < u->n_vars(); ++v) pool.push_back(b.variable(v));
  int n_consts = static_cast<int>(rng.range(1, 2));
  for (int i = 0; i < n_consts; ++i)
    pool.push_back(b.constant(Rational(rng.range(1, opt.max_const))));
  auto pick = [&]() { return pool[static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(pool.size()) - 1))]; };
  auto pick_aux = [&]() {
    return static_cast<VarId>(u->n_true() + static_cast<std::size_t>(
                                                rng.range(0, static_cast<std::int64_t>(u->n_aux()) - 1)));
  };
  for (int i = 0; i < opt.n_internal; ++i) {
    std::uint32_t quant_choices =
        (opt.allow_project ? 1u : 0u) + (opt.allow_sum_prod ? 2u : 0u);
    bool quant = u->n_aux() > 0 && quant_choices > 0 && rng.chance(1, 4);
    if (quant) {
      GateId child = pick();
      std::uint32_t which = static_cast<std::uint32_t>(rng.range(0, quant_choices - 1));
      if (opt.allow_project && which == 0) {
        pool.push_back(b.project(pick_aux(), static_cast<int>(rng.range(0, 1)), child));
      } else {
        pool.push_back(rng.chance(1, 2) ? b.sum(pick_aux(), child) : b.prod(pick_aux(), child));
      }
    } else {
      GateId l = pick(), r = pick();
      pool.push_back(rng.chance(opt.mul_percent, 100) ? b.mul(l, r) : b.add(l, r));
    }
  }
  return std::move(b).finish({pool.back()});
}

QuantifiedCircuit random_quantified_circuit(Rng& rng, const CircuitGenOptions& opt) {
  CircuitGenOptions inner_opt = opt;
  inner_opt.allow_project = false;
  inner_opt.allow_sum_prod = false;
  QuantifiedCircuit qc;
  qc.inner = random_monotone_circuit(rng, inner_opt);
  std::vector<VarId> aux = qc.inner.universe->aux_ids();
  // shuffle deterministically
  for (std::size_t i = aux.size(); i > 1; --i)
    std::swap(aux[i - 1], aux[static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(i) - 1))]);
  for (VarId z : aux)
    qc.prefix.emplace_back(rng.chance(1, 2) ? Quantifier::Sum : Quantifier::Prod, z);
  return qc;
}

QuantifiedCircuit random_homogeneous_quantified(Rng& rng, int n_true, int n_aux, int x_degree,
                                                int n_terms, int productions) {
  if (n_aux < 1) raise(Errc::InvalidArgument, "need at least one aux variable");
  auto u = gen_universe(n_true, n_aux);
  CircuitBuilder b(u, /*monotone=*/true);
  std::vector<GateId> terms;
  for (int t = 0; t < n_terms; ++t) {
    std::vector<GateId> factors;
    for (int d = 0; d < x_degree; ++d)
      factors.push_back(b.variable(static_cast<VarId>(rng.range(0, n_true - 1))));
    int aux_deg = static_cast<int>(rng.range(0, 2));
    for (int d = 0; d < aux_deg; ++d)
      factors.push_back(
          b.variable(static_cast<VarId>(n_true + rng.range(0, n_aux - 1))));
    if (rng.chance(1, 3)) factors.push_back(b.constant(Rational(rng.range(1, 2))));
    terms.push_back(b.mul_many(std::move(factors)));
  }
  GateId root = b.add_many(std::move(terms));
  QuantifiedCircuit qc;
  qc.inner = std::move(b).finish({root});

  // prefix: `productions` Prod entries spread among Sum entries over all aux
  std::vector<VarId> aux = qc.inner.universe->aux_ids();
  for (std::size_t i = aux.size(); i > 1; --i)
    std::swap(aux[i - 1], aux[static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(i) - 1))]);
  for (std::size_t i = 0; i < aux.size(); ++i) {
    bool prod = static_cast<int>(i) < productions;
    qc.prefix.emplace_back(prod ? Quantifier::Prod : Quantifier::Sum, aux[i]);
  }
  for (std::size_t i = qc.prefix.size(); i > 1; --i)
    std::swap(qc.prefix[i - 1],
              qc.prefix[static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(i) - 1))]);
  return qc;
}

SuccinctAbp random_abp(Rng& rng, int r, int n_x, int n_internal, long ell) {
  std::vector<std::string> names;
  for (int i = 1; i <= r; ++i) names.push_back("u" + std::to_string(i));
  for (int i = 1; i <= r; ++i) names.push_back("v" + std::to_string(i));
  for (int i = 1; i <= n_x; ++i) names.push_back("x" + std::to_string(i));
  auto u = Universe::make(names, {});
  CircuitBuilder b(u, true);
  std::vector<GateId> pool;
  for (VarId v = 0; v < u->n_vars(); ++v) pool.push_back(b.variable(v));
  pool.push_back(b.constant(Rational(1)));
  auto pick = [&]() { return pool[static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(pool.size()) - 1))]; };
  for (int i = 0; i < n_internal; ++i) {
    GateId l = pick(), g = pick();
    pool.push_back(rng.chance(30, 100) ? b.mul(l, g) : b.add(l, g));
  }
  SuccinctAbp abp;
  abp.encoding = std::move(b).finish({pool.back()});
  abp.r = r;
  abp.ell = ell;
  for (int i = 0; i < r; ++i) {
    abp.s_label.push_back(static_cast<int>(rng.range(0, 1)));
    abp.t_label.push_back(static_cast<int>(rng.range(0, 1)));
  }
  return abp;
}

PointSet random_point_set(Rng& rng, std::size_t dim, std::size_t count, std::int64_t coord_bound) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < count; ++i) {
    Point p(dim);
    for (auto& c : p) c = rng.range(-coord_bound, coord_bound);
    pts.push_back(std::move(p));
  }
  return PointSet::make(dim, std::move(pts));
}

}  // namespace mcw
