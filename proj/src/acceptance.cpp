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

#include "mcw/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>

#include "mcw/abp.hpp"
#include "mcw/error.hpp"
#include "mcw/generators.hpp"
#include "mcw/geometry.hpp"
#include "mcw/json_io.hpp"
#include "mcw/polynomial.hpp"
#include "mcw/semantics.hpp"
#include "mcw/transforms.hpp"

namespace mcw {

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (pass) detail << why;
    pass = false;
  }
};

std::set<VarId> true_var_set(const Circuit& c) {
  auto ids = c.universe->true_ids();
  return {ids.begin(), ids.end()};
}

// ---- criterion 1: permanent via projection gates ------------------------------

void criterion_perm(Check& ck) {
  for (int n = 1; n <= 4; ++n) {
    Circuit c = build_perm_projection_circuit(n);
    if (!validate(c).ok()) return ck.fail("perm circuit invalid at n=" + std::to_string(n));
    Polynomial expanded = expand_single(c);
    if (!same_polynomial(expanded, permanent_oracle(n)))
      return ck.fail("perm expansion mismatch at n=" + std::to_string(n));
  }
  double c_max = 0, c_at_4 = 0;
  for (int n = 2; n <= 6; ++n) {
    Circuit c = build_perm_projection_circuit(n);
    double ratio = static_cast<double>(c.size()) / (static_cast<double>(n) * n * n);
    c_max = std::max(c_max, ratio);
    if (n == 4) c_at_4 = ratio;
  }
  if (c_max > 40.0) return ck.fail("size constant C exceeds 40");
  ck.detail << "C=" << c_max << " (n=4 ratio " << c_at_4 << ")";
}

// ---- criterion 2: homogeneous components of projection circuits -----------------

void criterion_hom_extract(Check& ck, std::uint64_t seed) {
  Rng rng(seed ^ 0x02);
  int done = 0, attempts = 0;
  double worst_ratio = 0;
  while (done < 200 && attempts < 4000) {
    ++attempts;
    CircuitGenOptions opt;
    opt.n_true = static_cast<int>(rng.range(2, 3));
    opt.n_aux = static_cast<int>(rng.range(1, 2));
    opt.n_internal = static_cast<int>(rng.range(4, 12));
    opt.allow_project = true;
    Circuit c = random_monotone_circuit(rng, opt);
    if (c.size() > 25) continue;
    Polynomial f;
    try {
      f = expand_single(c);
    } catch (const Error&) {
      continue;
    }
    auto xs = true_var_set(c);
    DegreeValue deg = f.degree_on(xs);
    if (deg.is_neg_infinity() || deg.value() > 8) continue;
    for (std::int64_t k = 0; k <= deg.value(); ++k) {
      HomExtractStats st;
      Circuit hk = extract_hom_circuit(c, k, &st);
      if (!validate(hk).ok()) return ck.fail("hom circuit invalid");
      if (!(expand_single(hk) == hom_component(f, k, xs)))
        return ck.fail("hom component mismatch at k=" + std::to_string(k));
      double denom = static_cast<double>(std::max<std::int64_t>(1, k * k)) *
                     static_cast<double>(st.input_size);
      double ratio = static_cast<double>(st.output_size) / denom;
      worst_ratio = std::max(worst_ratio, ratio);
      if (st.output_size > HomExtractStats::bound_constant *
                               static_cast<std::size_t>(std::max<std::int64_t>(1, k * k)) *
                               st.input_size)
        return ck.fail("size bound 6*k^2*s violated");
    }
    ++done;
  }
  if (done < 200) return ck.fail("generator exhausted before 200 instances");
  ck.detail << done << " circuits, worst size ratio " << worst_ratio;
}

// ---- criterion 3: homogeneous quantified -> exponential sum ----------------------

void criterion_hom_expsum(Check& ck, std::uint64_t seed) {
  Rng rng(seed ^ 0x03);
  int done = 0, attempts = 0;
  while (done < 100 && attempts < 2000) {
    ++attempts;
    int n_true = static_cast<int>(rng.range(2, 3));
    int n_aux = static_cast<int>(rng.range(1, 4));
    int x_deg = static_cast<int>(rng.range(1, 2));
    int n_terms = static_cast<int>(rng.range(2, 3));
    int prods = static_cast<int>(rng.range(0, std::min<std::int64_t>(2, n_aux)));
    QuantifiedCircuit qc = random_homogeneous_quantified(rng, n_true, n_aux, x_deg, n_terms, prods);
    Polynomial f;
    try {
      f = expand_quantified(qc);
    } catch (const Error&) {
      continue;
    }
    if (f.is_zero()) continue;
    HomExpSumStats st;
    ExpSum es;
    try {
      es = homogeneous_quantified_to_expsum(qc, {}, &st);
    } catch (const Error& e) {
      if (e.code() == Errc::PreconditionViolation) continue;
      return ck.fail(std::string("unexpected error: ") + e.what());
    }
    if (!same_polynomial(expand_expsum(es), f)) return ck.fail("exponential sum expansion mismatch");
    // generated instances always have degree >= 1, so the claims are
    // exercised on every single one
    if (st.degree < 1) return ck.fail("generator produced a constant instance");
    if (!st.degree_law_holds) return ck.fail("deg(f) != 2^k * deg_x(g)");
    std::int64_t two_k = 1ll << st.productions;
    if (two_k > st.degree) return ck.fail("k > log2 deg(f)");
    if (st.expsum_size > HomExpSumStats::bound_constant * st.quantified_size *
                             static_cast<std::size_t>(st.degree))
      return ck.fail("exp-sum size bound 2*s*d violated");
    ++done;
  }
  if (done < 100) return ck.fail("generator exhausted before 100 instances");
  ck.detail << done << " homogeneous instances";
}

// ---- criterion 4: trivial exponential sum ----------------------------------------

QuantifiedCircuit make_prefix_instance(Rng& rng, const std::vector<std::pair<Quantifier, std::string>>& shape,
                                       int n_true) {
  std::vector<std::string> xs, aux;
  for (int i = 1; i <= n_true; ++i) xs.push_back("x" + std::to_string(i));
  for (const auto& [q, name] : shape) aux.push_back(name);
  auto u = Universe::make(xs, aux);
  CircuitBuilder b(u, true);
  std::vector<GateId> pool;
  for (VarId v = 0; v < u->n_vars(); ++v) pool.push_back(b.variable(v));
  pool.push_back(b.constant(Rational(1)));
  for (int i = 0, n = static_cast<int>(rng.range(3, 7)); i < n; ++i) {
    GateId l = pool[static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(pool.size()) - 1))];
    GateId r = pool[static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(pool.size()) - 1))];
    pool.push_back(rng.chance(1, 3) ? b.mul(l, r) : b.add(l, r));
  }
  QuantifiedCircuit qc;
  qc.inner = std::move(b).finish({pool.back()});
  for (const auto& [q, name] : shape) qc.prefix.emplace_back(q, *u->find(name));
  return qc;
}

void criterion_trivial_expsum(Check& ck, std::uint64_t seed) {
  Rng rng(seed ^ 0x04);
  // the Sum Prod Sum Prod Prod Sum toy prefix must give 1 + 2 + 8 = 11
  {
    std::vector<std::pair<Quantifier, std::string>> shape = {
        {Quantifier::Sum, "y1"}, {Quantifier::Prod, "q1"}, {Quantifier::Sum, "y2"},
        {Quantifier::Prod, "q2"}, {Quantifier::Prod, "q3"}, {Quantifier::Sum, "y3"}};
    QuantifiedCircuit qc = make_prefix_instance(rng, shape, 1);
    TrivialExpSumStats st;
    ExpSum es = trivial_expsum(qc, {}, &st);
    if (st.aux_count != 11) return ck.fail("toy prefix aux count != 11");
    if (st.canonical_count != 11) return ck.fail("toy prefix canonical formula != 11");
    if (!same_polynomial(expand_expsum(es), expand_quantified(qc)))
      return ck.fail("toy prefix expansion mismatch");
  }
  int done = 0, attempts = 0;
  while (done < 100 && attempts < 2000) {
    ++attempts;
    // singleton Sum-blocks fed by short Prod-runs, so sum_i 2^{M_i} <= 64
    std::vector<std::pair<Quantifier, std::string>> shape;
    int runs = static_cast<int>(rng.range(1, 3));
    int zs = 0, names_y = 0;
    std::int64_t canonical = 1;
    shape.emplace_back(Quantifier::Sum, "y" + std::to_string(++names_y));
    bool ok = true;
    for (int rrun = 0; rrun < runs; ++rrun) {
      int m = static_cast<int>(rng.range(1, 2));
      zs += m;
      if (zs > 5) {
        ok = false;
        break;
      }
      for (int t = 0; t < m; ++t) shape.emplace_back(Quantifier::Prod, "q" + std::to_string(zs - m + t + 1));
      canonical += 1ll << zs;
      shape.emplace_back(Quantifier::Sum, "y" + std::to_string(++names_y));
    }
    if (!ok || canonical - 1 > 64) continue;
    QuantifiedCircuit qc = make_prefix_instance(rng, shape, static_cast<int>(rng.range(1, 2)));
    TrivialExpSumStats st;
    ExpSum es;
    Polynomial f, g;
    try {
      es = trivial_expsum(qc, {}, &st);
      f = expand_quantified(qc);
      g = expand_expsum(es);
    } catch (const Error&) {
      continue;
    }
    if (!st.singleton_blocks) return ck.fail("generator produced a non-singleton block");
    if (st.aux_count != st.canonical_count)
      return ck.fail("aux count != 1 + sum_i 2^{M_i}");
    if (st.aux_count != st.expected_aux_count) return ck.fail("aux count formula mismatch");
    if (!same_polynomial(f, g)) return ck.fail("trivial exponential sum expansion mismatch");
    ++done;
  }
  if (done < 100) return ck.fail("generator exhausted before 100 instances");
  ck.detail << done << " prefixes plus the 11-variable toy";
}

// ---- criterion 5: pruned exponential sum -------------------------------------------

// quantified circuit whose inner is (x-monomial * all-z monomial) + y-part
// + constant: fixing any z to 0 leaves an x-free polynomial that still
// mentions the y variables, so the materialized A(w) genuinely varies
QuantifiedCircuit structured_pruning_instance(Rng& rng) {
  int n_y = static_cast<int>(rng.range(1, 2));
  int n_z = static_cast<int>(rng.range(1, 3));
  std::vector<std::string> aux;
  for (int i = 1; i <= n_y; ++i) aux.push_back("y" + std::to_string(i));
  for (int i = 1; i <= n_z; ++i) aux.push_back("w" + std::to_string(i));
  auto u = Universe::make({"x1", "x2"}, aux);
  CircuitBuilder b(u, true);
  std::vector<GateId> xpart;
  for (int d = 0, n = static_cast<int>(rng.range(1, 2)); d < n; ++d)
    xpart.push_back(b.variable(static_cast<VarId>(rng.range(0, 1))));
  for (int i = 1; i <= n_z; ++i) xpart.push_back(b.variable(std::string("w") + std::to_string(i)));
  std::vector<GateId> parts;
  parts.push_back(b.mul_many(std::move(xpart)));
  std::vector<GateId> ypart;
  for (int i = 1; i <= n_y; ++i)
    if (rng.chance(3, 4)) ypart.push_back(b.variable(std::string("y") + std::to_string(i)));
  if (ypart.empty()) ypart.push_back(b.variable(std::string("y1")));
  if (rng.chance(1, 2)) ypart.push_back(b.constant(Rational(rng.range(1, 2))));
  parts.push_back(b.mul_many(std::move(ypart)));
  if (rng.chance(1, 2)) parts.push_back(b.constant(Rational(1)));
  GateId root = b.add_many(std::move(parts));
  QuantifiedCircuit qc;
  qc.inner = std::move(b).finish({root});
  // Sum block first (shared across copies), then the productions
  for (int i = 1; i <= n_y; ++i)
    qc.prefix.emplace_back(Quantifier::Sum, *u->find("y" + std::to_string(i)));
  for (int i = 1; i <= n_z; ++i)
    qc.prefix.emplace_back(Quantifier::Prod, *u->find("w" + std::to_string(i)));
  return qc;
}

void criterion_pruned(Check& ck, std::uint64_t seed) {
  Rng rng(seed ^ 0x05);
  int done = 0, attempts = 0, varying = 0;
  while (done < 100 && attempts < 4000) {
    ++attempts;
    bool structured = done % 3 == 2;
    QuantifiedCircuit qc;
    if (structured) {
      qc = structured_pruning_instance(rng);
    } else {
      CircuitGenOptions opt;
      opt.n_true = 2;
      opt.n_aux = static_cast<int>(rng.range(1, 8));
      opt.n_internal = static_cast<int>(rng.range(3, 6));
      opt.mul_percent = 25;
      qc = random_quantified_circuit(rng, opt);
    }
    PrunedExpSum pr;
    Polynomial f, rec;
    try {
      f = expand_quantified(qc);
      if (f.is_zero()) continue;
      pr = pruned_expsum(qc, {}, /*max_table_bits=*/10);
      rec = reconstruct_pruned(pr);
    } catch (const Error& e) {
      if (e.code() == Errc::ExpansionOverflow) continue;
      return ck.fail(std::string("unexpected error: ") + e.what());
    }
    if (pr.support_a > pr.degree) return ck.fail("|A| > deg(f)");
    if (static_cast<std::int64_t>(pr.y1.size()) > pr.degree * pr.sum_prefix_vars)
      return ck.fail("|Y1| > d * ell");
    for (const auto& [bits, value] : pr.a_table)
      if (value.sign() < 0) return ck.fail("negative A-table entry");
    if (!same_polynomial(rec, f)) return ck.fail("pruned reconstruction mismatch");
    std::set<std::string> distinct;
    for (const auto& [bits, value] : pr.a_table) distinct.insert(value.to_string());
    if (distinct.size() >= 2) ++varying;
    ++done;
  }
  if (done < 100) return ck.fail("generator exhausted before 100 instances");
  if (varying < 10)
    return ck.fail("A-table never varied; the instances do not exercise A(w)");
  ck.detail << done << " instances, " << varying << " with non-constant A-tables";
}

// ---- criterion 6: succinct ABPs -----------------------------------------------------

void criterion_abp(Check& ck, std::uint64_t seed) {
  Rng rng(seed ^ 0x06);
  int done = 0, attempts = 0, nonzero = 0;
  while (done < 40 && attempts < 2000) {
    ++attempts;
    int r = static_cast<int>(rng.range(1, 2));
    SuccinctAbp abp = random_abp(rng, r, static_cast<int>(rng.range(1, 2)),
                                 static_cast<int>(rng.range(2, 5)), rng.range(1, 4));
    Polynomial f;
    try {
      f = abp_expand(abp);
    } catch (const Error&) {
      continue;
    }
    std::set<VarId> xs;
    for (VarId id : abp.x_ids()) xs.insert(id);
    std::int64_t d = f.degree_on(xs).value_or(0);
    std::int64_t d_eff = std::max(d, abp.ell - 2);
    if (r * (d_eff + 1) > 16) continue;
    AbpExpSumStats st;
    ExpSum es = abp_to_expsum(abp, d_eff, {}, &st);
    // exhaustive oracle: literally sum the body over every boolean assignment
    Polynomial body = expand_single(es.body);
    Polynomial total = Polynomial::zero(es.body.universe);
    const std::uint64_t n_assignments = 1ull << st.bits;
    for (std::uint64_t a = 0; a < n_assignments; ++a) {
      for (const auto& [m, coeff] : body.terms()) {
        bool alive = true;
        std::vector<ExponentVector::Entry> kept;
        for (const auto& [var, exp] : m.entries()) {
          if (es.body.universe->is_aux_var(var)) {
            std::size_t bit = var - es.body.universe->n_true();
            if (((a >> bit) & 1) == 0) {
              alive = false;
              break;
            }
          } else {
            kept.emplace_back(var, exp);
          }
        }
        if (alive) total.add_term(ExponentVector::from_entries(std::move(kept)), coeff);
      }
    }
    if (!same_polynomial(total, f)) return ck.fail("ABP exponential sum != ABP expansion");
    if (!f.is_zero()) ++nonzero;
    ++done;
  }
  if (done < 40) return ck.fail("generator exhausted before 40 instances");
  if (nonzero < 20) return ck.fail("too many degenerate zero programs generated");

  int checked = 0;
  attempts = 0;
  while (checked < 200 && attempts < 2000) {
    ++attempts;
    int r = static_cast<int>(rng.range(1, 3));
    SuccinctAbp abp = random_abp(rng, r, static_cast<int>(rng.range(1, 2)),
                                 static_cast<int>(rng.range(2, 6)), rng.range(2, 5));
    AbpLengthReport rep;
    try {
      rep = abp_length_bound_check(abp);
    } catch (const Error&) {
      continue;
    }
    if (rep.hypothesis_met && !rep.bound_holds)
      return ck.fail("length bound ell <= deg(f)+2 violated under its hypotheses");
    ++checked;
  }
  if (checked < 200) return ck.fail("generator exhausted before 200 encodings");
  ck.detail << "40 exponential sums (" << nonzero << " nonzero), " << checked
            << " length-bound reports";
}

// ---- criterion 7: support preservation ----------------------------------------------

void criterion_support(Check& ck, std::uint64_t seed) {
  Rng rng(seed ^ 0x07);
  int done = 0, attempts = 0;
  while (done < 500 && attempts < 50000) {
    ++attempts;
    CircuitGenOptions opt;
    opt.n_true = static_cast<int>(rng.range(2, 3));
    opt.n_aux = static_cast<int>(rng.range(1, 3));
    opt.n_internal = static_cast<int>(rng.range(3, 6));
    QuantifiedCircuit qc = random_quantified_circuit(rng, opt);
    SupportPreservationReport rep;
    try {
      rep = support_preservation_check(qc);
    } catch (const Error&) {
      continue;
    }
    if (rep.degenerate_zero ||
        rep.product_decomposable != SupportPreservationReport::Decomposable::No)
      continue;
    if (!rep.supports_equal)
      return ck.fail("supp(f) != supp(g(x,1)) on a non-decomposable instance");
    if (!rep.lemma_consistent) return ck.fail("support lemma inconsistency");
    ++done;
  }
  if (done < 500) return ck.fail("generator exhausted before 500 qualifying instances");
  ck.detail << done << " qualifying instances (of " << attempts << " sampled)";
}

// ---- criterion 8: transparency lower-bound sanity -------------------------------------

void criterion_transparency_bound(Check& ck, std::uint64_t seed) {
  Rng rng(seed ^ 0x08);
  int done = 0, transparent = 0, attempts = 0;
  double tightest = 0;  // largest |supp| / (4 * size) over transparent instances
  while (done < 500 && attempts < 20000) {
    ++attempts;
    CircuitGenOptions opt;
    opt.n_true = static_cast<int>(rng.range(2, 3));
    opt.n_aux = 1;
    opt.n_internal = static_cast<int>(rng.range(2, 6));
    opt.allow_sum_prod = true;
    opt.mul_percent = 50;
    Circuit c = random_monotone_circuit(rng, opt);
    Polynomial f;
    try {
      f = expand_single(c);
    } catch (const Error&) {
      continue;
    }
    if (f.mentions_aux() || f.is_zero()) continue;
    if (f.n_terms() > 40) continue;
    ShadowSearchOptions sopt;
    sopt.entry_bound = 1;
    ShadowReport rep;
    try {
      rep = shadow_complexity_search(f, sopt);
    } catch (const Error&) {
      continue;
    }
    ++done;
    if (rep.verdict == TransparencyVerdict::TransparentWitnessed) {
      ++transparent;
      double ratio = static_cast<double>(rep.support_size) / (4.0 * static_cast<double>(c.size()));
      tightest = std::max(tightest, ratio);
      if (static_cast<double>(c.size()) < static_cast<double>(rep.support_size) / 4.0)
        return ck.fail("transparent output computed by a circuit smaller than |supp|/4");
    }
  }
  if (done < 500) return ck.fail("generator exhausted before 500 instances");
  ck.detail << done << " circuits, " << transparent << " transparent, tightest |supp|/4s = "
            << tightest;
}

// ---- criterion 9: geometry oracle equivalence -------------------------------------------

void criterion_geometry(Check& ck, std::uint64_t seed) {
  Rng rng(seed ^ 0x09);
  for (int trial = 0; trial < 300; ++trial) {
    PointSet s = random_point_set(rng, 2, static_cast<std::size_t>(rng.range(3, 30)), 8);
    auto hull = hull_vertices_2d(s);
    std::set<Point2> hull_set(hull.begin(), hull.end());
    bool all_vertices = true;
    for (std::size_t i = 0; i < s.points.size(); ++i) {
      std::vector<Point> others;
      for (std::size_t j = 0; j < s.points.size(); ++j)
        if (j != i) others.push_back(s.points[j]);
      bool inside = point_in_convex_hull(s.points[i], others);
      bool vertex = hull_set.count({s.points[i][0], s.points[i][1]}) > 0;
      if (inside == vertex)
        return ck.fail("hull vertex set disagrees with the exact-LP membership test");
      if (inside) all_vertices = false;
    }
    if (convexly_independent(s) != all_vertices)
      return ck.fail("convexly_independent disagrees with the per-point LP test");
  }
  for (int trial = 0; trial < 500; ++trial) {
    PointSet a = random_point_set(rng, 2, static_cast<std::size_t>(rng.range(1, 4)), 6);
    PointSet b = random_point_set(rng, 2, static_cast<std::size_t>(rng.range(1, 3)), 6);
    MinkowskiLemmaReport rep = check_minkowski_lemma(a, b);
    if (!rep.lemma_consistent) return ck.fail("Minkowski-sum lemma counterexample");
  }
  ck.detail << "300 point sets, 500 Minkowski trials";
}

// ---- criterion 10: known verdicts ----------------------------------------------------------

void criterion_known_verdicts(Check& ck) {
  auto u2 = Universe::make({"x1", "x2"}, {});
  Polynomial p1 = Polynomial::zero(u2);
  p1.add_term(ExponentVector::from_entries({{0, 1}, {1, 1}}), Rational(1));
  p1.add_term(ExponentVector::unit(0), Rational(1));
  p1.add_term(ExponentVector::unit(1), Rational(1));
  ShadowSearchOptions opt;
  opt.entry_bound = 1;
  ShadowReport r1 = shadow_complexity_search(p1, opt);
  if (r1.verdict != TransparencyVerdict::TransparentWitnessed || r1.vertex_count != 3)
    return ck.fail("x1x2+x1+x2 not witnessed transparent at K=1");

  Polynomial p2 = Polynomial::zero(u2);
  p2.add_term(ExponentVector(), Rational(1));
  p2.add_term(ExponentVector::from_entries({{0, 1}, {1, 1}}), Rational(1));
  p2.add_term(ExponentVector::from_entries({{0, 2}, {1, 2}}), Rational(1));
  ShadowReport r2 = is_transparent(p2, std::nullopt, opt);
  if (r2.verdict != TransparencyVerdict::NotTransparentExhaustive || !r2.dependency_certificate)
    return ck.fail("1+xy+x^2y^2 not certified non-transparent");

  Polynomial p3 = Polynomial::zero(u2);
  p3.add_term(ExponentVector::unit(0, 2), Rational(1));
  p3.add_term(ExponentVector::from_entries({{0, 1}, {1, 1}}), Rational(1));
  p3.add_term(ExponentVector::unit(1, 2), Rational(1));
  ShadowReport r3 = is_transparent(p3, std::nullopt, opt);
  if (r3.verdict != TransparencyVerdict::NotTransparentExhaustive || !r3.dependency_certificate)
    return ck.fail("x^2+xy+y^2 not certified non-transparent");
  ck.detail << "three fixed verdicts";
}

CriterionResult run_one(int id, const std::string& name, double limit,
                        const std::function<void(Check&)>& body) {
  CriterionResult res;
  res.id = id;
  res.name = name;
  res.limit_seconds = limit;
  Check ck;
  auto start = Clock::now();
  try {
    body(ck);
  } catch (const Error& e) {
    ck.fail(std::string(errc_name(e.code())) + ": " + e.what());
  } catch (const std::exception& e) {
    ck.fail(std::string("exception: ") + e.what());
  }
  res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (res.seconds >= limit) ck.fail("runtime limit exceeded");
  res.pass = ck.pass;
  res.detail = ck.detail.str();
  return res;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  out.push_back(run_one(1, "perm-projection-construction", 10, [&](Check& ck) { criterion_perm(ck); }));
  out.push_back(run_one(2, "homogeneous-component-extraction", 60,
                        [&](Check& ck) { criterion_hom_extract(ck, seed); }));
  out.push_back(run_one(3, "homogeneous-quantified-expsum", 60,
                        [&](Check& ck) { criterion_hom_expsum(ck, seed); }));
  out.push_back(run_one(4, "trivial-expsum-counts", 60,
                        [&](Check& ck) { criterion_trivial_expsum(ck, seed); }));
  out.push_back(run_one(5, "pruned-expsum-reconstruction", 120,
                        [&](Check& ck) { criterion_pruned(ck, seed); }));
  out.push_back(run_one(6, "succinct-abp", 120, [&](Check& ck) { criterion_abp(ck, seed); }));
  out.push_back(run_one(7, "support-preservation", 60,
                        [&](Check& ck) { criterion_support(ck, seed); }));
  out.push_back(run_one(8, "transparency-size-bound", 120,
                        [&](Check& ck) { criterion_transparency_bound(ck, seed); }));
  out.push_back(run_one(9, "geometry-oracle-equivalence", 60,
                        [&](Check& ck) { criterion_geometry(ck, seed); }));
  out.push_back(run_one(10, "known-transparency-verdicts", 5,
                        [&](Check& ck) { criterion_known_verdicts(ck); }));
  return out;
}

bool print_acceptance(const std::vector<CriterionResult>& results, std::ostream& os) {
  bool all = true;
  for (const auto& r : results) {
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.id << ": " << r.name << " (" << r.seconds
       << " s, limit " << r.limit_seconds << " s)";
    if (!r.detail.empty()) os << " -- " << r.detail;
    os << "\n";
    all = all && r.pass;
  }
  os << (all ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << "\n";
  return all;
}

}  // namespace mcw
