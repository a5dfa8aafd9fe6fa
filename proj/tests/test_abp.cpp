#include <doctest.h>

#include <functional>
#include <map>
#include <set>

#include "mcw/abp.hpp"
#include "mcw/error.hpp"
#include "mcw/generators.hpp"
#include "mcw/json_io.hpp"

using namespace mcw;

namespace {

// walk-enumerating oracle, independent of the DP route: depth-first over
// explicit edge polynomials
Polynomial abp_expand_brute(const SuccinctAbp& abp) {
  Polynomial base = expand_single(abp.encoding);
  auto us = abp.u_ids(), vs = abp.v_ids();
  const std::uint64_t n = 1ull << abp.r;
  std::vector<std::vector<Polynomial>> label(n, std::vector<Polynomial>());
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b) {
      Polynomial p = base;
      for (std::size_t i = 0; i < us.size(); ++i) p = substitute(p, us[i], Rational((a >> i) & 1));
      for (std::size_t i = 0; i < vs.size(); ++i) p = substitute(p, vs[i], Rational((b >> i) & 1));
      label[a].push_back(std::move(p));
    }
  std::uint64_t s = 0, t = 0;
  for (int i = 0; i < abp.r; ++i) {
    if (abp.s_label[static_cast<std::size_t>(i)]) s |= 1ull << i;
    if (abp.t_label[static_cast<std::size_t>(i)]) t |= 1ull << i;
  }
  Polynomial total = Polynomial::zero(abp.encoding.universe);
  std::function<void(std::uint64_t, long, const Polynomial&)> walk =
      [&](std::uint64_t vertex, long used, const Polynomial& acc) {
        if (used >= 1 && vertex == t) total = poly_add(total, acc);
        if (used == abp.ell) return;
        for (std::uint64_t next = 0; next < n; ++next) {
          if (label[vertex][next].is_zero()) continue;
          walk(next, used + 1, poly_mul(acc, label[vertex][next]));
        }
      };
  walk(s, 0, Polynomial::constant(abp.encoding.universe, Rational(1)));
  return total;
}

SuccinctAbp all_x_abp(long ell) {
  // r = 1, every edge labelled x: B = x
  auto u = Universe::make({"u1", "v1", "x"}, {});
  CircuitBuilder b(u, true);
  GateId g = b.variable(std::string("x"));
  SuccinctAbp abp;
  abp.encoding = std::move(b).finish({g});
  abp.r = 1;
  abp.s_label = {0};
  abp.t_label = {1};
  abp.ell = ell;
  return abp;
}

}  // namespace

TEST_CASE("validation of succinct ABPs") {
  SuccinctAbp abp = all_x_abp(2);
  CHECK(validate_abp(abp).ok());
  abp.ell = 0;
  CHECK(!validate_abp(abp).ok());
  abp.ell = 2;
  abp.s_label = {0, 1};
  CHECK(!validate_abp(abp).ok());
  abp.s_label = {0};
  abp.r = 99;
  CHECK(!validate_abp(abp).ok());
}

TEST_CASE("all-x program: walks of length up to 2 give x + 2x^2") {
  SuccinctAbp abp = all_x_abp(2);
  Polynomial f = abp_expand(abp);
  auto u = abp.encoding.universe;
  VarId x = *u->find("x");
  Polynomial expected = Polynomial::zero(u);
  expected.add_term(ExponentVector::unit(x, 1), Rational(1));
  expected.add_term(ExponentVector::unit(x, 2), Rational(2));
  CHECK(f == expected);
  CHECK(same_polynomial(f, abp_expand_brute(abp)));
}

TEST_CASE("length 1 is exactly the s-to-t edge label") {
  SuccinctAbp abp = all_x_abp(1);
  Polynomial f = abp_expand(abp);
  CHECK(f == Polynomial::variable(abp.encoding.universe, *abp.encoding.universe->find("x")));
}

TEST_CASE("embedding a plain circuit gives a one-edge program") {
  auto u = Universe::make({"x1", "x2"}, {});
  CircuitBuilder b(u, true);
  GateId g = b.add(b.variable(std::string("x1")), b.variable(std::string("x2")));
  Circuit c = std::move(b).finish({g});
  SuccinctAbp abp = embed_mvp_circuit(c);
  CHECK(validate_abp(abp).ok());
  CHECK(abp.ell == 1);
  CHECK(same_polynomial(abp_expand(abp), expand_single(c)));

  // constant zero circuit embeds to the zero program
  CircuitBuilder b0(u, true);
  GateId z = b0.constant(Rational(0));
  Circuit c0 = std::move(b0).finish({z});
  CHECK(abp_expand(embed_mvp_circuit(c0)).is_zero());
}

TEST_CASE("embedding the permanent circuit round trips") {
  // lower the projection circuit of the 2x2 permanent and expand it to a
  // plain monotone circuit is not possible directly; embed the expansion's
  // explicit circuit instead
  Polynomial perm = permanent_oracle(2);
  auto u = perm.universe();
  CircuitBuilder b(u, true);
  std::vector<GateId> terms;
  for (const auto& [m, coeff] : perm.terms()) {
    std::vector<GateId> factors;
    for (const auto& [v, e] : m.entries())
      for (int rep = 0; rep < e; ++rep) factors.push_back(b.variable(v));
    terms.push_back(b.mul_many(std::move(factors)));
  }
  GateId root = b.add_many(std::move(terms));
  Circuit c = std::move(b).finish({root});
  SuccinctAbp abp = embed_mvp_circuit(c);
  CHECK(same_polynomial(abp_expand(abp), perm));
}

TEST_CASE("DP expansion equals the walk-enumeration oracle on random programs") {
  Rng rng(601);
  int done = 0;
  while (done < 30) {
    SuccinctAbp abp = random_abp(rng, static_cast<int>(rng.range(1, 2)),
                                 static_cast<int>(rng.range(1, 2)),
                                 static_cast<int>(rng.range(2, 5)), rng.range(1, 3));
    Polynomial dp;
    try {
      dp = abp_expand(abp);
    } catch (const Error&) {
      continue;
    }
    CHECK(same_polynomial(dp, abp_expand_brute(abp)));
    CHECK(dp.is_monotone());
    ++done;
  }
}

TEST_CASE("monotone encodings dominate every edge label at all-ones") {
  Rng rng(603);
  for (int trial = 0; trial < 24; ++trial) {
    // exercise the full 2^{2r} pair sweep up to r = 4
    int r = static_cast<int>(rng.range(1, 4));
    SuccinctAbp abp = random_abp(rng, r, 2, 4, 2);
    Polynomial base = expand_single(abp.encoding);
    auto us = abp.u_ids(), vs = abp.v_ids();
    auto at = [&](std::uint64_t a, std::uint64_t b) {
      Polynomial p = base;
      for (std::size_t i = 0; i < us.size(); ++i)
        p = substitute(p, us[i], Rational((a >> i) & 1));
      for (std::size_t i = 0; i < vs.size(); ++i)
        p = substitute(p, vs[i], Rational((b >> i) & 1));
      return p;
    };
    std::set<VarId> xs;
    for (VarId id : abp.x_ids()) xs.insert(id);
    const std::uint64_t ones = (1ull << r) - 1;
    auto top = at(ones, ones).support_on(xs);
    for (std::uint64_t a = 0; a <= ones; ++a)
      for (std::uint64_t b = 0; b <= ones; ++b) {
        auto supp = at(a, b).support_on(xs);
        for (const auto& m : supp) CHECK(top.count(m) == 1);
      }
  }
}

TEST_CASE("weighted exponential sum for the all-x program") {
  SuccinctAbp abp = all_x_abp(3);
  Polynomial f = abp_expand(abp);  // x + 2x^2 + 4x^3
  std::set<VarId> xs;
  for (VarId id : abp.x_ids()) xs.insert(id);
  std::int64_t d = f.degree_on(xs).value();
  CHECK(d == 3);
  AbpExpSumStats st;
  ExpSum es = abp_to_expsum(abp, d, {}, &st);
  CHECK(st.bits == 4);
  CHECK(st.covers_all_lengths);
  CHECK(same_polynomial(expand_expsum(es), f));
}

TEST_CASE("exponential sum equality via iterated summation on random programs") {
  Rng rng(605);
  int done = 0;
  while (done < 20) {
    SuccinctAbp abp = random_abp(rng, 1, static_cast<int>(rng.range(1, 2)),
                                 static_cast<int>(rng.range(2, 4)), rng.range(1, 3));
    Polynomial f;
    try {
      f = abp_expand(abp);
    } catch (const Error&) {
      continue;
    }
    std::set<VarId> xs;
    for (VarId id : abp.x_ids()) xs.insert(id);
    std::int64_t d = std::max<std::int64_t>(f.degree_on(xs).value_or(0), abp.ell - 2);
    if (1 * (d + 1) > 12) continue;
    ExpSum es = abp_to_expsum(abp, d);
    CHECK(same_polynomial(expand_expsum(es), f));
    ++done;
  }
}

TEST_CASE("band weights cancel the redundant assignments exactly") {
  // the j-th band term appears 2^{r(d+1-j)} times across assignments and is
  // scaled by 2^{-r(d+1-j)}; summing the weighted body over the cube must
  // therefore reproduce each band once -- checked through the ell=1 case
  // where only the direct edge term remains
  SuccinctAbp abp = all_x_abp(1);
  ExpSum es = abp_to_expsum(abp, 2);
  CHECK(same_polynomial(expand_expsum(es), abp_expand(abp)));
}

TEST_CASE("length-bound report cases") {
  {
    SuccinctAbp abp = all_x_abp(1);
    auto rep = abp_length_bound_check(abp);
    CHECK(rep.vacuous);
  }
  {
    // deg(f) = ell with x on every edge, so ell <= deg + 2 holds
    SuccinctAbp abp = all_x_abp(4);
    auto rep = abp_length_bound_check(abp);
    CHECK(!rep.vacuous);
    CHECK(rep.hypothesis_met);
    CHECK(rep.bound_holds);
  }
  {
    // zero edge labels: B = u1 * x vanishes when u1 = 0... use B that is 0
    // at (1,1): B = u1 * v1 * 0 is degenerate everywhere; simpler: B with a
    // zero constant
    auto u = Universe::make({"u1", "v1", "x"}, {});
    CircuitBuilder b(u, true);
    GateId g = b.constant(Rational(0));
    SuccinctAbp abp;
    abp.encoding = std::move(b).finish({g});
    abp.r = 1;
    abp.s_label = {0};
    abp.t_label = {1};
    abp.ell = 3;
    auto rep = abp_length_bound_check(abp);
    CHECK(!rep.hypothesis_met);
    CHECK(rep.hypothesis_note.find("zero edge label") != std::string::npos);
  }
  {
    // constant labels: nonzero chain but degree 0 < ell - 2; hypothesis not met
    auto u = Universe::make({"u1", "v1", "x"}, {});
    CircuitBuilder b(u, true);
    GateId g = b.constant(Rational(1));
    SuccinctAbp abp;
    abp.encoding = std::move(b).finish({g});
    abp.r = 1;
    abp.s_label = {0};
    abp.t_label = {1};
    abp.ell = 5;
    auto rep = abp_length_bound_check(abp);
    CHECK(!rep.hypothesis_met);
    CHECK(rep.hypothesis_note.find("degree chain") != std::string::npos);
  }
}

TEST_CASE("abp json round trip") {
  SuccinctAbp abp = all_x_abp(3);
  std::string once = abp_to_json(abp);
  SuccinctAbp back = parse_abp_json(once);
  CHECK(abp_to_json(back) == once);
  CHECK(same_polynomial(abp_expand(back), abp_expand(abp)));
  CHECK_THROWS_AS(parse_abp_json("{\"r\": 1}"), Error);
}
