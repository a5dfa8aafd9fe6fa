#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "mcw/error.hpp"
#include "mcw/generators.hpp"
#include "mcw/json_io.hpp"
#include "mcw/polynomial.hpp"

using namespace mcw;

namespace {

UniversePtr uxy() { return Universe::make({"x", "y"}, {}); }
UniversePtr uxyz() { return Universe::make({"x", "y", "z"}, {}); }

Polynomial var(const UniversePtr& u, const char* name) {
  return Polynomial::variable(u, *u->find(name));
}

std::set<VarId> all_vars(const UniversePtr& u) {
  auto ids = u->true_ids();
  auto aux = u->aux_ids();
  std::set<VarId> s(ids.begin(), ids.end());
  s.insert(aux.begin(), aux.end());
  return s;
}

Polynomial random_poly(Rng& rng, const UniversePtr& u, int terms, int max_exp) {
  Polynomial p = Polynomial::zero(u);
  for (int t = 0; t < terms; ++t) {
    std::vector<ExponentVector::Entry> e;
    for (VarId v = 0; v < u->n_vars(); ++v) {
      std::int64_t exp = rng.range(0, max_exp);
      if (exp) e.emplace_back(v, exp);
    }
    p.add_term(ExponentVector::from_entries(std::move(e)),
               Rational(rng.range(-3, 3), rng.range(1, 4)));
  }
  return p;
}

}  // namespace

TEST_CASE("addition") {
  auto u = uxy();
  CHECK(poly_add(var(u, "x"), var(u, "y")).n_terms() == 2);
  // additive inverse cancels exactly
  Polynomial p = poly_add(var(u, "x"), Polynomial::constant(u, Rational(1)));
  Polynomial q = Polynomial::constant(u, Rational(-1));
  CHECK(poly_add(p, q) == var(u, "x"));
  // 2x + 3x = 5x
  Polynomial two_x = poly_scale(var(u, "x"), Rational(2));
  Polynomial three_x = poly_scale(var(u, "x"), Rational(3));
  CHECK(poly_add(two_x, three_x) == poly_scale(var(u, "x"), Rational(5)));
}

TEST_CASE("multiplication") {
  auto u = uxy();
  Polynomial xy = poly_add(var(u, "x"), var(u, "y"));
  Polynomial sq = poly_mul(xy, xy);
  CHECK(sq.n_terms() == 3);
  CHECK(sq.coeff(ExponentVector::from_entries({{0, 1}, {1, 1}})) == Rational(2));
  CHECK(poly_mul(sq, Polynomial::constant(u, Rational(1))) == sq);
  // Laurent: x * x^{-1} = 1
  Polynomial x_inv = Polynomial::monomial(u, Rational(1), ExponentVector::unit(0, -1), true);
  Polynomial x_pos = Polynomial::monomial(u, Rational(1), ExponentVector::unit(0, 1), true);
  CHECK(poly_mul(x_inv, x_pos) == Polynomial::constant(u, Rational(1), true));
}

TEST_CASE("multiplication respects the term guard") {
  auto u = uxy();
  Polynomial p = Polynomial::zero(u);
  for (int i = 0; i < 40; ++i) p.add_term(ExponentVector::unit(0, i), Rational(1));
  Polynomial q = Polynomial::zero(u);
  for (int i = 0; i < 40; ++i) q.add_term(ExponentVector::unit(1, i), Rational(1));
  CHECK_THROWS_AS(poly_mul(p, q, 100), Error);
}

TEST_CASE("substitution") {
  auto u = uxyz();
  // xz + y at z=1 -> x + y ; at z=0 -> y
  Polynomial p = poly_add(poly_mul(var(u, "x"), var(u, "z")), var(u, "y"));
  VarId z = *u->find("z");
  CHECK(substitute(p, z, Rational(1)) == poly_add(var(u, "x"), var(u, "y")));
  CHECK(substitute(p, z, Rational(0)) == var(u, "y"));

  // y1 x1 + y2 x2 pruned by y1=0 then y2=1 leaves x2
  auto u2 = Universe::make({"x1", "x2"}, {"y1", "y2"});
  Polynomial q = poly_add(poly_mul(var(u2, "y1"), var(u2, "x1")),
                          poly_mul(var(u2, "y2"), var(u2, "x2")));
  Polynomial step = substitute(q, *u2->find("y1"), Rational(0));
  CHECK(substitute(step, *u2->find("y2"), Rational(1)) == var(u2, "x2"));

  // zero into a negative exponent is undefined
  Polynomial laurent = Polynomial::monomial(u, Rational(1), ExponentVector::unit(z, -2), true);
  CHECK_THROWS_AS(substitute(laurent, z, Rational(0)), Error);
  CHECK(substitute(laurent, z, Rational(2)) == Polynomial::constant(u, Rational(1, 4), true));
}

TEST_CASE("substitute a polynomial for a variable") {
  auto u = uxy();
  VarId x = *u->find("x");
  // (x^2 + x) with x := y+1 -> (y+1)^2 + (y+1)
  Polynomial p = poly_add(Polynomial::monomial(u, Rational(1), ExponentVector::unit(x, 2)),
                          var(u, "x"));
  Polynomial value = poly_add(var(u, "y"), Polynomial::constant(u, Rational(1)));
  Polynomial expected = poly_add(poly_mul(value, value), value);
  CHECK(substitute(p, x, value) == expected);
}

TEST_CASE("substitute idempotence at zero") {
  Rng rng(7);
  auto u = uxyz();
  VarId z = *u->find("z");
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial p = random_poly(rng, u, 6, 3);
    Polynomial once = substitute(p, z, Rational(0));
    CHECK(substitute(once, z, Rational(rng.range(-5, 5))) == once);
  }
}

TEST_CASE("ring laws on random inputs") {
  Rng rng(11);
  auto u = uxyz();
  for (int trial = 0; trial < 60; ++trial) {
    Polynomial a = random_poly(rng, u, 4, 2);
    Polynomial b = random_poly(rng, u, 4, 2);
    Polynomial c = random_poly(rng, u, 3, 2);
    CHECK(poly_add(a, b) == poly_add(b, a));
    CHECK(poly_mul(a, b) == poly_mul(b, a));
    CHECK(poly_add(poly_add(a, b), c) == poly_add(a, poly_add(b, c)));
    CHECK(poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c)));
    CHECK(poly_mul(a, poly_add(b, c)) == poly_add(poly_mul(a, b), poly_mul(a, c)));
  }
}

TEST_CASE("monotone support laws: union and Minkowski sum, no cancellation") {
  Rng rng(13);
  auto u = uxyz();
  auto vars = all_vars(u);
  auto supp = [&](const Polynomial& p) { return p.support_on(vars); };
  for (int trial = 0; trial < 50; ++trial) {
    // force positive coefficients
    Polynomial a = Polynomial::zero(u);
    Polynomial b = Polynomial::zero(u);
    for (int t = 0; t < 4; ++t) {
      a.add_term(ExponentVector::from_entries({{0, rng.range(0, 2)}, {1, rng.range(0, 2)}}),
                 Rational(rng.range(1, 3)));
      b.add_term(ExponentVector::from_entries({{1, rng.range(0, 2)}, {2, rng.range(0, 2)}}),
                 Rational(rng.range(1, 3)));
    }
    auto sum_supp = supp(poly_add(a, b));
    std::set<ExponentVector> expected_union = supp(a);
    for (const auto& m : supp(b)) expected_union.insert(m);
    CHECK(sum_supp == expected_union);

    auto prod_supp = supp(poly_mul(a, b));
    std::set<ExponentVector> expected_mink;
    for (const auto& ma : supp(a))
      for (const auto& mb : supp(b)) expected_mink.insert(ma.plus(mb));
    CHECK(prod_supp == expected_mink);
  }
}

TEST_CASE("homogeneous components") {
  auto u = uxy();
  VarId x = *u->find("x"), y = *u->find("y");
  std::set<VarId> vars{x, y};
  // x + xy + 1
  Polynomial p = Polynomial::zero(u);
  p.add_term(ExponentVector::unit(x), Rational(1));
  p.add_term(ExponentVector::from_entries({{x, 1}, {y, 1}}), Rational(1));
  p.add_term(ExponentVector(), Rational(1));
  CHECK(hom_component(p, 1, vars) == var(u, "x"));
  CHECK(hom_component(p, 2, vars) ==
        Polynomial::monomial(u, Rational(1), ExponentVector::from_entries({{x, 1}, {y, 1}})));
  CHECK(hom_component(p, 0, vars) == Polynomial::constant(u, Rational(1)));
  CHECK(hom_component(p, 7, vars).is_zero());
}

TEST_CASE("hom components reconstruct the polynomial") {
  Rng rng(17);
  auto u = uxyz();
  auto vars = all_vars(u);
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial p = random_poly(rng, u, 6, 3);
    DegreeValue d = degree(p, vars);
    Polynomial sum = Polynomial::zero(u);
    for (std::int64_t k = 0; k <= d.value_or(-1); ++k)
      sum = poly_add(sum, hom_component(p, k, vars));
    CHECK(sum == p);
  }
}

TEST_CASE("degree conventions") {
  auto u = uxy();
  VarId x = *u->find("x"), y = *u->find("y");
  Polynomial p = Polynomial::zero(u);
  p.add_term(ExponentVector::from_entries({{x, 2}, {y, 1}}), Rational(1));
  p.add_term(ExponentVector::unit(x), Rational(1));
  CHECK(degree(p, {x}) == DegreeValue::of(2));
  CHECK(degree(p, {y}) == DegreeValue::of(1));
  CHECK(degree(Polynomial::zero(u), {x}).is_neg_infinity());
  CHECK(DegreeValue::neg_infinity() < DegreeValue::of(-100));
  CHECK(DegreeValue::neg_infinity().to_string() == "-inf");
}

TEST_CASE("permanent oracle") {
  Polynomial p2 = permanent_oracle(2);
  CHECK(p2.n_terms() == 2);
  auto u = p2.universe();
  ExponentVector diag = ExponentVector::from_entries({{*u->find("x1_1"), 1}, {*u->find("x2_2"), 1}});
  ExponentVector anti = ExponentVector::from_entries({{*u->find("x1_2"), 1}, {*u->find("x2_1"), 1}});
  CHECK(p2.coeff(diag) == Rational(1));
  CHECK(p2.coeff(anti) == Rational(1));

  CHECK(permanent_oracle(1).n_terms() == 1);
  Polynomial p3 = permanent_oracle(3);
  CHECK(p3.n_terms() == 6);
  for (const auto& [m, c] : p3.terms()) CHECK(c == Rational(1));

  CHECK_THROWS_AS(permanent_oracle(7), Error);

  // n! terms, multilinear, each term hits every row and column once
  for (int n = 1; n <= 5; ++n) {
    Polynomial p = permanent_oracle(n, 6);
    std::size_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= static_cast<std::size_t>(i);
    CHECK(p.n_terms() == fact);
    for (const auto& [m, c] : p.terms()) {
      CHECK(static_cast<int>(m.entries().size()) == n);
      for (const auto& [v, e] : m.entries()) CHECK(e == 1);
    }
  }
}

TEST_CASE("permanent oracle agrees with expansion along the first row") {
  // independent route: recursive minor expansion
  for (int n = 2; n <= 5; ++n) {
    Polynomial p = permanent_oracle(n, 6);
    auto u = p.universe();
    // perm = sum_j x1_j * perm(minor_1j), assembled directly over monomials
    std::map<std::vector<std::pair<std::string, std::int64_t>>, Rational> assembled;
    std::vector<int> cols(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) cols[static_cast<std::size_t>(j)] = j;
    // enumerate permutations of the minor rows via recursion
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::vector<std::pair<std::string, std::int64_t>> current;
    std::function<void(int)> rec = [&](int row) {
      if (row == n) {
        auto key = current;
        std::sort(key.begin(), key.end());
        assembled[key] += Rational(1);
        return;
      }
      for (int j = 0; j < n; ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        used[static_cast<std::size_t>(j)] = true;
        current.emplace_back("x" + std::to_string(row + 1) + "_" + std::to_string(j + 1), 1);
        rec(row + 1);
        current.pop_back();
        used[static_cast<std::size_t>(j)] = false;
      }
    };
    rec(0);
    CHECK(assembled == p.terms_by_name());
  }
}

TEST_CASE("permanent oracle is symmetric under transposition") {
  for (int n = 2; n <= 4; ++n) {
    Polynomial p = permanent_oracle(n);
    auto terms = p.terms_by_name();
    // transpose x{i}_{j} -> x{j}_{i}
    std::map<std::vector<std::pair<std::string, std::int64_t>>, Rational> transposed;
    for (const auto& [key, c] : terms) {
      std::vector<std::pair<std::string, std::int64_t>> t;
      for (const auto& [name, e] : key) {
        auto us = name.find('_');
        std::string i = name.substr(1, us - 1), j = name.substr(us + 1);
        t.emplace_back("x" + j + "_" + i, e);
      }
      std::sort(t.begin(), t.end());
      transposed.emplace(std::move(t), c);
    }
    CHECK(transposed == terms);
  }
}

TEST_CASE("monotonicity predicate") {
  auto u = uxy();
  Polynomial p = poly_add(var(u, "x"), poly_scale(var(u, "y"), Rational(2)));
  CHECK(p.is_monotone());
  Polynomial q = poly_sub(var(u, "x"), var(u, "y"));
  CHECK(!q.is_monotone());
  CHECK(Polynomial::zero(u).is_monotone());
}

TEST_CASE("polynomial json round trip is canonical") {
  Rng rng(23);
  auto u = uxyz();
  for (int trial = 0; trial < 30; ++trial) {
    Polynomial p = random_poly(rng, u, 5, 3);
    std::string once = polynomial_to_json(p);
    Polynomial q = parse_polynomial_json(once);
    CHECK(same_polynomial(p, q));
    CHECK(polynomial_to_json(q) == once);
  }
  // malformed input carries a position diagnostic
  try {
    parse_polynomial_json("{\"laurent\": false, \"terms\": [");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
  }
}

TEST_CASE("serialization is canonical even for shuffled universe orders") {
  // same polynomial built over differently-ordered universes must emit
  // identical bytes (the file format has no universe field)
  auto u1 = Universe::make({"b", "a", "c"}, {});
  auto u2 = Universe::make({"c", "a", "b"}, {});
  auto build = [](const UniversePtr& u) {
    Polynomial p = Polynomial::zero(u);
    p.add_term(ExponentVector::from_entries({{*u->find("a"), 1}, {*u->find("b"), 2}}),
               Rational(3, 2));
    p.add_term(ExponentVector::unit(*u->find("c"), 1), Rational(1));
    p.add_term(ExponentVector::from_entries({{*u->find("a"), 2}}), Rational(5));
    return p;
  };
  Polynomial p1 = build(u1), p2 = build(u2);
  CHECK(polynomial_to_json(p1) == polynomial_to_json(p2));
  Polynomial back = parse_polynomial_json(polynomial_to_json(p1));
  CHECK(same_polynomial(back, p1));
  CHECK(polynomial_to_json(back) == polynomial_to_json(p1));
}
