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

#include "mcw/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "mcw/error.hpp"

namespace mcw {

// --- ExponentVector ---------------------------------------------------------

ExponentVector ExponentVector::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  ExponentVector ev;
  for (const auto& [var, exp] : entries) {
    if (!ev.e_.empty() && ev.e_.back().first == var)
      ev.e_.back().second += exp;
    else
      ev.e_.emplace_back(var, exp);
  }
  std::erase_if(ev.e_, [](const Entry& e) { return e.second == 0; });
  return ev;
}

ExponentVector ExponentVector::unit(VarId var, std::int64_t exp) {
  ExponentVector ev;
  if (exp != 0) ev.e_.emplace_back(var, exp);
  return ev;
}

std::int64_t ExponentVector::exponent(VarId var) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), var,
                             [](const Entry& e, VarId v) { return e.first < v; });
  return (it != e_.end() && it->first == var) ? it->second : 0;
}

bool ExponentVector::all_nonnegative() const {
  return std::all_of(e_.begin(), e_.end(), [](const Entry& e) { return e.second >= 0; });
}

std::int64_t ExponentVector::total_degree() const {
  std::int64_t d = 0;
  for (const auto& [var, exp] : e_) d += exp;
  return d;
}

std::int64_t ExponentVector::total_abs_degree() const {
  std::int64_t d = 0;
  for (const auto& [var, exp] : e_) d += exp < 0 ? -exp : exp;
  return d;
}

std::int64_t ExponentVector::degree_on(const std::set<VarId>& vars) const {
  std::int64_t d = 0;
  for (const auto& [var, exp] : e_)
    if (vars.count(var)) d += exp;
  return d;
}

ExponentVector ExponentVector::plus(const ExponentVector& o) const {
  std::vector<Entry> merged = e_;
  merged.insert(merged.end(), o.e_.begin(), o.e_.end());
  return from_entries(std::move(merged));
}

ExponentVector ExponentVector::restricted_to(const std::set<VarId>& vars) const {
  ExponentVector ev;
  for (const auto& e : e_)
    if (vars.count(e.first)) ev.e_.push_back(e);
  return ev;
}

ExponentVector ExponentVector::without(VarId var) const {
  ExponentVector ev;
  for (const auto& e : e_)
    if (e.first != var) ev.e_.push_back(e);
  return ev;
}

std::strong_ordering ExponentVector::compare(const ExponentVector& o) const {
  std::size_t i = 0, j = 0;
  while (i < e_.size() || j < o.e_.size()) {
    if (i < e_.size() && j < o.e_.size()) {
      if (e_[i].first == o.e_[j].first) {
        if (e_[i].second != o.e_[j].second)
          return e_[i].second <=> o.e_[j].second;
        ++i, ++j;
      } else if (e_[i].first < o.e_[j].first) {
        // this has a non-zero exponent where o has zero
        return e_[i].second <=> std::int64_t{0};
      } else {
        return std::int64_t{0} <=> o.e_[j].second;
      }
    } else if (i < e_.size()) {
      return e_[i].second <=> std::int64_t{0};
    } else {
      return std::int64_t{0} <=> o.e_[j].second;
    }
  }
  return std::strong_ordering::equal;
}

// --- DegreeValue ------------------------------------------------------------

std::int64_t DegreeValue::value() const {
  if (neg_inf_) raise(Errc::InvalidArgument, "degree of the zero polynomial has no integer value");
  return deg_;
}

std::string DegreeValue::to_string() const {
  return neg_inf_ ? "-inf" : std::to_string(deg_);
}

// --- Polynomial -------------------------------------------------------------

Polynomial::Polynomial() : Polynomial(Universe::make({}, {}), false) {}

Polynomial Polynomial::zero(UniversePtr u, bool laurent) { return Polynomial(std::move(u), laurent); }

Polynomial Polynomial::constant(UniversePtr u, Rational c, bool laurent) {
  Polynomial p(std::move(u), laurent);
  p.add_term(ExponentVector(), c);
  return p;
}

Polynomial Polynomial::variable(UniversePtr u, VarId var) {
  if (var >= u->n_vars()) raise(Errc::InvalidArgument, "variable id outside universe");
  Polynomial p(std::move(u), false);
  p.add_term(ExponentVector::unit(var), Rational(1));
  return p;
}

Polynomial Polynomial::monomial(UniversePtr u, Rational coeff, ExponentVector exps, bool laurent) {
  if (!laurent && !exps.all_nonnegative())
    raise(Errc::InvalidArgument, "negative exponent in non-Laurent monomial");
  Polynomial p(std::move(u), laurent);
  p.add_term(exps, coeff);
  return p;
}

Rational Polynomial::coeff(const ExponentVector& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const ExponentVector& m, const Rational& c) {
  if (c.is_zero()) return;
  if (!laurent_ && !m.all_nonnegative())
    raise(Errc::InvalidArgument, "negative exponent requires the laurent flag");
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Polynomial::is_monotone() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.sign() > 0; });
}

DegreeValue Polynomial::degree_on(const std::set<VarId>& vars) const {
  if (terms_.empty()) return DegreeValue::neg_infinity();
  std::int64_t best = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::int64_t d = m.degree_on(vars);
    if (first || d > best) best = d, first = false;
  }
  return DegreeValue::of(best);
}

DegreeValue Polynomial::total_degree() const {
  if (terms_.empty()) return DegreeValue::neg_infinity();
  std::int64_t best = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::int64_t d = m.total_degree();
    if (first || d > best) best = d, first = false;
  }
  return DegreeValue::of(best);
}

DegreeValue Polynomial::degree_true() const {
  auto ids = u_->true_ids();
  return degree_on(std::set<VarId>(ids.begin(), ids.end()));
}

bool Polynomial::is_homogeneous_on(const std::set<VarId>& vars, DegreeValue* deg_out) const {
  if (terms_.empty()) {
    if (deg_out) *deg_out = DegreeValue::neg_infinity();
    return true;
  }
  std::int64_t d = terms_.begin()->first.degree_on(vars);
  for (const auto& [m, c] : terms_)
    if (m.degree_on(vars) != d) return false;
  if (deg_out) *deg_out = DegreeValue::of(d);
  return true;
}

std::vector<ExponentVector> Polynomial::support() const {
  std::vector<ExponentVector> s;
  s.reserve(terms_.size());
  for (const auto& [m, c] : terms_) s.push_back(m);
  return s;
}

std::set<ExponentVector> Polynomial::support_on(const std::set<VarId>& vars) const {
  std::set<ExponentVector> s;
  for (const auto& [m, c] : terms_) s.insert(m.restricted_to(vars));
  return s;
}

bool Polynomial::mentions_aux() const {
  for (const auto& [m, c] : terms_)
    for (const auto& [var, exp] : m.entries())
      if (u_->is_aux_var(var)) return true;
  return false;
}

std::map<std::vector<std::pair<std::string, std::int64_t>>, Rational> Polynomial::terms_by_name()
    const {
  std::map<std::vector<std::pair<std::string, std::int64_t>>, Rational> out;
  for (const auto& [m, c] : terms_) {
    std::vector<std::pair<std::string, std::int64_t>> key;
    key.reserve(m.entries().size());
    for (const auto& [var, exp] : m.entries()) key.emplace_back(u_->name(var), exp);
    std::sort(key.begin(), key.end());
    out.emplace(std::move(key), c);
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.laurent_ == b.laurent_ && a.u_->same_layout(*b.u_) && a.terms_ == b.terms_;
}

// --- free operations --------------------------------------------------------

namespace {

void require_same_universe(const Polynomial& p, const Polynomial& q) {
  if (!p.universe()->same_layout(*q.universe()))
    raise(Errc::InvalidArgument, "polynomial operation across different universes");
}

}  // namespace

Polynomial poly_add(const Polynomial& p, const Polynomial& q) {
  require_same_universe(p, q);
  Polynomial r = Polynomial::zero(p.universe(), p.laurent() || q.laurent());
  for (const auto& [m, c] : p.terms()) r.add_term(m, c);
  for (const auto& [m, c] : q.terms()) r.add_term(m, c);
  return r;
}

Polynomial poly_sub(const Polynomial& p, const Polynomial& q) {
  require_same_universe(p, q);
  Polynomial r = Polynomial::zero(p.universe(), p.laurent() || q.laurent());
  for (const auto& [m, c] : p.terms()) r.add_term(m, c);
  for (const auto& [m, c] : q.terms()) r.add_term(m, -c);
  return r;
}

Polynomial poly_mul(const Polynomial& p, const Polynomial& q, std::size_t max_terms) {
  require_same_universe(p, q);
  Polynomial r = Polynomial::zero(p.universe(), p.laurent() || q.laurent());
  for (const auto& [mp, cp] : p.terms()) {
    for (const auto& [mq, cq] : q.terms()) {
      r.add_term(mp.plus(mq), cp * cq);
      if (r.n_terms() > max_terms)
        raise(Errc::ExpansionOverflow,
              "product exceeds the term-count guard (" + std::to_string(max_terms) + " terms)");
    }
  }
  return r;
}

Polynomial poly_scale(const Polynomial& p, const Rational& c) {
  Polynomial r = Polynomial::zero(p.universe(), p.laurent());
  if (c.is_zero()) return r;
  for (const auto& [m, k] : p.terms()) r.add_term(m, k * c);
  return r;
}

Polynomial substitute(const Polynomial& p, VarId var, const Rational& value) {
  Polynomial r = Polynomial::zero(p.universe(), p.laurent());
  for (const auto& [m, c] : p.terms()) {
    std::int64_t e = m.exponent(var);
    if (e == 0) {
      r.add_term(m, c);
      continue;
    }
    if (e < 0 && value.is_zero())
      raise(Errc::DivisionByZero,
            "substituting 0 into a negative exponent of '" + p.universe()->name(var) + "'");
    if (value.is_zero()) continue;
    r.add_term(m.without(var), c * value.pow(e));
  }
  return r;
}

Polynomial substitute(const Polynomial& p, VarId var, const Polynomial& value,
                      std::size_t max_terms) {
  require_same_universe(p, value);
  // group by exponent of var, then use Horner-style powers
  std::map<std::int64_t, Polynomial> by_exp;
  for (const auto& [m, c] : p.terms()) {
    std::int64_t e = m.exponent(var);
    if (e < 0)
      raise(Errc::PreconditionViolation,
            "cannot substitute a polynomial into a negative exponent");
    auto it = by_exp.find(e);
    if (it == by_exp.end())
      it = by_exp.emplace(e, Polynomial::zero(p.universe(), p.laurent())).first;
    it->second.add_term(m.without(var), c);
  }
  Polynomial r = Polynomial::zero(p.universe(), p.laurent() || value.laurent());
  Polynomial power = Polynomial::constant(p.universe(), Rational(1), p.laurent() || value.laurent());
  std::int64_t current = 0;
  for (const auto& [e, coeff_poly] : by_exp) {
    while (current < e) {
      power = poly_mul(power, value, max_terms);
      ++current;
    }
    r = poly_add(r, poly_mul(coeff_poly, power, max_terms));
    if (r.n_terms() > max_terms)
      raise(Errc::ExpansionOverflow, "substitution exceeds the term-count guard");
  }
  return r;
}

Polynomial sum_over_bool(const Polynomial& p, VarId var) {
  return poly_add(substitute(p, var, Rational(0)), substitute(p, var, Rational(1)));
}

Polynomial hom_component(const Polynomial& p, std::int64_t k, const std::set<VarId>& vars) {
  if (p.laurent())
    raise(Errc::PreconditionViolation, "hom_component requires a non-Laurent polynomial");
  if (k < 0) raise(Errc::InvalidArgument, "hom_component needs k >= 0");
  Polynomial r = Polynomial::zero(p.universe(), false);
  for (const auto& [m, c] : p.terms())
    if (m.degree_on(vars) == k) r.add_term(m, c);
  return r;
}

DegreeValue degree(const Polynomial& p, const std::set<VarId>& vars) {
  if (p.laurent())
    raise(Errc::PreconditionViolation, "degree requires a non-Laurent polynomial");
  return p.degree_on(vars);
}

Polynomial permanent_oracle(int n, int cap) {
  if (n < 1) raise(Errc::InvalidArgument, "permanent_oracle needs n >= 1");
  if (n > cap)
    raise(Errc::OracleTooLarge, "permanent_oracle: n = " + std::to_string(n) +
                                    " exceeds the cap of " + std::to_string(cap));
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      names.push_back("x" + std::to_string(i) + "_" + std::to_string(j));
  auto u = Universe::make(names, {});
  Polynomial p = Polynomial::zero(u);
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    std::vector<ExponentVector::Entry> entries;
    entries.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      entries.emplace_back(static_cast<VarId>(i * n + sigma[static_cast<std::size_t>(i)]), 1);
    p.add_term(ExponentVector::from_entries(std::move(entries)), Rational(1));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return p;
}

bool same_polynomial(const Polynomial& p, const Polynomial& q) {
  return p.terms_by_name() == q.terms_by_name();
}

}  // namespace mcw
