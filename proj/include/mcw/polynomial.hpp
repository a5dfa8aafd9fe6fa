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

#ifndef MCW_POLYNOMIAL_HPP
#define MCW_POLYNOMIAL_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mcw/rational.hpp"
#include "mcw/variable.hpp"

namespace mcw {

/// Sparse exponent vector: sorted (var-id, exponent) pairs, no zero
/// entries. Negative exponents are only meaningful inside Laurent
/// polynomials / high-powered leaves.
class ExponentVector {
 public:
  using Entry = std::pair<VarId, std::int64_t>;

  ExponentVector() = default;
  /// Builds from arbitrary pairs; merges duplicates, drops zeros.
  static ExponentVector from_entries(std::vector<Entry> entries);
  static ExponentVector unit(VarId var, std::int64_t exp = 1);

  std::int64_t exponent(VarId var) const;
  const std::vector<Entry>& entries() const { return e_; }
  bool empty() const { return e_.empty(); }

  bool all_nonnegative() const;
  std::int64_t total_degree() const;          // sum of all exponents
  std::int64_t total_abs_degree() const;      // sum of |exponent|, for guards
  std::int64_t degree_on(const std::set<VarId>& vars) const;

  ExponentVector plus(const ExponentVector& o) const;  // Minkowski add
  ExponentVector restricted_to(const std::set<VarId>& vars) const;
  ExponentVector without(VarId var) const;

  /// Dense lexicographic order by var-id (missing entries read as 0).
  std::strong_ordering compare(const ExponentVector& o) const;
  friend bool operator==(const ExponentVector& a, const ExponentVector& b) { return a.e_ == b.e_; }
  friend bool operator<(const ExponentVector& a, const ExponentVector& b) {
    return a.compare(b) == std::strong_ordering::less;
  }

 private:
  std::vector<Entry> e_;
};

/// Degree of a polynomial: a non-negative integer, or NEG_INFINITY for the
/// zero polynomial. NEG_INFINITY compares below every integer.
class DegreeValue {
 public:
  static DegreeValue neg_infinity() { return DegreeValue(); }
  static DegreeValue of(std::int64_t d) {
    DegreeValue v;
    v.neg_inf_ = false;
    v.deg_ = d;
    return v;
  }

  bool is_neg_infinity() const { return neg_inf_; }
  std::int64_t value() const;  // throws on NEG_INFINITY
  std::int64_t value_or(std::int64_t fallback) const { return neg_inf_ ? fallback : deg_; }
  std::string to_string() const;

  friend bool operator==(const DegreeValue& a, const DegreeValue& b) {
    return a.neg_inf_ == b.neg_inf_ && (a.neg_inf_ || a.deg_ == b.deg_);
  }
  friend bool operator<(const DegreeValue& a, const DegreeValue& b) {
    if (a.neg_inf_) return !b.neg_inf_;
    return !b.neg_inf_ && a.deg_ < b.deg_;
  }
  friend bool operator<=(const DegreeValue& a, const DegreeValue& b) { return a < b || a == b; }

 private:
  DegreeValue() = default;
  bool neg_inf_ = true;
  std::int64_t deg_ = 0;
};

/// Sparse multivariate polynomial with exact rational coefficients over a
/// declared universe. Term map keys are canonically ordered, zero
/// coefficients are never stored. With laurent=true, exponents may be
/// negative (Laurent polynomials computed by high-powered circuits).
class Polynomial {
 public:
  using TermMap = std::map<ExponentVector, Rational>;

  /// Zero polynomial over the empty universe.
  Polynomial();

  static Polynomial zero(UniversePtr u, bool laurent = false);
  static Polynomial constant(UniversePtr u, Rational c, bool laurent = false);
  static Polynomial variable(UniversePtr u, VarId var);
  static Polynomial monomial(UniversePtr u, Rational coeff, ExponentVector exps,
                             bool laurent = false);

  const UniversePtr& universe() const { return u_; }
  bool laurent() const { return laurent_; }
  const TermMap& terms() const { return terms_; }
  std::size_t n_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const ExponentVector& m) const;
  void add_term(const ExponentVector& m, const Rational& c);

  /// True iff every stored coefficient is > 0.
  bool is_monotone() const;
  /// Degree in the given variables (all variables if `vars` is empty set
  /// semantics are NOT implied -- pass the full set explicitly).
  DegreeValue degree_on(const std::set<VarId>& vars) const;
  DegreeValue total_degree() const;
  /// Degree restricted to the universe's true variables.
  DegreeValue degree_true() const;

  /// If every term has the same degree on `vars`, returns it (the zero
  /// polynomial is homogeneous of NEG_INFINITY degree).
  bool is_homogeneous_on(const std::set<VarId>& vars, DegreeValue* deg_out = nullptr) const;

  std::vector<ExponentVector> support() const;
  /// Support vectors projected onto `vars` coordinates, duplicates merged.
  std::set<ExponentVector> support_on(const std::set<VarId>& vars) const;

  /// True iff no aux variable of the universe occurs in any term.
  bool mentions_aux() const;

  /// Name-keyed term map; universe-independent form used for comparing
  /// polynomials that live in different universes.
  std::map<std::vector<std::pair<std::string, std::int64_t>>, Rational> terms_by_name() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(UniversePtr u, bool laurent) : u_(std::move(u)), laurent_(laurent) {}
  UniversePtr u_;
  bool laurent_ = false;
  TermMap terms_;
};

// --- operations -----------------------------------------------------------

inline constexpr std::size_t kDefaultMaxTerms = 200000;

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_sub(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q,
                    std::size_t max_terms = kDefaultMaxTerms);
Polynomial poly_scale(const Polynomial& p, const Rational& c);

/// Partial evaluation at var = value (rational).
Polynomial substitute(const Polynomial& p, VarId var, const Rational& value);
/// Substitution of a polynomial for var; var must occur with non-negative
/// exponents only.
Polynomial substitute(const Polynomial& p, VarId var, const Polynomial& value,
                      std::size_t max_terms = kDefaultMaxTerms);
/// p|_{var=0} + p|_{var=1}.
Polynomial sum_over_bool(const Polynomial& p, VarId var);

/// Terms of total degree exactly k on `vars`; other variables unconstrained.
Polynomial hom_component(const Polynomial& p, std::int64_t k, const std::set<VarId>& vars);

DegreeValue degree(const Polynomial& p, const std::set<VarId>& vars);

/// The n x n permanent as an explicit n!-term polynomial over variables
/// x{i}_{j}. Brute-force enumeration of all permutations.
Polynomial permanent_oracle(int n, int cap = 6);

/// Universe-independent exact equality (compares name-keyed terms).
bool same_polynomial(const Polynomial& p, const Polynomial& q);

}  // namespace mcw

#endif
