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

#include "mcw/rational.hpp"

#include <cctype>

#include "mcw/error.hpp"

namespace mcw {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::ExpansionOverflow: return "ExpansionOverflow";
    case Errc::OracleTooLarge: return "OracleTooLarge";
    case Errc::SearchTooLarge: return "SearchTooLarge";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::MissingAssignment: return "MissingAssignment";
    case Errc::PreconditionViolation: return "PreconditionViolation";
    case Errc::InvariantBreach: return "InvariantBreach";
    case Errc::ShapeError: return "ShapeError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

Rational::Rational(long num, long den) {
  if (den == 0) raise(Errc::DivisionByZero, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational Rational::from_string(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!is_integer_token(num) || !is_integer_token(den))
    raise(Errc::ParseError, "malformed rational '" + std::string(text) + "' (expected \"p\" or \"p/q\")");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (sgn(d) == 0)
    raise(Errc::ParseError, "rational '" + std::string(text) + "' has zero denominator");
  Rational r;
  r.v_ = mpq_class(n) / mpq_class(d);
  return r;
}

std::string Rational::to_string() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) raise(Errc::DivisionByZero, "division by zero rational");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(long e) const {
  if (e < 0) {
    if (is_zero()) raise(Errc::DivisionByZero, "zero raised to a negative power");
    Rational inv;
    inv.v_ = 1 / v_;
    return inv.pow(-e);
  }
  Rational result(1);
  Rational base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Rational Rational::pow2_inverse(long e) {
  if (e < 0) raise(Errc::InvalidArgument, "pow2_inverse needs e >= 0");
  mpz_class d = 1;
  d <<= static_cast<unsigned long>(e);
  Rational r;
  r.v_ = mpq_class(1) / mpq_class(d);
  return r;
}

}  // namespace mcw
