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

#include "mcw.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>
#include <variant>

#include "mcw/abp.hpp"
#include "mcw/acceptance.hpp"
#include "mcw/error.hpp"
#include "mcw/json_io.hpp"
#include "mcw/semantics.hpp"
#include "mcw/transforms.hpp"

// Opaque handle definitions. The circuit handle holds either form; the
// quantified alternative carries its prefix.
struct mcw_circuit {
  mcw::AnyCircuit value;
};
struct mcw_polynomial {
  mcw::Polynomial value;
};
struct mcw_abp {
  mcw::SuccinctAbp value;
};

namespace {

thread_local std::string t_last_error;

mcw_status status_of(mcw::Errc c) {
  using mcw::Errc;
  switch (c) {
    case Errc::ParseError: return MCW_ERROR_PARSE;
    case Errc::ValidationError: return MCW_ERROR_VALIDATION;
    case Errc::ExpansionOverflow: return MCW_ERROR_OVERFLOW;
    case Errc::OracleTooLarge: return MCW_ERROR_TOO_LARGE;
    case Errc::SearchTooLarge: return MCW_ERROR_TOO_LARGE;
    case Errc::DivisionByZero: return MCW_ERROR_DIVISION_BY_ZERO;
    case Errc::MissingAssignment: return MCW_ERROR_MISSING_ASSIGNMENT;
    case Errc::PreconditionViolation: return MCW_ERROR_PRECONDITION;
    case Errc::InvariantBreach: return MCW_ERROR_INVARIANT;
    case Errc::ShapeError: return MCW_ERROR_SHAPE;
    case Errc::InvalidArgument: return MCW_ERROR_INVALID_ARGUMENT;
  }
  return MCW_ERROR_INTERNAL;
}

template <typename F>
mcw_status guarded(F&& f) {
  try {
    t_last_error.clear();
    return f();
  } catch (const mcw::Error& e) {
    t_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return MCW_ERROR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

mcw_status invalid_argument(const char* what) {
  t_last_error = what;
  return MCW_ERROR_INVALID_ARGUMENT;
}

mcw::ExpansionGuards to_guards(const mcw_guards* g) {
  mcw::ExpansionGuards out;
  if (g) {
    if (g->max_terms > 0) out.max_terms = static_cast<std::size_t>(g->max_terms);
    if (g->max_total_degree > 0) out.max_total_degree = g->max_total_degree;
    if (g->max_prefix_length > 0) out.max_prefix_length = static_cast<std::size_t>(g->max_prefix_length);
  }
  return out;
}

const mcw::QuantifiedCircuit& require_quantified(const mcw_circuit* c) {
  if (!std::holds_alternative<mcw::QuantifiedCircuit>(c->value))
    mcw::raise(mcw::Errc::PreconditionViolation,
               "this operation needs a quantified circuit (a \"prefix\" field)");
  return std::get<mcw::QuantifiedCircuit>(c->value);
}

const mcw::Circuit& require_plainlike(const mcw_circuit* c) {
  if (!std::holds_alternative<mcw::Circuit>(c->value))
    mcw::raise(mcw::Errc::PreconditionViolation, "this operation needs a non-quantified circuit");
  return std::get<mcw::Circuit>(c->value);
}

}  // namespace

extern "C" {

void mcw_guards_default(mcw_guards* out) {
  if (!out) return;
  mcw::ExpansionGuards g;
  out->max_terms = static_cast<long>(g.max_terms);
  out->max_total_degree = g.max_total_degree;
  out->max_prefix_length = static_cast<long>(g.max_prefix_length);
}

const char* mcw_status_name(mcw_status s) {
  switch (s) {
    case MCW_OK: return "ok";
    case MCW_ERROR_PARSE: return "parse-error";
    case MCW_ERROR_VALIDATION: return "validation-error";
    case MCW_ERROR_OVERFLOW: return "expansion-overflow";
    case MCW_ERROR_TOO_LARGE: return "too-large";
    case MCW_ERROR_PRECONDITION: return "precondition-violation";
    case MCW_ERROR_DIVISION_BY_ZERO: return "division-by-zero";
    case MCW_ERROR_MISSING_ASSIGNMENT: return "missing-assignment";
    case MCW_ERROR_SHAPE: return "shape-error";
    case MCW_ERROR_INVARIANT: return "invariant-breach";
    case MCW_ERROR_INVALID_ARGUMENT: return "invalid-argument";
    case MCW_ERROR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

const char* mcw_last_error(void) { return t_last_error.c_str(); }

void mcw_string_free(char* s) { std::free(s); }

mcw_status mcw_circuit_parse(const char* json, mcw_circuit** out) {
  if (!json || !out) return invalid_argument("null argument");
  return guarded([&] {
    *out = new mcw_circuit{mcw::parse_circuit_json(json)};
    return MCW_OK;
  });
}

mcw_status mcw_circuit_to_json(const mcw_circuit* c, char** json_out) {
  if (!c || !json_out) return invalid_argument("null argument");
  return guarded([&] {
    std::string text = std::visit([](const auto& v) { return mcw::circuit_to_json(v); }, c->value);
    *json_out = dup_string(text);
    return MCW_OK;
  });
}

void mcw_circuit_free(mcw_circuit* c) { delete c; }

mcw_status mcw_polynomial_parse(const char* json, mcw_polynomial** out) {
  if (!json || !out) return invalid_argument("null argument");
  return guarded([&] {
    *out = new mcw_polynomial{mcw::parse_polynomial_json(json)};
    return MCW_OK;
  });
}

mcw_status mcw_polynomial_to_json(const mcw_polynomial* p, char** json_out) {
  if (!p || !json_out) return invalid_argument("null argument");
  return guarded([&] {
    *json_out = dup_string(mcw::polynomial_to_json(p->value));
    return MCW_OK;
  });
}

void mcw_polynomial_free(mcw_polynomial* p) { delete p; }

mcw_status mcw_abp_parse(const char* json, mcw_abp** out) {
  if (!json || !out) return invalid_argument("null argument");
  return guarded([&] {
    *out = new mcw_abp{mcw::parse_abp_json(json)};
    return MCW_OK;
  });
}

mcw_status mcw_abp_to_json(const mcw_abp* a, char** json_out) {
  if (!a || !json_out) return invalid_argument("null argument");
  return guarded([&] {
    *json_out = dup_string(mcw::abp_to_json(a->value));
    return MCW_OK;
  });
}

void mcw_abp_free(mcw_abp* a) { delete a; }

int mcw_circuit_is_quantified(const mcw_circuit* c) {
  return c && std::holds_alternative<mcw::QuantifiedCircuit>(c->value) ? 1 : 0;
}

long mcw_circuit_size(const mcw_circuit* c) {
  if (!c) return -1;
  if (auto* qc = std::get_if<mcw::QuantifiedCircuit>(&c->value))
    return static_cast<long>(mcw::quantified_size(*qc));
  return static_cast<long>(mcw::circuit_size(std::get<mcw::Circuit>(c->value)));
}

mcw_status mcw_circuit_validate(const mcw_circuit* c, char** report_json) {
  if (!c || !report_json) return invalid_argument("null argument");
  return guarded([&] {
    mcw::ValidationReport rep =
        std::visit([](const auto& v) { return mcw::validate(v); }, c->value);
    *report_json = dup_string(mcw::validation_report_to_json(rep));
    return MCW_OK;
  });
}

mcw_status mcw_circuit_expand(const mcw_circuit* c, const mcw_guards* guards, char** json_out) {
  if (!c || !json_out) return invalid_argument("null argument");
  return guarded([&] {
    auto g = to_guards(guards);
    std::vector<mcw::Polynomial> polys;
    if (auto* qc = std::get_if<mcw::QuantifiedCircuit>(&c->value)) {
      mcw::require_valid(*qc);
      polys.push_back(mcw::expand_quantified(*qc, g));
    } else {
      const auto& plain = std::get<mcw::Circuit>(c->value);
      mcw::require_valid(plain);
      polys = mcw::expand(plain, g);
    }
    *json_out = dup_string(mcw::polynomials_to_json(polys));
    return MCW_OK;
  });
}

mcw_status mcw_circuit_eval(const mcw_circuit* c, const char* assignment_json,
                            char** values_json) {
  if (!c || !assignment_json || !values_json) return invalid_argument("null argument");
  return guarded([&] {
    const mcw::Circuit* plain = std::get_if<mcw::Circuit>(&c->value);
    if (!plain)
      mcw::raise(mcw::Errc::PreconditionViolation,
                 "eval works on non-quantified circuits; expand quantified ones instead");
    mcw::require_valid(*plain);
    auto assignment = mcw::parse_assignment_json(assignment_json, *plain->universe);
    *values_json = dup_string(mcw::values_to_json(mcw::evaluate(*plain, assignment)));
    return MCW_OK;
  });
}

mcw_status mcw_lower_to_projections(const mcw_circuit* c, mcw_circuit** out) {
  if (!c || !out) return invalid_argument("null argument");
  return guarded([&] {
    const auto& plain = require_plainlike(c);
    mcw::require_valid(plain);
    *out = new mcw_circuit{mcw::lower_to_projections(plain)};
    return MCW_OK;
  });
}

mcw_status mcw_extract_hom_component(const mcw_circuit* c, long k, mcw_circuit** out,
                                     char** stats_json) {
  if (!c || !out) return invalid_argument("null argument");
  return guarded([&] {
    const auto& plain = require_plainlike(c);
    mcw::require_valid(plain);
    mcw::HomExtractStats st;
    *out = new mcw_circuit{mcw::extract_hom_circuit(plain, k, &st)};
    if (stats_json) *stats_json = dup_string(mcw::hom_stats_to_json(st));
    return MCW_OK;
  });
}

mcw_status mcw_expsum_from_homogeneous(const mcw_circuit* qc, const mcw_guards* guards,
                                       char** expsum_json) {
  if (!qc || !expsum_json) return invalid_argument("null argument");
  return guarded([&] {
    mcw::ExpSum es = mcw::homogeneous_quantified_to_expsum(require_quantified(qc), to_guards(guards));
    *expsum_json = dup_string(mcw::expsum_to_json(es));
    return MCW_OK;
  });
}

mcw_status mcw_expsum_trivial(const mcw_circuit* qc, const mcw_guards* guards,
                              char** expsum_json) {
  if (!qc || !expsum_json) return invalid_argument("null argument");
  return guarded([&] {
    mcw::ExpSum es = mcw::trivial_expsum(require_quantified(qc), to_guards(guards));
    *expsum_json = dup_string(mcw::expsum_to_json(es));
    return MCW_OK;
  });
}

mcw_status mcw_expsum_pruned(const mcw_circuit* qc, const mcw_guards* guards,
                             char** pruned_json) {
  if (!qc || !pruned_json) return invalid_argument("null argument");
  return guarded([&] {
    mcw::PrunedExpSum pr = mcw::pruned_expsum(require_quantified(qc), to_guards(guards));
    *pruned_json = dup_string(mcw::pruned_to_json(pr));
    return MCW_OK;
  });
}

mcw_status mcw_perm_projection_circuit(int n, mcw_circuit** out) {
  if (!out) return invalid_argument("null argument");
  return guarded([&] {
    *out = new mcw_circuit{mcw::build_perm_projection_circuit(n)};
    return MCW_OK;
  });
}

mcw_status mcw_permanent_polynomial(int n, mcw_polynomial** out) {
  if (!out) return invalid_argument("null argument");
  return guarded([&] {
    *out = new mcw_polynomial{mcw::permanent_oracle(n)};
    return MCW_OK;
  });
}

mcw_status mcw_support_preservation_report(const mcw_circuit* qc, const mcw_guards* guards,
                                           char** report_json) {
  if (!qc || !report_json) return invalid_argument("null argument");
  return guarded([&] {
    auto rep = mcw::support_preservation_check(require_quantified(qc), to_guards(guards));
    *report_json = dup_string(mcw::support_report_to_json(rep));
    return MCW_OK;
  });
}

mcw_status mcw_abp_expand(const mcw_abp* a, const mcw_guards* guards, char** poly_json) {
  if (!a || !poly_json) return invalid_argument("null argument");
  return guarded([&] {
    *poly_json = dup_string(mcw::polynomial_to_json(mcw::abp_expand(a->value, to_guards(guards))));
    return MCW_OK;
  });
}

mcw_status mcw_abp_expsum(const mcw_abp* a, long degree_bound, const mcw_guards* guards,
                          char** expsum_json) {
  if (!a || !expsum_json) return invalid_argument("null argument");
  return guarded([&] {
    mcw::ExpSum es = degree_bound < 0
                         ? mcw::abp_to_expsum(a->value, to_guards(guards))
                         : mcw::abp_to_expsum(a->value, degree_bound, to_guards(guards));
    *expsum_json = dup_string(mcw::expsum_to_json(es));
    return MCW_OK;
  });
}

mcw_status mcw_abp_length_check(const mcw_abp* a, const mcw_guards* guards, char** report_json) {
  if (!a || !report_json) return invalid_argument("null argument");
  return guarded([&] {
    auto rep = mcw::abp_length_bound_check(a->value, to_guards(guards));
    *report_json = dup_string(mcw::abp_length_report_to_json(rep));
    return MCW_OK;
  });
}

mcw_status mcw_shadow_search(const mcw_polynomial* p, long entry_bound, long budget, long samples,
                             unsigned long long seed, char** report_json) {
  if (!p || !report_json) return invalid_argument("null argument");
  return guarded([&] {
    mcw::ShadowSearchOptions opt;
    if (entry_bound > 0) opt.entry_bound = entry_bound;
    if (budget > 0) opt.budget = budget;
    opt.samples = samples > 0 ? samples : 0;
    opt.seed = seed;
    auto rep = mcw::shadow_complexity_search(p->value, opt);
    *report_json = dup_string(mcw::shadow_report_to_json(rep));
    return MCW_OK;
  });
}

mcw_status mcw_transparency_verdict(const mcw_polynomial* p, const char* witness_matrix_json,
                                    long entry_bound, long budget, char** report_json) {
  if (!p || !report_json) return invalid_argument("null argument");
  return guarded([&] {
    mcw::ShadowSearchOptions opt;
    if (entry_bound > 0) opt.entry_bound = entry_bound;
    if (budget > 0) opt.budget = budget;
    std::optional<mcw::ShadowMatrix> witness;
    if (witness_matrix_json) witness = mcw::parse_matrix_json(witness_matrix_json);
    auto rep = mcw::is_transparent(p->value, witness, opt);
    *report_json = dup_string(mcw::shadow_report_to_json(rep));
    return MCW_OK;
  });
}

mcw_status mcw_shadow_vertex_count(const mcw_polynomial* p, const char* matrix_json,
                                   long* count_out) {
  if (!p || !matrix_json || !count_out) return invalid_argument("null argument");
  return guarded([&] {
    *count_out = mcw::shadow_vertex_count(p->value, mcw::parse_matrix_json(matrix_json));
    return MCW_OK;
  });
}

mcw_status mcw_shadow_svg(const mcw_polynomial* p, const char* matrix_json, char** svg_out) {
  if (!p || !svg_out) return invalid_argument("null argument");
  return guarded([&] {
    mcw::ShadowReport rep;
    if (matrix_json) {
      auto m = mcw::parse_matrix_json(matrix_json);
      rep = mcw::is_transparent(p->value, m, {});
    } else {
      rep = mcw::shadow_complexity_search(p->value, {});
    }
    *svg_out = dup_string(mcw::shadow_svg(rep));
    return MCW_OK;
  });
}

mcw_status mcw_selftest(unsigned long long seed, char** report_text) {
  if (!report_text) return invalid_argument("null argument");
  return guarded([&] {
    auto results = mcw::run_acceptance(seed);
    std::ostringstream os;
    bool all = mcw::print_acceptance(results, os);
    *report_text = dup_string(os.str());
    if (!all) {
      t_last_error = "self test failed";
      return MCW_ERROR_INVARIANT;
    }
    return MCW_OK;
  });
}

}  // extern "C"
