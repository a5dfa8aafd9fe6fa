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

#ifndef MCW_JSON_IO_HPP
#define MCW_JSON_IO_HPP

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "mcw/abp.hpp"
#include "mcw/circuit.hpp"
#include "mcw/geometry.hpp"
#include "mcw/polynomial.hpp"
#include "mcw/transforms.hpp"

namespace mcw {

// Polynomial files: {"laurent": bool, "terms": [{"coeff": "p/q", "exps": {"x1": 2}}]}
// The universe is reconstructed from the variable names in sorted order, and
// output is canonical: terms ordered by name-lexicographic exponent
// comparison, exponent keys in name order.
Polynomial parse_polynomial_json(const std::string& text);
std::string polynomial_to_json(const Polynomial& p);
std::string polynomials_to_json(const std::vector<Polynomial>& ps);

// Circuit files; "prefix" present only for quantified circuits.
using AnyCircuit = std::variant<Circuit, QuantifiedCircuit>;
AnyCircuit parse_circuit_json(const std::string& text);
std::string circuit_to_json(const Circuit& c);
std::string circuit_to_json(const QuantifiedCircuit& qc);
/// Exponential sums serialize as quantified circuits with an all-sum prefix.
std::string expsum_to_json(const ExpSum& es);

// ABP files: {"r": 2, "s": "00", "t": "11", "ell": 3, "B": <circuit>}
SuccinctAbp parse_abp_json(const std::string& text);
std::string abp_to_json(const SuccinctAbp& abp);

// [[m11, ..., m1n], [m21, ..., m2n]]
ShadowMatrix parse_matrix_json(const std::string& text);
// {"x1": "2", "x2": "1/3"}
std::map<VarId, Rational> parse_assignment_json(const std::string& text, const Universe& u);

std::string values_to_json(const std::vector<Rational>& values);
std::string validation_report_to_json(const ValidationReport& rep);
std::string shadow_report_to_json(const ShadowReport& rep);
std::string support_report_to_json(const SupportPreservationReport& rep);
std::string abp_length_report_to_json(const AbpLengthReport& rep);
std::string pruned_to_json(const PrunedExpSum& pr);
std::string hom_stats_to_json(const HomExtractStats& st);

/// Plot of the projected support with hull vertices marked.
std::string shadow_svg(const ShadowReport& rep);

}  // namespace mcw

#endif
