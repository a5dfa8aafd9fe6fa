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

#include "mcw/json_io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mcw/error.hpp"

namespace mcw {

using Json = nlohmann::ordered_json;

namespace {

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    raise(Errc::ParseError, e.what());
  }
}

const Json& field(const Json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end())
    raise(Errc::ParseError, std::string("missing field '") + name + "'");
  return *it;
}

std::string get_string(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_string()) raise(Errc::ParseError, std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

std::int64_t get_int(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer())
    raise(Errc::ParseError, std::string("field '") + name + "' must be an integer");
  return v.get<std::int64_t>();
}

bool get_bool_or(const Json& j, const char* name, bool fallback) {
  auto it = j.find(name);
  if (it == j.end()) return fallback;
  if (!it->is_boolean()) raise(Errc::ParseError, std::string("field '") + name + "' must be a boolean");
  return it->get<bool>();
}

std::vector<std::string> get_string_array(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_array()) raise(Errc::ParseError, std::string("field '") + name + "' must be an array");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) raise(Errc::ParseError, std::string("entries of '") + name + "' must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

// name-keyed term, used for canonical (universe-independent) ordering
using NamedTerm = std::vector<std::pair<std::string, std::int64_t>>;

NamedTerm named_term(const Universe& u, const ExponentVector& ev) {
  NamedTerm t;
  for (const auto& [var, exp] : ev.entries()) t.emplace_back(u.name(var), exp);
  std::sort(t.begin(), t.end());
  return t;
}

// dense lexicographic comparison over the merged name axis
bool named_term_less(const NamedTerm& a, const NamedTerm& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (i < a.size() && j < b.size()) {
      if (a[i].first == b[j].first) {
        if (a[i].second != b[j].second) return a[i].second < b[j].second;
        ++i, ++j;
      } else if (a[i].first < b[j].first) {
        return !(a[i].second > 0);
      } else {
        return b[j].second > 0;
      }
    } else if (i < a.size()) {
      return !(a[i].second > 0);
    } else {
      return b[j].second > 0;
    }
  }
  return false;
}

}  // namespace

Polynomial parse_polynomial_json(const std::string& text) {
  Json j = parse_text(text);
  if (!j.is_object()) raise(Errc::ParseError, "polynomial file must be a JSON object");
  bool laurent = get_bool_or(j, "laurent", false);
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) raise(Errc::ParseError, "'terms' must be an array");
  std::set<std::string> names;
  for (const auto& t : terms) {
    const Json& exps = field(t, "exps");
    if (!exps.is_object()) raise(Errc::ParseError, "'exps' must be an object");
    for (const auto& [name, e] : exps.items()) names.insert(name);
  }
  auto u = Universe::make(std::vector<std::string>(names.begin(), names.end()), {});
  Polynomial p = Polynomial::zero(u, laurent);
  for (const auto& t : terms) {
    Rational coeff = Rational::from_string(get_string(t, "coeff"));
    std::vector<ExponentVector::Entry> entries;
    for (const auto& [name, e] : field(t, "exps").items()) {
      if (!e.is_number_integer()) raise(Errc::ParseError, "exponents must be integers");
      std::int64_t exp = e.get<std::int64_t>();
      if (exp < 0 && !laurent)
        raise(Errc::ParseError, "negative exponent requires \"laurent\": true");
      entries.emplace_back(*u->find(name), exp);
    }
    p.add_term(ExponentVector::from_entries(std::move(entries)), coeff);
  }
  return p;
}

namespace {

Json polynomial_to_json_value(const Polynomial& p) {
  const Universe& u = *p.universe();
  std::vector<std::pair<NamedTerm, Rational>> terms;
  for (const auto& [m, c] : p.terms()) terms.emplace_back(named_term(u, m), c);
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return named_term_less(a.first, b.first); });
  Json out;
  out["laurent"] = p.laurent();
  out["terms"] = Json::array();
  for (const auto& [t, c] : terms) {
    Json jt;
    jt["coeff"] = c.to_string();
    Json exps = Json::object();
    for (const auto& [name, exp] : t) exps[name] = exp;
    jt["exps"] = std::move(exps);
    out["terms"].push_back(std::move(jt));
  }
  return out;
}

}  // namespace

std::string polynomial_to_json(const Polynomial& p) {
  return polynomial_to_json_value(p).dump(2);
}

std::string polynomials_to_json(const std::vector<Polynomial>& ps) {
  Json arr = Json::array();
  for (const auto& p : ps) arr.push_back(polynomial_to_json_value(p));
  return arr.dump(2);
}

// --- circuits -----------------------------------------------------------------

namespace {

Circuit parse_circuit_object(const Json& j) {
  auto true_vars = get_string_array(j, "true_vars");
  auto aux_vars = get_string_array(j, "aux_vars");
  UniversePtr u;
  try {
    u = Universe::make(true_vars, aux_vars);
  } catch (const Error& e) {
    raise(Errc::ParseError, e.what());
  }
  Circuit c;
  c.universe = u;
  c.monotone_flag = get_bool_or(j, "monotone", true);
  c.high_powered_flag = get_bool_or(j, "high_powered", false);

  auto var_id = [&](const Json& g, const char* key) {
    std::string name = get_string(g, key);
    auto id = u->find(name);
    if (!id) raise(Errc::ParseError, "unknown variable '" + name + "'");
    return *id;
  };

  const Json& gates = field(j, "gates");
  if (!gates.is_array()) raise(Errc::ParseError, "'gates' must be an array");
  GateId index = 0;
  for (const auto& g : gates) {
    if (get_int(g, "id") != index)
      raise(Errc::ParseError, "gate ids must be dense 0..n-1 in order (gate " +
                                  std::to_string(index) + ")");
    std::string kind = get_string(g, "kind");
    if (kind == "const") {
      c.gates.push_back(Gate::constant(Rational::from_string(get_string(g, "value"))));
    } else if (kind == "var") {
      c.gates.push_back(Gate::variable(var_id(g, "name")));
    } else if (kind == "laurent") {
      std::vector<ExponentVector::Entry> entries;
      for (const auto& [name, e] : field(g, "exps").items()) {
        auto id = u->find(name);
        if (!id) raise(Errc::ParseError, "unknown variable '" + name + "' in laurent leaf");
        if (!e.is_number_integer()) raise(Errc::ParseError, "laurent exponents must be integers");
        entries.emplace_back(*id, e.get<std::int64_t>());
      }
      c.gates.push_back(Gate::laurent(Rational::from_string(get_string(g, "coeff")),
                                      ExponentVector::from_entries(std::move(entries))));
    } else if (kind == "add" || kind == "mul") {
      std::int64_t l = get_int(g, "l"), r = get_int(g, "r");
      if (l < 0 || r < 0) raise(Errc::ParseError, "negative gate reference");
      c.gates.push_back(kind == "add" ? Gate::add(static_cast<GateId>(l), static_cast<GateId>(r))
                                      : Gate::mul(static_cast<GateId>(l), static_cast<GateId>(r)));
    } else if (kind == "project") {
      std::int64_t bit = get_int(g, "bit");
      std::int64_t child = get_int(g, "child");
      if (bit != 0 && bit != 1) raise(Errc::ParseError, "projection bit must be 0 or 1");
      if (child < 0) raise(Errc::ParseError, "negative gate reference");
      c.gates.push_back(
          Gate::project(var_id(g, "var"), static_cast<int>(bit), static_cast<GateId>(child)));
    } else if (kind == "sum" || kind == "prod") {
      std::int64_t child = get_int(g, "child");
      if (child < 0) raise(Errc::ParseError, "negative gate reference");
      c.gates.push_back(kind == "sum"
                            ? Gate::sum(var_id(g, "var"), static_cast<GateId>(child))
                            : Gate::prod(var_id(g, "var"), static_cast<GateId>(child)));
    } else {
      raise(Errc::ParseError, "unknown gate kind '" + kind + "'");
    }
    ++index;
  }
  const Json& outs = field(j, "outputs");
  if (!outs.is_array()) raise(Errc::ParseError, "'outputs' must be an array");
  for (const auto& o : outs) {
    if (!o.is_number_integer() || o.get<std::int64_t>() < 0)
      raise(Errc::ParseError, "outputs must be non-negative gate ids");
    c.outputs.push_back(static_cast<GateId>(o.get<std::int64_t>()));
  }
  return c;
}

Json gate_to_json(const Circuit& c, GateId i) {
  const Gate& g = c.gates[i];
  Json out;
  out["id"] = i;
  out["kind"] = gate_kind_name(g.kind);
  switch (g.kind) {
    case GateKind::Const:
      out["value"] = g.value.to_string();
      break;
    case GateKind::Var:
      out["name"] = c.universe->name(g.var);
      break;
    case GateKind::LaurentLeaf: {
      out["coeff"] = g.value.to_string();
      Json exps = Json::object();
      for (const auto& [var, exp] : g.exps.entries()) exps[c.universe->name(var)] = exp;
      out["exps"] = std::move(exps);
      break;
    }
    case GateKind::Add:
    case GateKind::Mul:
      out["l"] = g.a;
      out["r"] = g.b;
      break;
    case GateKind::Project:
      out["var"] = c.universe->name(g.var);
      out["bit"] = static_cast<int>(g.bit);
      out["child"] = g.a;
      break;
    case GateKind::Sum:
    case GateKind::Prod:
      out["var"] = c.universe->name(g.var);
      out["child"] = g.a;
      break;
  }
  return out;
}

Json circuit_to_json_value(const Circuit& c) {
  Json out;
  out["true_vars"] = c.universe->true_names();
  out["aux_vars"] = c.universe->aux_names();
  out["monotone"] = c.monotone_flag;
  out["high_powered"] = c.high_powered_flag;
  out["gates"] = Json::array();
  for (GateId i = 0; i < c.gates.size(); ++i) out["gates"].push_back(gate_to_json(c, i));
  out["outputs"] = c.outputs;
  return out;
}

}  // namespace

AnyCircuit parse_circuit_json(const std::string& text) {
  Json j = parse_text(text);
  if (!j.is_object()) raise(Errc::ParseError, "circuit file must be a JSON object");
  Circuit c = parse_circuit_object(j);
  auto it = j.find("prefix");
  if (it == j.end()) return c;
  if (!it->is_array()) raise(Errc::ParseError, "'prefix' must be an array");
  QuantifiedCircuit qc;
  qc.inner = std::move(c);
  for (const auto& e : *it) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      raise(Errc::ParseError, "prefix entries must be [\"sum\"|\"prod\", \"var\"] pairs");
    std::string q = e[0].get<std::string>();
    if (q != "sum" && q != "prod")
      raise(Errc::ParseError, "prefix quantifier must be \"sum\" or \"prod\"");
    auto id = qc.inner.universe->find(e[1].get<std::string>());
    if (!id) raise(Errc::ParseError, "unknown prefix variable '" + e[1].get<std::string>() + "'");
    qc.prefix.emplace_back(q == "sum" ? Quantifier::Sum : Quantifier::Prod, *id);
  }
  return qc;
}

std::string circuit_to_json(const Circuit& c) { return circuit_to_json_value(c).dump(2); }

std::string circuit_to_json(const QuantifiedCircuit& qc) {
  Json out = circuit_to_json_value(qc.inner);
  Json prefix = Json::array();
  for (const auto& [q, z] : qc.prefix) {
    Json e = Json::array();
    e.push_back(q == Quantifier::Sum ? "sum" : "prod");
    e.push_back(qc.inner.universe->name(z));
    prefix.push_back(std::move(e));
  }
  out["prefix"] = std::move(prefix);
  return out.dump(2);
}

std::string expsum_to_json(const ExpSum& es) { return circuit_to_json(es.as_quantified()); }

// --- ABPs ----------------------------------------------------------------------

SuccinctAbp parse_abp_json(const std::string& text) {
  Json j = parse_text(text);
  if (!j.is_object()) raise(Errc::ParseError, "ABP file must be a JSON object");
  SuccinctAbp abp;
  abp.r = static_cast<int>(get_int(j, "r"));
  abp.ell = static_cast<long>(get_int(j, "ell"));
  auto bits = [&](const char* key) {
    std::string s = get_string(j, key);
    if (static_cast<int>(s.size()) != abp.r)
      raise(Errc::ParseError, std::string("label '") + key + "' must have exactly r bits");
    std::vector<int> v;
    for (char ch : s) {
      if (ch != '0' && ch != '1')
        raise(Errc::ParseError, std::string("label '") + key + "' must be a 0/1 string");
      v.push_back(ch == '1' ? 1 : 0);
    }
    return v;
  };
  abp.s_label = bits("s");
  abp.t_label = bits("t");
  const Json& b = field(j, "B");
  if (!b.is_object()) raise(Errc::ParseError, "'B' must be a circuit object");
  AnyCircuit inner = parse_circuit_json(b.dump());
  if (!std::holds_alternative<Circuit>(inner))
    raise(Errc::ParseError, "the encoding circuit must not be quantified");
  abp.encoding = std::get<Circuit>(std::move(inner));
  return abp;
}

std::string abp_to_json(const SuccinctAbp& abp) {
  Json out;
  out["r"] = abp.r;
  std::string s, t;
  for (int b : abp.s_label) s += b ? '1' : '0';
  for (int b : abp.t_label) t += b ? '1' : '0';
  out["s"] = s;
  out["t"] = t;
  out["ell"] = abp.ell;
  out["B"] = Json::parse(circuit_to_json(abp.encoding));
  return out.dump(2);
}

// --- matrices, assignments, values ----------------------------------------------

ShadowMatrix parse_matrix_json(const std::string& text) {
  Json j = parse_text(text);
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() ||
      j[0].size() != j[1].size())
    raise(Errc::ParseError, "matrix must be [[..],[..]] with equal row lengths");
  ShadowMatrix m = ShadowMatrix::zero(j[0].size());
  for (int row = 0; row < 2; ++row)
    for (std::size_t i = 0; i < j[row].size(); ++i) {
      if (!j[row][i].is_number_integer())
        raise(Errc::ParseError, "matrix entries must be integers");
      m.rows[row][i] = j[row][i].get<std::int64_t>();
    }
  return m;
}

std::map<VarId, Rational> parse_assignment_json(const std::string& text, const Universe& u) {
  Json j = parse_text(text);
  if (!j.is_object()) raise(Errc::ParseError, "assignment must be a JSON object");
  std::map<VarId, Rational> out;
  for (const auto& [name, v] : j.items()) {
    auto id = u.find(name);
    if (!id) raise(Errc::ParseError, "assignment names unknown variable '" + name + "'");
    if (v.is_string())
      out[*id] = Rational::from_string(v.get<std::string>());
    else if (v.is_number_integer())
      out[*id] = Rational(v.get<long>());
    else
      raise(Errc::ParseError, "assignment values must be rational strings or integers");
  }
  return out;
}

std::string values_to_json(const std::vector<Rational>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(v.to_string());
  return arr.dump(2);
}

// --- reports ---------------------------------------------------------------------

std::string validation_report_to_json(const ValidationReport& rep) {
  Json out;
  out["valid"] = rep.ok();
  out["violations"] = Json::array();
  for (const auto& v : rep.violations) {
    Json e;
    e["code"] = v.code;
    e["message"] = v.message;
    if (v.gate) e["gate"] = *v.gate;
    out["violations"].push_back(std::move(e));
  }
  return out.dump(2);
}

std::string shadow_report_to_json(const ShadowReport& rep) {
  Json out;
  out["verdict"] = verdict_name(rep.verdict);
  out["support_size"] = rep.support_size;
  out["vertex_count"] = rep.vertex_count;
  out["witness"] = Json::array({rep.witness.rows[0], rep.witness.rows[1]});
  Json pts = Json::array();
  for (const auto& p : rep.projected.points) pts.push_back(p);
  out["projected"] = std::move(pts);
  out["matrices_tried"] = rep.matrices_tried;
  out["exhaustive"] = rep.exhaustive;
  out["dependency_certificate"] =
      rep.dependency_certificate ? Json(*rep.dependency_certificate) : Json(nullptr);
  return out.dump(2);
}

std::string support_report_to_json(const SupportPreservationReport& rep) {
  Json out;
  out["supports_equal"] = rep.supports_equal;
  out["degenerate_zero"] = rep.degenerate_zero;
  out["support_size"] = rep.support_size;
  switch (rep.product_decomposable) {
    case SupportPreservationReport::Decomposable::No: out["product_decomposable"] = "no"; break;
    case SupportPreservationReport::Decomposable::Yes: out["product_decomposable"] = "yes"; break;
    case SupportPreservationReport::Decomposable::TooLarge:
      out["product_decomposable"] = "too-large";
      break;
  }
  out["lemma_consistent"] = rep.lemma_consistent;
  return out.dump(2);
}

std::string abp_length_report_to_json(const AbpLengthReport& rep) {
  Json out;
  out["ell"] = rep.ell;
  out["vacuous"] = rep.vacuous;
  out["deg_f"] = rep.deg_f;
  out["hypothesis_met"] = rep.hypothesis_met;
  out["hypothesis_note"] = rep.hypothesis_note;
  out["chain_degree"] = rep.chain_degree;
  out["bound_holds"] = rep.bound_holds;
  return out.dump(2);
}

std::string pruned_to_json(const PrunedExpSum& pr) {
  Json out;
  Json y1 = Json::array();
  for (VarId v : pr.y1) y1.push_back(pr.h.universe->name(v));
  out["Y1"] = std::move(y1);
  out["h"] = Json::parse(circuit_to_json(pr.h));
  Json table = Json::object();
  for (const auto& [bits, value] : pr.a_table) table[bits] = value.to_string();
  out["A_table"] = std::move(table);
  Json stats;
  stats["support_a"] = pr.support_a;
  stats["degree"] = pr.degree;
  stats["sum_prefix_vars"] = pr.sum_prefix_vars;
  stats["degenerate_zero"] = pr.degenerate_zero;
  out["stats"] = std::move(stats);
  return out.dump(2);
}

std::string hom_stats_to_json(const HomExtractStats& st) {
  Json out;
  out["input_size"] = st.input_size;
  out["output_size"] = st.output_size;
  out["k"] = st.k;
  return out.dump(2);
}

// --- SVG plot ---------------------------------------------------------------------

std::string shadow_svg(const ShadowReport& rep) {
  const auto& pts = rep.projected.points;
  std::int64_t min_x = 0, max_x = 1, min_y = 0, max_y = 1;
  if (!pts.empty()) {
    min_x = max_x = pts[0][0];
    min_y = max_y = pts[0][1];
    for (const auto& p : pts) {
      min_x = std::min(min_x, p[0]);
      max_x = std::max(max_x, p[0]);
      min_y = std::min(min_y, p[1]);
      max_y = std::max(max_y, p[1]);
    }
  }
  const double margin = 30.0, side = 400.0;
  double span_x = std::max<double>(1.0, static_cast<double>(max_x - min_x));
  double span_y = std::max<double>(1.0, static_cast<double>(max_y - min_y));
  auto sx = [&](std::int64_t x) {
    return margin + (static_cast<double>(x - min_x) / span_x) * (side - 2 * margin);
  };
  auto sy = [&](std::int64_t y) {
    return side - margin - (static_cast<double>(y - min_y) / span_y) * (side - 2 * margin);
  };
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" "
         "viewBox=\"0 0 400 400\">\n";
  svg << "  <rect width=\"400\" height=\"400\" fill=\"white\"/>\n";
  auto hull = pts.empty() ? std::vector<Point2>{} : hull_vertices_2d(rep.projected);
  if (hull.size() >= 2) {
    svg << "  <polygon points=\"";
    for (const auto& v : hull) svg << sx(v[0]) << "," << sy(v[1]) << " ";
    svg << "\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\"/>\n";
  }
  std::set<Point2> hull_set(hull.begin(), hull.end());
  for (const auto& p : pts) {
    bool on_hull = hull_set.count({p[0], p[1]}) > 0;
    svg << "  <circle cx=\"" << sx(p[0]) << "\" cy=\"" << sy(p[1]) << "\" r=\""
        << (on_hull ? 4 : 2.5) << "\" fill=\"" << (on_hull ? "crimson" : "black") << "\"/>\n";
  }
  svg << "  <text x=\"10\" y=\"390\" font-family=\"monospace\" font-size=\"12\">vertices "
      << rep.vertex_count << " / support " << rep.support_size << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace mcw
