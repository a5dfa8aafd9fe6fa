// Command-line front end for the mcw workbench. Talks to the core strictly
// through the C API in mcw.h; every command reads/writes the JSON schemas
// documented in the README.
//
// Exit codes: 0 success, 1 malformed input, 2 validation violations,
// 3 guard overflow / search too large, 4 other errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mcw.h"

namespace {

int exit_code_for(mcw_status s) {
  switch (s) {
    case MCW_OK: return 0;
    case MCW_ERROR_PARSE: return 1;
    case MCW_ERROR_VALIDATION: return 2;
    case MCW_ERROR_OVERFLOW:
    case MCW_ERROR_TOO_LARGE: return 3;
    default: return 4;
  }
}

int fail(mcw_status s) {
  std::cerr << "error (" << mcw_status_name(s) << "): " << mcw_last_error() << "\n";
  return exit_code_for(s);
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    std::exit(1);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { mcw_string_free(s); }
};

struct CircuitHandle {
  mcw_circuit* c = nullptr;
  ~CircuitHandle() { mcw_circuit_free(c); }
};

struct PolyHandle {
  mcw_polynomial* p = nullptr;
  ~PolyHandle() { mcw_polynomial_free(p); }
};

struct AbpHandle {
  mcw_abp* a = nullptr;
  ~AbpHandle() { mcw_abp_free(a); }
};

struct GlobalOptions {
  mcw_guards guards{};
  unsigned long long seed = 0;
};

int parse_circuit_arg(const std::string& path, CircuitHandle& h) {
  std::string text = read_input(path);
  mcw_status s = mcw_circuit_parse(text.c_str(), &h.c);
  if (s != MCW_OK) return fail(s);
  return 0;
}

int parse_poly_arg(const std::string& path, PolyHandle& h) {
  std::string text = read_input(path);
  mcw_status s = mcw_polynomial_parse(text.c_str(), &h.p);
  if (s != MCW_OK) return fail(s);
  return 0;
}

int parse_abp_arg(const std::string& path, AbpHandle& h) {
  std::string text = read_input(path);
  mcw_status s = mcw_abp_parse(text.c_str(), &h.a);
  if (s != MCW_OK) return fail(s);
  return 0;
}

// checks validity before semantic commands so invalid files exit with 2
int require_valid_circuit(const CircuitHandle& h) {
  OwnedString rep;
  mcw_status s = mcw_circuit_validate(h.c, &rep.s);
  if (s != MCW_OK) return fail(s);
  if (std::string(rep.s).find("\"valid\": true") == std::string::npos) {
    std::cout << rep.s << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for monotone algebraic circuits with projection, summation and "
               "production gates"};
  app.require_subcommand(1);

  GlobalOptions g;
  mcw_guards_default(&g.guards);
  app.add_option("--max-terms", g.guards.max_terms, "term-count guard for expansions");
  app.add_option("--max-degree", g.guards.max_total_degree, "total-degree guard for expansions");
  app.add_option("--max-prefix", g.guards.max_prefix_length, "quantifier prefix guard");
  app.add_option("--seed", g.seed, "seed for randomized searches and the self test");

  std::string in_path = "-";
  int ret = 0;

  auto* validate = app.add_subcommand("validate", "check a circuit file, report violations");
  validate->add_option("input", in_path, "circuit JSON (default stdin)");
  validate->callback([&] {
    CircuitHandle h;
    if ((ret = parse_circuit_arg(in_path, h))) return;
    OwnedString rep;
    mcw_status s = mcw_circuit_validate(h.c, &rep.s);
    if (s != MCW_OK) {
      ret = fail(s);
      return;
    }
    std::cout << rep.s << "\n";
    if (std::string(rep.s).find("\"valid\": true") == std::string::npos) ret = 2;
  });

  auto* expand = app.add_subcommand("expand", "expand a circuit to polynomials");
  expand->add_option("input", in_path, "circuit JSON (default stdin)");
  expand->callback([&] {
    CircuitHandle h;
    if ((ret = parse_circuit_arg(in_path, h))) return;
    if ((ret = require_valid_circuit(h))) return;
    OwnedString out;
    mcw_status s = mcw_circuit_expand(h.c, &g.guards, &out.s);
    if (s != MCW_OK) {
      ret = fail(s);
      return;
    }
    std::cout << out.s << "\n";
  });

  std::string at_json = "{}";
  auto* eval = app.add_subcommand("eval", "evaluate a circuit at a rational point");
  eval->add_option("input", in_path, "circuit JSON (default stdin)");
  eval->add_option("--at", at_json, "assignment object, e.g. {\"x1\":\"2\",\"x2\":\"1/3\"}")
      ->required();
  eval->callback([&] {
    CircuitHandle h;
    if ((ret = parse_circuit_arg(in_path, h))) return;
    if ((ret = require_valid_circuit(h))) return;
    OwnedString out;
    mcw_status s = mcw_circuit_eval(h.c, at_json.c_str(), &out.s);
    if (s != MCW_OK) {
      ret = fail(s);
      return;
    }
    std::cout << out.s << "\n";
  });

  auto* lower = app.add_subcommand("lower", "rewrite Sum/Prod gates as projection pairs");
  lower->add_option("input", in_path, "circuit JSON (default stdin)");
  lower->callback([&] {
    CircuitHandle h;
    if ((ret = parse_circuit_arg(in_path, h))) return;
    if ((ret = require_valid_circuit(h))) return;
    CircuitHandle out;
    mcw_status s = mcw_lower_to_projections(h.c, &out.c);
    if (s != MCW_OK) {
      ret = fail(s);
      return;
    }
    OwnedString text;
    if ((s = mcw_circuit_to_json(out.c, &text.s)) != MCW_OK) {
      ret = fail(s);
      return;
    }
    std::cout << text.s << "\n";
  });

  long hom_k = 0;
  bool hom_stats = false;
  auto* hom = app.add_subcommand("hom", "extract the degree-k homogeneous component circuit");
  hom->add_option("input", in_path, "circuit JSON (default stdin)");
  hom->add_option("--k", hom_k, "homogeneous degree")->required();
  hom->add_flag("--stats", hom_stats, "print size statistics to stderr");
  hom->callback([&] {
    CircuitHandle h;
    if ((ret = parse_circuit_arg(in_path, h))) return;
    if ((ret = require_valid_circuit(h))) return;
    CircuitHandle out;
    OwnedString stats;
    mcw_status s = mcw_extract_hom_component(h.c, hom_k, &out.c, &stats.s);
    if (s != MCW_OK) {
      ret = fail(s);
      return;
    }
    OwnedString text;
    if ((s = mcw_circuit_to_json(out.c, &text.s)) != MCW_OK) {
      ret = fail(s);
      return;
    }
    if (hom_stats) std::cerr << stats.s << "\n";
    std::cout << text.s << "\n";
  });

  auto add_expsum_command = [&](const char* name, const char* help,
                                mcw_status (*fn)(const mcw_circuit*, const mcw_guards*, char**)) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("input", in_path, "quantified circuit JSON (default stdin)");
    cmd->callback([&, fn] {
      CircuitHandle h;
      if ((ret = parse_circuit_arg(in_path, h))) return;
      if ((ret = require_valid_circuit(h))) return;
      OwnedString out;
      mcw_status s = fn(h.c, &g.guards, &out.s);
      if (s != MCW_OK) {
        ret = fail(s);
        return;
      }
      std::cout << out.s << "\n";
    });
  };
  add_expsum_command("expsum", "exponential sum for a homogeneous quantified circuit",
                     mcw_expsum_from_homogeneous);
  add_expsum_command("expsum-trivial", "direct exponential sum for any quantified circuit",
                     mcw_expsum_trivial);
  add_expsum_command("expsum-pruned", "pruned exponential sum with a materialized A-table",
                     mcw_expsum_pruned);

  int perm_n = 2;
  auto* perm = app.add_subcommand("perm-gen", "projection-gate circuit for the n x n permanent");
  perm->add_option("--n", perm_n, "matrix dimension")->required();
  perm->callback([&] {
    CircuitHandle out;
    mcw_status s = mcw_perm_projection_circuit(perm_n, &out.c);
    if (s != MCW_OK) {
      ret = fail(s);
      return;
    }
    OwnedString text;
    if ((s = mcw_circuit_to_json(out.c, &text.s)) != MCW_OK) {
      ret = fail(s);
      return;
    }
    std::cout << text.s << "\n";
  });

  auto* abp_expand = app.add_subcommand("abp-expand", "expand a succinct ABP to a polynomial");
  abp_expand->add_option("input", in_path, "ABP JSON (default stdin)");
  abp_expand->callback([&] {
    AbpHandle h;
    if ((ret = parse_abp_arg(in_path, h))) return;
    OwnedString out;
    mcw_status s = mcw_abp_expand(h.a, &g.guards, &out.s);
    if (s != MCW_OK) {
      ret = fail(s);
      return;
    }
    std::cout << out.s << "\n";
  });

  long abp_degree = -1;
  auto* abp_expsum = app.add_subcommand("abp-expsum", "weighted exponential sum for a succinct ABP");
  abp_expsum->add_option("input", in_path, "ABP JSON (default stdin)");
  abp_expsum->add_option("--degree", abp_degree, "degree bound (default: degree of the expansion)");
  abp_expsum->callback([&] {
    AbpHandle h;
    if ((ret = parse_abp_arg(in_path, h))) return;
    OwnedString out;
    mcw_status s = mcw_abp_expsum(h.a, abp_degree, &g.guards, &out.s);
    if (s != MCW_OK) {
      ret = fail(s);
      return;
    }
    std::cout << out.s << "\n";
  });

  auto* abp_check = app.add_subcommand("abp-check", "length-bound report for a succinct ABP");
  abp_check->add_option("input", in_path, "ABP JSON (default stdin)");
  abp_check->callback([&] {
    AbpHandle h;
    if ((ret = parse_abp_arg(in_path, h))) return;
    OwnedString out;
    mcw_status s = mcw_abp_length_check(h.a, &g.guards, &out.s);
    if (s != MCW_OK) {
      ret = fail(s);
      return;
    }
    std::cout << out.s << "\n";
  });

  long shadow_k = 2;
  long shadow_budget = 5000000;
  long shadow_samples = 0;
  std::string svg_path;
  auto* shadow = app.add_subcommand("shadow", "search planar shadows of the Newton polytope");
  shadow->add_option("input", in_path, "polynomial JSON (default stdin)");
  shadow->add_option("--k", shadow_k, "matrix entry bound K (entries in [-K, K])");
  shadow->add_option("--budget", shadow_budget, "exhaustive-search matrix budget");
  shadow->add_option("--samples", shadow_samples, "sampled mode with this many random matrices");
  shadow->add_option("--svg", svg_path, "write an SVG plot of the best projection");
  shadow->callback([&] {
    PolyHandle h;
    if ((ret = parse_poly_arg(in_path, h))) return;
    OwnedString out;
    mcw_status s = mcw_shadow_search(h.p, shadow_k, shadow_budget, shadow_samples, g.seed, &out.s);
    if (s != MCW_OK) {
      ret = fail(s);
      return;
    }
    std::cout << out.s << "\n";
    if (!svg_path.empty()) {
      // plot the projection under the witness the search just reported
      std::string witness = nlohmann::json::parse(out.s)["witness"].dump();
      OwnedString svg;
      if ((s = mcw_shadow_svg(h.p, witness.c_str(), &svg.s)) != MCW_OK) {
        ret = fail(s);
        return;
      }
      std::ofstream f(svg_path, std::ios::binary);
      f << svg.s;
    }
  });

  std::string witness_json;
  auto* transparent = app.add_subcommand("transparent", "transparency verdict for a polynomial");
  transparent->add_option("input", in_path, "polynomial JSON (default stdin)");
  transparent->add_option("--witness", witness_json, "2 x n integer matrix, e.g. [[1,0],[0,1]]");
  transparent->add_option("--k", shadow_k, "entry bound for the delegated search");
  transparent->add_option("--budget", shadow_budget, "search budget");
  transparent->callback([&] {
    PolyHandle h;
    if ((ret = parse_poly_arg(in_path, h))) return;
    OwnedString out;
    mcw_status s = mcw_transparency_verdict(
        h.p, witness_json.empty() ? nullptr : witness_json.c_str(), shadow_k, shadow_budget,
        &out.s);
    if (s != MCW_OK) {
      ret = fail(s);
      return;
    }
    std::cout << out.s << "\n";
  });

  auto* support = app.add_subcommand("support-check", "support-preservation report for a "
                                                      "quantified circuit");
  support->add_option("input", in_path, "quantified circuit JSON (default stdin)");
  support->callback([&] {
    CircuitHandle h;
    if ((ret = parse_circuit_arg(in_path, h))) return;
    if ((ret = require_valid_circuit(h))) return;
    OwnedString out;
    mcw_status s = mcw_support_preservation_report(h.c, &g.guards, &out.s);
    if (s != MCW_OK) {
      ret = fail(s);
      return;
    }
    std::cout << out.s << "\n";
  });

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  selftest->callback([&] {
    OwnedString out;
    mcw_status s = mcw_selftest(g.seed, &out.s);
    if (out.s) std::cout << out.s;
    if (s != MCW_OK) ret = (s == MCW_ERROR_INVARIANT) ? 4 : fail(s);
  });

  CLI11_PARSE(app, argc, argv);
  return ret;
}
