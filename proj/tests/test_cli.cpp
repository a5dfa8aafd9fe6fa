// End-to-end CLI checks: spawns the built binary (path in MCW_CLI) and
// inspects exit codes and output determinism.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

std::string cli_path() {
  const char* p = std::getenv("MCW_CLI");
  REQUIRE(p != nullptr);
  return p;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& stdin_text = "") {
  std::string in_file = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                        "/mcw_cli_in.json";
  {
    std::ofstream f(in_file, std::ios::binary);
    f << stdin_text;
  }
  std::string cmd = cli_path() + " " + args + " < " + in_file + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
  int status = pclose(pipe);
  res.exit_code = WEXITSTATUS(status);
  return res;
}

const char* kCircuit = R"({
  "true_vars": ["x", "y"],
  "aux_vars": [],
  "monotone": true,
  "high_powered": false,
  "gates": [
    {"id": 0, "kind": "var", "name": "x"},
    {"id": 1, "kind": "var", "name": "y"},
    {"id": 2, "kind": "mul", "l": 0, "r": 1},
    {"id": 3, "kind": "var", "name": "x"},
    {"id": 4, "kind": "add", "l": 2, "r": 3},
    {"id": 5, "kind": "add", "l": 4, "r": 1}
  ],
  "outputs": [5]
})";

}  // namespace

TEST_CASE("validate: clean circuit exits 0, violations exit 2") {
  RunResult ok = run("validate -", kCircuit);
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("\"valid\": true") != std::string::npos);

  std::string bad = kCircuit;
  // inject a negative constant into the monotone circuit
  bad.replace(bad.find("{\"id\": 0, \"kind\": \"var\", \"name\": \"x\"}"),
              std::string("{\"id\": 0, \"kind\": \"var\", \"name\": \"x\"}").size(),
              "{\"id\": 0, \"kind\": \"const\", \"value\": \"-1\"}");
  RunResult viol = run("validate -", bad);
  CHECK(viol.exit_code == 2);
  CHECK(viol.out.find("negative-constant") != std::string::npos);
}

TEST_CASE("malformed input exits 1 with a parse diagnostic") {
  RunResult res = run("expand -", "{ this is not json");
  CHECK(res.exit_code == 1);
}

TEST_CASE("unknown flags are rejected") {
  RunResult res = run("expand --no-such-flag -", kCircuit);
  CHECK(res.exit_code != 0);
}

TEST_CASE("perm-gen | expand pipeline produces the 6-term permanent") {
  RunResult circuit = run("perm-gen --n 3");
  REQUIRE(circuit.exit_code == 0);
  RunResult expanded = run("expand -", circuit.out);
  REQUIRE(expanded.exit_code == 0);
  // 6 monomials, all coefficient 1
  std::size_t count = 0, pos = 0;
  while ((pos = expanded.out.find("\"coeff\": \"1/1\"", pos)) != std::string::npos) {
    ++count;
    pos += 4;
  }
  CHECK(count == 6);
}

TEST_CASE("deterministic output byte for byte") {
  RunResult a = run("perm-gen --n 2");
  RunResult b = run("perm-gen --n 2");
  CHECK(a.out == b.out);
  RunResult s1 = run("--seed 7 shadow --k 1 --samples 50 -",
                     R"({"laurent": false, "terms": [{"coeff":"1","exps":{"a":1}},
                        {"coeff":"1","exps":{"b":1}}, {"coeff":"1","exps":{"a":1,"b":1}}]})");
  RunResult s2 = run("--seed 7 shadow --k 1 --samples 50 -",
                     R"({"laurent": false, "terms": [{"coeff":"1","exps":{"a":1}},
                        {"coeff":"1","exps":{"b":1}}, {"coeff":"1","exps":{"a":1,"b":1}}]})");
  CHECK(s1.exit_code == 0);
  CHECK(s1.out == s2.out);
}

TEST_CASE("eval command") {
  RunResult res = run("eval --at '{\"x\":\"2\",\"y\":\"3\"}' -", kCircuit);
  REQUIRE(res.exit_code == 0);
  CHECK(res.out.find("\"11/1\"") != std::string::npos);  // 2*3 + 2 + 3
}

TEST_CASE("guard overflow exits 3") {
  RunResult circuit = run("perm-gen --n 4");
  REQUIRE(circuit.exit_code == 0);
  RunResult res = run("--max-terms 5 expand -", circuit.out);
  CHECK(res.exit_code == 3);
}

TEST_CASE("shadow verdicts and svg output") {
  std::string poly = R"({"laurent": false, "terms": [
    {"coeff": "1", "exps": {}},
    {"coeff": "1", "exps": {"x": 1, "y": 1}},
    {"coeff": "1", "exps": {"x": 2, "y": 2}}]})";
  RunResult res = run("transparent -", poly);
  REQUIRE(res.exit_code == 0);
  CHECK(res.out.find("NOT_TRANSPARENT_EXHAUSTIVE") != std::string::npos);

  std::string svg_file = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                         "/mcw_cli_plot.svg";
  RunResult shadow = run("shadow --k 1 --svg " + svg_file + " -", poly);
  REQUIRE(shadow.exit_code == 0);
  std::ifstream f(svg_file);
  std::string content((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(content.find("<svg") != std::string::npos);
}

TEST_CASE("expsum commands run end to end") {
  std::string qc = R"({
    "true_vars": ["x"], "aux_vars": ["y", "z"], "monotone": true, "high_powered": false,
    "gates": [
      {"id": 0, "kind": "var", "name": "y"},
      {"id": 1, "kind": "var", "name": "x"},
      {"id": 2, "kind": "mul", "l": 0, "r": 1}
    ],
    "outputs": [2],
    "prefix": [["prod", "z"], ["sum", "y"]]
  })";
  CHECK(run("expsum-trivial -", qc).exit_code == 0);
  CHECK(run("expsum -", qc).exit_code == 0);
  RunResult pruned = run("expsum-pruned -", qc);
  CHECK(pruned.exit_code == 0);
  CHECK(pruned.out.find("\"A_table\"") != std::string::npos);
  CHECK(run("support-check -", qc).exit_code == 0);
}

TEST_CASE("abp commands run end to end") {
  std::string abp = R"({
    "r": 1, "s": "0", "t": "1", "ell": 2,
    "B": {"true_vars": ["u1", "v1", "x"], "aux_vars": [], "monotone": true,
          "high_powered": false,
          "gates": [{"id": 0, "kind": "var", "name": "x"}], "outputs": [0]}
  })";
  RunResult expand = run("abp-expand -", abp);
  REQUIRE(expand.exit_code == 0);
  CHECK(expand.out.find("\"2/1\"") != std::string::npos);
  CHECK(run("abp-expsum -", abp).exit_code == 0);
  CHECK(run("abp-check -", abp).exit_code == 0);
}

TEST_CASE("lower and hom commands") {
  std::string qc = R"({
    "true_vars": ["x"], "aux_vars": ["z"], "monotone": true, "high_powered": false,
    "gates": [
      {"id": 0, "kind": "var", "name": "x"},
      {"id": 1, "kind": "var", "name": "z"},
      {"id": 2, "kind": "mul", "l": 0, "r": 1},
      {"id": 3, "kind": "sum", "var": "z", "child": 2}
    ],
    "outputs": [3]
  })";
  RunResult lowered = run("lower -", qc);
  REQUIRE(lowered.exit_code == 0);
  CHECK(lowered.out.find("\"project\"") != std::string::npos);
  RunResult hom = run("hom --k 1 -", lowered.out);
  REQUIRE(hom.exit_code == 0);
  RunResult expanded = run("expand -", hom.out);
  REQUIRE(expanded.exit_code == 0);
  CHECK(expanded.out.find("\"x\": 1") != std::string::npos);
}
