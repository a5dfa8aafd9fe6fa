#include <doctest.h>

#include "mcw/circuit.hpp"
#include "mcw/error.hpp"
#include "mcw/generators.hpp"
#include "mcw/json_io.hpp"

using namespace mcw;

TEST_CASE("validation accepts a constant circuit") {
  auto u = Universe::make({}, {});
  CircuitBuilder b(u);
  GateId one = b.constant(Rational(1));
  Circuit c = std::move(b).finish({one});
  CHECK(validate(c).ok());
  CHECK(circuit_size(c) == 1);
}

TEST_CASE("validation flags negative constants under the monotone flag") {
  auto u = Universe::make({"x"}, {});
  CircuitBuilder b(u, /*monotone=*/true);
  GateId neg = b.constant(Rational(-1));
  Circuit c = std::move(b).finish({neg});
  auto rep = validate(c);
  REQUIRE(!rep.ok());
  CHECK(rep.violations[0].code == "negative-constant");
}

TEST_CASE("validation flags quantifiers labeled by a true variable") {
  auto u = Universe::make({"x1"}, {"z1"});
  CircuitBuilder b(u);
  GateId x = b.variable(std::string("x1"));
  GateId s = b.sum(*u->find("x1"), x);
  Circuit c = std::move(b).finish({s});
  auto rep = validate(c);
  REQUIRE(!rep.ok());
  CHECK(rep.violations[0].code == "quantifier-on-true-variable");
}

TEST_CASE("validation flags structural breakage") {
  auto u = Universe::make({"x"}, {});
  Circuit c;
  c.universe = u;
  c.gates.push_back(Gate::add(1, 2));  // children after the gate
  c.outputs = {0};
  auto rep = validate(c);
  CHECK(!rep.ok());
  CHECK(rep.violations[0].code == "dangling-reference");

  Circuit empty;
  empty.universe = u;
  CHECK(!validate(empty).ok());
}

TEST_CASE("quantified-circuit validation") {
  auto u = Universe::make({"x1"}, {"y1", "y2"});
  CircuitBuilder b(u);
  GateId y1 = b.variable(std::string("y1"));
  GateId x = b.variable(std::string("x1"));
  GateId m = b.mul(y1, x);
  QuantifiedCircuit qc;
  qc.inner = std::move(b).finish({m});
  // unbound aux variable
  auto rep = validate(qc);
  REQUIRE(!rep.ok());
  CHECK(rep.violations[0].code == "unbound-aux-variable");
  // binding it fixes the report
  qc.prefix.emplace_back(Quantifier::Sum, *u->find("y1"));
  CHECK(validate(qc).ok());
  // double binding is rejected
  qc.prefix.emplace_back(Quantifier::Prod, *u->find("y1"));
  CHECK(!validate(qc).ok());
}

TEST_CASE("sizes") {
  auto u = Universe::make({"x", "y"}, {"z1", "z2", "z3"});
  CircuitBuilder b(u);
  GateId x = b.variable(std::string("x"));
  GateId y = b.variable(std::string("y"));
  GateId a = b.add(x, y);
  Circuit c = std::move(b).finish({a});
  CHECK(circuit_size(c) == 3);

  CircuitBuilder b2(u);
  std::vector<GateId> leaves;
  for (int i = 0; i < 5; ++i) leaves.push_back(b2.constant(Rational(i + 1)));
  GateId root = b2.add_many(leaves);
  QuantifiedCircuit qc;
  qc.inner = std::move(b2).finish({root});
  qc.prefix = {{Quantifier::Sum, *u->find("z1")},
               {Quantifier::Prod, *u->find("z2")},
               {Quantifier::Sum, *u->find("z3")}};
  CHECK(quantified_size(qc) == 3 + qc.inner.size());
  CHECK(count_productions(qc) == 1);
}

TEST_CASE("production count on the toy prefix") {
  auto u = Universe::make({"x"}, {"y1", "z1", "y2", "z2", "z3", "y3"});
  CircuitBuilder b(u);
  GateId x = b.variable(std::string("x"));
  QuantifiedCircuit qc;
  qc.inner = std::move(b).finish({x});
  auto q = [&](Quantifier kind, const char* name) {
    qc.prefix.emplace_back(kind, *u->find(name));
  };
  q(Quantifier::Sum, "y1");
  q(Quantifier::Prod, "z1");
  q(Quantifier::Sum, "y2");
  q(Quantifier::Prod, "z2");
  q(Quantifier::Prod, "z3");
  q(Quantifier::Sum, "y3");
  CHECK(count_productions(qc) == 3);

  QuantifiedCircuit all_sum = qc;
  all_sum.prefix.clear();
  all_sum.prefix.emplace_back(Quantifier::Sum, *u->find("y1"));
  all_sum.prefix.emplace_back(Quantifier::Sum, *u->find("y2"));
  CHECK(count_productions(all_sum) == 0);
}

TEST_CASE("builders desugar n-ary nodes to balanced binary trees") {
  auto u = Universe::make({"x"}, {});
  CircuitBuilder b(u);
  std::vector<GateId> xs;
  for (int i = 0; i < 7; ++i) xs.push_back(b.constant(Rational(1)));
  GateId root = b.add_many(xs);
  Circuit c = std::move(b).finish({root});
  // 7 leaves + 6 binary adds
  CHECK(c.gates.size() == 13);
  for (const auto& g : c.gates)
    if (g.is_binary()) CHECK(g.kind == GateKind::Add);
}

TEST_CASE("prune_unreachable keeps outputs and order") {
  auto u = Universe::make({"x", "y"}, {});
  CircuitBuilder b(u);
  GateId x = b.variable(std::string("x"));
  GateId y = b.variable(std::string("y"));
  GateId dead = b.mul(x, y);
  (void)dead;
  GateId live = b.add(x, x);
  Circuit c = std::move(b).finish({live});
  Circuit pruned = prune_unreachable(c);
  CHECK(pruned.size() == 2);
  CHECK(validate(pruned).ok());
}

TEST_CASE("syntactic aux-freeness") {
  auto u = Universe::make({"x"}, {"z"});
  CircuitBuilder b(u);
  GateId z = b.variable(std::string("z"));
  GateId x = b.variable(std::string("x"));
  GateId m = b.mul(z, x);
  GateId s = b.sum(*u->find("z"), m);
  Circuit closed = std::move(b).finish({s});
  CHECK(syntactically_aux_free(closed));

  CircuitBuilder b2(u);
  GateId z2 = b2.variable(std::string("z"));
  Circuit open = std::move(b2).finish({z2});
  CHECK(!syntactically_aux_free(open));
}

TEST_CASE("random circuits validate and round trip through json") {
  Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    CircuitGenOptions opt;
    opt.allow_project = trial % 2 == 0;
    opt.allow_sum_prod = trial % 3 == 0;
    Circuit c = random_monotone_circuit(rng, opt);
    CHECK(validate(c).ok());
    std::string once = circuit_to_json(c);
    AnyCircuit back = parse_circuit_json(once);
    REQUIRE(std::holds_alternative<Circuit>(back));
    CHECK(circuit_to_json(std::get<Circuit>(back)) == once);
  }
}

TEST_CASE("quantified circuits round trip with their prefix") {
  Rng rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    QuantifiedCircuit qc = random_quantified_circuit(rng, {});
    CHECK(validate(qc).ok());
    std::string once = circuit_to_json(qc);
    AnyCircuit back = parse_circuit_json(once);
    REQUIRE(std::holds_alternative<QuantifiedCircuit>(back));
    CHECK(circuit_to_json(std::get<QuantifiedCircuit>(back)) == once);
  }
}

TEST_CASE("parser rejects sparse or reordered gate ids") {
  std::string bad = R"({"true_vars":["x"],"aux_vars":[],"monotone":true,"high_powered":false,
    "gates":[{"id":1,"kind":"const","value":"1/1"}],"outputs":[0]})";
  CHECK_THROWS_AS(parse_circuit_json(bad), Error);
}

TEST_CASE("the full schema with every gate kind parses; validation reports the semantics") {
  // schema-shaped file exercising all gate kinds plus a prefix; the inner is
  // not plain, so it parses fine and validation flags it as data
  std::string text = R"({
    "true_vars": ["x1"], "aux_vars": ["y1", "z1", "z2"],
    "monotone": true, "high_powered": false,
    "gates": [{"id":0,"kind":"const","value":"1/1"},
              {"id":1,"kind":"var","name":"x1"},
              {"id":2,"kind":"add","l":0,"r":1},
              {"id":3,"kind":"project","var":"z1","bit":0,"child":2},
              {"id":4,"kind":"sum","var":"z2","child":3}],
    "outputs": [4],
    "prefix": [["sum","y1"],["prod","z1"]]
  })";
  AnyCircuit any = parse_circuit_json(text);
  REQUIRE(std::holds_alternative<QuantifiedCircuit>(any));
  const auto& qc = std::get<QuantifiedCircuit>(any);
  auto rep = validate(qc);
  CHECK(!rep.ok());
  bool saw_non_plain = false;
  for (const auto& v : rep.violations) saw_non_plain |= v.code == "non-plain-inner";
  CHECK(saw_non_plain);

  // the same gates without the prefix form a valid plain-model circuit
  std::string plain_text = text.substr(0, text.find(",\n    \"prefix\"")) + "\n  }";
  AnyCircuit plain = parse_circuit_json(plain_text);
  REQUIRE(std::holds_alternative<Circuit>(plain));
  CHECK(validate(std::get<Circuit>(plain)).ok());
}
