#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "relpca/textio.hpp"

using namespace relpca;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string corpus(const std::string& name) { return std::string(RELPCA_CORPUS_DIR) + "/" + name; }

int cli(const std::string& args, std::string* out = nullptr) {
  std::string tmp = std::string(RELPCA_CORPUS_DIR) + "/../build/cli_out.txt";
  std::string cmd = std::string(RELPCA_CLI_PATH) + " " + args + " > " + tmp + " 2>&1";
  int status = std::system(cmd.c_str());
  if (out) *out = slurp(tmp);
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("every corpus fixture round-trips byte-identically") {
  for (const char* name :
       {"fix_a3.alg", "fix_acd3.alg", "fix_z3.alg", "fix_pp3.alg", "fix_d6.alg", "fix_d6pre.alg",
        "fix_b6.alg", "mut_a3_circ.alg", "mut_a3_deriv.alg", "mut_a3_q.alg", "mut_d6_frob.alg",
        "mut_b6_theta.alg"}) {
    std::string text = slurp(corpus(name));
    AlgebraDoc doc = parse_doc(text);
    CHECK(emit_doc(doc) == text);
  }
}

TEST_CASE("fixture data matches the in-code tables") {
  AlgebraDoc a3 = parse_doc(slurp(corpus("fix_a3.alg")));
  CHECK(a3.dim == 3);
  CHECK(a3.kind == "relative-pca");
  CHECK(doc_op(a3, "dot") == fx::a3_dot());
  CHECK(doc_op(a3, "circ") == fx::a3_circ());
  CHECK(doc_map(a3, "P") == fx::a3_P());
  CHECK(doc_map(a3, "Q") == fx::a3_Q());

  AlgebraDoc d6p = parse_doc(slurp(corpus("fix_d6pre.alg")));
  CHECK(doc_tensor(d6p, "r") == fx::r6());  // resolved through the role binding
  CHECK(doc_op(d6p, "dot") == fx::d6pre().dot);

  AlgebraDoc b6 = parse_doc(slurp(corpus("fix_b6.alg")));
  CHECK(doc_coproduct(b6, "Delta") == fx::b6_delta());
  CHECK(doc_coproduct(b6, "theta") == fx::b6_theta());
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(parse_doc("op dot\nend\n"), DocError);           // section before dim
  CHECK_THROWS_AS(parse_doc("dim 3\nop dot\n4 1 1 1\nend\n"), DocError);  // index out of range
  CHECK_THROWS_AS(parse_doc("dim 3\nop dot\n1 1 1 0.5\nend\n"), DocError);  // float coefficient
  CHECK_THROWS_AS(parse_doc("dim 3\nop dot\n1 1 1 1\n1 1 1 2\nend\n"), DocError);  // duplicate
  CHECK_THROWS_AS(parse_doc("dim 3\nrole P nowhere\n"), DocError);  // missing role target
  CHECK_THROWS_AS(parse_doc("dim 3\nrole nonsense x\n"), DocError);  // unknown role
  CHECK_THROWS_AS(parse_doc("dim 0\n"), DocError);
  CHECK_THROWS_AS(parse_doc("dim 3\nop dot\n1 1 1 1\n"), DocError);  // unterminated
  try {
    parse_doc("dim 3\nop dot\n4 1 1 1\nend\n");
  } catch (const DocError& e) {
    CHECK(e.line == 3);
  }
  // explicit zero entries are rejected to keep the canonical form unique
  CHECK_THROWS_AS(parse_doc("dim 3\nop dot\n1 1 1 0\nend\n"), DocError);
}

TEST_CASE("empty zero algebra document is valid") {
  AlgebraDoc d = parse_doc("dim 1\n");
  CHECK(d.dim == 1);
  AlgebraDoc d2 = parse_doc("dim 1\nop dot\nend\n");
  CHECK(doc_op(d2, "dot").is_zero());
}

TEST_CASE("check exits 0 on every shipped fixture") {
  for (const char* name : {"fix_a3.alg", "fix_acd3.alg", "fix_z3.alg", "fix_pp3.alg", "fix_d6.alg",
                           "fix_d6pre.alg", "fix_b6.alg"})
    CHECK(cli("check " + corpus(name)) == 0);
}

TEST_CASE("check exits 1 on every mutation fixture, with the documented witness") {
  std::string out;
  CHECK(cli("check " + corpus("mut_a3_circ.alg"), &out) == 1);
  CHECK(out.find("[FAIL] rps2 at (1,1)") != std::string::npos);

  CHECK(cli("check " + corpus("mut_a3_deriv.alg"), &out) == 1);
  CHECK(out.find("[FAIL] deriv-dot at (1,1)") != std::string::npos);
  CHECK(out.find("2*e3") != std::string::npos);

  CHECK(cli("check " + corpus("mut_a3_q.alg"), &out) == 1);
  CHECK(out.find("[FAIL] rps1 at (1,1)") != std::string::npos);
  CHECK(out.find("-6*e3") != std::string::npos);

  CHECK(cli("check " + corpus("mut_d6_frob.alg"), &out) == 1);
  CHECK(out.find("[FAIL] Bd-inv-dot") != std::string::npos);

  CHECK(cli("check " + corpus("mut_b6_theta.alg"), &out) == 1);
  CHECK(out.find("[FAIL] cos2") != std::string::npos);
  CHECK(out.find("[FAIL] cos5") != std::string::npos);
}

TEST_CASE("check exits 2 on malformed input") {
  CHECK(cli("check /nonexistent.alg") == 2);
  std::string bad = std::string(RELPCA_CORPUS_DIR) + "/../build/bad.alg";
  std::ofstream(bad) << "dim 3\nop dot\n9 1 1 1\nend\n";
  CHECK(cli("check " + bad) == 2);
  CHECK(cli("check " + corpus("fix_a3.alg") + " --as no-such-kind") == 2);
}

TEST_CASE("check honors --as overrides") {
  CHECK(cli("check " + corpus("fix_a3.alg") + " --as commutative-associative") == 0);
  CHECK(cli("check " + corpus("fix_d6pre.alg") + " --as rpca-ybe") == 0);
  CHECK(cli("check " + corpus("fix_acd3.alg") + " --as admissible-commutative-differential") == 0);
  // d6pre's dot is not a Frobenius double, so this override fails
  CHECK(cli("check " + corpus("fix_d6pre.alg") + " --as double-frobenius") == 1);
}

TEST_CASE("construct pipelines through the CLI") {
  std::string out;
  // circ-from-admissible reproduces the fixture circ table
  CHECK(cli("construct circ-from-admissible " + corpus("fix_acd3.alg"), &out) == 0);
  AlgebraDoc built = parse_doc(out);
  CHECK(doc_op(built, "circ") == fx::a3_circ());

  // the coboundary recipe on the shipped double reproduces fix_b6
  CHECK(cli("construct cobound --r r6 " + corpus("fix_d6pre.alg"), &out) == 0);
  AlgebraDoc b6 = parse_doc(out);
  CHECK(doc_coproduct(b6, "Delta") == fx::b6_delta());
  CHECK(doc_coproduct(b6, "theta") == fx::b6_theta());
  std::string tmp = std::string(RELPCA_CORPUS_DIR) + "/../build/constructed_b6.alg";
  CHECK(cli("construct cobound --r r6 " + corpus("fix_d6pre.alg") + " -o " + tmp) == 0);
  CHECK(cli("check " + tmp) == 0);

  // witt, pre-pca, sub-adjacent, double, manin, lift-o-operator
  CHECK(cli("construct witt " + corpus("fix_acd3.alg"), &out) == 0);
  CHECK(doc_op(parse_doc(out), "bracket") == fx::a3_bracket());
  CHECK(cli("construct pre-pca " + corpus("fix_z3.alg"), &out) == 0);
  CHECK(doc_op(parse_doc(out), "succ") == fx::pp3_succ());
  CHECK(cli("construct sub-adjacent " + corpus("fix_pp3.alg"), &out) == 0);
  CHECK(doc_op(parse_doc(out), "circ") == fx::a3_circ());
  CHECK(cli("construct double " + corpus("fix_pp3.alg"), &out) == 0);
  CHECK(doc_op(parse_doc(out), "circ") == fx::d6pre().circ);
  CHECK(cli("construct manin " + corpus("fix_a3.alg"), &out) == 0);
  CHECK(doc_op(parse_doc(out), "bracket") == fx::d6().bracket);
  CHECK(cli("construct lift-o-operator " + corpus("fix_pp3.alg"), &out) == 0);
  AlgebraDoc lifted = parse_doc(out);
  CHECK(doc_tensor(lifted, "r") == fx::r6());

  // precondition violations exit 1
  CHECK(cli("construct circ-from-admissible " + corpus("mut_a3_q.alg")) == 1);
}

TEST_CASE("json reports expose the stable schema") {
  std::string out;
  CHECK(cli("--format json check " + corpus("mut_a3_circ.alg"), &out) == 1);
  CHECK(out.find("\"structure\": \"relative-pca\"") != std::string::npos);
  CHECK(out.find("\"label\": \"rps2\"") != std::string::npos);
  CHECK(out.find("\"passed\": false") != std::string::npos);
  CHECK(out.find("\"witness\"") != std::string::npos);
  CHECK(out.find("\"indices\"") != std::string::npos);
  CHECK(out.find("\"residual\"") != std::string::npos);
  CHECK(cli("--format json construct manin " + corpus("fix_a3.alg"), &out) == 0);
  CHECK(out.find("\"constructed\"") != std::string::npos);
}

TEST_CASE("laurent pseudo-files") {
  CHECK(cli("check 'laurent(a=-1)' --window=-4..4") == 0);
  CHECK(cli("check 'laurent(a=0)' --window=-3..3") == 0);
  std::string out;
  CHECK(cli("check 'laurent(a=3)' --window=-3..3", &out) == 0);
  CHECK(out.find("[sampled]") != std::string::npos);
  CHECK(cli("check 'laurent(a=1)' --window=5..1") == 2);
}

TEST_CASE("enumerate-ybe") {
  std::string out;
  CHECK(cli("enumerate-ybe " + corpus("fix_a3.alg") + " --coeffs -1,0,1", &out) == 0);
  CHECK(out.find("solutions: 1") != std::string::npos);
  CHECK(cli("--format json enumerate-ybe " + corpus("fix_a3.alg"), &out) == 0);
  CHECK(out.find("\"count\": 1") != std::string::npos);
}

TEST_CASE("report validates the declared kind") {
  CHECK(cli("report " + corpus("fix_b6.alg")) == 0);
  CHECK(cli("report " + corpus("mut_b6_theta.alg")) == 1);
}
