#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ringforge/claims.hpp"
#include "ringforge/cli.hpp"
#include "ringforge/serialize.hpp"

using namespace ringforge;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

struct EnvGuard {
  explicit EnvGuard(const char* k, const char* v) : key(k) { ::setenv(k, v, 1); }
  ~EnvGuard() { ::unsetenv(key); }
  const char* key;
};

std::size_t count_lines_starting_with(const std::string& text, const std::string& prefix) {
  std::size_t count = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (line.rfind(prefix, 0) == 0) ++count;
  return count;
}

std::filesystem::path temp_file(const std::string& stem) {
  return std::filesystem::temp_directory_path() /
         ("ringforge_cli_" + std::to_string(::getpid()) + "_" + stem);
}

}  // namespace

TEST_CASE("group classify prints the one-line classification") {
  auto r = run({"group", "classify", "2:q8"});
  CHECK(r.code == 0);
  CHECK(r.out == "nilpotent class=2 solvable derived_length=2 metabelian=true\n");
  CHECK(r.err.empty());
}

TEST_CASE("group info reports order, center, commutator and classification") {
  auto r = run({"group", "info", "2:q8"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "group q8 order=8\n"
        "elements: e a a^2 a^3 b a*b a^2*b a^3*b\n"
        "abelian=false\n"
        "center: {e, a^2}\n"
        "commutator: {e, a^2}\n"
        "classification: nilpotent class=2 solvable derived_length=2 metabelian=true\n");
}

TEST_CASE("group subgroups lists all six with generators and normality") {
  auto r = run({"group", "subgroups", "2:q8"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("subgroups of q8: 6\n", 0) == 0);
  CHECK(r.out.find("order=1 members={e} cyclic=true generator=e normal=true\n") !=
        std::string::npos);
  CHECK(r.out.find("order=2 members={e, a^2} cyclic=true generator=a^2 normal=true\n") !=
        std::string::npos);
  CHECK(r.out.find("order=4 members={e, a, a^2, a^3} cyclic=true generator=a normal=true\n") !=
        std::string::npos);
  CHECK(r.out.find("cyclic=false generators=a,b normal=true\n") != std::string::npos);
  CHECK(count_lines_starting_with(r.out, "order=") == 6);
  CHECK(count_lines_starting_with(r.out, "order=4") == 3);
}

TEST_CASE("group series prints both series and their checks") {
  auto r = run({"group", "series", "2:q8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("lower central series: {e, a, a^2, a^3, b, a*b, a^2*b, a^3*b} > {e, a^2} > "
                   "{e}\n") != std::string::npos);
  CHECK(r.out.find("central series check: passed\n") != std::string::npos);
  CHECK(r.out.find("solvable series check: passed\n") != std::string::npos);
  CHECK(count_lines_starting_with(r.out, "derived series: ") == 1);
}

TEST_CASE("ring eval classifies the result and proves it") {
  auto zero = run({"ring", "eval", "2:q8", "(e+a^2)*(e+a^2)"});
  CHECK(zero.code == 0);
  CHECK(zero.out == "0 (zero divisor input: augmentation=0)\n");

  auto unit = run({"ring", "eval", "2:q8", "a + b + a*b"});
  CHECK(unit.code == 0);
  CHECK(unit.out.rfind("a + b + a*b (unit: augmentation=1, inverse=", 0) == 0);
  {
    auto open = unit.out.find("inverse=") + 8;
    auto close = unit.out.find(')', open);
    auto ring = make_ring(2, preset_q8());
    auto inv = parse_element(ring, unit.out.substr(open, close - open));
    CHECK(parse_element(ring, "a + b + a*b") * inv == ring_one(ring));
  }

  auto zd = run({"ring", "eval", "2:q8", "e + b"});
  CHECK(zd.code == 0);
  CHECK(zd.out == "e + b (zero divisor: augmentation=0, witness=e + a^2 + b + a^2*b)\n");
  {
    auto ring = make_ring(2, preset_q8());
    auto witness = parse_element(ring, "e + a^2 + b + a^2*b");
    CHECK(parse_element(ring, "e + b") * witness == ring_zero(ring));
  }

  auto zd3 = run({"ring", "eval", "3:q8", "e + a^2"});
  CHECK(zd3.code == 0);
  CHECK(zd3.out == "e + a^2 (zero divisor: augmentation=2, witness=e + 2*a^2)\n");
}

TEST_CASE("ideal basis prints the subgroup and the rref rows") {
  auto r = run({"ideal", "basis", "2:q8", "a^2"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "subgroup: {e, a^2}\n"
        "side=left dim=4\n"
        "  1 0 1 0 0 0 0 0\n"
        "  0 1 0 1 0 0 0 0\n"
        "  0 0 0 0 1 0 1 0\n"
        "  0 0 0 0 0 1 0 1\n");

  auto trivial = run({"ideal", "basis", "2:q8", "e", "--side", "right"});
  CHECK(trivial.code == 0);
  CHECK(trivial.out == "subgroup: {e}\nside=right dim=0\n");

  auto two_gen = run({"ideal", "basis", "2:q8", "a^2,b"});
  CHECK(two_gen.code == 0);
  CHECK(two_gen.out.find("subgroup: {e, a^2, b, a^2*b}\n") != std::string::npos);
  CHECK(two_gen.out.find("side=left dim=6\n") != std::string::npos);

  auto alias = run({"ideal", "basis", "2:q8", "i"});
  CHECK(alias.out.find("subgroup: {e, a, a^2, a^3}\n") != std::string::npos);
  CHECK(alias.out.find("side=left dim=6\n") != std::string::npos);

  auto unknown = run({"ideal", "basis", "2:q8", "q"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("UnknownSymbol") != std::string::npos);
  CHECK(unknown.err.find("\"q\" is not an element of group \"q8\"") != std::string::npos);
}

TEST_CASE("ideal lattice text names the classical ideals") {
  auto r = run({"ideal", "lattice", "2:q8"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("nodes: 15\n", 0) == 0);
  CHECK(r.out.find("edges: 20\n") != std::string::npos);
  CHECK(r.out.find("n0 dim=0 0\n") != std::string::npos);
  CHECK(r.out.find("n8 dim=4 I(<a^2>) = M_a\n") != std::string::npos);
  CHECK(r.out.find("n14 dim=8 ring\n") != std::string::npos);
  CHECK(r.out.find("n13 -> n14\n") != std::string::npos);
  for (const char* name : {"I(Q8)", "I(<a>)", "I(<b>)", "I(<ab>)", "I(<a^2>)", "I_a", "I_b",
                           "I_ab", "I_{a+b}", "M_a", "M_b", "M_ab", "M_{a+b}"})
    CHECK(r.out.find(name) != std::string::npos);
}

TEST_CASE("ideal lattice dot is byte-deterministic") {
  auto first = run({"ideal", "lattice", "2:q8", "--format", "dot"});
  auto second = run({"ideal", "lattice", "2:q8", "--format", "dot"});
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out.rfind("digraph ideal_lattice {\n", 0) == 0);
  CHECK(first.out.find("rankdir=BT;") != std::string::npos);
  CHECK(first.out.find("[label=\"0 dim=0\"];") != std::string::npos);
  CHECK(first.out.find("[label=\"ring dim=8\"];") != std::string::npos);
  CHECK(first.out.find("[label=\"I(<a^2>) = M_a dim=4\"];") != std::string::npos);
}

TEST_CASE("ideal lattice json round trips through the serializer") {
  auto r = run({"ideal", "lattice", "3:trivial", "--format", "json"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  REQUIRE(j["nodes"].size() == 2);
  CHECK(j["nodes"][0]["label"] == "0");
  CHECK(j["nodes"][0]["dim"] == 0);
  CHECK(j["nodes"][1]["label"] == "ring");
  CHECK(j["nodes"][1]["dim"] == 1);
  CHECK(j["edges"].dump() == "[[0,1]]");
}

TEST_CASE("decompose labels the five blocks of the GF(3) quaternion ring") {
  auto r = run({"decompose", "3:q8"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("summands: 5\n", 0) == 0);
  CHECK(r.out.find("C dim=1 idempotent=2*e + 2*a + 2*a^2 + 2*a^3 + 2*b + 2*a*b + 2*a^2*b + "
                   "2*a^3*b\n") != std::string::npos);
  CHECK(r.out.find("B dim=1 idempotent=") != std::string::npos);
  CHECK(r.out.find("F3-summand-3 dim=1 idempotent=") != std::string::npos);
  CHECK(r.out.find("F3-summand-4 dim=1 idempotent=") != std::string::npos);
  CHECK(r.out.find("I(<a^2>) dim=4 idempotent=2*e + a^2\n") != std::string::npos);
  CHECK(r.out.find("  1 1 1 1 2 2 2 2\n") != std::string::npos);
}

TEST_CASE("decompose json carries dims and idempotents") {
  auto r = run({"decompose", "2:c3", "--format", "json"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  REQUIRE(j["summands"].size() == 2);
  CHECK(j["summands"][0]["label"] == "block-0");
  CHECK(j["summands"][0]["dim"] == 1);
  CHECK(j["summands"][1]["label"] == "block-1");
  CHECK(j["summands"][1]["dim"] == 2);
  CHECK(j["idempotents"].dump() == "[[1,1,1],[0,1,1]]");
}

TEST_CASE("decompose refuses a non-semisimple ring") {
  auto r = run({"decompose", "2:q8"});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.err == "CharDividesOrder: characteristic 2 divides the group order 8\n");
}

TEST_CASE("paper-check passes and reports") {
  auto r = run({"paper-check"});
  CHECK(r.code == 0);
  CHECK(count_lines_starting_with(r.out, "FAIL ") == 0);
  CHECK(count_lines_starting_with(r.out, "PASS ") == 19);
  CHECK(count_lines_starting_with(r.out, "REPORT ") == 3);
  CHECK(r.out.find("RESULT: OK (22/22 checks)\n") != std::string::npos);
  CHECK(r.out.find("REPORT x4-augmentation-census: x^4 == augmentation(x)*e holds for 256 of "
                   "256 elements") != std::string::npos);
  CHECK(r.out.find("REPORT z2q8-lattice-count:") != std::string::npos);
  CHECK(r.out.find("REPORT order-4-commutator-report:") != std::string::npos);
}

TEST_CASE("the claim list is frozen, ordered and fully passing") {
  auto results = run_claim_checks();
  const std::vector<std::string> expected = {
      "gf-linear-algebra",
      "q8-construction-and-presentation",
      "quaternion-matrix-model",
      "cayley-table-validation",
      "q8-subgroups",
      "q8-center-commutator-quotient",
      "q8-series-and-classification",
      "order-4-commutator-report",
      "augmentation-ideal-dimensions",
      "ring-axioms",
      "expression-evaluation",
      "z2q8-unit-parity",
      "x4-augmentation-census",
      "z2q8-named-ideal-lattice",
      "z2q8-lattice-count",
      "small-lattice-cross-check",
      "z3q8-wedderburn",
      "z3q8-explicit-decomposition",
      "maschke-complements",
      "fixed-point-split",
      "group-json-round-trip",
      "lattice-dot-deterministic",
  };
  REQUIRE(results.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(results[i].name == expected[i]);
    CHECK(!results[i].detail.empty());
    bool is_report = expected[i] == "order-4-commutator-report" ||
                     expected[i] == "x4-augmentation-census" ||
                     expected[i] == "z2q8-lattice-count";
    CHECK(results[i].status == (is_report ? ClaimStatus::report : ClaimStatus::pass));
  }
}

TEST_CASE("usage errors exit 2, computational errors exit 1") {
  CHECK(run({"group", "classify", "4:q8"}).code == 2);
  CHECK(run({"ring", "eval", "4:q8", "e"}).code == 2);
  CHECK(run({"ring", "eval", "2:nosuch", "e"}).code == 2);
  CHECK(run({"ring", "eval", "2:q8", "2e"}).code == 2);
  CHECK(run({"ring", "eval", "2:q8", "q"}).code == 2);
  CHECK(run({"ideal", "lattice", "q8"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"group"}).code == 2);

  auto not_prime = run({"group", "classify", "4:q8"});
  CHECK(not_prime.err.find("NotPrime") != std::string::npos);
  auto no_preset = run({"ring", "eval", "2:nosuch", "e"});
  CHECK(no_preset.err.find("UnknownPreset") != std::string::npos);

  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("ringforge") != std::string::npos);
}

TEST_CASE("RINGFORGE_MAX_ORDER overrides the enumeration bounds") {
  {
    EnvGuard env("RINGFORGE_MAX_ORDER", "4");
    auto lattice = run({"ideal", "lattice", "2:q8"});
    CHECK(lattice.code == 1);
    CHECK(lattice.err == "TooLarge: group order 8 exceeds the enumeration bound 4\n");
    auto subgroups = run({"group", "subgroups", "2:q8"});
    CHECK(subgroups.code == 1);
    CHECK(subgroups.err.find("GroupTooLarge") != std::string::npos);
  }
  {
    EnvGuard env("RINGFORGE_MAX_ORDER", "8");
    CHECK(run({"ideal", "lattice", "2:q8"}).code == 0);
    CHECK(run({"group", "subgroups", "2:q8"}).code == 0);
  }
  {
    EnvGuard env("RINGFORGE_MAX_ORDER", "abc");
    auto r = run({"group", "classify", "2:q8"});
    CHECK(r.code == 2);
    CHECK(r.err.find("SyntaxError") != std::string::npos);
  }
  CHECK(run({"ideal", "lattice", "2:q8"}).code == 0);
}

TEST_CASE("-o writes the same bytes the command prints") {
  auto stdout_run = run({"ideal", "lattice", "2:q8", "--format", "dot"});
  auto path = temp_file("lattice.dot");
  auto file_run = run({"ideal", "lattice", "2:q8", "--format", "dot", "-o", path.string()});
  CHECK(file_run.code == 0);
  CHECK(file_run.out.empty());

  std::ifstream in(path, std::ios::binary);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == stdout_run.out);
  std::filesystem::remove(path);

  auto bad = run({"ideal", "lattice", "2:q8", "-o", "/nonexistent_dir_zz/out.txt"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("IoError") != std::string::npos);
}

TEST_CASE("--group-json replaces the preset lookup") {
  auto path = temp_file("klein4.json");
  {
    std::ofstream f(path);
    f << group_to_json(preset_klein4()).dump(2);
  }

  auto classify = run({"group", "classify", "2:ignored", "--group-json", path.string()});
  CHECK(classify.code == 0);
  CHECK(classify.out == "nilpotent class=1 solvable derived_length=1 metabelian=true\n");

  auto eval = run({"ring", "eval", "3:ignored", "x*y", "--group-json", path.string()});
  CHECK(eval.code == 0);
  CHECK(eval.out == "xy (unit: augmentation=1, inverse=xy)\n");

  std::filesystem::remove(path);
  auto missing = run({"group", "classify", "2:ignored", "--group-json", path.string()});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("IoError") != std::string::npos);
}
