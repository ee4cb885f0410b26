#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "poss/io.hpp"
#include "poss/morphism.hpp"
#include "poss/transform.hpp"

using namespace poss;
using namespace poss::fixtures;

namespace {

std::string corpus_path(const std::string& name) {
  const char* base = std::getenv("POSS_CORPUS");
  REQUIRE(base != nullptr);
  return std::string(base) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args, std::string& output) {
  const char* bin = std::getenv("POSSCT_BIN");
  REQUIRE(bin != nullptr);
  std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  output.clear();
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
  return pclose(pipe) / 256;
}

}  // namespace

TEST_CASE("frame documents parse and round trip") {
  FrameDocument doc = parse_frame_document(slurp(corpus_path("fig11.json")));
  CHECK(doc.frame.size() == 4);
  CHECK(doc.frame.props.size() == 8);
  CHECK(are_isomorphic(doc.frame, fig11()).has_value());

  std::string ser = serialize_frame_document(doc);
  FrameDocument doc2 = parse_frame_document(ser);
  CHECK(doc2.frame.poset.below == doc.frame.poset.below);
  CHECK(doc2.frame.rels == doc.frame.rels);
  CHECK(doc2.frame.props == doc.frame.props);
  CHECK(serialize_frame_document(doc2) == ser);

  FrameDocument p3doc = parse_frame_document(slurp(corpus_path("p3.json")));
  CHECK(are_isomorphic(p3doc.frame, p3()).has_value());
}

TEST_CASE("frame document errors") {
  CHECK_THROWS_AS(parse_frame_document("{"), document_error);
  CHECK_THROWS_AS(parse_frame_document("{\"states\": 0, \"props\": []}"),
                  document_error);
  // transitive closure is not applied: stated pairs must already be an order
  CHECK_THROWS_AS(parse_frame_document(
                      R"({"states":3, "leq": [[0,1],[1,2]], "props": "full"})"),
                  document_error);
  // invalid frames are rejected on load
  CHECK_THROWS_AS(parse_frame_document(
                      R"({"states":2, "leq": [[0,1]], "rels": {"i": [[1,1]]},
                         "props": [[],[0],[0,1]]})"),
                  document_error);
  CHECK_THROWS_AS(parse_frame_document(
                      R"({"states":2, "leq": [[0,9]], "props": "full"})"),
                  document_error);
}

TEST_CASE("bao documents") {
  FiniteBAO b = parse_bao_document(
      R"({"atoms": 2, "elements": "powerset", "ops": {"i": [0,1,2,3]}})");
  CHECK(b.size() == 4);
  CHECK(validate_bao(b).ok);
  std::string ser = serialize_bao_document(b);
  FiniteBAO b2 = parse_bao_document(ser);
  CHECK(b2.elements == b.elements);
  CHECK(b2.box == b.box);
  CHECK(serialize_bao_document(b2) == ser);

  CHECK_THROWS_AS(parse_bao_document(R"({"atoms": 1, "elements": [[0]]})"),
                  document_error);
  CHECK_THROWS_AS(
      parse_bao_document(
          R"({"atoms": 1, "elements": "powerset", "ops": {"i": [1,0]}})"),
      document_error);
}

TEST_CASE("dot export is deterministic and draws covers") {
  PossibilityFrame f = chain2();
  std::string d1 = export_dot(f);
  std::string d2 = export_dot(f);
  CHECK(d1 == d2);
  // solid cover edge from t down to b, dashed accessibility edges
  CHECK(d1.find("s1 -> s0 [style=solid]") != std::string::npos);
  CHECK(d1.find("[style=dashed, label=\"i\"]") != std::string::npos);
  // a three-chain has two covers, no transitive edge
  FrameDocument c3 = parse_frame_document(slurp(corpus_path("chain3.json")));
  std::string d3 = export_dot(c3.frame);
  CHECK(d3.find("s2 -> s1 [style=solid]") != std::string::npos);
  CHECK(d3.find("s1 -> s0 [style=solid]") != std::string::npos);
  CHECK(d3.find("s2 -> s0 [style=solid]") == std::string::npos);
}

TEST_CASE("cli contract") {
  std::string out;

  SUBCASE("validate and exit codes") {
    CHECK(run_cli("validate " + corpus_path("fig11.json"), out) == 0);
    CHECK(out.find("verdict: true") != std::string::npos);
    // a parseable document violating the frame axioms is a false verdict
    // with a witness, not an input error
    std::string bad = "/tmp/possct-bad-frame.json";
    {
      std::ofstream f(bad);
      f << R"({"states":3, "leq": [[0,2],[1,2]],
               "rels": {"i": [[2,0],[0,0],[1,1]]}, "props": "full"})";
    }
    CHECK(run_cli("validate " + bad, out) == 1);
    CHECK(out.find("violated: props: not closed under box i") != std::string::npos);
    CHECK(out.find("verdict: false") != std::string::npos);
    CHECK(run_cli("validate " + corpus_path("no-such.json"), out) == 2);
    CHECK(run_cli("valid " + corpus_path("fig11.json") +
                      " \"[i](p1 -> p2) -> ([i]p1 -> [i]p2)\"",
                  out) == 0);
    CHECK(run_cli("valid " + corpus_path("fig11.json") + " \"p1 -> [i]p1\"", out) == 1);
    CHECK(out.find("counter-state:") != std::string::npos);
    CHECK(run_cli("valid " + corpus_path("fig11.json") + " \"p1 &\"", out) == 2);
    // exhausted budgets exit 3
    CHECK(run_cli("valid " + corpus_path("fig11.json") +
                      " --budget 3 \"[i](p1 -> p2) -> ([i]p1 -> [i]p2)\"",
                  out) == 3);
  }

  SUBCASE("classify") {
    CHECK(run_cli("classify " + corpus_path("p3.json"), out) == 0);
    CHECK(out.find("rich: true") != std::string::npos);
    CHECK(out.find("principal: true") != std::string::npos);
    CHECK(run_cli("classify " + corpus_path("fig11.json"), out) == 0);
    CHECK(out.find("principal: false") != std::string::npos);
  }

  SUBCASE("force") {
    CHECK(run_cli("force " + corpus_path("fig11.json") + " --val " +
                      corpus_path("valuation-fig11.json") + " --at 0 \"<i>p1\"",
                  out) == 0);
    CHECK(run_cli("force " + corpus_path("fig11.json") + " --val " +
                      corpus_path("valuation-fig11.json") + " --at 0 \"[i]p1\"",
                  out) == 1);
  }

  SUBCASE("transform and dual emit loadable documents") {
    CHECK(run_cli("transform separative-quotient " + corpus_path("fig10.json"), out) ==
          0);
    CHECK(out.find("classes: 3") != std::string::npos);
    CHECK(run_cli("transform tighten " + corpus_path("fig12.json"), out) == 0);
    CHECK(out.find("classes: 5") != std::string::npos);
    CHECK(run_cli("transform subframe " + corpus_path("fig13.json") +
                      " --subset 0,3,4,5,6",
                  out) == 0);
    CHECK(out.find("kind: selective") != std::string::npos);
    CHECK(run_cli("dual under " + corpus_path("fig11.json"), out) == 0);
    // the document part parses as a BAO
    auto brace = out.find('{');
    REQUIRE(brace != std::string::npos);
    auto endbrace = out.rfind('}');
    FiniteBAO b = parse_bao_document(out.substr(brace, endbrace - brace + 1));
    CHECK(b.size() == 8);
    CHECK(run_cli("dual gff " + corpus_path("bao-identity2.json"), out) == 0);
    CHECK(out.find("\"states\": 3") != std::string::npos);
  }

  SUBCASE("correspond") {
    CHECK(run_cli("correspond \"e;i;i,i;e\" " + corpus_path("kripke2cycle.json") +
                      " --kripke",
                  out) == 0);
    CHECK(out.find("axiom-valid: false") != std::string::npos);
    CHECK(out.find("condition-holds: false") != std::string::npos);
  }

  SUBCASE("sweep") {
    CHECK(run_cli("sweep \"e;i;i,i;e\" --max-size 2", out) == 0);
    CHECK(out.find("no divergence") != std::string::npos);
    // the separator alias with | works too
    CHECK(run_cli("sweep \"e;i|i,i;e\" --max-size 2", out) == 0);
  }

  SUBCASE("enumerate") {
    CHECK(run_cli("enumerate posets --size 4", out) == 0);
    CHECK(out.find("count: 16") != std::string::npos);
    CHECK(run_cli("enumerate baos --atoms 1", out) == 0);
    CHECK(out.find("count: 2") != std::string::npos);
  }

  SUBCASE("morphism") {
    CHECK(run_cli("morphism find " + corpus_path("p3.json") + " " +
                      corpus_path("p3.json") + " --grade p --flags isomorphism",
                  out) == 0);
    CHECK(out.find("map: 0 1 2") != std::string::npos);
    CHECK(run_cli("morphism check " + corpus_path("p3.json") + " " +
                      corpus_path("p3.json") + " --map 0,1,2 --grade p",
                  out) == 0);
    CHECK(run_cli("morphism check " + corpus_path("p3.json") + " " +
                      corpus_path("p3.json") + " --map 0,0,0 --grade p",
                  out) == 1);
  }

  SUBCASE("extended documents") {
    CHECK(run_cli("validate " + corpus_path("extended-chain2.json"), out) == 0);
    CHECK(out.find("extended: true") != std::string::npos);
  }
}
