#include <doctest.h>

#include <json.hpp>

#include "formats.hpp"
#include "report.hpp"

using namespace hg;
using nlohmann::json;

namespace {

HeegaardDiagram genus2_strong() {
  HeegaardDiagram h;
  h.genus = 2;
  h.beta_words = {{{0, 1}, {1, 1}}, {{0, 1}, {1, -1}}};
  return h;
}

const std::string kLoopMatrix =
    "+ 0 0 0 -\n"
    "0 + - * 0\n"
    "- 0 + * 0\n"
    "0 0 0 + 0\n"
    "+ - 0 0 +\n";

}  // namespace

TEST_CASE("analyze report fields") {
  const auto report = analyze_report(genus2_strong());
  CHECK(report.exit_code == 0);
  const json doc = json::parse(report.json);
  CHECK(doc["command"] == "analyze");
  CHECK(doc["genus"] == 2);
  CHECK(doc["presentation"]["relators"] ==
        json::array({"g1 g2", "g1 g2^-1"}));
  CHECK(doc["det"] == -2);
  CHECK(doc["h1_order"] == 2);
  CHECK(doc["generator_count"] == 2);
  CHECK(doc["gradings"]["uniform"] == true);
  CHECK(doc["euler_characteristic"] == -2);
  CHECK(doc["strong"] == true);
  CHECK(doc["epsilon_matrix"] == json::array({"+ +", "+ -"}));
  CHECK(doc["orderability"]["verdict"] == "not_left_orderable");
  CHECK(doc["orderability"]["summand_sign"] == "-");
  CHECK(doc["s3"].is_null());  // |H1| = 2, so no 3-sphere run
  CHECK(doc["exit_code"] == 0);

  CHECK(report.text.find("strong diagram: yes") != std::string::npos);
  CHECK(report.text.find("verdict: not left-orderable") != std::string::npos);
}

TEST_CASE("analyze runs the 3-sphere check when strong with |H1| = 1") {
  const auto report = analyze_report(lens_diagram(1));
  const json doc = json::parse(report.json);
  CHECK(doc["s3"]["outcome"] == "IsS3");
  CHECK(report.exit_code == 0);

  HeegaardDiagram mixed{1, {{{0, 1}, {0, -1}, {0, 1}}}};
  const auto weak = analyze_report(mixed);
  CHECK(weak.exit_code == 1);
  const json weak_doc = json::parse(weak.json);
  CHECK(weak_doc["s3"].is_null());
  CHECK(weak_doc["strong"] == false);
  CHECK(weak_doc["freely_trivial_relators"].empty());
}

TEST_CASE("analyze handles a positive first Betti number") {
  HeegaardDiagram b1pos{2, {{{0, 1}}, {{1, 1}, {1, -1}}}};
  const auto report = analyze_report(b1pos);
  CHECK(report.exit_code == 1);
  const json doc = json::parse(report.json);
  CHECK(doc["b1_positive"] == true);
  CHECK(doc["h1_order"].is_null());
  CHECK(doc["strong"] == false);
  CHECK(doc["s3"].is_null());
  CHECK(doc["freely_trivial_relators"] == json::array({2}));
  CHECK(report.text.find("|H1|: b1 positive") != std::string::npos);
  CHECK(report.text.find("freely trivial relators: b2") != std::string::npos);
}

TEST_CASE("reports are deterministic and round trip") {
  const auto a = analyze_report(genus2_strong());
  const auto b = analyze_report(genus2_strong());
  CHECK(a.text == b.text);
  CHECK(a.json == b.json);

  const json parsed = json::parse(a.json);
  CHECK(json::parse(parsed.dump()) == parsed);
}

TEST_CASE("strong and matrix reports") {
  const auto strong = strong_report(lens_diagram(3));
  CHECK(strong.exit_code == 0);
  const json sdoc = json::parse(strong.json);
  CHECK(sdoc["h1_order"] == 3);
  CHECK(sdoc["generator_count"] == 3);

  const auto matrix = matrix_report(lens_diagram(3));
  CHECK(matrix.exit_code == 0);
  const json mdoc = json::parse(matrix.json);
  CHECK(mdoc["det"] == 3);
  CHECK(mdoc["permanent"] == 3);
  CHECK(mdoc["count_matrix"] == json::array({json::array({3})}));

  HeegaardDiagram b1pos{2, {{{0, 1}}, {{1, 1}, {1, -1}}}};
  const json b1doc = json::parse(strong_report(b1pos).json);
  CHECK(b1doc["b1_positive"] == true);
  CHECK(b1doc["h1_order"].is_null());
  CHECK(b1doc["strong"] == false);
}

TEST_CASE("s3 report") {
  const auto s3 = s3_report(lens_diagram(1));
  CHECK(s3.exit_code == 0);
  const json doc = json::parse(s3.json);
  CHECK(doc["outcome"] == "IsS3");
  CHECK(doc["trace"] ==
        json::array({json{{"a", 1}, {"b", 1}, {"side", "A"}}}));

  const auto lens2 = s3_report(lens_diagram(2));
  CHECK(lens2.exit_code == 1);
  CHECK(json::parse(lens2.json)["outcome"] == "NotIntegerHomologySphere");
}

TEST_CASE("lo det report on the loop example") {
  const auto m = parse_sign_matrix(kLoopMatrix);
  const auto report = lo_det_report(m);
  CHECK(report.exit_code == 1);
  const json doc = json::parse(report.json);
  CHECK(doc["orderability"]["verdict"] == "criterion_inapplicable");
  CHECK(doc["orderability"]["failed_condition"] == 3);
  // The only negative summand is the 4-cycle through the boxed entries.
  CHECK(doc["orderability"]["conflict"]["plus"] ==
        json::array({1, 2, 3, 4, 5}));
  CHECK(doc["orderability"]["conflict"]["minus"] ==
        json::array({5, 3, 1, 4, 2}));
}

TEST_CASE("lo det report positive certificate") {
  const auto report = lo_det_report(parse_sign_matrix("+\n"));
  CHECK(report.exit_code == 0);
  const json doc = json::parse(report.json);
  CHECK(doc["orderability"]["verdict"] == "not_left_orderable");
  CHECK(doc["orderability"]["witness_sigma"] == json::array({1}));
  CHECK(doc["orderability"]["summand_sign"] == "+");
}

TEST_CASE("lo bruteforce report carries a per-column analysis") {
  const auto m = parse_sign_matrix(kLoopMatrix);
  const auto report = lo_bruteforce_report(m);
  CHECK(report.exit_code == 1);
  const json doc = json::parse(report.json);
  CHECK(doc["holds"] == false);
  CHECK(doc["scalings_total"] == 242);
  REQUIRE(doc["column_analysis"].is_array());
  CHECK(doc["column_analysis"].size() == 5);
  for (const auto& col : doc["column_analysis"]) {
    CHECK(col["qualifies"] == false);
  }
  CHECK(report.text.find("column analysis:") != std::string::npos);

  const auto holds = lo_bruteforce_report(parse_sign_matrix("+\n"));
  CHECK(holds.exit_code == 0);
  CHECK(json::parse(holds.json)["holds"] == true);
}
