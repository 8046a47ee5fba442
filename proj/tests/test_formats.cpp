#include <doctest.h>

#include <random>

#include "formats.hpp"
#include "oracles.hpp"

using namespace hg;

namespace {
constexpr Sign Z = Sign::Zero, P = Sign::Plus, M = Sign::Minus, S = Sign::Star;
}

TEST_CASE("sign matrix text round trip") {
  const std::string text = "+ 0 *\n- + 0\n";
  const auto m = parse_sign_matrix(text);
  CHECK(m.rows == 2);
  CHECK(m.cols == 3);
  CHECK(m.at(0, 2) == S);
  CHECK(m.at(1, 0) == M);
  CHECK(format_sign_matrix(m) == text);

  // Final newline is optional on input.
  CHECK(parse_sign_matrix("+ 0 *\n- + 0") == m);

  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 100; ++trial) {
    const auto r =
        oracle::random_sign_matrix(rng, 1 + rng() % 5, 1 + rng() % 5);
    CHECK(parse_sign_matrix(format_sign_matrix(r)) == r);
  }
}

TEST_CASE("sign matrix text rejects malformed input") {
  CHECK_THROWS_AS(parse_sign_matrix(""), ParseError);
  CHECK_THROWS_AS(parse_sign_matrix("+ \n"), ParseError);   // trailing space
  CHECK_THROWS_AS(parse_sign_matrix("+  -\n"), ParseError); // double space
  CHECK_THROWS_AS(parse_sign_matrix("+ x\n"), ParseError);  // bad entry
  CHECK_THROWS_AS(parse_sign_matrix("+ -\n+\n"), ParseError);  // ragged
  CHECK_THROWS_AS(parse_sign_matrix("+ -\n\n"), ParseError);   // empty line
  CHECK_THROWS_AS(parse_sign_matrix("++\n"), ParseError);   // missing space
}

TEST_CASE("presentation text round trip") {
  const std::string text = "gens 2\ng1 g2 g1^-1\n\n";
  const auto p = parse_presentation(text);
  CHECK(p.num_generators == 2);
  REQUIRE(p.relators.size() == 2);
  CHECK(p.relators[0] == Word{{0, 1}, {1, 1}, {0, -1}});
  CHECK(p.relators[1].empty());
  CHECK(format_presentation(p) == text);

  const auto cubed = parse_presentation("gens 1\ng1 g1 g1\n");
  CHECK(cubed.relators[0] == Word{{0, 1}, {0, 1}, {0, 1}});
}

TEST_CASE("presentation text rejects malformed input") {
  CHECK_THROWS_AS(parse_presentation(""), ParseError);
  CHECK_THROWS_AS(parse_presentation("generators 1\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens -1\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens x\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens 1\ng0\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens 1\ng2\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens 1\ng1^1\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens 1\na1\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens 1\ng\n"), ParseError);
}

TEST_CASE("diagram json round trip") {
  const auto lens3 = lens_diagram(3);
  const auto text = format_diagram_json(lens3);
  CHECK(parse_diagram_json(text) == lens3);

  const auto parsed = parse_diagram_json(
      R"({"genus": 2, "beta": [[[1,1],[2,1]], [[1,1],[2,-1]]]})");
  CHECK(parsed.genus == 2);
  CHECK(parsed.beta_words[1][1] == IntersectionPoint{1, -1});

  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 100; ++trial) {
    const auto h = oracle::random_diagram(rng, 4, 6);
    CHECK(parse_diagram_json(format_diagram_json(h)) == h);
  }
}

TEST_CASE("diagram json rejects malformed input") {
  CHECK_THROWS_AS(parse_diagram_json("not json"), ParseError);
  CHECK_THROWS_AS(parse_diagram_json("[1,2]"), ParseError);
  CHECK_THROWS_AS(parse_diagram_json(R"({"genus": 1})"), ParseError);
  CHECK_THROWS_AS(parse_diagram_json(R"({"genus": 0, "beta": []})"),
                  ParseError);
  CHECK_THROWS_AS(parse_diagram_json(R"({"genus": 1.5, "beta": [[]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_diagram_json(R"({"genus": 2, "beta": [[]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_diagram_json(R"({"genus": 1, "beta": [[[0,1]]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_diagram_json(R"({"genus": 1, "beta": [[[1,2]]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_diagram_json(R"({"genus": 1, "beta": [[[1]]]})"),
                  ParseError);
}
