#include <doctest.h>

#include <random>

#include "diagram.hpp"
#include "oracles.hpp"
#include "orderability.hpp"

using namespace hg;

namespace {

// beta1 = (a1,+)(a2,+), beta2 = (a1,+)(a2,-): a strong diagram with |H1| = 2.
HeegaardDiagram genus2_strong() {
  HeegaardDiagram h;
  h.genus = 2;
  h.beta_words = {{{0, 1}, {1, 1}}, {{0, 1}, {1, -1}}};
  return h;
}

// One beta word (a1,+)(a1,-)(a1,+): |H1| = 1 but three generators.
HeegaardDiagram mixed_genus1() {
  HeegaardDiagram h;
  h.genus = 1;
  h.beta_words = {{{0, 1}, {0, -1}, {0, 1}}};
  return h;
}

}  // namespace

TEST_CASE("validate_diagram") {
  CHECK_THROWS_AS(validate_diagram(HeegaardDiagram{0, {}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_diagram(HeegaardDiagram{2, {{}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_diagram(HeegaardDiagram{1, {{{1, 1}}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_diagram(HeegaardDiagram{1, {{{0, 2}}}}),
                  std::invalid_argument);
  CHECK_NOTHROW(validate_diagram(HeegaardDiagram{1, {{}}}));
}

TEST_CASE("presentation_of transcribes beta words") {
  const auto lens3 = presentation_of(lens_diagram(3));
  CHECK(lens3.num_generators == 1);
  REQUIRE(lens3.relators.size() == 1);
  CHECK(lens3.relators[0] == Word{{0, 1}, {0, 1}, {0, 1}});

  const auto two = presentation_of(genus2_strong());
  CHECK(two.num_generators == 2);
  CHECK(two.relators[0] == Word{{0, 1}, {1, 1}});
  CHECK(two.relators[1] == Word{{0, 1}, {1, -1}});

  const auto degenerate = presentation_of(HeegaardDiagram{1, {{}}});
  CHECK(degenerate.num_generators == 1);
  REQUIRE(degenerate.relators.size() == 1);
  CHECK(degenerate.relators[0].empty());
}

TEST_CASE("count and algebraic matrices") {
  CHECK(count_matrix(lens_diagram(3)).at(0, 0) == 3);
  CHECK(algebraic_matrix(lens_diagram(3)).at(0, 0) == 3);

  const auto c = count_matrix(genus2_strong());
  CHECK(c == IntMatrix{2, 2, {1, 1, 1, 1}});
  const auto a = algebraic_matrix(genus2_strong());
  CHECK(a == IntMatrix{2, 2, {1, 1, 1, -1}});

  CHECK(count_matrix(mixed_genus1()).at(0, 0) == 3);
  CHECK(algebraic_matrix(mixed_genus1()).at(0, 0) == 1);
}

TEST_CASE("h1_order") {
  CHECK(h1_order(lens_diagram(3)) == 3);
  CHECK(h1_order(genus2_strong()) == 2);

  HeegaardDiagram b1pos;
  b1pos.genus = 2;
  b1pos.beta_words = {{{0, 1}}, {{1, 1}, {1, -1}}};
  CHECK_FALSE(h1_order(b1pos).has_value());
}

TEST_CASE("det_exact matches the permutation-sum determinant") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    IntMatrix m(n, n);
    for (auto& e : m.entries) e = static_cast<long long>(rng() % 11) - 5;
    CHECK(det_exact(m) == oracle::leibniz_det(m));
  }
  CHECK(det_exact(IntMatrix(0, 0)) == 1);
  CHECK_THROWS_AS(det_exact(IntMatrix(1, 2)), std::invalid_argument);

  IntMatrix overflow(2, 2);
  overflow.entries = {(1LL << 62), (1LL << 62), (1LL << 62), -(1LL << 62)};
  CHECK_THROWS_AS(det_exact(overflow), ResourceLimitError);
}

TEST_CASE("generators with gradings in canonical order") {
  const auto lens3 = generators(lens_diagram(3));
  REQUIRE(lens3.size() == 3);
  for (const auto& g : lens3) {
    CHECK(g.sigma == Perm{0});
    CHECK(g.grading == 1);
  }
  CHECK(lens3[0].positions == std::vector<int>{0});
  CHECK(lens3[1].positions == std::vector<int>{1});
  CHECK(lens3[2].positions == std::vector<int>{2});

  const auto two = generators(genus2_strong());
  REQUIRE(two.size() == 2);
  CHECK(two[0].sigma == Perm{0, 1});
  CHECK(two[0].grading == -1);  // +1 * (+1 * -1)
  CHECK(two[1].sigma == Perm{1, 0});
  CHECK(two[1].grading == -1);  // -1 * (+1 * +1)

  const auto mixed = generators(mixed_genus1());
  REQUIRE(mixed.size() == 3);
  CHECK(mixed[0].grading == 1);
  CHECK(mixed[1].grading == -1);
  CHECK(mixed[2].grading == 1);
}

TEST_CASE("generator cap raises a resource error") {
  CHECK_THROWS_AS(generators(lens_diagram(5), 3), ResourceLimitError);
  CHECK_THROWS_AS(generators(lens_diagram(5), 0), std::invalid_argument);
}

TEST_CASE("euler characteristic examples") {
  CHECK(euler_characteristic(lens_diagram(3)) == 3);
  CHECK(euler_characteristic(genus2_strong()) == -2);
  CHECK(euler_characteristic(mixed_genus1()) == 1);
}

TEST_CASE("strongness examples") {
  const auto lens3 = check_strong(lens_diagram(3));
  CHECK(lens3.is_strong);
  CHECK(lens3.h1 == 3);
  CHECK(lens3.generator_count == 3);
  CHECK(lens3.gradings_uniform);

  const auto mixed = check_strong(mixed_genus1());
  CHECK_FALSE(mixed.is_strong);
  CHECK(mixed.h1 == 1);
  CHECK(mixed.generator_count == 3);
  CHECK_FALSE(mixed.gradings_uniform);

  const auto two = check_strong(genus2_strong());
  CHECK(two.is_strong);
  CHECK(two.h1 == 2);
}

TEST_CASE("lens diagrams") {
  const auto one = lens_diagram(1);
  CHECK(one.genus == 1);
  REQUIRE(one.beta_words.size() == 1);
  CHECK(one.beta_words[0] ==
        std::vector<IntersectionPoint>{{0, 1}});

  const auto five = check_strong(lens_diagram(5));
  CHECK(five.is_strong);
  CHECK(five.h1 == 5);

  CHECK(presentation_of(lens_diagram(2)).relators[0] == Word{{0, 1}, {0, 1}});
  CHECK_THROWS_AS(lens_diagram(0), std::invalid_argument);
}

TEST_CASE("flip_alpha_orientation") {
  const auto flipped = flip_alpha_orientation(lens_diagram(3), 0);
  for (const auto& p : flipped.beta_words[0]) CHECK(p.sign == -1);
  const auto report = check_strong(flipped);
  CHECK(report.is_strong);
  CHECK(report.minus_gradings == 3);

  CHECK(flip_alpha_orientation(flipped, 0) == lens_diagram(3));

  CHECK(euler_characteristic(flip_alpha_orientation(genus2_strong(), 1)) == 2);
  CHECK_THROWS_AS(flip_alpha_orientation(lens_diagram(1), 1),
                  std::invalid_argument);
}

TEST_CASE("strongness is invariant under flips and rotations") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    const auto h = oracle::random_diagram(rng, 3, 5);
    const auto base = check_strong(h);

    const int alpha = static_cast<int>(rng() % h.genus);
    const auto flipped = check_strong(flip_alpha_orientation(h, alpha));
    CHECK(base.is_strong == flipped.is_strong);
    CHECK(base.gradings_uniform == flipped.gradings_uniform);

    const int j = static_cast<int>(rng() % h.genus);
    const auto rotated =
        check_strong(rotate_beta_word(h, j, static_cast<int>(rng() % 7)));
    CHECK(base.is_strong == rotated.is_strong);
    CHECK(base.gradings_uniform == rotated.gradings_uniform);
    CHECK(base.generator_count == rotated.generator_count);
  }
}

TEST_CASE("euler characteristic equals the determinant") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 500; ++trial) {
    const auto h = oracle::random_diagram(rng, 4, 6);
    const auto strong = check_strong(h);
    CHECK(strong.euler_characteristic == strong.det);
    // Generator count is the permanent; it bounds |det|, with equality
    // exactly when all gradings agree.
    const long long abs_det = strong.det < 0 ? -strong.det : strong.det;
    CHECK(abs_det <= strong.generator_count);
    CHECK((abs_det == strong.generator_count) == strong.gradings_uniform);
    CHECK(strong.generator_count ==
          oracle::naive_permanent(count_matrix(h)));
  }
}

TEST_CASE("epsilon entries mirror the count matrix and sign mixtures") {
  std::mt19937_64 rng(91);
  for (int trial = 0; trial < 200; ++trial) {
    const auto h = oracle::random_diagram(rng, 4, 6);
    const auto eps = epsilon_matrix(presentation_of(h));
    const auto counts = count_matrix(h);
    for (int i = 0; i < h.genus; ++i) {
      for (int j = 0; j < h.genus; ++j) {
        CHECK((eps.at(i, j) == Sign::Zero) == (counts.at(i, j) == 0));
        bool plus = false, minus = false;
        for (const auto& p : h.beta_words[j]) {
          if (p.alpha != i) continue;
          (p.sign > 0 ? plus : minus) = true;
        }
        CHECK((eps.at(i, j) == Sign::Star) == (plus && minus));
      }
    }
  }
}

TEST_CASE("strong diagrams certify non-left-orderability") {
  std::mt19937_64 rng(61);
  int strong_found = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const auto h = oracle::random_diagram(rng, 3, 5);
    const auto strong = check_strong(h);
    if (!strong.is_strong) continue;
    ++strong_found;
    const auto verdict =
        check_formal_determinant(epsilon_matrix(presentation_of(h)));
    CHECK(verdict.not_left_orderable);
  }
  CHECK(strong_found > 20);
}
