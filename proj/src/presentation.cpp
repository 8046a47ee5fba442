#include "presentation.hpp"

namespace hg {

void validate_presentation(const Presentation& p) {
  if (p.num_generators < 0) {
    throw std::invalid_argument("presentation: negative generator count");
  }
  for (const Word& w : p.relators) {
    for (const Letter& l : w) {
      if (l.generator < 0 || l.generator >= p.num_generators) {
        throw std::invalid_argument("presentation: generator index out of range");
      }
      if (l.exponent != 1 && l.exponent != -1) {
        throw std::invalid_argument("presentation: exponent must be +1 or -1");
      }
    }
  }
}

SignMatrix epsilon_matrix(const Presentation& p) {
  validate_presentation(p);
  const int m = p.num_generators;
  const int n = static_cast<int>(p.relators.size());
  SignMatrix e(m, n, Sign::Zero);
  for (int j = 0; j < n; ++j) {
    for (const Letter& l : p.relators[j]) {
      Sign occ = l.exponent > 0 ? Sign::Plus : Sign::Minus;
      Sign& cell = e.at(l.generator, j);
      if (cell == Sign::Zero) {
        cell = occ;
      } else if (cell != occ) {
        cell = Sign::Star;
      }
    }
  }
  return e;
}

bool word_is_trivial_free_reduction(const Word& w) {
  std::vector<Letter> stack;
  for (const Letter& l : w) {
    if (!stack.empty() && stack.back().generator == l.generator &&
        stack.back().exponent == -l.exponent) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return stack.empty();
}

}  // namespace hg
