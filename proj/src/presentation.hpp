#pragma once

#include <vector>

#include "signs.hpp"

namespace hg {

// One letter of a relator word: a generator (0-based) raised to +1 or -1.
struct Letter {
  int generator = 0;
  int exponent = 1;

  bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

// A finite group presentation with num_generators generators and one relator
// word per entry of `relators`.  Words are kept verbatim: no free reduction
// is ever applied implicitly, since the sign matrix below reads occurrences
// as written.
struct Presentation {
  int num_generators = 0;
  std::vector<Word> relators;

  bool operator==(const Presentation&) const = default;
};

// Throws std::invalid_argument on out-of-range generators or exponents
// outside {+1,-1}.
void validate_presentation(const Presentation& p);

// The m x n sign matrix of a presentation: entry (i,j) is Zero when
// generator i does not occur in relator j, Plus when it occurs only with
// exponent +1, Minus when only with -1, and Star when both occur.
SignMatrix epsilon_matrix(const Presentation& p);

// True iff w reduces to the empty word by cancelling adjacent inverse pairs.
bool word_is_trivial_free_reduction(const Word& w);

}  // namespace hg
