#pragma once

#include <optional>
#include <vector>

#include "intmatrix.hpp"
#include "presentation.hpp"
#include "signs.hpp"

namespace hg {

// One transverse intersection of an alpha curve with the beta curve whose
// word it sits in.  alpha is 0-based; sign is the local intersection number.
struct IntersectionPoint {
  int alpha = 0;
  int sign = 1;

  bool operator==(const IntersectionPoint&) const = default;
};

// A genus-g Heegaard diagram reduced to its combinatorial shadow: one cyclic
// word per beta curve listing the alpha intersections in traversal order.
// Words are cyclic; storage starts at an arbitrary point and every operation
// on diagrams is invariant under rotating a word.
struct HeegaardDiagram {
  int genus = 0;
  std::vector<std::vector<IntersectionPoint>> beta_words;

  bool operator==(const HeegaardDiagram&) const = default;
};

// Throws std::invalid_argument unless genus >= 1, there are exactly genus
// beta words, every alpha index is in range and every sign is +1 or -1.
void validate_diagram(const HeegaardDiagram& h);

// The presentation with one generator per alpha curve and relator j the word
// read along beta word j: generator = point's alpha, exponent = point's sign.
Presentation presentation_of(const HeegaardDiagram& h);

// C(i,j) = number of intersection points of alpha_i with beta_j.
IntMatrix count_matrix(const HeegaardDiagram& h);

// A(i,j) = sum of the signs of those points (algebraic intersection number).
IntMatrix algebraic_matrix(const HeegaardDiagram& h);

// |det A| as the order of H1, exactly; empty when det A = 0 (positive first
// Betti number, not a rational homology sphere).
std::optional<long long> h1_order(const HeegaardDiagram& h);

// A generator: a permutation sigma and, for each i, one intersection point
// of alpha_i with beta word sigma[i], identified by its position in that
// word.  grading = sign(sigma) * product of the chosen point signs.
struct Generator {
  Perm sigma;
  std::vector<int> positions;
  int grading = 1;

  bool operator==(const Generator&) const = default;
};

// All generators in canonical order: lexicographic in sigma, then in the
// position choices.  The count equals the permanent of the count matrix.
// Throws ResourceLimitError when more than cap generators exist.
std::vector<Generator> generators(const HeegaardDiagram& h,
                                  long long cap = kDefaultMaxGenerators);

// Sum of gradings over all generators; equals det(algebraic_matrix(h)).
long long euler_characteristic(const HeegaardDiagram& h,
                               long long cap = kDefaultMaxGenerators);

struct StrongReport {
  std::optional<long long> h1;  // empty = b1 positive
  long long det = 0;
  long long generator_count = 0;
  long long plus_gradings = 0;
  long long minus_gradings = 0;
  bool gradings_uniform = false;
  long long euler_characteristic = 0;
  bool is_strong = false;  // h1 finite and generator_count == h1

  bool operator==(const StrongReport&) const = default;
};

// Decides whether h is a strong diagram: the generator count must equal the
// (finite) order of H1.  When that holds all gradings are equal.
StrongReport check_strong(const HeegaardDiagram& h,
                          long long cap = kDefaultMaxGenerators);

// The standard genus-1 diagram of the lens space L(p,q): one beta word of p
// positive points on the single alpha curve.  p = 1 gives the genus-1
// diagram of the 3-sphere.  The classical q does not affect this data.
HeegaardDiagram lens_diagram(long long p);

// Negates the sign of every intersection point on alpha_i (0-based).
HeegaardDiagram flip_alpha_orientation(const HeegaardDiagram& h, int alpha);

// Rotates beta word j left by k positions; represents the same cyclic word.
HeegaardDiagram rotate_beta_word(const HeegaardDiagram& h, int j, int k);

}  // namespace hg
