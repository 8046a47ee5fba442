#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "limits.hpp"

namespace hg {

// The sign symbols {0, +, -, *}.  '*' stands for a real number whose sign is
// unknown; it absorbs every nonzero factor under multiplication.
enum class Sign : unsigned char { Zero = 0, Plus = 1, Minus = 2, Star = 3 };

constexpr bool is_nonzero(Sign s) { return s != Sign::Zero; }

// Commutative, associative multiplication: 0 absorbs everything,
// + is the identity, -*- = +, and * absorbs among nonzero factors.
Sign sign_mul(Sign a, Sign b);

// Left fold of sign_mul with identity Plus; the empty product is Plus.
Sign sign_product(std::span<const Sign> seq);

// Permutations are image vectors: sigma[i] is the image of i (0-based).
using Perm = std::vector<int>;

// Plus for even permutations, Minus for odd.  Throws std::invalid_argument
// if sigma is not a bijection on {0..n-1}.
Sign perm_sign(const Perm& sigma);

struct SignMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Sign> entries;  // row-major, rows*cols values

  SignMatrix() = default;
  SignMatrix(int r, int c, Sign fill = Sign::Zero);

  Sign& at(int i, int j) { return entries[static_cast<size_t>(i) * cols + j]; }
  Sign at(int i, int j) const {
    return entries[static_cast<size_t>(i) * cols + j];
  }
  bool square() const { return rows == cols; }
  SignMatrix transposed() const;

  bool operator==(const SignMatrix&) const = default;
};

// Scan of the formal determinant sum over permutations sigma of
// sign(sigma) * e(0,sigma(0)) * ... * e(n-1,sigma(n-1)).  Summands are
// classified, never added: we record whether any summand is nonzero, whether
// a nonzero summand contains a *, and which values in {+,-} occur among the
// star-free summands.  Witnesses are the lexicographically least
// permutations with the respective property, so the output is canonical and
// in particular invariant under transposition of the matrix.
struct DetClassification {
  bool has_nonzero_summand = false;
  bool star_in_nonzero_summand = false;
  bool plus_seen = false;   // a star-free nonzero summand with value +
  bool minus_seen = false;  // ... with value -
  std::optional<Perm> witness_sigma0;  // least permutation with nonzero summand
  std::optional<Perm> star_witness;    // least summand containing a *
  std::optional<Perm> plus_witness;
  std::optional<Perm> minus_witness;

  bool signs_conflict() const { return plus_seen && minus_seen; }
  std::optional<std::pair<Perm, Perm>> conflict_witness() const {
    if (!signs_conflict()) return std::nullopt;
    return std::make_pair(*plus_witness, *minus_witness);
  }
};

// Enumerates nonzero-summand permutations by row-by-row backtracking,
// pruning on Zero entries; full n! is never materialized.  Stops early only
// once no field can change further (a * was found and both signs occurred).
// Throws ResourceLimitError when the matrix is larger than max_n, and
// std::invalid_argument when it is not square.
DetClassification classify_formal_det(const SignMatrix& m,
                                      int max_n = kDefaultMaxPermN);

}  // namespace hg
