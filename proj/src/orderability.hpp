#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "signs.hpp"

namespace hg {

// A vector of row multipliers, entries in {Zero, Plus, Minus}.
using RowScaling = std::vector<Sign>;

// Entry (i,j) of the result is sign_mul(d[i], e(i,j)).  Throws
// std::invalid_argument on length mismatch or a Star multiplier.
SignMatrix scale_rows(const SignMatrix& e, const RowScaling& d);

// The least column index that is nonzero and whose nonzero entries are all
// Plus or all Minus; a Star entry disqualifies its column.  Empty when no
// column qualifies.
std::optional<int> uniform_sign_column(const SignMatrix& m);

struct ScalingSweepResult {
  bool holds = false;  // every nonzero scaling left a uniform-sign column
  std::optional<RowScaling> witness;  // least failing scaling when !holds
  long long scalings_checked = 0;
};

// Sweeps all 3^m - 1 nonzero row scalings of e in lexicographic order
// (digit order Zero < Plus < Minus).  holds == true certifies that the group
// presented by any presentation with sign matrix e is not left-orderable;
// holds == false is inconclusive and carries the first scaling under which
// no column has uniform nonzero signs.  Throws ResourceLimitError when e has
// more than max_rows rows.
ScalingSweepResult sweep_row_scalings(const SignMatrix& e,
                                      int max_rows = kDefaultMaxBruteforceRows);

// Verdict of the formal-determinant criterion on a square sign matrix.
// The criterion certifies non-left-orderability when (1) some permutation
// summand is nonzero, (2) no nonzero summand contains a Star, and (3) all
// star-free summands carry one common sign.  When a condition fails the
// verdict is inapplicable (never "orderable") and names the lowest-numbered
// violated condition with witnesses.
struct OrderabilityVerdict {
  bool not_left_orderable = false;
  int failed_condition = 0;  // 1, 2 or 3 when !not_left_orderable

  std::optional<Perm> witness_sigma0;  // nonzero star-free summand (positive case)
  std::optional<Sign> common_sign;     // its common value, Plus or Minus

  std::optional<Perm> star_witness;  // condition 2: summand containing a Star
  std::optional<std::pair<Perm, Perm>> conflict;  // condition 3: (+, -) pair

  DetClassification det;
};

OrderabilityVerdict check_formal_determinant(const SignMatrix& e,
                                             int max_n = kDefaultMaxPermN);

// For a square matrix whose diagonal entries are all Plus or Minus: when
// every column has a nonzero off-diagonal entry different from that column's
// diagonal entry, walks from the least row index, at each step moving to the
// least such row for the current column, until an index repeats; returns the
// resulting cycle (i1,...,ik) of distinct indices with m(i_{j+1}, i_j)
// nonzero and different from m(i_j, i_j), taken cyclically.  Returns empty
// when some column has no qualifying entry.  Throws std::invalid_argument
// when the diagonal contains Zero or Star.
std::optional<std::vector<int>> find_cycle_witness(const SignMatrix& m);

// Checks that the cycle found above contradicts a one-signed determinant:
// the k-cycle permutation tau with tau(i_j) = i_{j+1}, read at positions
// (tau(i), i), yields a nonzero summand that either contains a Star or
// equals Minus times the diagonal summand.  Throws std::invalid_argument on
// a malformed cycle.
bool verify_cycle_contradiction(const SignMatrix& m,
                                const std::vector<int>& cycle);

}  // namespace hg
