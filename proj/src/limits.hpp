#pragma once

namespace hg {

inline constexpr long long kDefaultMaxGenerators = 1'000'000;
inline constexpr int kDefaultMaxPermN = 12;
inline constexpr int kDefaultMaxBruteforceRows = 16;

// Caps for the super-polynomial enumerations.  Exceeding a cap raises
// ResourceLimitError; results are never silently truncated.
struct Limits {
  long long max_generators = kDefaultMaxGenerators;  // generator/matching lists
  int max_perm_n = kDefaultMaxPermN;                 // formal determinant size
  int max_bruteforce_rows = kDefaultMaxBruteforceRows;  // 3^m scaling sweep
};

}  // namespace hg
