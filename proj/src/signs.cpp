#include "signs.hpp"

#include <bit>
#include <cstdint>

namespace hg {

namespace {

constexpr Sign Z = Sign::Zero;
constexpr Sign P = Sign::Plus;
constexpr Sign M = Sign::Minus;
constexpr Sign S = Sign::Star;

constexpr Sign kMulTable[4][4] = {
    {Z, Z, Z, Z},
    {Z, P, M, S},
    {Z, M, P, S},
    {Z, S, S, S},
};

}  // namespace

Sign sign_mul(Sign a, Sign b) {
  return kMulTable[static_cast<int>(a)][static_cast<int>(b)];
}

Sign sign_product(std::span<const Sign> seq) {
  Sign acc = Sign::Plus;
  for (Sign s : seq) acc = sign_mul(acc, s);
  return acc;
}

Sign perm_sign(const Perm& sigma) {
  const int n = static_cast<int>(sigma.size());
  std::vector<char> seen(n, 0);
  for (int v : sigma) {
    if (v < 0 || v >= n || seen[v]) {
      throw std::invalid_argument("perm_sign: not a bijection on {0..n-1}");
    }
    seen[v] = 1;
  }
  // Parity is n minus the number of cycles.
  std::vector<char> visited(n, 0);
  int transpositions = 0;
  for (int i = 0; i < n; ++i) {
    if (visited[i]) continue;
    int len = 0;
    for (int j = i; !visited[j]; j = sigma[j]) {
      visited[j] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return (transpositions % 2 == 0) ? Sign::Plus : Sign::Minus;
}

SignMatrix::SignMatrix(int r, int c, Sign fill)
    : rows(r), cols(c), entries(static_cast<size_t>(r) * c, fill) {
  if (r < 0 || c < 0) {
    throw std::invalid_argument("SignMatrix: negative dimension");
  }
}

SignMatrix SignMatrix::transposed() const {
  SignMatrix t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

namespace {

struct DetScan {
  const SignMatrix& m;
  int n;
  DetClassification out;
  Perm sigma;
  std::uint64_t used = 0;

  bool settled() const {
    return out.star_in_nonzero_summand && out.plus_seen && out.minus_seen;
  }

  void record(int inv_parity, int star_count, int minus_count) {
    if (!out.has_nonzero_summand) {
      out.has_nonzero_summand = true;
      out.witness_sigma0 = sigma;
    }
    if (star_count > 0) {
      if (!out.star_in_nonzero_summand) {
        out.star_in_nonzero_summand = true;
        out.star_witness = sigma;
      }
      return;
    }
    if ((inv_parity + minus_count) % 2 == 0) {
      if (!out.plus_seen) {
        out.plus_seen = true;
        out.plus_witness = sigma;
      }
    } else if (!out.minus_seen) {
      out.minus_seen = true;
      out.minus_witness = sigma;
    }
  }

  // Returns true when the scan can stop.  Columns are tried in increasing
  // order, so summand permutations are visited in lexicographic order and
  // the first hit for each property is the least witness.
  bool walk(int row, int inv_parity, int star_count, int minus_count) {
    if (row == n) {
      record(inv_parity, star_count, minus_count);
      return settled();
    }
    for (int c = 0; c < n; ++c) {
      if (used >> c & 1) continue;
      const Sign s = m.at(row, c);
      if (s == Sign::Zero) continue;
      sigma[row] = c;
      const int added_inversions = std::popcount(used >> (c + 1));
      used |= std::uint64_t{1} << c;
      const bool stop =
          walk(row + 1, (inv_parity + added_inversions) & 1,
               star_count + (s == Sign::Star), minus_count + (s == Sign::Minus));
      used &= ~(std::uint64_t{1} << c);
      if (stop) return true;
    }
    return false;
  }
};

}  // namespace

DetClassification classify_formal_det(const SignMatrix& m, int max_n) {
  if (!m.square()) {
    throw std::invalid_argument("classify_formal_det: matrix must be square");
  }
  if (max_n < 0) {
    throw std::invalid_argument("classify_formal_det: negative size cap");
  }
  if (m.rows > max_n || m.rows > 63) {
    throw ResourceLimitError(
        "classify_formal_det: matrix size " + std::to_string(m.rows) +
        " exceeds the permutation cap " + std::to_string(max_n));
  }
  DetScan scan{m, m.rows, {}, Perm(static_cast<size_t>(m.rows)), 0};
  scan.walk(0, 0, 0, 0);
  return scan.out;
}

}  // namespace hg
