#include "intmatrix.hpp"

#include <cstdint>
#include <limits>
#include <utility>

namespace hg {

IntMatrix::IntMatrix(int r, int c, long long fill)
    : rows(r), cols(c), entries(static_cast<size_t>(r) * c, fill) {
  if (r < 0 || c < 0) {
    throw std::invalid_argument("IntMatrix: negative dimension");
  }
}

IntMatrix::IntMatrix(int r, int c, std::initializer_list<long long> vals)
    : rows(r), cols(c), entries(vals) {
  if (r < 0 || c < 0 || entries.size() != static_cast<size_t>(r) * c) {
    throw std::invalid_argument("IntMatrix: entry count mismatch");
  }
}

namespace {

using i128 = __int128;

i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw ResourceLimitError("det_exact: intermediate value overflow");
  }
  return r;
}

i128 checked_sub(i128 a, i128 b) {
  i128 r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw ResourceLimitError("det_exact: intermediate value overflow");
  }
  return r;
}

}  // namespace

long long det_exact(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("det_exact: matrix not square");
  const int n = m.rows;
  if (n == 0) return 1;

  std::vector<i128> w(m.entries.begin(), m.entries.end());
  auto at = [&](int i, int j) -> i128& { return w[static_cast<size_t>(i) * n + j]; };

  int sign = 1;
  i128 prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r) {
        if (at(r, k) != 0) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) return 0;  // zero column below the diagonal
      for (int j = k; j < n; ++j) std::swap(at(k, j), at(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        // Exact division: every intermediate is a minor of the input.
        at(i, j) = checked_sub(checked_mul(at(i, j), at(k, k)),
                               checked_mul(at(i, k), at(k, j))) /
                   prev;
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }

  const i128 det = sign * at(n - 1, n - 1);
  if (det > std::numeric_limits<long long>::max() ||
      det < std::numeric_limits<long long>::min()) {
    throw ResourceLimitError("det_exact: determinant exceeds 64 bits");
  }
  return static_cast<long long>(det);
}

}  // namespace hg
