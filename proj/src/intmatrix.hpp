#pragma once

#include <vector>

#include "errors.hpp"

namespace hg {

struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<long long> entries;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c, long long fill = 0);
  IntMatrix(int r, int c, std::initializer_list<long long> vals);

  long long& at(int i, int j) {
    return entries[static_cast<size_t>(i) * cols + j];
  }
  long long at(int i, int j) const {
    return entries[static_cast<size_t>(i) * cols + j];
  }
  bool square() const { return rows == cols; }

  bool operator==(const IntMatrix&) const = default;
};

// Exact determinant by fraction-free (Bareiss) elimination over 128-bit
// intermediates.  No floating point.  Throws ResourceLimitError if an
// intermediate or the result does not fit, std::invalid_argument if the
// matrix is not square.  The 0x0 determinant is 1.
long long det_exact(const IntMatrix& m);

}  // namespace hg
