#include "orderability.hpp"

#include <algorithm>
#include <string>

namespace hg {

SignMatrix scale_rows(const SignMatrix& e, const RowScaling& d) {
  if (static_cast<int>(d.size()) != e.rows) {
    throw std::invalid_argument("scale_rows: scaling length != row count");
  }
  for (Sign s : d) {
    if (s == Sign::Star) {
      throw std::invalid_argument("scale_rows: Star is not a valid multiplier");
    }
  }
  SignMatrix out(e.rows, e.cols);
  for (int i = 0; i < e.rows; ++i)
    for (int j = 0; j < e.cols; ++j) out.at(i, j) = sign_mul(d[i], e.at(i, j));
  return out;
}

std::optional<int> uniform_sign_column(const SignMatrix& m) {
  for (int j = 0; j < m.cols; ++j) {
    bool plus = false, minus = false, star = false;
    for (int i = 0; i < m.rows; ++i) {
      switch (m.at(i, j)) {
        case Sign::Plus: plus = true; break;
        case Sign::Minus: minus = true; break;
        case Sign::Star: star = true; break;
        case Sign::Zero: break;
      }
    }
    if (!star && (plus != minus)) return j;
  }
  return std::nullopt;
}

namespace {

// Does some column of e, with row i multiplied by d[i], have uniform nonzero
// signs?  Equivalent to uniform_sign_column(scale_rows(e, d)) without
// materializing the scaled matrix.
bool has_uniform_column_scaled(const SignMatrix& e, const RowScaling& d) {
  for (int j = 0; j < e.cols; ++j) {
    bool plus = false, minus = false, star = false;
    for (int i = 0; i < e.rows; ++i) {
      switch (sign_mul(d[i], e.at(i, j))) {
        case Sign::Plus: plus = true; break;
        case Sign::Minus: minus = true; break;
        case Sign::Star: star = true; break;
        case Sign::Zero: break;
      }
    }
    if (!star && (plus != minus)) return true;
  }
  return false;
}

// Advance d through {Zero, Plus, Minus}^m in lexicographic order, leftmost
// digit most significant.
void next_scaling(RowScaling& d) {
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) {
    if (d[i] == Sign::Zero) {
      d[i] = Sign::Plus;
      return;
    }
    if (d[i] == Sign::Plus) {
      d[i] = Sign::Minus;
      return;
    }
    d[i] = Sign::Zero;  // carry
  }
}

}  // namespace

ScalingSweepResult sweep_row_scalings(const SignMatrix& e, int max_rows) {
  const int m = e.rows;
  if (m < 1) throw std::invalid_argument("sweep_row_scalings: need >= 1 row");
  if (m > max_rows || m > 39) {
    throw ResourceLimitError("sweep_row_scalings: " + std::to_string(m) +
                             " rows exceeds the sweep cap " +
                             std::to_string(max_rows));
  }
  long long total = 1;
  for (int i = 0; i < m; ++i) total *= 3;

  ScalingSweepResult res;
  RowScaling d(m, Sign::Zero);
  for (long long step = 1; step < total; ++step) {
    next_scaling(d);
    ++res.scalings_checked;
    if (!has_uniform_column_scaled(e, d)) {
      res.holds = false;
      res.witness = d;
      return res;
    }
  }
  res.holds = true;
  return res;
}

OrderabilityVerdict check_formal_determinant(const SignMatrix& e, int max_n) {
  if (!e.square()) {
    throw std::invalid_argument("check_formal_determinant: matrix not square");
  }
  OrderabilityVerdict v;
  v.det = classify_formal_det(e, max_n);
  if (!v.det.has_nonzero_summand) {
    v.failed_condition = 1;
    return v;
  }
  if (v.det.star_in_nonzero_summand) {
    v.failed_condition = 2;
    v.star_witness = v.det.star_witness;
    return v;
  }
  if (v.det.signs_conflict()) {
    v.failed_condition = 3;
    v.conflict = v.det.conflict_witness();
    return v;
  }
  v.not_left_orderable = true;
  v.witness_sigma0 = v.det.witness_sigma0;
  v.common_sign = v.det.plus_seen ? Sign::Plus : Sign::Minus;
  return v;
}

namespace {

void require_pm_diagonal(const SignMatrix& m) {
  if (!m.square()) {
    throw std::invalid_argument("cycle witness: matrix not square");
  }
  for (int i = 0; i < m.rows; ++i) {
    const Sign s = m.at(i, i);
    if (s != Sign::Plus && s != Sign::Minus) {
      throw std::invalid_argument(
          "cycle witness: diagonal entries must be Plus or Minus");
    }
  }
}

// Least row r != j with m(r, j) nonzero and different from m(j, j).
std::optional<int> next_row_for_column(const SignMatrix& m, int j) {
  const Sign diag = m.at(j, j);
  for (int r = 0; r < m.rows; ++r) {
    if (r == j) continue;
    const Sign s = m.at(r, j);
    if (s != Sign::Zero && s != diag) return r;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> find_cycle_witness(const SignMatrix& m) {
  require_pm_diagonal(m);
  const int n = m.rows;
  // Every column must offer a step; otherwise that column already has
  // uniform nonzero signs and no cycle is promised.
  for (int j = 0; j < n; ++j) {
    if (!next_row_for_column(m, j)) return std::nullopt;
  }
  std::vector<int> seq;
  std::vector<int> pos_in_seq(n, -1);
  int cur = 0;  // least starting index; every diagonal entry is nonzero
  while (pos_in_seq[cur] < 0) {
    pos_in_seq[cur] = static_cast<int>(seq.size());
    seq.push_back(cur);
    cur = *next_row_for_column(m, cur);
  }
  // Drop the tail before the first repeated index.
  seq.erase(seq.begin(), seq.begin() + pos_in_seq[cur]);
  return seq;
}

bool verify_cycle_contradiction(const SignMatrix& m,
                                const std::vector<int>& cycle) {
  require_pm_diagonal(m);
  const int n = m.rows;
  const int k = static_cast<int>(cycle.size());
  if (k < 2) throw std::invalid_argument("cycle witness: cycle too short");
  std::vector<char> on_cycle(n, 0);
  for (int i : cycle) {
    if (i < 0 || i >= n || on_cycle[i]) {
      throw std::invalid_argument("cycle witness: malformed cycle");
    }
    on_cycle[i] = 1;
  }

  Sign diag_summand = Sign::Plus;
  for (int i = 0; i < n; ++i) diag_summand = sign_mul(diag_summand, m.at(i, i));

  // tau-summand entries are read at (tau(i), i): the diagonal off the cycle
  // and m(i_{j+1}, i_j) on it.
  Sign entry_product = Sign::Plus;
  for (int i = 0; i < n; ++i) {
    if (!on_cycle[i]) entry_product = sign_mul(entry_product, m.at(i, i));
  }
  for (int j = 0; j < k; ++j) {
    const int from = cycle[j];
    const int to = cycle[(j + 1) % k];
    const Sign s = m.at(to, from);
    if (s == Sign::Zero || s == m.at(from, from)) {
      throw std::invalid_argument("cycle witness: malformed cycle step");
    }
    entry_product = sign_mul(entry_product, s);
  }
  const Sign tau_sign = (k % 2 == 1) ? Sign::Plus : Sign::Minus;  // (-1)^(k-1)
  const Sign cycle_summand = sign_mul(tau_sign, entry_product);

  // A Star summand conflicts with the one-signed diagonal summand just as an
  // opposite-signed one does: it cannot carry the same definite sign.
  if (cycle_summand == Sign::Star) return true;
  return cycle_summand == sign_mul(Sign::Minus, diag_summand);
}

}  // namespace hg
