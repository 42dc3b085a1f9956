#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace leuven::oracle {

/// Dynamic-programming matrix of prefix distances: at(i, j) is the edit
/// distance between a[1..i] and b[1..j]. Row 0 and column 0 hold the
/// boundary values j and i.
class DMatrix {
 public:
  DMatrix(std::size_t m, std::size_t n)
      : rows_(m + 1), cols_(n + 1), cells_(rows_ * cols_, 0) {}

  int at(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }
  int& at(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t rows_, cols_;
  std::vector<int> cells_;
};

/// Horizontal and vertical neighbour differences of a DMatrix, each in
/// {-1, 0, 1}. Interior cells are stored; reads at column 0 (dv) and
/// row 0 (dh) resolve to the fixed boundary value +1.
class DiffMatrices {
 public:
  DiffMatrices(std::size_t m, std::size_t n)
      : m_(m), n_(n), dv_(m * n, 0), dh_(m * n, 0) {}

  /// dv(i, j) = D[i][j] - D[i-1][j]; requires 1 <= i <= m, 0 <= j <= n.
  int dv(std::size_t i, std::size_t j) const {
    return j == 0 ? 1 : dv_[(i - 1) * n_ + (j - 1)];
  }
  /// dh(i, j) = D[i][j] - D[i][j-1]; requires 0 <= i <= m, 1 <= j <= n.
  int dh(std::size_t i, std::size_t j) const {
    return i == 0 ? 1 : dh_[(i - 1) * n_ + (j - 1)];
  }

  void set(std::size_t i, std::size_t j, int dv, int dh) {
    dv_[(i - 1) * n_ + (j - 1)] = static_cast<std::int8_t>(dv);
    dh_[(i - 1) * n_ + (j - 1)] = static_cast<std::int8_t>(dh);
  }

  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }

 private:
  std::size_t m_, n_;
  std::vector<std::int8_t> dv_, dh_;
};

struct WfResult {
  int distance;
  DMatrix matrix;
};

/// Unit-cost edit distance (insert, delete, substitute) with the full
/// prefix-distance matrix. Empty strings are legal.
WfResult wf_distance(std::string_view a, std::string_view b);

/// Neighbour differences derived cell by cell from wf_distance's matrix.
DiffMatrices diff_matrices(std::string_view a, std::string_view b);

struct CellDeltas {
  int dv_out;
  int dh_out;
};

/// Single-cell update in differential form: from the character equality
/// and the incoming differences, the outgoing ones. Inputs are validated
/// (eq in {0,1}, deltas in {-1,0,1}).
CellDeltas cell_reference(int eq, int dv_in, int dh_in);

/// Edit distance restricted to the band |i-j| <= half_width, with
/// out-of-band neighbours excluded from the minimum. Equals wf_distance
/// whenever the band covers an optimal path (for m == n: distance <=
/// 2*half_width); never smaller than it. Throws BandTooNarrow when
/// half_width < |m-n|.
int banded_distance(std::string_view a, std::string_view b, std::size_t half_width);

}  // namespace leuven::oracle
