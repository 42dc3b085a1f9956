#include "leuven/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "leuven/errors.hpp"

namespace leuven::oracle {

WfResult wf_distance(std::string_view a, std::string_view b) {
  const std::size_t m = a.size();
  const std::size_t n = b.size();
  DMatrix d(m, n);
  for (std::size_t i = 0; i <= m; ++i) d.at(i, 0) = static_cast<int>(i);
  for (std::size_t j = 0; j <= n; ++j) d.at(0, j) = static_cast<int>(j);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (a[i - 1] == b[j - 1]) {
        d.at(i, j) = d.at(i - 1, j - 1);
      } else {
        d.at(i, j) = 1 + std::min({d.at(i - 1, j), d.at(i, j - 1), d.at(i - 1, j - 1)});
      }
    }
  }
  int dist = d.at(m, n);
  return {dist, std::move(d)};
}

DiffMatrices diff_matrices(std::string_view a, std::string_view b) {
  const auto [dist, d] = wf_distance(a, b);
  (void)dist;
  const std::size_t m = a.size();
  const std::size_t n = b.size();
  DiffMatrices diffs(m, n);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      diffs.set(i, j, d.at(i, j) - d.at(i - 1, j), d.at(i, j) - d.at(i, j - 1));
    }
  }
  return diffs;
}

CellDeltas cell_reference(int eq, int dv_in, int dh_in) {
  if (eq != 0 && eq != 1) {
    throw OutOfRangeValue("eq must be 0 or 1, got " + std::to_string(eq));
  }
  if (dv_in < -1 || dv_in > 1 || dh_in < -1 || dh_in > 1) {
    throw OutOfRangeValue("differentials must lie in {-1,0,1}");
  }
  const int step = std::min({-eq, dv_in, dh_in}) + 1;
  return {step - dh_in, step - dv_in};
}

int banded_distance(std::string_view a, std::string_view b, std::size_t half_width) {
  const std::size_t m = a.size();
  const std::size_t n = b.size();
  const std::size_t len_gap = m > n ? m - n : n - m;
  if (half_width < len_gap) {
    throw BandTooNarrow("half width " + std::to_string(half_width) +
                        " below length difference " + std::to_string(len_gap));
  }
  // Boundary row/column values are always available; interior cells are
  // relaxed only inside the band, everything else stays unreachable.
  constexpr int kUnreachable = std::numeric_limits<int>::max() / 2;
  DMatrix d(m, n);
  for (std::size_t i = 0; i <= m; ++i)
    for (std::size_t j = 0; j <= n; ++j) d.at(i, j) = kUnreachable;
  for (std::size_t i = 0; i <= m; ++i) d.at(i, 0) = static_cast<int>(i);
  for (std::size_t j = 0; j <= n; ++j) d.at(0, j) = static_cast<int>(j);
  for (std::size_t i = 1; i <= m; ++i) {
    const std::size_t lo = i > half_width ? i - half_width : 1;
    const std::size_t hi = std::min(n, i + half_width);
    for (std::size_t j = std::max<std::size_t>(lo, 1); j <= hi; ++j) {
      const int diag = d.at(i - 1, j - 1) + (a[i - 1] == b[j - 1] ? 0 : 1);
      const int up = d.at(i - 1, j) + 1;
      const int left = d.at(i, j - 1) + 1;
      d.at(i, j) = std::min({diag, up, left});
    }
  }
  return d.at(m, n);
}

}  // namespace leuven::oracle
