#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "leuven/backend.hpp"
#include "leuven/encoding.hpp"

namespace leuven::kernel {

/// How the three cell inputs are packed into one lookup key in [0,17]:
///   original:  (dv+1) + 3*(1+dh) + 9*eq
///   negated:   (1-dv) + 3*(1+dh) + 9*eq
/// The negated form flips the sign of the dv contribution, which halves
/// the coefficient on the noise terms dv and dh share deeper in the grid
/// (2 instead of 4), so it is the default.
enum class KeyEncoding { original, negated };

int key_of(KeyEncoding encoding, int dv, int dh, int eq);

struct KeyTriple {
  int dv;
  int dh;
  int eq;
};

/// Inverse of key_of for keys 0..17.
KeyTriple decode_key(KeyEncoding encoding, int key);

/// Packs a table of more than 16 values into a 16-entry lookup, relying
/// on the forced upper-half images to realize the overflow entries.
/// Throws PackingViolation when an overflow value cannot be represented.
Lut16 pack_lut(std::span<const int> values);

/// The single-bootstrap cell table: key -> 1 + min(-eq, dv, dh), packed
/// over all 18 reachable keys.
Lut16 build_min_lut(KeyEncoding encoding);

/// Which cells get computed: everything within |i-j| <= half_width.
struct BandSpec {
  enum class Mode { exact, skip, approx };

  Mode mode = Mode::exact;
  std::size_t half_width = 0;

  /// Full grid.
  static BandSpec exact(std::size_t m, std::size_t n) {
    return {Mode::exact, std::max(m, n)};
  }
  /// Narrowest band that still yields the exact distance for any input
  /// of these lengths.
  static BandSpec skip(std::size_t m, std::size_t n) {
    return {Mode::skip, (std::max(m, n) + 1) / 2};
  }
  /// Band of half-width ell: results are exact whenever the true
  /// distance stays within ell, otherwise only an upper bound.
  static BandSpec approx(std::size_t ell) { return {Mode::approx, ell}; }

  bool covers(std::size_t m, std::size_t n) const {
    return half_width >= (m > n ? m - n : n - m);
  }
  bool in_band(std::size_t i, std::size_t j) const {
    return (i > j ? i - j : j - i) <= half_width;
  }
};

/// Number of cells within half-width ell of the diagonal of an m-by-m
/// grid: m*(2*ell+1) - ell^2 - ell. Requires ell <= m.
std::uint64_t band_cell_count(std::uint64_t m, std::uint64_t ell);

/// One read of a stored differential: dv at (i,j) when vertical, else dh.
struct DeltaRead {
  bool vertical;
  std::size_t i;
  std::size_t j;
};
using Path = std::vector<DeltaRead>;

/// Monotone path hugging the diagonal from (0,0) to (m,n); every interior
/// read stays within max(1, |m-n|) of the diagonal.
Path staircase_path(std::size_t m, std::size_t n);

/// Down the boundary column, then across the last row.
Path last_row_path(std::size_t m, std::size_t n);

/// Banded storage for the differential ciphertexts. Reads at the
/// boundary (row 0 / column 0) and outside the band resolve to the fixed
/// +1 differential as a noiseless constant. By default only the rolling
/// frontier plus explicitly requested cells are kept alive; retain_all
/// keeps every cell for inspection.
class DeltaGrid {
 public:
  DeltaGrid(Backend& backend, std::size_t m, std::size_t n, BandSpec band,
            bool retain_all = false);

  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }
  const BandSpec& band() const { return band_; }

  /// Marks the cells a later extraction will read, so store() keeps them.
  void request(const Path& path);

  /// dv at (i,j) for 1 <= i <= m, 0 <= j <= n (j == 0 is the boundary).
  SimCiphertext read_dv(std::size_t i, std::size_t j) const;
  /// dh at (i,j) for 0 <= i <= m, 1 <= j <= n (i == 0 is the boundary).
  SimCiphertext read_dh(std::size_t i, std::size_t j) const;

  /// Records the outputs of cell (i,j); overwrites the row/column frontier.
  void store(std::size_t i, std::size_t j, SimCiphertext dv, SimCiphertext dh);

 private:
  static std::uint64_t slot(std::size_t i, std::size_t j) {
    return (static_cast<std::uint64_t>(i) << 32) | j;
  }

  Backend* backend_;
  std::size_t m_, n_;
  BandSpec band_;
  bool retain_all_;
  // frontier: last stored differential per row / per column, tagged with
  // the coordinate it belongs to
  std::vector<std::optional<std::pair<std::size_t, SimCiphertext>>> v_row_;
  std::vector<std::optional<std::pair<std::size_t, SimCiphertext>>> h_col_;
  std::unordered_map<std::uint64_t, SimCiphertext> kept_v_, kept_h_;
  std::unordered_map<std::uint64_t, bool> wanted_v_, wanted_h_;
};

struct CellOutputs {
  SimCiphertext dv_out;
  SimCiphertext dh_out;
  SimCiphertext step;  // the bootstrap output 1 + min(-eq, dv, dh)
};

/// One grid cell: a single bootstrap on the packed key, then both
/// outputs by subtraction.
CellOutputs cell_kernel(Backend& backend, const SimCiphertext& dv_in,
                        const SimCiphertext& dh_in, const SimCiphertext& eq9,
                        const Lut16& min_lut, KeyEncoding encoding);

/// Exact noise variance the packed key would carry, including
/// cancellations between sources shared by dv_in and dh_in.
std::int64_t predict_key_variance(const Backend& backend, const SimCiphertext& dv_in,
                                  const SimCiphertext& dh_in, const SimCiphertext& eq9,
                                  KeyEncoding encoding);

/// When the upcoming key would exceed the budget, refreshes the noisy
/// differential operands in place (shifted into the programmable half
/// and back) so the cell bootstrap cannot fail. Returns the number of
/// refreshes issued. Needs a budget of at least 11, the key variance
/// floor with freshly refreshed operands.
std::uint64_t refresh_if_needed(Backend& backend, SimCiphertext& dv_in,
                                SimCiphertext& dh_in, const SimCiphertext& eq9,
                                KeyEncoding encoding);

/// Supplies the encrypted scaled equality bit for cell (i,j), 1-based.
using Eq9Provider = std::function<SimCiphertext(std::size_t, std::size_t)>;

/// Instrumentation hook: operands as they enter the bootstrap (after any
/// refresh) plus the predicted key variance.
struct CellObservation {
  std::size_t i;
  std::size_t j;
  const SimCiphertext& dv_in;
  const SimCiphertext& dh_in;
  const SimCiphertext& eq9;
  std::int64_t key_variance;
};

struct DistanceOptions {
  KeyEncoding encoding = KeyEncoding::negated;
  bool retain_all = false;
  std::function<void(const CellObservation&)> observer;
};

struct DistanceRun {
  SimCiphertext score;
  std::uint64_t visited_cells = 0;
  std::uint64_t equality_pbs = 0;
  std::uint64_t kernel_pbs = 0;
  std::uint64_t refreshes = 0;
  std::int64_t max_key_variance = 0;
  std::optional<DeltaGrid> grid;  // populated when retain_all
};

/// Core banded traversal: one kernel bootstrap per in-band cell, noise
/// refreshes scheduled so no bootstrap ever exceeds the budget, score
/// extracted along a band-appropriate path with linear operations only.
/// Requires band.covers(m, n) and a budget of at least 11 (the key
/// variance floor after refreshing both operands).
DistanceRun distance(Backend& backend, const Eq9Provider& eq9_provider, std::size_t m,
                     std::size_t n, const BandSpec& band,
                     const DistanceOptions& options = {});

/// Adds up the requested differential reads; no bootstraps.
SimCiphertext extract_along(Backend& backend, const DeltaGrid& grid, const Path& path);

/// Band-appropriate extraction: last row for a full grid, diagonal
/// staircase otherwise.
SimCiphertext extract_score(Backend& backend, const DeltaGrid& grid);

/// Convenience pipeline over two encrypted strings with the folded
/// on-line equality circuit as provider.
DistanceRun distance_encrypted(Backend& backend, const EncryptedString& a,
                               const EncryptedString& b, const BandSpec& band,
                               const DistanceOptions& options = {});

}  // namespace leuven::kernel
