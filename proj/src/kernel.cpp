#include "leuven/kernel.hpp"

#include <array>
#include <string>

#include "leuven/equality.hpp"
#include "leuven/errors.hpp"

namespace leuven::kernel {

namespace {

constexpr int kKeyCount = 18;  // 3 * 3 * 2 packed input combinations

/// Key variance after both operands have been refreshed: 1 (dv) + 9
/// (3*dh) + 1 (eq9). Budgets below this cannot be honored by any
/// refresh schedule.
constexpr double kMinBudget = 11.0;

void check_delta(int v, const char* what) {
  if (v < -1 || v > 1) {
    throw OutOfRangeValue(std::string(what) + " must lie in {-1,0,1}");
  }
}

}  // namespace

int key_of(KeyEncoding encoding, int dv, int dh, int eq) {
  check_delta(dv, "dv");
  check_delta(dh, "dh");
  if (eq != 0 && eq != 1) throw OutOfRangeValue("eq must be 0 or 1");
  const int dv_part = encoding == KeyEncoding::original ? dv + 1 : 1 - dv;
  return dv_part + 3 * (1 + dh) + 9 * eq;
}

KeyTriple decode_key(KeyEncoding encoding, int key) {
  if (key < 0 || key >= kKeyCount) {
    throw OutOfRangeValue("key outside [0,18): " + std::to_string(key));
  }
  const int eq = key >= 9 ? 1 : 0;
  const int r = key % 9;
  const int dv_part = r % 3;
  const int dh = r / 3 - 1;
  const int dv = encoding == KeyEncoding::original ? dv_part - 1 : 1 - dv_part;
  return {dv, dh, eq};
}

Lut16 pack_lut(std::span<const int> values) {
  if (values.size() <= kLutSize || values.size() > 2 * kLutSize) {
    throw OutOfRangeValue("packed tables hold 17..32 values");
  }
  Lut16 lut;
  for (int i = 0; i < kLutSize; ++i) lut.entries[static_cast<std::size_t>(i)] = values[static_cast<std::size_t>(i)];
  validate_lut(lut);
  for (std::size_t k = kLutSize; k < values.size(); ++k) {
    if (negacyclic_eval(lut, static_cast<int>(k)) != values[k]) {
      throw PackingViolation("value at position " + std::to_string(k) +
                             " does not match its forced image");
    }
  }
  return lut;
}

Lut16 build_min_lut(KeyEncoding encoding) {
  std::array<int, kKeyCount> values{};
  for (int key = 0; key < kKeyCount; ++key) {
    const KeyTriple t = decode_key(encoding, key);
    values[static_cast<std::size_t>(key)] =
        1 + std::min({-t.eq, t.dv, t.dh});
  }
  return pack_lut(values);
}

std::uint64_t band_cell_count(std::uint64_t m, std::uint64_t ell) {
  if (ell > m) throw OutOfRangeValue("band half-width exceeds grid size");
  return m * (2 * ell + 1) - ell * ell - ell;
}

Path staircase_path(std::size_t m, std::size_t n) {
  Path path;
  path.reserve(m + n);
  if (m >= n) {
    const std::size_t d = m - n;
    for (std::size_t i = 1; i <= d; ++i) path.push_back({true, i, 0});
    for (std::size_t k = 1; k <= n; ++k) {
      path.push_back({false, d + k - 1, k});
      path.push_back({true, d + k, k});
    }
  } else {
    const std::size_t d = n - m;
    for (std::size_t j = 1; j <= d; ++j) path.push_back({false, 0, j});
    for (std::size_t k = 1; k <= m; ++k) {
      path.push_back({true, k, d + k - 1});
      path.push_back({false, k, d + k});
    }
  }
  return path;
}

Path last_row_path(std::size_t m, std::size_t n) {
  Path path;
  path.reserve(m + n);
  for (std::size_t i = 1; i <= m; ++i) path.push_back({true, i, 0});
  for (std::size_t j = 1; j <= n; ++j) path.push_back({false, m, j});
  return path;
}

DeltaGrid::DeltaGrid(Backend& backend, std::size_t m, std::size_t n, BandSpec band,
                     bool retain_all)
    : backend_(&backend),
      m_(m),
      n_(n),
      band_(band),
      retain_all_(retain_all),
      v_row_(m + 1),
      h_col_(n + 1) {}

void DeltaGrid::request(const Path& path) {
  for (const DeltaRead& read : path) {
    (read.vertical ? wanted_v_ : wanted_h_)[slot(read.i, read.j)] = true;
  }
}

SimCiphertext DeltaGrid::read_dv(std::size_t i, std::size_t j) const {
  if (i < 1 || i > m_ || j > n_) throw PositionOutOfRange("dv read outside grid");
  if (j == 0 || !band_.in_band(i, j)) return backend_->trivial(1);
  if (auto it = kept_v_.find(slot(i, j)); it != kept_v_.end()) return it->second;
  const auto& frontier = v_row_[i];
  if (frontier && frontier->first == j) return frontier->second;
  throw PositionOutOfRange("dv at (" + std::to_string(i) + "," + std::to_string(j) +
                           ") is no longer available");
}

SimCiphertext DeltaGrid::read_dh(std::size_t i, std::size_t j) const {
  if (j < 1 || j > n_ || i > m_) throw PositionOutOfRange("dh read outside grid");
  if (i == 0 || !band_.in_band(i, j)) return backend_->trivial(1);
  if (auto it = kept_h_.find(slot(i, j)); it != kept_h_.end()) return it->second;
  const auto& frontier = h_col_[j];
  if (frontier && frontier->first == i) return frontier->second;
  throw PositionOutOfRange("dh at (" + std::to_string(i) + "," + std::to_string(j) +
                           ") is no longer available");
}

void DeltaGrid::store(std::size_t i, std::size_t j, SimCiphertext dv, SimCiphertext dh) {
  const std::uint64_t key = slot(i, j);
  if (retain_all_ || wanted_v_.count(key)) kept_v_.emplace(key, dv);
  if (retain_all_ || wanted_h_.count(key)) kept_h_.emplace(key, dh);
  v_row_[i] = {j, std::move(dv)};
  h_col_[j] = {i, std::move(dh)};
}

CellOutputs cell_kernel(Backend& backend, const SimCiphertext& dv_in,
                        const SimCiphertext& dh_in, const SimCiphertext& eq9,
                        const Lut16& min_lut, KeyEncoding encoding) {
  SimCiphertext key = encoding == KeyEncoding::original
                          ? backend.add(dv_in, backend.scalar_mul(dh_in, 3))
                          : backend.sub(backend.scalar_mul(dh_in, 3), dv_in);
  key = backend.scalar_add(backend.add(key, eq9), 4);
  SimCiphertext step = backend.pbs(key, min_lut);
  SimCiphertext dv_out = backend.sub(step, dh_in);
  SimCiphertext dh_out = backend.sub(step, dv_in);
  return {std::move(dv_out), std::move(dh_out), std::move(step)};
}

std::int64_t predict_key_variance(const Backend& backend, const SimCiphertext& dv_in,
                                  const SimCiphertext& dh_in, const SimCiphertext& eq9,
                                  KeyEncoding encoding) {
  const int dv_coeff = encoding == KeyEncoding::original ? 1 : -1;
  const std::array<LinearTerm, 3> terms{
      {{&dv_in, dv_coeff}, {&dh_in, 3}, {&eq9, 1}}};
  return backend.predict_variance(terms);
}

std::uint64_t refresh_if_needed(Backend& backend, SimCiphertext& dv_in,
                                SimCiphertext& dh_in, const SimCiphertext& eq9,
                                KeyEncoding encoding) {
  if (static_cast<double>(predict_key_variance(backend, dv_in, dh_in, eq9, encoding)) <=
      backend.params().max_variance_budget) {
    return 0;
  }
  // Differentials live in {-1,0,1}; shift into the programmable half,
  // refresh, shift back. Operands already at fresh noise gain nothing.
  std::uint64_t count = 0;
  for (SimCiphertext* ct : {&dv_in, &dh_in}) {
    if (ct->ledger.variance() > 1) {
      *ct = backend.scalar_add(backend.refresh(backend.scalar_add(*ct, 1)), -1);
      ++count;
    }
  }
  return count;
}

SimCiphertext extract_along(Backend& backend, const DeltaGrid& grid, const Path& path) {
  SimCiphertext acc = backend.trivial(0);
  for (const DeltaRead& read : path) {
    acc = backend.add(acc, read.vertical ? grid.read_dv(read.i, read.j)
                                         : grid.read_dh(read.i, read.j));
  }
  return acc;
}

SimCiphertext extract_score(Backend& backend, const DeltaGrid& grid) {
  const bool full = grid.band().mode == BandSpec::Mode::exact;
  const Path path = full ? last_row_path(grid.m(), grid.n())
                         : staircase_path(grid.m(), grid.n());
  return extract_along(backend, grid, path);
}

DistanceRun distance(Backend& backend, const Eq9Provider& eq9_provider, std::size_t m,
                     std::size_t n, const BandSpec& band,
                     const DistanceOptions& options) {
  if (!band.covers(m, n)) {
    throw BandTooNarrow("band half-width " + std::to_string(band.half_width) +
                        " below length difference");
  }
  if (backend.params().max_variance_budget < kMinBudget) {
    throw InvalidParams("noise budget below 11: refreshed operands alone exceed it");
  }
  const Lut16 min_lut = build_min_lut(options.encoding);

  DistanceRun run;
  DeltaGrid grid(backend, m, n, band, options.retain_all);
  const Path score_path = band.mode == BandSpec::Mode::exact ? last_row_path(m, n)
                                                             : staircase_path(m, n);
  grid.request(score_path);

  for (std::size_t k = 2; k <= m + n; ++k) {
    const std::size_t i_lo = k > n ? k - n : 1;
    const std::size_t i_hi = std::min(m, k - 1);
    for (std::size_t i = i_lo; i <= i_hi; ++i) {
      const std::size_t j = k - i;
      if (!band.in_band(i, j)) continue;

      SimCiphertext dv_in = grid.read_dv(i, j - 1);
      SimCiphertext dh_in = grid.read_dh(i - 1, j);

      const StatsSnapshot before_eq = backend.stats();
      SimCiphertext eq9 = eq9_provider(i, j);
      run.equality_pbs += backend.stats().pbs_count - before_eq.pbs_count;

      run.refreshes += refresh_if_needed(backend, dv_in, dh_in, eq9, options.encoding);
      const std::int64_t key_variance =
          predict_key_variance(backend, dv_in, dh_in, eq9, options.encoding);
      run.max_key_variance = std::max(run.max_key_variance, key_variance);
      if (options.observer) {
        options.observer(CellObservation{i, j, dv_in, dh_in, eq9, key_variance});
      }

      CellOutputs out = cell_kernel(backend, dv_in, dh_in, eq9, min_lut, options.encoding);
      ++run.kernel_pbs;
      ++run.visited_cells;
      grid.store(i, j, std::move(out.dv_out), std::move(out.dh_out));
    }
  }

  run.score = extract_along(backend, grid, score_path);
  if (options.retain_all) run.grid.emplace(std::move(grid));
  return run;
}

DistanceRun distance_encrypted(Backend& backend, const EncryptedString& a,
                               const EncryptedString& b, const BandSpec& band,
                               const DistanceOptions& options) {
  const Eq9Provider provider = [&](std::size_t i, std::size_t j) {
    return equality::eq_folded(backend, a.chars[i - 1], b.chars[j - 1], 9);
  };
  return distance(backend, provider, a.length(), b.length(), band, options);
}

}  // namespace leuven::kernel
