#pragma once

#include <span>

#include "leuven/backend.hpp"
#include "leuven/encoding.hpp"

namespace leuven::equality {

/// Indicator table for a zero difference: entry 0 holds scale, all other
/// entries 0. Because every negated image of a 0 is again 0, it acts as
/// a 31-value lookup over differences in [-15, 15].
Lut16 eq_lut(int scale);

/// Packed-pair table for the 2-bit baseline: input x + 4*y, output 1
/// exactly on the four equal pairs.
Lut16 pair_eq_lut();

/// Merge table: entry n_sub holds scale, everything else 0; a sum of
/// n_sub sub-equality bits maps to scale exactly when all of them are 1.
Lut16 merge_lut(int n_sub, int scale);

/// Equality of two values in [0,16) by subtraction and a single lookup.
/// One bootstrap; decrypts to scale when equal, 0 otherwise.
SimCiphertext eq4(Backend& backend, const SimCiphertext& x, const SimCiphertext& y,
                  int scale);

/// Character equality for two-symbol layouts ([4,k] with k <= 3), e.g.
/// 7-bit codes split 4+3: eq of the low symbols, folded into the high
/// symbol difference, then one more lookup. Exactly two bootstraps.
SimCiphertext eq_ascii(Backend& backend, std::span<const SimCiphertext> x,
                       std::span<const SimCiphertext> y, int scale);

/// General folded equality over any [<=4, <=3, <=3, ...] layout; one
/// bootstrap per symbol. Specializes to eq4 for one symbol and to
/// eq_ascii for two.
SimCiphertext eq_folded(Backend& backend, std::span<const SimCiphertext> x,
                        std::span<const SimCiphertext> y, int scale);

/// Chunked baseline: per-chunk sub-equalities (packed-pair lookup for
/// 2-bit chunks, subtraction lookup for 3- or 4-bit chunks) summed and
/// merged; n + 1 bootstraps for n < 16 chunks.
SimCiphertext eq_chunked_merge(Backend& backend, std::span<const SimCiphertext> x,
                               std::span<const SimCiphertext> y, int chunk_bits,
                               int scale);

enum class EqTechnique { standard_2bit, ours_4bit, combined };

/// Bootstrap count of one character equality at the given bit width.
int eq_cost(EqTechnique technique, int bit_width);

}  // namespace leuven::equality
