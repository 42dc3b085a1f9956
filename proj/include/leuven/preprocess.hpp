#pragma once

#include <iosfwd>
#include <map>
#include <string_view>
#include <vector>

#include "leuven/encoding.hpp"
#include "leuven/kernel.hpp"

namespace leuven::preprocess {

/// Precomputed equality grid for one encrypted string: one row per
/// alphabet character, one column per string position, each entry the
/// encrypted scaled equality bit (9 when the characters match, else 0).
/// Built once, then looked up by plaintext character at zero bootstrap
/// cost.
class EqTable {
 public:
  EqTable(AlphabetSpec spec, std::size_t length)
      : spec_(std::move(spec)), length_(length) {}

  const AlphabetSpec& alphabet() const { return spec_; }
  std::size_t string_length() const { return length_; }

  bool has_row(char c) const { return rows_.count(c) != 0; }
  std::vector<char> subset() const;

  /// Entry for (character, position), position 1-based. Throws
  /// CharNotInSubset / PositionOutOfRange.
  const SimCiphertext& lookup(char c, std::size_t position) const;

  void set_row(char c, std::vector<SimCiphertext> row);

 private:
  AlphabetSpec spec_;
  std::size_t length_;
  std::map<char, std::vector<SimCiphertext>> rows_;
};

/// Compares every character of the encrypted string against every
/// character of the subset (defaults to the whole alphabet), storing the
/// scaled equality bits. Costs one bootstrap per symbol per entry: the
/// plaintext side enters the circuits as noiseless constants.
EqTable build_eq_table(Backend& backend, const EncryptedString& xs,
                       const AlphabetSpec& spec, std::string_view subset = {});

/// Banded distance where every cell equality is a plain table lookup, so
/// the main phase costs exactly one bootstrap per cell plus refreshes.
kernel::DistanceRun distance_preprocessed(Backend& backend, const EqTable& table,
                                          std::string_view plain,
                                          const kernel::BandSpec& band,
                                          const kernel::DistanceOptions& options = {});

/// Versioned binary serialization of a table (alphabet, length, rows of
/// ciphertext values with their noise ledgers). See README for the byte
/// layout.
void save_eq_table(const EqTable& table, std::ostream& out);

/// Rebuilds a table and reserves its noise-source ids on the backend so
/// future fresh ciphertexts never collide with the stored ones.
EqTable load_eq_table(std::istream& in, SimBackend& backend);

}  // namespace leuven::preprocess
