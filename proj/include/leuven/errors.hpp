#pragma once

#include <stdexcept>

namespace leuven {

/// Base type for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A plaintext or scalar argument lies outside the 5-bit value space.
struct OutOfRangeValue : Error { using Error::Error; };

/// A bootstrap input exceeded the configured noise budget. In a real
/// deployment this would surface as a decryption failure, so the
/// simulation treats it as a hard error: the caller was expected to
/// refresh the operands earlier.
struct NoiseBudgetExceeded : Error { using Error::Error; };

/// refresh() only accepts values encoded in the programmable half [0,16).
struct ValueOutsideLutHalf : Error { using Error::Error; };

/// A packed lookup table does not leave zeros where the wrap-around
/// images of its overflow keys land.
struct PackingViolation : Error { using Error::Error; };

struct CharNotInAlphabet : Error { using Error::Error; };
struct CharNotInSubset : Error { using Error::Error; };
struct PositionOutOfRange : Error { using Error::Error; };

/// The requested band cannot reach the bottom-right corner of the grid.
struct BandTooNarrow : Error { using Error::Error; };

/// Malformed input file.
struct FormatError : Error { using Error::Error; };

/// Inconsistent run configuration.
struct InvalidParams : Error { using Error::Error; };

}  // namespace leuven
