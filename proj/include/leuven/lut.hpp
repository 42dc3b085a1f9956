#pragma once

#include <array>
#include <string>

namespace leuven {

/// Size of the 5-bit plaintext space all ciphertext values live in.
inline constexpr int kPlaintextModulus = 32;

/// Number of freely programmable lookup entries (the lower half of the
/// plaintext space; the upper half is structurally forced).
inline constexpr int kLutSize = 16;

/// A 16-entry programmable lookup table over the 5-bit plaintext space.
///
/// Only inputs in [0,16) index the table directly. Inputs in [16,32)
/// return the negation (mod 32) of the entry 16 positions earlier; that
/// wrap-around behaviour is inherent to the bootstrap, not a choice.
/// Functions wanting more than 16 effective values exploit it by placing
/// zeros so that the forced images coincide with the intended outputs.
struct Lut16 {
  std::array<int, kLutSize> entries{};  // each in [0, 32)
};

/// Evaluates the table with its negacyclic extension. x must be in [0,32).
int negacyclic_eval(const Lut16& lut, int x);

/// The 4-bit message portion of a 5-bit value (drops the padding bit).
/// Forced-image outputs land in the upper half; table listings
/// conventionally report just this part.
inline int message_part(int v) { return v & (kLutSize - 1); }

/// entries[i] = i; evaluating it refreshes a value in [0,16) unchanged.
Lut16 identity_lut();

/// One line per base entry, "index<TAB>output", 16 lines, decimal.
std::string dump_lut(const Lut16& lut);

/// Throws OutOfRangeValue unless every entry is in [0,32).
void validate_lut(const Lut16& lut);

}  // namespace leuven
