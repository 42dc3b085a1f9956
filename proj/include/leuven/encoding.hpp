#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "leuven/backend.hpp"

namespace leuven {

/// Character set plus the per-ciphertext symbol layout its codes are
/// split into. Widths are listed low bits first; the first symbol may be
/// up to 4 bits, later ones up to 3 bits so the folding equality circuit
/// stays inside the extended lookup window.
class AlphabetSpec {
 public:
  /// 7-bit character codes 0..127 as a 4-bit plus a 3-bit symbol.
  static const AlphabetSpec& ascii7();
  /// 'a'..'z' mapped to 0..25 as a 4-bit plus a 1-bit symbol.
  static const AlphabetSpec& lower26();
  /// A, C, G, T mapped to 0..3 in a single 2-bit symbol.
  static const AlphabetSpec& dna4();

  /// Explicit char->code table with a caller-chosen layout.
  static AlphabetSpec custom(std::string name, std::vector<int> widths,
                             const std::vector<std::pair<char, int>>& chars);

  /// Parses the line-based key=value spec format:
  ///   name=<identifier>
  ///   widths=<w0,w1,...>
  ///   char=<c>:<code>     (one line per character; omit for ascii7-style
  ///                        identity alphabets covering codes 0..2^bits-1)
  /// '#' starts a comment line.
  static AlphabetSpec parse(std::string_view text);
  static AlphabetSpec load_file(const std::string& path);

  const std::string& name() const { return name_; }
  const std::vector<int>& symbol_widths() const { return widths_; }
  int bit_width() const { return total_bits_; }
  std::size_t symbol_count() const { return widths_.size(); }

  bool contains(char c) const { return code_table_[static_cast<unsigned char>(c)] >= 0; }
  int code_of(char c) const;  // throws CharNotInAlphabet
  char char_of(int code) const;

  /// All member characters in code order.
  const std::vector<char>& charset() const { return chars_; }

 private:
  AlphabetSpec() = default;
  void finalize();  // builds tables, validates widths and codes

  std::string name_;
  std::vector<int> widths_;
  int total_bits_ = 0;
  std::vector<std::pair<char, int>> mapping_;
  std::vector<char> chars_;
  std::array<int, 256> code_table_{};
  std::vector<char> reverse_;
};

/// One character split into per-ciphertext symbol values.
struct EncodedChar {
  std::vector<int> symbols;
};

/// Little-endian split of the character's code over the alphabet layout.
EncodedChar encode_char(char c, const AlphabetSpec& spec);

/// Reassembles the code from its symbols and maps it back to the character.
char decode_char(const EncodedChar& enc, const AlphabetSpec& spec);

/// Little-endian split into fixed-width chunks of chunk_bits (2..4) bits,
/// ceil(bit_width / chunk_bits) of them; used by the chunked equality
/// baseline rather than the alphabet's native layout.
std::vector<int> encode_chunked(char c, const AlphabetSpec& spec, int chunk_bits);

/// A string encrypted symbol by symbol: chars[i][k] is the k-th symbol
/// ciphertext of the (i+1)-th character.
struct EncryptedString {
  std::vector<std::vector<SimCiphertext>> chars;
  std::size_t length() const { return chars.size(); }
};

EncryptedString encrypt_string(std::string_view s, const AlphabetSpec& spec,
                               Backend& backend);
std::string decrypt_string(const EncryptedString& enc, const AlphabetSpec& spec,
                           const Backend& backend);

}  // namespace leuven
