#include "leuven/encoding.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "leuven/errors.hpp"

namespace leuven {

namespace {

std::vector<std::pair<char, int>> identity_mapping(int count) {
  std::vector<std::pair<char, int>> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int c = 0; c < count; ++c) out.emplace_back(static_cast<char>(c), c);
  return out;
}

}  // namespace

void AlphabetSpec::finalize() {
  if (widths_.empty()) throw FormatError("alphabet needs at least one symbol width");
  if (widths_.front() < 1 || widths_.front() > 4) {
    throw FormatError("first symbol width must be 1..4 bits");
  }
  for (std::size_t k = 1; k < widths_.size(); ++k) {
    if (widths_[k] < 1 || widths_[k] > 3) {
      throw FormatError("trailing symbol widths must be 1..3 bits");
    }
  }
  total_bits_ = 0;
  for (int w : widths_) total_bits_ += w;
  if (total_bits_ > 16) throw FormatError("alphabets wider than 16 bits not supported");
  if (mapping_.empty()) throw FormatError("alphabet needs at least one character");

  code_table_.fill(-1);
  const int code_limit = 1 << total_bits_;
  int max_code = -1;
  for (const auto& [c, code] : mapping_) {
    if (code < 0 || code >= code_limit) {
      throw FormatError("character code does not fit the declared widths");
    }
    if (code_table_[static_cast<unsigned char>(c)] >= 0) {
      throw FormatError(std::string("duplicate character: ") + c);
    }
    code_table_[static_cast<unsigned char>(c)] = code;
    max_code = std::max(max_code, code);
  }
  reverse_.assign(static_cast<std::size_t>(max_code) + 1, '\0');
  std::vector<bool> seen(static_cast<std::size_t>(max_code) + 1, false);
  for (const auto& [c, code] : mapping_) {
    if (seen[static_cast<std::size_t>(code)]) throw FormatError("duplicate code");
    seen[static_cast<std::size_t>(code)] = true;
    reverse_[static_cast<std::size_t>(code)] = c;
  }
  chars_.clear();
  for (const auto& [c, code] : mapping_) chars_.push_back(c);
  std::sort(chars_.begin(), chars_.end(),
            [&](char x, char y) { return code_of(x) < code_of(y); });
}

int AlphabetSpec::code_of(char c) const {
  const int code = code_table_[static_cast<unsigned char>(c)];
  if (code < 0) {
    throw CharNotInAlphabet("character not in alphabet '" + name_ + "'");
  }
  return code;
}

char AlphabetSpec::char_of(int code) const {
  if (code < 0 || static_cast<std::size_t>(code) >= reverse_.size()) {
    throw CharNotInAlphabet("code not in alphabet '" + name_ + "'");
  }
  return reverse_[static_cast<std::size_t>(code)];
}

const AlphabetSpec& AlphabetSpec::ascii7() {
  static const AlphabetSpec spec = custom("ascii7", {4, 3}, identity_mapping(128));
  return spec;
}

const AlphabetSpec& AlphabetSpec::lower26() {
  static const AlphabetSpec spec = [] {
    std::vector<std::pair<char, int>> chars;
    for (char c = 'a'; c <= 'z'; ++c) chars.emplace_back(c, c - 'a');
    return custom("lower26", {4, 1}, chars);
  }();
  return spec;
}

const AlphabetSpec& AlphabetSpec::dna4() {
  static const AlphabetSpec spec =
      custom("dna4", {2}, {{'A', 0}, {'C', 1}, {'G', 2}, {'T', 3}});
  return spec;
}

AlphabetSpec AlphabetSpec::custom(std::string name, std::vector<int> widths,
                                  const std::vector<std::pair<char, int>>& chars) {
  AlphabetSpec spec;
  spec.name_ = std::move(name);
  spec.widths_ = std::move(widths);
  spec.mapping_ = chars;
  spec.finalize();
  return spec;
}

AlphabetSpec AlphabetSpec::parse(std::string_view text) {
  std::string name;
  std::vector<int> widths;
  std::vector<std::pair<char, int>> chars;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw FormatError("line " + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    if (key == "name") {
      name = value;
    } else if (key == "widths") {
      std::istringstream ws(value);
      std::string tok;
      while (std::getline(ws, tok, ',')) {
        try {
          widths.push_back(std::stoi(tok));
        } catch (const std::exception&) {
          throw FormatError("line " + std::to_string(lineno) + ": bad width '" + tok + "'");
        }
      }
    } else if (key == "char") {
      // form: <character>:<decimal code>
      if (value.size() < 3 || value[1] != ':') {
        throw FormatError("line " + std::to_string(lineno) + ": expected char=<c>:<code>");
      }
      try {
        chars.emplace_back(value[0], std::stoi(value.substr(2)));
      } catch (const std::exception&) {
        throw FormatError("line " + std::to_string(lineno) + ": bad code");
      }
    } else {
      throw FormatError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (name.empty()) throw FormatError("alphabet file missing name=");
  if (widths.empty()) throw FormatError("alphabet file missing widths=");
  if (chars.empty()) {
    int bits = 0;
    for (int w : widths) bits += w;
    if (bits > 8) throw FormatError("implicit identity mapping only supported up to 8 bits");
    chars = identity_mapping(1 << bits);
  }
  return custom(std::move(name), std::move(widths), chars);
}

AlphabetSpec AlphabetSpec::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open alphabet file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

EncodedChar encode_char(char c, const AlphabetSpec& spec) {
  int code = spec.code_of(c);
  EncodedChar enc;
  enc.symbols.reserve(spec.symbol_count());
  for (int w : spec.symbol_widths()) {
    enc.symbols.push_back(code & ((1 << w) - 1));
    code >>= w;
  }
  return enc;
}

char decode_char(const EncodedChar& enc, const AlphabetSpec& spec) {
  int code = 0;
  int shift = 0;
  const auto& widths = spec.symbol_widths();
  for (std::size_t k = 0; k < widths.size(); ++k) {
    code |= enc.symbols[k] << shift;
    shift += widths[k];
  }
  return spec.char_of(code);
}

std::vector<int> encode_chunked(char c, const AlphabetSpec& spec, int chunk_bits) {
  if (chunk_bits < 2 || chunk_bits > 4) {
    throw OutOfRangeValue("chunk size must be 2..4 bits");
  }
  int code = spec.code_of(c);
  const int n_chunks = (spec.bit_width() + chunk_bits - 1) / chunk_bits;
  std::vector<int> chunks(static_cast<std::size_t>(n_chunks));
  for (int k = 0; k < n_chunks; ++k) {
    chunks[static_cast<std::size_t>(k)] = code & ((1 << chunk_bits) - 1);
    code >>= chunk_bits;
  }
  return chunks;
}

EncryptedString encrypt_string(std::string_view s, const AlphabetSpec& spec,
                               Backend& backend) {
  EncryptedString out;
  out.chars.reserve(s.size());
  for (char c : s) {
    const EncodedChar enc = encode_char(c, spec);
    std::vector<SimCiphertext> symbols;
    symbols.reserve(enc.symbols.size());
    for (int v : enc.symbols) symbols.push_back(backend.encrypt(v));
    out.chars.push_back(std::move(symbols));
  }
  return out;
}

std::string decrypt_string(const EncryptedString& enc, const AlphabetSpec& spec,
                           const Backend& backend) {
  std::string out;
  out.reserve(enc.chars.size());
  for (const auto& symbols : enc.chars) {
    EncodedChar ec;
    for (const auto& ct : symbols) ec.symbols.push_back(backend.decrypt(ct));
    out.push_back(decode_char(ec, spec));
  }
  return out;
}

}  // namespace leuven
