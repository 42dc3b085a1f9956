#include "leuven/preprocess.hpp"

#include <algorithm>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>

#include "leuven/equality.hpp"
#include "leuven/errors.hpp"

namespace leuven::preprocess {

std::vector<char> EqTable::subset() const {
  std::vector<char> out;
  out.reserve(rows_.size());
  for (const auto& [c, row] : rows_) out.push_back(c);
  return out;
}

const SimCiphertext& EqTable::lookup(char c, std::size_t position) const {
  const auto it = rows_.find(c);
  if (it == rows_.end()) {
    throw CharNotInSubset(std::string("no table row for character '") + c + "'");
  }
  if (position < 1 || position > length_) {
    throw PositionOutOfRange("position " + std::to_string(position) +
                             " outside 1.." + std::to_string(length_));
  }
  return it->second[position - 1];
}

void EqTable::set_row(char c, std::vector<SimCiphertext> row) {
  if (row.size() != length_) throw InvalidParams("row length mismatch");
  rows_[c] = std::move(row);
}

EqTable build_eq_table(Backend& backend, const EncryptedString& xs,
                       const AlphabetSpec& spec, std::string_view subset) {
  std::vector<char> chars;
  if (subset.empty()) {
    chars = spec.charset();
  } else {
    chars.assign(subset.begin(), subset.end());
  }
  EqTable table(spec, xs.length());
  for (char c : chars) {
    const EncodedChar plain = encode_char(c, spec);
    std::vector<SimCiphertext> plain_syms;
    plain_syms.reserve(plain.symbols.size());
    for (int v : plain.symbols) plain_syms.push_back(backend.trivial(v));
    std::vector<SimCiphertext> row;
    row.reserve(xs.length());
    for (const auto& enc_char : xs.chars) {
      row.push_back(equality::eq_folded(backend, enc_char, plain_syms, 9));
    }
    table.set_row(c, std::move(row));
  }
  return table;
}

kernel::DistanceRun distance_preprocessed(Backend& backend, const EqTable& table,
                                          std::string_view plain,
                                          const kernel::BandSpec& band,
                                          const kernel::DistanceOptions& options) {
  for (char c : plain) {
    if (!table.has_row(c)) {
      throw CharNotInSubset(std::string("no table row for character '") + c + "'");
    }
  }
  const kernel::Eq9Provider provider = [&](std::size_t i, std::size_t j) {
    return table.lookup(plain[j - 1], i);
  };
  return kernel::distance(backend, provider, table.string_length(), plain.size(), band,
                          options);
}

namespace {

constexpr char kMagic[4] = {'L', 'E', 'Q', 'T'};
constexpr std::uint32_t kVersion = 1;

template <typename T>
void write_raw(std::ostream& out, T v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

template <typename T>
T read_raw(std::istream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(v));
  if (!in) throw FormatError("truncated table file");
  return v;
}

void write_string(std::ostream& out, const std::string& s) {
  write_raw<std::uint32_t>(out, static_cast<std::uint32_t>(s.size()));
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::string read_string(std::istream& in) {
  const auto len = read_raw<std::uint32_t>(in);
  std::string s(len, '\0');
  in.read(s.data(), len);
  if (!in) throw FormatError("truncated table file");
  return s;
}

void write_ciphertext(std::ostream& out, const SimCiphertext& ct) {
  write_raw<std::int32_t>(out, ct.value);
  write_raw<std::uint32_t>(out, static_cast<std::uint32_t>(ct.ledger.term_count()));
  for (const auto& [id, coeff] : ct.ledger.terms()) {
    write_raw<std::uint64_t>(out, id);
    write_raw<std::int32_t>(out, coeff);
  }
}

SimCiphertext read_ciphertext(std::istream& in, NoiseLedger::SourceId& max_id) {
  SimCiphertext ct;
  ct.value = read_raw<std::int32_t>(in);
  const auto terms = read_raw<std::uint32_t>(in);
  for (std::uint32_t t = 0; t < terms; ++t) {
    const auto id = read_raw<std::uint64_t>(in);
    const auto coeff = read_raw<std::int32_t>(in);
    NoiseLedger one = NoiseLedger::fresh(id);
    ct.ledger.add_scaled(one, coeff);
    max_id = std::max(max_id, id);
  }
  return ct;
}

}  // namespace

void save_eq_table(const EqTable& table, std::ostream& out) {
  out.write(kMagic, sizeof(kMagic));
  write_raw<std::uint32_t>(out, kVersion);
  const AlphabetSpec& spec = table.alphabet();
  write_string(out, spec.name());
  write_raw<std::uint32_t>(out, static_cast<std::uint32_t>(spec.symbol_widths().size()));
  for (int w : spec.symbol_widths()) write_raw<std::int32_t>(out, w);
  const auto& chars = spec.charset();
  write_raw<std::uint32_t>(out, static_cast<std::uint32_t>(chars.size()));
  for (char c : chars) {
    write_raw<char>(out, c);
    write_raw<std::int32_t>(out, spec.code_of(c));
  }
  write_raw<std::uint64_t>(out, table.string_length());
  const auto subset = table.subset();
  write_raw<std::uint32_t>(out, static_cast<std::uint32_t>(subset.size()));
  for (char c : subset) {
    write_raw<char>(out, c);
    for (std::size_t i = 1; i <= table.string_length(); ++i) {
      write_ciphertext(out, table.lookup(c, i));
    }
  }
  if (!out) throw FormatError("failed writing table");
}

EqTable load_eq_table(std::istream& in, SimBackend& backend) {
  char magic[4];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
    throw FormatError("not an equality-table file");
  }
  const auto version = read_raw<std::uint32_t>(in);
  if (version != kVersion) {
    throw FormatError("unsupported table version " + std::to_string(version));
  }
  const std::string name = read_string(in);
  const auto width_count = read_raw<std::uint32_t>(in);
  std::vector<int> widths;
  for (std::uint32_t k = 0; k < width_count; ++k) widths.push_back(read_raw<std::int32_t>(in));
  const auto char_count = read_raw<std::uint32_t>(in);
  std::vector<std::pair<char, int>> mapping;
  for (std::uint32_t k = 0; k < char_count; ++k) {
    const char c = read_raw<char>(in);
    const int code = read_raw<std::int32_t>(in);
    mapping.emplace_back(c, code);
  }
  AlphabetSpec spec = AlphabetSpec::custom(name, std::move(widths), mapping);
  const auto length = read_raw<std::uint64_t>(in);
  EqTable table(std::move(spec), length);
  const auto subset_count = read_raw<std::uint32_t>(in);
  NoiseLedger::SourceId max_id = 0;
  for (std::uint32_t k = 0; k < subset_count; ++k) {
    const char c = read_raw<char>(in);
    std::vector<SimCiphertext> row;
    row.reserve(length);
    for (std::uint64_t i = 0; i < length; ++i) row.push_back(read_ciphertext(in, max_id));
    table.set_row(c, std::move(row));
  }
  backend.reserve_source_ids(max_id);
  return table;
}

}  // namespace leuven::preprocess
