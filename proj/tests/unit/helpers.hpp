#pragma once

#include <random>
#include <string>

#include "leuven/encoding.hpp"

namespace testutil {

inline std::string random_string(std::mt19937& rng, const leuven::AlphabetSpec& spec,
                                 std::size_t len) {
  const auto& chars = spec.charset();
  std::uniform_int_distribution<std::size_t> pick(0, chars.size() - 1);
  std::string s;
  s.reserve(len);
  for (std::size_t k = 0; k < len; ++k) s.push_back(chars[pick(rng)]);
  return s;
}

/// A copy of `base` with up to `edits` random single-character edits, to
/// get pairs whose distance is small but nonzero.
inline std::string mutate(std::mt19937& rng, const leuven::AlphabetSpec& spec,
                          std::string base, std::size_t edits) {
  const auto& chars = spec.charset();
  std::uniform_int_distribution<std::size_t> pick(0, chars.size() - 1);
  for (std::size_t e = 0; e < edits && !base.empty(); ++e) {
    std::uniform_int_distribution<std::size_t> pos(0, base.size() - 1);
    switch (rng() % 3) {
      case 0:
        base[pos(rng)] = chars[pick(rng)];
        break;
      case 1:
        base.erase(pos(rng), 1);
        break;
      default:
        base.insert(base.begin() + static_cast<std::ptrdiff_t>(pos(rng)),
                    chars[pick(rng)]);
        break;
    }
  }
  return base;
}

}  // namespace testutil
