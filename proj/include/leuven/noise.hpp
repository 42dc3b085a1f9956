#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace leuven {

/// Symbolic noise state of one ciphertext: a sparse signed coefficient
/// vector over independent noise sources. Every fresh encryption or
/// bootstrap output mints a new source with coefficient 1; linear
/// operations combine coefficients term by term, so noise shared between
/// two operands cancels or amplifies exactly, not just in aggregate.
///
/// Variance is the sum of squared coefficients, normalized so that a
/// fresh bootstrap output has variance 1. A trivial (public-constant)
/// ciphertext has an empty ledger and variance 0.
class NoiseLedger {
 public:
  using SourceId = std::uint64_t;
  using Term = std::pair<SourceId, std::int32_t>;

  NoiseLedger() = default;

  static NoiseLedger fresh(SourceId id) {
    NoiseLedger led;
    led.terms_.emplace_back(id, 1);
    return led;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  std::int64_t variance() const {
    std::int64_t sum = 0;
    for (const auto& [id, c] : terms_) sum += std::int64_t{c} * c;
    return sum;
  }

  /// this += factor * other, dropping terms that cancel to zero.
  void add_scaled(const NoiseLedger& other, std::int32_t factor);

  /// Multiplies every coefficient by factor (factor 0 empties the ledger).
  void scale(std::int32_t factor);

  const std::vector<Term>& terms() const { return terms_; }

 private:
  std::vector<Term> terms_;  // sorted by source id, coefficients nonzero
};

}  // namespace leuven
