#include "leuven/noise.hpp"

#include <algorithm>

namespace leuven {

void NoiseLedger::add_scaled(const NoiseLedger& other, std::int32_t factor) {
  if (factor == 0 || other.terms_.empty()) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      merged.emplace_back(b->first, b->second * factor);
      ++b;
    } else {
      std::int32_t c = a->second + b->second * factor;
      if (c != 0) merged.emplace_back(a->first, c);
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

void NoiseLedger::scale(std::int32_t factor) {
  if (factor == 0) {
    terms_.clear();
    return;
  }
  if (factor == 1) return;
  for (auto& [id, c] : terms_) c *= factor;
}

}  // namespace leuven
