#include "leuven/backend.hpp"

#include <string>

#include "leuven/errors.hpp"

namespace leuven {

namespace {

int mod32(long long x) {
  long long r = x % kPlaintextModulus;
  if (r < 0) r += kPlaintextModulus;
  return static_cast<int>(r);
}

void check_plaintext(int v) {
  if (v < 0 || v >= kPlaintextModulus) {
    throw OutOfRangeValue("plaintext outside [0,32): " + std::to_string(v));
  }
}

}  // namespace

SimCiphertext SimBackend::encrypt(int v) {
  check_plaintext(v);
  return {v, NoiseLedger::fresh(mint_source())};
}

SimCiphertext SimBackend::trivial(int v) const {
  check_plaintext(v);
  return {v, NoiseLedger{}};
}

SimCiphertext SimBackend::add(const SimCiphertext& a, const SimCiphertext& b) {
  linear_.fetch_add(1, std::memory_order_relaxed);
  SimCiphertext out{mod32(static_cast<long long>(a.value) + b.value), a.ledger};
  out.ledger.add_scaled(b.ledger, 1);
  return out;
}

SimCiphertext SimBackend::sub(const SimCiphertext& a, const SimCiphertext& b) {
  linear_.fetch_add(1, std::memory_order_relaxed);
  SimCiphertext out{mod32(static_cast<long long>(a.value) - b.value), a.ledger};
  out.ledger.add_scaled(b.ledger, -1);
  return out;
}

SimCiphertext SimBackend::scalar_mul(const SimCiphertext& a, int k) {
  linear_.fetch_add(1, std::memory_order_relaxed);
  SimCiphertext out{mod32(static_cast<long long>(a.value) * k), a.ledger};
  out.ledger.scale(k);
  return out;
}

SimCiphertext SimBackend::scalar_add(const SimCiphertext& a, int k) {
  linear_.fetch_add(1, std::memory_order_relaxed);
  return {mod32(static_cast<long long>(a.value) + k), a.ledger};
}

SimCiphertext SimBackend::pbs(const SimCiphertext& x, const Lut16& lut) {
  const auto variance = x.ledger.variance();
  if (static_cast<double>(variance) > params_.max_variance_budget) {
    throw NoiseBudgetExceeded("bootstrap input variance " + std::to_string(variance) +
                              " exceeds budget " +
                              std::to_string(params_.max_variance_budget));
  }
  pbs_.fetch_add(1, std::memory_order_relaxed);
  return {negacyclic_eval(lut, x.value), NoiseLedger::fresh(mint_source())};
}

SimCiphertext SimBackend::refresh(const SimCiphertext& x) {
  if (x.value >= kLutSize) {
    throw ValueOutsideLutHalf("refresh needs a value in [0,16), got " +
                              std::to_string(x.value));
  }
  SimCiphertext out = pbs(x, identity_lut());
  refresh_.fetch_add(1, std::memory_order_relaxed);
  return out;
}

std::int64_t SimBackend::predict_variance(std::span<const LinearTerm> terms) const {
  NoiseLedger combined;
  for (const auto& [ct, coeff] : terms) combined.add_scaled(ct->ledger, coeff);
  return combined.variance();
}

void SimBackend::reserve_source_ids(NoiseLedger::SourceId max_seen) {
  NoiseLedger::SourceId cur = next_source_.load();
  while (cur <= max_seen && !next_source_.compare_exchange_weak(cur, max_seen + 1)) {
  }
}

}  // namespace leuven
