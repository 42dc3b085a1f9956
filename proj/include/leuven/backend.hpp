#pragma once

#include <atomic>
#include <cstdint>
#include <span>
#include <utility>

#include "leuven/errors.hpp"
#include "leuven/lut.hpp"
#include "leuven/noise.hpp"

namespace leuven {

/// A simulated ciphertext: the plaintext residue it would decrypt to and
/// the symbolic noise accumulated on it. Immutable by convention; every
/// operation returns a new ciphertext.
struct SimCiphertext {
  int value = 0;        // in [0, 32)
  NoiseLedger ledger;
};

/// Noise headroom of the parameter set, expressed as the equivalent
/// number of independent fresh-ciphertext additions a bootstrap input
/// may carry.
struct NoiseParams {
  double max_variance_budget = 4000.0;

  /// Small demonstration set that tolerates 25 additions.
  static NoiseParams tight() { return NoiseParams{25.0}; }

  /// Production-grade sets handle several thousand additions; the exact
  /// figure is parameter-dependent, 4000 is a representative floor.
  static NoiseParams standard() { return NoiseParams{4000.0}; }
};

struct StatsSnapshot {
  std::uint64_t pbs_count = 0;
  std::uint64_t refresh_count = 0;
  std::uint64_t linear_op_count = 0;
};

/// One term of a linear combination handed to predict_variance.
using LinearTerm = std::pair<const SimCiphertext*, int>;

/// Operations a ciphertext backend must provide. The shipped
/// implementation is the simulation below; an adapter over a real
/// scheme is a declared extension point and would keep the same
/// surface (the noise-introspection hook maps onto the per-ciphertext
/// noise estimates such schemes already track).
class Backend {
 public:
  virtual ~Backend() = default;

  virtual SimCiphertext encrypt(int v) = 0;
  virtual SimCiphertext trivial(int v) const = 0;
  virtual int decrypt(const SimCiphertext& ct) const = 0;

  virtual SimCiphertext add(const SimCiphertext& a, const SimCiphertext& b) = 0;
  virtual SimCiphertext sub(const SimCiphertext& a, const SimCiphertext& b) = 0;
  virtual SimCiphertext scalar_mul(const SimCiphertext& a, int k) = 0;
  virtual SimCiphertext scalar_add(const SimCiphertext& a, int k) = 0;

  /// Applies the table through a bootstrap; output noise is fresh.
  /// Throws NoiseBudgetExceeded when the input noise is over budget.
  virtual SimCiphertext pbs(const SimCiphertext& x, const Lut16& lut) = 0;

  /// Identity bootstrap used purely to reset noise. Only valid for
  /// values in [0,16); counted both as a bootstrap and as a refresh.
  virtual SimCiphertext refresh(const SimCiphertext& x) = 0;

  /// Exact noise variance of sum(coeff_i * ct_i), respecting shared
  /// noise sources between the operands.
  virtual std::int64_t predict_variance(std::span<const LinearTerm> terms) const = 0;

  virtual StatsSnapshot stats() const = 0;
  virtual const NoiseParams& params() const = 0;
};

/// Plaintext-plus-noise simulation of the 5-bit scheme. Ciphertext values
/// are tracked mod 32, noise as exact per-source ledgers. Thread-safe for
/// concurrent operations on distinct ciphertexts; counters and source-id
/// minting are atomic.
class SimBackend final : public Backend {
 public:
  explicit SimBackend(NoiseParams params = NoiseParams{}) : params_(params) {
    if (params_.max_variance_budget < 1.0) {
      throw InvalidParams("noise budget must be at least 1");
    }
  }

  SimCiphertext encrypt(int v) override;
  SimCiphertext trivial(int v) const override;
  int decrypt(const SimCiphertext& ct) const override { return ct.value; }

  SimCiphertext add(const SimCiphertext& a, const SimCiphertext& b) override;
  SimCiphertext sub(const SimCiphertext& a, const SimCiphertext& b) override;
  SimCiphertext scalar_mul(const SimCiphertext& a, int k) override;
  SimCiphertext scalar_add(const SimCiphertext& a, int k) override;

  SimCiphertext pbs(const SimCiphertext& x, const Lut16& lut) override;
  SimCiphertext refresh(const SimCiphertext& x) override;

  std::int64_t predict_variance(std::span<const LinearTerm> terms) const override;

  StatsSnapshot stats() const override {
    return {pbs_.load(), refresh_.load(), linear_.load()};
  }
  const NoiseParams& params() const override { return params_; }

  /// Ensures future source ids stay above ids seen in deserialized
  /// ciphertexts, so reloaded ledgers never collide with new ones.
  void reserve_source_ids(NoiseLedger::SourceId max_seen);

 private:
  NoiseLedger::SourceId mint_source() { return next_source_.fetch_add(1); }

  NoiseParams params_;
  std::atomic<NoiseLedger::SourceId> next_source_{1};
  std::atomic<std::uint64_t> pbs_{0};
  std::atomic<std::uint64_t> refresh_{0};
  std::atomic<std::uint64_t> linear_{0};
};

}  // namespace leuven
