#include "leuven/equality.hpp"

#include <string>

#include "leuven/errors.hpp"

namespace leuven::equality {

namespace {

void check_scale(int scale) {
  if (scale < 1 || scale >= kLutSize) {
    throw OutOfRangeValue("equality scale must be in [1,16): " + std::to_string(scale));
  }
}

/// Folds the next symbol difference into the running equality bit:
/// z = 2*(x_k - y_k) + (1 - eq_prev) is zero exactly when both the
/// previous symbols matched and this one does. The doubled difference of
/// a <=3-bit symbol spans [-14, 14], so z stays inside the 31-value
/// window of eq_lut.
SimCiphertext fold_step(Backend& b, const SimCiphertext& xk, const SimCiphertext& yk,
                        const SimCiphertext& eq_prev, int scale) {
  SimCiphertext z = b.scalar_mul(b.sub(xk, yk), 2);
  z = b.add(z, b.sub(b.trivial(1), eq_prev));
  return b.pbs(z, eq_lut(scale));
}

}  // namespace

Lut16 eq_lut(int scale) {
  check_scale(scale);
  Lut16 lut;
  lut.entries[0] = scale;
  return lut;
}

Lut16 pair_eq_lut() {
  Lut16 lut;
  for (int x = 0; x < 4; ++x) lut.entries[static_cast<std::size_t>(x + 4 * x)] = 1;
  return lut;
}

Lut16 merge_lut(int n_sub, int scale) {
  check_scale(scale);
  if (n_sub < 1 || n_sub >= kLutSize) {
    throw OutOfRangeValue("merge expects 1..15 sub-equalities");
  }
  Lut16 lut;
  lut.entries[static_cast<std::size_t>(n_sub)] = scale;
  return lut;
}

SimCiphertext eq4(Backend& backend, const SimCiphertext& x, const SimCiphertext& y,
                  int scale) {
  return backend.pbs(backend.sub(x, y), eq_lut(scale));
}

SimCiphertext eq_folded(Backend& backend, std::span<const SimCiphertext> x,
                        std::span<const SimCiphertext> y, int scale) {
  if (x.empty() || x.size() != y.size()) {
    throw InvalidParams("equality operands must have the same nonzero symbol count");
  }
  const int first_scale = x.size() == 1 ? scale : 1;
  SimCiphertext eq = eq4(backend, x[0], y[0], first_scale);
  for (std::size_t k = 1; k < x.size(); ++k) {
    eq = fold_step(backend, x[k], y[k], eq, k + 1 == x.size() ? scale : 1);
  }
  return eq;
}

SimCiphertext eq_ascii(Backend& backend, std::span<const SimCiphertext> x,
                       std::span<const SimCiphertext> y, int scale) {
  if (x.size() != 2 || y.size() != 2) {
    throw InvalidParams("eq_ascii expects two symbols per character");
  }
  return eq_folded(backend, x, y, scale);
}

SimCiphertext eq_chunked_merge(Backend& backend, std::span<const SimCiphertext> x,
                               std::span<const SimCiphertext> y, int chunk_bits,
                               int scale) {
  if (chunk_bits < 2 || chunk_bits > 4) {
    throw OutOfRangeValue("chunk size must be 2..4 bits");
  }
  if (x.empty() || x.size() != y.size()) {
    throw InvalidParams("equality operands must have the same nonzero chunk count");
  }
  const std::size_t n = x.size();
  if (n >= kLutSize) throw OutOfRangeValue("chunk count must stay below 16");
  SimCiphertext acc = backend.trivial(0);
  for (std::size_t k = 0; k < n; ++k) {
    SimCiphertext sub_eq;
    if (chunk_bits == 2) {
      SimCiphertext key = backend.add(x[k], backend.scalar_mul(y[k], 4));
      sub_eq = backend.pbs(key, pair_eq_lut());
    } else {
      sub_eq = eq4(backend, x[k], y[k], 1);
    }
    acc = backend.add(acc, sub_eq);
  }
  return backend.pbs(acc, merge_lut(static_cast<int>(n), scale));
}

namespace {

/// Bootstraps needed to merge n sub-equality bits with repeated grouping
/// into batches of at most 15.
int merge_cost(int n) {
  int cost = 0;
  while (n > 1) {
    const int groups = (n + 14) / 15;
    cost += groups;
    n = groups;
  }
  return cost;
}

}  // namespace

int eq_cost(EqTechnique technique, int bit_width) {
  if (bit_width < 1) throw OutOfRangeValue("bit width must be positive");
  switch (technique) {
    case EqTechnique::standard_2bit: {
      const int n = (bit_width + 1) / 2;
      return n + merge_cost(n);
    }
    case EqTechnique::ours_4bit:
      return bit_width <= 4 ? 1 : 1 + (bit_width - 4 + 2) / 3;
    case EqTechnique::combined: {
      const int n = (bit_width + 3) / 4;
      return n + merge_cost(n);
    }
  }
  throw InvalidParams("unknown equality technique");
}

}  // namespace leuven::equality
