#include "leuven/lut.hpp"

#include <sstream>

#include "leuven/errors.hpp"

namespace leuven {

int negacyclic_eval(const Lut16& lut, int x) {
  if (x < 0 || x >= kPlaintextModulus) {
    throw OutOfRangeValue("lookup input outside [0,32): " + std::to_string(x));
  }
  if (x < kLutSize) return lut.entries[static_cast<std::size_t>(x)];
  int e = lut.entries[static_cast<std::size_t>(x - kLutSize)];
  return (kPlaintextModulus - e) % kPlaintextModulus;
}

Lut16 identity_lut() {
  Lut16 lut;
  for (int i = 0; i < kLutSize; ++i) lut.entries[static_cast<std::size_t>(i)] = i;
  return lut;
}

std::string dump_lut(const Lut16& lut) {
  std::ostringstream out;
  for (int i = 0; i < kLutSize; ++i) {
    out << i << '\t' << lut.entries[static_cast<std::size_t>(i)] << '\n';
  }
  return out.str();
}

void validate_lut(const Lut16& lut) {
  for (int e : lut.entries) {
    if (e < 0 || e >= kPlaintextModulus) {
      throw OutOfRangeValue("lookup entry outside [0,32): " + std::to_string(e));
    }
  }
}

}  // namespace leuven
