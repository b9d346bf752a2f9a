#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lcf {

using Int = mpz_class;
using Rat = mpq_class;

/// Tuple entries are machine-width counts of halving steps. Everything
/// derived from them (numerators, denominators, cycle vertices) is
/// arbitrary-precision.
using Entry = std::uint64_t;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad input to a library operation: empty tuple where one is required,
/// monoid membership violation, out-of-range index, invalid config.
struct DomainError : Error {
  using Error::Error;
};

/// Filesystem-level failure (unreadable or unwritable path).
struct IoError : Error {
  using Error::Error;
};

/// Unusable checkpoint file: unparseable or structurally wrong.
struct CheckpointError : Error {
  using Error::Error;
};

/// Largest exponent accepted when materializing 2^e exactly. 2^(2^31) is a
/// 256 MiB number; anything past that is a config mistake, not a search.
inline constexpr std::uint64_t kMaxPowerBits = std::uint64_t{1} << 31;

inline Int pow2(std::uint64_t e) {
  if (e > kMaxPowerBits) {
    throw DomainError("exponent too large for exact evaluation: 2^" +
                      std::to_string(e));
  }
  Int r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
  return r;
}

inline Int pow3(std::uint64_t e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 3, static_cast<unsigned long>(e));
  return r;
}

/// a + b with an overflow check; entry sums feed exponents, so silently
/// wrapping would corrupt evaluation.
inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw DomainError("entry sum overflows 64 bits");
  }
  return r;
}

inline std::string dec(const Int& v) { return v.get_str(); }

inline std::string dec(const Rat& v) {
  Rat c = v;
  c.canonicalize();
  return c.get_str();
}

}  // namespace lcf
