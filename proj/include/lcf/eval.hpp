#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "lcf/tuple.hpp"

namespace lcf {

/// Exact value of the loosened Collatz function on a tuple (y_1,...,y_n),
/// kept as the raw numerator/denominator pair, never reduced:
///
///   N = sum_{i=1..n} 3^(n-i) * 2^(y_1+...+y_{i-1})
///   D = 2^(y_1+...+y_n) - 3^n
///
/// N is always >= 1 and D is never 0 (a power of two cannot equal a power
/// of three), so the quotient is a well-defined nonzero rational.
struct LcfValue {
  Int numerator;
  Int denominator;

  /// N/D as a canonical rational.
  Rat exact() const {
    Rat r(numerator, denominator);
    r.canonicalize();
    return r;
  }

  /// The positive integer k with N = k*D, when one exists.
  std::optional<Int> positive_integer_value() const {
    if (denominator <= 0) return std::nullopt;
    if (!mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t())) {
      return std::nullopt;
    }
    return Int(numerator / denominator);
  }

  bool operator==(const LcfValue&) const = default;
};

struct SatisfactionResult {
  bool satisfying = false;
  std::optional<Int> value;  // present iff satisfying
  LcfValue raw;
};

/// Evaluates the loosened Collatz function exactly. A non-positive
/// denominator is a legal result (the tuple simply cannot satisfy); only
/// the empty tuple is rejected, since its denominator degenerates to 0.
inline LcfValue eval_lcf(const Tuple& t) {
  if (t.empty()) throw DomainError("eval_lcf: empty tuple");
  const std::size_t n = t.size();

  Int num = 0;
  Int p3 = pow3(n - 1);          // 3^(n-i), starting at i=1
  Int p2 = 1;                    // 2^(y_1+...+y_{i-1})
  std::uint64_t prefix = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      prefix = checked_add(prefix, t[i - 1]);
      if (prefix > kMaxPowerBits) {
        throw DomainError("eval_lcf: entry sum too large for exact arithmetic");
      }
      mpz_mul_2exp(p2.get_mpz_t(), p2.get_mpz_t(),
                   static_cast<mp_bitcnt_t>(t[i - 1]));
    }
    num += p3 * p2;
    if (i + 1 < n) mpz_divexact_ui(p3.get_mpz_t(), p3.get_mpz_t(), 3);
  }
  const std::uint64_t total = checked_add(prefix, t[n - 1]);
  Int den = pow2(total) - pow3(n);
  return LcfValue{std::move(num), std::move(den)};
}

/// A tuple satisfies the LCF iff its value is a positive integer, i.e.
/// D > 0 and D | N. Satisfying tuples are exactly the cycle
/// representatives of the loosened Collatz graph.
inline SatisfactionResult is_satisfying(const Tuple& t) {
  SatisfactionResult r;
  r.raw = eval_lcf(t);
  r.value = r.raw.positive_integer_value();
  r.satisfying = r.value.has_value();
  return r;
}

/// The k-th tripling vertex of the circuit generated by t from x1, as an
/// exact rational:
///
///   x_k = (3^(k-1)*x1 + sum_{i=1..k-1} 3^(k-1-i)*2^(y_1+...+y_{i-1}))
///         / 2^(y_1+...+y_{k-1})
///
/// k is 1-based; x_1 = x1 by construction.
inline Rat closed_form_vertex(const Tuple& t, const Int& x1, std::size_t k) {
  if (t.empty()) throw DomainError("closed_form_vertex: empty tuple");
  if (x1 < 1) throw DomainError("closed_form_vertex: start must be >= 1");
  if (k < 1 || k > t.size()) {
    throw DomainError("closed_form_vertex: index out of range");
  }
  Int num = pow3(k - 1) * x1;
  Int p3 = (k >= 2) ? pow3(k - 2) : Int(0);  // 3^(k-1-i), starting at i=1
  Int p2 = 1;
  std::uint64_t prefix = 0;
  for (std::size_t i = 1; i + 1 <= k; ++i) {
    if (i > 1) {
      prefix = checked_add(prefix, t[i - 2]);
      mpz_mul_2exp(p2.get_mpz_t(), p2.get_mpz_t(),
                   static_cast<mp_bitcnt_t>(t[i - 2]));
    }
    num += p3 * p2;
    if (i + 2 <= k) mpz_divexact_ui(p3.get_mpz_t(), p3.get_mpz_t(), 3);
  }
  std::uint64_t denom_exp = 0;
  for (std::size_t i = 0; i + 1 < k; ++i) denom_exp = checked_add(denom_exp, t[i]);
  Rat r(num, pow2(denom_exp));
  r.canonicalize();
  return r;
}

/// Two satisfying tuples name the same cycle iff one is a rotation of the
/// other, i.e. their canonical forms coincide. Undefined (and rejected)
/// for non-satisfying tuples.
inline bool same_cycle(const Tuple& a, const Tuple& b) {
  if (!is_satisfying(a).satisfying || !is_satisfying(b).satisfying) {
    throw DomainError("same_cycle: undefined for non-satisfying tuples");
  }
  return canonical_form(a) == canonical_form(b);
}

}  // namespace lcf
