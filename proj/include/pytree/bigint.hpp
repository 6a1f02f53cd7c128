// Arbitrary-precision integer helpers shared by every module.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace pytree {

using BigInt = mpz_class;

inline BigInt isqrt(const BigInt& v) {
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

// Root of a perfect square, nullopt otherwise (including negatives).
inline std::optional<BigInt> exact_sqrt(const BigInt& v) {
  if (sgn(v) < 0 || mpz_perfect_square_p(v.get_mpz_t()) == 0) return std::nullopt;
  return isqrt(v);
}

inline bool is_odd(const BigInt& v) { return mpz_odd_p(v.get_mpz_t()) != 0; }
inline bool is_even(const BigInt& v) { return mpz_even_p(v.get_mpz_t()) != 0; }

// Least nonnegative residue of v modulo m > 0.
inline unsigned long mod_ui(const BigInt& v, unsigned long m) {
  return mpz_fdiv_ui(v.get_mpz_t(), m);
}

inline std::string to_string(const BigInt& v) { return v.get_str(10); }

// Strict decimal: optional '-', no leading zeros, no '+', no whitespace.
// Throws std::invalid_argument on anything else.
BigInt parse_bigint(std::string_view text);

}  // namespace pytree
