// Integer factorization and modular square roots at desk scale.
#pragma once

#include <vector>

#include "pytree/bigint.hpp"

namespace pytree {

struct PrimePower {
  BigInt prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Miller-Rabin with the first 13 prime bases: deterministic below 3.3e24,
// which covers everything factorize is meant for.
bool is_prime(const BigInt& n);

// Primes ascending. factorize(1) is empty. Trial division by small primes,
// then Pollard rho (Brent) on what is left.
// Throws std::invalid_argument for n < 1.
std::vector<PrimePower> factorize(const BigInt& n);

// Some r with r^2 = a (mod p), p an odd prime and a a quadratic residue.
// Tonelli-Shanks. Throws std::domain_error if a is a non-residue.
BigInt sqrt_mod_prime(const BigInt& a, const BigInt& p);

}  // namespace pytree
