// Coordinate differences along tree paths and the norm-form machinery that
// finds where a given difference first appears.
//
// For a triple with parameters (m, n):
//   P = N - C = (m - n)^2         preserved by UMinus
//   Q = N - S = 2 n^2             preserved by LPlus
//   R = C - S = (m + n)^2 - 2m^2  negated by UPlus
// so S - C = -R = (m - n)^2 - 2 n^2 is a value of the norm form x^2 - 2y^2 on
// Z[sqrt(2)], and multiplying by the unit 1 + sqrt(2) walks the UPlus path.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pytree/bigint.hpp"
#include "pytree/quadint.hpp"
#include "pytree/tree.hpp"

namespace pytree {

enum class DiffForm { P, Q, R };

struct Differences {
  BigInt p, q, r;
  friend bool operator==(const Differences&, const Differences&) = default;
};

Differences differences(const PrimTriple& t);
BigInt difference(const PrimTriple& t, DiffForm form);

// P -> UMinus, Q -> LPlus, R -> UPlus.
ChildKind invariant_child_kind(DiffForm form);

// t0 followed by k-1 steps along invariant_child_kind(form).
// Throws std::invalid_argument if k == 0.
std::vector<PrimTriple> difference_path(const PrimTriple& t0, DiffForm form, std::size_t k);

// Whether x^2 - 8y^2 = d has an integer solution: d = 1 (mod 8) and every
// prime = 3, 5 (mod 8) divides d to an even power. Throws std::invalid_argument
// for even d (including 0).
bool is_representable_R(const BigInt& d);

// The prime-residue test as usually quoted: every prime of |d| is +-1 (mod 8)
// and those with odd exponent are 1 (mod 8). Kept for comparison only; it
// disagrees with is_representable_R on e.g. 9, 161 and -7.
bool prime_residue_criterion(const BigInt& d);

// Lagrange descent for x^2 - 8y^2 = p. Each step records z_i and the next
// modulus q_{i+1} = (z_i^2 - 8) / q_i, starting from q_0 = p and stopping once
// |q| <= 2. z_0 is the least root of z^2 = 8 (mod p) below p/2. Each later z is
// the previous one reduced mod |q| into [0, |q|/2], which keeps every
// reconstruction division exact.
struct DescentStep {
  BigInt z;
  BigInt next_q;
  friend bool operator==(const DescentStep&, const DescentStep&) = default;
};

struct DescentTrace {
  BigInt p;
  std::vector<DescentStep> steps;
};

// Throws std::invalid_argument unless p is a prime = 1 (mod 8).
DescentTrace lagrange_descent(const BigInt& p);

// Element of norm exactly trace.p, built back up from the last modulus.
QuadInt reconstruct(const DescentTrace& trace);

// An element of norm d, for odd d with d or -d representable by x^2 - 8y^2.
// When d itself is representable the result is the associate with least |a|,
// normalized to a > 0 and b >= 0 (so b is even). Otherwise it is
// (-1 + sqrt(2)) * solve_norm(-d).
// Throws std::invalid_argument for even d, std::domain_error otherwise.
QuadInt solve_norm(const BigInt& d);

// Why no primitive triple has S - C = d, or nullopt if one does. One exists
// iff d is odd and every prime factor of |d| is +-1 (mod 8).
std::optional<std::string> difference_obstruction(const BigInt& d);

// The smallest-hypotenuse triple with S - C = d. It starts the UPlus path on
// which |S - C| = |d| persists (the sign alternates), and no ancestor has
// S - C = d. Throws std::invalid_argument for even d, std::domain_error when
// difference_obstruction(d) is set.
PrimTriple root_triple_for_difference(const BigInt& d);

}  // namespace pytree
