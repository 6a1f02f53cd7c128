#include "pytree/diffpaths.hpp"

#include <stdexcept>

#include "pytree/factorize.hpp"

namespace pytree {

namespace {

void require_odd(const BigInt& d, const char* who) {
  if (!is_odd(d)) {
    throw std::invalid_argument(std::string(who) + ": " + to_string(d) + " is even; differences are odd");
  }
}

unsigned long mod8(const BigInt& v) { return mod_ui(v, 8); }

// Descent from q0 = p for any prime p = +-1 (mod 8); these are exactly the
// odd primes for which 8 is a square mod p.
DescentTrace descend(const BigInt& p) {
  DescentTrace trace{p, {}};
  BigInt z = sqrt_mod_prime(8, p);
  if (z > p - z) z = p - z;
  BigInt q = p;
  while (true) {
    const BigInt next = (z * z - 8) / q;
    trace.steps.push_back({z, next});
    if (abs(next) <= 2) break;
    q = next;
    const BigInt aq = abs(q);
    BigInt r = z % aq;
    if (r > aq - r) r = aq - r;
    z = r;
  }
  return trace;
}

// Element of norm +p for a prime p = +-1 (mod 8).
QuadInt prime_element(const BigInt& p) { return reconstruct(descend(p)); }

// Associate of u (under +-1, conjugation and powers of 3 + 2 sqrt 2) with
// least |a|, then a > 0 and b >= 0.
QuadInt canonical_associate(QuadInt u) {
  while (true) {
    QuadInt up = u * QuadInt::unit_pos();
    QuadInt down = u * QuadInt::unit_pos_inv();
    if (abs(up.a) < abs(u.a)) {
      u = std::move(up);
    } else if (abs(down.a) < abs(u.a)) {
      u = std::move(down);
    } else {
      break;
    }
  }
  if (sgn(u.a) < 0) u = -u;
  if (sgn(u.b) < 0) u = u.conj();
  return u;
}

// Some element of norm |d|, assuming d passes is_representable_R.
QuadInt build_element(const BigInt& abs_d) {
  QuadInt u{1, 0};
  for (const PrimePower& pp : factorize(abs_d)) {
    const unsigned long r = mod8(pp.prime);
    if (r == 3 || r == 5) {
      BigInt half;
      mpz_pow_ui(half.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent / 2);
      u = u * QuadInt{half, 0};
    } else {
      u = u * pow(prime_element(pp.prime), pp.exponent);
    }
  }
  return u;
}

bool in_positive_cone(const QuadInt& q) { return q.a >= 1 && q.b >= 1; }

// First element of u's (1 + sqrt 2)-orbit with both coordinates >= 1 and the
// same norm as u.
QuadInt orbit_root(QuadInt u) {
  const BigInt target = u.norm();
  if (u.real_sign() < 0) u = -u;
  while (!in_positive_cone(u)) u = u * QuadInt::unit_neg();
  while (true) {
    QuadInt down = u * QuadInt::unit_neg_small();
    if (!in_positive_cone(down)) break;
    u = std::move(down);
  }
  if (u.norm() != target) u = u * QuadInt::unit_neg();
  return u;
}

}  // namespace

Differences differences(const PrimTriple& t) {
  return {t.n() - t.c(), t.n() - t.s(), t.c() - t.s()};
}

BigInt difference(const PrimTriple& t, DiffForm form) {
  switch (form) {
    case DiffForm::P: return t.n() - t.c();
    case DiffForm::Q: return t.n() - t.s();
    case DiffForm::R: return t.c() - t.s();
  }
  throw std::logic_error("difference: bad form");
}

ChildKind invariant_child_kind(DiffForm form) {
  switch (form) {
    case DiffForm::P: return ChildKind::UMinus;
    case DiffForm::Q: return ChildKind::LPlus;
    case DiffForm::R: return ChildKind::UPlus;
  }
  throw std::logic_error("invariant_child_kind: bad form");
}

std::vector<PrimTriple> difference_path(const PrimTriple& t0, DiffForm form, std::size_t k) {
  if (k == 0) throw std::invalid_argument("difference_path: k must be >= 1");
  const ChildKind kind = invariant_child_kind(form);
  std::vector<PrimTriple> out;
  out.reserve(k);
  out.push_back(t0);
  while (out.size() < k) out.push_back(child(out.back(), kind));
  return out;
}

bool is_representable_R(const BigInt& d) {
  require_odd(d, "is_representable_R");
  if (mod8(d) != 1) return false;
  for (const PrimePower& pp : factorize(abs(d))) {
    const unsigned long r = mod8(pp.prime);
    if ((r == 3 || r == 5) && pp.exponent % 2 != 0) return false;
  }
  return true;
}

bool prime_residue_criterion(const BigInt& d) {
  require_odd(d, "prime_residue_criterion");
  for (const PrimePower& pp : factorize(abs(d))) {
    const unsigned long r = mod8(pp.prime);
    if (r != 1 && r != 7) return false;
    if (pp.exponent % 2 != 0 && r != 1) return false;
  }
  return true;
}

DescentTrace lagrange_descent(const BigInt& p) {
  if (mod8(p) != 1 || !is_prime(p)) {
    throw std::invalid_argument("lagrange_descent: " + to_string(p) + " is not a prime = 1 (mod 8)");
  }
  return descend(p);
}

QuadInt reconstruct(const DescentTrace& trace) {
  if (trace.steps.empty()) throw std::invalid_argument("reconstruct: empty trace");
  const BigInt& last = trace.steps.back().next_q;
  QuadInt cur;
  if (last == 1) cur = {1, 0};
  else if (last == -1) cur = {1, 1};
  else if (last == 2) cur = {2, 1};
  else if (last == -2) cur = {0, 1};
  else throw std::invalid_argument("reconstruct: trace does not end at |q| <= 2");

  // N(cur) = q_{i+1} and z_i^2 - 8 = q_i q_{i+1}, so (z_i +- 2 sqrt 2) / cur has
  // norm q_i whenever the division is exact.
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    auto next = exact_div({it->z, 2}, cur);
    if (!next) next = exact_div({it->z, -2}, cur);
    if (!next) throw std::logic_error("reconstruct: neither sign of z = " + to_string(it->z) + " divides");
    cur = std::move(*next);
  }
  if (cur.norm() != trace.p) throw std::logic_error("reconstruct: norm mismatch");
  return cur;
}

QuadInt solve_norm(const BigInt& d) {
  require_odd(d, "solve_norm");
  if (is_representable_R(d)) {
    QuadInt u = build_element(abs(d));
    if (sgn(d) < 0) u = u * QuadInt::unit_neg();
    return canonical_associate(std::move(u));
  }
  if (is_representable_R(-d)) return QuadInt::unit_neg_small() * solve_norm(-d);
  throw std::domain_error("solve_norm: neither " + to_string(d) + " nor its negative is x^2 - 8y^2");
}

std::optional<std::string> difference_obstruction(const BigInt& d) {
  if (!is_odd(d)) return to_string(d) + " is even, but S - C is always odd";
  for (const PrimePower& pp : factorize(abs(d))) {
    const unsigned long r = mod8(pp.prime);
    if (r != 1 && r != 7) {
      return "prime " + to_string(pp.prime) + " divides " + to_string(d) + " and is " + std::to_string(r) +
             " mod 8; a coprime x^2 - 2y^2 only has prime factors = +-1 (mod 8)";
    }
  }
  return std::nullopt;
}

PrimTriple root_triple_for_difference(const BigInt& d) {
  require_odd(d, "root_triple_for_difference");
  if (auto why = difference_obstruction(d)) throw std::domain_error("root_triple_for_difference: " + *why);

  const auto factors = factorize(abs(d));
  std::vector<QuadInt> primes;
  primes.reserve(factors.size());
  for (const PrimePower& pp : factors) primes.push_back(prime_element(pp.prime));

  // Primitive elements of norm +-|d| up to units: one conjugate choice per
  // prime. Each choice is a separate UPlus path; keep the smallest root.
  std::optional<PrimTriple> best;
  const std::size_t choices = std::size_t{1} << primes.size();
  for (std::size_t mask = 0; mask < choices; ++mask) {
    QuadInt u{1, 0};
    for (std::size_t i = 0; i < primes.size(); ++i) {
      const QuadInt& pi = (mask >> i & 1u) ? primes[i].conj() : primes[i];
      u = u * pow(pi, factors[i].exponent);
    }
    if (sgn(d) < 0) u = u * QuadInt::unit_neg();
    const QuadInt r = orbit_root(std::move(u));
    // x = m - n, y = n gives S - C = x^2 - 2y^2.
    PrimTriple t = triple_from_params(ParamPair(r.a + r.b, r.b));
    if (!best || t < *best) best = std::move(t);
  }
  return *best;
}

}  // namespace pytree
