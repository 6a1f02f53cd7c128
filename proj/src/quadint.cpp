#include "pytree/quadint.hpp"

#include <stdexcept>

namespace pytree {

int QuadInt::real_sign() const {
  const int sa = sgn(a);
  const int sb = sgn(b);
  if (sa == 0) return sb;
  if (sb == 0 || sa == sb) return sa;
  // Opposite signs: the term with the larger square wins.
  return a * a > 2 * b * b ? sa : sb;
}

std::optional<QuadInt> exact_div(const QuadInt& x, const QuadInt& y) {
  const BigInt n = y.norm();
  if (sgn(n) == 0) throw std::domain_error("exact_div: division by zero");
  const QuadInt num = x * y.conj();
  if (!mpz_divisible_p(num.a.get_mpz_t(), n.get_mpz_t()) ||
      !mpz_divisible_p(num.b.get_mpz_t(), n.get_mpz_t())) {
    return std::nullopt;
  }
  return QuadInt{num.a / n, num.b / n};
}

QuadInt pow(QuadInt base, unsigned e) {
  QuadInt acc{1, 0};
  while (e > 0) {
    if (e & 1u) acc = acc * base;
    base = base * base;
    e >>= 1u;
  }
  return acc;
}

std::string format_quadint(const QuadInt& q, bool ascii) {
  std::string out = to_string(q.a);
  out += sgn(q.b) < 0 ? '-' : '+';
  out += to_string(abs(q.b));
  out += ascii ? "*sqrt2" : "√2";
  return out;
}

std::ostream& operator<<(std::ostream& os, const QuadInt& q) { return os << format_quadint(q); }

}  // namespace pytree
