#include "pytree/core_matrix.hpp"

#include <stdexcept>

namespace pytree {

IntMat2 mul(const IntMat2& x, const IntMat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

std::ostream& operator<<(std::ostream& os, const IntMat2& m) {
  return os << '(' << m.a << ',' << m.b << ';' << m.c << ',' << m.d << ')';
}

std::ostream& operator<<(std::ostream& os, const TripleCoords& t) {
  return os << '(' << t.s << ',' << t.c << ',' << t.n << ')';
}

IntMat2 conjugate(const IntMat2& t, const IntMat2& x) {
  const BigInt det = t.det();
  if (det != 1 && det != -1) {
    throw std::domain_error("conjugate: det(T) = " + to_string(det) + ", expected +-1");
  }
  // T^-1 = adj(T) / det(T), and det = +-1.
  IntMat2 inv = t.adjugate();
  if (det == -1) inv = inv.scaled(-1);
  return t * x * inv;
}

bool is_nilpotent(const IntMat2& x) {
  return sgn(x.trace()) == 0 && sgn(x.det()) == 0;
}

NilpotentMat::NilpotentMat(BigInt x, BigInt y, BigInt z)
    : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {
  if (sgn(y_ * z_ + x_ * x_) != 0) {
    throw std::invalid_argument("NilpotentMat: y*z + x^2 != 0");
  }
}

NilpotentMat NilpotentMat::from_matrix(const IntMat2& m) {
  if (!is_nilpotent(m)) throw std::invalid_argument("NilpotentMat: matrix is not nilpotent");
  return NilpotentMat(m.a, m.b, m.c);
}

IntMat2 NilpotentDecomposition::reconstruct() const {
  const BigInt k = lambda * sign;
  return IntMat2{m * n, -n * n, m * m, -m * n}.scaled(k);
}

NilpotentDecomposition decompose(const NilpotentMat& x) {
  BigInt content = gcd(gcd(x.x(), x.y()), x.z());
  if (sgn(content) == 0) return {0, 1, 0, 1};

  // y*z = -x^2 <= 0, so the nonzero one of z, y fixes the sheet.
  const int sign = sgn(x.z()) != 0 ? sgn(x.z()) : -sgn(x.y());
  const BigInt k = content * sign;
  const BigInt xp = x.x() / k;
  const BigInt yp = x.y() / k;
  const BigInt zp = x.z() / k;

  auto m = exact_sqrt(zp);
  auto n_abs = exact_sqrt(-yp);
  if (!m || !n_abs) throw std::logic_error("decompose: primitive part is not (mn, -n^2; m^2, -mn)");

  BigInt n = sgn(*m) == 0 ? *n_abs : BigInt(xp / *m);
  if (abs(n) != *n_abs) throw std::logic_error("decompose: inconsistent off-diagonal entries");
  return {content, *m, n, sign};
}

TripleCoords triple_extract(const IntMat2& t) {
  if (!is_nilpotent(t)) throw std::invalid_argument("triple_extract: matrix is not nilpotent");
  return {abs(t.c + t.b), abs(2 * t.a), abs(t.c - t.b)};
}

}  // namespace pytree
