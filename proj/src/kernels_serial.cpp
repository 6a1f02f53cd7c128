#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "kernels_detail.hpp"

namespace pytree::kernels {

namespace detail {

std::uint64_t brute_force_rows(const BigInt& max_n) {
  if (max_n < 2) return 0;
  const BigInt m = isqrt(max_n - 1);
  if (!m.fits_ulong_p()) throw std::invalid_argument("brute force: bound too large");
  return m.get_ui();
}

void brute_force_row(std::uint64_t m, const BigInt& max_n, std::vector<PrimTriple>& out) {
  const BigInt bm = static_cast<unsigned long>(m);
  const BigInt mm = bm * bm;
  for (std::uint64_t n = (m % 2 == 0) ? 1 : 2; n < m; n += 2) {
    if (std::gcd(m, n) != 1) continue;
    const BigInt bn = static_cast<unsigned long>(n);
    const BigInt nn = bn * bn;
    if (mm + nn > max_n) break;
    out.emplace_back(mm - nn, 2 * bm * bn, mm + nn);
  }
}

}  // namespace detail

std::vector<PrimTriple> tree_triples_serial(const BigInt& max_n) {
  std::vector<PrimTriple> out;
  if (PrimTriple::root().n() > max_n) return out;
  std::vector<PrimTriple> stack{PrimTriple::root()};
  while (!stack.empty()) {
    PrimTriple t = std::move(stack.back());
    stack.pop_back();
    for (PrimTriple& c : children(t)) {
      if (c.n() <= max_n) stack.push_back(std::move(c));
    }
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PrimTriple> brute_force_triples_serial(const BigInt& max_n) {
  std::vector<PrimTriple> out;
  const std::uint64_t rows = detail::brute_force_rows(max_n);
  for (std::uint64_t m = 2; m <= rows; ++m) detail::brute_force_row(m, max_n, out);
  std::sort(out.begin(), out.end());
  return out;
}

VerifyReport compare(const std::vector<PrimTriple>& tree, const std::vector<PrimTriple>& oracle) {
  VerifyReport rep;
  rep.tree_count = tree.size();
  rep.oracle_count = oracle.size();

  std::vector<PrimTriple> uniq;
  uniq.reserve(tree.size());
  for (const PrimTriple& t : tree) {
    if (!uniq.empty() && uniq.back() == t) {
      if (rep.duplicates.empty() || !(rep.duplicates.back() == t)) rep.duplicates.push_back(t);
    } else {
      uniq.push_back(t);
    }
  }
  std::set_difference(uniq.begin(), uniq.end(), oracle.begin(), oracle.end(),
                      std::back_inserter(rep.only_tree));
  std::set_difference(oracle.begin(), oracle.end(), uniq.begin(), uniq.end(),
                      std::back_inserter(rep.only_oracle));
  return rep;
}

VerifyReport verify(const BigInt& max_n, bool parallel) {
  if (parallel) return compare(tree_triples_omp(max_n), brute_force_triples_omp(max_n));
  return compare(tree_triples_serial(max_n), brute_force_triples_serial(max_n));
}

}  // namespace pytree::kernels
