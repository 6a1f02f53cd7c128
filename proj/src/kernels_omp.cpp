#include <omp.h>

#include <algorithm>

#include "kernels_detail.hpp"

namespace pytree::kernels {

namespace {

void append_all(std::vector<PrimTriple>& dst, std::vector<std::vector<PrimTriple>>& parts) {
  std::size_t total = dst.size();
  for (const auto& p : parts) total += p.size();
  dst.reserve(total);
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(dst));
}

}  // namespace

std::vector<PrimTriple> tree_triples_omp(const BigInt& max_n) {
  std::vector<PrimTriple> out;
  if (PrimTriple::root().n() > max_n) return out;

  // Breadth-first until there is enough independent work, then one serial
  // depth-first search per frontier subtree.
  const std::size_t want = 64 * static_cast<std::size_t>(omp_get_max_threads());
  std::vector<PrimTriple> frontier{PrimTriple::root()};
  while (!frontier.empty() && frontier.size() < want) {
    std::vector<PrimTriple> next;
    next.reserve(3 * frontier.size());
    for (PrimTriple& t : frontier) {
      for (PrimTriple& c : children(t)) {
        if (c.n() <= max_n) next.push_back(std::move(c));
      }
      out.push_back(std::move(t));
    }
    frontier = std::move(next);
  }

  std::vector<std::vector<PrimTriple>> parts(frontier.size());
  const auto count = static_cast<std::int64_t>(frontier.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    auto& local = parts[static_cast<std::size_t>(i)];
    std::vector<PrimTriple> stack{frontier[static_cast<std::size_t>(i)]};
    while (!stack.empty()) {
      PrimTriple t = std::move(stack.back());
      stack.pop_back();
      for (PrimTriple& c : children(t)) {
        if (c.n() <= max_n) stack.push_back(std::move(c));
      }
      local.push_back(std::move(t));
    }
  }
  append_all(out, parts);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PrimTriple> brute_force_triples_omp(const BigInt& max_n) {
  const std::uint64_t rows = detail::brute_force_rows(max_n);
  std::vector<std::vector<PrimTriple>> parts(rows + 1);
  const auto last = static_cast<std::int64_t>(rows);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t m = 2; m <= last; ++m) {
    detail::brute_force_row(static_cast<std::uint64_t>(m), max_n, parts[static_cast<std::size_t>(m)]);
  }
  std::vector<PrimTriple> out;
  append_all(out, parts);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pytree::kernels
