// Bulk enumeration kernels behind `verify`.
//
// Each kernel has a serial reference and an OpenMP version. Both return the
// same vector, sorted by (hypotenuse, S), so they can be compared directly.
#pragma once

#include <cstddef>
#include <vector>

#include "pytree/bigint.hpp"
#include "pytree/tree.hpp"

namespace pytree::kernels {

// Tree search from (3,4,5), pruned at hypotenuse > max_n. Duplicates are kept
// (there should be none).
std::vector<PrimTriple> tree_triples_serial(const BigInt& max_n);
std::vector<PrimTriple> tree_triples_omp(const BigInt& max_n);

// Direct scan over coprime, opposite-parity m > n >= 1 with m^2 + n^2 <= max_n.
// Does not use the tree module.
std::vector<PrimTriple> brute_force_triples_serial(const BigInt& max_n);
std::vector<PrimTriple> brute_force_triples_omp(const BigInt& max_n);

struct VerifyReport {
  std::size_t tree_count = 0;
  std::size_t oracle_count = 0;
  std::vector<PrimTriple> only_tree;
  std::vector<PrimTriple> only_oracle;
  std::vector<PrimTriple> duplicates;  // repeated in the tree search

  bool match() const { return only_tree.empty() && only_oracle.empty() && duplicates.empty(); }
};

VerifyReport compare(const std::vector<PrimTriple>& tree, const std::vector<PrimTriple>& oracle);
VerifyReport verify(const BigInt& max_n, bool parallel = true);

}  // namespace pytree::kernels
