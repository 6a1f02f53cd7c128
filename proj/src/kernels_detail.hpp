// Pieces shared by the serial and OpenMP kernels.
#pragma once

#include <cstdint>
#include <vector>

#include "pytree/kernels.hpp"

namespace pytree::kernels::detail {

// Largest m worth scanning for hypotenuse <= max_n.
std::uint64_t brute_force_rows(const BigInt& max_n);
// All triples with this m and m^2 + n^2 <= max_n, appended to out.
void brute_force_row(std::uint64_t m, const BigInt& max_n, std::vector<PrimTriple>& out);

}  // namespace pytree::kernels::detail
