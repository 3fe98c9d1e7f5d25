#pragma once

#include <cstdint>
#include <vector>

#include "ckdual/ckalg.hpp"

namespace ckdual {

/// All valid CK matrices of size n, in lexicographic bit order
/// (row-major, 0 before 1). Intended for n <= 3 or so.
std::vector<CKMatrix> enumerate_ck_matrices(std::size_t n);

/// Deterministic sample of `count` valid CK matrices of size n
/// (rejection sampling from a seeded mt19937_64; duplicates possible).
std::vector<CKMatrix> sample_ck_matrices(std::size_t n, std::size_t count, std::uint64_t seed);

}  // namespace ckdual
