#pragma once

#include <cstdint>
#include <vector>

// Dense linear algebra over the prime field F_p. Internal utility shared by
// the field construction and the generic root finder.

namespace linroots::pmat {

using Row = std::vector<uint32_t>;
using Mat = std::vector<Row>;

uint64_t inv_mod(uint64_t a, uint64_t p);

/// In-place reduced row echelon form; returns pivot column indices.
std::vector<size_t> rref(Mat& m, uint64_t p);

size_t rank(Mat m, uint64_t p);

/// Basis of the right null space of an r x c matrix, canonical w.r.t. RREF.
Mat nullspace(const Mat& m, size_t cols, uint64_t p);

}  // namespace linroots::pmat
