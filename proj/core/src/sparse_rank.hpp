#pragma once

// Exact rank of sparse integer matrices over Q or Z/p by column reduction.

#include <cstdint>
#include <utility>
#include <vector>

#include "normdepth/complex.hpp"

namespace normdepth::detail {

/// Column as (row, value) pairs sorted by row, values nonzero.
using SparseColumn = std::vector<std::pair<int, std::int64_t>>;

/// Rank over `field`. Characteristic 0 uses fraction-free integer
/// elimination (64-bit with a multiprecision retry on overflow).
std::size_t sparse_rank(const std::vector<SparseColumn>& columns, int row_count,
                        FieldSpec field);

}  // namespace normdepth::detail
