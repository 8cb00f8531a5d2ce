#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace gbcore {

using Index = std::size_t;

/// Matrix shape. Both extents are at least one; indices are 0-based.
struct Dimensions {
    Index nrows = 0;
    Index ncols = 0;

    friend bool operator==(const Dimensions&, const Dimensions&) = default;
};

inline Dimensions transposed(Dimensions d) { return {d.ncols, d.nrows}; }

std::string to_string(Dimensions d);

/// Ordered list of row or column indices; repetition is allowed.
using IndexVector = std::vector<Index>;

}  // namespace gbcore
