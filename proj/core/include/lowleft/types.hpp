#pragma once

#include <cstdint>

namespace lowleft {

// 0-based position in a filtration / matrix. All file formats and reports
// use 1-based positions; the shift happens only at the I/O boundary.
using index_t = std::int64_t;

// Vertex identifiers are arbitrary non-negative integers, not required to
// be contiguous.
using vertex_id = std::int64_t;

// Filtration grades and distances.
using value_t = double;

} // namespace lowleft
