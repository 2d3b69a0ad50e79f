#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lowleft/filtration.hpp"

namespace lowleft {

class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, const std::string& what)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    // 1-based input line, 0 when the error concerns the input as a whole.
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Finite metric on points 0..n-1, stored as the lower triangle.
struct distance_matrix {
    index_t n = 0;
    std::vector<value_t> entries; // row k has k entries, k = 1..n-1

    value_t operator()(index_t p, index_t q) const;

    static distance_matrix from_points(const std::vector<std::vector<value_t>>& points);
};

// Explicit filtration format: one simplex per line as space-separated
// vertex ids, optionally followed by "@ <grade>"; line order is filtration
// order; blank lines are ignored. Grades must be given on all lines or on
// none. The result is validated.
filtration parse_explicit_filtration(std::string_view text);

// Whitespace/comma-separated reals, row-by-row lower triangle. The number
// of points is inferred from the entry count, which must be triangular.
distance_matrix parse_lower_distance_matrix(std::string_view text);

// One point per line, whitespace-separated coordinates; the dimension is
// fixed by the first line.
std::vector<std::vector<value_t>> parse_point_cloud(std::string_view text);

// All simplices of dimension <= max_dim whose diameter is at most
// threshold, ordered by (diameter, dimension, lexicographic vertex order);
// grades are the diameters. Vertices have diameter 0.
filtration build_rips(const distance_matrix& dm, int max_dim, value_t threshold);

} // namespace lowleft
