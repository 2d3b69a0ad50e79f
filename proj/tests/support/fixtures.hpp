#pragma once

#include <vector>

#include "lowleft/filtration.hpp"

namespace lowleft::testsupport {

inline filtration make_filtration(const std::vector<std::vector<vertex_id>>& specs,
                                  std::optional<std::vector<value_t>> grades = std::nullopt) {
    std::vector<simplex> simplices;
    simplices.reserve(specs.size());
    for (const auto& v : specs) simplices.push_back(simplex(v));
    return filtration(std::move(simplices), std::move(grades));
}

// a, b, c, ab, ac, bc, abc — the running example used throughout the tests.
inline filtration triangle_filtration() {
    return make_filtration({{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}});
}

} // namespace lowleft::testsupport
