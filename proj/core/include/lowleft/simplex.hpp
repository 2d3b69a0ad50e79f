#pragma once

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "lowleft/types.hpp"

namespace lowleft {

// A simplex is a strictly increasing tuple of non-negative vertex ids.
// Vertices may be given in any order; duplicates and negative ids are
// rejected with std::invalid_argument.
class simplex {
public:
    explicit simplex(std::vector<vertex_id> vertices);
    simplex(std::initializer_list<vertex_id> vertices);

    int dim() const { return static_cast<int>(vertices_.size()) - 1; }
    const std::vector<vertex_id>& vertices() const { return vertices_; }

    auto operator<=>(const simplex&) const = default;

    std::string to_string() const; // "{0,1,2}"

private:
    std::vector<vertex_id> vertices_;
};

// The (dim-1)-faces obtained by deleting one vertex each, in lexicographic
// order. A vertex has no faces; a d-simplex has exactly d+1.
std::vector<simplex> boundary_faces(const simplex& s);

std::ostream& operator<<(std::ostream& os, const simplex& s);

} // namespace lowleft
