#include "lowleft/simplex.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace lowleft {

simplex::simplex(std::vector<vertex_id> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty())
        throw std::invalid_argument("a simplex needs at least one vertex");
    std::sort(vertices_.begin(), vertices_.end());
    if (vertices_.front() < 0)
        throw std::invalid_argument("vertex ids must be non-negative");
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw std::invalid_argument("duplicate vertex in simplex");
}

simplex::simplex(std::initializer_list<vertex_id> vertices)
    : simplex(std::vector<vertex_id>(vertices)) {}

std::string simplex::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t k = 0; k < vertices_.size(); ++k) {
        if (k > 0) os << ',';
        os << vertices_[k];
    }
    os << '}';
    return os.str();
}

std::vector<simplex> boundary_faces(const simplex& s) {
    if (s.dim() == 0) return {};
    std::vector<simplex> faces;
    faces.reserve(s.vertices().size());
    // Deleting the last vertex first yields the faces in lexicographic order.
    for (std::size_t skip = s.vertices().size(); skip-- > 0;) {
        std::vector<vertex_id> v;
        v.reserve(s.vertices().size() - 1);
        for (std::size_t k = 0; k < s.vertices().size(); ++k)
            if (k != skip) v.push_back(s.vertices()[k]);
        faces.push_back(simplex(std::move(v)));
    }
    return faces;
}

std::ostream& operator<<(std::ostream& os, const simplex& s) { return os << s.to_string(); }

} // namespace lowleft
