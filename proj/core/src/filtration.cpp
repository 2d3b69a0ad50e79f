#include "lowleft/filtration.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace lowleft {

filtration::filtration(std::vector<simplex> simplices,
                       std::optional<std::vector<value_t>> grades)
    : simplices_(std::move(simplices)), grades_(std::move(grades)) {
    if (grades_ && grades_->size() != simplices_.size())
        throw std::invalid_argument("grades must match the number of simplices");
}

std::string filtration_violation::message() const {
    std::ostringstream os;
    os << "position " << position + 1 << ": ";
    switch (reason) {
    case kind::missing_face:
        os << "missing face";
        if (face) os << " " << face->to_string();
        break;
    case kind::duplicate:
        os << "duplicate simplex";
        break;
    case kind::decreasing_grade:
        os << "grade decreases";
        break;
    }
    return os.str();
}

validation_result validate_filtration(const filtration& f) {
    std::map<simplex, index_t> seen;
    const auto& grades = f.grades();
    for (index_t k = 0; k < f.size(); ++k) {
        const simplex& s = f[k];
        if (seen.count(s))
            return {filtration_violation{filtration_violation::kind::duplicate, k, s}};
        for (const simplex& face : boundary_faces(s))
            if (!seen.count(face))
                return {filtration_violation{filtration_violation::kind::missing_face, k, face}};
        if (grades && k > 0 && (*grades)[k] < (*grades)[k - 1])
            return {filtration_violation{filtration_violation::kind::decreasing_grade, k,
                                         std::nullopt}};
        seen.emplace(s, k);
    }
    return {};
}

std::map<int, std::vector<index_t>> dimension_blocks(const filtration& f) {
    std::map<int, std::vector<index_t>> blocks;
    for (index_t k = 0; k < f.size(); ++k) blocks[f[k].dim()].push_back(k);
    return blocks;
}

} // namespace lowleft
