#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lowleft/simplex.hpp"

namespace lowleft {

// An ordered sequence of simplices in which every face precedes its
// cofaces, optionally carrying non-decreasing real grades. Immutable after
// construction; safe to share between threads. Whether the order really is
// a filtration is checked by validate_filtration, not by the constructor.
class filtration {
public:
    filtration() = default;
    explicit filtration(std::vector<simplex> simplices,
                        std::optional<std::vector<value_t>> grades = std::nullopt);

    index_t size() const { return static_cast<index_t>(simplices_.size()); }
    bool empty() const { return simplices_.empty(); }
    const simplex& operator[](index_t k) const { return simplices_.at(static_cast<std::size_t>(k)); }
    const std::vector<simplex>& simplices() const { return simplices_; }
    const std::optional<std::vector<value_t>>& grades() const { return grades_; }

private:
    std::vector<simplex> simplices_;
    std::optional<std::vector<value_t>> grades_;
};

struct filtration_violation {
    enum class kind { missing_face, duplicate, decreasing_grade };

    kind reason = kind::missing_face;
    index_t position = 0;             // 0-based offender
    std::optional<simplex> face;      // the absent face, for missing_face

    std::string message() const;      // human readable, 1-based position
};

struct validation_result {
    std::optional<filtration_violation> violation;

    bool ok() const { return !violation.has_value(); }
};

// Thrown by operations whose precondition is a valid filtration.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(filtration_violation v)
        : std::runtime_error(v.message()), violation_(std::move(v)) {}

    const filtration_violation& violation() const { return violation_; }

private:
    filtration_violation violation_;
};

// Checks the prefix property (every proper face appears earlier), absence
// of duplicates and grade monotonicity. Reports the first offending
// position.
validation_result validate_filtration(const filtration& f);

// Positions of the p-simplices per dimension p, each list in filtration
// order. Every position lands in exactly one block.
std::map<int, std::vector<index_t>> dimension_blocks(const filtration& f);

} // namespace lowleft
