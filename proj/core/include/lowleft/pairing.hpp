#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lowleft/matrix.hpp"

namespace lowleft {

// A matrix-level pivot pair: birth row index and death column index.
struct index_pair {
    index_t birth = 0;
    index_t death = 0;

    auto operator<=>(const index_pair&) const = default;
};

// A pair with the homological dimension of its birth simplex attached.
struct persistence_pair {
    index_t birth = 0;
    index_t death = 0;
    int dim = 0;

    auto operator<=>(const persistence_pair&) const = default;
};

// One pair (i, left(i)) per nonzero row of a row reduced matrix, sorted by
// birth. Rejects duplicate left pivots and pairs with birth >= death.
std::vector<index_pair> pairs_from_row_reduced(const sparse_pivot_matrix& r);

// One pair (low(j), j) per nonzero column of a column reduced matrix.
std::vector<index_pair> pairs_from_column_reduced(const sparse_pivot_matrix& c);

// Rank-based pairing test on the ORIGINAL matrix: four rank_gf2 calls.
// Returns 1 exactly at the persistence pairs of a boundary matrix. The
// 0-based entry (i, j) corresponds to the 1-based pair (i+1, j+1).
int pairing_oracle(const sparse_pivot_matrix& d, index_t i, index_t j);

// Full scan of pairing_oracle over all i < j, sorted by birth.
std::vector<index_pair> oracle_pairs(const sparse_pivot_matrix& d);

// Looks up birth-simplex dimensions and checks pair consistency with f
// (bounds, birth < death, death dimension = birth dimension + 1, no
// position reused). Throws std::invalid_argument otherwise.
std::vector<persistence_pair> attach_dimensions(const filtration& f,
                                                const std::vector<index_pair>& pairs);

// Intervals [birth, death) grouped by dimension, plus essential births (no
// death). Index-level content always satisfies 2*pairs + essential = m;
// zero-length grade intervals are dropped only in the value-level view.
struct barcode {
    std::map<int, std::vector<index_pair>> intervals;
    std::map<int, std::vector<index_t>> essential;
    std::optional<std::vector<value_t>> grades; // per position, when known
    index_t positions = 0;                      // m

    std::size_t pair_count() const;
    std::size_t essential_count() const;

    // One interval per line: "<dim> <birth> <death>" with 1-based positions
    // and "inf" for essential deaths. The value view appends the two grade
    // columns and omits intervals whose grades coincide; it requires grades.
    std::string to_text(bool value_view = false) const;
};

barcode assemble_barcode(const filtration& f, const std::vector<persistence_pair>& pairs);

// Number of lines a compress/clear reduction has to process for an acyclic
// complex with v vertices and maximal dimension d: sum over h = 0..d+1 of
// C(v-1, h). Terms with h > v-1 contribute nothing.
std::uint64_t acyclic_reduction_count(int vertex_count, int max_dim);

} // namespace lowleft
