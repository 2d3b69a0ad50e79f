#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lowleft/matrix.hpp"
#include "lowleft/pairing.hpp"

namespace lowleft {

// The four ways of reducing: columns or rows, on the boundary matrix or on
// its anti-transpose.
enum class orientation { col_boundary, col_coboundary, row_boundary, row_coboundary };

enum class optimization { none, clear, compress };

enum class matrix_target { boundary, coboundary };

struct strategy {
    orientation orient = orientation::row_boundary;
    optimization optim = optimization::compress;
};

bool is_row_orientation(orientation o);
bool is_coboundary(orientation o);

// clear only makes sense with column operations, compress only with row
// operations; everything else is rejected.
bool strategy_valid(const strategy& s);

std::string_view to_token(orientation o);  // "col-b" | "col-cob" | "row-b" | "row-cob"
std::string_view to_token(optimization o); // "none" | "clear" | "compress"
std::optional<orientation> orientation_from_token(std::string_view token);
std::optional<optimization> optimization_from_token(std::string_view token);

// Instrumentation counters. A line counts as processed when it was examined
// with a nonzero pivot and not skipped by an optimization; skipped_by_*
// count lines an optimization zeroed instead of reducing. symbol_flips is
// the total number of entries toggled by the additions.
struct reduction_stats {
    std::int64_t rows_processed = 0;
    std::int64_t cols_processed = 0;
    std::int64_t additions = 0;
    std::int64_t symbol_flips = 0;
    std::int64_t skipped_by_clear = 0;
    std::int64_t skipped_by_compress = 0;

    bool operator==(const reduction_stats&) const = default;
};

struct add_record {
    bool row_op = false;
    index_t src = 0;
    index_t dst = 0;
};

struct reduce_options {
    // Accumulate the transform (W for rows, V for columns) alongside the
    // reduction. Roughly doubles the work; not available with clear or
    // compress, which zero lines without recording how.
    bool track_certificate = false;
    // When set, every elementary addition is appended here.
    std::vector<add_record>* op_log = nullptr;
};

// For row reduction, reduced = transform * original (side::left); for
// column reduction, reduced = original * transform (side::right). The
// transform is invertible upper-triangular with unit diagonal.
struct reduction_certificate {
    enum class side_t { left, right };

    sparse_pivot_matrix transform;
    side_t side = side_t::left;
};

struct certificate_check {
    bool ok = false;
    std::string detail;
};

// Recomputes the product with gf2_product and checks shape, triangularity
// and the unit diagonal.
certificate_check verify_certificate(const sparse_pivot_matrix& original,
                                     const sparse_pivot_matrix& reduced,
                                     const reduction_certificate& cert);

struct reduction_result {
    sparse_pivot_matrix matrix;
    std::optional<reduction_certificate> certificate;
    reduction_stats stats;
};

// Left-to-right column additions until no two nonzero columns share a low.
reduction_result reduce_columns(sparse_pivot_matrix m, const reduce_options& opts = {});

// Row pivot reduction: rows are processed last to first, and a later row is
// added to an earlier one until no two nonzero rows share a left.
reduction_result reduce_rows(sparse_pivot_matrix m, const reduce_options& opts = {});

struct optimized_result {
    sparse_pivot_matrix matrix;
    std::vector<index_pair> pairs;  // in the indexing of the reduced target
    std::vector<index_t> skipped;   // lines zeroed by the optimization
    reduction_stats stats;
};

// Column reduction with the clear optimization: once (i, j) is a pair,
// column i is zeroed without reduction. Blocks are processed per dimension,
// decreasing on the boundary and increasing on the coboundary, so that the
// cleared column always lies in a later block.
optimized_result reduce_columns_clear(const filtration& f, matrix_target target,
                                      const reduce_options& opts = {});

// Row reduction with the compress optimization: a column pivot found while
// reducing one block marks its simplex negative, and the negative rows of
// the next block are zeroed without reduction. Increasing dimension on the
// boundary, decreasing on the coboundary.
optimized_result reduce_rows_compress(const filtration& f,
                                      matrix_target target = matrix_target::boundary,
                                      const reduce_options& opts = {});

struct strategy_result {
    std::vector<persistence_pair> pairs; // boundary positions, sorted by birth
    std::vector<index_t> essential;      // unpaired positions, ascending
    barcode bars;
    reduction_stats stats;
    std::optional<bool> certificate_ok;  // present when certificates were tracked
};

// Dispatches over the four orientations; coboundary results are translated
// back through i -> m-1-i before being reported. Pairs and barcode do not
// depend on the strategy.
strategy_result run_strategy(const filtration& f, const strategy& s,
                             const reduce_options& opts = {});

// Flat JSON record with fields strategy, optimization, rows_processed,
// cols_processed, additions, symbol_flips, skipped_by_clear,
// skipped_by_compress, pairs, essential.
std::string stats_to_json(const strategy& s, const reduction_stats& st,
                          std::size_t pairs, std::size_t essential);

} // namespace lowleft
