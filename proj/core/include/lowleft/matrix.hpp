#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lowleft/filtration.hpp"
#include "lowleft/types.hpp"

namespace lowleft {

// GF(2) matrix stored as sorted support lists, with a column view and a row
// view kept consistent, so that low(j), left(i) and both kinds of
// elementary addition are cheap. Mutable during reduction; concurrent
// read-only queries are safe.
class sparse_pivot_matrix {
public:
    sparse_pivot_matrix() = default;
    sparse_pivot_matrix(index_t n_rows, index_t n_cols);

    // Builds both views from per-column supports (each strictly increasing).
    static sparse_pivot_matrix from_columns(index_t n_rows,
                                            std::vector<std::vector<index_t>> columns);
    static sparse_pivot_matrix identity(index_t n);

    index_t n_rows() const { return n_rows_; }
    index_t n_cols() const { return n_cols_; }

    // Row index of the lowest 1 in column j, or nullopt for a zero column.
    std::optional<index_t> low(index_t j) const;
    // Column index of the leftmost 1 in row i, or nullopt for a zero row.
    std::optional<index_t> left(index_t i) const;

    const std::vector<index_t>& column(index_t j) const;
    const std::vector<index_t>& row(index_t i) const;
    bool entry(index_t i, index_t j) const;

    // GF(2) addition of column src into dst (symmetric difference of the
    // supports). Returns the number of entries toggled, i.e. |column(src)|.
    index_t add_column(index_t src, index_t dst);
    // GF(2) addition of row src into dst. Returns |row(src)|.
    index_t add_row(index_t src, index_t dst);

    void zero_column(index_t j);
    void zero_row(index_t i);
    void toggle(index_t i, index_t j);

    // Entry (i,j) goes to (n_cols-1-j, n_rows-1-i); an involution.
    sparse_pivot_matrix anti_transpose() const;

    bool operator==(const sparse_pivot_matrix& other) const;

    // Dense 0/1 grid, one row per line, no separators.
    std::string debug_dump() const;

private:
    index_t n_rows_ = 0;
    index_t n_cols_ = 0;
    std::vector<std::vector<index_t>> cols_; // sorted row indices per column
    std::vector<std::vector<index_t>> rows_; // sorted column indices per row

    void check_col(index_t j) const;
    void check_row(index_t i) const;
};

// Lower-left submatrix selection: rows >= row_begin, columns < col_end.
// Empty selections (row_begin == n_rows, col_end == 0) are allowed.
struct submatrix_spec {
    index_t row_begin = 0;
    index_t col_end = 0;
};

// GF(2) rank of the selected submatrix by plain Gaussian elimination on a
// dense bit-packed copy. Deliberately independent from the reduction
// strategies; this is the trusted oracle.
index_t rank_gf2(const sparse_pivot_matrix& m, submatrix_spec spec);

// Plain GF(2) matrix product, used to check reduction certificates.
sparse_pivot_matrix gf2_product(const sparse_pivot_matrix& a, const sparse_pivot_matrix& b);

// The m x m matrix whose column j holds the positions of the boundary faces
// of the j-th simplex; strictly upper-triangular for any valid filtration.
// Throws validation_error when f is not a valid filtration.
sparse_pivot_matrix build_boundary_matrix(const filtration& f);

} // namespace lowleft
