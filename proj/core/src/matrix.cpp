#include "lowleft/matrix.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace lowleft {

namespace {

// Sorted-merge symmetric difference: the GF(2) sum of two supports.
std::vector<index_t> symmetric_difference(const std::vector<index_t>& a,
                                          const std::vector<index_t>& b) {
    std::vector<index_t> out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib)
            out.push_back(*ia++);
        else if (*ib < *ia)
            out.push_back(*ib++);
        else {
            ++ia;
            ++ib;
        }
    }
    out.insert(out.end(), ia, a.end());
    out.insert(out.end(), ib, b.end());
    return out;
}

void toggle_in(std::vector<index_t>& support, index_t x) {
    auto it = std::lower_bound(support.begin(), support.end(), x);
    if (it != support.end() && *it == x)
        support.erase(it);
    else
        support.insert(it, x);
}

} // namespace

sparse_pivot_matrix::sparse_pivot_matrix(index_t n_rows, index_t n_cols)
    : n_rows_(n_rows), n_cols_(n_cols), cols_(static_cast<std::size_t>(n_cols)),
      rows_(static_cast<std::size_t>(n_rows)) {
    if (n_rows < 0 || n_cols < 0) throw std::invalid_argument("negative matrix dimension");
}

sparse_pivot_matrix sparse_pivot_matrix::from_columns(index_t n_rows,
                                                      std::vector<std::vector<index_t>> columns) {
    sparse_pivot_matrix m(n_rows, static_cast<index_t>(columns.size()));
    for (std::size_t j = 0; j < columns.size(); ++j) {
        auto& col = columns[j];
        if (!std::is_sorted(col.begin(), col.end()) ||
            std::adjacent_find(col.begin(), col.end()) != col.end())
            throw std::invalid_argument("column support must be strictly increasing");
        if (!col.empty() && (col.front() < 0 || col.back() >= n_rows))
            throw std::out_of_range("row index out of range in column support");
        for (index_t r : col) m.rows_[static_cast<std::size_t>(r)].push_back(static_cast<index_t>(j));
        m.cols_[j] = std::move(col);
    }
    return m;
}

sparse_pivot_matrix sparse_pivot_matrix::identity(index_t n) {
    sparse_pivot_matrix m(n, n);
    for (index_t k = 0; k < n; ++k) {
        m.cols_[static_cast<std::size_t>(k)] = {k};
        m.rows_[static_cast<std::size_t>(k)] = {k};
    }
    return m;
}

void sparse_pivot_matrix::check_col(index_t j) const {
    if (j < 0 || j >= n_cols_) throw std::out_of_range("column index out of range");
}

void sparse_pivot_matrix::check_row(index_t i) const {
    if (i < 0 || i >= n_rows_) throw std::out_of_range("row index out of range");
}

std::optional<index_t> sparse_pivot_matrix::low(index_t j) const {
    check_col(j);
    const auto& col = cols_[static_cast<std::size_t>(j)];
    if (col.empty()) return std::nullopt;
    return col.back();
}

std::optional<index_t> sparse_pivot_matrix::left(index_t i) const {
    check_row(i);
    const auto& row = rows_[static_cast<std::size_t>(i)];
    if (row.empty()) return std::nullopt;
    return row.front();
}

const std::vector<index_t>& sparse_pivot_matrix::column(index_t j) const {
    check_col(j);
    return cols_[static_cast<std::size_t>(j)];
}

const std::vector<index_t>& sparse_pivot_matrix::row(index_t i) const {
    check_row(i);
    return rows_[static_cast<std::size_t>(i)];
}

bool sparse_pivot_matrix::entry(index_t i, index_t j) const {
    check_row(i);
    check_col(j);
    const auto& col = cols_[static_cast<std::size_t>(j)];
    return std::binary_search(col.begin(), col.end(), i);
}

index_t sparse_pivot_matrix::add_column(index_t src, index_t dst) {
    check_col(src);
    check_col(dst);
    if (src == dst) throw std::invalid_argument("add_column requires distinct columns");
    const auto& s = cols_[static_cast<std::size_t>(src)];
    for (index_t r : s) toggle_in(rows_[static_cast<std::size_t>(r)], dst);
    auto& d = cols_[static_cast<std::size_t>(dst)];
    d = symmetric_difference(d, s);
    return static_cast<index_t>(s.size());
}

index_t sparse_pivot_matrix::add_row(index_t src, index_t dst) {
    check_row(src);
    check_row(dst);
    if (src == dst) throw std::invalid_argument("add_row requires distinct rows");
    const auto& s = rows_[static_cast<std::size_t>(src)];
    for (index_t c : s) toggle_in(cols_[static_cast<std::size_t>(c)], dst);
    auto& d = rows_[static_cast<std::size_t>(dst)];
    d = symmetric_difference(d, s);
    return static_cast<index_t>(s.size());
}

void sparse_pivot_matrix::zero_column(index_t j) {
    check_col(j);
    auto& col = cols_[static_cast<std::size_t>(j)];
    for (index_t r : col) toggle_in(rows_[static_cast<std::size_t>(r)], j);
    col.clear();
}

void sparse_pivot_matrix::zero_row(index_t i) {
    check_row(i);
    auto& row = rows_[static_cast<std::size_t>(i)];
    for (index_t c : row) toggle_in(cols_[static_cast<std::size_t>(c)], i);
    row.clear();
}

void sparse_pivot_matrix::toggle(index_t i, index_t j) {
    check_row(i);
    check_col(j);
    toggle_in(cols_[static_cast<std::size_t>(j)], i);
    toggle_in(rows_[static_cast<std::size_t>(i)], j);
}

sparse_pivot_matrix sparse_pivot_matrix::anti_transpose() const {
    sparse_pivot_matrix t(n_cols_, n_rows_);
    // Row i, read in increasing column order, becomes column n_rows-1-i with
    // entries n_cols-1-j in decreasing order; reverse restores sortedness.
    for (index_t i = 0; i < n_rows_; ++i) {
        const auto& row = rows_[static_cast<std::size_t>(i)];
        auto& tcol = t.cols_[static_cast<std::size_t>(n_rows_ - 1 - i)];
        tcol.reserve(row.size());
        for (auto it = row.rbegin(); it != row.rend(); ++it) tcol.push_back(n_cols_ - 1 - *it);
    }
    for (index_t j = 0; j < n_cols_; ++j) {
        const auto& col = cols_[static_cast<std::size_t>(j)];
        auto& trow = t.rows_[static_cast<std::size_t>(n_cols_ - 1 - j)];
        trow.reserve(col.size());
        for (auto it = col.rbegin(); it != col.rend(); ++it) trow.push_back(n_rows_ - 1 - *it);
    }
    return t;
}

bool sparse_pivot_matrix::operator==(const sparse_pivot_matrix& other) const {
    return n_rows_ == other.n_rows_ && n_cols_ == other.n_cols_ && cols_ == other.cols_;
}

std::string sparse_pivot_matrix::debug_dump() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(n_rows_ * (n_cols_ + 1)));
    for (index_t i = 0; i < n_rows_; ++i) {
        const auto& row = rows_[static_cast<std::size_t>(i)];
        std::size_t next = 0;
        for (index_t j = 0; j < n_cols_; ++j) {
            if (next < row.size() && row[next] == j) {
                out += '1';
                ++next;
            } else {
                out += '0';
            }
        }
        out += '\n';
    }
    return out;
}

index_t rank_gf2(const sparse_pivot_matrix& m, submatrix_spec spec) {
    if (spec.row_begin < 0 || spec.row_begin > m.n_rows() || spec.col_end < 0 ||
        spec.col_end > m.n_cols())
        throw std::out_of_range("submatrix selection out of range");
    const index_t height = m.n_rows() - spec.row_begin;
    if (height == 0 || spec.col_end == 0) return 0;

    // Dense bit-packed copy of the selected rows, restricted to the selected
    // columns, then textbook forward elimination.
    const std::size_t words = static_cast<std::size_t>((spec.col_end + 63) / 64);
    std::vector<std::vector<std::uint64_t>> bits(static_cast<std::size_t>(height),
                                                 std::vector<std::uint64_t>(words, 0));
    for (index_t j = 0; j < spec.col_end; ++j)
        for (index_t i : m.column(j))
            if (i >= spec.row_begin)
                bits[static_cast<std::size_t>(i - spec.row_begin)]
                    [static_cast<std::size_t>(j / 64)] |= std::uint64_t{1} << (j % 64);

    index_t rank = 0;
    for (index_t j = 0; j < spec.col_end && rank < height; ++j) {
        const std::size_t w = static_cast<std::size_t>(j / 64);
        const std::uint64_t mask = std::uint64_t{1} << (j % 64);
        std::size_t pivot = static_cast<std::size_t>(height);
        for (std::size_t r = static_cast<std::size_t>(rank); r < bits.size(); ++r)
            if (bits[r][w] & mask) {
                pivot = r;
                break;
            }
        if (pivot == static_cast<std::size_t>(height)) continue;
        std::swap(bits[pivot], bits[static_cast<std::size_t>(rank)]);
        for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < bits.size(); ++r)
            if (bits[r][w] & mask)
                for (std::size_t k = w; k < words; ++k)
                    bits[r][k] ^= bits[static_cast<std::size_t>(rank)][k];
        ++rank;
    }
    return rank;
}

sparse_pivot_matrix gf2_product(const sparse_pivot_matrix& a, const sparse_pivot_matrix& b) {
    if (a.n_cols() != b.n_rows())
        throw std::invalid_argument("incompatible shapes for GF(2) product");
    std::vector<std::vector<index_t>> cols(static_cast<std::size_t>(b.n_cols()));
    for (index_t j = 0; j < b.n_cols(); ++j) {
        std::vector<index_t> acc;
        for (index_t r : b.column(j)) {
            const auto& src = a.column(r);
            acc.insert(acc.end(), src.begin(), src.end());
        }
        std::sort(acc.begin(), acc.end());
        // Keep the entries that occur an odd number of times.
        std::vector<index_t> col;
        for (std::size_t k = 0; k < acc.size();) {
            std::size_t run = k;
            while (run < acc.size() && acc[run] == acc[k]) ++run;
            if ((run - k) % 2 == 1) col.push_back(acc[k]);
            k = run;
        }
        cols[static_cast<std::size_t>(j)] = std::move(col);
    }
    return sparse_pivot_matrix::from_columns(a.n_rows(), std::move(cols));
}

sparse_pivot_matrix build_boundary_matrix(const filtration& f) {
    auto valid = validate_filtration(f);
    if (!valid.ok()) throw validation_error(*valid.violation);

    std::map<simplex, index_t> position;
    for (index_t k = 0; k < f.size(); ++k) position.emplace(f[k], k);

    std::vector<std::vector<index_t>> cols(static_cast<std::size_t>(f.size()));
    for (index_t j = 0; j < f.size(); ++j) {
        std::vector<index_t> support;
        for (const simplex& face : boundary_faces(f[j]))
            support.push_back(position.at(face));
        std::sort(support.begin(), support.end());
        cols[static_cast<std::size_t>(j)] = std::move(support);
    }
    return sparse_pivot_matrix::from_columns(f.size(), std::move(cols));
}

} // namespace lowleft
