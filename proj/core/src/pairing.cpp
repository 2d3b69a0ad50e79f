#include "lowleft/pairing.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace lowleft {

namespace {

void check_pair_shape(const std::vector<index_pair>& pairs) {
    // Births are distinct by construction (one per line); the shape check
    // guards against malformed input matrices.
    for (const auto& p : pairs)
        if (p.birth >= p.death)
            throw std::invalid_argument("pivot pair with birth >= death: input is not a "
                                        "reduced boundary matrix");
}

std::string format_grade(value_t v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

} // namespace

std::vector<index_pair> pairs_from_row_reduced(const sparse_pivot_matrix& r) {
    std::vector<char> pivot_seen(static_cast<std::size_t>(r.n_cols()), 0);
    std::vector<index_pair> pairs;
    for (index_t i = 0; i < r.n_rows(); ++i) {
        auto lf = r.left(i);
        if (!lf) continue;
        if (pivot_seen[static_cast<std::size_t>(*lf)])
            throw std::invalid_argument("duplicate left pivot: matrix is not row reduced");
        pivot_seen[static_cast<std::size_t>(*lf)] = 1;
        pairs.push_back({i, *lf});
    }
    check_pair_shape(pairs);
    return pairs; // rows visited in order, so already sorted by birth
}

std::vector<index_pair> pairs_from_column_reduced(const sparse_pivot_matrix& c) {
    std::vector<char> pivot_seen(static_cast<std::size_t>(c.n_rows()), 0);
    std::vector<index_pair> pairs;
    for (index_t j = 0; j < c.n_cols(); ++j) {
        auto lo = c.low(j);
        if (!lo) continue;
        if (pivot_seen[static_cast<std::size_t>(*lo)])
            throw std::invalid_argument("duplicate low pivot: matrix is not column reduced");
        pivot_seen[static_cast<std::size_t>(*lo)] = 1;
        pairs.push_back({*lo, j});
    }
    check_pair_shape(pairs);
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

int pairing_oracle(const sparse_pivot_matrix& d, index_t i, index_t j) {
    if (i < 0 || i >= d.n_rows() || j < 0 || j >= d.n_cols())
        throw std::out_of_range("pairing_oracle entry out of range");
    const index_t a = rank_gf2(d, {i, j + 1});
    const index_t b = rank_gf2(d, {i + 1, j + 1});
    const index_t c = rank_gf2(d, {i + 1, j});
    const index_t e = rank_gf2(d, {i, j});
    return static_cast<int>(a - b + c - e);
}

std::vector<index_pair> oracle_pairs(const sparse_pivot_matrix& d) {
    std::vector<index_pair> pairs;
    for (index_t i = 0; i < d.n_rows(); ++i)
        for (index_t j = i + 1; j < d.n_cols(); ++j)
            if (pairing_oracle(d, i, j) == 1) pairs.push_back({i, j});
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

std::vector<persistence_pair> attach_dimensions(const filtration& f,
                                                const std::vector<index_pair>& pairs) {
    std::vector<char> used(static_cast<std::size_t>(f.size()), 0);
    std::vector<persistence_pair> out;
    out.reserve(pairs.size());
    for (const auto& p : pairs) {
        if (p.birth < 0 || p.death >= f.size() || p.birth >= p.death)
            throw std::invalid_argument("pair out of range or birth >= death");
        if (f[p.death].dim() != f[p.birth].dim() + 1)
            throw std::invalid_argument("pair dimensions are not consecutive");
        for (index_t pos : {p.birth, p.death}) {
            if (used[static_cast<std::size_t>(pos)])
                throw std::invalid_argument("position appears in two pairs");
            used[static_cast<std::size_t>(pos)] = 1;
        }
        out.push_back({p.birth, p.death, f[p.birth].dim()});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t barcode::pair_count() const {
    std::size_t n = 0;
    for (const auto& [dim, bars] : intervals) n += bars.size();
    return n;
}

std::size_t barcode::essential_count() const {
    std::size_t n = 0;
    for (const auto& [dim, births] : essential) n += births.size();
    return n;
}

std::string barcode::to_text(bool value_view) const {
    if (value_view && !grades)
        throw std::invalid_argument("value view requires filtration grades");
    struct line {
        index_t birth;
        std::optional<index_t> death;
    };
    std::ostringstream os;
    std::vector<int> dims;
    for (const auto& [dim, bars] : intervals) dims.push_back(dim);
    for (const auto& [dim, births] : essential) dims.push_back(dim);
    std::sort(dims.begin(), dims.end());
    dims.erase(std::unique(dims.begin(), dims.end()), dims.end());

    for (int dim : dims) {
        std::vector<line> lines;
        if (auto it = intervals.find(dim); it != intervals.end())
            for (const auto& p : it->second) lines.push_back({p.birth, p.death});
        if (auto it = essential.find(dim); it != essential.end())
            for (index_t b : it->second) lines.push_back({b, std::nullopt});
        // Births are unique within a barcode, so this order is total.
        std::sort(lines.begin(), lines.end(),
                  [](const line& a, const line& b) { return a.birth < b.birth; });
        for (const auto& ln : lines) {
            value_t bg = 0, dg = 0;
            if (value_view) {
                bg = (*grades)[static_cast<std::size_t>(ln.birth)];
                dg = ln.death ? (*grades)[static_cast<std::size_t>(*ln.death)]
                              : std::numeric_limits<value_t>::infinity();
                if (ln.death && bg == dg) continue; // zero-length, dropped here only
            }
            os << dim << ' ' << ln.birth + 1 << ' ';
            if (ln.death)
                os << *ln.death + 1;
            else
                os << "inf";
            if (value_view) os << ' ' << format_grade(bg) << ' ' << format_grade(dg);
            os << '\n';
        }
    }
    return os.str();
}

barcode assemble_barcode(const filtration& f, const std::vector<persistence_pair>& pairs) {
    barcode bc;
    bc.positions = f.size();
    bc.grades = f.grades();

    std::vector<char> used(static_cast<std::size_t>(f.size()), 0);
    for (const auto& p : pairs) {
        if (p.birth < 0 || p.death >= f.size() || p.birth >= p.death)
            throw std::invalid_argument("pair out of range or birth >= death");
        if (f[p.death].dim() != f[p.birth].dim() + 1 || f[p.birth].dim() != p.dim)
            throw std::invalid_argument("pair dimensions inconsistent with the filtration");
        for (index_t pos : {p.birth, p.death}) {
            if (used[static_cast<std::size_t>(pos)])
                throw std::invalid_argument("position appears in two pairs");
            used[static_cast<std::size_t>(pos)] = 1;
        }
        bc.intervals[p.dim].push_back({p.birth, p.death});
    }
    for (auto& [dim, bars] : bc.intervals) std::sort(bars.begin(), bars.end());
    for (index_t k = 0; k < f.size(); ++k)
        if (!used[static_cast<std::size_t>(k)]) bc.essential[f[k].dim()].push_back(k);
    return bc;
}

std::uint64_t acyclic_reduction_count(int vertex_count, int max_dim) {
    if (vertex_count < 1 || max_dim < 0)
        throw std::invalid_argument("need at least one vertex and max_dim >= 0");
    const int n = vertex_count - 1;
    std::uint64_t total = 0;
    for (int h = 0; h <= max_dim + 1; ++h) {
        if (h > n) break;
        std::uint64_t binom = 1;
        for (int k = 1; k <= h; ++k) binom = binom * static_cast<std::uint64_t>(n - k + 1) /
                                             static_cast<std::uint64_t>(k);
        total += binom;
    }
    return total;
}

} // namespace lowleft
