#include "lowleft/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lowleft {

bool is_row_orientation(orientation o) {
    return o == orientation::row_boundary || o == orientation::row_coboundary;
}

bool is_coboundary(orientation o) {
    return o == orientation::col_coboundary || o == orientation::row_coboundary;
}

bool strategy_valid(const strategy& s) {
    if (s.optim == optimization::clear) return !is_row_orientation(s.orient);
    if (s.optim == optimization::compress) return is_row_orientation(s.orient);
    return true;
}

std::string_view to_token(orientation o) {
    switch (o) {
    case orientation::col_boundary: return "col-b";
    case orientation::col_coboundary: return "col-cob";
    case orientation::row_boundary: return "row-b";
    case orientation::row_coboundary: return "row-cob";
    }
    return "";
}

std::string_view to_token(optimization o) {
    switch (o) {
    case optimization::none: return "none";
    case optimization::clear: return "clear";
    case optimization::compress: return "compress";
    }
    return "";
}

std::optional<orientation> orientation_from_token(std::string_view token) {
    for (auto o : {orientation::col_boundary, orientation::col_coboundary,
                   orientation::row_boundary, orientation::row_coboundary})
        if (token == to_token(o)) return o;
    return std::nullopt;
}

std::optional<optimization> optimization_from_token(std::string_view token) {
    for (auto o : {optimization::none, optimization::clear, optimization::compress})
        if (token == to_token(o)) return o;
    return std::nullopt;
}

namespace {

constexpr index_t no_owner = -1;

// Column reduction over the concatenation of the given blocks, ascending
// inside each block. With clear enabled, finalizing a pair (i, j) zeroes
// column i; valid schedules place column i in a later block. Columns zeroed
// by clear that actually had support count as skipped.
void column_engine(sparse_pivot_matrix& m, const std::vector<std::vector<index_t>>& blocks,
                   bool use_clear, sparse_pivot_matrix* cert, std::vector<add_record>* log,
                   reduction_stats& stats, std::vector<index_t>* skipped) {
    std::vector<index_t> owner(static_cast<std::size_t>(m.n_rows()), no_owner);
    std::vector<char> cleared(static_cast<std::size_t>(m.n_cols()), 0);
    for (const auto& block : blocks) {
        for (index_t j : block) {
            if (cleared[static_cast<std::size_t>(j)]) continue;
            if (m.column(j).empty()) continue;
            ++stats.cols_processed;
            while (auto lo = m.low(j)) {
                const index_t pivot = *lo;
                const index_t other = owner[static_cast<std::size_t>(pivot)];
                if (other == no_owner) {
                    owner[static_cast<std::size_t>(pivot)] = j;
                    if (use_clear) {
                        cleared[static_cast<std::size_t>(pivot)] = 1;
                        if (skipped) skipped->push_back(pivot);
                        if (!m.column(pivot).empty()) {
                            m.zero_column(pivot);
                            ++stats.skipped_by_clear;
                        }
                    }
                    break;
                }
                ++stats.additions;
                stats.symbol_flips += m.add_column(other, j);
                if (cert) cert->add_column(other, j);
                if (log) log->push_back({false, other, j});
            }
        }
    }
    if (skipped) std::sort(skipped->begin(), skipped->end());
}

// Row reduction, the mirror image: blocks in the given order, descending
// inside each block, later rows added to earlier ones. With compress
// enabled, each column pivot marks its index negative, and negative rows
// reached in a later block are zeroed instead of reduced.
void row_engine(sparse_pivot_matrix& m, const std::vector<std::vector<index_t>>& blocks,
                bool use_compress, sparse_pivot_matrix* cert, std::vector<add_record>* log,
                reduction_stats& stats, std::vector<index_t>* skipped) {
    std::vector<index_t> owner(static_cast<std::size_t>(m.n_cols()), no_owner);
    std::vector<char> negative(static_cast<std::size_t>(m.n_rows()), 0);
    for (const auto& block : blocks) {
        for (auto it = block.rbegin(); it != block.rend(); ++it) {
            const index_t i = *it;
            if (use_compress && negative[static_cast<std::size_t>(i)]) {
                if (skipped) skipped->push_back(i);
                if (!m.row(i).empty()) {
                    m.zero_row(i);
                    ++stats.skipped_by_compress;
                }
                continue;
            }
            if (m.row(i).empty()) continue;
            ++stats.rows_processed;
            while (auto lf = m.left(i)) {
                const index_t pivot = *lf;
                const index_t other = owner[static_cast<std::size_t>(pivot)];
                if (other == no_owner) {
                    owner[static_cast<std::size_t>(pivot)] = i;
                    if (use_compress) negative[static_cast<std::size_t>(pivot)] = 1;
                    break;
                }
                ++stats.additions;
                stats.symbol_flips += m.add_row(other, i);
                if (cert) cert->add_row(other, i);
                if (log) log->push_back({true, other, i});
            }
        }
    }
    if (skipped) std::sort(skipped->begin(), skipped->end());
}

std::vector<std::vector<index_t>> whole_matrix_block(index_t n) {
    std::vector<index_t> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), index_t{0});
    return {std::move(all)};
}

// Per-dimension position blocks of the target matrix. On the coboundary,
// position k stands for the generator at boundary position m-1-k, so blocks
// are remapped and kept ascending. ascending_dims selects the block order.
std::vector<std::vector<index_t>> dimension_schedule(const filtration& f, matrix_target target,
                                                     bool ascending_dims) {
    const index_t m = f.size();
    auto by_dim = dimension_blocks(f);
    std::vector<std::vector<index_t>> schedule;
    schedule.reserve(by_dim.size());
    for (const auto& [dim, positions] : by_dim) {
        if (target == matrix_target::boundary) {
            schedule.push_back(positions);
        } else {
            std::vector<index_t> mapped;
            mapped.reserve(positions.size());
            for (auto it = positions.rbegin(); it != positions.rend(); ++it)
                mapped.push_back(m - 1 - *it);
            schedule.push_back(std::move(mapped));
        }
    }
    if (!ascending_dims) std::reverse(schedule.begin(), schedule.end());
    return schedule;
}

sparse_pivot_matrix target_matrix(const filtration& f, matrix_target target) {
    auto bd = build_boundary_matrix(f);
    return target == matrix_target::boundary ? bd : bd.anti_transpose();
}

void reject_certificate(const reduce_options& opts) {
    if (opts.track_certificate)
        throw std::invalid_argument("certificates are not available with clear or compress");
}

} // namespace

certificate_check verify_certificate(const sparse_pivot_matrix& original,
                                     const sparse_pivot_matrix& reduced,
                                     const reduction_certificate& cert) {
    const auto& t = cert.transform;
    if (t.n_rows() != t.n_cols()) return {false, "transform is not square"};
    const index_t expected =
        cert.side == reduction_certificate::side_t::left ? original.n_rows() : original.n_cols();
    if (t.n_rows() != expected) return {false, "transform shape does not match"};
    for (index_t j = 0; j < t.n_cols(); ++j) {
        const auto& col = t.column(j);
        if (col.empty() || col.back() != j)
            return {false, "transform is not upper-triangular with unit diagonal"};
    }
    const sparse_pivot_matrix product = cert.side == reduction_certificate::side_t::left
                                            ? gf2_product(t, original)
                                            : gf2_product(original, t);
    if (!(product == reduced)) return {false, "transform product does not reproduce the reduction"};
    return {true, ""};
}

reduction_result reduce_columns(sparse_pivot_matrix m, const reduce_options& opts) {
    reduction_result res{std::move(m), std::nullopt, {}};
    std::optional<sparse_pivot_matrix> cert;
    if (opts.track_certificate) cert = sparse_pivot_matrix::identity(res.matrix.n_cols());
    auto blocks = whole_matrix_block(res.matrix.n_cols());
    column_engine(res.matrix, blocks, false, cert ? &*cert : nullptr, opts.op_log, res.stats,
                  nullptr);
    if (cert)
        res.certificate =
            reduction_certificate{std::move(*cert), reduction_certificate::side_t::right};
    return res;
}

reduction_result reduce_rows(sparse_pivot_matrix m, const reduce_options& opts) {
    reduction_result res{std::move(m), std::nullopt, {}};
    std::optional<sparse_pivot_matrix> cert;
    if (opts.track_certificate) cert = sparse_pivot_matrix::identity(res.matrix.n_rows());
    auto blocks = whole_matrix_block(res.matrix.n_rows());
    row_engine(res.matrix, blocks, false, cert ? &*cert : nullptr, opts.op_log, res.stats,
               nullptr);
    if (cert)
        res.certificate =
            reduction_certificate{std::move(*cert), reduction_certificate::side_t::left};
    return res;
}

optimized_result reduce_columns_clear(const filtration& f, matrix_target target,
                                      const reduce_options& opts) {
    reject_certificate(opts);
    optimized_result res{target_matrix(f, target), {}, {}, {}};
    // Decreasing degrees on the boundary, increasing on the coboundary.
    auto schedule = dimension_schedule(f, target, target == matrix_target::coboundary);
    column_engine(res.matrix, schedule, true, nullptr, opts.op_log, res.stats, &res.skipped);
    res.pairs = pairs_from_column_reduced(res.matrix);
    return res;
}

optimized_result reduce_rows_compress(const filtration& f, matrix_target target,
                                      const reduce_options& opts) {
    reject_certificate(opts);
    optimized_result res{target_matrix(f, target), {}, {}, {}};
    // Increasing degrees on the boundary, decreasing on the coboundary.
    auto schedule = dimension_schedule(f, target, target == matrix_target::boundary);
    row_engine(res.matrix, schedule, true, nullptr, opts.op_log, res.stats, &res.skipped);
    res.pairs = pairs_from_row_reduced(res.matrix);
    return res;
}

strategy_result run_strategy(const filtration& f, const strategy& s, const reduce_options& opts) {
    if (!strategy_valid(s))
        throw std::invalid_argument(s.optim == optimization::clear
                                        ? "clear requires a column orientation"
                                        : "compress requires a row orientation");
    const index_t m = f.size();
    const bool cob = is_coboundary(s.orient);
    const matrix_target target = cob ? matrix_target::coboundary : matrix_target::boundary;

    strategy_result res;
    std::vector<index_pair> raw;
    if (s.optim == optimization::none) {
        const sparse_pivot_matrix original = target_matrix(f, target);
        if (is_row_orientation(s.orient)) {
            auto rr = reduce_rows(original, opts);
            raw = pairs_from_row_reduced(rr.matrix);
            res.stats = rr.stats;
            if (rr.certificate)
                res.certificate_ok = verify_certificate(original, rr.matrix, *rr.certificate).ok;
        } else {
            auto cr = reduce_columns(original, opts);
            raw = pairs_from_column_reduced(cr.matrix);
            res.stats = cr.stats;
            if (cr.certificate)
                res.certificate_ok = verify_certificate(original, cr.matrix, *cr.certificate).ok;
        }
    } else if (s.optim == optimization::clear) {
        auto r = reduce_columns_clear(f, target, opts);
        raw = std::move(r.pairs);
        res.stats = r.stats;
    } else {
        auto r = reduce_rows_compress(f, target, opts);
        raw = std::move(r.pairs);
        res.stats = r.stats;
    }

    if (cob)
        for (auto& p : raw) p = {m - 1 - p.death, m - 1 - p.birth};
    std::sort(raw.begin(), raw.end());

    res.pairs = attach_dimensions(f, raw);
    std::vector<char> used(static_cast<std::size_t>(m), 0);
    for (const auto& p : res.pairs) {
        used[static_cast<std::size_t>(p.birth)] = 1;
        used[static_cast<std::size_t>(p.death)] = 1;
    }
    for (index_t k = 0; k < m; ++k)
        if (!used[static_cast<std::size_t>(k)]) res.essential.push_back(k);
    res.bars = assemble_barcode(f, res.pairs);
    return res;
}

std::string stats_to_json(const strategy& s, const reduction_stats& st, std::size_t pairs,
                          std::size_t essential) {
    std::ostringstream os;
    os << "{\"strategy\":\"" << to_token(s.orient) << "\""
       << ",\"optimization\":\"" << to_token(s.optim) << "\""
       << ",\"rows_processed\":" << st.rows_processed
       << ",\"cols_processed\":" << st.cols_processed
       << ",\"additions\":" << st.additions
       << ",\"symbol_flips\":" << st.symbol_flips
       << ",\"skipped_by_clear\":" << st.skipped_by_clear
       << ",\"skipped_by_compress\":" << st.skipped_by_compress
       << ",\"pairs\":" << pairs
       << ",\"essential\":" << essential << "}";
    return os.str();
}

} // namespace lowleft
