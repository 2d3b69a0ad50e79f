// Acceptance suite: exercises every contract the library is expected to
// honor, end to end, printing one pass/fail line per criterion. Exits with
// the number of failed criteria.

#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lowleft/builders.hpp"
#include "lowleft/reduction.hpp"
#include "support/fixtures.hpp"
#include "support/random_filtration.hpp"

using namespace lowleft;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what
              << std::endl;
    if (!pass) ++failures;
}

std::vector<strategy> all_valid_strategies() {
    std::vector<strategy> out;
    for (auto orient : {orientation::col_boundary, orientation::col_coboundary,
                        orientation::row_boundary, orientation::row_coboundary})
        for (auto optim : {optimization::none, optimization::clear, optimization::compress})
            if (strategy_valid({orient, optim})) out.push_back({orient, optim});
    return out;
}

distance_matrix unit_distances(index_t n) {
    distance_matrix dm;
    dm.n = n;
    dm.entries.assign(static_cast<std::size_t>(n * (n - 1) / 2), 1.0);
    return dm;
}

// 1. All four orientations with all valid optimizations produce identical
//    pair sets and essential sets on 200 random filtrations. Also feeds the
//    conservation check of criterion 7.
bool conservation_held = true;

void criterion_strategy_equivalence() {
    std::mt19937_64 rng(0xACC001);
    bool pass = true;
    for (int run = 0; run < 200 && pass; ++run) {
        auto f = testsupport::random_filtration(rng, 25, 3);
        std::vector<persistence_pair> reference_pairs;
        std::vector<index_t> reference_essential;
        bool first = true;
        for (const auto& s : all_valid_strategies()) {
            auto res = run_strategy(f, s);
            if (2 * res.pairs.size() + res.essential.size() !=
                static_cast<std::size_t>(f.size()))
                conservation_held = false;
            if (first) {
                reference_pairs = res.pairs;
                reference_essential = res.essential;
                first = false;
            } else if (res.pairs != reference_pairs ||
                       res.essential != reference_essential) {
                pass = false;
                break;
            }
        }
    }
    report(1, pass, "8 strategy combinations agree on 200 random filtrations (m <= 25)");
}

// 2. The computed pair set equals { (i,j) : r(i,j) = 1 } from the rank
//    oracle on 50 random filtrations.
void criterion_oracle_equivalence() {
    std::mt19937_64 rng(0xACC002);
    bool pass = true;
    for (int run = 0; run < 50 && pass; ++run) {
        auto f = testsupport::random_filtration(rng, 20, 3);
        auto res = run_strategy(f, {orientation::row_boundary, optimization::none});
        if (2 * res.pairs.size() + res.essential.size() != static_cast<std::size_t>(f.size()))
            conservation_held = false;
        std::vector<index_pair> got;
        got.reserve(res.pairs.size());
        for (const auto& p : res.pairs) got.push_back({p.birth, p.death});
        pass = got == oracle_pairs(build_boundary_matrix(f));
    }
    report(2, pass, "pair sets equal the rank-oracle scan on 50 random filtrations (m <= 20)");
}

// 3. The transform accumulated by the row reduction reproduces the reduced
//    matrix: product check plus triangularity and unit diagonal.
void criterion_certificates() {
    std::mt19937_64 rng(0xACC003);
    bool pass = true;
    reduce_options opts;
    opts.track_certificate = true;
    for (int run = 0; run < 50 && pass; ++run) {
        auto bd = build_boundary_matrix(testsupport::random_filtration(rng, 25, 3));
        auto rr = reduce_rows(bd, opts);
        pass = rr.certificate.has_value() &&
               verify_certificate(bd, rr.matrix, *rr.certificate).ok &&
               gf2_product(rr.certificate->transform, bd) == rr.matrix;
    }
    report(3, pass, "row-reduction transforms verify on 50 random filtrations");
}

// 4. Row reduction of the boundary and column reduction of its
//    anti-transpose perform the same additions and symbol flips.
void criterion_anti_transpose_duality() {
    std::mt19937_64 rng(0xACC004);
    bool pass = true;
    for (int run = 0; run < 50 && pass; ++run) {
        auto bd = build_boundary_matrix(testsupport::random_filtration(rng, 25, 3));
        auto rows = reduce_rows(bd);
        auto cols = reduce_columns(bd.anti_transpose());
        pass = rows.stats.additions == cols.stats.additions &&
               rows.stats.symbol_flips == cols.stats.symbol_flips;
    }
    report(4, pass, "row reduction mirrors column reduction on the anti-transpose "
                    "(additions and symbol_flips equal, 50 random filtrations)");
}

// 5. On full simplices with v = 2..6 vertices, compress and clear process
//    the same number of lines, equal to the closed-form binomial sum.
void criterion_count_duality() {
    const std::int64_t expected_counts[] = {2, 4, 8, 16, 32};
    bool pass = true;
    std::ostringstream detail;
    for (int v = 2; v <= 6; ++v) {
        auto f = build_rips(unit_distances(v), v - 1,
                            std::numeric_limits<value_t>::infinity());
        auto compress_rows =
            reduce_rows_compress(f, matrix_target::boundary).stats.rows_processed;
        auto clear_cols =
            reduce_columns_clear(f, matrix_target::coboundary).stats.cols_processed;
        const auto closed_form =
            static_cast<std::int64_t>(acyclic_reduction_count(v, v - 1));
        if (compress_rows != clear_cols || compress_rows != closed_form ||
            closed_form != expected_counts[v - 2])
            pass = false;
        detail << (v > 2 ? "," : "") << compress_rows;
    }
    report(5, pass, "compress/clear line counts on full simplices v=2..6 are " + detail.str() +
                        " (expected 2,4,8,16,32)");
}

// 6. The triangle filtration yields the frozen pairs, essential set and
//    barcode under every strategy.
void criterion_triangle_regression() {
    const std::vector<persistence_pair> expected{{1, 3, 0}, {2, 4, 0}, {5, 6, 1}};
    const std::string expected_text = "0 1 inf\n0 2 4\n0 3 5\n1 6 7\n";
    bool pass = true;
    for (const auto& s : all_valid_strategies()) {
        auto res = run_strategy(testsupport::triangle_filtration(), s);
        if (res.pairs != expected || res.essential != std::vector<index_t>{0} ||
            res.bars.to_text() != expected_text)
            pass = false;
    }
    report(6, pass, "triangle regression: pairs (2,4),(3,5),(6,7), essential {1}, "
                    "H0 [1,inf),[2,4),[3,5), H1 [6,7) under every strategy");
}

// 7. 2*pairs + essential = m on every random run above.
void criterion_conservation() {
    report(7, conservation_held, "2*|pairs| + |essential| = m on all random-filtration runs");
}

// 8. Every line skipped by an optimization is zero in the corresponding
//    unoptimized reduction.
void criterion_optimization_soundness() {
    std::mt19937_64 rng(0xACC008);
    bool pass = true;
    for (int run = 0; run < 50 && pass; ++run) {
        auto f = testsupport::random_filtration(rng, 25, 3);
        auto bd = build_boundary_matrix(f);
        auto cob = bd.anti_transpose();
        auto plain_cols_b = reduce_columns(bd).matrix;
        auto plain_cols_cob = reduce_columns(cob).matrix;
        auto plain_rows_b = reduce_rows(bd).matrix;
        auto plain_rows_cob = reduce_rows(cob).matrix;

        for (index_t j : reduce_columns_clear(f, matrix_target::boundary).skipped)
            if (!plain_cols_b.column(j).empty()) pass = false;
        for (index_t j : reduce_columns_clear(f, matrix_target::coboundary).skipped)
            if (!plain_cols_cob.column(j).empty()) pass = false;
        for (index_t i : reduce_rows_compress(f, matrix_target::boundary).skipped)
            if (!plain_rows_b.row(i).empty()) pass = false;
        for (index_t i : reduce_rows_compress(f, matrix_target::coboundary).skipped)
            if (!plain_rows_cob.row(i).empty()) pass = false;
    }
    report(8, pass, "every clear-skipped column / compress-skipped row is zero in the "
                    "unoptimized reduction (50 random filtrations)");
}

// 9. Runtime cost expressions are asymptotic statements, not operation
//    counts; the counter-based criteria 4 and 5 stand in for them, and no
//    numeric runtime claim is asserted.
void criterion_no_runtime_assertions() {
    report(9, true, "no numeric runtime claims asserted; counter-based criteria 4 and 5 "
                    "are the property-level substitutes");
}

} // namespace

int main() {
    criterion_strategy_equivalence();
    criterion_oracle_equivalence();
    criterion_certificates();
    criterion_anti_transpose_duality();
    criterion_count_duality();
    criterion_triangle_regression();
    criterion_conservation();
    criterion_optimization_soundness();
    criterion_no_runtime_assertions();

    if (failures == 0)
        std::cout << "acceptance: all 9 criteria passed" << std::endl;
    else
        std::cout << "acceptance: " << failures << " criteria FAILED" << std::endl;
    return failures;
}
