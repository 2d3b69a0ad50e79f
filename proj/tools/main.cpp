// Command-line front end: ingest a filtration, reduce it with a chosen
// strategy, emit the barcode and stats, or cross-check all strategies
// against the rank oracle.
//
// Exit codes: 0 success, 1 parse/validation error, 2 invalid configuration,
// 3 verification mismatch.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include "lowleft/builders.hpp"
#include "lowleft/reduction.hpp"

namespace {

using namespace lowleft;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitConfig = 2;
constexpr int kExitMismatch = 3;

struct run_config {
    std::string input;
    std::string format;              // flt | ldm | pts, inferred from the extension if empty
    std::string strategy_token = "row-b";
    std::string optim_token = "compress";
    int max_dim = 1;
    double threshold = std::numeric_limits<double>::infinity();
    std::string output = "-";        // barcode destination, "-" for stdout
    std::string stats_output = "-";  // stats destination, "-" for stdout
    bool emit_stats = false;
    bool values = false;             // value-level barcode view
    bool certificate = false;        // track and verify the transform
    index_t strategy_cap = 200;      // verify: cross-check all strategies up to this size
    index_t oracle_cap = 40;         // verify: full rank-oracle scan up to this size
};

int config_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kExitConfig;
}

std::optional<std::string> infer_format(const run_config& cfg) {
    if (!cfg.format.empty()) return cfg.format;
    auto dot = cfg.input.rfind('.');
    if (dot != std::string::npos) {
        std::string ext = cfg.input.substr(dot + 1);
        if (ext == "flt" || ext == "ldm" || ext == "pts") return ext;
    }
    return std::nullopt;
}

// Reads and builds the filtration; throws parse_error / validation_error.
filtration load_filtration(const run_config& cfg, const std::string& format) {
    std::ifstream in(cfg.input, std::ios::binary);
    if (!in) throw parse_error(0, "cannot open '" + cfg.input + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    if (format == "flt") return parse_explicit_filtration(text);
    if (format == "ldm")
        return build_rips(parse_lower_distance_matrix(text), cfg.max_dim, cfg.threshold);
    return build_rips(distance_matrix::from_points(parse_point_cloud(text)), cfg.max_dim,
                      cfg.threshold);
}

bool write_text(const std::string& destination, const std::string& text) {
    if (destination == "-") {
        std::cout << text;
        return true;
    }
    std::ofstream out(destination, std::ios::binary);
    if (!out) return false;
    out << text;
    return static_cast<bool>(out);
}

int cmd_reduce(const run_config& cfg) {
    auto format = infer_format(cfg);
    if (!format) return config_error("cannot infer the input format; pass --format");
    if (cfg.max_dim < 0) return config_error("--max-dim must be >= 0");
    if (cfg.threshold < 0) return config_error("--threshold must be >= 0");

    auto orient = orientation_from_token(cfg.strategy_token);
    if (!orient) return config_error("unknown strategy '" + cfg.strategy_token + "'");
    auto optim = optimization_from_token(cfg.optim_token);
    if (!optim) return config_error("unknown optimization '" + cfg.optim_token + "'");
    strategy strat{*orient, *optim};
    if (!strategy_valid(strat))
        return config_error(*optim == optimization::clear
                                ? "clear requires a column orientation"
                                : "compress requires a row orientation");
    if (cfg.certificate && *optim != optimization::none)
        return config_error("--certificate requires --optim none");

    try {
        auto f = load_filtration(cfg, *format);
        if (cfg.values && !f.grades())
            return config_error("--values requires a graded input");

        reduce_options opts;
        opts.track_certificate = cfg.certificate;
        auto res = run_strategy(f, strat, opts);

        if (cfg.certificate && !(res.certificate_ok && *res.certificate_ok)) {
            std::cerr << "error: certificate verification failed\n";
            return kExitMismatch;
        }
        if (!write_text(cfg.output, res.bars.to_text(cfg.values))) {
            std::cerr << "error: cannot write '" << cfg.output << "'\n";
            return kExitInput;
        }
        if (cfg.emit_stats) {
            auto json =
                stats_to_json(strat, res.stats, res.pairs.size(), res.essential.size()) + "\n";
            if (!write_text(cfg.stats_output, json)) {
                std::cerr << "error: cannot write '" << cfg.stats_output << "'\n";
                return kExitInput;
            }
        }
        return kExitOk;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

int cmd_verify(const run_config& cfg) {
    auto format = infer_format(cfg);
    if (!format) return config_error("cannot infer the input format; pass --format");
    if (cfg.max_dim < 0) return config_error("--max-dim must be >= 0");
    if (cfg.threshold < 0) return config_error("--threshold must be >= 0");

    filtration f;
    try {
        f = load_filtration(cfg, *format);
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    const index_t m = f.size();
    std::cout << "simplices: " << m << "\n";

    std::vector<strategy> strategies;
    if (m <= cfg.strategy_cap) {
        for (auto orient : {orientation::col_boundary, orientation::col_coboundary,
                            orientation::row_boundary, orientation::row_coboundary})
            for (auto optim : {optimization::none, optimization::clear, optimization::compress})
                if (strategy_valid({orient, optim})) strategies.push_back({orient, optim});
    } else {
        std::cout << "notice: " << m << " simplices exceed the strategy cap "
                  << cfg.strategy_cap << "; cross-checking the duality pair only\n";
        strategies = {{orientation::row_boundary, optimization::compress},
                      {orientation::col_coboundary, optimization::clear}};
    }

    std::vector<strategy_result> results;
    results.reserve(strategies.size());
    for (const auto& s : strategies) results.push_back(run_strategy(f, s));

    const auto& reference = results.front();
    for (std::size_t k = 1; k < results.size(); ++k) {
        if (results[k].pairs != reference.pairs || results[k].essential != reference.essential) {
            const auto& a = reference.pairs;
            const auto& b = results[k].pairs;
            std::cout << "mismatch: " << to_token(strategies[0].orient) << "+"
                      << to_token(strategies[0].optim) << " vs " << to_token(strategies[k].orient)
                      << "+" << to_token(strategies[k].optim) << "\n";
            for (std::size_t p = 0; p < std::max(a.size(), b.size()); ++p) {
                if (p < a.size() && p < b.size() && a[p] == b[p]) continue;
                auto show = [](const persistence_pair& pp) {
                    return "(" + std::to_string(pp.birth + 1) + "," +
                           std::to_string(pp.death + 1) + ")";
                };
                std::cout << "first differing pair: "
                          << (p < a.size() ? show(a[p]) : std::string("none")) << " vs "
                          << (p < b.size() ? show(b[p]) : std::string("none")) << "\n";
                break;
            }
            return kExitMismatch;
        }
        if (2 * results[k].pairs.size() + results[k].essential.size() !=
            static_cast<std::size_t>(m)) {
            std::cout << "mismatch: conservation violated by " << to_token(strategies[k].orient)
                      << "+" << to_token(strategies[k].optim) << "\n";
            return kExitMismatch;
        }
    }
    std::cout << "strategies: " << strategies.size() << " combinations agree (pairs="
              << reference.pairs.size() << ", essential=" << reference.essential.size() << ")\n";

    if (m <= cfg.oracle_cap) {
        auto expected = oracle_pairs(build_boundary_matrix(f));
        std::vector<index_pair> got;
        got.reserve(reference.pairs.size());
        for (const auto& p : reference.pairs) got.push_back({p.birth, p.death});
        if (got != expected) {
            for (std::size_t p = 0; p < std::max(got.size(), expected.size()); ++p) {
                if (p < got.size() && p < expected.size() && got[p] == expected[p]) continue;
                auto show = [](const index_pair& ip) {
                    return "(" + std::to_string(ip.birth + 1) + "," +
                           std::to_string(ip.death + 1) + ")";
                };
                std::cout << "mismatch: oracle disagrees, first differing pair: "
                          << (p < got.size() ? show(got[p]) : std::string("none")) << " vs "
                          << (p < expected.size() ? show(expected[p]) : std::string("none"))
                          << "\n";
                break;
            }
            return kExitMismatch;
        }
        std::cout << "oracle: pair set matches the rank oracle\n";
    } else {
        std::cout << "notice: oracle scan skipped (" << m << " simplices exceed the cap "
                  << cfg.oracle_cap << ")\n";
    }

    const auto compress_stats =
        reduce_rows_compress(f, matrix_target::boundary).stats.rows_processed;
    const auto clear_stats =
        reduce_columns_clear(f, matrix_target::coboundary).stats.cols_processed;
    std::cout << "duality: compress rows_processed = " << compress_stats
              << ", clear cols_processed = " << clear_stats << "\n";
    if (compress_stats != clear_stats) {
        std::cout << "mismatch: duality counters differ\n";
        return kExitMismatch;
    }

    std::cout << "all checks passed\n";
    return kExitOk;
}

void add_common_options(CLI::App* cmd, run_config& cfg) {
    cmd->add_option("--input,-i", cfg.input, "input file")->required();
    cmd->add_option("--format,-f", cfg.format, "input format: flt | ldm | pts");
    cmd->add_option("--max-dim", cfg.max_dim, "maximal simplex dimension for Rips inputs");
    cmd->add_option("--threshold", cfg.threshold, "diameter threshold for Rips inputs");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"persistence barcodes by row and column pivot reduction"};
    app.require_subcommand(1);

    run_config cfg;

    auto* reduce = app.add_subcommand("reduce", "compute a barcode");
    add_common_options(reduce, cfg);
    reduce->add_option("--strategy", cfg.strategy_token,
                       "orientation: col-b | col-cob | row-b | row-cob");
    reduce->add_option("--optim", cfg.optim_token, "optimization: none | clear | compress");
    reduce->add_option("--output,-o", cfg.output, "barcode destination ('-' for stdout)");
    reduce->add_flag("--emit-stats", cfg.emit_stats, "emit the stats JSON record");
    reduce->add_option("--stats-output", cfg.stats_output,
                       "stats destination ('-' for stdout)");
    reduce->add_flag("--values", cfg.values, "emit the value-level barcode view");
    reduce->add_flag("--certificate", cfg.certificate,
                     "track the reduction transform and verify it");

    auto* verify = app.add_subcommand(
        "verify", "cross-check all strategies, the rank oracle and the counter duality");
    add_common_options(verify, cfg);
    verify->add_option("--strategy-cap", cfg.strategy_cap,
                       "skip the all-strategy cross-check above this size");
    verify->add_option("--oracle-cap", cfg.oracle_cap,
                       "skip the rank-oracle scan above this size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }

    return reduce->parsed() ? cmd_reduce(cfg) : cmd_verify(cfg);
}
