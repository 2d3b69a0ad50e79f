#include "lowleft/builders.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

namespace lowleft {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

std::vector<std::string_view> tokenize(std::string_view line, bool commas_too) {
    std::vector<std::string_view> tokens;
    std::size_t k = 0;
    auto is_sep = [&](char c) {
        return c == ' ' || c == '\t' || c == '\r' || (commas_too && c == ',');
    };
    while (k < line.size()) {
        while (k < line.size() && is_sep(line[k])) ++k;
        std::size_t start = k;
        while (k < line.size() && !is_sep(line[k])) ++k;
        if (k > start) tokens.push_back(line.substr(start, k - start));
    }
    return tokens;
}

vertex_id parse_vertex(std::string_view token, std::size_t line_no) {
    vertex_id v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size() || v < 0)
        throw parse_error(line_no, "expected a non-negative vertex id, got '" +
                                       std::string(token) + "'");
    return v;
}

value_t parse_real(std::string_view token, std::size_t line_no) {
    value_t v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw parse_error(line_no, "expected a real number, got '" + std::string(token) + "'");
    return v;
}

} // namespace

value_t distance_matrix::operator()(index_t p, index_t q) const {
    if (p == q) return 0;
    if (p < q) std::swap(p, q);
    return entries[static_cast<std::size_t>(p * (p - 1) / 2 + q)];
}

distance_matrix distance_matrix::from_points(const std::vector<std::vector<value_t>>& points) {
    distance_matrix dm;
    dm.n = static_cast<index_t>(points.size());
    dm.entries.reserve(points.size() * (points.size() - 1) / 2);
    for (std::size_t p = 1; p < points.size(); ++p)
        for (std::size_t q = 0; q < p; ++q) {
            value_t sq = 0;
            for (std::size_t k = 0; k < points[p].size(); ++k) {
                const value_t d = points[p][k] - points[q][k];
                sq += d * d;
            }
            dm.entries.push_back(std::sqrt(sq));
        }
    return dm;
}

filtration parse_explicit_filtration(std::string_view text) {
    std::vector<simplex> simplices;
    std::vector<value_t> grades;
    bool saw_grade = false;
    std::size_t line_no = 0;
    for (std::string_view line : split_lines(text)) {
        ++line_no;
        auto tokens = tokenize(line, false);
        if (tokens.empty()) continue;

        std::optional<value_t> grade;
        auto at = std::find(tokens.begin(), tokens.end(), "@");
        if (at != tokens.end()) {
            if (at + 2 != tokens.end())
                throw parse_error(line_no, "'@' must be followed by exactly one grade");
            grade = parse_real(*(at + 1), line_no);
            tokens.erase(at, tokens.end());
        }
        if (tokens.empty()) throw parse_error(line_no, "simplex with no vertices");
        if (!simplices.empty() && grade.has_value() != saw_grade)
            throw parse_error(line_no, "grades must be given on all lines or on none");
        saw_grade = grade.has_value();

        std::vector<vertex_id> vertices;
        vertices.reserve(tokens.size());
        for (auto t : tokens) vertices.push_back(parse_vertex(t, line_no));
        try {
            simplices.push_back(simplex(std::move(vertices)));
        } catch (const std::invalid_argument& e) {
            throw parse_error(line_no, e.what());
        }
        if (grade) grades.push_back(*grade);
    }

    filtration f(std::move(simplices),
                 saw_grade ? std::optional(std::move(grades)) : std::nullopt);
    auto valid = validate_filtration(f);
    if (!valid.ok()) throw validation_error(*valid.violation);
    return f;
}

distance_matrix parse_lower_distance_matrix(std::string_view text) {
    distance_matrix dm;
    std::size_t line_no = 0;
    for (std::string_view line : split_lines(text)) {
        ++line_no;
        for (auto token : tokenize(line, true)) {
            const value_t v = parse_real(token, line_no);
            if (!std::isfinite(v) || v < 0)
                throw parse_error(line_no, "distances must be finite and non-negative");
            dm.entries.push_back(v);
        }
    }
    // k entries determine n with k = n(n-1)/2; no entries means one point.
    const std::size_t k = dm.entries.size();
    const index_t n = static_cast<index_t>((1 + std::llround(std::sqrt(1.0 + 8.0 * static_cast<double>(k)))) / 2);
    if (static_cast<std::size_t>(n * (n - 1) / 2) != k)
        throw parse_error(0, std::to_string(k) + " entries is not a triangular number");
    dm.n = std::max<index_t>(n, 1);
    return dm;
}

std::vector<std::vector<value_t>> parse_point_cloud(std::string_view text) {
    std::vector<std::vector<value_t>> points;
    std::size_t line_no = 0;
    for (std::string_view line : split_lines(text)) {
        ++line_no;
        auto tokens = tokenize(line, true);
        if (tokens.empty()) continue;
        std::vector<value_t> point;
        point.reserve(tokens.size());
        for (auto t : tokens) {
            const value_t v = parse_real(t, line_no);
            if (!std::isfinite(v)) throw parse_error(line_no, "coordinates must be finite");
            point.push_back(v);
        }
        if (!points.empty() && point.size() != points.front().size())
            throw parse_error(line_no, "point dimension differs from the first line");
        points.push_back(std::move(point));
    }
    return points;
}

namespace {

struct rips_simplex {
    value_t diameter;
    std::vector<vertex_id> vertices;
};

void extend_clique(const distance_matrix& dm, int max_dim, value_t threshold,
                   std::vector<vertex_id>& current, value_t diameter,
                   std::vector<rips_simplex>& out) {
    out.push_back({diameter, current});
    if (static_cast<int>(current.size()) == max_dim + 1) return;
    for (vertex_id v = current.back() + 1; v < dm.n; ++v) {
        value_t d = diameter;
        bool ok = true;
        for (vertex_id u : current) {
            const value_t duv = dm(u, v);
            if (duv > threshold) {
                ok = false;
                break;
            }
            d = std::max(d, duv);
        }
        if (!ok) continue;
        current.push_back(v);
        extend_clique(dm, max_dim, threshold, current, d, out);
        current.pop_back();
    }
}

} // namespace

filtration build_rips(const distance_matrix& dm, int max_dim, value_t threshold) {
    if (max_dim < 0) throw std::invalid_argument("max_dim must be >= 0");
    if (threshold < 0) throw std::invalid_argument("threshold must be >= 0");

    std::vector<rips_simplex> all;
    std::vector<vertex_id> current;
    for (vertex_id v = 0; v < dm.n; ++v) {
        current.assign(1, v);
        extend_clique(dm, max_dim, threshold, current, 0, all);
    }
    std::sort(all.begin(), all.end(), [](const rips_simplex& a, const rips_simplex& b) {
        if (a.diameter != b.diameter) return a.diameter < b.diameter;
        if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
        return a.vertices < b.vertices;
    });

    std::vector<simplex> simplices;
    std::vector<value_t> grades;
    simplices.reserve(all.size());
    grades.reserve(all.size());
    for (auto& rs : all) {
        simplices.push_back(simplex(std::move(rs.vertices)));
        grades.push_back(rs.diameter);
    }
    return filtration(std::move(simplices), std::move(grades));
}

} // namespace lowleft
