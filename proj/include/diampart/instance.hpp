#pragma once

// Instance representation and the plain-text matrix / points file formats.
//
// Matrix:  line 1 `n`, then n lines of n reals (full symmetric matrix).
// Points:  line 1 `n d`, then n lines of d reals.
// Lines whose first non-blank character is '#' are comments.

#include <array>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "ext_real.hpp"
#include "oracle.hpp"

namespace diampart {

enum class Problem { Diameter, Mdcc };

inline const char* to_string(Problem p) { return p == Problem::Diameter ? "diameter" : "mdcc"; }

struct MatrixSource {
    std::size_t n = 0;
    std::vector<double> w;  // row-major n*n
};

struct PointsSource {
    std::size_t n = 0;
    std::size_t dim = 0;
    std::vector<double> coords;  // row-major n*dim
};

/// The lower-bound family: A = {0..n/2-1}, B = {n/2..n-1}. `bits` are indexed by
/// the pairs of A in lexicographic order; a set bit means weight 2.
/// Diameter variant: w=2 across A x B, w=1 inside B. Mdcc variant: w=1 across, w=2 inside B.
struct AdversarySource {
    std::size_t n = 0;
    std::vector<bool> bits;
    Problem variant = Problem::Diameter;

    std::size_t half() const noexcept { return n / 2; }

    static std::size_t pair_index(std::size_t half, std::size_t i, std::size_t j) {
        // Pairs (i, j), i < j < half, enumerated row by row.
        return i * half - i * (i + 1) / 2 + (j - i - 1);
    }
};

class AdversaryOracle {
public:
    explicit AdversaryOracle(const AdversarySource& src) : src_(&src) {}

    std::size_t size() const noexcept { return src_->n; }
    double weight(Vertex u, Vertex v) const {
        detail::check_pair(src_->n, u, v);
        const std::size_t h = src_->half();
        if (u > v) std::swap(u, v);
        const bool u_in_a = u < h, v_in_a = v < h;
        const bool diameter = src_->variant == Problem::Diameter;
        if (u_in_a && v_in_a) return src_->bits[AdversarySource::pair_index(h, u, v)] ? 2.0 : 1.0;
        if (!u_in_a && !v_in_a) return diameter ? 1.0 : 2.0;
        return diameter ? 2.0 : 1.0;
    }

private:
    const AdversarySource* src_;
};

class Instance {
public:
    using Source = std::variant<MatrixSource, PointsSource, AdversarySource>;

    Instance() = default;
    explicit Instance(Source s) : source_(std::move(s)) {}

    static Instance from_matrix(std::size_t n, std::vector<double> w) {
        detail::require(w.size() == n * n, "Instance: matrix must have n*n entries");
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                detail::require(w[u * n + v] == w[v * n + u], "Instance: matrix must be symmetric");
        return Instance(MatrixSource{n, std::move(w)});
    }

    static Instance from_points(std::size_t n, std::size_t dim, std::vector<double> coords) {
        detail::require(dim >= 1, "Instance: point dimension must be >= 1");
        detail::require(coords.size() == n * dim, "Instance: need n*d coordinates");
        return Instance(PointsSource{n, dim, std::move(coords)});
    }

    std::size_t size() const {
        return std::visit([](const auto& s) { return s.n; }, source_);
    }

    const Source& source() const noexcept { return source_; }
    bool is_matrix() const noexcept { return std::holds_alternative<MatrixSource>(source_); }
    bool is_points() const noexcept { return std::holds_alternative<PointsSource>(source_); }
    const MatrixSource* matrix() const noexcept { return std::get_if<MatrixSource>(&source_); }
    const PointsSource* points() const noexcept { return std::get_if<PointsSource>(&source_); }
    const AdversarySource* adversary() const noexcept { return std::get_if<AdversarySource>(&source_); }

private:
    Source source_{MatrixSource{}};
};

/// Calls `f` with the instance's natural oracle. Points report true distances.
template <class F>
decltype(auto) visit_oracle(const Instance& inst, F&& f) {
    return std::visit(
        [&](const auto& s) -> decltype(auto) {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, MatrixSource>) {
                return f(MatrixOracle(s.w, s.n));
            } else if constexpr (std::is_same_v<S, PointsSource>) {
                return f(EuclideanOracle(s.coords, s.n, s.dim));
            } else {
                return f(AdversaryOracle(s));
            }
        },
        inst.source());
}

/// Materializes any instance as an explicit matrix instance.
inline Instance to_matrix(const Instance& inst) {
    if (inst.is_matrix()) return inst;
    const std::size_t n = inst.size();
    std::vector<double> w(n * n, 0.0);
    visit_oracle(inst, [&](const auto& o) {
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                w[u * n + v] = w[v * n + u] = o.weight(Vertex(u), Vertex(v));
    });
    return Instance(MatrixSource{n, std::move(w)});
}

struct MetricCheck {
    bool metric = true;
    /// (x, y, z) with w(x,z) > w(x,y) + w(y,z), when that is the failure.
    std::optional<std::array<Vertex, 3>> violating_triple;
    /// A pair with negative weight, when that is the failure.
    std::optional<std::pair<Vertex, Vertex>> negative_pair;
};

inline MetricCheck check_metric(const Instance& inst) {
    const auto* m = inst.matrix();
    if (m == nullptr) throw UnsupportedSource("check_metric: requires a matrix source");
    const std::size_t n = m->n;
    auto w = [&](std::size_t a, std::size_t b) { return m->w[a * n + b]; };
    MetricCheck out;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (w(u, v) < 0) {
                out.metric = false;
                out.negative_pair = {Vertex(u), Vertex(v)};
                return out;
            }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t z = x + 1; z < n; ++z)
            for (std::size_t y = 0; y < n; ++y) {
                if (y == x || y == z) continue;
                if (w(x, z) > w(x, y) + w(y, z)) {
                    out.metric = false;
                    out.violating_triple = std::array<Vertex, 3>{Vertex(x), Vertex(y), Vertex(z)};
                    return out;
                }
            }
    return out;
}

// ---------------------------------------------------------------------------
// File I/O

enum class FileFormat { Auto, Matrix, Points };

namespace detail {

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    /// Next non-comment, non-blank line split into tokens; false at EOF.
    bool next(std::vector<std::string>& tokens) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            tokens.clear();
            std::istringstream ss(line);
            for (std::string t; ss >> t;) tokens.push_back(std::move(t));
            return true;
        }
        return false;
    }

    std::size_t line() const noexcept { return line_no_; }

private:
    std::istream& in_;
    std::size_t line_no_ = 0;
};

inline double parse_real(const std::string& tok, std::size_t line) {
    double v = 0;
    const char* b = tok.data();
    const char* e = b + tok.size();
    if (b != e && *b == '+') ++b;
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || ptr != e) throw ParseError(line, "not a real number: '" + tok + "'");
    if (!std::isfinite(v)) throw ParseError(line, "weights and coordinates must be finite");
    return v;
}

inline std::size_t parse_count(const std::string& tok, std::size_t line) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, "not a non-negative integer: '" + tok + "'");
    return v;
}

}  // namespace detail

inline Instance read_instance(std::istream& in, FileFormat format = FileFormat::Auto) {
    detail::LineReader reader(in);
    std::vector<std::string> tok;
    if (!reader.next(tok)) throw ParseError(reader.line(), "empty instance file");

    if (format == FileFormat::Auto) {
        if (tok.size() == 1) {
            format = FileFormat::Matrix;
        } else if (tok.size() == 2) {
            format = FileFormat::Points;
        } else {
            throw ParseError(reader.line(), "header must be `n` (matrix) or `n d` (points)");
        }
    }

    if (format == FileFormat::Matrix) {
        if (tok.size() != 1) throw ParseError(reader.line(), "matrix header must be a single count `n`");
        const std::size_t n = detail::parse_count(tok[0], reader.line());
        std::vector<double> w(n * n);
        for (std::size_t r = 0; r < n; ++r) {
            if (!reader.next(tok)) throw ParseError(reader.line(), "expected " + std::to_string(n) + " matrix rows");
            if (tok.size() != n)
                throw ParseError(reader.line(), "row has " + std::to_string(tok.size()) + " entries, expected " +
                                                    std::to_string(n));
            for (std::size_t c = 0; c < n; ++c) w[r * n + c] = detail::parse_real(tok[c], reader.line());
        }
        if (reader.next(tok)) throw ParseError(reader.line(), "trailing data after matrix");
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (w[u * n + v] != w[v * n + u])
                    throw ParseError(0, "matrix is not symmetric at (" + std::to_string(u) + ", " +
                                            std::to_string(v) + ")");
        return Instance(MatrixSource{n, std::move(w)});
    }

    if (tok.size() != 2) throw ParseError(reader.line(), "points header must be `n d`");
    const std::size_t n = detail::parse_count(tok[0], reader.line());
    const std::size_t dim = detail::parse_count(tok[1], reader.line());
    if (dim == 0) throw ParseError(reader.line(), "point dimension must be >= 1");
    std::vector<double> coords(n * dim);
    for (std::size_t r = 0; r < n; ++r) {
        if (!reader.next(tok)) throw ParseError(reader.line(), "expected " + std::to_string(n) + " points");
        if (tok.size() != dim)
            throw ParseError(reader.line(), "point has " + std::to_string(tok.size()) + " coordinates, expected " +
                                                std::to_string(dim));
        for (std::size_t c = 0; c < dim; ++c) coords[r * dim + c] = detail::parse_real(tok[c], reader.line());
    }
    if (reader.next(tok)) throw ParseError(reader.line(), "trailing data after points");
    return Instance(PointsSource{n, dim, std::move(coords)});
}

/// Writes shortest round-trip decimals, so reading back is bit-exact.
/// Points sources may be written as points or as their distance matrix;
/// adversary sources are always materialized as a matrix.
inline void write_instance(std::ostream& out, const Instance& inst, FileFormat format = FileFormat::Auto) {
    if (format == FileFormat::Auto) format = inst.is_points() ? FileFormat::Points : FileFormat::Matrix;
    if (format == FileFormat::Points) {
        const auto* p = inst.points();
        if (p == nullptr) throw UnsupportedSource("write_instance: only point sources can be written as points");
        out << p->n << ' ' << p->dim << '\n';
        for (std::size_t r = 0; r < p->n; ++r) {
            for (std::size_t c = 0; c < p->dim; ++c) {
                if (c) out << ' ';
                out << format_double(p->coords[r * p->dim + c]);
            }
            out << '\n';
        }
        return;
    }
    const Instance mat = to_matrix(inst);
    const auto& m = *mat.matrix();
    out << m.n << '\n';
    for (std::size_t r = 0; r < m.n; ++r) {
        for (std::size_t c = 0; c < m.n; ++c) {
            if (c) out << ' ';
            out << format_double(r == c ? 0.0 : m.w[r * m.n + c]);
        }
        out << '\n';
    }
}

inline Instance load_instance(const std::string& path, FileFormat format = FileFormat::Auto) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return read_instance(in, format);
}

inline void save_instance(const Instance& inst, const std::string& path, FileFormat format = FileFormat::Auto) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    write_instance(out, inst, format);
}

}  // namespace diampart
