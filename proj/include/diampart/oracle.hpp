#pragma once

// Weight oracles: the only way any algorithm in this library reads pair weights.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace diampart {

using Vertex = std::uint32_t;

template <class O>
concept WeightOracle = requires(const O& o, Vertex u, Vertex v) {
    { o.size() } -> std::convertible_to<std::size_t>;
    { o.weight(u, v) } -> std::convertible_to<double>;
};

namespace detail {

inline void check_pair(std::size_t n, Vertex u, Vertex v) {
    if (u == v) throw ContractViolation("weight: u == v has no pair weight");
    if (u >= n || v >= n) throw ContractViolation("weight: vertex id out of range");
}

}  // namespace detail

/// Non-owning view over a row-major n x n symmetric matrix. Diagonal is never read.
class MatrixOracle {
public:
    MatrixOracle(std::span<const double> data, std::size_t n) : data_(data), n_(n) {
        detail::require(data.size() == n * n, "MatrixOracle: data size must be n*n");
    }

    std::size_t size() const noexcept { return n_; }
    double weight(Vertex u, Vertex v) const {
        detail::check_pair(n_, u, v);
        return data_[std::size_t(u) * n_ + v];
    }

private:
    std::span<const double> data_;
    std::size_t n_;
};

/// Squared Euclidean distance with one fixed evaluation order, so every caller
/// (oracles, hull, closest pair) produces bit-identical values for a pair.
inline double squared_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        s += d * d;
    }
    return s;
}

/// Non-owning view over n points of dimension d (row-major).
/// `Squared` selects squared distances, which is what the solvers compare.
template <bool Squared>
class BasicPointsOracle {
public:
    BasicPointsOracle(std::span<const double> coords, std::size_t n, std::size_t dim)
        : coords_(coords), n_(n), dim_(dim) {
        detail::require(dim >= 1, "PointsOracle: dimension must be >= 1");
        detail::require(coords.size() == n * dim, "PointsOracle: coordinate count must be n*d");
    }

    std::size_t size() const noexcept { return n_; }
    std::size_t dim() const noexcept { return dim_; }
    std::span<const double> point(Vertex v) const { return coords_.subspan(std::size_t(v) * dim_, dim_); }

    double weight(Vertex u, Vertex v) const {
        detail::check_pair(n_, u, v);
        const double sq = squared_distance(point(u), point(v));
        if constexpr (Squared) {
            return sq;
        } else {
            return std::sqrt(sq);
        }
    }

private:
    std::span<const double> coords_;
    std::size_t n_;
    std::size_t dim_;
};

using EuclideanOracle = BasicPointsOracle<false>;
using SquaredEuclideanOracle = BasicPointsOracle<true>;

/// Reports -w(u,v). Holds a reference; the inner oracle must outlive it.
template <WeightOracle O>
class NegatedOracle {
public:
    explicit NegatedOracle(const O& inner) : inner_(&inner) {}

    std::size_t size() const { return inner_->size(); }
    double weight(Vertex u, Vertex v) const { return -inner_->weight(u, v); }
    const O& inner() const noexcept { return *inner_; }

private:
    const O* inner_;
};

template <WeightOracle O>
NegatedOracle<O> negate_oracle(const O& o) {
    return NegatedOracle<O>(o);
}

/// Counts every weight read (no deduplication). The counter is atomic so one
/// wrapper may be shared by concurrent solver runs.
template <WeightOracle O>
class CountingOracle {
public:
    explicit CountingOracle(const O& inner, bool log_queries = false)
        : inner_(&inner), logging_(log_queries) {}
    // Holds a pointer; a temporary would dangle.
    explicit CountingOracle(const O&&, bool = false) = delete;

    CountingOracle(const CountingOracle&) = delete;
    CountingOracle& operator=(const CountingOracle&) = delete;

    std::size_t size() const { return inner_->size(); }

    double weight(Vertex u, Vertex v) const {
        queries_.fetch_add(1, std::memory_order_relaxed);
        if (logging_) {
            std::lock_guard lock(log_mutex_);
            log_.emplace_back(u, v);
        }
        return inner_->weight(u, v);
    }

    std::uint64_t queries() const noexcept { return queries_.load(std::memory_order_relaxed); }

    void reset() {
        queries_.store(0, std::memory_order_relaxed);
        std::lock_guard lock(log_mutex_);
        log_.clear();
    }

    std::vector<std::pair<Vertex, Vertex>> query_log() const {
        std::lock_guard lock(log_mutex_);
        return log_;
    }

private:
    const O* inner_;
    bool logging_;
    mutable std::atomic<std::uint64_t> queries_{0};
    mutable std::mutex log_mutex_;
    mutable std::vector<std::pair<Vertex, Vertex>> log_;
};

/// Owning dense copy of an oracle's upper triangle, read exactly once per pair.
class DenseWeights {
public:
    DenseWeights() = default;

    template <WeightOracle O>
    static DenseWeights read(const O& o) {
        DenseWeights d;
        d.n_ = o.size();
        const std::size_t n = d.n_;
        d.w_.assign(n * n, 0.0);
        // Square tiles keep the mirrored writes cache-resident. Each pair u < v
        // is still read exactly once.
        constexpr std::size_t kTile = 64;
        for (std::size_t u0 = 0; u0 < n; u0 += kTile) {
            const std::size_t u1 = std::min(n, u0 + kTile);
            for (std::size_t v0 = u0; v0 < n; v0 += kTile) {
                const std::size_t v1 = std::min(n, v0 + kTile);
                for (std::size_t u = u0; u < u1; ++u)
                    for (std::size_t v = std::max(v0, u + 1); v < v1; ++v) {
                        const double x = o.weight(Vertex(u), Vertex(v));
                        d.w_[u * n + v] = x;
                        d.w_[v * n + u] = x;
                    }
            }
        }
        return d;
    }

    std::size_t size() const noexcept { return n_; }
    double weight(Vertex u, Vertex v) const {
        detail::check_pair(n_, u, v);
        return w_[std::size_t(u) * n_ + v];
    }
    /// Unchecked row access for hot loops.
    const double* row(Vertex u) const noexcept { return w_.data() + std::size_t(u) * n_; }

private:
    std::size_t n_ = 0;
    std::vector<double> w_;
};

}  // namespace diampart
