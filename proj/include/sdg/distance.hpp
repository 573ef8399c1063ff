// Copyright (c) sdgraph contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <vector>

#include "sdg/errors.hpp"

namespace sdg {

/// Nonnegative hop count with an explicit infinity sentinel.
///
/// Infinity absorbs addition and compares greater than every finite
/// value, so min/sum arithmetic over partially reachable graphs needs
/// no special-casing at call sites.
class Distance {
public:
    constexpr Distance() = default;  // zero hops

    static constexpr Distance finite(std::int64_t hops) { return Distance(hops); }
    static constexpr Distance infinity() { return Distance(kInfinite); }

    constexpr bool is_finite() const { return value_ != kInfinite; }
    constexpr bool is_infinite() const { return value_ == kInfinite; }

    /// Hop count; only meaningful when finite.
    constexpr std::int64_t hops() const { return value_; }

    friend constexpr Distance operator+(Distance a, Distance b) {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        return finite(a.value_ + b.value_);
    }

    friend constexpr bool operator==(Distance a, Distance b) = default;
    friend constexpr auto operator<=>(Distance a, Distance b) { return a.value_ <=> b.value_; }

    friend std::ostream& operator<<(std::ostream& os, Distance d) {
        if (d.is_infinite()) return os << "inf";
        return os << d.value_;
    }

private:
    static constexpr std::int64_t kInfinite = std::numeric_limits<std::int64_t>::max();
    constexpr explicit Distance(std::int64_t v) : value_(v) {}
    std::int64_t value_ = 0;
};

constexpr Distance min(Distance a, Distance b) { return a < b ? a : b; }
constexpr Distance max(Distance a, Distance b) { return a < b ? b : a; }

/// Square matrix of pairwise distances. Freshly constructed matrices
/// have a zero diagonal and infinite off-diagonal entries.
class DistanceMatrix {
public:
    DistanceMatrix() = default;

    explicit DistanceMatrix(int n) : n_(n), cells_(static_cast<std::size_t>(n) * n, Distance::infinity()) {
        for (int i = 0; i < n; ++i) cells_[index(i, i)] = Distance::finite(0);
    }

    int size() const { return n_; }

    Distance at(VertexId u, VertexId v) const {
        check(u);
        check(v);
        return cells_[index(u, v)];
    }

    void set(VertexId u, VertexId v, Distance d) {
        check(u);
        check(v);
        cells_[index(u, v)] = d;
    }

    bool all_finite() const {
        for (const Distance& d : cells_)
            if (d.is_infinite()) return false;
        return true;
    }

    bool is_symmetric() const {
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (cells_[index(u, v)] != cells_[index(v, u)]) return false;
        return true;
    }

    friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
    std::size_t index(VertexId u, VertexId v) const {
        return static_cast<std::size_t>(u) * n_ + v;
    }
    void check(VertexId v) const {
        if (v < 0 || v >= n_) throw VertexOutOfRangeError(v, n_);
    }

    int n_ = 0;
    std::vector<Distance> cells_;
};

}  // namespace sdg
