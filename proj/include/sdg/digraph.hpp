// Copyright (c) sdgraph contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "sdg/distance.hpp"
#include "sdg/errors.hpp"

namespace sdg {

using Edge = std::pair<VertexId, VertexId>;

/// Dense integer-indexed directed graph without loops or parallel edges.
///
/// Immutable after construction; adjacency lists are kept sorted and the
/// in-adjacency is always the exact transpose of the out-adjacency.
/// All member functions are pure reads and safe to call concurrently.
class Digraph {
public:
    Digraph() = default;

    /// Builds a digraph on n vertices. Duplicate edges are silently
    /// deduplicated; loops and out-of-range endpoints are rejected.
    static Digraph build(int n, std::span<const Edge> edges);
    static Digraph build(int n, std::initializer_list<Edge> edges) {
        return build(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }

    const std::vector<VertexId>& out_neighbors(VertexId u) const {
        check(u);
        return out_[static_cast<std::size_t>(u)];
    }
    const std::vector<VertexId>& in_neighbors(VertexId u) const {
        check(u);
        return in_[static_cast<std::size_t>(u)];
    }

    /// N(u) = out-neighbors ∪ in-neighbors, sorted, never containing u.
    std::vector<VertexId> neighbors(VertexId u) const;

    bool has_edge(VertexId u, VertexId v) const;

    std::vector<Edge> edges() const;  // sorted lexicographically

    Digraph transpose() const;

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    void check(VertexId v) const {
        if (v < 0 || v >= n_) throw VertexOutOfRangeError(v, n_);
    }

    int n_ = 0;
    int edge_count_ = 0;
    std::vector<std::vector<VertexId>> out_;
    std::vector<std::vector<VertexId>> in_;
};

/// Simple undirected graph (no loops, no parallel edges), adjacency sorted.
class UndirectedGraph {
public:
    UndirectedGraph() = default;

    /// Edges may be given in either orientation; duplicates collapse.
    static UndirectedGraph build(int n, std::span<const Edge> edges);
    static UndirectedGraph build(int n, std::initializer_list<Edge> edges) {
        return build(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }

    const std::vector<VertexId>& neighbors(VertexId u) const {
        check(u);
        return adj_[static_cast<std::size_t>(u)];
    }

    bool has_edge(VertexId u, VertexId v) const;

    std::vector<Edge> edges() const;  // each edge once, (min, max), sorted

    /// Replaces every edge by the two directed arcs.
    Digraph as_symmetric_digraph() const;

    friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;

private:
    void check(VertexId v) const {
        if (v < 0 || v >= n_) throw VertexOutOfRangeError(v, n_);
    }

    int n_ = 0;
    int edge_count_ = 0;
    std::vector<std::vector<VertexId>> adj_;
};

/// Single-source directed hop distances; unreachable vertices are infinite.
std::vector<Distance> bfs_from(const Digraph& g, VertexId src);
std::vector<Distance> bfs_from(const UndirectedGraph& g, VertexId src);

/// All-pairs directed distances, one BFS per source.
DistanceMatrix all_pairs(const Digraph& g);
DistanceMatrix all_pairs(const UndirectedGraph& g);

/// True iff every ordered pair of vertices is joined by a directed path.
/// Decided by a forward sweep plus a sweep on the transpose.
bool is_strong(const Digraph& g);

/// True iff the underlying undirected graph is connected. Nothing else
/// in the library depends on weak connectivity; provided for completeness.
bool is_weak(const Digraph& g);

bool is_connected(const UndirectedGraph& g);

}  // namespace sdg
