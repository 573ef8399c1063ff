// Copyright (c) sdgraph contributors.
// SPDX-License-Identifier: Apache-2.0

#include "sdg/digraph.hpp"

#include <algorithm>
#include <queue>

namespace sdg {

namespace {

void sort_unique(std::vector<VertexId>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<Distance> bfs_over(const std::vector<std::vector<VertexId>>& adj, VertexId src) {
    std::vector<Distance> dist(adj.size(), Distance::infinity());
    dist[static_cast<std::size_t>(src)] = Distance::finite(0);
    std::queue<VertexId> frontier;
    frontier.push(src);
    while (!frontier.empty()) {
        VertexId u = frontier.front();
        frontier.pop();
        Distance next = dist[static_cast<std::size_t>(u)] + Distance::finite(1);
        for (VertexId v : adj[static_cast<std::size_t>(u)]) {
            if (dist[static_cast<std::size_t>(v)].is_infinite()) {
                dist[static_cast<std::size_t>(v)] = next;
                frontier.push(v);
            }
        }
    }
    return dist;
}

bool sweep_covers_all(const std::vector<std::vector<VertexId>>& adj) {
    if (adj.empty()) return true;
    for (Distance d : bfs_over(adj, 0))
        if (d.is_infinite()) return false;
    return true;
}

}  // namespace

Digraph Digraph::build(int n, std::span<const Edge> edges) {
    Digraph g;
    g.n_ = n;
    g.out_.assign(static_cast<std::size_t>(n), {});
    g.in_.assign(static_cast<std::size_t>(n), {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n) throw VertexOutOfRangeError(u, n);
        if (v < 0 || v >= n) throw VertexOutOfRangeError(v, n);
        if (u == v) throw LoopEdgeError(u);
        g.out_[static_cast<std::size_t>(u)].push_back(v);
    }
    for (auto& list : g.out_) sort_unique(list);
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v : g.out_[static_cast<std::size_t>(u)]) g.in_[static_cast<std::size_t>(v)].push_back(u);
        g.edge_count_ += static_cast<int>(g.out_[static_cast<std::size_t>(u)].size());
    }
    for (auto& list : g.in_) std::sort(list.begin(), list.end());
    return g;
}

std::vector<VertexId> Digraph::neighbors(VertexId u) const {
    check(u);
    std::vector<VertexId> merged;
    const auto& a = out_[static_cast<std::size_t>(u)];
    const auto& b = in_[static_cast<std::size_t>(u)];
    merged.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
    return merged;
}

bool Digraph::has_edge(VertexId u, VertexId v) const {
    check(u);
    check(v);
    const auto& list = out_[static_cast<std::size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Digraph::edges() const {
    std::vector<Edge> result;
    result.reserve(static_cast<std::size_t>(edge_count_));
    for (VertexId u = 0; u < n_; ++u)
        for (VertexId v : out_[static_cast<std::size_t>(u)]) result.emplace_back(u, v);
    return result;
}

Digraph Digraph::transpose() const {
    Digraph t;
    t.n_ = n_;
    t.edge_count_ = edge_count_;
    t.out_ = in_;
    t.in_ = out_;
    return t;
}

UndirectedGraph UndirectedGraph::build(int n, std::span<const Edge> edges) {
    UndirectedGraph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n) throw VertexOutOfRangeError(u, n);
        if (v < 0 || v >= n) throw VertexOutOfRangeError(v, n);
        if (u == v) throw LoopEdgeError(u);
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& list : g.adj_) sort_unique(list);
    for (const auto& list : g.adj_) g.edge_count_ += static_cast<int>(list.size());
    g.edge_count_ /= 2;
    return g;
}

bool UndirectedGraph::has_edge(VertexId u, VertexId v) const {
    check(u);
    check(v);
    const auto& list = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> UndirectedGraph::edges() const {
    std::vector<Edge> result;
    result.reserve(static_cast<std::size_t>(edge_count_));
    for (VertexId u = 0; u < n_; ++u)
        for (VertexId v : adj_[static_cast<std::size_t>(u)])
            if (u < v) result.emplace_back(u, v);
    return result;
}

Digraph UndirectedGraph::as_symmetric_digraph() const {
    std::vector<Edge> arcs;
    arcs.reserve(2 * static_cast<std::size_t>(edge_count_));
    for (VertexId u = 0; u < n_; ++u)
        for (VertexId v : adj_[static_cast<std::size_t>(u)]) arcs.emplace_back(u, v);
    return Digraph::build(n_, arcs);
}

std::vector<Distance> bfs_from(const Digraph& g, VertexId src) {
    if (src < 0 || src >= g.vertex_count()) throw VertexOutOfRangeError(src, g.vertex_count());
    std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(g.vertex_count()));
    for (VertexId u = 0; u < g.vertex_count(); ++u) adj[static_cast<std::size_t>(u)] = g.out_neighbors(u);
    return bfs_over(adj, src);
}

std::vector<Distance> bfs_from(const UndirectedGraph& g, VertexId src) {
    if (src < 0 || src >= g.vertex_count()) throw VertexOutOfRangeError(src, g.vertex_count());
    std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(g.vertex_count()));
    for (VertexId u = 0; u < g.vertex_count(); ++u) adj[static_cast<std::size_t>(u)] = g.neighbors(u);
    return bfs_over(adj, src);
}

namespace {

template <typename Graph, typename RowFn>
DistanceMatrix all_pairs_impl(const Graph& g, RowFn row) {
    const int n = g.vertex_count();
    DistanceMatrix m(n);
    for (VertexId u = 0; u < n; ++u) {
        std::vector<Distance> dist = row(u);
        for (VertexId v = 0; v < n; ++v) m.set(u, v, dist[static_cast<std::size_t>(v)]);
    }
    return m;
}

}  // namespace

DistanceMatrix all_pairs(const Digraph& g) {
    return all_pairs_impl(g, [&](VertexId u) { return bfs_from(g, u); });
}

DistanceMatrix all_pairs(const UndirectedGraph& g) {
    return all_pairs_impl(g, [&](VertexId u) { return bfs_from(g, u); });
}

bool is_strong(const Digraph& g) {
    if (g.vertex_count() <= 1) return true;
    std::vector<std::vector<VertexId>> fwd(static_cast<std::size_t>(g.vertex_count()));
    std::vector<std::vector<VertexId>> bwd(static_cast<std::size_t>(g.vertex_count()));
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        fwd[static_cast<std::size_t>(u)] = g.out_neighbors(u);
        bwd[static_cast<std::size_t>(u)] = g.in_neighbors(u);
    }
    return sweep_covers_all(fwd) && sweep_covers_all(bwd);
}

bool is_weak(const Digraph& g) {
    if (g.vertex_count() <= 1) return true;
    std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(g.vertex_count()));
    for (VertexId u = 0; u < g.vertex_count(); ++u) adj[static_cast<std::size_t>(u)] = g.neighbors(u);
    return sweep_covers_all(adj);
}

bool is_connected(const UndirectedGraph& g) {
    if (g.vertex_count() <= 1) return true;
    std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(g.vertex_count()));
    for (VertexId u = 0; u < g.vertex_count(); ++u) adj[static_cast<std::size_t>(u)] = g.neighbors(u);
    return sweep_covers_all(adj);
}

}  // namespace sdg
