// Copyright (c) sdgraph contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "sdg/digraph.hpp"

namespace fixtures {

// Pinned 6-vertex strong digraph with two bidirectional pairs and a mix
// of one-way arcs; sum eccentricities (6, 5, 4, 6, 4, 4).
inline sdg::Digraph strong6() {
    return sdg::Digraph::build(6, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 4}, {4, 5},
                                   {0, 4}, {0, 5}, {5, 1}, {5, 2}, {5, 3}});
}

// Pinned 5-vertex strong digraph; sum eccentricities (7, 5, 4, 7, 4).
inline sdg::Digraph strong5() {
    return sdg::Digraph::build(5, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 4}, {0, 4}, {4, 2}});
}

inline sdg::Digraph bidirected_pair() {
    return sdg::Digraph::build(2, {{0, 1}, {1, 0}});
}

inline sdg::Digraph dicycle(int n) {
    std::vector<sdg::Edge> edges;
    for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
    return sdg::Digraph::build(n, edges);
}

inline sdg::UndirectedGraph path_graph(int n) {
    std::vector<sdg::Edge> edges;
    for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
    return sdg::UndirectedGraph::build(n, edges);
}

inline sdg::UndirectedGraph complete_graph(int n) {
    std::vector<sdg::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return sdg::UndirectedGraph::build(n, edges);
}

}  // namespace fixtures
