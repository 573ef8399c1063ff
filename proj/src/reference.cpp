// Copyright (c) sdgraph contributors.
// SPDX-License-Identifier: Apache-2.0

#include "sdg/reference.hpp"

#include <algorithm>
#include <set>

namespace sdg::reference {

namespace {

DistanceMatrix relax_all(int n, const std::vector<Edge>& edges) {
    DistanceMatrix d(n);
    for (const auto& [u, v] : edges) d.set(u, v, Distance::finite(1));
    for (VertexId k = 0; k < n; ++k)
        for (VertexId i = 0; i < n; ++i)
            for (VertexId j = 0; j < n; ++j)
                if (d.at(i, k) + d.at(k, j) < d.at(i, j)) d.set(i, j, d.at(i, k) + d.at(k, j));
    return d;
}

std::vector<VertexId> quantifier_neighbors(const Digraph& g, VertexId v) {
    std::vector<VertexId> out;
    for (VertexId w = 0; w < g.vertex_count(); ++w)
        if (w != v && (g.has_edge(v, w) || g.has_edge(w, v))) out.push_back(w);
    return out;
}

std::vector<int> eccentricities(const DistanceMatrix& s) {
    std::vector<int> ecc(static_cast<std::size_t>(s.size()), 0);
    for (VertexId u = 0; u < s.size(); ++u)
        for (VertexId v = 0; v < s.size(); ++v)
            ecc[static_cast<std::size_t>(u)] =
                std::max(ecc[static_cast<std::size_t>(u)], static_cast<int>(s.at(u, v).hops()));
    return ecc;
}

void walk_geodesics(const Digraph& g, const DistanceMatrix& d, VertexId at, VertexId target,
                    std::set<VertexId>& seen) {
    if (!seen.insert(at).second) return;  // already expanded; suffixes identical
    if (at == target) return;
    for (VertexId next : g.out_neighbors(at))
        if (Distance::finite(1) + d.at(next, target) == d.at(at, target))
            walk_geodesics(g, d, next, target, seen);
}

}  // namespace

DistanceMatrix floyd_warshall(const Digraph& g) {
    return relax_all(g.vertex_count(), g.edges());
}

DistanceMatrix floyd_warshall(const UndirectedGraph& g) {
    std::vector<Edge> arcs;
    for (const auto& [u, v] : g.edges()) {
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    return relax_all(g.vertex_count(), arcs);
}

DistanceMatrix symmetrized_matrix(const Digraph& g, Metric metric) {
    DistanceMatrix d = floyd_warshall(g);
    DistanceMatrix s(d.size());
    for (VertexId u = 0; u < d.size(); ++u)
        for (VertexId v = 0; v < d.size(); ++v)
            s.set(u, v,
                  metric == Metric::Sum ? d.at(u, v) + d.at(v, u) : max(d.at(u, v), d.at(v, u)));
    return s;
}

bool is_strong(const Digraph& g) {
    return floyd_warshall(g).all_finite();
}

std::vector<VertexId> boundary_set(const Digraph& g, Metric metric) {
    DistanceMatrix s = symmetrized_matrix(g, metric);
    std::vector<VertexId> result;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        bool member = false;
        for (VertexId u = 0; u < g.vertex_count() && !member; ++u) {
            bool witness = true;
            for (VertexId w : quantifier_neighbors(g, v))
                if (s.at(u, w) > s.at(u, v)) witness = false;
            member = witness;
        }
        if (member) result.push_back(v);
    }
    return result;
}

std::vector<VertexId> eccentric_set(const Digraph& g, Metric metric) {
    DistanceMatrix s = symmetrized_matrix(g, metric);
    std::vector<int> ecc = eccentricities(s);
    std::vector<VertexId> result;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        bool member = false;
        for (VertexId u = 0; u < g.vertex_count(); ++u)
            if (s.at(u, v) == Distance::finite(ecc[static_cast<std::size_t>(u)])) member = true;
        if (member) result.push_back(v);
    }
    return result;
}

std::vector<VertexId> contour_set(const Digraph& g, Metric metric) {
    std::vector<int> ecc = eccentricities(symmetrized_matrix(g, metric));
    std::vector<VertexId> result;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        bool member = true;
        for (VertexId u : quantifier_neighbors(g, v))
            if (ecc[static_cast<std::size_t>(u)] > ecc[static_cast<std::size_t>(v)]) member = false;
        if (member) result.push_back(v);
    }
    return result;
}

std::vector<VertexId> periphery_set(const Digraph& g, Metric metric) {
    std::vector<int> ecc = eccentricities(symmetrized_matrix(g, metric));
    int diameter = *std::max_element(ecc.begin(), ecc.end());
    std::vector<VertexId> result;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (ecc[static_cast<std::size_t>(v)] == diameter) result.push_back(v);
    return result;
}

std::vector<VertexId> geodesic_interval(const Digraph& g, VertexId u, VertexId v) {
    DistanceMatrix d = floyd_warshall(g);
    std::set<VertexId> forward, backward;
    walk_geodesics(g, d, u, v, forward);
    walk_geodesics(g, d, v, u, backward);
    forward.insert(backward.begin(), backward.end());
    return {forward.begin(), forward.end()};
}

}  // namespace sdg::reference
