// Copyright (c) sdgraph contributors.
// SPDX-License-Identifier: Apache-2.0

#include "sdg/boundary.hpp"

#include <algorithm>

namespace sdg {

namespace detail {

std::vector<VertexId> boundary_set_on(const DistanceMatrix& s,
                                      const std::vector<std::vector<VertexId>>& nbrs) {
    const int n = s.size();
    std::vector<VertexId> result;
    for (VertexId v = 0; v < n; ++v) {
        const auto& around = nbrs[static_cast<std::size_t>(v)];
        bool is_boundary = false;
        for (VertexId u = 0; u < n && !is_boundary; ++u) {
            Distance dv = s.at(u, v);
            bool witness = true;
            for (VertexId w : around) {
                if (s.at(u, w) > dv) {
                    witness = false;
                    break;
                }
            }
            is_boundary = witness;
        }
        if (is_boundary) result.push_back(v);
    }
    return result;
}

std::vector<VertexId> eccentric_set_on(const DistanceMatrix& s, const std::vector<int>& ecc) {
    const int n = s.size();
    std::vector<VertexId> result;
    for (VertexId v = 0; v < n; ++v) {
        for (VertexId u = 0; u < n; ++u) {
            if (s.at(u, v) == Distance::finite(ecc[static_cast<std::size_t>(u)])) {
                result.push_back(v);
                break;
            }
        }
    }
    return result;
}

std::vector<VertexId> contour_set_on(const std::vector<int>& ecc,
                                     const std::vector<std::vector<VertexId>>& nbrs) {
    std::vector<VertexId> result;
    for (VertexId v = 0; v < static_cast<VertexId>(ecc.size()); ++v) {
        const auto& around = nbrs[static_cast<std::size_t>(v)];
        bool local_max = std::all_of(around.begin(), around.end(), [&](VertexId u) {
            return ecc[static_cast<std::size_t>(u)] <= ecc[static_cast<std::size_t>(v)];
        });
        if (local_max) result.push_back(v);
    }
    return result;
}

}  // namespace detail

namespace {

std::vector<std::vector<VertexId>> union_neighborhoods(const Digraph& g) {
    std::vector<std::vector<VertexId>> nbrs(static_cast<std::size_t>(g.vertex_count()));
    for (VertexId v = 0; v < g.vertex_count(); ++v) nbrs[static_cast<std::size_t>(v)] = g.neighbors(v);
    return nbrs;
}

std::vector<std::vector<VertexId>> adjacency(const UndirectedGraph& g) {
    std::vector<std::vector<VertexId>> nbrs(static_cast<std::size_t>(g.vertex_count()));
    for (VertexId v = 0; v < g.vertex_count(); ++v) nbrs[static_cast<std::size_t>(v)] = g.neighbors(v);
    return nbrs;
}

// Membership test for directed geodesics: w lies on some a→b geodesic
// iff d(a,w) + d(w,b) = d(a,b).
bool on_geodesic(const DistanceMatrix& d, VertexId a, VertexId w, VertexId b) {
    return d.at(a, w) + d.at(w, b) == d.at(a, b);
}

void add_interval(const DistanceMatrix& d, VertexId u, VertexId v, std::vector<char>& member) {
    const int n = d.size();
    for (VertexId w = 0; w < n; ++w)
        if (on_geodesic(d, u, w, v) || on_geodesic(d, v, w, u)) member[static_cast<std::size_t>(w)] = 1;
}

std::vector<VertexId> collect(const std::vector<char>& member) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < static_cast<VertexId>(member.size()); ++v)
        if (member[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

}  // namespace

std::vector<VertexId> boundary_set(const Digraph& g, Metric metric) {
    return detail::boundary_set_on(metric_matrix(g, metric), union_neighborhoods(g));
}

std::vector<VertexId> eccentric_set(const Digraph& g, Metric metric) {
    DistanceMatrix s = metric_matrix(g, metric);
    return detail::eccentric_set_on(s, profile_from_matrix(s).ecc);
}

std::vector<VertexId> contour_set(const Digraph& g, Metric metric) {
    return detail::contour_set_on(eccentricity_profile(g, metric).ecc, union_neighborhoods(g));
}

std::vector<VertexId> periphery_set(const Digraph& g, Metric metric) {
    return eccentricity_profile(g, metric).periphery;
}

BoundaryProfile boundary_profile(const Digraph& g, Metric metric) {
    DistanceMatrix s = metric_matrix(g, metric);
    EccentricityProfile p = profile_from_matrix(s);
    auto nbrs = union_neighborhoods(g);
    BoundaryProfile b;
    b.metric = metric;
    b.boundary = detail::boundary_set_on(s, nbrs);
    b.contour = detail::contour_set_on(p.ecc, nbrs);
    b.eccentric = detail::eccentric_set_on(s, p.ecc);
    b.periphery = p.periphery;
    return b;
}

BoundaryProfile boundary_profile(const UndirectedGraph& g) {
    if (!is_connected(g)) throw NotConnectedError();
    DistanceMatrix d = all_pairs(g);
    EccentricityProfile p = profile_from_matrix(d);
    auto nbrs = adjacency(g);
    BoundaryProfile b;
    b.metric = Metric::Sum;  // unused under hop distance
    b.boundary = detail::boundary_set_on(d, nbrs);
    b.contour = detail::contour_set_on(p.ecc, nbrs);
    b.eccentric = detail::eccentric_set_on(d, p.ecc);
    b.periphery = p.periphery;
    return b;
}

GeodesicInterval geodesic_interval(const Digraph& g, VertexId u, VertexId v) {
    if (u < 0 || u >= g.vertex_count()) throw VertexOutOfRangeError(u, g.vertex_count());
    if (v < 0 || v >= g.vertex_count()) throw VertexOutOfRangeError(v, g.vertex_count());
    if (!is_strong(g)) throw NotStronglyConnectedError();
    DistanceMatrix d = all_pairs(g);
    std::vector<char> member(static_cast<std::size_t>(g.vertex_count()), 0);
    add_interval(d, u, v, member);
    return GeodesicInterval{u, v, collect(member)};
}

std::vector<VertexId> geodetic_closure(const Digraph& g, const std::vector<VertexId>& s) {
    for (VertexId v : s)
        if (v < 0 || v >= g.vertex_count()) throw VertexOutOfRangeError(v, g.vertex_count());
    if (!is_strong(g)) throw NotStronglyConnectedError();
    DistanceMatrix d = all_pairs(g);
    std::vector<char> member(static_cast<std::size_t>(g.vertex_count()), 0);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i; j < s.size(); ++j) add_interval(d, s[i], s[j], member);
    return collect(member);
}

bool is_geodetic_set(const Digraph& g, const std::vector<VertexId>& s) {
    return static_cast<int>(geodetic_closure(g, s).size()) == g.vertex_count();
}

}  // namespace sdg
