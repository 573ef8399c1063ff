// Copyright (c) sdgraph contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "sdg/metric.hpp"

namespace sdg {

/// The four boundary-type vertex sets of one graph under one metric.
/// Always satisfies periphery ⊆ contour ∩ eccentric and
/// eccentric ∪ contour ⊆ boundary.
struct BoundaryProfile {
    Metric metric = Metric::Sum;
    std::vector<VertexId> boundary;
    std::vector<VertexId> contour;
    std::vector<VertexId> eccentric;
    std::vector<VertexId> periphery;
};

/// Vertices of all u→v geodesics together with those of all v→u geodesics.
struct GeodesicInterval {
    VertexId u = 0;
    VertexId v = 0;
    std::vector<VertexId> vertices;  // sorted; contains both endpoints
};

/// v is a boundary vertex when some witness u sees no neighbor of v
/// farther away than v itself. Neighborhoods are N(v) = N⁺(v) ∪ N⁻(v).
std::vector<VertexId> boundary_set(const Digraph& g, Metric metric = Metric::Sum);

/// Vertices realizing some vertex's eccentricity.
std::vector<VertexId> eccentric_set(const Digraph& g, Metric metric = Metric::Sum);

/// Vertices whose eccentricity is not exceeded by any neighbor's.
std::vector<VertexId> contour_set(const Digraph& g, Metric metric = Metric::Sum);

/// Vertices of maximum eccentricity.
std::vector<VertexId> periphery_set(const Digraph& g, Metric metric = Metric::Sum);

/// All four sets computed consistently from one metric matrix.
BoundaryProfile boundary_profile(const Digraph& g, Metric metric = Metric::Sum);

/// Boundary-type sets of a connected undirected graph under hop distance.
BoundaryProfile boundary_profile(const UndirectedGraph& g);

GeodesicInterval geodesic_interval(const Digraph& g, VertexId u, VertexId v);

/// Union of geodesic intervals over all unordered pairs drawn from S
/// (pairs with u = v contribute the singleton, so the closure always
/// contains S).
std::vector<VertexId> geodetic_closure(const Digraph& g, const std::vector<VertexId>& s);

bool is_geodetic_set(const Digraph& g, const std::vector<VertexId>& s);

namespace detail {

// Set machinery shared by the directed and undirected entry points; the
// metric matrix and the neighborhood structure fully determine the sets.
std::vector<VertexId> boundary_set_on(const DistanceMatrix& s,
                                      const std::vector<std::vector<VertexId>>& nbrs);
std::vector<VertexId> eccentric_set_on(const DistanceMatrix& s, const std::vector<int>& ecc);
std::vector<VertexId> contour_set_on(const std::vector<int>& ecc,
                                     const std::vector<std::vector<VertexId>>& nbrs);

}  // namespace detail

}  // namespace sdg
