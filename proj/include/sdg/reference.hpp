// Copyright (c) sdgraph contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "sdg/digraph.hpp"
#include "sdg/metric.hpp"

namespace sdg::reference {

// Definition-literal brute-force implementations, deliberately kept on a
// separate code path from the main library (Floyd–Warshall instead of
// BFS, quantifier loops instead of precomputed profiles, has_edge probes
// instead of adjacency lists). They exist purely as ground truth for the
// fuzz suites and fixtures; never use them for real workloads.

DistanceMatrix floyd_warshall(const Digraph& g);
DistanceMatrix floyd_warshall(const UndirectedGraph& g);

/// Symmetrized matrix from Floyd–Warshall distances.
DistanceMatrix symmetrized_matrix(const Digraph& g, Metric metric);

bool is_strong(const Digraph& g);

std::vector<VertexId> boundary_set(const Digraph& g, Metric metric);
std::vector<VertexId> eccentric_set(const Digraph& g, Metric metric);
std::vector<VertexId> contour_set(const Digraph& g, Metric metric);
std::vector<VertexId> periphery_set(const Digraph& g, Metric metric);

/// Interval by explicit enumeration of every geodesic in both
/// directions (depth-first walk over shortest-path DAGs).
std::vector<VertexId> geodesic_interval(const Digraph& g, VertexId u, VertexId v);

}  // namespace sdg::reference
