// Copyright (c) sdgraph contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sdg/digraph.hpp"

namespace sdg {

/// Symmetrization applied to directed distances. Sum is the default
/// everywhere; Max is provided as a convenience alternative.
enum class Metric { Sum, Max };

std::string metric_name(Metric m);

/// sd(u, v) = d->(u, v) + d->(v, u), infinity-absorbing.
Distance sum_distance(const DistanceMatrix& m, VertexId u, VertexId v);

/// md(u, v) = max of the two directed distances.
Distance max_distance(const DistanceMatrix& m, VertexId u, VertexId v);

/// Symmetric matrix of pairwise sum distances; requires a strong digraph,
/// so every entry is finite.
DistanceMatrix sum_metric_matrix(const Digraph& g);

DistanceMatrix max_metric_matrix(const Digraph& g);

DistanceMatrix metric_matrix(const Digraph& g, Metric metric);

/// Per-vertex eccentricities with the derived radius/diameter/center/periphery.
struct EccentricityProfile {
    std::vector<int> ecc;
    int radius = 0;
    int diameter = 0;
    std::vector<VertexId> center;     // ecc == radius, sorted
    std::vector<VertexId> periphery;  // ecc == diameter, sorted
};

EccentricityProfile eccentricity_profile(const Digraph& g, Metric metric = Metric::Sum);

/// Profile of a connected undirected graph under ordinary hop distance.
EccentricityProfile eccentricity_profile(const UndirectedGraph& g);

/// Profile of an already-computed finite symmetric matrix.
EccentricityProfile profile_from_matrix(const DistanceMatrix& m);

/// Executable metric-axiom check: positivity, identity of indiscernibles,
/// symmetry, and the triangle inequality over all triples.
struct MetricAxiomReport {
    enum class Axiom { Positivity, Identity, Symmetry, Triangle };

    bool holds = true;
    std::optional<Axiom> failed;
    /// First violating witness in pass order (positivity/identity pairs,
    /// then symmetry pairs, then triangle triples), each pass scanned
    /// lexicographically. Unused slots are -1.
    std::array<VertexId, 3> witness{-1, -1, -1};
};

MetricAxiomReport check_metric_axioms(const DistanceMatrix& s);

}  // namespace sdg
