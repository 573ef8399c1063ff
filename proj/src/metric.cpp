// Copyright (c) sdgraph contributors.
// SPDX-License-Identifier: Apache-2.0

#include "sdg/metric.hpp"

#include <stdexcept>

namespace sdg {

std::string metric_name(Metric m) {
    return m == Metric::Sum ? "sum" : "max";
}

Distance sum_distance(const DistanceMatrix& m, VertexId u, VertexId v) {
    return m.at(u, v) + m.at(v, u);
}

Distance max_distance(const DistanceMatrix& m, VertexId u, VertexId v) {
    return max(m.at(u, v), m.at(v, u));
}

namespace {

DistanceMatrix symmetrize(const Digraph& g, Metric metric) {
    if (!is_strong(g)) throw NotStronglyConnectedError();
    DistanceMatrix directed = all_pairs(g);
    const int n = directed.size();
    DistanceMatrix s(n);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v)
            s.set(u, v, metric == Metric::Sum ? sum_distance(directed, u, v) : max_distance(directed, u, v));
    return s;
}

}  // namespace

DistanceMatrix sum_metric_matrix(const Digraph& g) { return symmetrize(g, Metric::Sum); }

DistanceMatrix max_metric_matrix(const Digraph& g) { return symmetrize(g, Metric::Max); }

DistanceMatrix metric_matrix(const Digraph& g, Metric metric) { return symmetrize(g, metric); }

EccentricityProfile profile_from_matrix(const DistanceMatrix& m) {
    const int n = m.size();
    if (n == 0) throw std::invalid_argument("eccentricity profile of an empty graph");
    EccentricityProfile p;
    p.ecc.resize(static_cast<std::size_t>(n));
    for (VertexId v = 0; v < n; ++v) {
        Distance worst = Distance::finite(0);
        for (VertexId w = 0; w < n; ++w) worst = max(worst, m.at(v, w));
        if (worst.is_infinite()) throw std::invalid_argument("eccentricity profile needs finite distances");
        p.ecc[static_cast<std::size_t>(v)] = static_cast<int>(worst.hops());
    }
    p.radius = p.ecc[0];
    p.diameter = p.ecc[0];
    for (int e : p.ecc) {
        if (e < p.radius) p.radius = e;
        if (e > p.diameter) p.diameter = e;
    }
    for (VertexId v = 0; v < n; ++v) {
        if (p.ecc[static_cast<std::size_t>(v)] == p.radius) p.center.push_back(v);
        if (p.ecc[static_cast<std::size_t>(v)] == p.diameter) p.periphery.push_back(v);
    }
    return p;
}

EccentricityProfile eccentricity_profile(const Digraph& g, Metric metric) {
    return profile_from_matrix(metric_matrix(g, metric));
}

EccentricityProfile eccentricity_profile(const UndirectedGraph& g) {
    if (!is_connected(g)) throw NotConnectedError();
    return profile_from_matrix(all_pairs(g));
}

MetricAxiomReport check_metric_axioms(const DistanceMatrix& s) {
    const int n = s.size();
    MetricAxiomReport report;
    auto fail = [&](MetricAxiomReport::Axiom axiom, VertexId u, VertexId v, VertexId w) {
        report.holds = false;
        report.failed = axiom;
        report.witness = {u, v, w};
    };

    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = 0; v < n; ++v) {
            Distance d = s.at(u, v);
            if (u == v && d != Distance::finite(0)) {
                fail(MetricAxiomReport::Axiom::Identity, u, v, -1);
                return report;
            }
            if (u != v && d == Distance::finite(0)) {
                fail(MetricAxiomReport::Axiom::Identity, u, v, -1);
                return report;
            }
            if (u != v && (d.is_infinite() || d < Distance::finite(0))) {
                fail(MetricAxiomReport::Axiom::Positivity, u, v, -1);
                return report;
            }
        }
    }
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            if (s.at(u, v) != s.at(v, u)) {
                fail(MetricAxiomReport::Axiom::Symmetry, u, v, -1);
                return report;
            }
        }
    }
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v)
            for (VertexId w = 0; w < n; ++w)
                if (s.at(u, w) + s.at(w, v) < s.at(u, v)) {
                    fail(MetricAxiomReport::Axiom::Triangle, u, v, w);
                    return report;
                }
    return report;
}

}  // namespace sdg
