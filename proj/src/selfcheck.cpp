// Copyright (c) sdgraph contributors.
// SPDX-License-Identifier: Apache-2.0

#include "sdg/selfcheck.hpp"

#include <algorithm>
#include <sstream>

#include "sdg/reference.hpp"

namespace sdg {

namespace {

struct Checker {
    std::ostringstream out;
    int checks = 0;
    int failures = 0;

    void expect(bool ok, int trial, const char* what) {
        ++checks;
        if (!ok) {
            ++failures;
            out << "FAIL trial " << trial << ": " << what << '\n';
        }
    }
};

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr double kDensities[] = {0.15, 0.25, 0.4, 0.6, 0.85};

bool is_subset(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<VertexId> set_union_of(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
    std::vector<VertexId> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<VertexId> set_intersection_of(const std::vector<VertexId>& a,
                                          const std::vector<VertexId>& b) {
    std::vector<VertexId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

void check_containments(Checker& c, int trial, const BoundaryProfile& b) {
    c.expect(is_subset(b.periphery, set_intersection_of(b.contour, b.eccentric)), trial,
             "periphery within contour ∩ eccentric");
    c.expect(is_subset(set_union_of(b.eccentric, b.contour), b.boundary), trial,
             "eccentric ∪ contour within boundary");
    c.expect(!b.boundary.empty() && !b.contour.empty() && !b.eccentric.empty() && !b.periphery.empty(),
             trial, "boundary-type sets nonempty");
}

void check_metric_block(Checker& c, int trial, const Digraph& g) {
    const int n = g.vertex_count();
    DistanceMatrix directed = all_pairs(g);
    Digraph t = g.transpose();

    c.expect(is_strong(g) == reference::is_strong(g), trial, "strongness agrees with reference");
    c.expect(is_strong(g) == directed.all_finite(), trial, "strong ⇔ all distances finite");

    bool duality = true;
    for (VertexId u = 0; u < n && duality; ++u) {
        std::vector<Distance> fwd = bfs_from(g, u);
        std::vector<Distance> bwd = bfs_from(t, u);
        for (VertexId v = 0; v < n; ++v) {
            if (fwd[static_cast<std::size_t>(v)] != directed.at(u, v)) duality = false;
            if (bwd[static_cast<std::size_t>(v)] != directed.at(v, u)) duality = false;
        }
    }
    c.expect(duality, trial, "transpose duality of BFS distances");

    bool edge_consistent = true;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v)
            if (u != v && (directed.at(u, v) == Distance::finite(1)) != g.has_edge(u, v))
                edge_consistent = false;
    c.expect(edge_consistent, trial, "distance 1 ⇔ edge present");

    bool triangle = true;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v)
            for (VertexId w = 0; w < n; ++w)
                if (directed.at(u, w) + directed.at(w, v) < directed.at(u, v)) triangle = false;
    c.expect(triangle, trial, "directed triangle inequality");

    DistanceMatrix s = sum_metric_matrix(g);
    c.expect(check_metric_axioms(s).holds, trial, "sum distance satisfies the metric axioms");

    DistanceMatrix m = max_metric_matrix(g);
    bool bounds = true;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = 0; v < n; ++v) {
            if (u != v && s.at(u, v) < Distance::finite(2)) bounds = false;
            if (m.at(u, v) > s.at(u, v)) bounds = false;
            if (s.at(u, v) > m.at(u, v) + m.at(u, v)) bounds = false;
        }
    }
    c.expect(bounds, trial, "2 ≤ sd, md ≤ sd ≤ 2·md bounds");

    EccentricityProfile p = eccentricity_profile(g, Metric::Sum);
    c.expect(!p.center.empty() && !p.periphery.empty(), trial, "center and periphery nonempty");
    if (p.radius == p.diameter)
        c.expect(static_cast<int>(p.center.size()) == n && static_cast<int>(p.periphery.size()) == n,
                 trial, "radius = diameter ⇒ center = periphery = V");
    else
        c.expect(set_intersection_of(p.center, p.periphery).empty(), trial,
                 "center and periphery disjoint when radius < diameter");
}

void check_boundary_block(Checker& c, int trial, const Digraph& g) {
    for (Metric metric : {Metric::Sum, Metric::Max}) {
        BoundaryProfile b = boundary_profile(g, metric);
        check_containments(c, trial, b);
        c.expect(b.boundary == reference::boundary_set(g, metric), trial,
                 "boundary set agrees with definition-literal reference");
        c.expect(b.eccentric == reference::eccentric_set(g, metric), trial,
                 "eccentric set agrees with definition-literal reference");
        c.expect(b.contour == reference::contour_set(g, metric), trial,
                 "contour set agrees with definition-literal reference");
        c.expect(b.periphery == reference::periphery_set(g, metric), trial,
                 "periphery agrees with definition-literal reference");
    }
}

void check_interval_block(Checker& c, int trial, const Digraph& g, std::uint64_t salt) {
    const int n = g.vertex_count();
    DistanceMatrix d = all_pairs(g);
    bool symmetric = true;
    bool characterized = true;
    bool matches_enumeration = true;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u; v < n; ++v) {
            GeodesicInterval fwd = geodesic_interval(g, u, v);
            if (fwd.vertices != geodesic_interval(g, v, u).vertices) symmetric = false;
            if (fwd.vertices != reference::geodesic_interval(g, u, v)) matches_enumeration = false;
            for (VertexId w = 0; w < n; ++w) {
                bool in_interval = std::binary_search(fwd.vertices.begin(), fwd.vertices.end(), w);
                bool characteristic = d.at(u, w) + d.at(w, v) == d.at(u, v) ||
                                      d.at(v, w) + d.at(w, u) == d.at(v, u);
                if (in_interval != characteristic) characterized = false;
            }
        }
    }
    c.expect(symmetric, trial, "interval symmetric in its endpoints");
    c.expect(characterized, trial, "interval membership characterization");
    c.expect(matches_enumeration, trial, "interval agrees with geodesic enumeration");

    std::vector<VertexId> everything(static_cast<std::size_t>(n));
    for (VertexId v = 0; v < n; ++v) everything[static_cast<std::size_t>(v)] = v;
    c.expect(geodetic_closure(g, everything) == everything, trial, "closure of V is V");
    c.expect(is_geodetic_set(g, everything), trial, "V is a geodetic set");

    VertexId lone = static_cast<VertexId>(mix(salt, 17) % static_cast<std::uint64_t>(n));
    c.expect(geodetic_closure(g, {lone}) == std::vector<VertexId>{lone}, trial,
             "closure of a singleton is the singleton");

    std::vector<VertexId> small, large;
    for (VertexId v = 0; v < n; ++v) {
        std::uint64_t roll = mix(salt, 100 + static_cast<std::uint64_t>(v));
        if (roll % 3 == 0) small.push_back(v);
        if (roll % 3 != 2) large.push_back(v);
    }
    std::vector<VertexId> nested = set_union_of(small, large);
    c.expect(is_subset(geodetic_closure(g, small), geodetic_closure(g, nested)), trial,
             "geodetic closure is monotone");
}

void check_directed_corona(Checker& c, int trial, const Digraph& core, const Digraph& h) {
    CoronaVerification v = verify_corona(core, h);
    c.expect(v.all_match(), trial, "directed corona closed forms match direct computation");
    c.expect(v.distance_mismatches.empty(), trial, "corrected same-copy formula never diverges");

    // Any clamped round-trip divergence must be the known overshoot: a
    // same-copy pair adjacent one way in H whose return needs > 2 arcs,
    // clamped value 4 against a direct value 3.
    DistanceMatrix dh = all_pairs(h);
    bool divergence_class = true;
    for (const auto& w : v.clamped_sum_divergences) {
        CoronaVertex x = v.layout.expand(w.x);
        CoronaVertex y = v.layout.expand(w.y);
        if (x.kind != CoronaVertex::Kind::Copy || y.kind != CoronaVertex::Kind::Copy ||
            x.core != y.core)
            divergence_class = false;
        else {
            Distance one_way = min(dh.at(x.member, y.member), dh.at(y.member, x.member));
            Distance other = max(dh.at(x.member, y.member), dh.at(y.member, x.member));
            if (one_way != Distance::finite(1) || other <= Distance::finite(2)) divergence_class = false;
            if (w.closed_form != Distance::finite(4) || w.direct != Distance::finite(3))
                divergence_class = false;
        }
    }
    c.expect(divergence_class, trial, "clamped-sum divergences confined to the known class");
}

void check_undirected_corona(Checker& c, int trial, const UndirectedGraph& core,
                             const UndirectedGraph& h) {
    CoronaVerification v = verify_corona(core, h);
    c.expect(v.all_match(), trial, "undirected corona closed forms match direct computation");
    c.expect(v.clamped_sum_divergences.empty(), trial, "no clamped-sum variant for graphs");
}

void check_sum_bridge(Checker& c, int trial, const UndirectedGraph& g) {
    // Embedding an undirected graph as a symmetric digraph doubles every
    // distance under the sum metric.
    DistanceMatrix hop = all_pairs(g);
    DistanceMatrix s = sum_metric_matrix(g.as_symmetric_digraph());
    bool doubled = true;
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (s.at(u, v) != hop.at(u, v) + hop.at(u, v)) doubled = false;
    c.expect(doubled, trial, "sum metric doubles hop distance on symmetric digraphs");
}

void check_roundtrip(Checker& c, int trial, const GraphDocument& doc) {
    c.expect(parse_edge_list(serialize(doc)) == doc, trial, "parse ∘ serialize identity");
}

}  // namespace

SelfCheckResult run_selfcheck(const SelfCheckOptions& options) {
    Checker c;
    const int span = std::max(1, options.max_n - 1);
    std::ostringstream header;
    header << "selfcheck family=" << family_name(options.family) << " max_n=" << options.max_n
           << " trials=" << options.trials << " seed=" << options.seed << '\n';

    for (int trial = 0; trial < options.trials; ++trial) {
        std::uint64_t salt = mix(options.seed, static_cast<std::uint64_t>(trial));
        int n = 2 + static_cast<int>(salt % static_cast<std::uint64_t>(span));
        double p = kDensities[trial % 5];
        int m = 2 + trial % 4;

        if (options.family == Family::Directed) {
            GraphDocument doc = generate_random_strong(n, p, salt);
            c.expect(generate_random_strong(n, p, salt) == doc, trial, "generator determinism");
            check_roundtrip(c, trial, doc);
            Digraph g = doc.to_digraph();
            check_metric_block(c, trial, g);
            check_boundary_block(c, trial, g);
            check_interval_block(c, trial, g, salt);

            Digraph core = generate_random_strong(std::min(n, 8), p, mix(salt, 1)).to_digraph();
            Digraph h = generate_random_digraph(m, p, mix(salt, 2)).to_digraph();
            check_directed_corona(c, trial, core, h);
        } else {
            GraphDocument doc = generate_random_connected(n, p, salt);
            check_roundtrip(c, trial, doc);
            UndirectedGraph g = doc.to_undirected();
            check_sum_bridge(c, trial, g);
            check_containments(c, trial, boundary_profile(g));

            UndirectedGraph core = generate_random_connected(std::min(n, 8), p, mix(salt, 1)).to_undirected();
            UndirectedGraph h = generate_random_graph(m, p, mix(salt, 2)).to_undirected();
            check_undirected_corona(c, trial, core, h);
        }
    }

    SelfCheckResult result;
    result.checks = c.checks;
    result.failures = c.failures;
    std::ostringstream summary;
    summary << "checks=" << c.checks << " failures=" << c.failures << " result="
            << (c.failures == 0 ? "ok" : "FAIL") << '\n';
    result.report = header.str() + c.out.str() + summary.str();
    return result;
}

}  // namespace sdg
