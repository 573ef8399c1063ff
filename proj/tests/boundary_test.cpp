// Copyright (c) sdgraph contributors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "fixtures.hpp"
#include "sdg/boundary.hpp"
#include "sdg/io.hpp"
#include "sdg/reference.hpp"

using namespace sdg;

namespace {

std::vector<VertexId> every_vertex(int n) {
    std::vector<VertexId> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
    return all;
}

bool subset(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

TEST_CASE("pinned boundary-type sets of the 6-vertex fixture under sum") {
    Digraph g = fixtures::strong6();
    CHECK(boundary_set(g) == std::vector<VertexId>{0, 1, 2, 3, 4, 5});
    CHECK(eccentric_set(g) == std::vector<VertexId>{0, 1, 2, 3, 4, 5});
    CHECK(contour_set(g) == std::vector<VertexId>{0, 3});
    CHECK(periphery_set(g) == std::vector<VertexId>{0, 3});

    // The pinned values come from the definition-literal reference path.
    CHECK(boundary_set(g) == reference::boundary_set(g, Metric::Sum));
    CHECK(eccentric_set(g) == reference::eccentric_set(g, Metric::Sum));
    CHECK(contour_set(g) == reference::contour_set(g, Metric::Sum));
    CHECK(periphery_set(g) == reference::periphery_set(g, Metric::Sum));
}

TEST_CASE("pinned boundary-type sets of the 6-vertex fixture under max") {
    Digraph g = fixtures::strong6();
    CHECK(boundary_set(g, Metric::Max) == std::vector<VertexId>{0, 2, 3, 4, 5});
    CHECK(eccentric_set(g, Metric::Max) == std::vector<VertexId>{0, 2, 3, 5});
    CHECK(contour_set(g, Metric::Max) == std::vector<VertexId>{0, 3});
    CHECK(boundary_set(g, Metric::Max) == reference::boundary_set(g, Metric::Max));
}

TEST_CASE("pinned boundary-type sets of the 5-vertex fixture under sum") {
    Digraph g = fixtures::strong5();
    CHECK(boundary_set(g) == std::vector<VertexId>{0, 1, 3});
    CHECK(eccentric_set(g) == std::vector<VertexId>{0, 1, 3});
    CHECK(contour_set(g) == std::vector<VertexId>{0, 3});
    CHECK(periphery_set(g) == std::vector<VertexId>{0, 3});

    // Vertex 1 (ecc 5) has neighbor 0 with ecc 7, so it cannot be a
    // contour vertex even though it is eccentric.
    auto ct = contour_set(g);
    CHECK_FALSE(std::binary_search(ct.begin(), ct.end(), 1));
}

TEST_CASE("boundary-type sets of tiny and vertex-transitive digraphs") {
    BoundaryProfile pair = boundary_profile(fixtures::bidirected_pair());
    CHECK(pair.boundary == std::vector<VertexId>{0, 1});
    CHECK(pair.contour == std::vector<VertexId>{0, 1});
    CHECK(pair.eccentric == std::vector<VertexId>{0, 1});
    CHECK(pair.periphery == std::vector<VertexId>{0, 1});

    for (int n : {3, 5, 8}) {
        BoundaryProfile cyc = boundary_profile(fixtures::dicycle(n));
        CHECK(cyc.boundary == every_vertex(n));
        CHECK(cyc.contour == every_vertex(n));
        CHECK(cyc.eccentric == every_vertex(n));
        CHECK(cyc.periphery == every_vertex(n));
    }

    BoundaryProfile lone = boundary_profile(Digraph::build(1, {}));
    CHECK(lone.boundary == std::vector<VertexId>{0});
    CHECK(lone.contour == std::vector<VertexId>{0});
    CHECK(lone.eccentric == std::vector<VertexId>{0});
    CHECK(lone.periphery == std::vector<VertexId>{0});
}

TEST_CASE("boundary ops reject non-strong digraphs") {
    Digraph one_way = Digraph::build(2, {{0, 1}});
    CHECK_THROWS_AS(boundary_set(one_way), NotStronglyConnectedError);
    CHECK_THROWS_AS(boundary_profile(one_way), NotStronglyConnectedError);
    CHECK_THROWS_AS(geodesic_interval(one_way, 0, 1), NotStronglyConnectedError);
    CHECK_THROWS_AS(geodetic_closure(one_way, {0}), NotStronglyConnectedError);
}

TEST_CASE("geodesic interval of the pinned fixture") {
    Digraph g = fixtures::strong6();
    GeodesicInterval i = geodesic_interval(g, 0, 3);
    CHECK(i.vertices == std::vector<VertexId>{0, 1, 3, 4, 5});
    CHECK(geodesic_interval(g, 3, 0).vertices == i.vertices);
    CHECK(geodesic_interval(g, 2, 2).vertices == std::vector<VertexId>{2});
    CHECK_THROWS_AS(geodesic_interval(g, 0, 6), VertexOutOfRangeError);
}

TEST_CASE("both directed geodesics of a cycle cover the whole cycle") {
    CHECK(geodesic_interval(fixtures::dicycle(4), 0, 2).vertices == every_vertex(4));
}

TEST_CASE("geodetic closure and geodetic sets") {
    Digraph g = fixtures::strong6();
    CHECK(geodetic_closure(g, {0, 3}) == std::vector<VertexId>{0, 1, 3, 4, 5});
    CHECK_FALSE(is_geodetic_set(g, {0, 3}));  // vertex 2 is missed
    CHECK(is_geodetic_set(g, every_vertex(6)));
    CHECK(geodetic_closure(g, {4}) == std::vector<VertexId>{4});
    CHECK(geodetic_closure(g, {}) == std::vector<VertexId>{});
    CHECK_FALSE(is_geodetic_set(fixtures::dicycle(3), {1}));
    CHECK_THROWS_AS(geodetic_closure(g, {7}), VertexOutOfRangeError);
}

TEST_CASE("containments and reference agreement on random strong digraphs") {
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + trial % 11;
        double p = 0.2 + 0.15 * (trial % 5);
        Digraph g = generate_random_strong(n, p, 12000 + trial).to_digraph();
        for (Metric metric : {Metric::Sum, Metric::Max}) {
            BoundaryProfile b = boundary_profile(g, metric);

            std::vector<VertexId> ct_and_ecc;
            std::set_intersection(b.contour.begin(), b.contour.end(), b.eccentric.begin(),
                                  b.eccentric.end(), std::back_inserter(ct_and_ecc));
            CHECK(subset(b.periphery, ct_and_ecc));

            std::vector<VertexId> ecc_or_ct;
            std::set_union(b.contour.begin(), b.contour.end(), b.eccentric.begin(),
                           b.eccentric.end(), std::back_inserter(ecc_or_ct));
            CHECK(subset(ecc_or_ct, b.boundary));

            CHECK(b.boundary == reference::boundary_set(g, metric));
            CHECK(b.eccentric == reference::eccentric_set(g, metric));
            CHECK(b.contour == reference::contour_set(g, metric));
            CHECK(b.periphery == reference::periphery_set(g, metric));
        }
    }
}

TEST_CASE("interval membership characterization and closure monotonicity") {
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + trial % 8;
        Digraph g = generate_random_strong(n, 0.35, 15000 + trial).to_digraph();
        DistanceMatrix d = all_pairs(g);
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u; v < n; ++v) {
                GeodesicInterval i = geodesic_interval(g, u, v);
                CHECK(i.vertices == geodesic_interval(g, v, u).vertices);
                CHECK(i.vertices == reference::geodesic_interval(g, u, v));
                for (VertexId w = 0; w < n; ++w) {
                    bool member = std::binary_search(i.vertices.begin(), i.vertices.end(), w);
                    bool on_some =
                        d.at(u, w) + d.at(w, v) == d.at(u, v) || d.at(v, w) + d.at(w, u) == d.at(v, u);
                    CHECK(member == on_some);
                }
            }

        std::vector<VertexId> small, large;
        for (VertexId v = 0; v < n; ++v) {
            if (v % 3 == 0) small.push_back(v);
            if (v % 3 != 2) large.push_back(v);
        }
        CHECK(subset(geodetic_closure(g, small), geodetic_closure(g, large)));
        CHECK(subset(small, geodetic_closure(g, small)));
    }
}

TEST_CASE("undirected boundary profile under hop distance") {
    BoundaryProfile p3 = boundary_profile(fixtures::path_graph(3));
    CHECK(p3.boundary == std::vector<VertexId>{0, 2});
    CHECK(p3.contour == std::vector<VertexId>{0, 2});
    CHECK(p3.eccentric == std::vector<VertexId>{0, 2});
    CHECK(p3.periphery == std::vector<VertexId>{0, 2});

    BoundaryProfile k3 = boundary_profile(fixtures::complete_graph(3));
    CHECK(k3.boundary == std::vector<VertexId>{0, 1, 2});
    CHECK(k3.periphery == std::vector<VertexId>{0, 1, 2});

    CHECK_THROWS_AS(boundary_profile(UndirectedGraph::build(3, {{0, 1}})), NotConnectedError);
}
