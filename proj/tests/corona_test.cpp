// Copyright (c) sdgraph contributors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "sdg/corona.hpp"
#include "sdg/io.hpp"

using namespace sdg;

namespace {

Digraph isolated_digraph(int n) { return Digraph::build(n, {}); }

UndirectedGraph isolated_graph(int n) { return UndirectedGraph::build(n, {}); }

Digraph directed_cycle(int n) { return fixtures::dicycle(n); }

std::vector<VertexId> range_set(VertexId lo, VertexId hi) {  // [lo, hi)
    std::vector<VertexId> out;
    for (VertexId v = lo; v < hi; ++v) out.push_back(v);
    return out;
}

}  // namespace

TEST_CASE("layout bijection is the fixed core-then-copies order") {
    CoronaLayout layout(3, 2);
    CHECK(layout.total() == 9);
    CHECK(layout.flatten(CoronaVertex::core_vertex(2)) == 2);
    CHECK(layout.flatten(CoronaVertex::copy_vertex(0, 0)) == 3);
    CHECK(layout.flatten(CoronaVertex::copy_vertex(2, 1)) == 8);
    for (VertexId flat = 0; flat < layout.total(); ++flat)
        CHECK(layout.flatten(layout.expand(flat)) == flat);
    CHECK_THROWS_AS(layout.flatten(CoronaVertex::copy_vertex(3, 0)), VertexOutOfRangeError);
    CHECK_THROWS_AS(layout.flatten(CoronaVertex::copy_vertex(0, 2)), VertexOutOfRangeError);
    CHECK_THROWS_AS(layout.expand(9), VertexOutOfRangeError);
    CHECK(to_string(layout.expand(0)) == "Core(0)");
    CHECK(to_string(layout.expand(4)) == "Copy(0,1)");
}

TEST_CASE("undirected corona edge and degree counts") {
    UndirectedCorona small = corona_undirected(fixtures::complete_graph(2), isolated_graph(2));
    CHECK(small.product.vertex_count() == 6);
    CHECK(small.product.edge_count() == 5);  // 1 core edge + 4 attachments

    UndirectedCorona p3k2 = corona_undirected(fixtures::path_graph(3), fixtures::complete_graph(2));
    CHECK(p3k2.product.vertex_count() == 9);
    CHECK(p3k2.product.edge_count() == 11);  // 2 + 3*1 + 3*2

    for (VertexId i = 0; i < 3; ++i)
        for (VertexId r = 0; r < 2; ++r) {
            VertexId flat = p3k2.layout.flatten(CoronaVertex::copy_vertex(i, r));
            std::size_t h_degree = p3k2.attachment.neighbors(r).size();
            CHECK(p3k2.product.neighbors(flat).size() == h_degree + 1);
        }

    CHECK_THROWS_AS(corona_undirected(fixtures::path_graph(3), isolated_graph(1)), HTooSmallError);
}

TEST_CASE("directed corona arc counts, attachments, and strongness") {
    DirectedCorona pair = corona_directed(fixtures::bidirected_pair(), isolated_digraph(2));
    CHECK(pair.product.vertex_count() == 6);
    CHECK(pair.product.edge_count() == 10);  // 2 core arcs + 2*2*2 attachment arcs

    DirectedCorona tri = corona_directed(directed_cycle(3), Digraph::build(2, {{0, 1}}));
    CHECK(is_strong(tri.product));

    for (VertexId i = 0; i < 3; ++i)
        for (VertexId r = 0; r < 2; ++r) {
            VertexId flat = tri.layout.flatten(CoronaVertex::copy_vertex(i, r));
            CHECK(tri.product.has_edge(i, flat));
            CHECK(tri.product.has_edge(flat, i));
        }

    CHECK_THROWS_AS(corona_directed(Digraph::build(2, {{0, 1}}), isolated_digraph(2)),
                    NotStronglyConnectedError);
    CHECK_THROWS_AS(corona_directed(directed_cycle(3), isolated_digraph(1)), HTooSmallError);
}

TEST_CASE("the constructor tolerates a disconnected core; the closed forms do not") {
    UndirectedGraph split = UndirectedGraph::build(4, {{0, 1}, {2, 3}});
    UndirectedCorona built = corona_undirected(split, fixtures::complete_graph(2));
    CHECK(built.product.vertex_count() == 12);
    CHECK_FALSE(is_connected(built.product));
    CHECK_THROWS_AS(corona_distance_undirected(split, fixtures::complete_graph(2),
                                               CoronaVertex::core_vertex(0),
                                               CoronaVertex::core_vertex(2)),
                    NotConnectedError);
    CHECK_THROWS_AS(corona_profile_undirected(split, fixtures::complete_graph(2)), NotConnectedError);
}

TEST_CASE("closed-form undirected distances") {
    UndirectedGraph g = fixtures::path_graph(3);
    UndirectedGraph h = fixtures::complete_graph(2);
    CHECK(corona_distance_undirected(g, h, CoronaVertex::core_vertex(0),
                                     CoronaVertex::copy_vertex(2, 1)) == Distance::finite(3));
    CHECK(corona_distance_undirected(g, isolated_graph(2), CoronaVertex::copy_vertex(1, 0),
                                     CoronaVertex::copy_vertex(1, 1)) == Distance::finite(2));
    CHECK(corona_distance_undirected(g, h, CoronaVertex::copy_vertex(1, 1),
                                     CoronaVertex::copy_vertex(1, 1)) == Distance::finite(0));

    // Full agreement with BFS on the built product.
    UndirectedCorona built = corona_undirected(g, h);
    DistanceMatrix direct = all_pairs(built.product);
    CHECK(corona_distance_matrix_undirected(g, h) == direct);
}

TEST_CASE("closed-form directed sum distances, including the same-copy correction") {
    Digraph d = fixtures::bidirected_pair();
    Digraph h4 = directed_cycle(4);

    CHECK(corona_distance_directed(d, h4, CoronaVertex::core_vertex(0),
                                   CoronaVertex::copy_vertex(0, 2)) == Distance::finite(2));
    CHECK(corona_distance_directed(d, fixtures::bidirected_pair(), CoronaVertex::copy_vertex(0, 0),
                                   CoronaVertex::copy_vertex(0, 1)) == Distance::finite(2));

    // Inside a directed 4-cycle copy, (v0, v1) is one arc forward and
    // three back; the detour through the core caps the return at two.
    CHECK(corona_distance_directed(d, h4, CoronaVertex::copy_vertex(0, 0),
                                   CoronaVertex::copy_vertex(0, 1)) == Distance::finite(3));
    DistanceMatrix dh = all_pairs(h4);
    CHECK(clamped_round_trip_same_copy(dh, 0, 1) == Distance::finite(4));

    DirectedCorona built = corona_directed(d, h4);
    DistanceMatrix arcs = all_pairs(built.product);
    VertexId x = built.layout.flatten(CoronaVertex::copy_vertex(0, 0));
    VertexId y = built.layout.flatten(CoronaVertex::copy_vertex(0, 1));
    CHECK(sum_distance(arcs, x, y) == Distance::finite(3));

    CHECK(corona_sum_matrix_directed(d, h4).at(x, y) == Distance::finite(3));
}

TEST_CASE("closed-form directed distances handle a non-strong attachment") {
    Digraph d = directed_cycle(3);
    Digraph one_way = Digraph::build(2, {{0, 1}});
    DirectedCorona built = corona_directed(d, one_way);
    DistanceMatrix arcs = all_pairs(built.product);
    DistanceMatrix closed = corona_sum_matrix_directed(d, one_way);
    for (VertexId a = 0; a < built.layout.total(); ++a)
        for (VertexId b = 0; b < built.layout.total(); ++b)
            CHECK(closed.at(a, b) == sum_distance(arcs, a, b));
    // One arc forward, return through the core: 1 + 2.
    VertexId r = built.layout.flatten(CoronaVertex::copy_vertex(0, 0));
    VertexId s = built.layout.flatten(CoronaVertex::copy_vertex(0, 1));
    CHECK(closed.at(r, s) == Distance::finite(3));
}

TEST_CASE("corona eccentricity shifts") {
    UndirectedGraph g = fixtures::path_graph(3);
    UndirectedGraph h = fixtures::complete_graph(2);
    CHECK(corona_ecc_undirected(g, h, CoronaVertex::core_vertex(1)) == 2);
    CHECK(corona_ecc_undirected(g, h, CoronaVertex::copy_vertex(0, 0)) == 4);

    UndirectedCorona built = corona_undirected(g, h);
    EccentricityProfile direct = eccentricity_profile(built.product);
    for (VertexId flat = 0; flat < built.layout.total(); ++flat)
        CHECK(corona_ecc_undirected(g, h, built.layout.expand(flat)) == direct.ecc[flat]);

    Digraph d = fixtures::strong6();
    Digraph hp = fixtures::bidirected_pair();
    DirectedCorona dbuilt = corona_directed(d, hp);
    EccentricityProfile ddirect = eccentricity_profile(dbuilt.product, Metric::Sum);
    for (VertexId flat = 0; flat < dbuilt.layout.total(); ++flat)
        CHECK(corona_ecc_directed(d, hp, dbuilt.layout.expand(flat)) == ddirect.ecc[flat]);
}

TEST_CASE("closed-form profile formulas refuse a single-vertex core") {
    UndirectedGraph k1;
    k1 = UndirectedGraph::build(1, {});
    UndirectedGraph h = fixtures::complete_graph(2);
    CHECK_THROWS_AS(corona_ecc_undirected(k1, h, CoronaVertex::copy_vertex(0, 0)), CoreTooSmallError);
    CHECK_THROWS_AS(corona_profile_undirected(k1, h), CoreTooSmallError);

    Digraph d1 = Digraph::build(1, {});
    Digraph hp = fixtures::bidirected_pair();
    CHECK_THROWS_AS(corona_ecc_directed(d1, hp, CoronaVertex::core_vertex(0)), CoreTooSmallError);
    CHECK_THROWS_AS(corona_profile_directed(d1, hp), CoreTooSmallError);

    // The product itself stays analyzable, and shows why the shift
    // formula fails there: every copy eccentricity collapses to 2.
    DirectedCorona built = corona_directed(d1, hp);
    EccentricityProfile direct = eccentricity_profile(built.product, Metric::Sum);
    CHECK(direct.ecc == std::vector<int>{2, 2, 2});
}

TEST_CASE("closed-form undirected profile of a path core") {
    CoronaClosedFormProfile p = corona_profile_undirected(fixtures::path_graph(3),
                                                          fixtures::complete_graph(2));
    CHECK(p.radius == 2);
    CHECK(p.diameter == 4);
    CHECK(p.center == std::vector<VertexId>{1});
    CHECK(p.periphery == std::vector<VertexId>{3, 4, 7, 8});
    CHECK(p.eccentric == std::vector<VertexId>{3, 4, 7, 8});
    CHECK(p.contour == range_set(3, 9));
    CHECK(p.boundary == range_set(3, 9));
    CHECK(p.ecc == std::vector<int>{3, 2, 3, 4, 4, 3, 3, 4, 4});
}

TEST_CASE("every core vertex of a complete core is eccentric, so all copies are") {
    CoronaClosedFormProfile p = corona_profile_undirected(fixtures::complete_graph(2),
                                                          fixtures::complete_graph(2));
    CHECK(p.eccentric == range_set(2, 6));
}

TEST_CASE("closed-form directed profile of a vertex-transitive core") {
    CoronaClosedFormProfile p = corona_profile_directed(directed_cycle(3), fixtures::bidirected_pair());
    CHECK(p.radius == 5);
    CHECK(p.diameter == 7);
    CHECK(p.center == std::vector<VertexId>{0, 1, 2});
    CHECK(p.periphery == range_set(3, 9));
    CHECK(p.eccentric == range_set(3, 9));
    CHECK(p.contour == range_set(3, 9));
    CHECK(p.boundary == range_set(3, 9));
}

TEST_CASE("closed-form directed profile of the pinned 6-vertex core") {
    CoronaClosedFormProfile p = corona_profile_directed(fixtures::strong6(), fixtures::bidirected_pair());
    CHECK(p.radius == 6);
    CHECK(p.diameter == 10);
    CHECK(p.center == std::vector<VertexId>{2, 4, 5});
    CHECK(p.periphery == std::vector<VertexId>{6, 7, 12, 13});  // copies over cores 0 and 3
}

TEST_CASE("verification on pinned instances") {
    CoronaVerification clean = verify_corona(directed_cycle(3), fixtures::bidirected_pair());
    CHECK(clean.all_match());
    CHECK(clean.profile_checked);
    CHECK(clean.distance_mismatches.empty());
    CHECK(clean.clamped_sum_divergences.empty());

    CoronaVerification diverging = verify_corona(fixtures::bidirected_pair(), directed_cycle(4));
    CHECK(diverging.all_match());
    CHECK(diverging.distance_mismatches.empty());
    CHECK(diverging.clamped_sum_divergences.size() == 8);  // 4 adjacent pairs in each of 2 copies
    for (const auto& w : diverging.clamped_sum_divergences) {
        CoronaVertex x = diverging.layout.expand(w.x);
        CoronaVertex y = diverging.layout.expand(w.y);
        CHECK(x.kind == CoronaVertex::Kind::Copy);
        CHECK(y.kind == CoronaVertex::Kind::Copy);
        CHECK(x.core == y.core);
        CHECK(w.closed_form == Distance::finite(4));
        CHECK(w.direct == Distance::finite(3));
    }

    CoronaVerification undirected = verify_corona(fixtures::path_graph(3), fixtures::complete_graph(2));
    CHECK(undirected.all_match());
    CHECK(undirected.clamped_sum_divergences.empty());
}

TEST_CASE("verification on a single-vertex core checks distances but skips the profile") {
    CoronaVerification v = verify_corona(Digraph::build(1, {}), fixtures::dicycle(4));
    CHECK_FALSE(v.profile_checked);
    CHECK(v.all_match());
    CHECK(render_text(v).find("profile: skipped") != std::string::npos);
}

TEST_CASE("closed forms match direct computation on random instances") {
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + trial % 7;
        int m = 2 + trial % 4;
        double p = 0.25 + 0.15 * (trial % 4);
        Digraph core = generate_random_strong(n, p, 21000 + trial).to_digraph();
        Digraph h = generate_random_digraph(m, p, 22000 + trial).to_digraph();
        CHECK(verify_corona(core, h).all_match());

        UndirectedGraph gcore = generate_random_connected(n, p, 23000 + trial).to_undirected();
        UndirectedGraph gh = generate_random_graph(m, p, 24000 + trial).to_undirected();
        CHECK(verify_corona(gcore, gh).all_match());
    }
}
