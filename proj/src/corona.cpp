// Copyright (c) sdgraph contributors.
// SPDX-License-Identifier: Apache-2.0

#include "sdg/corona.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdg {

std::string to_string(const CoronaVertex& v) {
    if (v.kind == CoronaVertex::Kind::Core) return "Core(" + std::to_string(v.core) + ")";
    return "Copy(" + std::to_string(v.core) + "," + std::to_string(v.member) + ")";
}

VertexId CoronaLayout::flatten(const CoronaVertex& v) const {
    if (v.core < 0 || v.core >= n_) throw VertexOutOfRangeError(v.core, n_);
    if (v.kind == CoronaVertex::Kind::Core) return v.core;
    if (v.member < 0 || v.member >= m_) throw VertexOutOfRangeError(v.member, m_);
    return n_ + v.core * m_ + v.member;
}

CoronaVertex CoronaLayout::expand(VertexId flat) const {
    if (flat < 0 || flat >= total()) throw VertexOutOfRangeError(flat, total());
    if (flat < n_) return CoronaVertex::core_vertex(flat);
    VertexId offset = flat - n_;
    return CoronaVertex::copy_vertex(offset / m_, offset % m_);
}

namespace {

void require_attachment(int m) {
    if (m < 2) throw HTooSmallError(m);
}

void require_nonempty_core(int n) {
    if (n < 1) throw std::invalid_argument("corona needs a nonempty core factor");
}

template <typename EdgeSink>
void emit_copy_edges(const CoronaLayout& layout, const std::vector<Edge>& h_edges, EdgeSink sink) {
    for (VertexId i = 0; i < layout.core_order(); ++i)
        for (const auto& [r, s] : h_edges)
            sink(layout.flatten(CoronaVertex::copy_vertex(i, r)),
                 layout.flatten(CoronaVertex::copy_vertex(i, s)));
}

}  // namespace

UndirectedCorona corona_undirected(const UndirectedGraph& g, const UndirectedGraph& h) {
    require_nonempty_core(g.vertex_count());
    require_attachment(h.vertex_count());
    CoronaLayout layout(g.vertex_count(), h.vertex_count());
    std::vector<Edge> edges = g.edges();
    emit_copy_edges(layout, h.edges(), [&](VertexId a, VertexId b) { edges.emplace_back(a, b); });
    for (VertexId i = 0; i < layout.core_order(); ++i)
        for (VertexId r = 0; r < layout.copy_order(); ++r)
            edges.emplace_back(i, layout.flatten(CoronaVertex::copy_vertex(i, r)));
    return UndirectedCorona{g, h, UndirectedGraph::build(layout.total(), edges), layout};
}

DirectedCorona corona_directed(const Digraph& d, const Digraph& h) {
    require_nonempty_core(d.vertex_count());
    if (!is_strong(d)) throw NotStronglyConnectedError();
    require_attachment(h.vertex_count());
    CoronaLayout layout(d.vertex_count(), h.vertex_count());
    std::vector<Edge> arcs = d.edges();
    emit_copy_edges(layout, h.edges(), [&](VertexId a, VertexId b) { arcs.emplace_back(a, b); });
    for (VertexId i = 0; i < layout.core_order(); ++i) {
        for (VertexId r = 0; r < layout.copy_order(); ++r) {
            VertexId copy = layout.flatten(CoronaVertex::copy_vertex(i, r));
            arcs.emplace_back(i, copy);
            arcs.emplace_back(copy, i);
        }
    }
    return DirectedCorona{d, h, Digraph::build(layout.total(), arcs), layout};
}

namespace {

constexpr Distance kOne = Distance::finite(1);
constexpr Distance kTwo = Distance::finite(2);
constexpr Distance kFour = Distance::finite(4);

// Shared four-case dispatch; `core_dist` is the metric on the core factor
// (hop distance for graphs, sum distance for digraphs) and `step` is the
// cost of crossing one attachment (1 undirected, 2 directed round trip).
template <typename SameCopyFn>
Distance closed_form(const DistanceMatrix& core_dist, Distance step, SameCopyFn same_copy,
                     const CoronaVertex& x, const CoronaVertex& y) {
    const bool xc = x.kind == CoronaVertex::Kind::Core;
    const bool yc = y.kind == CoronaVertex::Kind::Core;
    if (xc && yc) return core_dist.at(x.core, y.core);
    if (xc != yc) return core_dist.at(x.core, y.core) + step;
    if (x.core != y.core) return core_dist.at(x.core, y.core) + step + step;
    return same_copy(x.member, y.member);
}

Distance same_copy_undirected(const DistanceMatrix& h_dist, VertexId r, VertexId t) {
    return min(h_dist.at(r, t), kTwo);
}

Distance same_copy_directed(const DistanceMatrix& h_directed, VertexId r, VertexId s) {
    return min(h_directed.at(r, s), kTwo) + min(h_directed.at(s, r), kTwo);
}

}  // namespace

Distance clamped_round_trip_same_copy(const DistanceMatrix& h_directed, VertexId r, VertexId s) {
    return min(h_directed.at(r, s) + h_directed.at(s, r), kFour);
}

Distance corona_distance_undirected(const UndirectedGraph& g, const UndirectedGraph& h,
                                    const CoronaVertex& x, const CoronaVertex& y) {
    if (!is_connected(g)) throw NotConnectedError();
    CoronaLayout layout(g.vertex_count(), h.vertex_count());
    layout.flatten(x);
    layout.flatten(y);
    DistanceMatrix dg = all_pairs(g);
    DistanceMatrix dh = all_pairs(h);
    return closed_form(
        dg, kOne, [&](VertexId r, VertexId t) { return same_copy_undirected(dh, r, t); }, x, y);
}

Distance corona_distance_directed(const Digraph& d, const Digraph& h,
                                  const CoronaVertex& x, const CoronaVertex& y) {
    if (!is_strong(d)) throw NotStronglyConnectedError();
    CoronaLayout layout(d.vertex_count(), h.vertex_count());
    layout.flatten(x);
    layout.flatten(y);
    DistanceMatrix sd = sum_metric_matrix(d);
    DistanceMatrix dh = all_pairs(h);
    return closed_form(
        sd, kTwo, [&](VertexId r, VertexId s) { return same_copy_directed(dh, r, s); }, x, y);
}

namespace {

template <typename SameCopyFn>
DistanceMatrix closed_form_matrix(const CoronaLayout& layout, const DistanceMatrix& core_dist,
                                  Distance step, SameCopyFn same_copy) {
    DistanceMatrix out(layout.total());
    for (VertexId a = 0; a < layout.total(); ++a) {
        CoronaVertex x = layout.expand(a);
        for (VertexId b = 0; b < layout.total(); ++b)
            out.set(a, b, closed_form(core_dist, step, same_copy, x, layout.expand(b)));
    }
    return out;
}

}  // namespace

DistanceMatrix corona_distance_matrix_undirected(const UndirectedGraph& g, const UndirectedGraph& h) {
    if (!is_connected(g)) throw NotConnectedError();
    CoronaLayout layout(g.vertex_count(), h.vertex_count());
    DistanceMatrix dg = all_pairs(g);
    DistanceMatrix dh = all_pairs(h);
    return closed_form_matrix(layout, dg, kOne,
                              [&](VertexId r, VertexId t) { return same_copy_undirected(dh, r, t); });
}

DistanceMatrix corona_sum_matrix_directed(const Digraph& d, const Digraph& h) {
    if (!is_strong(d)) throw NotStronglyConnectedError();
    CoronaLayout layout(d.vertex_count(), h.vertex_count());
    DistanceMatrix sd = sum_metric_matrix(d);
    DistanceMatrix dh = all_pairs(h);
    return closed_form_matrix(layout, sd, kTwo,
                              [&](VertexId r, VertexId s) { return same_copy_directed(dh, r, s); });
}

namespace {

void require_core(int n) {
    if (n < 2) throw CoreTooSmallError(n);
}

int shifted_ecc(const EccentricityProfile& factor, const CoronaVertex& x, int core_shift,
                int copy_shift) {
    int base = factor.ecc[static_cast<std::size_t>(x.core)];
    return base + (x.kind == CoronaVertex::Kind::Core ? core_shift : copy_shift);
}

std::vector<VertexId> copies_over(const CoronaLayout& layout, const std::vector<VertexId>& cores) {
    std::vector<VertexId> out;
    out.reserve(cores.size() * static_cast<std::size_t>(layout.copy_order()));
    for (VertexId i : cores)
        for (VertexId r = 0; r < layout.copy_order(); ++r)
            out.push_back(layout.flatten(CoronaVertex::copy_vertex(i, r)));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexId> all_copies(const CoronaLayout& layout) {
    std::vector<VertexId> out;
    out.reserve(static_cast<std::size_t>(layout.core_order()) * layout.copy_order());
    for (VertexId v = layout.core_order(); v < layout.total(); ++v) out.push_back(v);
    return out;
}

CoronaClosedFormProfile profile_from_factor(const CoronaLayout& layout,
                                            const EccentricityProfile& factor,
                                            const std::vector<VertexId>& factor_eccentric,
                                            int core_shift, int copy_shift) {
    CoronaClosedFormProfile p;
    p.layout = layout;
    p.ecc.resize(static_cast<std::size_t>(layout.total()));
    for (VertexId v = 0; v < layout.total(); ++v)
        p.ecc[static_cast<std::size_t>(v)] = shifted_ecc(factor, layout.expand(v), core_shift, copy_shift);
    p.radius = factor.radius + core_shift;
    p.diameter = factor.diameter + copy_shift;
    p.center = factor.center;  // Core(i) flattens to i
    p.periphery = copies_over(layout, factor.periphery);
    p.eccentric = copies_over(layout, factor_eccentric);
    p.contour = all_copies(layout);
    p.boundary = all_copies(layout);
    return p;
}

}  // namespace

int corona_ecc_undirected(const UndirectedGraph& g, const UndirectedGraph& h, const CoronaVertex& x) {
    if (!is_connected(g)) throw NotConnectedError();
    require_core(g.vertex_count());
    CoronaLayout layout(g.vertex_count(), h.vertex_count());
    layout.flatten(x);
    return shifted_ecc(eccentricity_profile(g), x, 1, 2);
}

int corona_ecc_directed(const Digraph& d, const Digraph& h, const CoronaVertex& x) {
    if (!is_strong(d)) throw NotStronglyConnectedError();
    require_core(d.vertex_count());
    CoronaLayout layout(d.vertex_count(), h.vertex_count());
    layout.flatten(x);
    return shifted_ecc(eccentricity_profile(d, Metric::Sum), x, 2, 4);
}

CoronaClosedFormProfile corona_profile_undirected(const UndirectedGraph& g, const UndirectedGraph& h) {
    if (!is_connected(g)) throw NotConnectedError();
    require_core(g.vertex_count());
    require_attachment(h.vertex_count());
    CoronaLayout layout(g.vertex_count(), h.vertex_count());
    DistanceMatrix dg = all_pairs(g);
    EccentricityProfile factor = profile_from_matrix(dg);
    return profile_from_factor(layout, factor, detail::eccentric_set_on(dg, factor.ecc), 1, 2);
}

CoronaClosedFormProfile corona_profile_directed(const Digraph& d, const Digraph& h) {
    if (!is_strong(d)) throw NotStronglyConnectedError();
    require_core(d.vertex_count());
    require_attachment(h.vertex_count());
    CoronaLayout layout(d.vertex_count(), h.vertex_count());
    DistanceMatrix sd = sum_metric_matrix(d);
    EccentricityProfile factor = profile_from_matrix(sd);
    return profile_from_factor(layout, factor, detail::eccentric_set_on(sd, factor.ecc), 2, 4);
}

namespace {

bool push_check(CoronaVerification& rep, const std::string& name, bool match) {
    rep.quantities.push_back(CoronaQuantityCheck{name, match});
    return match;
}

void compare_distances(CoronaVerification& rep, const DistanceMatrix& closed,
                       const DistanceMatrix& direct) {
    bool match = true;
    for (VertexId x = 0; x < closed.size(); ++x) {
        for (VertexId y = x; y < closed.size(); ++y) {
            if (closed.at(x, y) != direct.at(x, y)) {
                match = false;
                rep.distance_mismatches.push_back(
                    CoronaDistanceWitness{x, y, closed.at(x, y), direct.at(x, y)});
            }
        }
    }
    push_check(rep, "distance", match);
}

void compare_profiles(CoronaVerification& rep, const CoronaClosedFormProfile& closed,
                      const EccentricityProfile& direct, const BoundaryProfile& direct_sets) {
    rep.profile_checked = true;
    push_check(rep, "eccentricity", closed.ecc == direct.ecc);
    push_check(rep, "radius", closed.radius == direct.radius);
    push_check(rep, "diameter", closed.diameter == direct.diameter);
    push_check(rep, "center", closed.center == direct.center);
    push_check(rep, "periphery", closed.periphery == direct.periphery);
    push_check(rep, "eccentric-set", closed.eccentric == direct_sets.eccentric);
    push_check(rep, "contour", closed.contour == direct_sets.contour);
    push_check(rep, "boundary", closed.boundary == direct_sets.boundary);
}

}  // namespace

bool CoronaVerification::all_match() const {
    return std::all_of(quantities.begin(), quantities.end(),
                       [](const CoronaQuantityCheck& q) { return q.match; });
}

CoronaVerification verify_corona(const Digraph& d, const Digraph& h) {
    DirectedCorona built = corona_directed(d, h);
    CoronaVerification rep;
    rep.directed = true;
    rep.layout = built.layout;

    push_check(rep, "product-strong", is_strong(built.product));

    DistanceMatrix direct_arcs = all_pairs(built.product);
    const int total = built.layout.total();
    DistanceMatrix direct(total);
    for (VertexId x = 0; x < total; ++x)
        for (VertexId y = 0; y < total; ++y) direct.set(x, y, sum_distance(direct_arcs, x, y));

    compare_distances(rep, corona_sum_matrix_directed(d, h), direct);

    // Divergence report for the clamped round-trip shortcut on same-copy pairs.
    DistanceMatrix dh = all_pairs(h);
    for (VertexId i = 0; i < built.layout.core_order(); ++i) {
        for (VertexId r = 0; r < built.layout.copy_order(); ++r) {
            for (VertexId s = r + 1; s < built.layout.copy_order(); ++s) {
                VertexId x = built.layout.flatten(CoronaVertex::copy_vertex(i, r));
                VertexId y = built.layout.flatten(CoronaVertex::copy_vertex(i, s));
                Distance clamped = clamped_round_trip_same_copy(dh, r, s);
                if (clamped != direct.at(x, y))
                    rep.clamped_sum_divergences.push_back(
                        CoronaDistanceWitness{x, y, clamped, direct.at(x, y)});
            }
        }
    }

    if (d.vertex_count() >= 2)
        compare_profiles(rep, corona_profile_directed(d, h),
                         eccentricity_profile(built.product, Metric::Sum),
                         boundary_profile(built.product, Metric::Sum));
    return rep;
}

CoronaVerification verify_corona(const UndirectedGraph& g, const UndirectedGraph& h) {
    if (!is_connected(g)) throw NotConnectedError();
    UndirectedCorona built = corona_undirected(g, h);
    CoronaVerification rep;
    rep.directed = false;
    rep.layout = built.layout;

    push_check(rep, "product-connected", is_connected(built.product));
    compare_distances(rep, corona_distance_matrix_undirected(g, h), all_pairs(built.product));

    if (g.vertex_count() >= 2)
        compare_profiles(rep, corona_profile_undirected(g, h), eccentricity_profile(built.product),
                         boundary_profile(built.product));
    return rep;
}

}  // namespace sdg
