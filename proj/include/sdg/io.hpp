// Copyright (c) sdgraph contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sdg/boundary.hpp"
#include "sdg/corona.hpp"
#include "sdg/digraph.hpp"
#include "sdg/metric.hpp"

namespace sdg {

enum class Family { Directed, Undirected };

std::string family_name(Family f);

/// Parsed edge-list document. Labels are presentation-only aliases and
/// are never written to the wire format.
struct GraphDocument {
    Family family = Family::Directed;
    int n = 0;
    std::vector<Edge> edges;
    std::vector<std::string> labels;  // empty, or one label per vertex

    Digraph to_digraph() const;             // family must be Directed
    UndirectedGraph to_undirected() const;  // family must be Undirected

    friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

/// Grammar: first non-blank line `digraph <n>` or `graph <n>`; each
/// following non-blank line `<u> <v>` with 0-based integers; `#` starts
/// a comment to end of line. Endpoints are range-checked and loops
/// rejected while parsing.
GraphDocument parse_edge_list(std::string_view text);

/// Canonical form: header line, then edges sorted lexicographically and
/// deduplicated (undirected edges normalized to (min, max)).
/// parse_edge_list ∘ serialize is the identity on canonical documents.
std::string serialize(const GraphDocument& doc);

/// 64-bit FNV-1a of the canonical serialization, as 16 hex digits.
std::string document_digest(const GraphDocument& doc);

GraphDocument document_from(const Digraph& g);
GraphDocument document_from(const UndirectedGraph& g);

// --- generators -----------------------------------------------------------

/// Directed n-cycle 0→1→…→n-1→0.
GraphDocument generate_dicycle(int n);

/// Path 0—1—…—n-1 with both arcs per edge.
GraphDocument generate_bidirected_path(int n);

/// Arcs drawn independently with probability p, redrawn (bounded number
/// of times) until the digraph is strong; deterministic per seed.
GraphDocument generate_random_strong(int n, double p, std::uint64_t seed);

/// One arc per unordered pair, direction chosen uniformly.
GraphDocument generate_tournament(int n, std::uint64_t seed);

/// Arbitrary digraph, arcs iid with probability p (no strongness retry).
GraphDocument generate_random_digraph(int n, double p, std::uint64_t seed);

/// Undirected G(n, p), redrawn until connected; deterministic per seed.
GraphDocument generate_random_connected(int n, double p, std::uint64_t seed);

/// Arbitrary undirected G(n, p).
GraphDocument generate_random_graph(int n, double p, std::uint64_t seed);

// --- reports ---------------------------------------------------------------

/// Deterministic analysis summary; all vertex sets sorted ascending.
struct AnalysisReport {
    std::string digest;
    Family family = Family::Directed;
    int n = 0;
    std::string metric;  // "sum" | "max" for digraphs, "hop" for graphs
    std::vector<int> ecc;
    int radius = 0;
    int diameter = 0;
    std::vector<VertexId> center;
    std::vector<VertexId> periphery;
    std::vector<VertexId> boundary;
    std::vector<VertexId> contour;
    std::vector<VertexId> eccentric;
};

AnalysisReport analyze(const GraphDocument& doc, Metric metric = Metric::Sum);

std::string render_text(const AnalysisReport& r);
std::string render_json(const AnalysisReport& r);  // schema 1, sorted keys

std::string render_text(const CoronaVerification& v);
std::string render_json(const CoronaVerification& v);

}  // namespace sdg
