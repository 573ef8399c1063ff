// Copyright (c) sdgraph contributors.
// SPDX-License-Identifier: Apache-2.0
//
// sdgraph — distance structure, boundary-type sets, and corona products
// of strongly connected digraphs (and simple graphs).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "sdg/io.hpp"
#include "sdg/selfcheck.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDiscrepancy = 1;
constexpr int kExitInputError = 2;

sdg::GraphDocument load_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw sdg::GraphError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return sdg::parse_edge_list(buffer.str());
}

sdg::Metric parse_metric(const std::string& name) {
    if (name == "sum") return sdg::Metric::Sum;
    if (name == "max") return sdg::Metric::Max;
    throw sdg::GraphError("unknown metric '" + name + "' (expected sum or max)");
}

int run_analyze(const std::string& path, const std::string& metric, bool json) {
    sdg::GraphDocument doc = load_document(path);
    sdg::AnalysisReport report = sdg::analyze(doc, parse_metric(metric));
    std::cout << (json ? sdg::render_json(report) : sdg::render_text(report));
    return kExitOk;
}

int run_interval(const std::string& path, int u, int v) {
    sdg::GraphDocument doc = load_document(path);
    sdg::Digraph g = doc.family == sdg::Family::Directed ? doc.to_digraph()
                                                         : doc.to_undirected().as_symmetric_digraph();
    sdg::GeodesicInterval interval = sdg::geodesic_interval(g, u, v);
    std::cout << "I(" << u << ", " << v << ") = {";
    for (std::size_t i = 0; i < interval.vertices.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << interval.vertices[i];
    }
    std::cout << "}\n";
    return kExitOk;
}

int run_corona(const std::string& core_path, const std::string& h_path, bool check, bool json) {
    sdg::GraphDocument core_doc = load_document(core_path);
    sdg::GraphDocument h_doc = load_document(h_path);
    if (core_doc.family != h_doc.family)
        throw sdg::GraphError("corona factors must share a family (digraph/graph)");

    if (!check) {
        if (core_doc.family == sdg::Family::Directed) {
            sdg::DirectedCorona built = sdg::corona_directed(core_doc.to_digraph(), h_doc.to_digraph());
            std::cout << sdg::serialize(sdg::document_from(built.product));
        } else {
            sdg::UndirectedCorona built =
                sdg::corona_undirected(core_doc.to_undirected(), h_doc.to_undirected());
            std::cout << sdg::serialize(sdg::document_from(built.product));
        }
        return kExitOk;
    }

    sdg::CoronaVerification verification =
        core_doc.family == sdg::Family::Directed
            ? sdg::verify_corona(core_doc.to_digraph(), h_doc.to_digraph())
            : sdg::verify_corona(core_doc.to_undirected(), h_doc.to_undirected());
    std::cout << (json ? sdg::render_json(verification) : sdg::render_text(verification));
    return verification.all_match() ? kExitOk : kExitDiscrepancy;
}

int run_verify(const std::string& family, int max_n, int trials, std::uint64_t seed) {
    sdg::SelfCheckOptions options;
    if (family == "directed")
        options.family = sdg::Family::Directed;
    else if (family == "undirected")
        options.family = sdg::Family::Undirected;
    else
        throw sdg::GraphError("unknown family '" + family + "' (expected directed or undirected)");
    options.max_n = max_n;
    options.trials = trials;
    options.seed = seed;
    sdg::SelfCheckResult result = sdg::run_selfcheck(options);
    std::cout << result.report;
    return result.ok() ? kExitOk : kExitDiscrepancy;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sum-metric distance structure, boundary-type vertex sets, and corona products"};
    app.require_subcommand(1);

    std::string file;
    std::string metric = "sum";
    bool json = false;
    auto* analyze = app.add_subcommand("analyze", "Eccentricity and boundary profile of a graph file");
    analyze->add_option("file", file, "edge-list file")->required();
    analyze->add_option("--metric", metric, "sum or max (digraphs only)");
    analyze->add_flag("--json", json, "emit JSON");

    std::string interval_file;
    int interval_u = 0;
    int interval_v = 0;
    auto* interval = app.add_subcommand("interval", "Geodesic interval between two vertices");
    interval->add_option("file", interval_file, "edge-list file")->required();
    interval->add_option("u", interval_u, "first endpoint")->required();
    interval->add_option("v", interval_v, "second endpoint")->required();

    std::string core_file;
    std::string h_file;
    bool check = false;
    bool corona_json = false;
    auto* corona = app.add_subcommand("corona", "Corona product of two graph files");
    corona->add_option("core", core_file, "core factor file")->required();
    corona->add_option("attachment", h_file, "attachment factor file")->required();
    corona->add_flag("--check", check, "verify closed forms against the built product");
    corona->add_flag("--json", corona_json, "emit JSON");

    std::string family = "directed";
    int max_n = 8;
    int trials = 50;
    std::uint64_t seed = 0;
    auto* verify = app.add_subcommand("verify", "Randomized invariant suite");
    verify->add_option("--family", family, "directed or undirected");
    verify->add_option("--n", max_n, "largest instance size")->check(CLI::Range(2, 64));
    verify->add_option("--trials", trials, "number of random instances")->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (app.got_subcommand(analyze)) return run_analyze(file, metric, json);
        if (app.got_subcommand(interval)) return run_interval(interval_file, interval_u, interval_v);
        if (app.got_subcommand(corona)) return run_corona(core_file, h_file, check, corona_json);
        if (app.got_subcommand(verify)) return run_verify(family, max_n, trials, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
