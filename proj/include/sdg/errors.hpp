// Copyright (c) sdgraph contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace sdg {

using VertexId = int;

/// Base class for every error raised by the library.
class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A supplied edge (u, u) — loops are not representable.
class LoopEdgeError : public GraphError {
public:
    explicit LoopEdgeError(VertexId v)
        : GraphError("loop edge (" + std::to_string(v) + ", " + std::to_string(v) + ") is not allowed"),
          vertex(v) {}
    LoopEdgeError(VertexId v, int line)
        : GraphError("line " + std::to_string(line) + ": loop edge (" + std::to_string(v) + ", " +
                     std::to_string(v) + ") is not allowed"),
          vertex(v) {}
    VertexId vertex;
};

class VertexOutOfRangeError : public GraphError {
public:
    VertexOutOfRangeError(VertexId v, int n)
        : GraphError("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")"),
          vertex(v),
          bound(n) {}
    VertexOutOfRangeError(VertexId v, int n, int line)
        : GraphError("line " + std::to_string(line) + ": vertex " + std::to_string(v) +
                     " out of range [0, " + std::to_string(n) + ")"),
          vertex(v),
          bound(n) {}
    VertexId vertex;
    int bound;
};

class NotStronglyConnectedError : public GraphError {
public:
    NotStronglyConnectedError() : GraphError("digraph is not strongly connected") {}
};

class NotConnectedError : public GraphError {
public:
    NotConnectedError() : GraphError("graph is not connected") {}
};

/// Corona attachment factor must have at least two vertices.
class HTooSmallError : public GraphError {
public:
    explicit HTooSmallError(int m)
        : GraphError("attachment factor has " + std::to_string(m) + " vertices, need at least 2") {}
};

/// Closed-form corona profile formulas require a core factor of order >= 2.
class CoreTooSmallError : public GraphError {
public:
    explicit CoreTooSmallError(int n)
        : GraphError("core factor has " + std::to_string(n) +
                     " vertices; closed-form profile needs at least 2") {}
};

class ParseError : public GraphError {
public:
    ParseError(int line_number, const std::string& reason)
        : GraphError("line " + std::to_string(line_number) + ": " + reason), line(line_number) {}
    int line;
};

class GenerationFailedError : public GraphError {
public:
    GenerationFailedError(const std::string& what) : GraphError(what) {}
};

}  // namespace sdg
