#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hodgewalk {

/// Thrown when an input document cannot be parsed; carries the 1-based line number.
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

/// Thrown when a named option (gallery item, regularizer, method, ...) is unknown.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Undirected simple graph with a canonical edge ordering.
///
/// Edges are stored as (u, v) with u < v, sorted lexicographically.  All
/// edge-indexed matrices and feature tables in this library use that order.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> node_labels;  // optional, empty or size n
    std::vector<std::string> edge_labels;  // optional, empty or size m

    int num_edges() const { return static_cast<int>(edges.size()); }

    /// Canonical index of edge {u, v}, or -1 if absent.
    int edge_rank(int u, int v) const;

    std::vector<int> degrees() const;
    std::vector<std::vector<int>> adjacency_lists() const;

    /// Component id per node, ids assigned in order of smallest member.
    std::vector<int> connected_components() const;

    bool is_connected() const;
};

/// Validate and canonicalize: sorts edges, rejects self-loops, duplicates and
/// out-of-range endpoints.
Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

/// Parse the edge-list format: one "u v" pair per line, '#' starts a comment,
/// optional first data line "n=<count>" declares the node count (otherwise it
/// is 1 + max index).
Graph parse_edge_list(const std::string& text);

/// Inverse of parse_edge_list; re-parsing the output reproduces the graph.
std::string emit_edge_list(const Graph& g);

/// Relabel nodes: node v becomes perm[v].
Graph permute_graph(const Graph& g, const std::vector<int>& perm);

}  // namespace hodgewalk
