#include "hodgewalk/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hodgewalk {

int Graph::edge_rank(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
    if (it == edges.end() || *it != std::make_pair(u, v)) return -1;
    return static_cast<int>(it - edges.begin());
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n, 0);
    for (auto [u, v] : edges) {
        ++d[u];
        ++d[v];
    }
    return d;
}

std::vector<std::vector<int>> Graph::adjacency_lists() const {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

std::vector<int> Graph::connected_components() const {
    std::vector<int> comp(n, -1);
    auto adj = adjacency_lists();
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : adj[v]) {
                if (comp[u] < 0) {
                    comp[u] = next;
                    stack.push_back(u);
                }
            }
        }
        ++next;
    }
    return comp;
}

bool Graph::is_connected() const {
    if (n <= 1) return true;
    auto comp = connected_components();
    return *std::max_element(comp.begin(), comp.end()) == 0;
}

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw std::invalid_argument("node count must be non-negative");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("self-loop on node " + std::to_string(u));
        if (u < 0 || v < 0)
            throw std::invalid_argument("negative node index");
        if (u >= n || v >= n)
            throw std::invalid_argument("edge endpoint " + std::to_string(std::max(u, v)) +
                                        " out of range for n=" + std::to_string(n));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw std::invalid_argument("duplicate edge (" + std::to_string(dup->first) + "," +
                                    std::to_string(dup->second) + ")");
    Graph g;
    g.n = n;
    g.edges = std::move(edges);
    return g;
}

Graph parse_edge_list(const std::string& text) {
    std::vector<std::pair<int, int>> edges;
    int declared_n = -1;
    int max_index = -1;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool first_data = true;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        // trim
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);

        if (first_data && line.rfind("n=", 0) == 0) {
            try {
                size_t pos = 0;
                declared_n = std::stoi(line.substr(2), &pos);
                if (pos != line.size() - 2 || declared_n < 0) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw ParseError(lineno, "malformed node-count header '" + line + "'");
            }
            first_data = false;
            continue;
        }
        first_data = false;

        std::istringstream ls(line);
        long long u, v;
        std::string rest;
        if (!(ls >> u >> v) || (ls >> rest)) {
            throw ParseError(lineno, "expected 'u v', got '" + line + "'");
        }
        if (u < 0 || v < 0) throw ParseError(lineno, "negative node index");
        if (u == v) throw ParseError(lineno, "self-loop on node " + std::to_string(u));
        int a = static_cast<int>(u), c = static_cast<int>(v);
        if (a > c) std::swap(a, c);
        edges.emplace_back(a, c);
        max_index = std::max(max_index, c);
    }
    int n = (declared_n >= 0) ? declared_n : max_index + 1;
    if (declared_n >= 0 && max_index >= declared_n)
        throw ParseError(lineno, "edge endpoint exceeds declared node count");
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return make_graph(n, std::move(edges));
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n=" << g.n << "\n";
    for (auto [u, v] : g.edges) out << u << " " << v << "\n";
    return out.str();
}

Graph permute_graph(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.n)
        throw std::invalid_argument("permutation size mismatch");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges.size());
    for (auto [u, v] : g.edges) edges.emplace_back(perm[u], perm[v]);
    return make_graph(g.n, std::move(edges));
}

}  // namespace hodgewalk
