#pragma once

#include <random>
#include <vector>

#include "hodgewalk/complex.hpp"
#include "hodgewalk/walk.hpp"

namespace hodgewalk::testing {

inline Graph erdos_renyi(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) edges.emplace_back(u, v);
    return make_graph(n, std::move(edges));
}

/// Connected ER graph: resamples until connected (bounded attempts).
inline Graph connected_er(int n, double p, std::uint64_t seed) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Graph g = erdos_renyi(n, p, seed + 7919 * attempt);
        if (g.num_edges() >= 1 && g.is_connected()) return g;
    }
    throw std::runtime_error("could not sample a connected graph");
}

inline Graph er_with_edges(int n, double p, std::uint64_t seed) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Graph g = erdos_renyi(n, p, seed + 104729 * attempt);
        if (g.num_edges() >= 1) return g;
    }
    throw std::runtime_error("could not sample a graph with edges");
}

inline std::vector<int> random_permutation(int n, std::uint64_t seed) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

}  // namespace hodgewalk::testing
