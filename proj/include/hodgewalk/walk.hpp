#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hodgewalk/complex.hpp"

namespace hodgewalk {

/// Row-stochastic transition matrix: matrix(s, t) is the probability of
/// stepping from state s to state t.  The defining relation of the lifted
/// walks, -1/2 Lt_k V^T = V^T P, is written in the paper's distribution
/// convention; it holds for P = matrix.transpose().
struct TransitionMatrix {
    std::vector<std::string> states;
    Matrix matrix;
    bool lifted = false;

    int size() const { return static_cast<int>(matrix.rows()); }
};

/// Node walk P = D^-1 A.  Isolated nodes are rejected unless allow_absorbing
/// is set, in which case they become self-loop rows.
TransitionMatrix node_transition(const Graph& g, bool allow_absorbing = false);

/// Lifted edge walk on 2m oriented-edge states, built from the constructive
/// rules: half a step goes through a shared triangle (or stays/flips when the
/// edge has none), half goes through an endpoint with targets weighted by
/// their coface counts.
TransitionMatrix lifted_edge_transition(const OrientedSimplicialComplex& sc);

enum class DownVariant { directed, undirected };

/// 1-down walks on the m unoriented edges.  directed: pick an endpoint with
/// probability 1/2, then uniform over its other incident edges (returning to
/// the source when there are none).  undirected: uniform over all 1-down
/// neighbors; an edge with none becomes a self-loop row.
TransitionMatrix down_transition(const Graph& g, DownVariant variant);

/// Unoriented up walk on k-simplices: uniform over the simplices sharing a
/// (k+1)-coface with the source; simplices in no coface self-loop.
TransitionMatrix up_transition(const OrientedSimplicialComplex& sc, int k);

/// Lifted k-order walk on 2*n_k oriented states; k = 1 coincides with
/// lifted_edge_transition.
TransitionMatrix k_transition(const OrientedSimplicialComplex& sc, int k);

/// Inter-order adjacency A_K: L_k diagonal blocks, B_k^T / B_{k+1} on the
/// offset +-1 blocks, zero elsewhere.
struct InterOrderAdjacency {
    int max_order = 0;
    Matrix matrix;
    IntMatrix matrix_int;
    std::vector<int> offsets;  // offsets[k] = first flat index of order k; size K+2

    int order_of(int flat_index) const;
};

InterOrderAdjacency inter_adjacency(const OrientedSimplicialComplex& sc, int max_order);

/// Row-normalized |A_K|; the diagonal blocks have positive diagonals, so no
/// row is zero.
TransitionMatrix inter_transition(const OrientedSimplicialComplex& sc, int max_order);

/// diag(P^1), ..., diag(P^T).  When merge_orientations is set (allowed only
/// for lifted walks) the two oriented return probabilities of each simplex
/// are summed, halving the vector length.
std::vector<Vector> power_diag(const TransitionMatrix& p, int steps,
                               bool merge_orientations = false);

/// Monte Carlo simulation: per-step empirical state frequencies, rows
/// 0..steps (row 0 is a point mass at start).  Deterministic for a fixed
/// seed; each trial derives its own generator (mt19937_64 seeded by a
/// splitmix64 mix of seed and trial index), so results are independent of
/// how trials are sharded across workers.  The HODGEWALK_THREADS environment
/// variable caps the worker count.
Matrix simulate(const TransitionMatrix& p, int start, int steps, long long trials,
                std::uint64_t seed);

/// splitmix64 mix used for per-trial seeding; exposed for reproducibility.
std::uint64_t splitmix64(std::uint64_t x);

/// CSV export with a state-label header row.
std::string transition_to_csv(const TransitionMatrix& p);

/// Simulation trace CSV: step,state,frequency.
std::string trace_to_csv(const TransitionMatrix& p, const Matrix& frequencies);

}  // namespace hodgewalk
