#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hodgewalk/hodge.hpp"
#include "hodgewalk/walk.hpp"

namespace hodgewalk {

/// Feature table over the k-simplices of a complex (or over ordered node
/// pairs, for the pairwise encodings): one row per subject in canonical
/// order, named channels, finite values.
struct FeatureMatrix {
    int subject = 0;  // dimension of the indexed simplices; pairwise tables use subject 0
    std::vector<std::string> channels;
    Matrix values;

    int rows() const { return static_cast<int>(values.rows()); }
};

enum class RwseMode { diag, full };

/// Node RWSE: diag mode gives the n x T table of return probabilities
/// [P_ii^t]; full mode keeps all entries of P^t as an n^2 x T table over
/// ordered node pairs (row u*n+v).
FeatureMatrix rwse_node(const Graph& g, int steps, RwseMode mode = RwseMode::diag);

/// Eigenvector PE from the graph Laplacian: the n_eigen eigenvectors with the
/// smallest eigenvalues above zero_tol, each sign-fixed so its largest-
/// magnitude entry (lowest index on ties) is positive.  The sign fix is a
/// convention, not an invariance claim.
FeatureMatrix lap_pe_node(const Graph& g, int n_eigen);

/// Resistance distance over ordered node pairs, from the pseudoinverse of
/// L_0.  Throws std::domain_error naming the components if g is disconnected.
FeatureMatrix resistance_distance(const Graph& g);

/// Shortest-path distance over ordered node pairs; unreachable pairs get the
/// sentinel -1 (kept finite so feature tables stay finite).
FeatureMatrix shortest_path_distance(const Graph& g);
constexpr double kUnreachable = -1.0;

enum class EdgeRwseVariant { full, directed, undirected, up };

/// Edge RWSE over the m edges: per-step return probabilities of the chosen
/// edge walk (orientation-merged for the full lifted walk).  with_row_stats
/// appends one channel per step holding the variance of that step's
/// transition row.
FeatureMatrix edge_rwse(const OrientedSimplicialComplex& sc, EdgeRwseVariant variant,
                        int steps, bool with_row_stats = false);

enum class Hodge1LapMode { proj, abs, sim };

struct Hodge1LapParams {
    int n_eigen = 4;            // nonzero subspaces (proj) or eigenvectors (abs/sim)
    bool unit_preimage = true;  // proj: e = 1/sqrt(m); otherwise edge_features
    Matrix edge_features;       // proj with unit_preimage=false: m x d preimages
    int n_random_proj = 0;      // abs: extra random-projection channels
    std::uint64_t seed = 0;     // for the random projections
    double group_tol = 1e-7;    // eigenvalue equality tolerance for subspaces
};

/// Edge PE from the Hodge 1-Laplacian spectrum.
///   proj: per eigen-subspace projections U U^T v (sign and basis invariant);
///   abs:  |u_i| channels plus optional random projections sum_i a_ij |u_i|;
///   sim:  raw eigenvectors with their eigenvalue channels.
FeatureMatrix hodge1lap(const OrientedSimplicialComplex& sc, Hodge1LapMode mode,
                        const Hodge1LapParams& params = {});

/// Overload taking a precomputed L_1 spectrum (e.g. for re-basing tests).
FeatureMatrix hodge1lap(const Spectrum& l1_spectrum, int m, Hodge1LapMode mode,
                        const Hodge1LapParams& params = {});

/// Per-edge cycle labels from the kernel of L_1: in_cycle marks edges with
/// nonzero abs-projection magnitude; edges whose magnitudes agree under every
/// random projection share a group id; shared marks edges where the plain
/// projection of a unit preimage cancels while the abs magnitude stays
/// positive (an edge on two cycles).
struct CycleLabels {
    std::vector<bool> in_cycle;
    std::vector<int> group;  // -1 when not in a cycle
    std::vector<bool> shared;
};

CycleLabels detect_cycles(const OrientedSimplicialComplex& sc, std::uint64_t seed = 0,
                          int n_random_proj = 8);

/// k-RWSE: orientation-merged return probabilities of the lifted k-walk.
FeatureMatrix k_rwse(const OrientedSimplicialComplex& sc, int k, int steps);

/// Inter-RWSE: diagonal sequence of the inter-order transition powers over
/// all simplices of order <= K.
FeatureMatrix inter_rwse(const OrientedSimplicialComplex& sc, int max_order, int steps);

/// Cellular RWSE: edges transit uniformly to edges sharing a node or sharing
/// a ring, where rings are the minimum-cycle-basis cycles of length <=
/// max_ring; m x T return probabilities.
FeatureMatrix cellular_rwse(const Graph& g, int steps, int max_ring);

/// Transition matrix of the cellular edge walk (exposed for simulation).
TransitionMatrix cellular_transition(const Graph& g, int max_ring);

/// Minimum cycle basis (Horton), each cycle as a sorted list of edge ids;
/// cycles longer than max_len are dropped when max_len > 0.
std::vector<std::vector<int>> minimum_cycle_basis(const Graph& g, int max_len = 0);

/// Feature CSV ("simplex_id,<channels>") and its JSON sidecar describing the
/// encoding run.
std::string feature_to_csv(const FeatureMatrix& f);
std::string feature_sidecar_json(const std::string& encoding,
                                 const std::vector<std::pair<std::string, std::string>>& params,
                                 std::optional<std::uint64_t> seed, double zero_tol);

}  // namespace hodgewalk
