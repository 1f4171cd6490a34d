#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hodgewalk/encode.hpp"

namespace hodgewalk {

/// Built-in graph gallery.  Names: cycle(n), path(n), star(n), two_triangles,
/// rook4x4, shrikhande, fig1a, fig1b, fig5a, fig5b.
std::vector<std::string> gallery_names();

/// The gallery item's graph (for fig5a/fig5b, the skeleton of the complex).
Graph gallery_graph(const std::string& name);

/// The gallery item as a complex: fig5a/fig5b carry their published face
/// orders and orientations; everything else is the clique complex at max_dim.
OrientedSimplicialComplex gallery_complex(const std::string& name, int max_dim = 2);

/// Color histogram of one refinement iteration.  Tokens are canonical—
/// signatures are sorted before ids are assigned—so histograms computed in
/// one call compare across graphs and across runs.
struct ColorHistogram {
    int iteration = 0;
    std::map<int, long long> counts;

    bool operator==(const ColorHistogram& o) const { return counts == o.counts; }
};

/// 1-WL color refinement on one graph.  init_rows, when given, seeds the
/// initial colors from the rows of a feature table (rounded to 12 decimals).
std::vector<ColorHistogram> wl1(const Graph& g, int max_iter = 100,
                                const std::optional<Matrix>& init_rows = std::nullopt);

/// Joint refinement of several graphs in one token space; returns one
/// histogram sequence per graph, all of equal length.
std::vector<std::vector<ColorHistogram>> wl1_joint(
    const std::vector<Graph>& graphs, int max_iter = 100,
    const std::vector<std::optional<Matrix>>& init_rows = {});

/// 2-FWL refinement over ordered node pairs; initial colors by pair type
/// (equal / adjacent / non-adjacent).  Graphs above node_cap are rejected
/// with a resource error (the cost per iteration is cubic).
std::vector<ColorHistogram> fwl2(const Graph& g, int max_iter = 100, int node_cap = 64);

std::vector<std::vector<ColorHistogram>> fwl2_joint(const std::vector<Graph>& graphs,
                                                    int max_iter = 100, int node_cap = 64);

/// Exact Hodge-k isospectrality of two complexes via integer characteristic
/// polynomials.  Missing dimension-k faces compare as the empty-matrix
/// polynomial (constant 1) and set the warning flag.
struct IsospectralVerdict {
    bool separated = false;
    std::string evidence;  // first differing coefficient index, or "equal"
    std::vector<mpz_class> poly_a, poly_b;
    bool dimension_warning = false;
};

IsospectralVerdict isospectral(const OrientedSimplicialComplex& a,
                               const OrientedSimplicialComplex& b, int k);

/// Distinguishability report for one graph pair.
struct DistinguishReport {
    std::string pair_label;
    std::map<std::string, bool> separated;     // method -> verdict
    std::map<std::string, std::string> evidence;
    std::map<std::string, std::string> failures;  // method -> error message
};

struct DistinguishOptions {
    int rwse_steps = 20;       // rwse0 and wl1+rwse init
    int edge_rwse_steps = 16;  // edge_rwse_full / edge_rwse_up
    int max_dim = 2;           // clique lift order for spectral/edge methods
    int wl_max_iter = 100;
    int fwl2_node_cap = 64;
    double feature_tol = 1e-9;
};

/// Method names: wl1, wl1+rwse, fwl2, spec_L0, spec_L1, spec_Lk:<k>, rwse0,
/// edge_rwse_full, edge_rwse_up, hodge1lap_abs; "all" expands to every method
/// above except explicit spec_Lk.  Per-method errors are recorded without
/// aborting the remaining methods.
DistinguishReport distinguish(const Graph& a, const Graph& b,
                              std::vector<std::string> methods,
                              const DistinguishOptions& options = {});

/// Sorted-row multiset comparison used by the feature-based methods: rows
/// rounded to 12 decimals, sorted lexicographically, compared within tol.
bool feature_multisets_equal(const Matrix& a, const Matrix& b, double tol = 1e-9);

std::string report_to_json(const DistinguishReport& r);
std::string report_to_text(const DistinguishReport& r);

}  // namespace hodgewalk
