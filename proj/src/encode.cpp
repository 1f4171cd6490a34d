#include "hodgewalk/encode.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>

#include "hodgewalk/io.hpp"

namespace hodgewalk {

namespace {

std::vector<std::string> step_channels(const std::string& prefix, int steps) {
    std::vector<std::string> names;
    for (int t = 1; t <= steps; ++t) names.push_back(prefix + std::to_string(t));
    return names;
}

/// Return-probability table of a plain (unlifted) walk.
Matrix return_table(const Matrix& p, int steps) {
    int n = static_cast<int>(p.rows());
    Matrix out(n, steps);
    Matrix power = Matrix::Identity(n, n);
    for (int t = 0; t < steps; ++t) {
        power = power * p;
        out.col(t) = power.diagonal();
    }
    return out;
}

double row_variance(const Eigen::RowVectorXd& row) {
    double mean = row.mean();
    return (row.array() - mean).square().sum() / row.size();
}

}  // namespace

FeatureMatrix rwse_node(const Graph& g, int steps, RwseMode mode) {
    if (steps < 1) throw std::domain_error("steps must be >= 1");
    TransitionMatrix p = node_transition(g, /*allow_absorbing=*/true);
    FeatureMatrix f;
    f.subject = 0;
    f.channels = step_channels("p_return_t", steps);
    if (mode == RwseMode::diag) {
        f.values = return_table(p.matrix, steps);
        return f;
    }
    f.channels = step_channels("p_t", steps);
    f.values.resize(static_cast<long>(g.n) * g.n, steps);
    Matrix power = Matrix::Identity(g.n, g.n);
    for (int t = 0; t < steps; ++t) {
        power = power * p.matrix;
        for (int u = 0; u < g.n; ++u)
            for (int v = 0; v < g.n; ++v) f.values(u * g.n + v, t) = power(u, v);
    }
    return f;
}

FeatureMatrix lap_pe_node(const Graph& g, int n_eigen) {
    if (n_eigen > g.n) throw std::domain_error("n_eigen exceeds node count");
    auto sc = clique_complex(g, 1);
    Spectrum s = spectrum(hodge_laplacian(sc, 0));
    std::vector<int> selected;
    for (int i = 0; i < s.eigenvalues.size() && static_cast<int>(selected.size()) < n_eigen; ++i)
        if (s.eigenvalues[i] > s.zero_tol) selected.push_back(i);
    FeatureMatrix f;
    f.subject = 0;
    f.values.resize(g.n, selected.size());
    for (size_t c = 0; c < selected.size(); ++c) {
        Vector v = s.eigenvectors.col(selected[c]);
        // sign convention: largest-magnitude entry (lowest index on ties) positive
        int arg = 0;
        for (int i = 1; i < v.size(); ++i)
            if (std::abs(v[i]) > std::abs(v[arg]) + 1e-12) arg = i;
        if (v[arg] < 0) v = -v;
        f.values.col(c) = v;
        f.channels.push_back("eigvec_l" + format_double(s.eigenvalues[selected[c]]) + "_" +
                             std::to_string(c));
    }
    return f;
}

FeatureMatrix resistance_distance(const Graph& g) {
    auto comp = g.connected_components();
    if (g.n > 0 && *std::max_element(comp.begin(), comp.end()) > 0) {
        std::ostringstream msg;
        msg << "resistance distance needs a connected graph; components:";
        int nc = *std::max_element(comp.begin(), comp.end()) + 1;
        for (int c = 0; c < nc; ++c) {
            msg << " {";
            bool first = true;
            for (int v = 0; v < g.n; ++v)
                if (comp[v] == c) {
                    if (!first) msg << ",";
                    msg << v;
                    first = false;
                }
            msg << "}";
        }
        throw std::domain_error(msg.str());
    }
    auto sc = clique_complex(g, 1);
    Matrix l0 = hodge_laplacian(sc, 0).matrix;
    Spectrum s = spectrum(l0);
    Matrix pinv = Matrix::Zero(g.n, g.n);
    for (int i = 0; i < s.eigenvalues.size(); ++i)
        if (s.eigenvalues[i] > s.zero_tol)
            pinv += s.eigenvectors.col(i) * s.eigenvectors.col(i).transpose() /
                    s.eigenvalues[i];
    FeatureMatrix f;
    f.subject = 0;
    f.channels = {"resistance"};
    f.values.resize(static_cast<long>(g.n) * g.n, 1);
    for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < g.n; ++v)
            f.values(u * g.n + v, 0) = pinv(u, u) + pinv(v, v) - 2 * pinv(u, v);
    return f;
}

FeatureMatrix shortest_path_distance(const Graph& g) {
    auto adj = g.adjacency_lists();
    FeatureMatrix f;
    f.subject = 0;
    f.channels = {"distance"};
    f.values = Matrix::Constant(static_cast<long>(g.n) * g.n, 1, kUnreachable);
    for (int src = 0; src < g.n; ++src) {
        std::vector<int> dist(g.n, -1);
        std::queue<int> q;
        dist[src] = 0;
        q.push(src);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : adj[v])
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    q.push(u);
                }
        }
        for (int v = 0; v < g.n; ++v)
            if (dist[v] >= 0) f.values(src * g.n + v, 0) = dist[v];
    }
    return f;
}

FeatureMatrix edge_rwse(const OrientedSimplicialComplex& sc, EdgeRwseVariant variant,
                        int steps, bool with_row_stats) {
    if (steps < 1) throw std::domain_error("steps must be >= 1");
    int m = sc.num_faces(1);
    FeatureMatrix f;
    f.subject = 1;
    f.channels = step_channels("p_return_t", steps);
    f.values.resize(m, steps);
    Matrix stats(m, steps);

    if (variant == EdgeRwseVariant::full) {
        TransitionMatrix p = lifted_edge_transition(sc);
        Matrix power = Matrix::Identity(2 * m, 2 * m);
        for (int t = 0; t < steps; ++t) {
            power = power * p.matrix;
            for (int i = 0; i < m; ++i) {
                f.values(i, t) = power(i, i) + power(i, i + m);
                if (with_row_stats) {
                    // merged row over unoriented targets
                    Eigen::RowVectorXd merged =
                        power.row(i).head(m) + power.row(i).tail(m);
                    stats(i, t) = row_variance(merged);
                }
            }
        }
    } else {
        TransitionMatrix p;
        Graph g = sc.skeleton();
        if (variant == EdgeRwseVariant::directed)
            p = down_transition(g, DownVariant::directed);
        else if (variant == EdgeRwseVariant::undirected)
            p = down_transition(g, DownVariant::undirected);
        else
            p = up_transition(sc, 1);
        Matrix power = Matrix::Identity(m, m);
        for (int t = 0; t < steps; ++t) {
            power = power * p.matrix;
            f.values.col(t) = power.diagonal();
            if (with_row_stats)
                for (int i = 0; i < m; ++i) stats(i, t) = row_variance(power.row(i));
        }
    }
    if (with_row_stats) {
        for (auto& c : step_channels("row_var_t", steps)) f.channels.push_back(c);
        Matrix joined(m, 2 * steps);
        joined << f.values, stats;
        f.values = std::move(joined);
    }
    return f;
}

namespace {

/// Group eigenvalue indices into subspaces of equal eigenvalue (within tol).
std::vector<std::vector<int>> eigen_groups(const Vector& values, double tol) {
    std::vector<std::vector<int>> groups;
    for (int i = 0; i < values.size(); ++i) {
        if (!groups.empty() && values[i] - values[groups.back().front()] <= tol)
            groups.back().push_back(i);
        else
            groups.push_back({i});
    }
    return groups;
}

}  // namespace

FeatureMatrix hodge1lap(const Spectrum& s, int m, Hodge1LapMode mode,
                        const Hodge1LapParams& params) {
    FeatureMatrix f;
    f.subject = 1;
    if (m == 0) {
        f.values.resize(0, 0);
        return f;
    }

    if (mode == Hodge1LapMode::proj) {
        Matrix preimages;
        if (params.unit_preimage) {
            preimages = Matrix::Constant(m, 1, 1.0 / std::sqrt(static_cast<double>(m)));
        } else {
            if (params.edge_features.rows() != m)
                throw std::domain_error("edge_features row count must equal m");
            preimages = params.edge_features;
        }
        auto groups = eigen_groups(s.eigenvalues, params.group_tol);
        // zero subspace first (empty block if the kernel is trivial), then the
        // lowest nonzero subspaces
        std::vector<std::pair<std::string, Matrix>> blocks;
        Matrix zero_proj = Matrix::Zero(m, m);
        bool has_zero = false;
        int taken = 0;
        for (auto& grp : groups) {
            Matrix u(m, grp.size());
            for (size_t c = 0; c < grp.size(); ++c) u.col(c) = s.eigenvectors.col(grp[c]);
            Matrix proj = u * u.transpose();
            double lambda = s.eigenvalues[grp.front()];
            if (std::abs(lambda) <= s.zero_tol && !has_zero) {
                zero_proj = proj;
                has_zero = true;
            } else if (taken < params.n_eigen) {
                blocks.emplace_back("l" + format_double(lambda), proj);
                ++taken;
            }
        }
        int d = static_cast<int>(preimages.cols());
        f.values.resize(m, static_cast<long>(blocks.size() + 1) * d);
        int col = 0;
        auto add_block = [&](const std::string& name, const Matrix& proj) {
            Matrix feat = proj * preimages;
            for (int j = 0; j < d; ++j) {
                f.values.col(col) = feat.col(j);
                f.channels.push_back("proj_" + name + (d > 1 ? "_x" + std::to_string(j) : ""));
                ++col;
            }
        };
        add_block("zero", zero_proj);
        for (auto& [name, proj] : blocks) add_block(name, proj);
        return f;
    }

    int n_eigen = std::min<int>(params.n_eigen, static_cast<int>(s.eigenvalues.size()));
    if (mode == Hodge1LapMode::abs) {
        int extra = params.n_random_proj;
        f.values.resize(m, n_eigen + extra);
        for (int c = 0; c < n_eigen; ++c) {
            f.values.col(c) = s.eigenvectors.col(c).cwiseAbs();
            f.channels.push_back("abs_u" + std::to_string(c));
        }
        if (extra > 0) {
            std::mt19937_64 rng(splitmix64(params.seed));
            std::normal_distribution<double> gauss(0.0, 1.0);
            for (int j = 0; j < extra; ++j) {
                Vector acc = Vector::Zero(m);
                for (int i = 0; i < n_eigen; ++i)
                    acc += gauss(rng) * s.eigenvectors.col(i).cwiseAbs();
                f.values.col(n_eigen + j) = acc;
                f.channels.push_back("rand_proj" + std::to_string(j));
            }
        }
        return f;
    }

    // sim: raw eigenvectors plus their eigenvalues
    f.values.resize(m, 2 * n_eigen);
    for (int c = 0; c < n_eigen; ++c) {
        f.values.col(c) = s.eigenvectors.col(c);
        f.channels.push_back("u" + std::to_string(c));
    }
    for (int c = 0; c < n_eigen; ++c) {
        f.values.col(n_eigen + c).setConstant(s.eigenvalues[c]);
        f.channels.push_back("lambda" + std::to_string(c));
    }
    return f;
}

FeatureMatrix hodge1lap(const OrientedSimplicialComplex& sc, Hodge1LapMode mode,
                        const Hodge1LapParams& params) {
    int m = sc.num_faces(1);
    if (m == 0) {
        FeatureMatrix f;
        f.subject = 1;
        f.values.resize(0, 0);
        return f;
    }
    Spectrum s = spectrum(hodge_laplacian(sc, 1));
    return hodge1lap(s, m, mode, params);
}

CycleLabels detect_cycles(const OrientedSimplicialComplex& sc, std::uint64_t seed,
                          int n_random_proj) {
    int m = sc.num_faces(1);
    CycleLabels labels;
    labels.in_cycle.assign(m, false);
    labels.group.assign(m, -1);
    labels.shared.assign(m, false);
    if (m == 0) return labels;

    Spectrum s = spectrum(hodge_laplacian(sc, 1));
    std::vector<int> kernel;
    for (int i = 0; i < s.eigenvalues.size(); ++i)
        if (std::abs(s.eigenvalues[i]) <= s.zero_tol) kernel.push_back(i);
    if (kernel.empty()) return labels;

    Matrix u(m, kernel.size());
    for (size_t c = 0; c < kernel.size(); ++c) u.col(c) = s.eigenvectors.col(kernel[c]);
    Vector abs_marker = (u * u.transpose()).cwiseAbs() * Vector::Ones(m);
    Vector plain = u * (u.transpose() * Vector::Ones(m));

    for (int i = 0; i < m; ++i) {
        labels.in_cycle[i] = abs_marker[i] > s.zero_tol;
        labels.shared[i] = labels.in_cycle[i] && std::abs(plain[i]) <= s.zero_tol;
    }

    // random projections of |u_i| distinguish cycles: edges of one cycle share
    // identical magnitudes under every projection
    std::mt19937_64 rng(splitmix64(seed));
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix projections(m, n_random_proj);
    for (int j = 0; j < n_random_proj; ++j) {
        Vector acc = Vector::Zero(m);
        for (size_t i = 0; i < kernel.size(); ++i) acc += gauss(rng) * u.col(i).cwiseAbs();
        projections.col(j) = acc.cwiseAbs();
    }
    // union-find over edges with matching projection rows
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (int i = 0; i < m; ++i) {
        if (!labels.in_cycle[i]) continue;
        for (int j = i + 1; j < m; ++j) {
            if (!labels.in_cycle[j]) continue;
            if ((projections.row(i) - projections.row(j)).cwiseAbs().maxCoeff() <= 1e-6)
                parent[find(i)] = find(j);
        }
    }
    std::map<int, int> group_ids;
    for (int i = 0; i < m; ++i) {
        if (!labels.in_cycle[i]) continue;
        auto it = group_ids.emplace(find(i), static_cast<int>(group_ids.size())).first;
        labels.group[i] = it->second;
    }
    return labels;
}

FeatureMatrix k_rwse(const OrientedSimplicialComplex& sc, int k, int steps) {
    if (steps < 1) throw std::domain_error("steps must be >= 1");
    TransitionMatrix p = k_transition(sc, k);
    auto diags = power_diag(p, steps, /*merge_orientations=*/true);
    FeatureMatrix f;
    f.subject = k;
    f.channels = step_channels("p_return_t", steps);
    f.values.resize(sc.num_faces(k), steps);
    for (int t = 0; t < steps; ++t) f.values.col(t) = diags[t];
    return f;
}

FeatureMatrix inter_rwse(const OrientedSimplicialComplex& sc, int max_order, int steps) {
    if (steps < 1) throw std::domain_error("steps must be >= 1");
    TransitionMatrix p = inter_transition(sc, max_order);
    auto diags = power_diag(p, steps);
    FeatureMatrix f;
    f.subject = -1;  // mixed orders; rows follow the inter-order flat indexing
    f.channels = step_channels("p_return_t", steps);
    f.values.resize(p.size(), steps);
    for (int t = 0; t < steps; ++t) f.values.col(t) = diags[t];
    return f;
}

TransitionMatrix cellular_transition(const Graph& g, int max_ring) {
    if (max_ring < 3) throw std::domain_error("max_ring must be >= 3");
    int m = g.num_edges();
    auto rings = minimum_cycle_basis(g, max_ring);
    std::vector<std::vector<int>> mates(m);
    for (auto& ring : rings)
        for (int a : ring)
            for (int b : ring)
                if (a != b) mates[a].push_back(b);
    std::vector<std::vector<int>> at_node(g.n);
    for (int e = 0; e < m; ++e) {
        at_node[g.edges[e].first].push_back(e);
        at_node[g.edges[e].second].push_back(e);
    }
    TransitionMatrix t;
    t.matrix = Matrix::Zero(m, m);
    for (auto& e : g.edges)
        t.states.push_back(std::to_string(e.first) + "-" + std::to_string(e.second));
    for (int e = 0; e < m; ++e) {
        std::vector<int> nbr = mates[e];
        auto [u, v] = g.edges[e];
        for (int w : {u, v})
            for (int f : at_node[w])
                if (f != e) nbr.push_back(f);
        std::sort(nbr.begin(), nbr.end());
        nbr.erase(std::unique(nbr.begin(), nbr.end()), nbr.end());
        if (nbr.empty())
            t.matrix(e, e) = 1.0;
        else
            for (int f : nbr) t.matrix(e, f) = 1.0 / nbr.size();
    }
    return t;
}

FeatureMatrix cellular_rwse(const Graph& g, int steps, int max_ring) {
    if (steps < 1) throw std::domain_error("steps must be >= 1");
    TransitionMatrix p = cellular_transition(g, max_ring);
    FeatureMatrix f;
    f.subject = 1;
    f.channels = step_channels("p_return_t", steps);
    f.values = return_table(p.matrix, steps);
    return f;
}

std::vector<std::vector<int>> minimum_cycle_basis(const Graph& g, int max_len) {
    int m = g.num_edges();
    int dim = m - g.n + [&] {
        auto c = g.connected_components();
        return g.n ? *std::max_element(c.begin(), c.end()) + 1 : 0;
    }();
    if (dim <= 0) return {};

    // Horton candidates: per root v and edge (x,y), the cycle SP(v,x) + xy + SP(y,v)
    auto adj = g.adjacency_lists();
    std::vector<std::vector<int>> parent(g.n), dist(g.n);
    for (int src = 0; src < g.n; ++src) {
        parent[src].assign(g.n, -1);
        dist[src].assign(g.n, -1);
        std::queue<int> q;
        dist[src][src] = 0;
        q.push(src);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : adj[v])
                if (dist[src][u] < 0) {
                    dist[src][u] = dist[src][v] + 1;
                    parent[src][u] = v;
                    q.push(u);
                }
        }
    }
    auto path_edges = [&](int src, int v, std::vector<int>& out) {
        while (v != src) {
            int p = parent[src][v];
            out.push_back(g.edge_rank(p, v));
            v = p;
        }
    };

    std::vector<std::vector<int>> candidates;
    for (int v = 0; v < g.n; ++v) {
        for (int e = 0; e < m; ++e) {
            auto [x, y] = g.edges[e];
            if (dist[v][x] < 0 || dist[v][y] < 0) continue;
            std::vector<int> cyc{e};
            path_edges(v, x, cyc);
            path_edges(v, y, cyc);
            std::sort(cyc.begin(), cyc.end());
            // a real cycle uses each edge once and visits as many nodes as edges
            if (std::adjacent_find(cyc.begin(), cyc.end()) != cyc.end()) continue;
            std::map<int, int> node_count;
            for (int ce : cyc) {
                ++node_count[g.edges[ce].first];
                ++node_count[g.edges[ce].second];
            }
            bool ok = true;
            for (auto& [node, cnt] : node_count)
                if (cnt != 2) {
                    ok = false;
                    break;
                }
            if (ok) candidates.push_back(std::move(cyc));
        }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // greedy GF(2) independence over edge space
    std::vector<std::vector<std::uint64_t>> rows;  // reduced basis bitsets
    std::vector<int> pivots;
    int words = (m + 63) / 64;
    std::vector<std::vector<int>> basis;
    for (auto& cyc : candidates) {
        if (static_cast<int>(basis.size()) == dim) break;
        std::vector<std::uint64_t> bits(words, 0);
        for (int e : cyc) bits[e / 64] |= 1ull << (e % 64);
        for (size_t r = 0; r < rows.size(); ++r)
            if (bits[pivots[r] / 64] >> (pivots[r] % 64) & 1)
                for (int w = 0; w < words; ++w) bits[w] ^= rows[r][w];
        int pivot = -1;
        for (int e = 0; e < m && pivot < 0; ++e)
            if (bits[e / 64] >> (e % 64) & 1) pivot = e;
        if (pivot < 0) continue;
        rows.push_back(std::move(bits));
        pivots.push_back(pivot);
        basis.push_back(cyc);
    }
    if (max_len > 0) {
        basis.erase(std::remove_if(basis.begin(), basis.end(),
                                   [&](const auto& c) {
                                       return static_cast<int>(c.size()) > max_len;
                                   }),
                    basis.end());
    }
    return basis;
}

std::string feature_to_csv(const FeatureMatrix& f) {
    std::ostringstream out;
    out << "simplex_id";
    for (auto& c : f.channels) out << "," << c;
    out << "\n";
    for (int i = 0; i < f.values.rows(); ++i) {
        out << i;
        for (int j = 0; j < f.values.cols(); ++j) out << "," << format_double(f.values(i, j));
        out << "\n";
    }
    return out.str();
}

std::string feature_sidecar_json(
    const std::string& encoding,
    const std::vector<std::pair<std::string, std::string>>& params,
    std::optional<std::uint64_t> seed, double zero_tol) {
    nlohmann::json j;
    j["encoding"] = encoding;
    auto& p = j["parameters"] = nlohmann::json::object();
    for (auto& [k, v] : params) p[k] = v;
    if (seed) j["seed"] = *seed;
    j["zero_tol"] = zero_tol;
    return j.dump(2) + "\n";
}

}  // namespace hodgewalk
