#include "hodgewalk/isotest.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace hodgewalk {

// ---------------------------------------------------------------------------
// gallery
// ---------------------------------------------------------------------------

namespace {

Graph cycle_graph(int n) {
    if (n < 3) throw ConfigError("cycle(n) needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return make_graph(n, std::move(edges));
}

Graph path_graph(int n) {
    if (n < 1) throw ConfigError("path(n) needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return make_graph(n, std::move(edges));
}

Graph star_graph(int leaves) {
    if (leaves < 1) throw ConfigError("star(n) needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return make_graph(leaves + 1, std::move(edges));
}

Graph two_triangles_graph() {
    return make_graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
}

Graph rook_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < 16; ++a)
        for (int b = a + 1; b < 16; ++b)
            if (a / 4 == b / 4 || a % 4 == b % 4) edges.emplace_back(a, b);
    return make_graph(16, std::move(edges));
}

Graph shrikhande_graph() {
    // Cayley graph on Z4 x Z4 with connection set {+-(1,0), +-(0,1), +-(1,1)}
    const int dirs[6][2] = {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}};
    std::set<std::pair<int, int>> edges;
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            for (auto& d : dirs) {
                int a = x * 4 + y;
                int b = ((x + d[0]) % 4) * 4 + (y + d[1]) % 4;
                edges.emplace(std::min(a, b), std::max(a, b));
            }
    return make_graph(16, {edges.begin(), edges.end()});
}

// Square backbone 0..3 (a 4-cycle) with a 6-node gadget hung off each backbone
// node: X = two triangles, Y = a six-ring.  Variant (a) places the two X
// gadgets on adjacent backbone nodes (order X,X,Y,Y), variant (b) on opposite
// ones (order X,Y,X,Y); that is the paper pair's only difference.
Graph fig1_graph(bool adjacent_same_type) {
    std::vector<char> types = adjacent_same_type ? std::vector<char>{'X', 'X', 'Y', 'Y'}
                                                 : std::vector<char>{'X', 'Y', 'X', 'Y'};
    std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    for (int i = 0; i < 4; ++i) {
        int base = 4 + 6 * i;
        for (int l = 0; l < 6; ++l) edges.emplace_back(i, base + l);
        if (types[i] == 'X') {
            edges.emplace_back(base, base + 1);
            edges.emplace_back(base, base + 2);
            edges.emplace_back(base + 1, base + 2);
            edges.emplace_back(base + 3, base + 4);
            edges.emplace_back(base + 3, base + 5);
            edges.emplace_back(base + 4, base + 5);
        } else {
            for (int l = 0; l < 6; ++l) edges.emplace_back(base + l, base + (l + 1) % 6);
        }
    }
    return make_graph(28, std::move(edges));
}

// The published order-2 example complex: pendant edge a->b plus the triangle
// c->b->d, edges ordered a->b, c->b, c->d, b->d.
OrientedSimplicialComplex fig5a_complex() {
    return OrientedSimplicialComplex({
        {{0}, {1}, {2}, {3}},
        {{0, 1}, {2, 1}, {2, 3}, {1, 3}},
        {{2, 1, 3}},
    });
}

// The published order-1 example complex: a four-cycle with one consistent
// circulation broken on edge 4, plus a pendant edge 5.
OrientedSimplicialComplex fig5b_complex() {
    return OrientedSimplicialComplex({
        {{0}, {1}, {2}, {3}, {4}},
        {{0, 1}, {1, 2}, {3, 0}, {3, 2}, {2, 4}},
    });
}

struct GalleryName {
    std::string base;
    int arg = -1;
};

GalleryName parse_gallery_name(const std::string& name) {
    auto open = name.find('(');
    if (open == std::string::npos) return {name, -1};
    if (name.back() != ')') throw ConfigError("malformed gallery name '" + name + "'");
    GalleryName g;
    g.base = name.substr(0, open);
    try {
        g.arg = std::stoi(name.substr(open + 1, name.size() - open - 2));
    } catch (const std::exception&) {
        throw ConfigError("malformed gallery name '" + name + "'");
    }
    return g;
}

[[noreturn]] void unknown_gallery(const std::string& name) {
    std::string msg = "unknown gallery item '" + name + "'; valid names:";
    for (auto& n : gallery_names()) msg += " " + n;
    throw ConfigError(msg);
}

}  // namespace

std::vector<std::string> gallery_names() {
    return {"cycle(n)", "path(n)",    "star(n)", "two_triangles", "rook4x4",
            "shrikhande", "fig1a", "fig1b",   "fig5a",         "fig5b"};
}

Graph gallery_graph(const std::string& name) {
    auto [base, arg] = parse_gallery_name(name);
    if (base == "cycle") return cycle_graph(arg);
    if (base == "path") return path_graph(arg);
    if (base == "star") return star_graph(arg);
    if (base == "two_triangles") return two_triangles_graph();
    if (base == "rook4x4") return rook_graph();
    if (base == "shrikhande") return shrikhande_graph();
    if (base == "fig1a") return fig1_graph(true);
    if (base == "fig1b") return fig1_graph(false);
    if (base == "fig5a") return fig5a_complex().skeleton();
    if (base == "fig5b") return fig5b_complex().skeleton();
    unknown_gallery(name);
}

OrientedSimplicialComplex gallery_complex(const std::string& name, int max_dim) {
    auto [base, arg] = parse_gallery_name(name);
    if (base == "fig5a") return fig5a_complex();
    if (base == "fig5b") return fig5b_complex();
    return clique_complex(gallery_graph(name), max_dim);
}

// ---------------------------------------------------------------------------
// color refinement
// ---------------------------------------------------------------------------

namespace {

using Signature = std::vector<long long>;

/// Assign canonical ids: signatures sorted lexicographically, ids by rank.
/// Joint across all graphs of one call, so histograms are comparable.
std::vector<std::vector<int>> canonicalize(const std::vector<std::vector<Signature>>& sigs) {
    std::set<Signature> uniq;
    for (auto& graph_sigs : sigs)
        for (auto& s : graph_sigs) uniq.insert(s);
    std::map<Signature, int> ids;
    int next = 0;
    for (auto& s : uniq) ids.emplace(s, next++);
    std::vector<std::vector<int>> colors;
    for (auto& graph_sigs : sigs) {
        std::vector<int> c;
        c.reserve(graph_sigs.size());
        for (auto& s : graph_sigs) c.push_back(ids.at(s));
        colors.push_back(std::move(c));
    }
    return colors;
}

ColorHistogram histogram(int iteration, const std::vector<int>& colors) {
    ColorHistogram h;
    h.iteration = iteration;
    for (int c : colors) ++h.counts[c];
    return h;
}

int total_distinct(const std::vector<std::vector<int>>& colors) {
    std::set<int> all;
    for (auto& c : colors) all.insert(c.begin(), c.end());
    return static_cast<int>(all.size());
}

std::vector<std::vector<Signature>> init_signatures(
    const std::vector<Graph>& graphs, const std::vector<std::optional<Matrix>>& init_rows) {
    std::vector<std::vector<Signature>> sigs(graphs.size());
    for (size_t gi = 0; gi < graphs.size(); ++gi) {
        const Graph& g = graphs[gi];
        sigs[gi].resize(g.n);
        if (gi < init_rows.size() && init_rows[gi]) {
            const Matrix& rows = *init_rows[gi];
            if (rows.rows() != g.n)
                throw std::domain_error("init feature rows must match node count");
            for (int v = 0; v < g.n; ++v) {
                Signature s(rows.cols());
                for (int j = 0; j < rows.cols(); ++j)
                    s[j] = std::llround(rows(v, j) * 1e12);  // 12-decimal rounding
                sigs[gi][v] = std::move(s);
            }
        } else {
            for (int v = 0; v < g.n; ++v) sigs[gi][v] = {0};
        }
    }
    return sigs;
}

}  // namespace

std::vector<std::vector<ColorHistogram>> wl1_joint(
    const std::vector<Graph>& graphs, int max_iter,
    const std::vector<std::optional<Matrix>>& init_rows) {
    auto colors = canonicalize(init_signatures(graphs, init_rows));
    std::vector<std::vector<std::vector<int>>> adj;
    for (auto& g : graphs) adj.push_back(g.adjacency_lists());

    std::vector<std::vector<ColorHistogram>> out(graphs.size());
    for (size_t gi = 0; gi < graphs.size(); ++gi)
        out[gi].push_back(histogram(0, colors[gi]));

    int distinct = total_distinct(colors);
    for (int it = 1; it <= max_iter; ++it) {
        std::vector<std::vector<Signature>> sigs(graphs.size());
        for (size_t gi = 0; gi < graphs.size(); ++gi) {
            const Graph& g = graphs[gi];
            sigs[gi].resize(g.n);
            for (int v = 0; v < g.n; ++v) {
                Signature s;
                s.reserve(adj[gi][v].size() + 1);
                s.push_back(colors[gi][v]);
                for (int u : adj[gi][v]) s.push_back(colors[gi][u]);
                std::sort(s.begin() + 1, s.end());
                sigs[gi][v] = std::move(s);
            }
        }
        colors = canonicalize(sigs);
        for (size_t gi = 0; gi < graphs.size(); ++gi)
            out[gi].push_back(histogram(it, colors[gi]));
        int now = total_distinct(colors);
        if (now == distinct) break;  // refinement never merges classes
        distinct = now;
    }
    return out;
}

std::vector<ColorHistogram> wl1(const Graph& g, int max_iter,
                                const std::optional<Matrix>& init_rows) {
    return wl1_joint({g}, max_iter, {init_rows})[0];
}

std::vector<std::vector<ColorHistogram>> fwl2_joint(const std::vector<Graph>& graphs,
                                                    int max_iter, int node_cap) {
    for (auto& g : graphs)
        if (g.n > node_cap)
            throw std::runtime_error("fwl2: graph with " + std::to_string(g.n) +
                                     " nodes exceeds the cap of " + std::to_string(node_cap));
    // initial pair colors: 2 = equal, 1 = adjacent, 0 = non-adjacent
    std::vector<std::vector<Signature>> sigs(graphs.size());
    std::vector<std::vector<std::vector<char>>> adjm;
    for (size_t gi = 0; gi < graphs.size(); ++gi) {
        const Graph& g = graphs[gi];
        std::vector<std::vector<char>> a(g.n, std::vector<char>(g.n, 0));
        for (auto [u, v] : g.edges) a[u][v] = a[v][u] = 1;
        adjm.push_back(std::move(a));
        sigs[gi].resize(static_cast<size_t>(g.n) * g.n);
        for (int u = 0; u < g.n; ++u)
            for (int v = 0; v < g.n; ++v)
                sigs[gi][u * g.n + v] = {u == v ? 2 : (adjm[gi][u][v] ? 1 : 0)};
    }
    auto colors = canonicalize(sigs);

    std::vector<std::vector<ColorHistogram>> out(graphs.size());
    for (size_t gi = 0; gi < graphs.size(); ++gi)
        out[gi].push_back(histogram(0, colors[gi]));

    int distinct = total_distinct(colors);
    for (int it = 1; it <= max_iter; ++it) {
        std::vector<std::vector<Signature>> next(graphs.size());
        for (size_t gi = 0; gi < graphs.size(); ++gi) {
            int n = graphs[gi].n;
            next[gi].resize(static_cast<size_t>(n) * n);
            const auto& c = colors[gi];
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) {
                    Signature s;
                    s.reserve(n + 1);
                    s.push_back(c[u * n + v]);
                    for (int w = 0; w < n; ++w)
                        s.push_back((static_cast<long long>(c[u * n + w]) << 32) |
                                    static_cast<unsigned>(c[w * n + v]));
                    std::sort(s.begin() + 1, s.end());
                    next[gi][u * n + v] = std::move(s);
                }
        }
        colors = canonicalize(next);
        for (size_t gi = 0; gi < graphs.size(); ++gi)
            out[gi].push_back(histogram(it, colors[gi]));
        int now = total_distinct(colors);
        if (now == distinct) break;
        distinct = now;
    }
    return out;
}

std::vector<ColorHistogram> fwl2(const Graph& g, int max_iter, int node_cap) {
    return fwl2_joint({g}, max_iter, node_cap)[0];
}

// ---------------------------------------------------------------------------
// isospectral and distinguish
// ---------------------------------------------------------------------------

IsospectralVerdict isospectral(const OrientedSimplicialComplex& a,
                               const OrientedSimplicialComplex& b, int k) {
    IsospectralVerdict v;
    auto poly_of = [&](const OrientedSimplicialComplex& sc) {
        if (k > sc.dim() || sc.num_faces(k) == 0) {
            v.dimension_warning = true;
            return std::vector<mpz_class>{1};  // empty matrix: constant polynomial 1
        }
        return char_poly_exact(hodge_laplacian(sc, k).matrix);
    };
    v.poly_a = poly_of(a);
    v.poly_b = poly_of(b);
    size_t len = std::max(v.poly_a.size(), v.poly_b.size());
    for (size_t i = 0; i < len; ++i) {
        mpz_class ca = i < v.poly_a.size() ? v.poly_a[i] : 0;
        mpz_class cb = i < v.poly_b.size() ? v.poly_b[i] : 0;
        if (ca != cb) {
            v.separated = true;
            v.evidence = "coefficient " + std::to_string(i) + " differs (" + ca.get_str() +
                         " vs " + cb.get_str() + ")";
            return v;
        }
    }
    v.evidence = "equal";
    return v;
}

bool feature_multisets_equal(const Matrix& a, const Matrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    auto sorted_rows = [](const Matrix& m) {
        std::vector<std::vector<double>> rows(m.rows());
        for (int i = 0; i < m.rows(); ++i) {
            rows[i].resize(m.cols());
            for (int j = 0; j < m.cols(); ++j)
                rows[i][j] = std::round(m(i, j) * 1e12) / 1e12;
        }
        std::sort(rows.begin(), rows.end());
        return rows;
    };
    auto ra = sorted_rows(a), rb = sorted_rows(b);
    for (size_t i = 0; i < ra.size(); ++i)
        for (size_t j = 0; j < ra[i].size(); ++j)
            if (std::abs(ra[i][j] - rb[i][j]) > tol) return false;
    return true;
}

namespace {

bool histories_differ(const std::vector<ColorHistogram>& a,
                      const std::vector<ColorHistogram>& b, int* first_diff) {
    size_t len = std::max(a.size(), b.size());
    for (size_t i = 0; i < len; ++i) {
        const ColorHistogram& ha = a[std::min(i, a.size() - 1)];
        const ColorHistogram& hb = b[std::min(i, b.size() - 1)];
        if (!(ha == hb)) {
            if (first_diff) *first_diff = static_cast<int>(i);
            return true;
        }
    }
    return false;
}

}  // namespace

DistinguishReport distinguish(const Graph& a, const Graph& b,
                              std::vector<std::string> methods,
                              const DistinguishOptions& opt) {
    if (methods.empty()) throw ConfigError("distinguish needs at least one method");
    if (methods.size() == 1 && methods[0] == "all")
        methods = {"wl1",   "wl1+rwse", "fwl2",          "spec_L0",      "spec_L1",
                   "rwse0", "edge_rwse_full", "edge_rwse_up", "hodge1lap_abs"};

    DistinguishReport report;
    auto record = [&](const std::string& method, bool separated, std::string evidence) {
        report.separated[method] = separated;
        report.evidence[method] = std::move(evidence);
    };

    for (auto& method : methods) {
        try {
            if (method == "wl1" || method == "wl1+rwse") {
                std::vector<std::optional<Matrix>> inits(2);
                if (method == "wl1+rwse") {
                    inits[0] = rwse_node(a, opt.rwse_steps).values;
                    inits[1] = rwse_node(b, opt.rwse_steps).values;
                }
                auto hist = wl1_joint({a, b}, opt.wl_max_iter, inits);
                int at = -1;
                bool sep = histories_differ(hist[0], hist[1], &at);
                record(method, sep,
                       sep ? "histograms differ at iteration " + std::to_string(at)
                           : "stable histograms equal");
            } else if (method == "fwl2") {
                auto hist = fwl2_joint({a, b}, opt.wl_max_iter, opt.fwl2_node_cap);
                int at = -1;
                bool sep = histories_differ(hist[0], hist[1], &at);
                record(method, sep,
                       sep ? "histograms differ at iteration " + std::to_string(at)
                           : "stable histograms equal");
            } else if (method.rfind("spec_L", 0) == 0) {
                int k;
                std::string arg = method.substr(6);
                if (arg.rfind("k:", 0) == 0) arg = arg.substr(2);
                try {
                    k = std::stoi(arg);
                } catch (const std::exception&) {
                    throw ConfigError("malformed method '" + method + "'");
                }
                int lift = std::max(k + 1, 1);
                auto verdict = isospectral(clique_complex(a, lift), clique_complex(b, lift), k);
                record(method, verdict.separated, verdict.evidence);
            } else if (method == "rwse0") {
                bool eq = feature_multisets_equal(rwse_node(a, opt.rwse_steps).values,
                                                  rwse_node(b, opt.rwse_steps).values,
                                                  opt.feature_tol);
                record(method, !eq, eq ? "feature multisets equal" : "feature multisets differ");
            } else if (method == "edge_rwse_full" || method == "edge_rwse_up") {
                auto variant = method == "edge_rwse_full" ? EdgeRwseVariant::full
                                                          : EdgeRwseVariant::up;
                auto fa = edge_rwse(clique_complex(a, opt.max_dim), variant,
                                    opt.edge_rwse_steps);
                auto fb = edge_rwse(clique_complex(b, opt.max_dim), variant,
                                    opt.edge_rwse_steps);
                bool eq = feature_multisets_equal(fa.values, fb.values, opt.feature_tol);
                record(method, !eq, eq ? "feature multisets equal" : "feature multisets differ");
            } else if (method == "hodge1lap_abs") {
                Hodge1LapParams params;
                params.n_random_proj = 0;
                auto fa = hodge1lap(clique_complex(a, opt.max_dim), Hodge1LapMode::abs, params);
                auto fb = hodge1lap(clique_complex(b, opt.max_dim), Hodge1LapMode::abs, params);
                bool eq = feature_multisets_equal(fa.values, fb.values, opt.feature_tol);
                record(method, !eq, eq ? "feature multisets equal" : "feature multisets differ");
            } else {
                throw ConfigError("unknown method '" + method + "'");
            }
        } catch (const std::exception& e) {
            report.failures[method] = e.what();
        }
    }
    return report;
}

std::string report_to_json(const DistinguishReport& r) {
    nlohmann::json j;
    j["pair"] = r.pair_label;
    auto& verdicts = j["verdicts"] = nlohmann::json::object();
    for (auto& [method, sep] : r.separated)
        verdicts[method] = sep ? "separated" : "not_separated";
    auto& ev = j["evidence"] = nlohmann::json::object();
    for (auto& [method, text] : r.evidence) ev[method] = text;
    if (!r.failures.empty()) {
        auto& f = j["failures"] = nlohmann::json::object();
        for (auto& [method, text] : r.failures) f[method] = text;
    }
    return j.dump(2) + "\n";
}

std::string report_to_text(const DistinguishReport& r) {
    std::ostringstream out;
    out << "pair: " << r.pair_label << "\n";
    size_t width = 0;
    for (auto& [method, sep] : r.separated) width = std::max(width, method.size());
    for (auto& [method, sep] : r.separated) {
        out << "  " << method << std::string(width - method.size() + 2, ' ')
            << (sep ? "separated      " : "not_separated  ") << r.evidence.at(method) << "\n";
    }
    for (auto& [method, text] : r.failures)
        out << "  " << method << std::string(width > method.size() ? width - method.size() + 2 : 2, ' ')
            << "error          " << text << "\n";
    return out.str();
}

}  // namespace hodgewalk
