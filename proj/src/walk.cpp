#include "hodgewalk/walk.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>
#include <thread>

#include "hodgewalk/hodge.hpp"
#include "hodgewalk/io.hpp"

namespace hodgewalk {

namespace {

std::string face_label(const std::vector<int>& verts) {
    std::string s = "(";
    for (size_t i = 0; i < verts.size(); ++i) {
        if (i) s += "|";
        s += std::to_string(verts[i]);
    }
    return s + ")";
}

void check_stochastic(const Matrix& p) {
    for (int i = 0; i < p.rows(); ++i) {
        double sum = p.row(i).sum();
        if (std::abs(sum - 1.0) > 1e-12 || p.row(i).minCoeff() < -1e-15)
            throw std::runtime_error("transition row " + std::to_string(i) +
                                     " is not stochastic (sum " + std::to_string(sum) + ")");
    }
}

}  // namespace

TransitionMatrix node_transition(const Graph& g, bool allow_absorbing) {
    auto deg = g.degrees();
    TransitionMatrix t;
    t.matrix = Matrix::Zero(g.n, g.n);
    for (int v = 0; v < g.n; ++v) {
        t.states.push_back(std::to_string(v));
        if (deg[v] == 0) {
            if (!allow_absorbing)
                throw std::domain_error("node " + std::to_string(v) +
                                        " is isolated; set allow_absorbing to keep it");
            t.matrix(v, v) = 1.0;
        }
    }
    for (auto [u, v] : g.edges) {
        t.matrix(u, v) = 1.0 / deg[u];
        t.matrix(v, u) = 1.0 / deg[v];
    }
    check_stochastic(t.matrix);
    return t;
}

TransitionMatrix k_transition(const OrientedSimplicialComplex& sc, int k) {
    if (k < 0 || k > sc.dim())
        throw std::domain_error("walk order " + std::to_string(k) + " out of range");
    int nk = sc.num_faces(k);
    TransitionMatrix t;
    t.lifted = true;
    t.matrix = Matrix::Zero(2 * nk, 2 * nk);
    for (int s = 0; s < 2; ++s)
        for (int i = 0; i < nk; ++i)
            t.states.push_back((s == 0 ? "+" : "-") + face_label(sc.face(k, i)));
    if (nk == 0) return t;

    // Facet adjacency (down) and coface adjacency (up) with boundary signs.
    std::vector<std::vector<std::pair<int, int>>> facets(nk);      // i -> (w, sign)
    std::vector<std::vector<std::pair<int, int>>> faces_of(nk);    // w -> (j, sign), w a facet id
    Vector coface_w = coface_weights(sc, k);
    Vector facet_weight;  // D_k / (k+1) per (k-1)-face: total coface weight around it
    if (k >= 1) {
        auto bk = incidence(sc, k);
        faces_of.assign(sc.num_faces(k - 1), {});
        for (auto& e : bk.entries) {
            facets[e.col].push_back({e.row, e.sign});
            faces_of[e.row].push_back({e.col, e.sign});
        }
        facet_weight = Vector::Zero(sc.num_faces(k - 1));
        for (int w = 0; w < sc.num_faces(k - 1); ++w)
            for (auto [j, sgn] : faces_of[w]) facet_weight[w] += coface_w[j];
    }
    std::vector<std::vector<std::pair<int, int>>> cofaces(nk);     // i -> (t, sign)
    std::vector<std::vector<std::pair<int, int>>> coface_faces;    // t -> (j, sign)
    if (k + 1 <= sc.dim() && sc.num_faces(k + 1) > 0) {
        auto bk1 = incidence(sc, k + 1);
        coface_faces.assign(sc.num_faces(k + 1), {});
        for (auto& e : bk1.entries) {
            cofaces[e.row].push_back({e.col, e.sign});
            coface_faces[e.col].push_back({e.row, e.sign});
        }
    }

    auto state = [nk](int face, int sign) { return sign > 0 ? face : face + nk; };

    for (int i = 0; i < nk; ++i) {
        for (int s : {+1, -1}) {
            int row = state(i, s);
            // Down half-step: pick a facet, then a k-simplex around it weighted
            // by coface count; the arrival orientation keeps the transit sense
            // (in through the face the walk leaves, out through the one it enters).
            if (k == 0 || facets[i].empty()) {
                t.matrix(row, state(i, +s)) += 0.25;
                t.matrix(row, state(i, -s)) += 0.25;
            } else {
                double pick = 0.5 / static_cast<double>(facets[i].size());
                for (auto [w, sign_iw] : facets[i]) {
                    for (auto [j, sign_jw] : faces_of[w]) {
                        double pr = pick * coface_w[j] / facet_weight[w];
                        int arrive = -s * sign_iw * sign_jw;
                        t.matrix(row, state(j, arrive)) += pr;
                    }
                }
            }
            // Up half-step: through a shared coface to any of its faces with the
            // opposite relative orientation; stay/flip when there is no coface.
            if (cofaces[i].empty()) {
                t.matrix(row, state(i, +s)) += 0.25;
                t.matrix(row, state(i, -s)) += 0.25;
            } else {
                double pr = 0.5 / static_cast<double>(cofaces[i].size() * (k + 2));
                for (auto [tt, sign_it] : cofaces[i]) {
                    for (auto [j, sign_jt] : coface_faces[tt]) {
                        int arrive = -s * sign_it * sign_jt;
                        t.matrix(row, state(j, arrive)) += pr;
                    }
                }
            }
        }
    }
    check_stochastic(t.matrix);
    return t;
}

TransitionMatrix lifted_edge_transition(const OrientedSimplicialComplex& sc) {
    if (sc.dim() < 1) throw std::domain_error("lifted edge walk needs dimension >= 1");
    TransitionMatrix t = k_transition(sc, 1);
    t.states.clear();
    for (int s = 0; s < 2; ++s)
        for (auto& e : sc.faces(1))
            t.states.push_back(std::to_string(e[s]) + "->" + std::to_string(e[1 - s]));
    return t;
}

TransitionMatrix down_transition(const Graph& g, DownVariant variant) {
    int m = g.num_edges();
    if (m < 1) throw std::domain_error("down walk needs at least one edge");
    auto deg = g.degrees();
    std::vector<std::vector<int>> at_node(g.n);  // incident edge ids
    for (int e = 0; e < m; ++e) {
        at_node[g.edges[e].first].push_back(e);
        at_node[g.edges[e].second].push_back(e);
    }
    TransitionMatrix t;
    t.matrix = Matrix::Zero(m, m);
    for (auto& e : g.edges)
        t.states.push_back(std::to_string(e.first) + "-" + std::to_string(e.second));

    for (int e = 0; e < m; ++e) {
        auto [u, v] = g.edges[e];
        if (variant == DownVariant::directed) {
            for (int w : {u, v}) {
                if (deg[w] == 1) {
                    t.matrix(e, e) += 0.5;  // no other edge at w: return
                } else {
                    double pr = 0.5 / (deg[w] - 1);
                    for (int f : at_node[w])
                        if (f != e) t.matrix(e, f) += pr;
                }
            }
        } else {
            int neighbors = deg[u] + deg[v] - 2;
            if (neighbors == 0) {
                t.matrix(e, e) = 1.0;  // isolated edge: self-loop row
            } else {
                double pr = 1.0 / neighbors;
                for (int w : {u, v})
                    for (int f : at_node[w])
                        if (f != e) t.matrix(e, f) += pr;
            }
        }
    }
    check_stochastic(t.matrix);
    return t;
}

TransitionMatrix up_transition(const OrientedSimplicialComplex& sc, int k) {
    if (k < 0 || k > sc.dim())
        throw std::domain_error("walk order " + std::to_string(k) + " out of range");
    int nk = sc.num_faces(k);
    TransitionMatrix t;
    t.matrix = Matrix::Zero(nk, nk);
    for (int i = 0; i < nk; ++i) t.states.push_back(face_label(sc.face(k, i)));

    std::vector<std::vector<int>> members;  // coface -> face ids
    if (k + 1 <= sc.dim() && sc.num_faces(k + 1) > 0) {
        members.assign(sc.num_faces(k + 1), {});
        auto bk1 = incidence(sc, k + 1);
        for (auto& e : bk1.entries) members[e.col].push_back(e.row);
    }
    std::vector<std::vector<int>> nbr(nk);
    for (auto& mem : members)
        for (int a : mem)
            for (int b : mem)
                if (a != b) nbr[a].push_back(b);
    for (int i = 0; i < nk; ++i) {
        auto& ns = nbr[i];
        std::sort(ns.begin(), ns.end());
        ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
        if (ns.empty()) {
            t.matrix(i, i) = 1.0;
        } else {
            for (int j : ns) t.matrix(i, j) = 1.0 / ns.size();
        }
    }
    check_stochastic(t.matrix);
    return t;
}

int InterOrderAdjacency::order_of(int flat_index) const {
    for (int k = 0; k <= max_order; ++k)
        if (flat_index < offsets[k + 1]) return k;
    throw std::out_of_range("flat index out of range");
}

InterOrderAdjacency inter_adjacency(const OrientedSimplicialComplex& sc, int max_order) {
    if (max_order < 0 || max_order > sc.dim())
        throw std::domain_error("inter-order K out of range");
    InterOrderAdjacency a;
    a.max_order = max_order;
    a.offsets.resize(max_order + 2, 0);
    for (int k = 0; k <= max_order; ++k) a.offsets[k + 1] = a.offsets[k] + sc.num_faces(k);
    int total = a.offsets.back();
    a.matrix = Matrix::Zero(total, total);
    for (int k = 0; k <= max_order; ++k) {
        int nk = sc.num_faces(k);
        if (nk == 0) continue;
        auto lk = hodge_laplacian(sc, k, LaplacianVariant::standard);
        a.matrix.block(a.offsets[k], a.offsets[k], nk, nk) = lk.matrix;
        if (k >= 1 && sc.num_faces(k - 1) > 0) {
            Matrix bk = incidence(sc, k).dense();
            a.matrix.block(a.offsets[k - 1], a.offsets[k], sc.num_faces(k - 1), nk) = bk;
            a.matrix.block(a.offsets[k], a.offsets[k - 1], nk, sc.num_faces(k - 1)) =
                bk.transpose();
        }
    }
    a.matrix_int = a.matrix.cast<long long>();
    return a;
}

TransitionMatrix inter_transition(const OrientedSimplicialComplex& sc, int max_order) {
    auto a = inter_adjacency(sc, max_order);
    TransitionMatrix t;
    for (int k = 0; k <= max_order; ++k)
        for (int i = 0; i < sc.num_faces(k); ++i)
            t.states.push_back(std::to_string(k) + ":" + face_label(sc.face(k, i)));
    Matrix abs = a.matrix.cwiseAbs();
    t.matrix = abs.array().colwise() / abs.rowwise().sum().array();
    check_stochastic(t.matrix);
    return t;
}

std::vector<Vector> power_diag(const TransitionMatrix& p, int steps,
                               bool merge_orientations) {
    if (steps < 1) throw std::domain_error("steps must be >= 1");
    if (merge_orientations && !p.lifted)
        throw std::domain_error("orientation merge applies to lifted walks only");
    int s = p.size();
    int half = s / 2;
    std::vector<Vector> out;
    Matrix power = p.matrix;
    for (int t = 0; t < steps; ++t) {
        if (t > 0) power = power * p.matrix;
        if (merge_orientations) {
            Vector d(half);
            for (int i = 0; i < half; ++i) d[i] = power(i, i) + power(i, i + half);
            out.push_back(std::move(d));
        } else {
            out.push_back(power.diagonal());
        }
    }
    return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

namespace {

int env_thread_cap() {
    const char* env = std::getenv("HODGEWALK_THREADS");
    if (!env) return 0;
    int v = std::atoi(env);
    return v > 0 ? v : 1;
}

}  // namespace

Matrix simulate(const TransitionMatrix& p, int start, int steps, long long trials,
                std::uint64_t seed) {
    int s = p.size();
    if (start < 0 || start >= s) throw std::domain_error("start state out of range");
    if (steps < 0) throw std::domain_error("steps must be >= 0");
    if (trials < 1) throw std::domain_error("trials must be >= 1");

    // Row-wise cumulative distributions for inverse-transform sampling.
    Matrix cum(s, s);
    for (int i = 0; i < s; ++i) {
        double acc = 0.0;
        for (int j = 0; j < s; ++j) {
            acc += p.matrix(i, j);
            cum(i, j) = acc;
        }
        cum(i, s - 1) = 1.0;
    }

    auto run_shard = [&](long long t0, long long t1, Eigen::MatrixXd& counts) {
        for (long long trial = t0; trial < t1; ++trial) {
            std::mt19937_64 rng(splitmix64(seed + 0x9E3779B97F4A7C15ull *
                                                      static_cast<std::uint64_t>(trial + 1)));
            int cur = start;
            counts(0, cur) += 1.0;
            for (int step = 1; step <= steps; ++step) {
                double u = (rng() >> 11) * 0x1.0p-53;  // 53-bit uniform in [0,1)
                int next = 0;
                while (next < s - 1 && cum(cur, next) <= u) ++next;
                cur = next;
                counts(step, cur) += 1.0;
            }
        }
    };

    int workers = env_thread_cap();
    if (workers <= 1 || trials < 1000) {
        Eigen::MatrixXd counts = Eigen::MatrixXd::Zero(steps + 1, s);
        run_shard(0, trials, counts);
        return counts / static_cast<double>(trials);
    }
    workers = std::min<long long>(workers, trials);
    std::vector<Eigen::MatrixXd> local(workers, Eigen::MatrixXd::Zero(steps + 1, s));
    std::vector<std::thread> pool;
    long long chunk = (trials + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        long long t0 = w * chunk, t1 = std::min<long long>(trials, t0 + chunk);
        if (t0 >= t1) break;
        pool.emplace_back([&, w, t0, t1] { run_shard(t0, t1, local[w]); });
    }
    for (auto& th : pool) th.join();
    Eigen::MatrixXd counts = Eigen::MatrixXd::Zero(steps + 1, s);
    for (auto& l : local) counts += l;
    return counts / static_cast<double>(trials);
}

std::string transition_to_csv(const TransitionMatrix& p) {
    std::ostringstream out;
    out << "state";
    for (auto& l : p.states) out << "," << l;
    out << "\n";
    for (int i = 0; i < p.size(); ++i) {
        out << p.states[i];
        for (int j = 0; j < p.size(); ++j) out << "," << format_double(p.matrix(i, j));
        out << "\n";
    }
    return out.str();
}

std::string trace_to_csv(const TransitionMatrix& p, const Matrix& frequencies) {
    std::ostringstream out;
    out << "step,state,frequency\n";
    for (int t = 0; t < frequencies.rows(); ++t)
        for (int j = 0; j < frequencies.cols(); ++j)
            out << t << "," << p.states[j] << "," << format_double(frequencies(t, j)) << "\n";
    return out.str();
}

}  // namespace hodgewalk
