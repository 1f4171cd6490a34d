#include "hodgewalk/complex.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>

namespace hodgewalk {

int permutation_parity(const std::vector<int>& a, const std::vector<int>& b) {
    std::map<int, int> pos;
    for (size_t i = 0; i < b.size(); ++i) pos[b[i]] = static_cast<int>(i);
    std::vector<int> perm(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        auto it = pos.find(a[i]);
        if (it == pos.end()) throw std::invalid_argument("tuples differ in elements");
        perm[i] = it->second;
    }
    int parity = 1;
    for (size_t i = 0; i < perm.size(); ++i) {
        while (perm[i] != static_cast<int>(i)) {
            std::swap(perm[i], perm[perm[i]]);
            parity = -parity;
        }
    }
    return parity;
}

OrientedSimplicialComplex::OrientedSimplicialComplex(
    std::vector<std::vector<std::vector<int>>> faces)
    : faces_(std::move(faces)) {
    if (faces_.empty()) throw std::invalid_argument("complex needs at least dimension 0");
    index_.resize(faces_.size());
    for (size_t k = 0; k < faces_.size(); ++k) {
        for (size_t i = 0; i < faces_[k].size(); ++i) {
            auto& f = faces_[k][i];
            if (f.size() != k + 1)
                throw std::invalid_argument("face of wrong arity in dimension " +
                                            std::to_string(k));
            std::vector<int> key = f;
            std::sort(key.begin(), key.end());
            if (std::adjacent_find(key.begin(), key.end()) != key.end())
                throw std::invalid_argument("face with repeated vertex");
            if (!index_[k].emplace(std::move(key), static_cast<int>(i)).second)
                throw std::invalid_argument("duplicate face in dimension " + std::to_string(k));
        }
    }
    // closure under inclusion
    for (size_t k = 1; k < faces_.size(); ++k) {
        for (auto& f : faces_[k]) {
            for (size_t p = 0; p < f.size(); ++p) {
                std::vector<int> sub;
                for (size_t q = 0; q < f.size(); ++q)
                    if (q != p) sub.push_back(f[q]);
                std::sort(sub.begin(), sub.end());
                if (!index_[k - 1].count(sub))
                    throw std::invalid_argument("complex not closed under inclusion");
            }
        }
    }
    up_degree_.resize(faces_.size());
    for (size_t k = 0; k < faces_.size(); ++k)
        up_degree_[k].assign(faces_[k].size(), 0);
    for (size_t k = 1; k < faces_.size(); ++k) {
        for (auto& f : faces_[k]) {
            for (size_t p = 0; p < f.size(); ++p) {
                std::vector<int> sub;
                for (size_t q = 0; q < f.size(); ++q)
                    if (q != p) sub.push_back(f[q]);
                std::sort(sub.begin(), sub.end());
                ++up_degree_[k - 1][index_[k - 1].at(sub)];
            }
        }
    }
}

int OrientedSimplicialComplex::num_faces(int k) const {
    if (k < 0 || k > dim()) return 0;
    return static_cast<int>(faces_[k].size());
}

const std::vector<std::vector<int>>& OrientedSimplicialComplex::faces(int k) const {
    if (k < 0 || k > dim())
        throw std::domain_error("dimension " + std::to_string(k) + " out of range");
    return faces_[k];
}

int OrientedSimplicialComplex::face_id(int k, std::vector<int> verts) const {
    if (k < 0 || k > dim()) return -1;
    std::sort(verts.begin(), verts.end());
    auto it = index_[k].find(verts);
    return it == index_[k].end() ? -1 : it->second;
}

int OrientedSimplicialComplex::up_degree(int k, int id) const {
    return up_degree_[k][id];
}

Graph OrientedSimplicialComplex::skeleton() const {
    std::vector<std::pair<int, int>> edges;
    if (dim() >= 1)
        for (auto& e : faces_[1]) edges.emplace_back(e[0], e[1]);
    return make_graph(num_faces(0), std::move(edges));
}

OrientedSimplicialComplex clique_complex(const Graph& g, int max_dim) {
    if (max_dim < 1) throw std::domain_error("max_dim must be >= 1");
    std::vector<std::vector<std::vector<int>>> faces(max_dim + 1);
    for (int v = 0; v < g.n; ++v) faces[0].push_back({v});
    for (auto [u, v] : g.edges) faces[1].push_back({u, v});

    std::vector<std::set<int>> adj(g.n);
    for (auto [u, v] : g.edges) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    // extend each (k-1)-clique by a larger common neighbor
    for (int k = 2; k <= max_dim; ++k) {
        for (auto& f : faces[k - 1]) {
            std::vector<int> common;
            for (int w = f.back() + 1; w < g.n; ++w) {
                bool all = true;
                for (int v : f)
                    if (!adj[v].count(w)) {
                        all = false;
                        break;
                    }
                if (all) common.push_back(w);
            }
            for (int w : common) {
                auto ext = f;
                ext.push_back(w);
                faces[k].push_back(std::move(ext));
            }
        }
        if (faces[k].empty()) break;
    }
    return OrientedSimplicialComplex(std::move(faces));
}

Matrix SignedIncidence::dense() const {
    Matrix m = Matrix::Zero(rows, cols);
    for (auto& e : entries) m(e.row, e.col) = e.sign;
    return m;
}

IntMatrix SignedIncidence::dense_int() const {
    IntMatrix m = IntMatrix::Zero(rows, cols);
    for (auto& e : entries) m(e.row, e.col) = e.sign;
    return m;
}

SignedIncidence incidence(const OrientedSimplicialComplex& sc, int k) {
    if (k < 1 || k > sc.dim())
        throw std::domain_error("incidence order " + std::to_string(k) + " out of range");
    SignedIncidence b;
    b.rows = sc.num_faces(k - 1);
    b.cols = sc.num_faces(k);
    for (int j = 0; j < b.cols; ++j) {
        const auto& f = sc.face(k, j);
        for (size_t p = 0; p < f.size(); ++p) {
            std::vector<int> sub;
            for (size_t q = 0; q < f.size(); ++q)
                if (q != p) sub.push_back(f[q]);
            int i = sc.face_id(k - 1, sub);
            int sign = ((p % 2 == 0) ? 1 : -1) * permutation_parity(sub, sc.face(k - 1, i));
            b.entries.push_back({i, j, sign});
        }
    }
    return b;
}

Matrix lift_operator(int n_k) {
    Matrix v(2 * n_k, n_k);
    v << Matrix::Identity(n_k, n_k), -Matrix::Identity(n_k, n_k);
    return v;
}

std::string complex_to_json(const OrientedSimplicialComplex& sc) {
    nlohmann::json j;
    j["dim"] = sc.dim();
    auto& fs = j["faces"] = nlohmann::json::array();
    for (int k = 0; k <= sc.dim(); ++k) fs.push_back(sc.faces(k));
    return j.dump(2) + "\n";
}

OrientedSimplicialComplex complex_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    auto faces = j.at("faces").get<std::vector<std::vector<std::vector<int>>>>();
    int dim = j.at("dim").get<int>();
    if (dim + 1 != static_cast<int>(faces.size()))
        throw std::invalid_argument("complex JSON: dim does not match face lists");
    return OrientedSimplicialComplex(std::move(faces));
}

}  // namespace hodgewalk
