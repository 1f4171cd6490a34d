#pragma once

#include <Eigen/Dense>

#include <map>
#include <vector>

#include "hodgewalk/graph.hpp"

namespace hodgewalk {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

/// Oriented simplicial complex: per-dimension face lists, each face stored as
/// a vertex tuple in its fixed reference orientation.
///
/// Faces built by clique_complex are listed in lexicographic order of their
/// sorted vertex sets with ascending reference orientation; gallery complexes
/// may carry other orders/orientations to reproduce published matrices.
class OrientedSimplicialComplex {
  public:
    /// faces[k] holds the k-simplices; tuples are immutable after construction.
    OrientedSimplicialComplex(std::vector<std::vector<std::vector<int>>> faces);

    int dim() const { return static_cast<int>(faces_.size()) - 1; }
    int num_faces(int k) const;
    const std::vector<std::vector<int>>& faces(int k) const;
    const std::vector<int>& face(int k, int id) const { return faces(k)[id]; }

    /// Index of the face with the given vertex set (any order), or -1.
    int face_id(int k, std::vector<int> verts) const;

    /// Number of (k+1)-cofaces of face (k, id).
    int up_degree(int k, int id) const;

    /// The underlying graph (faces 0 and 1, orientations dropped).
    Graph skeleton() const;

  private:
    std::vector<std::vector<std::vector<int>>> faces_;
    std::vector<std::map<std::vector<int>, int>> index_;  // sorted verts -> id
    std::vector<std::vector<int>> up_degree_;
};

/// Lift a graph to its clique complex up to dimension K: every (k+1)-clique
/// becomes a k-simplex in ascending-vertex reference orientation.
OrientedSimplicialComplex clique_complex(const Graph& g, int max_dim);

/// Sparse signed incidence matrix B_k with entries in {-1, +1}: rows are
/// (k-1)-simplices, columns k-simplices, signs from the alternating boundary
/// of each column's reference orientation.
struct SignedIncidence {
    struct Entry {
        int row, col, sign;
    };
    int rows = 0, cols = 0;
    std::vector<Entry> entries;

    Matrix dense() const;
    IntMatrix dense_int() const;
};

/// Boundary operator B_k of the complex, 1 <= k <= dim.
SignedIncidence incidence(const OrientedSimplicialComplex& sc, int k);

/// Orientation-lift operator V_k = [+I; -I] of size 2*n_k x n_k.
Matrix lift_operator(int n_k);

/// JSON dump/restore of a complex ({"dim":..,"faces":[[..],..]}).
std::string complex_to_json(const OrientedSimplicialComplex& sc);
OrientedSimplicialComplex complex_from_json(const std::string& text);

/// Parity (+1/-1) of the permutation mapping tuple a onto tuple b; the tuples
/// must contain the same distinct elements.
int permutation_parity(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace hodgewalk
