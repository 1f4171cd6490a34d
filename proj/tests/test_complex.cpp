#include <doctest.h>

#include "helpers.hpp"
#include "hodgewalk/isotest.hpp"

using namespace hodgewalk;

TEST_CASE("edge list parsing canonicalizes and deduplicates") {
    Graph g = parse_edge_list("0 1\n1 2");
    CHECK(g.n == 3);
    CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

    Graph h = parse_edge_list("1 0\n0 1");
    CHECK(h.n == 2);
    CHECK(h.edges == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("edge list parser rejects bad input") {
    CHECK_THROWS_AS(parse_edge_list("0 0"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 -2"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 1 2"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("nonsense"), ParseError);
    // line numbers are reported
    try {
        parse_edge_list("# comment\n0 1\n3 3\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("edge list header and comments") {
    Graph g = parse_edge_list("n=5\n# a comment\n0 1  # trailing\n\n2 3\n");
    CHECK(g.n == 5);
    CHECK(g.num_edges() == 2);
    CHECK_THROWS_AS(parse_edge_list("n=2\n0 5\n"), ParseError);
}

TEST_CASE("edge list round-trips") {
    Graph g = testing::er_with_edges(12, 0.3, 5);
    Graph back = parse_edge_list(emit_edge_list(g));
    CHECK(back.n == g.n);
    CHECK(back.edges == g.edges);
}

TEST_CASE("clique complex counts") {
    Graph k3 = make_graph(3, {{0, 1}, {0, 2}, {1, 2}});
    auto sc = clique_complex(k3, 2);
    CHECK(sc.num_faces(0) == 3);
    CHECK(sc.num_faces(1) == 3);
    CHECK(sc.num_faces(2) == 1);

    auto c6 = gallery_complex("cycle(6)");
    CHECK(c6.num_faces(2) == 0);

    auto rook = gallery_complex("rook4x4");
    CHECK(rook.num_faces(0) == 16);
    CHECK(rook.num_faces(1) == 48);
    CHECK(rook.num_faces(2) == 32);
}

TEST_CASE("published incidence matrices of fig5a") {
    auto sc = gallery_complex("fig5a");
    IntMatrix b1 = incidence(sc, 1).dense_int();
    IntMatrix want(4, 4);
    want << -1, 0, 0, 0,
             1, 1, 0, -1,
             0, -1, -1, 0,
             0, 0, 1, 1;
    CHECK(b1 == want);

    IntMatrix b2 = incidence(sc, 2).dense_int();
    REQUIRE(b2.rows() == 4);
    REQUIRE(b2.cols() == 1);
    CHECK(b2(0, 0) == 0);
    CHECK(b2(1, 0) == 1);
    CHECK(b2(2, 0) == -1);
    CHECK(b2(3, 0) == 1);

    CHECK((b1 * b2).isZero());
}

TEST_CASE("each incidence column has k+1 alternating entries") {
    Graph g = testing::er_with_edges(10, 0.5, 11);
    auto sc = clique_complex(g, 3);
    for (int k = 1; k <= sc.dim(); ++k) {
        if (sc.num_faces(k) == 0) continue;
        auto b = incidence(sc, k);
        std::vector<int> per_col(b.cols, 0);
        for (auto& e : b.entries) {
            ++per_col[e.col];
            CHECK((e.sign == 1 || e.sign == -1));
        }
        for (int c : per_col) CHECK(c == k + 1);
    }
}

TEST_CASE("boundary of boundary is zero on random complexes") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = testing::er_with_edges(9, 0.5, 100 + seed);
        auto sc = clique_complex(g, 3);
        for (int k = 1; k + 1 <= sc.dim(); ++k) {
            if (sc.num_faces(k + 1) == 0) continue;
            IntMatrix prod = incidence(sc, k).dense_int() * incidence(sc, k + 1).dense_int();
            CHECK(prod.isZero());
        }
    }
}

TEST_CASE("lift operator") {
    Matrix v1 = lift_operator(1);
    CHECK(v1.rows() == 2);
    CHECK(v1(0, 0) == 1.0);
    CHECK(v1(1, 0) == -1.0);

    Matrix v2 = lift_operator(2);
    Matrix want(4, 2);
    want << 1, 0, 0, 1, -1, 0, 0, -1;
    CHECK(v2 == want);

    for (int nk : {1, 2, 5}) {
        Matrix v = lift_operator(nk);
        CHECK((v.transpose() * v - 2 * Matrix::Identity(nk, nk)).isZero());
    }
    CHECK(lift_operator(0).size() == 0);
}

TEST_CASE("orientation equivariance under node relabeling") {
    Graph g = testing::er_with_edges(8, 0.5, 21);
    auto perm = testing::random_permutation(8, 3);
    Graph h = permute_graph(g, perm);
    auto sa = clique_complex(g, 2);
    auto sb = clique_complex(h, 2);
    REQUIRE(sa.num_faces(2) == sb.num_faces(2));
    if (sa.num_faces(2) == 0) return;

    // B2 of the relabeled complex equals the original up to the induced
    // row/column permutation and per-simplex orientation signs
    IntMatrix b2a = incidence(sa, 2).dense_int();
    IntMatrix b2b = incidence(sb, 2).dense_int();
    auto mapped_face = [&](int k, int id) {
        std::vector<int> out;
        for (int v : sa.face(k, id)) out.push_back(perm[v]);
        return out;
    };
    auto sign_of = [&](int k, int id, const std::vector<int>& mapped, int target) {
        return permutation_parity(mapped, sb.face(k, target));
    };
    for (int j = 0; j < sa.num_faces(2); ++j) {
        auto tri = mapped_face(2, j);
        int jb = sb.face_id(2, tri);
        REQUIRE(jb >= 0);
        int s_col = sign_of(2, j, tri, jb);
        for (int i = 0; i < sa.num_faces(1); ++i) {
            auto edge = mapped_face(1, i);
            int ib = sb.face_id(1, edge);
            REQUIRE(ib >= 0);
            int s_row = sign_of(1, i, edge, ib);
            CHECK(b2b(ib, jb) == s_col * s_row * b2a(i, j));
        }
    }
}

TEST_CASE("complex JSON round-trip") {
    auto sc = gallery_complex("fig5a");
    auto back = complex_from_json(complex_to_json(sc));
    CHECK(back.dim() == sc.dim());
    for (int k = 0; k <= sc.dim(); ++k) CHECK(back.faces(k) == sc.faces(k));
}

TEST_CASE("complex validation") {
    CHECK_THROWS(OrientedSimplicialComplex({{{0}, {1}}, {{0, 1}}, {{0, 1, 2}}}));
    CHECK_THROWS(OrientedSimplicialComplex({{{0}}, {{0, 0}}}));
    CHECK_THROWS_AS(clique_complex(make_graph(2, {{0, 1}}), 0), std::domain_error);
    auto sc = gallery_complex("fig5a");
    CHECK_THROWS_AS(incidence(sc, 3), std::domain_error);
    CHECK_THROWS_AS(incidence(sc, 0), std::domain_error);
}
