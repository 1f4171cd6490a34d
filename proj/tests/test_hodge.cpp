#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "hodgewalk/isotest.hpp"

using namespace hodgewalk;

namespace {

Matrix int_pow(const Matrix& m, int r) {
    Matrix out = Matrix::Identity(m.rows(), m.cols());
    for (int i = 0; i < r; ++i) out = out * m;
    return out;
}

/// Multiply polynomials with integer coefficients (test oracle).
std::vector<mpz_class> poly_mul(const std::vector<mpz_class>& a,
                                const std::vector<mpz_class>& b) {
    std::vector<mpz_class> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

std::vector<mpz_class> poly_pow(std::vector<mpz_class> base, int e) {
    std::vector<mpz_class> out{1};
    for (int i = 0; i < e; ++i) out = poly_mul(out, base);
    return out;
}

}  // namespace

TEST_CASE("fig5a published Laplacians") {
    auto sc = gallery_complex("fig5a");
    auto l0 = hodge_laplacian(sc, 0);
    Matrix want0(4, 4);
    want0 << 1, -1, 0, 0,
            -1, 3, -1, -1,
             0, -1, 2, -1,
             0, -1, -1, 2;
    CHECK((l0.matrix - want0).cwiseAbs().maxCoeff() == 0.0);
    CHECK(l0.matrix.rowwise().sum().isZero());

    auto l1 = hodge_laplacian(sc, 1);
    Matrix want1(4, 4);
    want1 << 2, 1, 0, -1,
             1, 3, 0, 0,
             0, 0, 3, 0,
            -1, 0, 0, 3;
    CHECK((l1.matrix - want1).cwiseAbs().maxCoeff() == 0.0);
    CHECK((l1.matrix - l1.down_part - l1.up_part).isZero());
}

TEST_CASE("normalized L1 of a single edge is [1]") {
    auto sc = clique_complex(make_graph(2, {{0, 1}}), 1);
    auto lt = hodge_laplacian(sc, 1, LaplacianVariant::normalized);
    REQUIRE(lt.matrix.rows() == 1);
    CHECK(lt.matrix(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("spectrum of the 6-cycle L0") {
    auto sc = gallery_complex("cycle(6)");
    Spectrum s = spectrum(hodge_laplacian(sc, 0));
    Vector want(6);
    want << 0, 1, 1, 3, 3, 4;  // (l-4)(l-3)^2(l-1)^2 l
    CHECK((s.eigenvalues - want).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("spectrum contract") {
    Matrix id = Matrix::Identity(3, 3);
    Spectrum s = spectrum(id);
    CHECK((s.eigenvalues.array() - 1.0).abs().maxCoeff() < 1e-12);

    Matrix asym(2, 2);
    asym << 0, 1, 0, 0;
    CHECK_THROWS_AS(spectrum(asym), std::invalid_argument);

    // reconstruction and orthonormality on a random symmetric matrix
    std::mt19937_64 rng(4);
    std::normal_distribution<double> gauss;
    Matrix r(8, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) r(i, j) = gauss(rng);
    Matrix sym = r + r.transpose();
    Spectrum ss = spectrum(sym);
    Matrix recon = ss.eigenvectors * ss.eigenvalues.asDiagonal() * ss.eigenvectors.transpose();
    CHECK((recon - sym).cwiseAbs().maxCoeff() < 1e-8);
    CHECK((ss.eigenvectors.transpose() * ss.eigenvectors - Matrix::Identity(8, 8))
              .cwiseAbs()
              .maxCoeff() < 1e-9);
    for (int i = 0; i + 1 < ss.eigenvalues.size(); ++i)
        CHECK(ss.eigenvalues[i] <= ss.eigenvalues[i + 1]);
}

TEST_CASE("betti numbers") {
    CHECK(betti(gallery_complex("cycle(6)"), 1) == 1);
    CHECK(betti(gallery_complex("fig5a"), 1) == 0);

    auto two_tri_unfilled = gallery_complex("two_triangles", 1);
    CHECK(betti(two_tri_unfilled, 0) == 2);
    CHECK(betti(two_tri_unfilled, 1) == 2);

    // filled triangles kill the cycles
    auto two_tri_filled = gallery_complex("two_triangles", 2);
    CHECK(betti(two_tri_filled, 1) == 0);
}

TEST_CASE("betti_0 equals component count") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Graph g = testing::er_with_edges(10, 0.2, 300 + seed);
        auto comp = g.connected_components();
        int nc = *std::max_element(comp.begin(), comp.end()) + 1;
        CHECK(betti(clique_complex(g, 2), 0) == nc);
    }
}

TEST_CASE("hodge decomposition") {
    auto fig5b = gallery_complex("fig5b");
    SUBCASE("the published kernel vector is purely harmonic") {
        Vector u(5);
        u << 0.5, 0.5, 0.5, -0.5, 0.0;
        auto d = hodge_decompose(fig5b, 1, u);
        CHECK(d.gradient.norm() < 1e-9);
        CHECK(d.curl.norm() < 1e-9);
        CHECK((d.harmonic - u).norm() < 1e-9);
    }
    SUBCASE("fig5a has a trivial harmonic space") {
        auto fig5a = gallery_complex("fig5a");
        std::mt19937_64 rng(9);
        std::normal_distribution<double> gauss;
        Vector f(4);
        for (int i = 0; i < 4; ++i) f[i] = gauss(rng);
        auto d = hodge_decompose(fig5a, 1, f);
        CHECK(d.harmonic.norm() < 1e-9);
        CHECK((d.gradient + d.harmonic + d.curl - f).norm() < 1e-9);
    }
    SUBCASE("zero vector decomposes to zeros") {
        auto d = hodge_decompose(fig5b, 1, Vector::Zero(5));
        CHECK(d.gradient.norm() == 0.0);
        CHECK(d.harmonic.norm() == 0.0);
        CHECK(d.curl.norm() == 0.0);
    }
    SUBCASE("components are orthogonal and sum to the input") {
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            Graph g = testing::er_with_edges(9, 0.45, 50 + seed);
            auto sc = clique_complex(g, 2);
            std::mt19937_64 rng(seed);
            std::normal_distribution<double> gauss;
            Vector f(sc.num_faces(1));
            for (int i = 0; i < f.size(); ++i) f[i] = gauss(rng);
            auto d = hodge_decompose(sc, 1, f);
            CHECK((d.gradient + d.harmonic + d.curl - f).norm() < 1e-9);
            CHECK(std::abs(d.gradient.dot(d.harmonic)) < 1e-9);
            CHECK(std::abs(d.gradient.dot(d.curl)) < 1e-9);
            CHECK(std::abs(d.harmonic.dot(d.curl)) < 1e-9);
        }
    }
    SUBCASE("length mismatch is rejected") {
        CHECK_THROWS_AS(hodge_decompose(fig5b, 1, Vector::Zero(3)), std::domain_error);
    }
}

TEST_CASE("spectral kernels") {
    auto path2 = clique_complex(make_graph(2, {{0, 1}}), 1);
    auto l0 = hodge_laplacian(path2, 0);

    SUBCASE("heat with beta 0 is the identity") {
        Matrix k = spectral_kernel(l0, Regularizer::heat(0.0));
        CHECK((k - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("2-node path heat kernel in closed form") {
        double beta = 0.7;
        Matrix k = spectral_kernel(l0, Regularizer::heat(beta));
        double a = 0.5 * (1 + std::exp(-2 * beta));
        double b = 0.5 * (1 - std::exp(-2 * beta));
        Matrix want(2, 2);
        want << a, b, b, a;
        CHECK((k - want).cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("polynomial [0,1] reproduces the operator") {
        auto sc = gallery_complex("fig5a");
        auto op = hodge_laplacian(sc, 1);
        Matrix k = spectral_kernel(op, Regularizer::polynomial({0.0, 1.0}));
        CHECK((k - op.matrix).cwiseAbs().maxCoeff() < 1e-9);
    }
    SUBCASE("regularizer parsing") {
        CHECK(Regularizer::parse("heat:0.5").beta == doctest::Approx(0.5));
        CHECK(Regularizer::parse("polynomial:0,1").coefficients.size() == 2);
        CHECK_THROWS_AS(Regularizer::parse("nope"), ConfigError);
    }
}

TEST_CASE("exact characteristic polynomials") {
    SUBCASE("1x1") {
        IntMatrix m(1, 1);
        m << 7;
        auto c = char_poly_exact(m);
        REQUIRE(c.size() == 2);
        CHECK(c[0] == -7);
        CHECK(c[1] == 1);
    }
    SUBCASE("2x2 with known spectrum") {
        IntMatrix m(2, 2);
        m << 2, 1, 1, 2;  // eigenvalues 1, 3
        auto c = char_poly_exact(m);
        auto want = poly_mul({-1, 1}, {-3, 1});
        CHECK(c == want);
    }
    SUBCASE("empty matrix gives the constant polynomial 1") {
        auto c = char_poly_exact(IntMatrix(0, 0));
        REQUIRE(c.size() == 1);
        CHECK(c[0] == 1);
    }
    SUBCASE("diagonal integer matrix matches the product oracle") {
        IntMatrix m = IntMatrix::Zero(5, 5);
        std::vector<long long> diag{-2, 0, 3, 3, 11};
        for (int i = 0; i < 5; ++i) m(i, i) = diag[i];
        std::vector<mpz_class> want{1};
        for (long long d : diag)
            want = poly_mul(want, {mpz_class(static_cast<long>(-d)), mpz_class(1)});
        CHECK(char_poly_exact(m) == want);
    }
    SUBCASE("invariant under similarity by permutation") {
        Graph g = testing::er_with_edges(7, 0.5, 77);
        auto sc = clique_complex(g, 2);
        auto l1 = hodge_laplacian(sc, 1).matrix;
        auto ca = char_poly_exact(l1);
        auto perm = testing::random_permutation(static_cast<int>(l1.rows()), 5);
        Matrix p = Matrix::Zero(l1.rows(), l1.rows());
        for (size_t i = 0; i < perm.size(); ++i) p(static_cast<int>(i), perm[i]) = 1.0;
        CHECK(char_poly_exact(Matrix(p * l1 * p.transpose())) == ca);
    }
    SUBCASE("non-integer input is rejected") {
        Matrix m(1, 1);
        m << 0.5;
        CHECK_THROWS_AS(char_poly_exact(m), std::domain_error);
    }
    SUBCASE("two-triangles L0: derived spectrum {0,0,3,3,3,3}") {
        auto sc = gallery_complex("two_triangles");
        auto got = char_poly_exact(hodge_laplacian(sc, 0).matrix);
        auto want = poly_mul(poly_pow({0, 1}, 2), poly_pow({-3, 1}, 4));
        CHECK(got == want);
    }
}

TEST_CASE("algebraic properties on random complexes") {
    int checked_bridge = 0;
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        Graph g = testing::er_with_edges(9, 0.4, 900 + seed);
        auto sc = clique_complex(g, 3);
        for (int k = 0; k <= sc.dim(); ++k) {
            if (sc.num_faces(k) == 0) continue;
            auto op = hodge_laplacian(sc, k);
            // symmetric PSD
            CHECK((op.matrix - op.matrix.transpose()).isZero());
            std::mt19937_64 rng(seed * 31 + k);
            std::normal_distribution<double> gauss;
            for (int t = 0; t < 3; ++t) {
                Vector x(op.matrix.rows());
                for (int i = 0; i < x.size(); ++i) x[i] = gauss(rng);
                CHECK(x.dot(op.matrix * x) >= -1e-9);
            }
            // L^r = L_down^r + L_up^r, integer-exact
            for (int r = 1; r <= 4; ++r) {
                Matrix lhs = int_pow(op.matrix, r);
                Matrix rhs = int_pow(op.down_part, r) + int_pow(op.up_part, r);
                CHECK((lhs - rhs).cwiseAbs().maxCoeff() == 0.0);
            }
            // nonzero spectra of L_{k,up} and L_{k+1,down} agree
            if (k + 1 <= sc.dim() && sc.num_faces(k + 1) > 0) {
                Spectrum up = spectrum(op.up_part);
                Spectrum down = spectrum(hodge_laplacian(sc, k + 1).down_part);
                std::vector<double> nz_up, nz_down;
                for (int i = 0; i < up.eigenvalues.size(); ++i)
                    if (up.eigenvalues[i] > 1e-8) nz_up.push_back(up.eigenvalues[i]);
                for (int i = 0; i < down.eigenvalues.size(); ++i)
                    if (down.eigenvalues[i] > 1e-8) nz_down.push_back(down.eigenvalues[i]);
                REQUIRE(nz_up.size() == nz_down.size());
                for (size_t i = 0; i < nz_up.size(); ++i)
                    CHECK(nz_up[i] == doctest::Approx(nz_down[i]).epsilon(1e-8));
                ++checked_bridge;
            }
        }
        // L1 has at least as many nonzero eigenvalues as L0
        if (sc.num_faces(1) > 0) {
            Spectrum s0 = spectrum(hodge_laplacian(sc, 0));
            Spectrum s1 = spectrum(hodge_laplacian(sc, 1));
            int nz0 = static_cast<int>(s0.eigenvalues.size()) - s0.zero_count();
            int nz1 = static_cast<int>(s1.eigenvalues.size()) - s1.zero_count();
            CHECK(nz1 >= nz0);
        }
    }
    CHECK(checked_bridge > 0);
}

TEST_CASE("normalized L1 eigenvalues lie in [0, 3]") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Graph g = testing::er_with_edges(10, 0.45, 40 + seed);
        auto sc = clique_complex(g, 2);
        auto lt = hodge_laplacian(sc, 1, LaplacianVariant::normalized);
        // Lt is similar to a symmetric matrix via D2^(1/2)
        Vector d2 = coface_weights(sc, 1);
        Vector half = d2.cwiseSqrt();
        Matrix sym = half.cwiseInverse().asDiagonal() * lt.matrix * half.asDiagonal();
        Spectrum s = spectrum(Matrix((sym + sym.transpose()) / 2));
        CHECK(s.eigenvalues.minCoeff() > -1e-8);
        CHECK(s.eigenvalues.maxCoeff() < 3.0 + 1e-8);
    }
}

TEST_CASE("spectrum CSV is well formed") {
    auto sc = gallery_complex("fig5b");
    std::string csv = spectrum_to_csv(spectrum(hodge_laplacian(sc, 1)));
    CHECK(csv.rfind("eigenvalue,v0,v1,v2,v3,v4\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
}
