#include "hodgewalk/hodge.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>

#include "hodgewalk/io.hpp"

namespace hodgewalk {

Vector coface_weights(const OrientedSimplicialComplex& sc, int k) {
    int nk = sc.num_faces(k);
    Vector w(nk);
    for (int i = 0; i < nk; ++i) w[i] = std::max(sc.up_degree(k, i), 1);
    return w;
}

HodgeOperator hodge_laplacian(const OrientedSimplicialComplex& sc, int k,
                              LaplacianVariant variant) {
    if (k < 0 || k > sc.dim())
        throw std::domain_error("laplacian order " + std::to_string(k) + " out of range");
    int nk = sc.num_faces(k);
    HodgeOperator op;
    op.k = k;
    op.variant = variant;
    op.down_part = Matrix::Zero(nk, nk);
    op.up_part = Matrix::Zero(nk, nk);

    Matrix bk, bk1;
    if (k >= 1 && nk > 0) bk = incidence(sc, k).dense();
    bool have_up = k + 1 <= sc.dim() && sc.num_faces(k + 1) > 0;
    if (have_up) bk1 = incidence(sc, k + 1).dense();

    if (variant == LaplacianVariant::standard) {
        if (bk.size() > 0) op.down_part = bk.transpose() * bk;
        if (have_up) op.up_part = bk1 * bk1.transpose();
    } else {
        // D_{k+1} = max(diag(|B_{k+1}| 1), I); D_k = (k+1) diag(|B_k| D_{k+1} 1);
        // D_{k+2} = I/(k+2).  The k=1 case is the normative normalized form.
        Vector dk1 = coface_weights(sc, k);
        if (bk.size() > 0) {
            Vector dk = (k + 1) * (bk.cwiseAbs() * dk1);
            Vector inv_dk = dk.unaryExpr([](double x) { return x > 0 ? 1.0 / x : 0.0; });
            op.down_part =
                dk1.asDiagonal() * (bk.transpose() * inv_dk.asDiagonal() * bk);
        }
        if (have_up) {
            op.up_part = (bk1 * bk1.transpose() / double(k + 2)) *
                         dk1.cwiseInverse().asDiagonal();
        }
    }
    op.matrix = op.down_part + op.up_part;
    return op;
}

int Spectrum::zero_count() const {
    int c = 0;
    for (int i = 0; i < eigenvalues.size(); ++i)
        if (std::abs(eigenvalues[i]) <= zero_tol) ++c;
    return c;
}

Spectrum spectrum(const Matrix& m, std::optional<double> zero_tol) {
    if (m.rows() != m.cols()) throw std::invalid_argument("spectrum needs a square matrix");
    if (m.size() > 0 && (m - m.transpose()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("spectrum requires a symmetric matrix (within 1e-10)");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigendecomposition failed to converge");
    Spectrum s;
    s.eigenvalues = solver.eigenvalues();
    s.eigenvectors = solver.eigenvectors();
    double lmax = s.eigenvalues.size() ? s.eigenvalues.cwiseAbs().maxCoeff() : 0.0;
    s.zero_tol = zero_tol.value_or(std::max(1e-9, 1e-8 * lmax));
    return s;
}

Spectrum spectrum(const HodgeOperator& op, std::optional<double> zero_tol) {
    return spectrum(op.matrix, zero_tol);
}

int betti(const OrientedSimplicialComplex& sc, int k) {
    if (sc.num_faces(k) == 0) return 0;
    return spectrum(hodge_laplacian(sc, k)).zero_count();
}

HodgeDecomposition hodge_decompose(const OrientedSimplicialComplex& sc, int k,
                                   const Vector& cochain) {
    int nk = sc.num_faces(k);
    if (cochain.size() != nk)
        throw std::domain_error("cochain length " + std::to_string(cochain.size()) +
                                " does not match " + std::to_string(nk) + " k-simplices");
    HodgeDecomposition d;
    d.gradient = Vector::Zero(nk);
    d.curl = Vector::Zero(nk);
    if (k >= 1 && nk > 0) {
        Matrix bkT = incidence(sc, k).dense().transpose();  // n_k x n_{k-1}
        d.gradient = bkT * bkT.completeOrthogonalDecomposition().solve(cochain);
    }
    if (k + 1 <= sc.dim() && sc.num_faces(k + 1) > 0) {
        Matrix bk1 = incidence(sc, k + 1).dense();
        d.curl = bk1 * bk1.completeOrthogonalDecomposition().solve(cochain);
    }
    d.harmonic = cochain - d.gradient - d.curl;
    return d;
}

Regularizer Regularizer::heat(double beta) {
    Regularizer r;
    r.kind = Kind::heat;
    r.beta = beta;
    return r;
}

Regularizer Regularizer::inverse_shifted(double epsilon) {
    Regularizer r;
    r.kind = Kind::inverse_shifted;
    r.epsilon = epsilon;
    return r;
}

Regularizer Regularizer::polynomial(std::vector<double> coefficients) {
    Regularizer r;
    r.kind = Kind::polynomial;
    r.coefficients = std::move(coefficients);
    return r;
}

Regularizer Regularizer::parse(const std::string& text) {
    auto colon = text.find(':');
    std::string name = text.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (name == "heat") return heat(args.empty() ? 1.0 : std::stod(args));
    if (name == "inverse_shifted") return inverse_shifted(args.empty() ? 1e-6 : std::stod(args));
    if (name == "polynomial") {
        std::vector<double> coeffs;
        std::istringstream in(args);
        std::string tok;
        while (std::getline(in, tok, ',')) coeffs.push_back(std::stod(tok));
        if (coeffs.empty()) throw ConfigError("polynomial regularizer needs coefficients");
        return polynomial(std::move(coeffs));
    }
    throw ConfigError("unknown regularizer '" + name +
                      "' (expected heat, inverse_shifted or polynomial)");
}

Matrix spectral_kernel(const HodgeOperator& op, const Regularizer& r) {
    Spectrum s = spectrum(op);
    Vector weights(s.eigenvalues.size());
    for (int i = 0; i < s.eigenvalues.size(); ++i) {
        double l = s.eigenvalues[i];
        switch (r.kind) {
            case Regularizer::Kind::heat:
                weights[i] = std::exp(-r.beta * l);
                break;
            case Regularizer::Kind::inverse_shifted:
                weights[i] = 1.0 / (l + r.epsilon);
                break;
            case Regularizer::Kind::polynomial: {
                double acc = 0.0, pow = 1.0;
                for (double c : r.coefficients) {
                    acc += c * pow;
                    pow *= l;
                }
                weights[i] = acc;
                break;
            }
        }
    }
    return s.eigenvectors * weights.asDiagonal() * s.eigenvectors.transpose();
}

std::vector<mpz_class> char_poly_exact(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::domain_error("characteristic polynomial needs a square matrix");
    int n = static_cast<int>(m.rows());
    using ZMat = std::vector<std::vector<mpz_class>>;
    auto mat = [&](int rows, int cols) { return ZMat(rows, std::vector<mpz_class>(cols, 0)); };

    std::vector<mpz_class> coeffs(n + 1, 0);
    coeffs[n] = 1;
    if (n == 0) return coeffs;

    ZMat a = mat(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = static_cast<long>(m(i, j));

    // Faddeev-LeVerrier: the divisions by k are exact over the integers.
    ZMat b = mat(n, n);
    for (int i = 0; i < n; ++i) b[i][i] = 1;
    for (int k = 1; k <= n; ++k) {
        ZMat ab = mat(n, n);
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (a[i][l] == 0) continue;
                for (int j = 0; j < n; ++j) ab[i][j] += a[i][l] * b[l][j];
            }
        mpz_class trace = 0;
        for (int i = 0; i < n; ++i) trace += ab[i][i];
        mpz_class c = -trace / k;
        coeffs[n - k] = c;
        b = std::move(ab);
        for (int i = 0; i < n; ++i) b[i][i] += c;
    }
    return coeffs;
}

std::vector<mpz_class> char_poly_exact(const Matrix& m) {
    IntMatrix im(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            double r = std::round(m(i, j));
            if (std::abs(m(i, j) - r) > 1e-9)
                throw std::domain_error("char_poly_exact requires integer entries");
            im(i, j) = static_cast<long long>(r);
        }
    return char_poly_exact(im);
}

std::string spectrum_to_csv(const Spectrum& s) {
    std::ostringstream out;
    out << "eigenvalue";
    for (int i = 0; i < s.eigenvectors.rows(); ++i) out << ",v" << i;
    out << "\n";
    for (int i = 0; i < s.eigenvalues.size(); ++i) {
        out << format_double(s.eigenvalues[i]);
        for (int r = 0; r < s.eigenvectors.rows(); ++r)
            out << "," << format_double(s.eigenvectors(r, i));
        out << "\n";
    }
    return out.str();
}

}  // namespace hodgewalk
