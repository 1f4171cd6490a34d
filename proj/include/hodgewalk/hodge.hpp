#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "hodgewalk/complex.hpp"

namespace hodgewalk {

enum class LaplacianVariant { standard, normalized };

/// Hodge k-Laplacian with its down (B_k^T B_k) and up (B_{k+1} B_{k+1}^T)
/// summands kept separately.  The standard variant is integer-valued and
/// symmetric PSD; the normalized variant follows the degree-weighted form
/// whose lifted interpretation is a k-simplex random walk.
struct HodgeOperator {
    int k = 0;
    LaplacianVariant variant = LaplacianVariant::standard;
    Matrix matrix;
    Matrix down_part;
    Matrix up_part;
};

HodgeOperator hodge_laplacian(const OrientedSimplicialComplex& sc, int k,
                              LaplacianVariant variant = LaplacianVariant::standard);

/// Diagonal of D_{k+1} = max(diag(|B_{k+1}| 1), I): per k-simplex, its number
/// of cofaces floored at one.  Shared by the normalized Laplacians and the
/// lifted walks.
Vector coface_weights(const OrientedSimplicialComplex& sc, int k);

/// Eigendecomposition of a symmetric operator.  Eigenvalues ascend, columns
/// of eigenvectors are orthonormal, zero_tol classifies zero eigenvalues.
struct Spectrum {
    Vector eigenvalues;
    Matrix eigenvectors;
    double zero_tol = 0.0;

    int zero_count() const;
};

/// Default zero_tol is max(1e-9, 1e-8 * lambda_max).  Throws if the matrix is
/// not symmetric within 1e-10.
Spectrum spectrum(const Matrix& m, std::optional<double> zero_tol = std::nullopt);
Spectrum spectrum(const HodgeOperator& op, std::optional<double> zero_tol = std::nullopt);

/// k-th Betti number: multiplicity of (near-)zero eigenvalues of standard L_k.
int betti(const OrientedSimplicialComplex& sc, int k);

/// Orthogonal Hodge decomposition of a k-cochain: gradient lies in im(B_k^T),
/// curl in im(B_{k+1}), harmonic in ker(L_k); the three sum to the input.
struct HodgeDecomposition {
    Vector gradient;
    Vector harmonic;
    Vector curl;
};

HodgeDecomposition hodge_decompose(const OrientedSimplicialComplex& sc, int k,
                                   const Vector& cochain);

/// Spectral regularizer r applied to the eigenvalues: K_r = sum r(l_i) u_i u_i^T.
struct Regularizer {
    enum class Kind { heat, inverse_shifted, polynomial } kind = Kind::heat;
    double beta = 1.0;                // heat: r(l) = exp(-beta*l)
    double epsilon = 1e-6;            // inverse_shifted: r(l) = 1/(l+eps)
    std::vector<double> coefficients; // polynomial: r(l) = sum c_j l^j

    static Regularizer heat(double beta);
    static Regularizer inverse_shifted(double epsilon);
    static Regularizer polynomial(std::vector<double> coefficients);
    /// Parse "heat:0.5", "inverse_shifted:1e-6", "polynomial:0,1,2".
    static Regularizer parse(const std::string& text);
};

Matrix spectral_kernel(const HodgeOperator& op, const Regularizer& r);

/// Exact characteristic polynomial det(lambda*I - M) of an integer matrix,
/// coefficients ascending by degree, leading coefficient 1.  Uses the
/// fraction-free Faddeev-LeVerrier recurrence over arbitrary-precision
/// integers; floating spectra are never involved.
std::vector<mpz_class> char_poly_exact(const IntMatrix& m);

/// Convenience overload; throws std::domain_error unless every entry is
/// integral (within 1e-9).
std::vector<mpz_class> char_poly_exact(const Matrix& m);

/// CSV export: one row per eigenpair, eigenvalue first then components.
std::string spectrum_to_csv(const Spectrum& s);

}  // namespace hodgewalk
