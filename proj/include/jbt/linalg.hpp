#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "jbt/error.hpp"

namespace jbt {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

bool all_finite(const CMatrix& a);

// Canonical eigenvalue order: argument in [0, 2*pi) first, then magnitude.
// Every factorization below sorts with this key so reruns are reproducible.
bool value_less(const Complex& a, const Complex& b);

// Groups already-sorted values whose pairwise distance is at most
// 10 * tol * scale, treating the argument range as circular.
std::vector<std::vector<int>> cluster_values(const std::vector<Complex>& values,
                                             double tol, double scale);

struct SpectralData {
    CMatrix basis;                          // unitary; column j is an eigenvector
    std::vector<Complex> values;            // sorted by value_less
    std::vector<std::vector<int>> clusters; // index groups of equal eigenvalues
};

// Spectral decomposition of a normal matrix: a = basis * diag(values) * basis^*.
// Throws NotNormal when a a^* != a^* a and NoConvergence when the backend fails.
SpectralData normal_eig(const CMatrix& a, double tol = 1e-9);

struct SvdData {
    CMatrix u;      // full unitary
    RVector sigma;  // descending, size min(rows, cols)
    CMatrix v;      // full unitary; a = u * diag(sigma) * v^*
    std::vector<std::vector<int>> clusters; // groups of equal singular values
};

SvdData svd(const CMatrix& a, double tol = 1e-9);

struct RealSpectralData {
    RMatrix q;                    // real orthogonal
    std::vector<Complex> phases;  // s = q * diag(phases) * q^T, sorted
    std::vector<std::vector<int>> clusters;
};

// Diagonalizes a complex symmetric normal matrix by a real orthogonal
// congruence. Used for symmetric unitaries, whose real and imaginary parts
// are commuting real symmetric matrices.
RealSpectralData real_orthogonal_spectral(const CMatrix& s, double tol = 1e-9);

struct YoulaData {
    CMatrix basis;                // unitary b with v = b * blkdiag(phase_j J) * b^T
    std::vector<Complex> phases;  // one per 2x2 block; J = [[0,1],[-1,0]]
};

// Block-diagonalizes an antisymmetric unitary into phase multiples of J.
// The pair representative is the eigenvalue that sorts first; each block
// phase is -i times it, and the last phase is sign-normalized so the product
// of all phases equals the principal square root of det(v).
YoulaData youla_canonical(const CMatrix& v, double tol = 1e-9);

struct SymplecticBasis {
    CMatrix basis;                // unitary a with a^* y a = blkdiag(value_j I_2)
    std::vector<Complex> values;  // one per 2x2 block
    std::vector<std::vector<int>> clusters; // groups of equal block values
};

// Eigenbasis of a unitary y satisfying y^T = conjUnit^{-1} y conjUnit, built
// from pairs (xi, conjUnit * conj(xi)) so the diagonal blocks come out
// scalar. conjUnit must be an antisymmetric unitary.
SymplecticBasis symplectic_eigenbasis(const CMatrix& y, const CMatrix& conjUnit,
                                      double tol = 1e-9);

struct TakagiData {
    CMatrix b;      // unitary with s = b * diag(sigma) * b^T
    RVector sigma;  // nonnegative, descending
};

// Symmetric-congruence singular value form of a complex symmetric matrix.
TakagiData takagi_factor(const CMatrix& s, double tol = 1e-9);

struct AntisymmetricFactorData {
    CMatrix b;                 // unitary with s = b * (blkdiag(sigma_j J) ⊕ 0) * b^T
    std::vector<double> sigma; // one per 2x2 block, descending
};

// Antisymmetric analogue of takagi_factor; singular values pair up.
AntisymmetricFactorData antisymmetric_factor(const CMatrix& s, double tol = 1e-9);

} // namespace jbt
