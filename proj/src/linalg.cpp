#include "jbt/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numbers>

namespace jbt {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double circular_arg(const Complex& z) {
    double a = std::arg(z);
    if (a < 0) a += kTwoPi;
    if (a >= kTwoPi) a = 0.0;
    return a;
}

// Union-find over value indices.
struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

CMatrix block_j_phases(const std::vector<Complex>& phases) {
    const int n = 2 * static_cast<int>(phases.size());
    CMatrix b = CMatrix::Zero(n, n);
    for (int t = 0; t < static_cast<int>(phases.size()); ++t) {
        b(2 * t, 2 * t + 1) = phases[t];
        b(2 * t + 1, 2 * t) = -phases[t];
    }
    return b;
}

void check_square(const CMatrix& a, const char* who) {
    if (a.rows() != a.cols())
        throw Error(Errc::SystemMismatch, std::string(who) + " requires a square matrix");
    if (!all_finite(a))
        throw Error(Errc::MembershipViolation, std::string(who) + ": non-finite entries");
}

} // namespace

bool all_finite(const CMatrix& a) { return a.allFinite(); }

bool value_less(const Complex& a, const Complex& b) {
    const double aa = circular_arg(a);
    const double ab = circular_arg(b);
    if (aa != ab) return aa < ab;
    return std::abs(a) < std::abs(b);
}

std::vector<std::vector<int>> cluster_values(const std::vector<Complex>& values,
                                             double tol, double scale) {
    const int n = static_cast<int>(values.size());
    const double thr = 10.0 * tol * std::max(1.0, scale);
    DisjointSets ds(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(values[i] - values[j]) <= thr) ds.unite(i, j);
    std::vector<std::vector<int>> groups;
    std::vector<int> where(n, -1);
    for (int i = 0; i < n; ++i) {
        int r = ds.find(i);
        if (where[r] < 0) {
            where[r] = static_cast<int>(groups.size());
            groups.emplace_back();
        }
        groups[where[r]].push_back(i);
    }
    return groups;
}

SpectralData normal_eig(const CMatrix& a, double tol) {
    check_square(a, "normal_eig");
    const int n = static_cast<int>(a.rows());
    const double scale = std::max(1.0, a.norm());
    const double comm = (a * a.adjoint() - a.adjoint() * a).norm();
    if (comm > 10.0 * tol * scale * scale)
        throw Error(Errc::NotNormal, "commutator norm " + std::to_string(comm));

    Eigen::ComplexSchur<CMatrix> schur(a, true);
    if (schur.info() != Eigen::Success)
        throw Error(Errc::NoConvergence, "schur iteration failed");

    std::vector<Complex> values(n);
    for (int i = 0; i < n; ++i) values[i] = schur.matrixT()(i, i);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int i, int j) { return value_less(values[i], values[j]); });

    SpectralData out;
    out.basis.resize(n, n);
    out.values.resize(n);
    for (int i = 0; i < n; ++i) {
        out.values[i] = values[perm[i]];
        out.basis.col(i) = schur.matrixU().col(perm[i]);
    }
    out.clusters = cluster_values(out.values, tol, scale);

    CMatrix lam = CMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) lam(i, i) = out.values[i];
    const double res = (a - out.basis * lam * out.basis.adjoint()).norm();
    if (res > 10.0 * tol * scale)
        throw Error(Errc::NotNormal, "reconstruction residual " + std::to_string(res));
    return out;
}

SvdData svd(const CMatrix& a, double tol) {
    if (!all_finite(a))
        throw Error(Errc::MembershipViolation, "svd: non-finite entries");
    Eigen::JacobiSVD<CMatrix> jsvd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    SvdData out;
    out.u = jsvd.matrixU();
    out.v = jsvd.matrixV();
    out.sigma = jsvd.singularValues();
    const double top = out.sigma.size() ? out.sigma(0) : 0.0;
    std::vector<Complex> vals(out.sigma.size());
    for (int i = 0; i < out.sigma.size(); ++i) vals[i] = out.sigma(i);
    out.clusters = cluster_values(vals, tol, std::max(1.0, top));
    return out;
}

RealSpectralData real_orthogonal_spectral(const CMatrix& s, double tol) {
    check_square(s, "real_orthogonal_spectral");
    const int n = static_cast<int>(s.rows());
    const double scale = std::max(1.0, s.norm());
    if ((s - s.transpose()).norm() > 10.0 * tol * scale)
        throw Error(Errc::NotSymmetricUnitary, "matrix is not symmetric");
    if ((s.adjoint() * s - CMatrix::Identity(n, n)).norm() > 10.0 * tol * scale)
        throw Error(Errc::NotSymmetricUnitary, "matrix is not unitary");
    const RMatrix a = s.real();
    const RMatrix b = s.imag();
    if ((a * b - b * a).norm() > 10.0 * tol * scale * scale)
        throw Error(Errc::NotSymmetricUnitary, "real and imaginary parts do not commute");

    Eigen::SelfAdjointEigenSolver<RMatrix> esa(a);
    if (esa.info() != Eigen::Success)
        throw Error(Errc::NoConvergence, "symmetric eigensolver failed");
    RVector w = esa.eigenvalues();
    RMatrix q = esa.eigenvectors();
    // descending
    for (int i = 0; i < n / 2; ++i) {
        std::swap(w(i), w(n - 1 - i));
        q.col(i).swap(q.col(n - 1 - i));
    }

    RMatrix qout(n, n);
    std::vector<Complex> phases(n);
    const double thrA = std::max(10.0 * tol, 1e-8) * std::max(1.0, a.norm());
    int i = 0;
    while (i < n) {
        int j = i;
        while (j < n && std::abs(w(j) - w(i)) <= thrA) ++j;
        const int m = j - i;
        RMatrix qc = q.middleCols(i, m);
        RMatrix bc = qc.transpose() * b * qc;
        Eigen::SelfAdjointEigenSolver<RMatrix> esb(bc);
        if (esb.info() != Eigen::Success)
            throw Error(Errc::NoConvergence, "nested eigensolver failed");
        qout.middleCols(i, m) = qc * esb.eigenvectors();
        for (int t = 0; t < m; ++t) {
            // Rayleigh quotients per column; the cluster representative can
            // drift the modulus off the unit circle by the merge threshold.
            const RVector col = qout.col(i + t);
            Complex ph(col.dot(a * col), col.dot(b * col));
            ph /= std::abs(ph);
            phases[i + t] = ph;
        }
        i = j;
    }

    std::vector<int> perm(n);
    for (int t = 0; t < n; ++t) perm[t] = t;
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int x, int y) { return value_less(phases[x], phases[y]); });
    RealSpectralData out;
    out.q.resize(n, n);
    out.phases.resize(n);
    for (int t = 0; t < n; ++t) {
        out.phases[t] = phases[perm[t]];
        out.q.col(t) = qout.col(perm[t]);
    }
    out.clusters = cluster_values(out.phases, tol, scale);

    CMatrix lam = CMatrix::Zero(n, n);
    for (int t = 0; t < n; ++t) lam(t, t) = out.phases[t];
    const double res = (out.q.cast<Complex>() * lam * out.q.transpose().cast<Complex>() - s).norm();
    if (res > 100.0 * tol * scale)
        throw Error(Errc::NoConvergence, "congruence residual " + std::to_string(res));
    return out;
}

YoulaData youla_canonical(const CMatrix& v, double tol) {
    check_square(v, "youla_canonical");
    const int n = static_cast<int>(v.rows());
    if (n % 2 != 0)
        throw Error(Errc::OddDimension, "antisymmetric unitary needs even dimension");
    const double scale = std::max(1.0, v.norm());
    if ((v + v.transpose()).norm() > 10.0 * tol * scale)
        throw Error(Errc::NotAntisymmetricUnitary, "matrix is not antisymmetric");
    if ((v.adjoint() * v - CMatrix::Identity(n, n)).norm() > 10.0 * tol)
        throw Error(Errc::NotAntisymmetricUnitary, "matrix is not unitary");

    const SpectralData sd = normal_eig(v, tol);
    const double thr = 10.0 * tol * scale;
    const int nc = static_cast<int>(sd.clusters.size());
    std::vector<bool> consumed(nc, false);
    YoulaData out;
    out.basis.resize(n, n);
    int col = 0;
    for (int ci = 0; ci < nc; ++ci) {
        if (consumed[ci]) continue;
        const Complex rep = sd.values[sd.clusters[ci][0]];
        int partner = -1;
        for (int cj = 0; cj < nc; ++cj) {
            if (cj == ci || consumed[cj]) continue;
            if (std::abs(sd.values[sd.clusters[cj][0]] + rep) <= thr) {
                partner = cj;
                break;
            }
        }
        if (partner < 0 || sd.clusters[partner].size() != sd.clusters[ci].size())
            throw Error(Errc::NotAntisymmetricUnitary,
                        "eigenvalues do not pair up under negation");
        consumed[ci] = consumed[partner] = true;
        for (int idx : sd.clusters[ci]) {
            const CVector x = sd.basis.col(idx);
            out.basis.col(col++) = x.conjugate();
            out.basis.col(col++) = Complex(0, -1) * x;
            out.phases.push_back(Complex(0, -1) * rep);
        }
    }

    const Complex target = std::sqrt(v.determinant());
    Complex prod(1, 0);
    for (const Complex& ph : out.phases) prod *= ph;
    if (std::abs(prod - target) > std::abs(prod + target)) {
        out.phases.back() *= -1.0;
        out.basis.col(n - 1) *= -1.0;
    }

    const double ures = (out.basis.adjoint() * out.basis - CMatrix::Identity(n, n)).norm();
    const double rres = (out.basis * block_j_phases(out.phases) * out.basis.transpose() - v).norm();
    if (ures > 10.0 * tol || rres > 100.0 * tol * scale)
        throw Error(Errc::NoConvergence, "pair basis residual " + std::to_string(rres));
    return out;
}

SymplecticBasis symplectic_eigenbasis(const CMatrix& y, const CMatrix& conjUnit,
                                      double tol) {
    check_square(y, "symplectic_eigenbasis");
    const int n = static_cast<int>(y.rows());
    if (conjUnit.rows() != n || conjUnit.cols() != n)
        throw Error(Errc::SystemMismatch, "conjugation unit has the wrong shape");
    if (n % 2 != 0) throw Error(Errc::OddDimension, "even dimension required");
    if ((conjUnit + conjUnit.transpose()).norm() > 10.0 * tol ||
        (conjUnit.adjoint() * conjUnit - CMatrix::Identity(n, n)).norm() > 10.0 * tol)
        throw Error(Errc::NotAntisymmetricUnitary, "conjugation unit invalid");
    const double scale = std::max(1.0, y.norm());
    if ((y.adjoint() * y - CMatrix::Identity(n, n)).norm() > 10.0 * tol)
        throw Error(Errc::NotUnitary, "matrix is not unitary");
    const CMatrix twisted = conjUnit.adjoint() * y * conjUnit;
    if ((y.transpose() - twisted).norm() > 10.0 * tol * scale)
        throw Error(Errc::NotInEmbeddedAlgebra,
                    "matrix does not commute with the quaternionic conjugation");

    const SpectralData sd = normal_eig(y, tol);
    SymplecticBasis out;
    out.basis.resize(n, n);
    int col = 0;
    for (int i = 0; i < n; ++i) {
        CVector xi = sd.basis.col(i);
        for (int c = 0; c < col; ++c) {
            const CVector bc = out.basis.col(c);
            xi -= bc * bc.dot(xi);
        }
        const double nx = xi.norm();
        if (nx < 0.3) continue;  // absorbed by an earlier sigma-partner
        xi /= nx;
        CVector sxi = conjUnit * xi.conjugate();
        for (int c = 0; c < col; ++c) {
            const CVector bc = out.basis.col(c);
            sxi -= bc * bc.dot(sxi);
        }
        sxi -= xi * xi.dot(sxi);
        if (sxi.norm() < 0.7)
            throw Error(Errc::DegenerateBasis, "conjugation partner collapsed");
        sxi /= sxi.norm();
        out.basis.col(col++) = xi;
        out.basis.col(col++) = sxi;
        out.values.push_back(sd.values[i]);
    }
    if (col != n)
        throw Error(Errc::DegenerateBasis, "pairing did not exhaust the space");
    out.clusters = cluster_values(out.values, tol, scale);

    CMatrix blocks = CMatrix::Zero(n, n);
    for (int t = 0; t < static_cast<int>(out.values.size()); ++t) {
        blocks(2 * t, 2 * t) = out.values[t];
        blocks(2 * t + 1, 2 * t + 1) = out.values[t];
    }
    const double ures = (out.basis.adjoint() * out.basis - CMatrix::Identity(n, n)).norm();
    const double bres = (out.basis.adjoint() * y * out.basis - blocks).norm();
    if (ures > 10.0 * tol || bres > 100.0 * tol * scale)
        throw Error(Errc::NoConvergence, "block-scalar residual " + std::to_string(bres));
    return out;
}

TakagiData takagi_factor(const CMatrix& s, double tol) {
    check_square(s, "takagi_factor");
    const int n = static_cast<int>(s.rows());
    const double scale = std::max(1.0, s.norm());
    if ((s - s.transpose()).norm() > 10.0 * tol * scale)
        throw Error(Errc::MembershipViolation, "matrix is not symmetric");

    const SvdData sv = svd(s, tol);
    const double zeroThr = std::max(10.0 * tol, 1e-10) * std::max(1.0, sv.sigma.size() ? sv.sigma(0) : 0.0);
    TakagiData out;
    out.b.resize(n, n);
    out.sigma = sv.sigma;
    for (const auto& cluster : sv.clusters) {
        const int i = cluster.front();
        const int m = static_cast<int>(cluster.size());
        const CMatrix uc = sv.u.middleCols(i, m);
        const CMatrix vc = sv.v.middleCols(i, m);
        if (sv.sigma(i) > zeroThr) {
            const CMatrix mix = uc.adjoint() * vc.conjugate();
            if ((mix - mix.transpose()).norm() > 100.0 * tol ||
                (mix.adjoint() * mix - CMatrix::Identity(m, m)).norm() > 100.0 * tol)
                throw Error(Errc::NotSymmetricUnitary, "cluster mixer is not symmetric unitary");
            const RealSpectralData rs = real_orthogonal_spectral(mix, tol);
            CMatrix root = CMatrix::Zero(m, m);
            for (int t = 0; t < m; ++t) root(t, t) = std::sqrt(rs.phases[t]);
            const CMatrix qc = rs.q.cast<Complex>();
            out.b.middleCols(i, m) = uc * (qc * root * qc.transpose());
        } else {
            out.b.middleCols(i, m) = uc;
        }
    }

    CMatrix sig = CMatrix::Zero(n, n);
    for (int t = 0; t < n; ++t) sig(t, t) = out.sigma(t);
    const double res = (out.b * sig * out.b.transpose() - s).norm();
    const double ures = (out.b.adjoint() * out.b - CMatrix::Identity(n, n)).norm();
    if (res > 100.0 * tol * scale || ures > 100.0 * tol)
        throw Error(Errc::NoConvergence, "takagi residual " + std::to_string(res));
    return out;
}

AntisymmetricFactorData antisymmetric_factor(const CMatrix& s, double tol) {
    check_square(s, "antisymmetric_factor");
    const int n = static_cast<int>(s.rows());
    const double scale = std::max(1.0, s.norm());
    if ((s + s.transpose()).norm() > 10.0 * tol * scale)
        throw Error(Errc::MembershipViolation, "matrix is not antisymmetric");

    const SvdData sv = svd(s, tol);
    const double zeroThr = std::max(10.0 * tol, 1e-10) * std::max(1.0, sv.sigma.size() ? sv.sigma(0) : 0.0);
    AntisymmetricFactorData out;
    out.b.resize(n, n);
    int col = 0;
    for (const auto& cluster : sv.clusters) {
        const int i = cluster.front();
        const int m = static_cast<int>(cluster.size());
        if (sv.sigma(i) <= zeroThr) continue;
        if (m % 2 != 0)
            throw Error(Errc::DegenerateBasis, "odd singular cluster in antisymmetric matrix");
        const CMatrix uc = sv.u.middleCols(i, m);
        const CMatrix vc = sv.v.middleCols(i, m);
        const CMatrix mix = uc.adjoint() * vc.conjugate();
        const YoulaData yd = youla_canonical(mix, tol);
        CMatrix d = CMatrix::Identity(m, m);
        for (int t = 0; t < m / 2; ++t) d(2 * t + 1, 2 * t + 1) = -yd.phases[t];
        out.b.middleCols(col, m) = uc * yd.basis * d;
        for (int t = 0; t < m / 2; ++t) out.sigma.push_back(sv.sigma(i));
        col += m;
    }
    for (const auto& cluster : sv.clusters) {
        const int i = cluster.front();
        const int m = static_cast<int>(cluster.size());
        if (sv.sigma(i) > zeroThr) continue;
        out.b.middleCols(col, m) = sv.u.middleCols(i, m);
        col += m;
    }
    if (col != n)
        throw Error(Errc::NoConvergence, "column bookkeeping failed");

    CMatrix blocks = CMatrix::Zero(n, n);
    for (int t = 0; t < static_cast<int>(out.sigma.size()); ++t) {
        blocks(2 * t, 2 * t + 1) = out.sigma[t];
        blocks(2 * t + 1, 2 * t) = -out.sigma[t];
    }
    const double res = (out.b * blocks * out.b.transpose() - s).norm();
    const double ures = (out.b.adjoint() * out.b - CMatrix::Identity(n, n)).norm();
    if (res > 100.0 * tol * scale || ures > 100.0 * tol)
        throw Error(Errc::NoConvergence, "antisymmetric factor residual " + std::to_string(res));
    return out;
}

} // namespace jbt
