#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "jbt/linalg.hpp"

using namespace jbt;

namespace {

const Complex i1(0.0, 1.0);

CMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    CMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

CMatrix blkdiag2(const CMatrix& a, const CMatrix& b) {
    CMatrix m = CMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    m.topLeftCorner(a.rows(), a.cols()) = a;
    m.bottomRightCorner(b.rows(), b.cols()) = b;
    return m;
}

const CMatrix J2 = mat2(0, 1, -1, 0);
const CMatrix NEG_SWAP = mat2(0, -1, -1, 0);
const CMatrix NILP = mat2(0, -1, 0, 0);

double unitary_defect(const CMatrix& a) {
    return (a.adjoint() * a - CMatrix::Identity(a.cols(), a.cols())).norm();
}

} // namespace

TEST_CASE("value ordering is argument-first") {
    CHECK(value_less(Complex(1, 0), Complex(-1, 0)));
    CHECK(value_less(Complex(0, 1), Complex(-1, 0)));
    CHECK(value_less(Complex(1, 0), Complex(2, 0)));
    CHECK_FALSE(value_less(Complex(0, -1), Complex(0, 1)));
}

TEST_CASE("cluster_values groups near-equal entries") {
    const std::vector<Complex> vals{Complex(1, 0), Complex(1, 1e-12),
                                    Complex(0, 1)};
    const auto groups = cluster_values(vals, 1e-9, 1.0);
    REQUIRE(groups.size() == 2);
    CHECK(groups[0].size() == 2);
    CHECK(groups[1].size() == 1);
}

TEST_CASE("normal_eig on the negated swap") {
    const SpectralData sd = normal_eig(NEG_SWAP);
    REQUIRE(sd.values.size() == 2);
    CHECK(std::abs(sd.values[0] - Complex(1, 0)) < 1e-12);
    CHECK(std::abs(sd.values[1] - Complex(-1, 0)) < 1e-12);
    CHECK(unitary_defect(sd.basis) < 1e-12);
    CMatrix d = CMatrix::Zero(2, 2);
    d(0, 0) = sd.values[0];
    d(1, 1) = sd.values[1];
    CHECK((sd.basis * d * sd.basis.adjoint() - NEG_SWAP).norm() < 1e-12);
}

TEST_CASE("normal_eig rejects non-normal input") {
    CHECK_THROWS_AS(normal_eig(NILP), Error);
    try {
        normal_eig(NILP);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotNormal);
    }
}

TEST_CASE("svd of the nilpotent") {
    const SvdData sv = svd(NILP);
    REQUIRE(sv.sigma.size() == 2);
    CHECK(sv.sigma(0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sv.sigma(1) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(unitary_defect(sv.u) < 1e-12);
    CHECK(unitary_defect(sv.v) < 1e-12);
    CMatrix d = CMatrix::Zero(2, 2);
    d(0, 0) = sv.sigma(0);
    d(1, 1) = sv.sigma(1);
    CHECK((sv.u * d * sv.v.adjoint() - NILP).norm() < 1e-12);
}

TEST_CASE("real orthogonal congruence of a symmetric unitary") {
    const double s = 1.0 / std::sqrt(2.0);
    const CMatrix u = mat2(s, s * i1, s * i1, s);
    const RealSpectralData rd = real_orthogonal_spectral(u);
    REQUIRE(rd.phases.size() == 2);
    CHECK(std::abs(rd.phases[0] - Complex(s, s)) < 1e-9);
    CHECK(std::abs(rd.phases[1] - Complex(s, -s)) < 1e-9);
    CHECK(std::abs(rd.phases[0] * rd.phases[1] - Complex(1, 0)) < 1e-9);
    CHECK((rd.q.transpose() * rd.q - RMatrix::Identity(2, 2)).norm() < 1e-12);
    CMatrix d = CMatrix::Zero(2, 2);
    d(0, 0) = rd.phases[0];
    d(1, 1) = rd.phases[1];
    CHECK((rd.q.cast<Complex>() * d * rd.q.transpose().cast<Complex>() - u)
              .norm() < 1e-8);
}

TEST_CASE("real orthogonal congruence of the swap") {
    const CMatrix swap = mat2(0, 1, 1, 0);
    const RealSpectralData rd = real_orthogonal_spectral(swap);
    REQUIRE(rd.phases.size() == 2);
    CHECK(std::abs(rd.phases[0] - Complex(1, 0)) < 1e-12);
    CHECK(std::abs(rd.phases[1] - Complex(-1, 0)) < 1e-12);
}

TEST_CASE("real orthogonal congruence rejects non-symmetric input") {
    try {
        real_orthogonal_spectral(J2);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotSymmetricUnitary);
    }
}

TEST_CASE("youla blocks of small antisymmetric unitaries") {
    const YoulaData y1 = youla_canonical(J2);
    REQUIRE(y1.phases.size() == 1);
    CHECK(std::abs(y1.phases[0] - Complex(1, 0)) < 1e-9);
    CMatrix model = y1.phases[0] * J2;
    CHECK((y1.basis * model * y1.basis.transpose() - J2).norm() < 1e-9);

    const CMatrix v = blkdiag2(i1 * J2, -i1 * J2);
    const YoulaData y2 = youla_canonical(v);
    REQUIRE(y2.phases.size() == 2);
    std::vector<Complex> got = y2.phases;
    std::sort(got.begin(), got.end(), [](Complex a, Complex b) {
        return a.imag() < b.imag();
    });
    CHECK(std::abs(got[0] + i1) < 1e-9);
    CHECK(std::abs(got[1] - i1) < 1e-9);
    CMatrix blocks = blkdiag2(y2.phases[0] * J2, y2.phases[1] * J2);
    CHECK((y2.basis * blocks * y2.basis.transpose() - v).norm() < 1e-9);
}

TEST_CASE("youla phase product matches the principal determinant root") {
    CMatrix e = CMatrix::Zero(4, 4);
    e.block(0, 2, 2, 2) = CMatrix::Identity(2, 2);
    e.block(2, 0, 2, 2) = -CMatrix::Identity(2, 2);
    const YoulaData y = youla_canonical(e);
    REQUIRE(y.phases.size() == 2);
    CHECK(std::abs(y.phases[0] - Complex(1, 0)) < 1e-9);
    CHECK(std::abs(y.phases[1] - Complex(1, 0)) < 1e-9);
    CHECK(std::abs(e.determinant() - Complex(1, 0)) < 1e-12);
}

TEST_CASE("youla rejects bad inputs") {
    try {
        youla_canonical(CMatrix::Zero(3, 3));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::OddDimension);
    }
    try {
        youla_canonical(0.5 * J2);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotAntisymmetricUnitary);
    }
}

TEST_CASE("symplectic eigenbasis produces scalar 2x2 blocks") {
    const CMatrix e0 = blkdiag2(J2, J2);
    SUBCASE("identity") {
        const SymplecticBasis sb = symplectic_eigenbasis(CMatrix::Identity(4, 4), e0);
        REQUIRE(sb.values.size() == 2);
        CHECK(std::abs(sb.values[0] - Complex(1, 0)) < 1e-9);
        CHECK(std::abs(sb.values[1] - Complex(1, 0)) < 1e-9);
        CHECK(unitary_defect(sb.basis) < 1e-9);
    }
    SUBCASE("embedded negated swap") {
        CMatrix u = CMatrix::Zero(4, 4);
        u.block(0, 2, 2, 2) = NEG_SWAP;
        u.block(2, 0, 2, 2) = -NEG_SWAP.transpose();
        const CMatrix y = u * (-e0);
        const SymplecticBasis sb = symplectic_eigenbasis(y, e0);
        CHECK(unitary_defect(sb.basis) < 1e-9);
        CMatrix blocks = CMatrix::Zero(4, 4);
        for (std::size_t j = 0; j < sb.values.size(); ++j)
            blocks.block(2 * j, 2 * j, 2, 2) =
                sb.values[j] * CMatrix::Identity(2, 2);
        CHECK((sb.basis.adjoint() * y * sb.basis - blocks).norm() < 1e-8);
    }
}

TEST_CASE("takagi factorization of symmetric matrices") {
    const double s = 1.0 / std::sqrt(2.0);
    const CMatrix u = mat2(s, s * i1, s * i1, s);
    const TakagiData td = takagi_factor(u);
    REQUIRE(td.sigma.size() == 2);
    CHECK(td.sigma(0) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(td.sigma(1) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(unitary_defect(td.b) < 1e-9);
    CMatrix d = CMatrix::Zero(2, 2);
    d(0, 0) = td.sigma(0);
    d(1, 1) = td.sigma(1);
    CHECK((td.b * d * td.b.transpose() - u).norm() < 1e-8);

    const CMatrix rect = mat2(2, 0, 0, 1);
    const TakagiData t2 = takagi_factor(rect);
    CHECK(t2.sigma(0) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(t2.sigma(1) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("antisymmetric factor pairs singular values") {
    const AntisymmetricFactorData a1 = antisymmetric_factor(J2);
    REQUIRE(a1.sigma.size() == 1);
    CHECK(a1.sigma[0] == doctest::Approx(1.0).epsilon(1e-9));

    const CMatrix s = blkdiag2(2.0 * J2, J2);
    const AntisymmetricFactorData a2 = antisymmetric_factor(s);
    REQUIRE(a2.sigma.size() == 2);
    CHECK(a2.sigma[0] == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(a2.sigma[1] == doctest::Approx(1.0).epsilon(1e-9));
    CMatrix model = CMatrix::Zero(4, 4);
    model.block(0, 0, 2, 2) = a2.sigma[0] * J2;
    model.block(2, 2, 2, 2) = a2.sigma[1] * J2;
    CHECK((a2.b * model * a2.b.transpose() - s).norm() < 1e-8);

    CMatrix odd = CMatrix::Zero(3, 3);
    odd(0, 1) = 1;
    odd(1, 0) = -1;
    const AntisymmetricFactorData a3 = antisymmetric_factor(odd);
    REQUIRE(a3.sigma.size() == 1);
    CHECK(a3.sigma[0] == doctest::Approx(1.0).epsilon(1e-9));
}
