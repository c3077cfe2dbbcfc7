#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "jbt/chains.hpp"
#include "jbt/tripotents.hpp"

using namespace jbt;

namespace {

const Complex i1(0.0, 1.0);

CMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    CMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

CMatrix spin3(Complex a, Complex b, Complex c) {
    CMatrix m(3, 1);
    m << a, b, c;
    return m;
}

const TripleSystem FULL2 = TripleSystem::matrix(2, 2);
const Element I2 = make_element(FULL2, CMatrix::Identity(2, 2));
const Element DIAG_I = make_element(FULL2, mat2(i1, 0, 0, -i1));
const Element DIAG_1I = make_element(FULL2, mat2(1, 0, 0, i1));
const Element NILP = make_element(FULL2, mat2(0, -1, 0, 0));

bool all_links(const ChainCertificate& cert, RelationKind k) {
    for (RelationKind l : cert.links)
        if (l != k) return false;
    return true;
}

} // namespace

TEST_CASE("claim names round-trip") {
    for (ChainClaim c : {ChainClaim::LE_NT, ChainClaim::SIM_HT, ChainClaim::LE_HT,
                         ChainClaim::LE_HCT, ChainClaim::SIM_HCT}) {
        const auto back = claim_from_name(claim_name(c));
        REQUIRE(back.has_value());
        CHECK(*back == c);
    }
    CHECK_FALSE(claim_from_name("LE_T").has_value());
}

TEST_CASE("link admissibility follows the base relation") {
    CHECK(link_admissible(ChainClaim::SIM_HT, RelationKind::SIM_H));
    CHECK_FALSE(link_admissible(ChainClaim::SIM_HT, RelationKind::LE_H));
    CHECK_FALSE(link_admissible(ChainClaim::SIM_HT, RelationKind::SIM_HC));
    CHECK(link_admissible(ChainClaim::LE_HT, RelationKind::LE));
    CHECK(link_admissible(ChainClaim::LE_HT, RelationKind::SIM_H));
    CHECK_FALSE(link_admissible(ChainClaim::LE_HT, RelationKind::LE_HC));
    CHECK(link_admissible(ChainClaim::LE_HCT, RelationKind::LE_HC));
    CHECK(link_admissible(ChainClaim::LE_HCT, RelationKind::LE_H));
    CHECK(link_admissible(ChainClaim::SIM_HCT, RelationKind::SIM_H));
    CHECK(link_admissible(ChainClaim::SIM_HCT, RelationKind::SIM_HC));
    CHECK_FALSE(link_admissible(ChainClaim::SIM_HCT, RelationKind::LE_HC));
    CHECK(link_admissible(ChainClaim::LE_NT, RelationKind::LE));
    CHECK(link_admissible(ChainClaim::LE_NT, RelationKind::SIM_2));
    CHECK_FALSE(link_admissible(ChainClaim::LE_NT, RelationKind::LE_2));
}

TEST_CASE("hull invariants of reference pairs") {
    const HullInvariant full = hull_invariant(DIAG_I, I2);
    CHECK(full.compatible);
    CHECK(full.sign == 1);
    CHECK(std::abs(full.valueU - Complex(1, 0)) < 1e-12);

    const HullInvariant bad = hull_invariant(DIAG_1I, I2);
    CHECK_FALSE(bad.compatible);

    const TripleSystem spin = TripleSystem::spin(3);
    const Complex a = std::polar(1.0, 0.25 * 3.141592653589793);
    const Element twisted = make_element(spin, spin3(a, 0, 0));
    const Element e1 = make_element(spin, spin3(1, 0, 0));
    const HullInvariant si = hull_invariant(twisted, e1);
    CHECK(std::abs(si.valueU - i1) < 1e-12);
    CHECK(std::abs(si.valueE - Complex(1, 0)) < 1e-12);
    CHECK_FALSE(si.compatible);
}

TEST_CASE("length bounds per family") {
    CHECK(chain_length_bound(ChainClaim::SIM_HT, I2) == 3);
    CHECK(chain_length_bound(ChainClaim::LE_HT, I2) == 4);
    CHECK(chain_length_bound(ChainClaim::LE_HCT, I2) == 4);
    CHECK(chain_length_bound(ChainClaim::SIM_HCT, I2) == 4);
    CHECK(chain_length_bound(ChainClaim::LE_NT, I2) == 2);

    CMatrix d3 = CMatrix::Zero(3, 3);
    d3(0, 0) = 1;
    d3(1, 1) = 1;
    d3(2, 2) = 1;
    const Element i3 = make_element(TripleSystem::matrix(3, 3), d3);
    CHECK(chain_length_bound(ChainClaim::SIM_HT, i3) == 5);

    const Element e1 = make_element(TripleSystem::spin(3), spin3(1, 0, 0));
    CHECK(chain_length_bound(ChainClaim::SIM_HT, e1) == 3);
    CHECK(chain_length_bound(ChainClaim::LE_HCT, e1) == 4);
}

TEST_CASE("similarity chain between det-compatible unitaries") {
    const CertResult res = cert_simht_unitary(DIAG_I, I2);
    REQUIRE(res.ok());
    const ChainCertificate& cert = *res.certificate;
    CHECK(cert.length() == 2);
    CHECK(all_links(cert, RelationKind::SIM_H));
    CHECK(distance(cert.nodes.front(), DIAG_I) == 0.0);
    CHECK(distance(cert.nodes.back(), I2) == 0.0);
    CHECK(verify_certificate(cert).valid);
}

TEST_CASE("similarity chain fails on an incompatible determinant") {
    const CertResult res = cert_simht_unitary(DIAG_1I, I2);
    CHECK_FALSE(res.ok());
    REQUIRE(res.failure.has_value());
    CHECK(*res.failure == Errc::InvariantObstruction);

    const CertResult nu = cert_simht_unitary(NILP, I2);
    CHECK_FALSE(nu.ok());
    CHECK(*nu.failure == Errc::NotUnitary);
}

TEST_CASE("similarity chains in the other families") {
    const double s = 1.0 / std::sqrt(2.0);
    const TripleSystem sym2 = TripleSystem::symmetric(2);
    const Element su = make_element(sym2, mat2(s, s * i1, s * i1, s));
    const Element se = make_element(sym2, CMatrix::Identity(2, 2));
    const CertResult symRes = cert_simht_unitary(su, se);
    REQUIRE(symRes.ok());
    CHECK(symRes.certificate->length() <= 3);
    CHECK(all_links(*symRes.certificate, RelationKind::SIM_H));
    CHECK(verify_certificate(*symRes.certificate).valid);

    const TripleSystem asym4 = TripleSystem::antisymmetric(4);
    CMatrix ea = CMatrix::Zero(4, 4), ua = CMatrix::Zero(4, 4);
    ea.block(0, 2, 2, 2) = CMatrix::Identity(2, 2);
    ea.block(2, 0, 2, 2) = -CMatrix::Identity(2, 2);
    ua.block(0, 2, 2, 2) = mat2(0, -1, -1, 0);
    ua.block(2, 0, 2, 2) = -mat2(0, -1, -1, 0).transpose();
    const CertResult asymRes = cert_simht_unitary(make_element(asym4, ua),
                                                  make_element(asym4, ea));
    REQUIRE(asymRes.ok());
    CHECK(asymRes.certificate->length() <= 3);
    CHECK(all_links(*asymRes.certificate, RelationKind::SIM_H));
    for (const Element& node : asymRes.certificate->nodes)
        CHECK((node.payload + node.payload.transpose()).norm() < 1e-9);
    CHECK(verify_certificate(*asymRes.certificate).valid);
}

TEST_CASE("spin similarity chains have the frozen lengths") {
    const TripleSystem spin = TripleSystem::spin(3);
    const Element e1 = make_element(spin, spin3(1, 0, 0));
    const Element e2 = make_element(spin, spin3(0, 1, 0));

    const CertResult same = cert_simht_unitary(e1, e2);
    REQUIRE(same.ok());
    CHECK(same.certificate->length() == 2);
    CHECK(all_links(*same.certificate, RelationKind::SIM_H));
    CHECK(verify_certificate(*same.certificate).valid);

    const Element flip = make_element(spin, spin3(0, i1, 0));
    const CertResult flipped = cert_simht_unitary(e1, flip);
    REQUIRE(flipped.ok());
    CHECK(flipped.certificate->length() == 3);
    CHECK(all_links(*flipped.certificate, RelationKind::SIM_H));
    CHECK(verify_certificate(*flipped.certificate).valid);

    const Complex a = std::polar(1.0, 0.25 * 3.141592653589793);
    const CertResult bad =
        cert_simht_unitary(make_element(spin, spin3(a, 0, 0)), e1);
    CHECK_FALSE(bad.ok());
    CHECK(*bad.failure == Errc::InvariantObstruction);
}

TEST_CASE("two-link order certificates") {
    const CertResult res = cert_nt(NILP, I2);
    REQUIRE(res.ok());
    const ChainCertificate& cert = *res.certificate;
    REQUIRE(cert.length() == 2);
    CHECK(cert.links[0] == RelationKind::LE);
    CHECK(cert.links[1] == RelationKind::SIM_2);
    CHECK(classify(cert.nodes[1]).cls == TripotentClass::Unitary);
    CHECK(verify_certificate(cert).valid);

    SUBCASE("trivial and degenerate endpoints") {
        CHECK(cert_nt(I2, I2).certificate->length() == 0);
        const CertResult z = cert_nt(zero_element(FULL2), I2);
        REQUIRE(z.ok());
        CHECK(z.certificate->length() == 1);
    }

    SUBCASE("spin and rectangular variants") {
        const TripleSystem spin = TripleSystem::spin(3);
        const CertResult sres =
            cert_nt(make_element(spin, spin3(0, 0.5 * i1, 0.5)),
                    make_element(spin, spin3(1, 0, 0)));
        REQUIRE(sres.ok());
        CHECK(sres.certificate->length() <= 2);
        CHECK(verify_certificate(*sres.certificate).valid);

        const TripleSystem m23 = TripleSystem::matrix(2, 3);
        CMatrix sub = CMatrix::Zero(2, 3);
        sub(0, 0) = 1;
        CMatrix comp = CMatrix::Zero(2, 3);
        comp(0, 0) = 1;
        comp(1, 1) = 1;
        const CertResult rres =
            cert_nt(make_element(m23, sub), make_element(m23, comp));
        REQUIRE(rres.ok());
        CHECK(rres.certificate->length() <= 2);
        CHECK(verify_certificate(*rres.certificate).valid);
    }

    SUBCASE("not below") {
        const CertResult bad = cert_nt(I2, NILP);
        CHECK_FALSE(bad.ok());
        CHECK(*bad.failure == Errc::NotLe2);
    }
}

TEST_CASE("hull order certificates and the phase twist") {
    const CertResult ht = cert_ht(DIAG_1I, I2);
    CHECK_FALSE(ht.ok());
    CHECK(*ht.failure == Errc::InvariantObstruction);

    const CertResult hct = cert_hct(DIAG_1I, I2);
    REQUIRE(hct.ok());
    CHECK(hct.certificate->length() <= 4);
    CHECK(hct.certificate->links[0] == RelationKind::SIM_HC);
    CHECK(verify_certificate(*hct.certificate).valid);

    const Element diagI1 = make_element(FULL2, mat2(i1, 0, 0, 1));
    const CertResult hct2 = cert_hct(diagI1, I2);
    REQUIRE(hct2.ok());
    CHECK(verify_certificate(*hct2.certificate).valid);

    // With a compatible determinant the twist is unnecessary.
    const CertResult plain = cert_ht(DIAG_I, I2);
    REQUIRE(plain.ok());
    CHECK(all_links(*plain.certificate, RelationKind::SIM_H));
    CHECK(verify_certificate(*plain.certificate).valid);

    // Corner completion route: a diagonal of deficient rank inside I3.
    const TripleSystem full3 = TripleSystem::matrix(3, 3);
    CMatrix u3 = CMatrix::Zero(3, 3);
    u3(0, 0) = i1;
    u3(1, 1) = -i1;
    const Element U3B = make_element(full3, u3);
    const Element I3 = make_element(full3, CMatrix::Identity(3, 3));
    const CertResult comp = cert_ht(U3B, I3);
    REQUIRE(comp.ok());
    CHECK(comp.certificate->length() <= chain_length_bound(ChainClaim::LE_HT, I3));
    CHECK(comp.certificate->links[0] == RelationKind::LE);
    CHECK(verify_certificate(*comp.certificate).valid);

    const CertResult notle = cert_ht(I2, NILP);
    CHECK_FALSE(notle.ok());
    CHECK(*notle.failure == Errc::NotLe2);
}

TEST_CASE("similarity hull certificates with one twisted link") {
    const double s = 1.0 / std::sqrt(2.0);
    const Element rot45 = make_element(FULL2, mat2(s, -s, s, s));
    const CertResult r = cert_simhct(rot45, I2);
    REQUIRE(r.ok());
    int twisted = 0;
    for (RelationKind k : r.certificate->links) {
        CHECK((k == RelationKind::SIM_H || k == RelationKind::SIM_HC));
        if (k == RelationKind::SIM_HC) ++twisted;
    }
    CHECK(twisted <= 1);
    CHECK(verify_certificate(*r.certificate).valid);

    const CertResult t = cert_simhct(DIAG_1I, I2);
    REQUIRE(t.ok());
    CHECK(t.certificate->links[0] == RelationKind::SIM_HC);
    CHECK(verify_certificate(*t.certificate).valid);

    const CertResult bad = cert_simhct(NILP, I2);
    CHECK_FALSE(bad.ok());
    CHECK(*bad.failure == Errc::NotLe2);
}

TEST_CASE("verification rejects tampered certificates") {
    ChainCertificate cert = *cert_nt(NILP, I2).certificate;

    SUBCASE("inadmissible link kind for the claim") {
        ChainCertificate c = cert;
        c.claim = ChainClaim::SIM_HT;
        CHECK_FALSE(verify_certificate(c).valid);
    }
    SUBCASE("broken middle node") {
        ChainCertificate c = cert;
        c.nodes[1] = I2;
        CHECK_FALSE(verify_certificate(c).valid);
    }
    SUBCASE("non-tripotent node") {
        ChainCertificate c = cert;
        c.nodes[1] = make_element(FULL2, mat2(0.5, 0, 0, 0.5));
        CHECK_FALSE(verify_certificate(c).valid);
    }
    SUBCASE("length mismatch") {
        ChainCertificate c = cert;
        c.links.pop_back();
        CHECK_FALSE(verify_certificate(c).valid);
    }
}
