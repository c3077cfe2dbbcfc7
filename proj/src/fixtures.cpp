#include "jbt/fixtures.hpp"

#include <cmath>

namespace jbt {

namespace {

const Complex i1(0.0, 1.0);

CMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    CMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

CMatrix diag3(Complex a, Complex b, Complex c) {
    CMatrix m = CMatrix::Zero(3, 3);
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    return m;
}

// Off-diagonal embedding of a 2x2 block into a 4x4 antisymmetric matrix.
CMatrix embed4(const CMatrix& a) {
    CMatrix z = CMatrix::Zero(4, 4);
    z.block(0, 2, 2, 2) = a;
    z.block(2, 0, 2, 2) = -a.transpose();
    return z;
}

CMatrix spin3(Complex a, Complex b, Complex c) {
    CMatrix m(3, 1);
    m << a, b, c;
    return m;
}

std::vector<FixtureCase> build_registry() {
    const double s = 1.0 / std::sqrt(2.0);
    const TripleSystem full2 = TripleSystem::matrix(2, 2);
    const TripleSystem full3 = TripleSystem::matrix(3, 3);
    const TripleSystem sym2 = TripleSystem::symmetric(2);
    const TripleSystem asym4 = TripleSystem::antisymmetric(4);
    const TripleSystem spin = TripleSystem::spin(3);

    const Element I2 = make_element(full2, CMatrix::Identity(2, 2));
    const Element I3 = make_element(full3, CMatrix::Identity(3, 3));
    const Element SWAP = make_element(full2, mat2(0, 1, 1, 0));
    const Element NEG_SWAP = make_element(full2, mat2(0, -1, -1, 0));
    const Element DIAG_I = make_element(full2, mat2(i1, 0, 0, -i1));
    const Element ROT45 = make_element(full2, mat2(s, -s, s, s));
    const Element NILP = make_element(full2, mat2(0, -1, 0, 0));
    const Element E11 = make_element(full2, mat2(1, 0, 0, 0));
    const Element HADAMARD_SKEW = make_element(full2, mat2(s, s, -s, s));
    const Element D1 = make_element(full2, mat2(1, 0, 0, -1));
    const Element DIAG_1I = make_element(full2, mat2(1, 0, 0, i1));

    const Element U3A = make_element(full3, diag3(1, -1, 0));
    const Element U3B = make_element(full3, diag3(i1, -i1, 0));
    const Element U3C = make_element(full3, diag3(1, i1, 0));

    const Element S_I2 = make_element(sym2, CMatrix::Identity(2, 2));
    const Element S_D1 = make_element(sym2, mat2(1, 0, 0, -1));
    const Element M2S_B_U = make_element(sym2, mat2(s, s * i1, s * i1, s));
    const Element M2S_C_U =
        make_element(sym2, mat2(0.5, 0.5 * i1, 0.5 * i1, -0.5));

    const Element A4_E = make_element(asym4, embed4(CMatrix::Identity(2, 2)));
    const Element A4_U = make_element(asym4, embed4(mat2(0, -1, -1, 0)));
    const Element A4_V = make_element(asym4, embed4(mat2(i1, 0, 0, -i1)));
    const Element A4_U2 = make_element(asym4, embed4(mat2(0, 1, 1, 0)));
    const Element A4_V2 = make_element(asym4, embed4(mat2(s, -s, s, s)));
    const Element A4_V3 = make_element(asym4, embed4(mat2(0, -1, 0, 0)));

    const Element SPIN_E1 = make_element(spin, spin3(1, 0, 0));
    const Element SPIN_E2 = make_element(spin, spin3(0, 1, 0));
    const Element SPIN_E12 = make_element(spin, spin3(s, s, 0));
    const Element SPIN_U_HALF = make_element(spin, spin3(0.5, 0.5 * i1, 0));
    const Element SPIN_CU = make_element(spin, spin3(0.5 * i1, -0.5, 0));
    const Element SPIN_U1 = make_element(spin, spin3(-0.5, 0.5 * i1, 0));
    const Element SPIN_U2 = make_element(spin, spin3(0.5 * i1, 0.5, 0));
    const Element SPIN_U3 = make_element(spin, spin3(0, 0.5 * i1, 0.5));

    using RK = RelationKind;
    using CC = ChainClaim;
    std::vector<FixtureCase> reg;

    reg.push_back(FixtureCase{
        "leh-not-transitive",
        "LE_H holds along two steps but not end to end; the hull is certified",
        {
            {"LE_H u e", RK::LE_H, NEG_SWAP, I2, true},
            {"SIM_H u e", RK::SIM_H, NEG_SWAP, I2, true},
            {"LE_H v u", RK::LE_H, DIAG_I, NEG_SWAP, true},
            {"SIM_H v u", RK::SIM_H, DIAG_I, NEG_SWAP, true},
            {"LE_H v e", RK::LE_H, DIAG_I, I2, false},
            {"LE_H e v", RK::LE_H, I2, DIAG_I, false},
            {"SIM_2 v e", RK::SIM_2, DIAG_I, I2, true},
            {"SIM_HC v e", RK::SIM_HC, DIAG_I, I2, true},
        },
        {},
        {
            {"SIM_HT v e", CC::SIM_HT, DIAG_I, I2, true, 3},
            {"SIM_HCT v e", CC::SIM_HCT, DIAG_I, I2, true, 4},
        }});

    reg.push_back(FixtureCase{
        "lehc-not-transitive-b",
        "two SIM_H steps whose endpoints fail even LE_HC directly",
        {
            {"SIM_H u e", RK::SIM_H, SWAP, I2, true},
            {"LE_H v u", RK::LE_H, ROT45, SWAP, true},
            {"SIM_H v u", RK::SIM_H, ROT45, SWAP, true},
            {"LE_HC v e", RK::LE_HC, ROT45, I2, false},
            {"LE_HC e v", RK::LE_HC, I2, ROT45, false},
            {"SIM_HC v e", RK::SIM_HC, ROT45, I2, false},
        },
        {},
        {
            {"SIM_HCT v e", CC::SIM_HCT, ROT45, I2, true, 4},
        }});

    {
        const Element uue = triple_product(I2, I2, E11);
        const Element vve = triple_product(HADAMARD_SKEW, HADAMARD_SKEW, E11);
        reg.push_back(FixtureCase{
            "len-not-transitive-ab",
            "{u,u,e} can be a tripotent below e while LE_2 still fails",
            {
                {"LE_2 u e", RK::LE_2, I2, E11, false},
                {"LE_2 v e", RK::LE_2, HADAMARD_SKEW, E11, false},
                {"LE_N u e", RK::LE_N, I2, E11, false},
                {"LE_N v e", RK::LE_N, HADAMARD_SKEW, E11, false},
                {"LE uue e", RK::LE, uue, E11, true},
                {"LE vve e", RK::LE, vve, E11, true},
            },
            {
                {"uue tripotent", uue, true},
                {"vve tripotent", vve, true},
            },
            {}});
    }

    reg.push_back(FixtureCase{
        "len-not-transitive-c",
        "LE then SIM_H compose to LE_2 only; {v,v,e} stops being a tripotent",
        {
            {"SIM_H u e", RK::SIM_H, NEG_SWAP, I2, true},
            {"LE v u", RK::LE, NILP, NEG_SWAP, true},
            {"LE_N v e", RK::LE_N, NILP, I2, false},
            {"LE_2 v e", RK::LE_2, NILP, I2, true},
        },
        {
            {"vvE tripotent", triple_product(NILP, NILP, I2), false},
        },
        {
            {"LE_NT v e", CC::LE_NT, NILP, I2, true, 2},
        }});

    reg.push_back(FixtureCase{
        "antisymmetric-4x4-a",
        "the 4x4 antisymmetric copy of the first non-transitivity pattern",
        {
            {"LE_H u e", RK::LE_H, A4_U, A4_E, true},
            {"SIM_H u e", RK::SIM_H, A4_U, A4_E, true},
            {"LE_H v u", RK::LE_H, A4_V, A4_U, true},
            {"SIM_H v u", RK::SIM_H, A4_V, A4_U, true},
            {"LE_H v e", RK::LE_H, A4_V, A4_E, false},
            {"LE_H e v", RK::LE_H, A4_E, A4_V, false},
            {"SIM_HC v e", RK::SIM_HC, A4_V, A4_E, true},
        },
        {},
        {
            {"SIM_HT u e", CC::SIM_HT, A4_U, A4_E, true, 3},
            {"SIM_HCT v e", CC::SIM_HCT, A4_V, A4_E, true, 4},
        }});

    reg.push_back(FixtureCase{
        "antisymmetric-4x4-b",
        "antisymmetric copy of the second pattern; SIM_HC fails outright",
        {
            {"SIM_H u e", RK::SIM_H, A4_U2, A4_E, true},
            {"SIM_H v u", RK::SIM_H, A4_V2, A4_U2, true},
            {"LE_HC v e", RK::LE_HC, A4_V2, A4_E, false},
            {"SIM_HC v e", RK::SIM_HC, A4_V2, A4_E, false},
        },
        {},
        {
            {"SIM_HCT v e", CC::SIM_HCT, A4_V2, A4_E, true, 4},
        }});

    reg.push_back(FixtureCase{
        "antisymmetric-4x4-c",
        "antisymmetric copy of the LE_N non-transitivity",
        {
            {"SIM_H u e", RK::SIM_H, A4_U, A4_E, true},
            {"LE v u", RK::LE, A4_V3, A4_U, true},
            {"LE_N v e", RK::LE_N, A4_V3, A4_E, false},
            {"LE_2 v e", RK::LE_2, A4_V3, A4_E, true},
        },
        {},
        {
            {"LE_NT v e", CC::LE_NT, A4_V3, A4_E, true, 2},
        }});

    reg.push_back(FixtureCase{
        "symmetric-2x2-b",
        "symmetric 2x2 witness that even LE_HC is not transitive",
        {
            {"LE_H u v", RK::LE_H, M2S_B_U, S_D1, true},
            {"SIM_H u v", RK::SIM_H, M2S_B_U, S_D1, true},
            {"SIM_H v e", RK::SIM_H, S_D1, S_I2, true},
            {"LE_HC u e", RK::LE_HC, M2S_B_U, S_I2, false},
            {"SIM_HC u e", RK::SIM_HC, M2S_B_U, S_I2, false},
        },
        {},
        {
            {"SIM_HT u e", CC::SIM_HT, M2S_B_U, S_I2, true, 3},
            {"LE_HCT u e", CC::LE_HCT, M2S_B_U, S_I2, true, 4},
            {"SIM_HCT u e", CC::SIM_HCT, M2S_B_U, S_I2, true, 4},
        }});

    {
        const Element uuE = triple_product(M2S_C_U, M2S_C_U, S_I2);
        reg.push_back(FixtureCase{
            "symmetric-2x2-c",
            "non-normal symmetric tripotent below the unit: {u,u,e} leaves "
            "the tripotents",
            {
                {"LE_N u e", RK::LE_N, M2S_C_U, S_I2, false},
                {"LE_2 u e", RK::LE_2, M2S_C_U, S_I2, true},
            },
            {
                {"u tripotent", M2S_C_U, true},
                {"uuE tripotent", uuE, false},
            },
            {
                {"LE_NT u e", CC::LE_NT, M2S_C_U, S_I2, true, 2},
            }});
    }

    reg.push_back(FixtureCase{
        "spin-3-a",
        "LE_C without LE_H in the smallest spin factor",
        {
            {"LE_C u cu", RK::LE_C, SPIN_U_HALF, SPIN_CU, true},
            {"LE_H u cu", RK::LE_H, SPIN_U_HALF, SPIN_CU, false},
            {"LE_H cu u", RK::LE_H, SPIN_CU, SPIN_U_HALF, false},
        },
        {},
        {}});

    reg.push_back(FixtureCase{
        "spin-3-b",
        "spin examples separating LE, LE_R, LE_N and LE_2",
        {
            {"LE_R u1 e", RK::LE_R, SPIN_U1, SPIN_E1, true},
            {"LE u1 e", RK::LE, SPIN_U1, SPIN_E1, false},
            {"LE_N u2 e", RK::LE_N, SPIN_U2, SPIN_E1, true},
            {"LE_H u2 e", RK::LE_H, SPIN_U2, SPIN_E1, false},
            {"LE_N u3 e", RK::LE_N, SPIN_U3, SPIN_E1, false},
            {"LE_2 u3 e", RK::LE_2, SPIN_U3, SPIN_E1, true},
        },
        {},
        {
            {"LE_NT u3 e", CC::LE_NT, SPIN_U3, SPIN_E1, true, 2},
            {"LE_HT u3 e", CC::LE_HT, SPIN_U3, SPIN_E1, true, 4},
        }});

    reg.push_back(FixtureCase{
        "spin-3-c",
        "orthogonal spin unitaries: similar in the hull but not via SIM_H",
        {
            {"SIM_H u e", RK::SIM_H, SPIN_E1, SPIN_E2, false},
            {"SIM_2 u e", RK::SIM_2, SPIN_E1, SPIN_E2, true},
        },
        {},
        {
            {"SIM_HT u e", CC::SIM_HT, SPIN_E1, SPIN_E2, true, 3},
        }});

    reg.push_back(FixtureCase{
        "spin-3-d",
        "nearby spin unitaries where even SIM_HC fails directly",
        {
            {"SIM_HC u e", RK::SIM_HC, SPIN_E1, SPIN_E12, false},
            {"SIM_2 u e", RK::SIM_2, SPIN_E1, SPIN_E12, true},
        },
        {},
        {
            {"SIM_HT u e", CC::SIM_HT, SPIN_E1, SPIN_E12, true, 3},
        }});

    reg.push_back(FixtureCase{
        "distinguishing-a",
        "sign and phase variants around a minimal tripotent",
        {
            {"LE_R -e e", RK::LE_R, scale(-1.0, E11), E11, true},
            {"LE -e e", RK::LE, scale(-1.0, E11), E11, false},
            {"LE e -e", RK::LE, E11, scale(-1.0, E11), false},
            {"LE_C ie e", RK::LE_C, scale(i1, E11), E11, true},
            {"LE_R ie e", RK::LE_R, scale(i1, E11), E11, false},
            {"LE_H ie e", RK::LE_H, scale(i1, E11), E11, false},
            {"LE_R -u u+v", RK::LE_R, scale(-1.0, E11), I2, true},
            {"LE_R u+v -u", RK::LE_R, I2, scale(-1.0, E11), false},
            {"LE -u u+v", RK::LE, scale(-1.0, E11), I2, false},
            {"LE u+v -u", RK::LE, I2, scale(-1.0, E11), false},
            {"LE_C iu u+v", RK::LE_C, scale(i1, E11), I2, true},
            {"LE_C u+v iu", RK::LE_C, I2, scale(i1, E11), false},
            {"LE_R iu u+v", RK::LE_R, scale(i1, E11), I2, false},
            {"LE_H iu u+v", RK::LE_H, scale(i1, E11), I2, false},
        },
        {},
        {}});

    reg.push_back(FixtureCase{
        "distinguishing-d-pairs",
        "rank-two sums separating the symmetrized and phase relations",
        {
            {"SIM_H u-v u+v", RK::SIM_H, D1, I2, true},
            {"LE_C u-v u+v", RK::LE_C, D1, I2, false},
            {"LE_C u+v u-v", RK::LE_C, I2, D1, false},
            {"SIM_HC i(u-v) u+v", RK::SIM_HC, DIAG_I, I2, true},
            {"LE_H i(u-v) u+v", RK::LE_H, DIAG_I, I2, false},
            {"LE_H u+v i(u-v)", RK::LE_H, I2, DIAG_I, false},
            {"LE_C i(u-v) u+v", RK::LE_C, DIAG_I, I2, false},
            {"LE_C u+v i(u-v)", RK::LE_C, I2, DIAG_I, false},
            {"SIM_2 u+iv u+v", RK::SIM_2, DIAG_1I, I2, true},
            {"LE_HC u+iv u+v", RK::LE_HC, DIAG_1I, I2, false},
            {"LE_HC u+v u+iv", RK::LE_HC, I2, DIAG_1I, false},
        },
        {},
        {
            {"SIM_HT u+iv u+v", CC::SIM_HT, DIAG_1I, I2, false, -1},
            {"LE_HCT u+iv u+v", CC::LE_HCT, DIAG_1I, I2, true, 4},
            {"SIM_HCT u+iv u+v", CC::SIM_HCT, DIAG_1I, I2, true, 4},
        }});

    reg.push_back(FixtureCase{
        "distinguishing-d-strict",
        "3x3 diagonal unitaries against the unit: strict one-way phases",
        {
            {"LE_H u-v w3", RK::LE_H, U3A, I3, true},
            {"LE_H w3 u-v", RK::LE_H, I3, U3A, false},
            {"LE_C u-v w3", RK::LE_C, U3A, I3, false},
            {"LE_C w3 u-v", RK::LE_C, I3, U3A, false},
            {"LE_HC i(u-v) w3", RK::LE_HC, U3B, I3, true},
            {"LE_HC w3 i(u-v)", RK::LE_HC, I3, U3B, false},
            {"LE_H i(u-v) w3", RK::LE_H, U3B, I3, false},
            {"LE_N u+iv w3", RK::LE_N, U3C, I3, true},
            {"LE_N w3 u+iv", RK::LE_N, I3, U3C, false},
            {"LE_HC u+iv w3", RK::LE_HC, U3C, I3, false},
            {"LE_HC w3 u+iv", RK::LE_HC, I3, U3C, false},
        },
        {},
        {}});

    reg.push_back(FixtureCase{
        "distinguishing-e",
        "det-compatible unitaries joined only through the hull",
        {
            {"LE_H e v", RK::LE_H, I2, DIAG_I, false},
            {"LE_H v e", RK::LE_H, DIAG_I, I2, false},
            {"SIM_2 e v", RK::SIM_2, I2, DIAG_I, true},
        },
        {},
        {
            {"SIM_HT v e", CC::SIM_HT, DIAG_I, I2, true, 3},
        }});

    reg.push_back(FixtureCase{
        "distinguishing-e-m3",
        "rank-two diagonal inside the 3x3 unit: hull via tuned completion",
        {
            {"LE_H u3 e3", RK::LE_H, U3B, I3, false},
            {"LE_H e3 u3", RK::LE_H, I3, U3B, false},
            {"LE_2 u3 e3", RK::LE_2, U3B, I3, true},
            {"LE_2 e3 u3", RK::LE_2, I3, U3B, false},
        },
        {},
        {
            {"LE_HT u3 e3", CC::LE_HT, U3B, I3, true, 6},
            {"LE_NT e3 u3", CC::LE_NT, I3, U3B, false, -1},
        }});

    reg.push_back(FixtureCase{
        "distinguishing-f",
        "a nilpotent-looking tripotent under the unit: LE_2 without LE_N",
        {
            {"LE_N v e", RK::LE_N, NILP, I2, false},
            {"LE_N e v", RK::LE_N, I2, NILP, false},
            {"LE_2 v e", RK::LE_2, NILP, I2, true},
        },
        {},
        {
            {"LE_NT v e", CC::LE_NT, NILP, I2, true, 2},
            {"LE_NT e v", CC::LE_NT, I2, NILP, false, -1},
        }});

    return reg;
}

CertResult run_cert(const CertCheck& c) {
    switch (c.claim) {
        case ChainClaim::LE_NT: return cert_nt(c.u, c.e);
        case ChainClaim::SIM_HT: return cert_simht_unitary(c.u, c.e);
        case ChainClaim::LE_HT: return cert_ht(c.u, c.e);
        case ChainClaim::LE_HCT: return cert_hct(c.u, c.e);
        case ChainClaim::SIM_HCT: return cert_simhct(c.u, c.e);
    }
    throw Error(Errc::ConfigError, "unreachable");
}

} // namespace

const std::vector<FixtureCase>& fixture_registry() {
    static const std::vector<FixtureCase> reg = build_registry();
    return reg;
}

FixtureCaseResult run_fixture(const FixtureCase& fc) {
    FixtureCaseResult out;
    out.id = fc.id;
    const auto record = [&](CheckResult r) {
        if (r.expected && r.pass())
            out.maxResidual = std::max(out.maxResidual, r.residual);
        if (!r.pass()) out.pass = false;
        out.checks.push_back(std::move(r));
    };
    for (const RelationCheck& rc : fc.relations) {
        const RelationVerdict v = relate(rc.kind, rc.u, rc.e);
        record({rc.name, rc.expected, v.holds, v.residual});
    }
    for (const TripotencyCheck& tc : fc.tripotency) {
        double res = 0.0;
        const bool trip = is_tripotent(tc.x, &res);
        record({tc.name, tc.expected, trip, res});
    }
    for (const CertCheck& cc : fc.certs) {
        const CertResult res = run_cert(cc);
        bool got = res.ok();
        if (got && cc.maxLength >= 0 && res.certificate->length() > cc.maxLength)
            got = false;
        record({cc.name, cc.expectSuccess, got, res.maxResidual});
    }
    return out;
}

FixtureSuiteReport run_fixture_suite() {
    FixtureSuiteReport report;
    for (const FixtureCase& fc : fixture_registry()) {
        FixtureCaseResult r = run_fixture(fc);
        report.allPass = report.allPass && r.pass;
        report.maxResidual = std::max(report.maxResidual, r.maxResidual);
        report.cases.push_back(std::move(r));
    }
    return report;
}

} // namespace jbt
