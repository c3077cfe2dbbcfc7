#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "jbt/relations.hpp"
#include "jbt/tripotents.hpp"

using namespace jbt;

namespace {

const Complex i1(0.0, 1.0);

CMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    CMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

const TripleSystem FULL2 = TripleSystem::matrix(2, 2);
const Element I2 = make_element(FULL2, CMatrix::Identity(2, 2));
const Element E11 = make_element(FULL2, mat2(1, 0, 0, 0));
const Element NEG_SWAP = make_element(FULL2, mat2(0, -1, -1, 0));
const Element DIAG_I = make_element(FULL2, mat2(i1, 0, 0, -i1));

} // namespace

TEST_CASE("relation names round-trip") {
    for (RelationKind k : all_relations()) {
        const auto back = relation_from_name(relation_name(k));
        REQUIRE(back.has_value());
        CHECK(*back == k);
    }
    CHECK_FALSE(relation_from_name("LE_X").has_value());
}

TEST_CASE("spot verdicts around the identity") {
    CHECK(relate(RelationKind::LE, E11, I2).holds);
    CHECK(relate(RelationKind::LE_H, NEG_SWAP, I2).holds);
    CHECK_FALSE(relate(RelationKind::LE_H, DIAG_I, I2).holds);
    CHECK(relate(RelationKind::SIM_2, DIAG_I, I2).holds);
    CHECK(relate(RelationKind::SIM_HC, DIAG_I, I2).holds);
    CHECK_FALSE(relate(RelationKind::LE, scale(-1.0, E11), I2).holds);
    CHECK(relate(RelationKind::LE_R, scale(-1.0, E11), I2).holds);
}

TEST_CASE("phase witnesses of the circled relations") {
    const RelationVerdict v = relate(RelationKind::LE_C, scale(i1, E11), I2);
    REQUIRE(v.holds);
    REQUIRE(v.phase.has_value());
    CHECK(std::abs(std::abs(*v.phase) - 1.0) < 1e-12);
    // alpha u must sit below e in the plain order.
    CHECK(relate(RelationKind::LE, scale(*v.phase, scale(i1, E11)), I2).holds);

    const RelationVerdict h = relate(RelationKind::SIM_HC, DIAG_I, I2);
    REQUIRE(h.holds);
    REQUIRE(h.phase.has_value());
    CHECK(relate(RelationKind::SIM_H, scale(*h.phase, DIAG_I), I2).holds);
}

TEST_CASE("degenerate inputs") {
    const Element z = zero_element(FULL2);
    CHECK(relate(RelationKind::LE, z, I2).holds);
    CHECK(relate(RelationKind::LE_C, z, I2).holds);
    CHECK(relate(RelationKind::LE_N, z, I2).holds);
    CHECK_FALSE(relate(RelationKind::SIM_2, z, I2).holds);
    CHECK(relate(RelationKind::SIM_2, z, z).holds);
    CHECK(relate(RelationKind::LE, I2, I2).holds);
}

TEST_CASE("witness elements are tripotents when the relation holds") {
    const RelationVerdict s = relate(RelationKind::SIM_H, NEG_SWAP, I2);
    REQUIRE(s.holds);
    REQUIRE(s.witness.has_value());
    REQUIRE(s.witness2.has_value());
    CHECK(is_tripotent(*s.witness));
    CHECK(is_tripotent(*s.witness2));
    CHECK(distance(add(*s.witness, *s.witness2), I2) < 1e-14);

    const TripleSystem spin = TripleSystem::spin(3);
    CMatrix u2(3, 1), e1(3, 1);
    u2 << 0.5 * i1, 0.5, 0;
    e1 << 1, 0, 0;
    const RelationVerdict n =
        relate(RelationKind::LE_N, make_element(spin, u2), make_element(spin, e1));
    REQUIRE(n.holds);
    REQUIRE(n.witness.has_value());
    CHECK(is_tripotent(*n.witness));
}

TEST_CASE("implication lattice closure") {
    CHECK(relation_implies(RelationKind::LE, RelationKind::LE_2));
    CHECK(relation_implies(RelationKind::LE, RelationKind::LE_N));
    CHECK(relation_implies(RelationKind::SIM_H, RelationKind::LE_N));
    CHECK(relation_implies(RelationKind::SIM_H, RelationKind::SIM_2));
    CHECK(relation_implies(RelationKind::SIM_2, RelationKind::SIM_N));
    CHECK(relation_implies(RelationKind::SIM_N, RelationKind::SIM_2));
    CHECK(relation_implies(RelationKind::LE_R, RelationKind::LE_HC));
    CHECK_FALSE(relation_implies(RelationKind::LE_2, RelationKind::LE));
    CHECK_FALSE(relation_implies(RelationKind::LE_H, RelationKind::LE_R));
    CHECK_FALSE(relation_implies(RelationKind::LE_2, RelationKind::SIM_2));
    CHECK(relation_implications().size() == 15);
}

TEST_CASE("audit stays lattice-consistent on reference pairs") {
    const std::vector<std::pair<Element, Element>> pairs = {
        {E11, I2},
        {NEG_SWAP, I2},
        {DIAG_I, I2},
        {DIAG_I, NEG_SWAP},
        {scale(i1, E11), I2},
        {I2, E11},
    };
    for (const auto& [u, e] : pairs) {
        const AuditReport ar = audit(u, e);
        CHECK(ar.latticeConsistent);
        CHECK(ar.violations.empty());
    }
}

TEST_CASE("shift automorphism roots of reference unitaries") {
    const ShiftAutomorphism sd = shift_automorphism(FULL2, DIAG_I);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK((sd.root - mat2(Complex(r, r), 0, 0, Complex(r, -r))).norm() < 1e-12);
    CHECK(distance(sd.apply(make_element(FULL2, CMatrix::Identity(2, 2))),
                   DIAG_I) < 1e-12);

    const Element swap = make_element(FULL2, mat2(0, 1, 1, 0));
    const ShiftAutomorphism ss = shift_automorphism(FULL2, swap);
    CHECK((ss.root - mat2(Complex(0.5, 0.5), Complex(0.5, -0.5),
                          Complex(0.5, -0.5), Complex(0.5, 0.5)))
              .norm() < 1e-12);
    CHECK(distance(ss.apply(ss.apply_inverse(swap)), swap) < 1e-12);
}

TEST_CASE("shift automorphisms preserve triple products and verdicts") {
    struct Case {
        TripleSystem sys;
        Element target;
    };
    CMatrix j4 = CMatrix::Zero(4, 4);
    j4.block(0, 2, 2, 2) = CMatrix::Identity(2, 2);
    j4.block(2, 0, 2, 2) = -CMatrix::Identity(2, 2);
    CMatrix sp(3, 1);
    sp << std::polar(1.0, 0.25 * 3.141592653589793), 0, 0;
    const std::vector<Case> cases = {
        {FULL2, DIAG_I},
        {TripleSystem::symmetric(2),
         make_element(TripleSystem::symmetric(2),
                      mat2(1.0 / std::sqrt(2.0), i1 / std::sqrt(2.0),
                           i1 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)))},
        {TripleSystem::antisymmetric(4),
         make_element(TripleSystem::antisymmetric(4), j4)},
        {TripleSystem::spin(3), make_element(TripleSystem::spin(3), sp)},
    };
    for (const Case& c : cases) {
        const ShiftAutomorphism phi = shift_automorphism(c.sys, c.target);
        const Element x = random_tripotent(c.sys, 1, 11);
        const Element y = random_tripotent(c.sys, 1, 12);
        const Element z = random_tripotent(c.sys, 1, 13);
        const Element lhs = phi.apply(triple_product(x, y, z));
        const Element rhs =
            triple_product(phi.apply(x), phi.apply(y), phi.apply(z));
        CHECK(distance(lhs, rhs) < 1e-10);
        CHECK(distance(phi.apply_inverse(phi.apply(x)), x) < 1e-10);

        const Element u = random_tripotent(c.sys, 1, 21);
        const Element e = random_tripotent(c.sys, max_rank(c.sys), 22);
        for (RelationKind k : all_relations())
            CHECK(relate(k, u, e).holds ==
                  relate(k, phi.apply(u), phi.apply(e)).holds);
    }
}

TEST_CASE("shift automorphism rejects non-unitary targets") {
    try {
        shift_automorphism(FULL2, E11);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotUnitary);
    }
    try {
        shift_automorphism(TripleSystem::matrix(2, 3),
                           make_element(TripleSystem::matrix(2, 3),
                                        CMatrix::Zero(2, 3)));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotUnitary);
    }
}
