#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "jbt/tripotents.hpp"

namespace jbt {

// The eleven order-type relations between tripotents u, e.
enum class RelationKind {
    LE,      // {u, e, u} = u
    LE_R,    // {u, e, u} = +-u
    LE_C,    // {u, e, u} = beta u with |beta| = 1
    LE_H,    // {e, u, e} = u
    LE_HC,   // {e, u, e} = gamma u with |gamma| = 1
    LE_N,    // {e, e, u} = u and {u, u, e} is a tripotent
    LE_2,    // {e, e, u} = u
    SIM_H,   // LE_H and SIM_2
    SIM_HC,  // LE_HC and SIM_2
    SIM_N,   // coincides with SIM_2
    SIM_2,   // {e, e, u} = u and {u, u, e} = e
};

constexpr int kRelationCount = 11;

const char* relation_name(RelationKind k);
std::optional<RelationKind> relation_from_name(const std::string& name);
const std::array<RelationKind, kRelationCount>& all_relations();

struct RelationVerdict {
    RelationKind kind;
    bool holds = false;
    double residual = 0.0;  // defect norm of the defining identity
    // LE_C: unit alpha with alpha*u <= e. LE_HC: unit alpha with
    // u = alpha {e, u, e}. Both are conjugates of the fitted phase.
    std::optional<Complex> phase;
    // LE_N: the tripotent {u, u, e}. SIM_H: the halves (e + u)/2, (e - u)/2.
    std::optional<Element> witness;
    std::optional<Element> witness2;
};

// Decides one relation; residuals compare against tol * max(1, |u|, |e|)
// with tol defaulting to the system tolerance.
RelationVerdict relate(RelationKind kind, const Element& u, const Element& e);

struct AuditReport {
    std::array<RelationVerdict, kRelationCount> verdicts;
    bool latticeConsistent = true;
    // Implications of the relation lattice violated by the verdicts.
    std::vector<std::pair<RelationKind, RelationKind>> violations;
};

// Runs all eleven relations and cross-checks them against the implication
// lattice (LE => LE_R => LE_C => LE_HC, LE_R => LE_H => LE_HC => LE_N =>
// LE_2, SIM_H => SIM_HC => SIM_2 = SIM_N, SIM_* => LE_*).
AuditReport audit(const Element& u, const Element& e);

const std::vector<std::pair<RelationKind, RelationKind>>& relation_implications();

// a => b in the transitive closure of the lattice (reflexively).
bool relation_implies(RelationKind a, RelationKind b);

// Triple automorphism moving the canonical unit of a unitary-bearing family
// onto a chosen unitary tripotent e:
//   Full / Symmetric    x -> v x v with v the principal (symmetric) square
//                       root of e; the unit is the identity matrix.
//   Antisymmetric       x -> v x v^T with v^2 = -e e0, v a polynomial in
//                       that product; the unit is e0 = blkdiag(J, ..., J).
//   Spin                x -> alpha R x with alpha^2 = <e, conj e> and R a
//                       real rotation; the unit is the first basis vector.
struct ShiftAutomorphism {
    TripleSystem system;
    Kind family = Kind::Full;
    CMatrix root;        // v, or the real rotation R for spin
    Complex spinPhase{1.0, 0.0};
    Element unit;        // canonical unitary the shift starts from
    Element target;      // e = apply(unit)

    Element apply(const Element& x) const;
    Element apply_inverse(const Element& x) const;
};

// Throws NotUnitary when e is not a unitary tripotent and RootOutsideSystem
// when the computed root leaves the family.
ShiftAutomorphism shift_automorphism(const TripleSystem& sys, const Element& e);

} // namespace jbt
