#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jbt/relations.hpp"

namespace jbt {

// Transitive hulls certified by explicit chains.
enum class ChainClaim {
    LE_NT,    // transitive hull of LE_N
    SIM_HT,   // transitive hull of SIM_H
    LE_HT,    // transitive hull of LE_H
    LE_HCT,   // transitive hull of LE_HC
    SIM_HCT,  // transitive hull of SIM_HC
};

const char* claim_name(ChainClaim c);
std::optional<ChainClaim> claim_from_name(const std::string& name);

// A chain u = nodes[0], nodes[1], ..., nodes[k] = e together with the
// relation certified for every consecutive pair. links[i] relates
// (nodes[i], nodes[i+1]) and must entail the claimed hull's base relation;
// claims of similarity type additionally require symmetric link kinds.
struct ChainCertificate {
    TripleSystem system;
    ChainClaim claim;
    std::vector<Element> nodes;
    std::vector<RelationKind> links;

    int length() const { return static_cast<int>(links.size()); }
};

struct VerifyOutcome {
    bool valid = false;
    double maxResidual = 0.0;
    std::string message;
};

// Re-certifies everything from scratch: every node is a tripotent, every
// link relation holds, every link kind is admissible for the claim, and the
// endpoints are the claimed pair.
VerifyOutcome verify_certificate(const ChainCertificate& cert);

bool link_admissible(ChainClaim claim, RelationKind kind);

// Exact obstruction for SIM_HT between unitaries of the same system:
//   Full           det(e^* u) = +-1
//   Symmetric      det u = +-det e
//   Antisymmetric  det u = det e
//   Spin           <u, conj u> = +-<e, conj e>
struct HullInvariant {
    Kind family;
    Complex valueU;
    Complex valueE;
    bool compatible = false;
    int sign = 0;  // matching branch, +1 or -1; 0 when incompatible
};

inline constexpr double kHullTolerance = 1e-8;

HullInvariant hull_invariant(const Element& u, const Element& e);

// Worst-case certified chain length: 2 rank(e) - 1 for SIM_HT in the matrix
// families, 3 in spin; one more for the hulls that may need a leading
// non-similarity link; 2 for LE_NT.
int chain_length_bound(ChainClaim claim, const Element& e);

struct CertResult {
    std::optional<ChainCertificate> certificate;
    std::optional<Errc> failure;  // NotLe2, InvariantObstruction, ...
    std::string message;
    double maxResidual = 0.0;

    bool ok() const { return certificate.has_value(); }
};

// u <=_{n,t} e. Succeeds exactly when {e, e, u} = u, with the chain
// u <= w ~_2 e through a unitary extension w of u inside the corner of e.
CertResult cert_nt(const Element& u, const Element& e);

// u ~_{h,t} e for unitary tripotents, via the shift automorphism onto the
// canonical unit followed by the family reduction. Succeeds exactly when
// hull_invariant is compatible; every link is SIM_H and the nodes never
// leave the joint Peirce-2 space.
CertResult cert_simht_unitary(const Element& u, const Element& e);

// u <=_{h,t} e. Requires {e, e, u} = u; when u is not unitary in the corner
// of e the completion phase is tuned so the invariant always holds, so
// success is equivalent to LE_2 in that case; otherwise it reduces to the
// unitary case and its invariant.
CertResult cert_ht(const Element& u, const Element& e);

// u <=_{hc,t} e. Like cert_ht but a single phase-twisted link is allowed,
// which absorbs the invariant; succeeds exactly when {e, e, u} = u.
CertResult cert_hct(const Element& u, const Element& e);

// u ~_{hc,t} e for ~_2-equivalent tripotents; SIM_H chains plus at most one
// SIM_HC link.
CertResult cert_simhct(const Element& u, const Element& e);

} // namespace jbt
