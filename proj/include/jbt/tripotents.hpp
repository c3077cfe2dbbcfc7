#pragma once

#include <cstdint>
#include <vector>

#include "jbt/triples.hpp"

namespace jbt {

// {e, e, e} = e up to tol * max(1, |e|). The residual out-parameter reports
// the defect even when the check fails.
bool is_tripotent(const Element& e, double* residual = nullptr);

struct PeirceDims {
    int d2 = 0;
    int d1 = 0;
    int d0 = 0;
};

bool operator==(const PeirceDims& a, const PeirceDims& b);

// Peirce projection P_k(e) x for k in {0, 1, 2}, expressed through
// L = {e, e, .}: P2 = 2L^2 - L, P1 = 4(L - L^2), P0 = id - 3L + 2L^2.
Element peirce_project(const Element& e, const Element& x, int k);

// Q(e) x = {e, x, e}; P2(e) equals Q(e)^2 on tripotents.
Element quadratic_map(const Element& e, const Element& x);

// Real orthonormal coordinate basis of the system, used to materialize the
// Peirce projections as matrices.
std::vector<Element> standard_basis(const TripleSystem& sys);

// Ranks of the three Peirce projections (singular values above 1/2).
PeirceDims peirce_dims(const Element& e);

enum class TripotentClass {
    Zero,
    Minimal,            // d2 == 1
    Intermediate,
    CompleteNonUnitary, // d0 == 0, d1 > 0
    Unitary,            // d1 == d0 == 0
};

const char* tripotent_class_name(TripotentClass c);

struct Tripotent {
    Element element;
    PeirceDims dims;
    int rank = 0;
    TripotentClass cls = TripotentClass::Zero;
};

// Rank of a tripotent: number of unit singular values for the matrix
// families (halved in the antisymmetric one), and 0 / 1 / 2 for spin
// according to the l2 norm being 0, 1/sqrt(2) or 1. Values that sit between
// the admissible plateaus by more than 1e-7 raise AmbiguousRank.
int tripotent_rank(const Element& e);

// Certifies tripotency (NotTripotent otherwise), then fills in Peirce
// dimensions, rank and the class. Zero beats Unitary beats Minimal beats
// CompleteNonUnitary beats Intermediate when several labels apply.
Tripotent classify(const Element& e);

// Deterministic seeded tripotent of the requested rank; RankUnachievable
// when the family cannot host it.
Element random_tripotent(const TripleSystem& sys, int rank, std::uint64_t seed);

int max_rank(const TripleSystem& sys);

// Smallest unitary tripotent above e: w unitary with {e, w, e} = e.
// NoUnitaryExists for families without unitaries (non-square full,
// odd antisymmetric); CompletionFailed on numerical breakdown.
Element unitary_extension(const Element& e);

} // namespace jbt
