#pragma once

#include <string>

#include "jbt/linalg.hpp"

namespace jbt {

enum class Kind { Full, Symmetric, Antisymmetric, Spin };

const char* kind_name(Kind k);

// One of the four finite-dimensional system families:
//   Full            rows x cols complex matrices
//   Symmetric       n x n with x^T = x
//   Antisymmetric   n x n with x^T = -x, n >= 3
//   Spin            column vectors of dimension >= 3
struct TripleSystem {
    Kind kind = Kind::Full;
    int rows = 0;
    int cols = 0;
    double tolerance = 1e-9;

    static TripleSystem matrix(int r, int c, double tol = 1e-9);
    static TripleSystem symmetric(int n, double tol = 1e-9);
    static TripleSystem antisymmetric(int n, double tol = 1e-9);
    static TripleSystem spin(int dim, double tol = 1e-9);

    int dim() const { return rows; }  // spin dimension / matrix side
    std::string name() const;
};

// Same family and shape; tolerance is not part of the identity.
bool same_system(const TripleSystem& a, const TripleSystem& b);

struct Element {
    TripleSystem system;
    CMatrix payload;  // spin elements are dim x 1 columns
};

// Validates shape, finiteness and the (anti)symmetry constraint, then
// re-projects exactly onto the constraint subspace. Throws
// MembershipViolation / SystemMismatch.
Element make_element(const TripleSystem& sys, const CMatrix& payload);

Element zero_element(const TripleSystem& sys);

// {x, y, z}. Matrix families: (x y^* z + z y^* x) / 2. Spin:
// <x,y> z + <z,y> x - <x, conj(z)> conj(y) with <a,b> = sum a_i conj(b_i).
Element triple_product(const Element& x, const Element& y, const Element& z);

// Entrywise conjugate; stays inside every family.
Element conj_element(const Element& x);

Element add(const Element& x, const Element& y);
Element sub(const Element& x, const Element& y);
Element scale(const Complex& c, const Element& x);

Complex spin_dot(const Element& x, const Element& y);  // <x, y>, spin only

double hilbert_norm(const Element& x);  // Frobenius / l2

// Norm in the triple sense: largest singular value for matrix families,
// sqrt(q + sqrt(q^2 - |<x, conj x>|^2)) with q = <x,x> for spin.
double triple_norm(const Element& x);

double distance(const Element& x, const Element& y);

// max(1, |x|, |y|); all relative residual checks scale with this.
double residual_scale(const Element& x, const Element& y);

} // namespace jbt
