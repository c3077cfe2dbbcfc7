#include "jbt/triples.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace jbt {

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::Full: return "matrix";
        case Kind::Symmetric: return "symmetric";
        case Kind::Antisymmetric: return "antisymmetric";
        case Kind::Spin: return "spin";
    }
    return "?";
}

TripleSystem TripleSystem::matrix(int r, int c, double tol) {
    if (r < 1 || c < 1)
        throw Error(Errc::ConfigError, "matrix system needs positive dimensions");
    return TripleSystem{Kind::Full, r, c, tol};
}

TripleSystem TripleSystem::symmetric(int n, double tol) {
    if (n < 1) throw Error(Errc::ConfigError, "symmetric system needs n >= 1");
    return TripleSystem{Kind::Symmetric, n, n, tol};
}

TripleSystem TripleSystem::antisymmetric(int n, double tol) {
    if (n < 3) throw Error(Errc::ConfigError, "antisymmetric system needs n >= 3");
    return TripleSystem{Kind::Antisymmetric, n, n, tol};
}

TripleSystem TripleSystem::spin(int dim, double tol) {
    if (dim < 3) throw Error(Errc::ConfigError, "spin system needs dimension >= 3");
    return TripleSystem{Kind::Spin, dim, 1, tol};
}

std::string TripleSystem::name() const {
    switch (kind) {
        case Kind::Full:
            return "matrix(" + std::to_string(rows) + "x" + std::to_string(cols) + ")";
        case Kind::Symmetric: return "symmetric(" + std::to_string(rows) + ")";
        case Kind::Antisymmetric: return "antisymmetric(" + std::to_string(rows) + ")";
        case Kind::Spin: return "spin(" + std::to_string(rows) + ")";
    }
    return "?";
}

bool same_system(const TripleSystem& a, const TripleSystem& b) {
    return a.kind == b.kind && a.rows == b.rows && a.cols == b.cols;
}

Element make_element(const TripleSystem& sys, const CMatrix& payload) {
    if (payload.rows() != sys.rows || payload.cols() != sys.cols)
        throw Error(Errc::SystemMismatch,
                    "payload shape does not match " + sys.name());
    if (!all_finite(payload))
        throw Error(Errc::MembershipViolation, "non-finite entries");
    Element out{sys, payload};
    const double scale = std::max(1.0, payload.norm());
    if (sys.kind == Kind::Symmetric) {
        if ((payload - payload.transpose()).norm() > sys.tolerance * scale)
            throw Error(Errc::MembershipViolation, "matrix is not symmetric");
        out.payload = (payload + payload.transpose()) / 2.0;
    } else if (sys.kind == Kind::Antisymmetric) {
        if ((payload + payload.transpose()).norm() > sys.tolerance * scale)
            throw Error(Errc::MembershipViolation, "matrix is not antisymmetric");
        out.payload = (payload - payload.transpose()) / 2.0;
    }
    return out;
}

Element zero_element(const TripleSystem& sys) {
    return Element{sys, CMatrix::Zero(sys.rows, sys.cols)};
}

namespace {

void require_same(const Element& a, const Element& b, const char* who) {
    if (!same_system(a.system, b.system))
        throw Error(Errc::SystemMismatch, std::string(who) + ": mixed systems");
}

Element reproject(const Element& x) {
    // re-projection keeps rounding drift out of the constraint subspace;
    // products of members land there exactly in exact arithmetic
    Element out = x;
    if (x.system.kind == Kind::Symmetric)
        out.payload = (x.payload + x.payload.transpose()) / 2.0;
    else if (x.system.kind == Kind::Antisymmetric)
        out.payload = (x.payload - x.payload.transpose()) / 2.0;
    return out;
}

} // namespace

Element triple_product(const Element& x, const Element& y, const Element& z) {
    require_same(x, y, "triple_product");
    require_same(x, z, "triple_product");
    Element out = x;
    if (x.system.kind == Kind::Spin) {
        const Complex xy = spin_dot(x, y);
        const Complex zy = spin_dot(z, y);
        const Complex xzc = (x.payload.array() * z.payload.array()).sum();
        out.payload = xy * z.payload + zy * x.payload - xzc * y.payload.conjugate();
        return out;
    }
    const CMatrix& a = x.payload;
    const CMatrix& b = y.payload;
    const CMatrix& c = z.payload;
    out.payload = (a * b.adjoint() * c + c * b.adjoint() * a) / 2.0;
    return reproject(out);
}

Element conj_element(const Element& x) {
    Element out = x;
    out.payload = x.payload.conjugate();
    return out;
}

Element add(const Element& x, const Element& y) {
    require_same(x, y, "add");
    Element out = x;
    out.payload = x.payload + y.payload;
    return out;
}

Element sub(const Element& x, const Element& y) {
    require_same(x, y, "sub");
    Element out = x;
    out.payload = x.payload - y.payload;
    return out;
}

Element scale(const Complex& c, const Element& x) {
    Element out = x;
    out.payload = c * x.payload;
    return out;
}

Complex spin_dot(const Element& x, const Element& y) {
    if (x.system.kind != Kind::Spin || y.system.kind != Kind::Spin)
        throw Error(Errc::SystemMismatch, "spin_dot needs spin elements");
    return (x.payload.array() * y.payload.array().conjugate()).sum();
}

double hilbert_norm(const Element& x) { return x.payload.norm(); }

double triple_norm(const Element& x) {
    if (x.system.kind == Kind::Spin) {
        const double q = std::real(spin_dot(x, x));
        const Complex d = (x.payload.array() * x.payload.array()).sum();
        const double disc = std::max(q * q - std::norm(d), 0.0);
        return std::sqrt(q + std::sqrt(disc));
    }
    Eigen::JacobiSVD<CMatrix> sv(x.payload);
    return sv.singularValues().size() ? sv.singularValues()(0) : 0.0;
}

double distance(const Element& x, const Element& y) {
    require_same(x, y, "distance");
    return (x.payload - y.payload).norm();
}

double residual_scale(const Element& x, const Element& y) {
    return std::max({1.0, hilbert_norm(x), hilbert_norm(y)});
}

} // namespace jbt
