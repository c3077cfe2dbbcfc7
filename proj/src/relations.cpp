#include "jbt/relations.hpp"

#include <cmath>
#include <numbers>

namespace jbt {

namespace {

struct PhaseFit {
    Complex beta{1.0, 0.0};
    double residual = 0.0;
};

// Best unit beta with lhs = beta * u, least squares over all scalars.
PhaseFit phase_fit(const Element& lhs, const Element& u) {
    PhaseFit out;
    const double n2 = u.payload.squaredNorm();
    if (n2 < 1e-30) {
        out.residual = hilbert_norm(lhs);
        return out;
    }
    out.beta = (u.payload.conjugate().array() * lhs.payload.array()).sum() / n2;
    out.residual = (lhs.payload - out.beta * u.payload).norm();
    return out;
}

} // namespace

const char* relation_name(RelationKind k) {
    switch (k) {
        case RelationKind::LE: return "LE";
        case RelationKind::LE_R: return "LE_R";
        case RelationKind::LE_C: return "LE_C";
        case RelationKind::LE_H: return "LE_H";
        case RelationKind::LE_HC: return "LE_HC";
        case RelationKind::LE_N: return "LE_N";
        case RelationKind::LE_2: return "LE_2";
        case RelationKind::SIM_H: return "SIM_H";
        case RelationKind::SIM_HC: return "SIM_HC";
        case RelationKind::SIM_N: return "SIM_N";
        case RelationKind::SIM_2: return "SIM_2";
    }
    return "?";
}

std::optional<RelationKind> relation_from_name(const std::string& name) {
    for (RelationKind k : all_relations())
        if (name == relation_name(k)) return k;
    return std::nullopt;
}

const std::array<RelationKind, kRelationCount>& all_relations() {
    static const std::array<RelationKind, kRelationCount> kinds = {
        RelationKind::LE,    RelationKind::LE_R,  RelationKind::LE_C,
        RelationKind::LE_H,  RelationKind::LE_HC, RelationKind::LE_N,
        RelationKind::LE_2,  RelationKind::SIM_H, RelationKind::SIM_HC,
        RelationKind::SIM_N, RelationKind::SIM_2,
    };
    return kinds;
}

RelationVerdict relate(RelationKind kind, const Element& u, const Element& e) {
    if (!same_system(u.system, e.system))
        throw Error(Errc::SystemMismatch, "relate needs elements of one system");
    const double tol = u.system.tolerance;
    const double scl = residual_scale(u, e);
    const auto ok = [&](double r) { return r <= tol * scl; };

    RelationVerdict v;
    v.kind = kind;
    switch (kind) {
        case RelationKind::LE: {
            v.residual = distance(triple_product(u, e, u), u);
            v.holds = ok(v.residual);
            break;
        }
        case RelationKind::LE_R: {
            const Element q = triple_product(u, e, u);
            v.residual = std::min(distance(q, u), distance(q, scale(-1.0, u)));
            v.holds = ok(v.residual);
            break;
        }
        case RelationKind::LE_C: {
            const PhaseFit fit = phase_fit(triple_product(u, e, u), u);
            v.residual = fit.residual;
            v.holds = (ok(fit.residual) && std::abs(std::abs(fit.beta) - 1.0) <= tol) ||
                      hilbert_norm(u) <= tol;
            v.phase = std::conj(fit.beta);
            break;
        }
        case RelationKind::LE_H: {
            v.residual = distance(triple_product(e, u, e), u);
            v.holds = ok(v.residual);
            break;
        }
        case RelationKind::LE_HC: {
            const PhaseFit fit = phase_fit(triple_product(e, u, e), u);
            v.residual = fit.residual;
            v.holds = (ok(fit.residual) && std::abs(std::abs(fit.beta) - 1.0) <= tol) ||
                      hilbert_norm(u) <= tol;
            // {e, alpha u, e} = conj(alpha) beta u, so alpha^2 = beta.
            v.phase = std::sqrt(fit.beta);
            break;
        }
        case RelationKind::LE_N: {
            const RelationVerdict le2 = relate(RelationKind::LE_2, u, e);
            const Element w = triple_product(u, u, e);
            double wres = 0.0;
            const bool wtrip = is_tripotent(w, &wres);
            v.residual = std::max(le2.residual, wres);
            v.holds = le2.holds && wtrip;
            v.witness = w;
            break;
        }
        case RelationKind::LE_2: {
            v.residual = distance(triple_product(e, e, u), u);
            v.holds = ok(v.residual);
            break;
        }
        case RelationKind::SIM_2:
        case RelationKind::SIM_N: {
            v.residual = std::max(distance(triple_product(e, e, u), u),
                                  distance(triple_product(u, u, e), e));
            v.holds = ok(v.residual);
            break;
        }
        case RelationKind::SIM_H: {
            const RelationVerdict leh = relate(RelationKind::LE_H, u, e);
            const RelationVerdict s2 = relate(RelationKind::SIM_2, u, e);
            v.residual = std::max(leh.residual, s2.residual);
            v.holds = leh.holds && s2.holds;
            v.witness = scale(0.5, add(e, u));
            v.witness2 = scale(0.5, sub(e, u));
            break;
        }
        case RelationKind::SIM_HC: {
            const RelationVerdict lehc = relate(RelationKind::LE_HC, u, e);
            const RelationVerdict s2 = relate(RelationKind::SIM_2, u, e);
            v.residual = std::max(lehc.residual, s2.residual);
            v.holds = lehc.holds && s2.holds;
            v.phase = lehc.phase;
            break;
        }
    }
    return v;
}

const std::vector<std::pair<RelationKind, RelationKind>>& relation_implications() {
    using RK = RelationKind;
    static const std::vector<std::pair<RK, RK>> edges = {
        {RK::LE, RK::LE_R},      {RK::LE_R, RK::LE_C},   {RK::LE_R, RK::LE_H},
        {RK::LE_C, RK::LE_HC},   {RK::LE_H, RK::LE_HC},  {RK::LE_HC, RK::LE_N},
        {RK::LE_N, RK::LE_2},    {RK::SIM_H, RK::SIM_HC}, {RK::SIM_HC, RK::SIM_2},
        {RK::SIM_2, RK::SIM_N},  {RK::SIM_N, RK::SIM_2}, {RK::SIM_H, RK::LE_H},
        {RK::SIM_HC, RK::LE_HC}, {RK::SIM_2, RK::LE_2},  {RK::SIM_N, RK::LE_N},
    };
    return edges;
}

namespace {

// Transitive closure of the implication lattice as an 11x11 table.
const std::array<std::array<bool, kRelationCount>, kRelationCount>& implication_closure() {
    static const auto table = [] {
        std::array<std::array<bool, kRelationCount>, kRelationCount> t{};
        for (int i = 0; i < kRelationCount; ++i) t[i][i] = true;
        for (const auto& [a, b] : relation_implications())
            t[static_cast<int>(a)][static_cast<int>(b)] = true;
        for (int k = 0; k < kRelationCount; ++k)
            for (int i = 0; i < kRelationCount; ++i)
                for (int j = 0; j < kRelationCount; ++j)
                    if (t[i][k] && t[k][j]) t[i][j] = true;
        return t;
    }();
    return table;
}

} // namespace

bool relation_implies(RelationKind a, RelationKind b) {
    return implication_closure()[static_cast<int>(a)][static_cast<int>(b)];
}

AuditReport audit(const Element& u, const Element& e) {
    AuditReport report;
    for (int i = 0; i < kRelationCount; ++i)
        report.verdicts[i] = relate(all_relations()[i], u, e);
    for (const auto& [a, b] : relation_implications()) {
        if (report.verdicts[static_cast<int>(a)].holds &&
            !report.verdicts[static_cast<int>(b)].holds) {
            report.latticeConsistent = false;
            report.violations.emplace_back(a, b);
        }
    }
    return report;
}

Element ShiftAutomorphism::apply(const Element& x) const {
    if (!same_system(x.system, system))
        throw Error(Errc::SystemMismatch, "shift applied across systems");
    switch (family) {
        case Kind::Full:
        case Kind::Symmetric:
            return make_element(system, root * x.payload * root);
        case Kind::Antisymmetric:
            return make_element(system, root * x.payload * root.transpose());
        case Kind::Spin:
            return make_element(system, spinPhase * (root * x.payload));
    }
    throw Error(Errc::ConfigError, "unreachable");
}

Element ShiftAutomorphism::apply_inverse(const Element& x) const {
    if (!same_system(x.system, system))
        throw Error(Errc::SystemMismatch, "shift applied across systems");
    switch (family) {
        case Kind::Full:
        case Kind::Symmetric:
            return make_element(system, root.adjoint() * x.payload * root.adjoint());
        case Kind::Antisymmetric:
            return make_element(system,
                                root.adjoint() * x.payload * root.conjugate());
        case Kind::Spin:
            return make_element(system,
                                (root.transpose() * x.payload) / spinPhase);
    }
    throw Error(Errc::ConfigError, "unreachable");
}

ShiftAutomorphism shift_automorphism(const TripleSystem& sys, const Element& e) {
    if (!same_system(sys, e.system))
        throw Error(Errc::SystemMismatch, "shift target from another system");
    double tripRes = 0.0;
    if (!is_tripotent(e, &tripRes))
        throw Error(Errc::NotUnitary, "shift target is not a tripotent, residual " +
                                          std::to_string(tripRes));
    const double tol = sys.tolerance;
    const int n = sys.rows;

    ShiftAutomorphism shift;
    shift.system = sys;
    shift.family = sys.kind;
    shift.target = e;

    if (sys.kind == Kind::Spin) {
        if (tripotent_rank(e) != 2)
            throw Error(Errc::NotUnitary, "spin tripotent of rank below two");
        const Complex c = spin_dot(e, conj_element(e));
        Complex alpha = std::sqrt(c);
        CVector x = e.payload.col(0) / alpha;
        if (x.imag().norm() > 100 * tol)
            throw Error(Errc::RootOutsideSystem,
                        "dephased spin unitary is not a real vector");
        RVector xr = x.real();
        xr /= xr.norm();
        RVector d = RVector::Zero(n);
        d(0) = 1.0;
        d -= xr;
        RMatrix r = RMatrix::Identity(n, n);
        if (d.norm() > 1e-12)
            r -= 2.0 * (d * d.transpose()) / d.squaredNorm();
        shift.spinPhase = alpha;
        shift.root = r.cast<Complex>();
        CMatrix unit = CMatrix::Zero(n, 1);
        unit(0, 0) = 1.0;
        shift.unit = make_element(sys, unit);
    } else {
        const double uniRes =
            (e.payload.adjoint() * e.payload - CMatrix::Identity(n, n)).norm();
        if (sys.kind == Kind::Full && sys.rows != sys.cols)
            throw Error(Errc::NotUnitary, "rectangular tripotents are never unitary");
        if (uniRes > 10 * tol * std::max(1.0, hilbert_norm(e)))
            throw Error(Errc::NotUnitary, "shift target unitarity residual " +
                                              std::to_string(uniRes));
        switch (sys.kind) {
            case Kind::Full: {
                const SpectralData sp = normal_eig(e.payload, tol);
                CMatrix v = CMatrix::Zero(n, n);
                for (int i = 0; i < n; ++i)
                    v += std::sqrt(sp.values[i]) * sp.basis.col(i) *
                         sp.basis.col(i).adjoint();
                shift.root = v;
                shift.unit = make_element(sys, CMatrix::Identity(n, n));
                break;
            }
            case Kind::Symmetric: {
                const RealSpectralData rs = real_orthogonal_spectral(e.payload, tol);
                CMatrix d = CMatrix::Zero(n, n);
                for (int i = 0; i < n; ++i) d(i, i) = std::sqrt(rs.phases[i]);
                const CMatrix v =
                    rs.q.cast<Complex>() * d * rs.q.transpose().cast<Complex>();
                if ((v - v.transpose()).norm() > 100 * tol)
                    throw Error(Errc::RootOutsideSystem, "asymmetric square root");
                shift.root = v;
                shift.unit = make_element(sys, CMatrix::Identity(n, n));
                break;
            }
            case Kind::Antisymmetric: {
                if (n % 2 != 0)
                    throw Error(Errc::NotUnitary,
                                "odd antisymmetric systems have no unitaries");
                CMatrix e0 = CMatrix::Zero(n, n);
                for (int t = 0; t < n / 2; ++t) {
                    e0(2 * t, 2 * t + 1) = 1.0;
                    e0(2 * t + 1, 2 * t) = -1.0;
                }
                const CMatrix w = -e.payload * e0;
                const SpectralData sp = normal_eig(w, tol);
                CMatrix v = CMatrix::Zero(n, n);
                for (int i = 0; i < n; ++i)
                    v += std::sqrt(sp.values[i]) * sp.basis.col(i) *
                         sp.basis.col(i).adjoint();
                if ((v.transpose() + e0 * v * e0).norm() > 100 * tol)
                    throw Error(Errc::RootOutsideSystem,
                                "square root leaves the twisted symplectic set");
                shift.root = v;
                shift.unit = make_element(sys, e0);
                break;
            }
            default: break;
        }
    }

    const double mapRes = distance(shift.apply(shift.unit), e);
    if (mapRes > 100 * tol * std::max(1.0, hilbert_norm(e)))
        throw Error(Errc::RootOutsideSystem,
                    "shift misses its target, residual " + std::to_string(mapRes));
    return shift;
}

} // namespace jbt
