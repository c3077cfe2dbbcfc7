#include "jbt/fuzz.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <array>
#include <random>
#include <sstream>

#include "jbt/tripotents.hpp"

namespace jbt {

namespace {

constexpr std::size_t kMaxDiagnostics = 16;

void note(FuzzReport& rep, const std::string& msg) {
    if (rep.diagnostics.size() < kMaxDiagnostics) rep.diagnostics.push_back(msg);
}

std::string pair_tag(const Element& u, const Element& e, std::uint64_t seed) {
    std::ostringstream os;
    os << u.system.name() << " seed " << seed << " ranks ("
       << tripotent_rank(u) << ", " << tripotent_rank(e) << ")";
    return os.str();
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double gauss() {
        if (hasSpare_) {
            hasSpare_ = false;
            return spare_;
        }
        const double u1 =
            (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * kPi * u2);
        hasSpare_ = true;
        return r * std::cos(2.0 * kPi * u2);
    }

    int below(int n) { return static_cast<int>(gen_() % static_cast<std::uint64_t>(n)); }

private:
    static constexpr double kPi = 3.141592653589793238462643383279502884;
    std::mt19937_64 gen_;
    bool hasSpare_ = false;
    double spare_ = 0.0;
};

CMatrix random_orthonormal(Rng& rng, int n, bool realOnly) {
    CMatrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g(i, j) = realOnly ? Complex(rng.gauss(), 0.0)
                               : Complex(rng.gauss(), rng.gauss());
    Eigen::HouseholderQR<CMatrix> qr(g);
    return qr.householderQ() * CMatrix::Identity(n, n);
}

// For projections the eleven verdicts collapse: every order relation agrees
// with LE and every similarity relation agrees with SIM_2.
bool projection_collapse_ok(const Element& p, const Element& q) {
    static const std::array<RelationKind, 7> orders = {
        RelationKind::LE,   RelationKind::LE_R, RelationKind::LE_C,
        RelationKind::LE_H, RelationKind::LE_HC, RelationKind::LE_N,
        RelationKind::LE_2};
    static const std::array<RelationKind, 4> sims = {
        RelationKind::SIM_H, RelationKind::SIM_HC, RelationKind::SIM_N,
        RelationKind::SIM_2};
    const bool order0 = relate(orders[0], p, q).holds;
    for (std::size_t i = 1; i < orders.size(); ++i)
        if (relate(orders[i], p, q).holds != order0) return false;
    const bool sim0 = relate(sims[0], p, q).holds;
    for (std::size_t i = 1; i < sims.size(); ++i)
        if (relate(sims[i], p, q).holds != sim0) return false;
    return true;
}

void fuzz_projections(Kind family, int maxDim, std::uint64_t seed,
                      FuzzReport& rep) {
    Rng rng(seed * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull);
    const int n = 2 + rng.below(std::max(1, maxDim - 1));
    const TripleSystem sys = family == Kind::Full
                                 ? TripleSystem::matrix(n, n)
                                 : TripleSystem::symmetric(n);
    const bool realOnly = family == Kind::Symmetric;
    const CMatrix v = random_orthonormal(rng, n, realOnly);
    const int kq = 1 + rng.below(n);
    const int kp = 1 + rng.below(kq);
    const CMatrix qm = v.leftCols(kq) * v.leftCols(kq).adjoint();
    CMatrix pm;
    if (seed % 3 == 0) {
        pm = qm;
    } else if (seed % 3 == 1) {
        pm = v.leftCols(kp) * v.leftCols(kp).adjoint();
    } else {
        const CMatrix w = random_orthonormal(rng, n, realOnly);
        pm = w.leftCols(kp) * w.leftCols(kp).adjoint();
    }
    const Element q = make_element(sys, qm);
    const Element p = make_element(sys, pm);
    if (!projection_collapse_ok(p, q)) {
        ++rep.projectionViolations;
        note(rep, "projection collapse failed: " + pair_tag(p, q, seed));
    }
}

void audit_pair(const Element& u, const Element& e, std::uint64_t seed,
                FuzzReport& rep) {
    ++rep.pairs;
    const AuditReport ar = audit(u, e);
    if (!ar.latticeConsistent) {
        ++rep.latticeViolations;
        for (const auto& [a, b] : ar.violations)
            note(rep, std::string("lattice: ") + relation_name(a) +
                          " without " + relation_name(b) + " on " +
                          pair_tag(u, e, seed));
    }

    bool simh = false, len = false, le2 = false;
    for (const RelationVerdict& v : ar.verdicts) {
        if (v.kind == RelationKind::SIM_H) simh = v.holds;
        if (v.kind == RelationKind::LE_N) len = v.holds;
        if (v.kind == RelationKind::LE_2) le2 = v.holds;
    }

    const bool halves = is_tripotent(scale(0.5, add(e, u))) &&
                        is_tripotent(scale(0.5, sub(e, u)));
    if (simh != halves) {
        ++rep.simhWitnessMismatches;
        note(rep, "SIM_H vs halves: " + pair_tag(u, e, seed));
    }

    if (len) {
        const Element w = triple_product(u, u, e);
        if (!relate(RelationKind::SIM_2, u, w).holds) {
            ++rep.lenWitnessMismatches;
            note(rep, "LE_N without u ~_2 {u,u,e}: " + pair_tag(u, e, seed));
        }
    }

    if (!le2) return;
    const auto run = [&](ChainClaim claim, int bound) {
        const CertResult res =
            claim == ChainClaim::LE_NT ? cert_nt(u, e) : cert_hct(u, e);
        if (!res.ok() || res.certificate->length() > bound) {
            ++rep.certFailures;
            note(rep, std::string(claim_name(claim)) + " cert failed: " +
                          pair_tag(u, e, seed) + " " + res.message);
            return;
        }
        ++rep.chainsBuilt;
        rep.maxChainLength =
            std::max(rep.maxChainLength, res.certificate->length());
    };
    run(ChainClaim::LE_NT, chain_length_bound(ChainClaim::LE_NT, e));
    run(ChainClaim::LE_HCT, chain_length_bound(ChainClaim::LE_HCT, e));
}

TripleSystem draw_system(Kind family, int maxDim, Rng& rng) {
    switch (family) {
        case Kind::Full: {
            const int r = 2 + rng.below(std::max(1, maxDim - 1));
            const int c = 2 + rng.below(std::max(1, maxDim - 1));
            return TripleSystem::matrix(r, c);
        }
        case Kind::Symmetric:
            return TripleSystem::symmetric(2 + rng.below(std::max(1, maxDim - 1)));
        case Kind::Antisymmetric:
            return TripleSystem::antisymmetric(3 +
                                               rng.below(std::max(1, maxDim - 2)));
        case Kind::Spin:
            return TripleSystem::spin(3 + rng.below(std::max(1, maxDim - 2)));
    }
    throw Error(Errc::ConfigError, "unknown family");
}

void fuzz_family(Kind family, const FuzzConfig& cfg, std::uint64_t seed,
                 FuzzReport& rep) {
    const std::uint64_t mix =
        seed * 1000003ull + static_cast<std::uint64_t>(family) * 7919ull;
    Rng rng(mix);
    const TripleSystem sys = draw_system(family, cfg.maxDim, rng);
    const int cap = max_rank(sys);
    const int ru = rng.below(cap + 1);
    const int re = rng.below(cap + 1);
    const Element u = random_tripotent(sys, ru, mix * 2 + 1);
    const Element e = random_tripotent(sys, re, mix * 2 + 2);

    audit_pair(u, e, seed, rep);

    if (seed % 4 == 0) audit_pair(u, u, seed, rep);
    if (seed % 4 == 2) audit_pair(scale(-1.0, u), u, seed, rep);

    if (ru > 0 && seed % 2 == 0) {
        try {
            audit_pair(u, unitary_extension(u), seed, rep);
        } catch (const Error& err) {
            if (err.code() != Errc::NoUnitaryExists) throw;
        }
    }

    if (family == Kind::Full || family == Kind::Symmetric)
        fuzz_projections(family, cfg.maxDim, mix, rep);
}

} // namespace

FuzzReport run_fuzz(const FuzzConfig& cfg) {
    if (cfg.tol <= 0.0) throw Error(Errc::ConfigError, "tolerance must be positive");
    if (cfg.maxDim < 2) throw Error(Errc::ConfigError, "maxDim must be at least 2");
    for (Kind f : cfg.families) {
        const bool matrixFamily = f != Kind::Spin;
        if (matrixFamily && cfg.maxDim > 12)
            throw Error(Errc::ConfigError, "matrix families support maxDim <= 12");
        if (f == Kind::Spin && cfg.maxDim > 16)
            throw Error(Errc::ConfigError, "spin factors support maxDim <= 16");
    }

    FuzzReport rep;
    for (std::uint64_t s = cfg.seedBegin; s < cfg.seedEnd; ++s)
        for (Kind f : cfg.families) fuzz_family(f, cfg, s, rep);
    return rep;
}

} // namespace jbt
