#include "jbt/tripotents.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace jbt {

namespace {

constexpr double kRankTol = 1e-7;

// Gaussian draws on top of the raw mt19937_64 stream. The standard
// distributions are implementation-defined, so reports would stop being
// byte-identical across standard libraries; this keeps them portable.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform() {  // [0, 1)
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double gauss() {
        if (haveSpare_) {
            haveSpare_ = false;
            return spare_;
        }
        const double u1 = (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(t);
        haveSpare_ = true;
        return r * std::cos(t);
    }

    Complex cgauss() {
        const double re = gauss();
        const double im = gauss();
        return Complex(re, im);
    }

    Complex phase() {
        const double t = 2.0 * std::numbers::pi * uniform();
        return Complex(std::cos(t), std::sin(t));
    }

private:
    std::mt19937_64 gen_;
    bool haveSpare_ = false;
    double spare_ = 0.0;
};

CMatrix random_unitary(Rng& rng, int n) {
    CMatrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = rng.cgauss();
    Eigen::HouseholderQR<CMatrix> qr(g);
    return qr.householderQ();
}

} // namespace

bool is_tripotent(const Element& e, double* residual) {
    const double res = distance(triple_product(e, e, e), e);
    if (residual) *residual = res;
    return res <= e.system.tolerance * std::max(1.0, hilbert_norm(e));
}

bool operator==(const PeirceDims& a, const PeirceDims& b) {
    return a.d2 == b.d2 && a.d1 == b.d1 && a.d0 == b.d0;
}

Element peirce_project(const Element& e, const Element& x, int k) {
    if (k < 0 || k > 2)
        throw Error(Errc::ConfigError, "peirce index must be 0, 1 or 2");
    const Element lx = triple_product(e, e, x);
    const Element llx = triple_product(e, e, lx);
    switch (k) {
        case 2: return sub(scale(2.0, llx), lx);
        case 1: return scale(4.0, sub(lx, llx));
        default: return add(sub(x, scale(3.0, lx)), scale(2.0, llx));
    }
}

Element quadratic_map(const Element& e, const Element& x) {
    return triple_product(e, x, e);
}

std::vector<Element> standard_basis(const TripleSystem& sys) {
    std::vector<Element> out;
    const double s = 1.0 / std::sqrt(2.0);
    switch (sys.kind) {
        case Kind::Full:
            for (int i = 0; i < sys.rows; ++i)
                for (int j = 0; j < sys.cols; ++j) {
                    CMatrix m = CMatrix::Zero(sys.rows, sys.cols);
                    m(i, j) = 1.0;
                    out.push_back(Element{sys, m});
                }
            break;
        case Kind::Symmetric:
            for (int i = 0; i < sys.rows; ++i) {
                CMatrix m = CMatrix::Zero(sys.rows, sys.rows);
                m(i, i) = 1.0;
                out.push_back(Element{sys, m});
            }
            for (int i = 0; i < sys.rows; ++i)
                for (int j = i + 1; j < sys.rows; ++j) {
                    CMatrix m = CMatrix::Zero(sys.rows, sys.rows);
                    m(i, j) = m(j, i) = s;
                    out.push_back(Element{sys, m});
                }
            break;
        case Kind::Antisymmetric:
            for (int i = 0; i < sys.rows; ++i)
                for (int j = i + 1; j < sys.rows; ++j) {
                    CMatrix m = CMatrix::Zero(sys.rows, sys.rows);
                    m(i, j) = s;
                    m(j, i) = -s;
                    out.push_back(Element{sys, m});
                }
            break;
        case Kind::Spin:
            for (int i = 0; i < sys.rows; ++i) {
                CMatrix m = CMatrix::Zero(sys.rows, 1);
                m(i, 0) = 1.0;
                out.push_back(Element{sys, m});
            }
            break;
    }
    return out;
}

PeirceDims peirce_dims(const Element& e) {
    const std::vector<Element> basis = standard_basis(e.system);
    const int d = static_cast<int>(basis.size());
    PeirceDims dims;
    int* slot[3] = {&dims.d0, &dims.d1, &dims.d2};
    for (int k = 0; k <= 2; ++k) {
        CMatrix m(d, d);
        for (int j = 0; j < d; ++j) {
            const Element pb = peirce_project(e, basis[j], k);
            for (int i = 0; i < d; ++i) {
                m(i, j) = (basis[i].payload.conjugate().array() * pb.payload.array()).sum();
            }
        }
        Eigen::JacobiSVD<CMatrix> sv(m);
        int count = 0;
        for (int i = 0; i < sv.singularValues().size(); ++i)
            if (sv.singularValues()(i) > 0.5) ++count;
        *slot[k] = count;
    }
    return dims;
}

const char* tripotent_class_name(TripotentClass c) {
    switch (c) {
        case TripotentClass::Zero: return "zero";
        case TripotentClass::Minimal: return "minimal";
        case TripotentClass::Intermediate: return "intermediate";
        case TripotentClass::CompleteNonUnitary: return "complete-non-unitary";
        case TripotentClass::Unitary: return "unitary";
    }
    return "?";
}

int tripotent_rank(const Element& e) {
    if (e.system.kind == Kind::Spin) {
        const double h = hilbert_norm(e);
        if (std::abs(h) <= kRankTol) return 0;
        if (std::abs(h - 1.0 / std::sqrt(2.0)) <= kRankTol) return 1;
        if (std::abs(h - 1.0) <= kRankTol) return 2;
        throw Error(Errc::AmbiguousRank, "spin norm " + std::to_string(h) +
                                             " is off every admissible plateau");
    }
    Eigen::JacobiSVD<CMatrix> sv(e.payload);
    int ones = 0;
    for (int i = 0; i < sv.singularValues().size(); ++i) {
        const double s = sv.singularValues()(i);
        if (std::abs(s - 1.0) <= kRankTol) {
            ++ones;
        } else if (std::abs(s) > kRankTol) {
            throw Error(Errc::AmbiguousRank,
                        "singular value " + std::to_string(s) + " is neither 0 nor 1");
        }
    }
    if (e.system.kind == Kind::Antisymmetric) {
        if (ones % 2 != 0)
            throw Error(Errc::AmbiguousRank, "unpaired unit singular value");
        return ones / 2;
    }
    return ones;
}

Tripotent classify(const Element& e) {
    double res = 0.0;
    if (!is_tripotent(e, &res))
        throw Error(Errc::NotTripotent,
                    "tripotency residual " + std::to_string(res));
    Tripotent out;
    out.element = e;
    out.rank = tripotent_rank(e);
    out.dims = peirce_dims(e);
    if (hilbert_norm(e) <= e.system.tolerance)
        out.cls = TripotentClass::Zero;
    else if (out.dims.d1 == 0 && out.dims.d0 == 0)
        out.cls = TripotentClass::Unitary;
    else if (out.dims.d2 == 1)
        out.cls = TripotentClass::Minimal;
    else if (out.dims.d0 == 0)
        out.cls = TripotentClass::CompleteNonUnitary;
    else
        out.cls = TripotentClass::Intermediate;
    return out;
}

int max_rank(const TripleSystem& sys) {
    switch (sys.kind) {
        case Kind::Full: return std::min(sys.rows, sys.cols);
        case Kind::Symmetric: return sys.rows;
        case Kind::Antisymmetric: return sys.rows / 2;
        case Kind::Spin: return 2;
    }
    return 0;
}

Element random_tripotent(const TripleSystem& sys, int rank, std::uint64_t seed) {
    if (rank < 0 || rank > max_rank(sys))
        throw Error(Errc::RankUnachievable,
                    sys.name() + " has no tripotent of rank " + std::to_string(rank));
    Rng rng(seed);
    if (rank == 0) return zero_element(sys);
    switch (sys.kind) {
        case Kind::Full: {
            const CMatrix p = random_unitary(rng, sys.rows);
            const CMatrix q = random_unitary(rng, sys.cols);
            return make_element(sys, p.leftCols(rank) * q.leftCols(rank).adjoint());
        }
        case Kind::Symmetric: {
            const CMatrix b = random_unitary(rng, sys.rows);
            CMatrix d = CMatrix::Zero(rank, rank);
            for (int i = 0; i < rank; ++i) d(i, i) = rng.phase();
            return make_element(sys, b.leftCols(rank) * d * b.leftCols(rank).transpose());
        }
        case Kind::Antisymmetric: {
            const int n = sys.rows;
            const CMatrix m = random_unitary(rng, rank);
            CMatrix core = CMatrix::Zero(n, n);
            core.block(0, rank, rank, rank) = m;
            core.block(rank, 0, rank, rank) = -m.transpose();
            const CMatrix q = random_unitary(rng, n);
            return make_element(sys, q * core * q.transpose());
        }
        case Kind::Spin: {
            const int n = sys.rows;
            if (rank == 2) {
                RVector z(n);
                for (int i = 0; i < n; ++i) z(i) = rng.gauss();
                z /= z.norm();
                CMatrix u = z.cast<Complex>();
                return make_element(sys, rng.phase() * u);
            }
            RVector a(n), b(n);
            for (int i = 0; i < n; ++i) a(i) = rng.gauss();
            for (int i = 0; i < n; ++i) b(i) = rng.gauss();
            a /= a.norm();
            b -= a * a.dot(b);
            b /= b.norm();
            CMatrix u = (a.cast<Complex>() + Complex(0, 1) * b.cast<Complex>()) / 2.0;
            return make_element(sys, u);
        }
    }
    throw Error(Errc::ConfigError, "unreachable");
}

Element unitary_extension(const Element& e) {
    double res = 0.0;
    if (!is_tripotent(e, &res))
        throw Error(Errc::NotTripotent, "tripotency residual " + std::to_string(res));
    const TripleSystem& sys = e.system;
    try {
        switch (sys.kind) {
            case Kind::Full: {
                if (sys.rows != sys.cols)
                    throw Error(Errc::NoUnitaryExists,
                                "rectangular systems have no unitary tripotents");
                const SvdData sv = svd(e.payload, sys.tolerance);
                return make_element(sys, sv.u * sv.v.adjoint());
            }
            case Kind::Symmetric: {
                const TakagiData tk = takagi_factor(e.payload, sys.tolerance);
                return make_element(sys, tk.b * tk.b.transpose());
            }
            case Kind::Antisymmetric: {
                if (sys.rows % 2 != 0)
                    throw Error(Errc::NoUnitaryExists,
                                "odd antisymmetric systems have no unitary tripotents");
                const AntisymmetricFactorData af =
                    antisymmetric_factor(e.payload, sys.tolerance);
                CMatrix blocks = CMatrix::Zero(sys.rows, sys.rows);
                for (int t = 0; t < sys.rows / 2; ++t) {
                    blocks(2 * t, 2 * t + 1) = 1.0;
                    blocks(2 * t + 1, 2 * t) = -1.0;
                }
                return make_element(sys, af.b * blocks * af.b.transpose());
            }
            case Kind::Spin: {
                const int r = tripotent_rank(e);
                if (r == 2) return e;
                if (r == 0) {
                    CMatrix u = CMatrix::Zero(sys.rows, 1);
                    u(0, 0) = 1.0;
                    return make_element(sys, u);
                }
                return make_element(sys, e.payload + e.payload.conjugate());
            }
        }
    } catch (const Error& err) {
        if (err.code() == Errc::NoUnitaryExists || err.code() == Errc::AmbiguousRank)
            throw;
        throw Error(Errc::CompletionFailed, err.what());
    }
    throw Error(Errc::ConfigError, "unreachable");
}

} // namespace jbt
