#include "jbt/io.hpp"

#include <fstream>

namespace jbt {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotNormal: return "NotNormal";
        case Errc::NoConvergence: return "NoConvergence";
        case Errc::NotSymmetricUnitary: return "NotSymmetricUnitary";
        case Errc::NotAntisymmetricUnitary: return "NotAntisymmetricUnitary";
        case Errc::OddDimension: return "OddDimension";
        case Errc::NotInEmbeddedAlgebra: return "NotInEmbeddedAlgebra";
        case Errc::DegenerateBasis: return "DegenerateBasis";
        case Errc::SystemMismatch: return "SystemMismatch";
        case Errc::MembershipViolation: return "MembershipViolation";
        case Errc::AmbiguousRank: return "AmbiguousRank";
        case Errc::RankUnachievable: return "RankUnachievable";
        case Errc::NoUnitaryExists: return "NoUnitaryExists";
        case Errc::CompletionFailed: return "CompletionFailed";
        case Errc::NotUnitary: return "NotUnitary";
        case Errc::NotTripotent: return "NotTripotent";
        case Errc::RootOutsideSystem: return "RootOutsideSystem";
        case Errc::NotLe2: return "NotLe2";
        case Errc::InvariantObstruction: return "InvariantObstruction";
        case Errc::LinkVerificationFailed: return "LinkVerificationFailed";
        case Errc::UnsupportedFamily: return "UnsupportedFamily";
        case Errc::ParseError: return "ParseError";
        case Errc::ConfigError: return "ConfigError";
    }
    return "Unknown";
}

namespace {

Json complex_to_json(const Complex& c) {
    return Json::array({c.real(), c.imag()});
}

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw Error(Errc::ParseError, "complex entries must be [re, im] pairs");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

Json entries_to_json(const Element& x) {
    Json out = Json::array();
    if (x.system.kind == Kind::Spin) {
        for (int i = 0; i < x.payload.rows(); ++i)
            out.push_back(complex_to_json(x.payload(i, 0)));
        return out;
    }
    for (int i = 0; i < x.payload.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < x.payload.cols(); ++j)
            row.push_back(complex_to_json(x.payload(i, j)));
        out.push_back(row);
    }
    return out;
}

Element entries_from_json(const TripleSystem& sys, const Json& j) {
    if (!j.is_array()) throw Error(Errc::ParseError, "entries must be an array");
    if (sys.kind == Kind::Spin) {
        if (static_cast<int>(j.size()) != sys.rows)
            throw Error(Errc::ParseError, "spin entry count does not match dim");
        CMatrix m(sys.rows, 1);
        for (int i = 0; i < sys.rows; ++i) m(i, 0) = complex_from_json(j[i]);
        return make_element(sys, m);
    }
    if (static_cast<int>(j.size()) != sys.rows)
        throw Error(Errc::ParseError, "row count does not match the system");
    CMatrix m(sys.rows, sys.cols);
    for (int i = 0; i < sys.rows; ++i) {
        const Json& row = j[i];
        if (!row.is_array() || static_cast<int>(row.size()) != sys.cols)
            throw Error(Errc::ParseError, "column count does not match the system");
        for (int k = 0; k < sys.cols; ++k) m(i, k) = complex_from_json(row[k]);
    }
    return make_element(sys, m);
}

} // namespace

Json system_to_json(const TripleSystem& sys) {
    Json j;
    switch (sys.kind) {
        case Kind::Full:
            j["kind"] = "matrix";
            j["rows"] = sys.rows;
            j["cols"] = sys.cols;
            break;
        case Kind::Symmetric:
            j["kind"] = "symmetric";
            j["dim"] = sys.rows;
            break;
        case Kind::Antisymmetric:
            j["kind"] = "antisymmetric";
            j["dim"] = sys.rows;
            break;
        case Kind::Spin:
            j["kind"] = "spin";
            j["dim"] = sys.rows;
            break;
    }
    return j;
}

TripleSystem system_from_json(const Json& j, double tol) {
    try {
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "matrix")
            return TripleSystem::matrix(j.at("rows").get<int>(),
                                        j.at("cols").get<int>(), tol);
        if (kind == "symmetric")
            return TripleSystem::symmetric(j.at("dim").get<int>(), tol);
        if (kind == "antisymmetric")
            return TripleSystem::antisymmetric(j.at("dim").get<int>(), tol);
        if (kind == "spin") return TripleSystem::spin(j.at("dim").get<int>(), tol);
        throw Error(Errc::ParseError, "unknown system kind '" + kind + "'");
    } catch (const Json::exception& ex) {
        throw Error(Errc::ParseError, ex.what());
    }
}

Json element_to_json(const Element& x) {
    Json j;
    j["system"] = system_to_json(x.system);
    j["entries"] = entries_to_json(x);
    return j;
}

Element element_from_json(const Json& j, double tol) {
    try {
        const TripleSystem sys = system_from_json(j.at("system"), tol);
        return entries_from_json(sys, j.at("entries"));
    } catch (const Json::exception& ex) {
        throw Error(Errc::ParseError, ex.what());
    }
}

Json certificate_to_json(const ChainCertificate& cert) {
    Json j;
    j["claim"] = claim_name(cert.claim);
    j["system"] = system_to_json(cert.system);
    Json links = Json::array();
    for (const Element& nd : cert.nodes) links.push_back(entries_to_json(nd));
    j["links"] = links;
    Json rels = Json::array();
    for (RelationKind k : cert.links) rels.push_back(relation_name(k));
    j["linkRelations"] = rels;
    Json residuals = Json::array();
    for (std::size_t i = 0; i + 1 < cert.nodes.size(); ++i)
        residuals.push_back(
            relate(cert.links[i], cert.nodes[i], cert.nodes[i + 1]).residual);
    j["residuals"] = residuals;
    return j;
}

ChainCertificate certificate_from_json(const Json& j, double tol) {
    try {
        ChainCertificate cert;
        const auto claim = claim_from_name(j.at("claim").get<std::string>());
        if (!claim)
            throw Error(Errc::ParseError,
                        "unknown claim '" + j.at("claim").get<std::string>() + "'");
        cert.claim = *claim;
        cert.system = system_from_json(j.at("system"), tol);
        for (const Json& nd : j.at("links"))
            cert.nodes.push_back(entries_from_json(cert.system, nd));
        for (const Json& lk : j.at("linkRelations")) {
            const auto kind = relation_from_name(lk.get<std::string>());
            if (!kind)
                throw Error(Errc::ParseError,
                            "unknown relation '" + lk.get<std::string>() + "'");
            cert.links.push_back(*kind);
        }
        return cert;
    } catch (const Json::exception& ex) {
        throw Error(Errc::ParseError, ex.what());
    }
}

Json verdict_to_json(const RelationVerdict& v) {
    Json j;
    j["relation"] = relation_name(v.kind);
    j["holds"] = v.holds;
    j["residual"] = v.residual;
    if (v.phase) j["phase"] = complex_to_json(*v.phase);
    if (v.witness) j["witness"] = entries_to_json(*v.witness);
    if (v.witness2) j["witness2"] = entries_to_json(*v.witness2);
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ConfigError, "cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::exception& ex) {
        throw Error(Errc::ParseError, std::string(ex.what()) + " in '" + path + "'");
    }
}

Element load_element_file(const std::string& path, double tol) {
    return element_from_json(load_json_file(path), tol);
}

} // namespace jbt
