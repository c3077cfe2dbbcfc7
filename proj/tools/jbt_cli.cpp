#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "jbt/fixtures.hpp"
#include "jbt/fuzz.hpp"
#include "jbt/io.hpp"
#include "jbt/tripotents.hpp"

namespace {

using namespace jbt;

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;

int exit_code_for(Errc c) {
    switch (c) {
        case Errc::ParseError:
        case Errc::ConfigError:
        case Errc::SystemMismatch:
        case Errc::MembershipViolation:
        case Errc::UnsupportedFamily:
            return kExitInput;
        case Errc::NotTripotent:
        case Errc::NotUnitary:
        case Errc::NotLe2:
        case Errc::InvariantObstruction:
        case Errc::NoUnitaryExists:
        case Errc::RankUnachievable:
            return kExitMismatch;
        default:
            return kExitNumerical;
    }
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", x);
    return buf;
}

CertResult build_chain(ChainClaim claim, const Element& u, const Element& e) {
    switch (claim) {
        case ChainClaim::LE_NT: return cert_nt(u, e);
        case ChainClaim::SIM_HT: return cert_simht_unitary(u, e);
        case ChainClaim::LE_HT: return cert_ht(u, e);
        case ChainClaim::LE_HCT: return cert_hct(u, e);
        case ChainClaim::SIM_HCT: return cert_simhct(u, e);
    }
    throw Error(Errc::ConfigError, "unknown claim");
}

int cmd_classify(const std::string& path, double tol, bool asJson) {
    const Element x = load_element_file(path, tol);
    double res = 0.0;
    if (!is_tripotent(x, &res)) {
        if (asJson) {
            Json j;
            j["system"] = system_to_json(x.system);
            j["tripotent"] = false;
            j["residual"] = res;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << x.system.name() << ": not a tripotent (residual "
                      << fmt(res) << ")\n";
        }
        return kExitMismatch;
    }
    const Tripotent t = classify(x);
    if (asJson) {
        Json j;
        j["system"] = system_to_json(x.system);
        j["tripotent"] = true;
        j["residual"] = res;
        j["rank"] = t.rank;
        j["peirce"] = Json{{"d2", t.dims.d2}, {"d1", t.dims.d1}, {"d0", t.dims.d0}};
        j["class"] = tripotent_class_name(t.cls);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << x.system.name() << ": tripotent (residual " << fmt(res)
                  << ")\n"
                  << "rank " << t.rank << ", Peirce dims (" << t.dims.d2 << ", "
                  << t.dims.d1 << ", " << t.dims.d0 << "), class "
                  << tripotent_class_name(t.cls) << "\n";
    }
    return kExitPass;
}

int cmd_relate(const std::string& kindName, const std::string& pathU,
               const std::string& pathE, double tol, bool asJson) {
    const auto kind = relation_from_name(kindName);
    if (!kind) {
        std::cerr << "unknown relation '" << kindName << "'; expected one of";
        for (RelationKind k : all_relations()) std::cerr << " " << relation_name(k);
        std::cerr << "\n";
        return kExitInput;
    }
    const Element u = load_element_file(pathU, tol);
    const Element e = load_element_file(pathE, tol);
    const RelationVerdict v = relate(*kind, u, e);
    if (asJson) {
        std::cout << verdict_to_json(v).dump(2) << "\n";
    } else {
        std::cout << relation_name(*kind) << ": "
                  << (v.holds ? "holds" : "fails") << " (residual "
                  << fmt(v.residual) << ")\n";
        if (v.phase)
            std::cout << "phase " << v.phase->real() << (v.phase->imag() < 0 ? " - " : " + ")
                      << std::abs(v.phase->imag()) << "i\n";
    }
    return v.holds ? kExitPass : kExitMismatch;
}

int cmd_chain(const std::string& claimName, const std::string& pathU,
              const std::string& pathE, const std::string& emitPath, double tol,
              bool asJson) {
    const auto claim = claim_from_name(claimName);
    if (!claim) {
        std::cerr << "unknown claim '" << claimName
                  << "'; expected LE_NT, SIM_HT, LE_HT, LE_HCT or SIM_HCT\n";
        return kExitInput;
    }
    const Element u = load_element_file(pathU, tol);
    const Element e = load_element_file(pathE, tol);
    const CertResult res = build_chain(*claim, u, e);
    if (!res.ok()) {
        if (asJson) {
            Json j;
            j["claim"] = claim_name(*claim);
            j["success"] = false;
            j["failure"] = errc_name(*res.failure);
            j["message"] = res.message;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << claim_name(*claim) << ": no certificate ("
                      << errc_name(*res.failure) << ": " << res.message << ")\n";
        }
        return exit_code_for(*res.failure);
    }
    const ChainCertificate& cert = *res.certificate;
    if (!emitPath.empty()) {
        std::ofstream out(emitPath);
        if (!out) {
            std::cerr << "cannot write " << emitPath << "\n";
            return kExitInput;
        }
        out << certificate_to_json(cert).dump(2) << "\n";
    }
    if (asJson) {
        Json j = certificate_to_json(cert);
        j["maxResidual"] = res.maxResidual;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << claim_name(*claim) << ": certified with " << cert.length()
                  << " link" << (cert.length() == 1 ? "" : "s") << " (";
        for (int i = 0; i < cert.length(); ++i)
            std::cout << (i ? " " : "") << relation_name(cert.links[i]);
        std::cout << "), max residual " << fmt(res.maxResidual) << "\n";
    }
    return kExitPass;
}

int cmd_verify_cert(const std::string& path, double tol, bool asJson) {
    const ChainCertificate cert = certificate_from_json(load_json_file(path), tol);
    const VerifyOutcome out = verify_certificate(cert);
    if (asJson) {
        Json j;
        j["claim"] = claim_name(cert.claim);
        j["valid"] = out.valid;
        j["maxResidual"] = out.maxResidual;
        if (!out.message.empty()) j["message"] = out.message;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << claim_name(cert.claim) << " certificate with "
                  << cert.length() << " links: "
                  << (out.valid ? "valid" : "INVALID") << " (max residual "
                  << fmt(out.maxResidual) << ")";
        if (!out.message.empty()) std::cout << " " << out.message;
        std::cout << "\n";
    }
    return out.valid ? kExitPass : kExitMismatch;
}

int cmd_paper_verify(bool asJson) {
    const FixtureSuiteReport rep = run_fixture_suite();
    if (asJson) {
        Json cases = Json::array();
        for (const FixtureCaseResult& cr : rep.cases) {
            Json checks = Json::array();
            for (const CheckResult& c : cr.checks)
                checks.push_back(Json{{"name", c.name},
                                      {"expected", c.expected},
                                      {"got", c.got},
                                      {"residual", c.residual}});
            cases.push_back(Json{{"id", cr.id},
                                 {"pass", cr.pass},
                                 {"maxResidual", cr.maxResidual},
                                 {"checks", checks}});
        }
        Json j;
        j["allPass"] = rep.allPass;
        j["maxResidual"] = rep.maxResidual;
        j["cases"] = cases;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const FixtureCaseResult& cr : rep.cases) {
            std::cout << (cr.pass ? "pass  " : "FAIL  ") << cr.id << "\n";
            if (!cr.pass)
                for (const CheckResult& c : cr.checks)
                    if (!c.pass())
                        std::cout << "      " << c.name << ": expected "
                                  << (c.expected ? "true" : "false") << ", got "
                                  << (c.got ? "true" : "false") << " (residual "
                                  << fmt(c.residual) << ")\n";
        }
        std::cout << (rep.allPass ? "all fixtures pass" : "fixture mismatches")
                  << ", max residual " << fmt(rep.maxResidual) << "\n";
    }
    return rep.allPass ? kExitPass : kExitMismatch;
}

bool parse_families(const std::vector<std::string>& names,
                    std::vector<Kind>& out) {
    out.clear();
    for (const std::string& n : names) {
        if (n == "full" || n == "matrix") out.push_back(Kind::Full);
        else if (n == "symmetric") out.push_back(Kind::Symmetric);
        else if (n == "antisymmetric") out.push_back(Kind::Antisymmetric);
        else if (n == "spin") out.push_back(Kind::Spin);
        else return false;
    }
    return true;
}

bool parse_seed_range(const std::string& text, std::uint64_t& a, std::uint64_t& b) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) return false;
    try {
        a = std::stoull(text.substr(0, dots));
        b = std::stoull(text.substr(dots + 2));
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

int cmd_fuzz(const FuzzConfig& cfg, const std::string& jsonPath) {
    const FuzzReport rep = run_fuzz(cfg);
    std::cout << "pairs tested            " << rep.pairs << "\n"
              << "lattice violations      " << rep.latticeViolations << "\n"
              << "SIM_H witness mismatches " << rep.simhWitnessMismatches << "\n"
              << "LE_N witness mismatches  " << rep.lenWitnessMismatches << "\n"
              << "projection violations   " << rep.projectionViolations << "\n"
              << "certificate failures    " << rep.certFailures << "\n"
              << "chains built            " << rep.chainsBuilt << "\n"
              << "max chain length        " << rep.maxChainLength << "\n";
    for (const std::string& d : rep.diagnostics) std::cout << "  " << d << "\n";
    if (!jsonPath.empty()) {
        Json j;
        j["seedBegin"] = cfg.seedBegin;
        j["seedEnd"] = cfg.seedEnd;
        j["maxDim"] = cfg.maxDim;
        Json fams = Json::array();
        for (Kind f : cfg.families) fams.push_back(kind_name(f));
        j["families"] = fams;
        j["pairs"] = rep.pairs;
        j["latticeViolations"] = rep.latticeViolations;
        j["simhWitnessMismatches"] = rep.simhWitnessMismatches;
        j["lenWitnessMismatches"] = rep.lenWitnessMismatches;
        j["projectionViolations"] = rep.projectionViolations;
        j["certFailures"] = rep.certFailures;
        j["chainsBuilt"] = rep.chainsBuilt;
        j["maxChainLength"] = rep.maxChainLength;
        j["diagnostics"] = rep.diagnostics;
        std::ofstream out(jsonPath);
        if (!out) {
            std::cerr << "cannot write " << jsonPath << "\n";
            return kExitInput;
        }
        out << j.dump(2) << "\n";
    }
    return rep.clean() ? kExitPass : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tripotent orders, similarities and chain certificates in "
                 "finite-dimensional JB*-triples"};
    app.require_subcommand(1);
    double tol = 1e-9;
    app.add_option("--tol", tol, "comparison tolerance")
        ->check(CLI::PositiveNumber);

    std::string pathA, pathB, name, emitPath, jsonPath, seedRange;
    bool asJson = false;

    CLI::App* classify = app.add_subcommand(
        "classify", "rank, Peirce dimensions and class of a tripotent");
    classify->add_option("file", pathA, "element file")->required();
    classify->add_flag("--json", asJson, "print a JSON report");

    CLI::App* relateCmd =
        app.add_subcommand("relate", "decide one relation between tripotents");
    relateCmd->add_option("kind", name, "relation name, e.g. LE_H")->required();
    relateCmd->add_option("fileU", pathA, "element file for u")->required();
    relateCmd->add_option("fileE", pathB, "element file for e")->required();
    relateCmd->add_flag("--json", asJson, "print a JSON report");

    CLI::App* chainCmd = app.add_subcommand(
        "chain", "build a verified chain certificate for a hull relation");
    chainCmd->add_option("claim", name, "LE_NT, SIM_HT, LE_HT, LE_HCT or SIM_HCT")
        ->required();
    chainCmd->add_option("fileU", pathA, "element file for u")->required();
    chainCmd->add_option("fileE", pathB, "element file for e")->required();
    chainCmd->add_option("--emit-cert", emitPath, "write the certificate JSON");
    chainCmd->add_flag("--json", asJson, "print the certificate as JSON");

    CLI::App* verifyCmd =
        app.add_subcommand("verify-cert", "re-verify a certificate file");
    verifyCmd->add_option("file", pathA, "certificate JSON")->required();
    verifyCmd->add_flag("--json", asJson, "print a JSON report");

    CLI::App* paperCmd = app.add_subcommand(
        "paper-verify", "check every bundled reference example");
    paperCmd->add_flag("--json", asJson, "print a JSON report");

    CLI::App* fuzzCmd = app.add_subcommand(
        "fuzz", "seeded random sweep over tripotent pairs");
    FuzzConfig cfg;
    std::vector<std::string> familyNames;
    std::uint64_t singleSeed = 0;
    fuzzCmd->add_option("--families", familyNames,
                        "full, symmetric, antisymmetric, spin")
        ->delimiter(',');
    fuzzCmd->add_option("--seeds", seedRange, "seed range a..b (half-open)");
    CLI::Option* seedOpt =
        fuzzCmd->add_option("--seed", singleSeed, "single seed shorthand");
    fuzzCmd->add_option("--max-dim", cfg.maxDim, "dimension cap")
        ->check(CLI::Range(2, 16));
    fuzzCmd->add_option("--json", jsonPath, "also write a JSON report here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*classify) return cmd_classify(pathA, tol, asJson);
        if (*relateCmd) return cmd_relate(name, pathA, pathB, tol, asJson);
        if (*chainCmd)
            return cmd_chain(name, pathA, pathB, emitPath, tol, asJson);
        if (*verifyCmd) return cmd_verify_cert(pathA, tol, asJson);
        if (*paperCmd) return cmd_paper_verify(asJson);
        if (*fuzzCmd) {
            if (!familyNames.empty() && !parse_families(familyNames, cfg.families)) {
                std::cerr << "unknown family; expected full, symmetric, "
                             "antisymmetric or spin\n";
                return kExitInput;
            }
            if (!seedRange.empty() &&
                !parse_seed_range(seedRange, cfg.seedBegin, cfg.seedEnd)) {
                std::cerr << "bad seed range '" << seedRange << "'; expected a..b\n";
                return kExitInput;
            }
            if (seedOpt->count() > 0) {
                cfg.seedBegin = singleSeed;
                cfg.seedEnd = singleSeed + 1;
            }
            cfg.tol = tol;
            return cmd_fuzz(cfg, jsonPath);
        }
    } catch (const Error& err) {
        std::cerr << err.what() << "\n";
        return exit_code_for(err.code());
    } catch (const std::exception& err) {
        std::cerr << err.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
