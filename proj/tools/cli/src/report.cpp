#include <cstdlib>
#include <map>
#include <sstream>

#include "jc/cli.hpp"
#include "jc/errors.hpp"

namespace jc::cli {

using nlohmann::ordered_json;

namespace {

struct Renderer {
    std::optional<long> p;

    ordered_json value(const chars::PAdicValue& v) const {
        ordered_json j;
        j["p_exp"] = v.valuation;
        j["unit"] = la::toCanonicalString(v.unit);
        if (p) j["value"] = la::toCanonicalString(v.evaluate(*p));
        return j;
    }

    ordered_json character(const chars::TorusCharacter& c) const {
        ordered_json j;
        j["weight"] = c.weight;
        j["psi_exp"] = c.psiExp;
        j["psiw_exp"] = c.psiwExp;
        j["delta_exp"] = c.deltaExp;
        j["render"] = chars::render(c);
        j["eigenvalue"] = value(chars::heckeEigenvalue(c));
        return j;
    }

    ordered_json characters(const std::vector<chars::TorusCharacter>& cs) const {
        ordered_json arr = ordered_json::array();
        for (const auto& c : cs) arr.push_back(character(c));
        return arr;
    }

    std::string valueText(const chars::PAdicValue& v) const {
        if (p) return la::toCanonicalString(v.evaluate(*p));
        return chars::render(v);
    }
};

ordered_json smoothCharacterJson(const chars::SmoothCharacter& c) {
    ordered_json j;
    j["label"] = c.label;
    j["z_valuation"] = c.valueAtZ.valuation;
    j["z_unit"] = la::toCanonicalString(c.valueAtZ.unit);
    j["w_self_dual"] = c.wSelfDual;
    return j;
}

ordered_json certificateJson(const cohom::StabilizationCertificate& c) {
    ordered_json j;
    j["kind"] = cohom::toString(c.kind);
    if (c.kind == cohom::StabilizationCertificate::Kind::Ladder) {
        j["coefficient"] = c.coefficient.toString();
        j["index_step"] = c.indexStep;
        j["roots"] = c.roots;
        j["bound"] = c.bound;
    }
    return j;
}

std::string moduleName(jacquet::ModuleFamily f, int k) {
    const std::string lam = "(" + std::to_string(-k) + ")";
    switch (f) {
        case jacquet::ModuleFamily::Verma: return "M" + lam;
        case jacquet::ModuleFamily::DualVerma: return "M" + lam + "^v";
        case jacquet::ModuleFamily::Simple: return "L" + lam;
    }
    return "M" + lam;
}

std::string joinRendered(const std::vector<chars::TorusCharacter>& cs) {
    if (cs.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i) out += ", ";
        out += chars::render(cs[i]);
    }
    return out;
}

std::size_t resolveTruncation(const JobConfig& cfg, std::size_t fallback) {
    return cfg.truncation.value_or(fallback);
}

ordered_json header(const JobConfig& cfg) {
    ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = toString(cfg.command);
    j["config"] = configEcho(cfg);
    return j;
}

// ------------------------------------------------------------------ jacquet

ordered_json extensionJson(const jacquet::DegreeReport& deg, const Renderer& r) {
    ordered_json j;
    j["kind"] = jacquet::toString(deg.extension.kind);
    if (deg.extension.kind == jacquet::ExtensionKind::Zero) return j;
    const std::vector<chars::TorusCharacter> sub(deg.jhFactors.begin(),
                                                 deg.jhFactors.begin() + static_cast<long>(deg.subLayerSize));
    const std::vector<chars::TorusCharacter> quot(deg.jhFactors.begin() + static_cast<long>(deg.subLayerSize),
                                                  deg.jhFactors.end());
    j["sub"] = r.characters(sub);
    j["quot"] = r.characters(quot);
    if (deg.extension.kind == jacquet::ExtensionKind::ExtClassUndetermined) {
        ordered_json pairs = ordered_json::array();
        for (const auto& [s, q] : deg.extension.pairs) {
            ordered_json pj;
            pj["sub"] = r.character(deg.jhFactors[s]);
            pj["quot"] = r.character(deg.jhFactors[q]);
            pairs.push_back(pj);
        }
        j["undetermined_pairs"] = pairs;
    }
    return j;
}

ReportDocument jacquetReport(const JobConfig& cfg) {
    const Renderer r{cfg.concreteP};
    const jacquet::InducedRepSpec spec{*cfg.family, *cfg.k, parseCharacter(cfg.psi, "psi")};
    const jacquet::PipelineOptions opts{cfg.truncation, cfg.windowOnly};
    const jacquet::JacquetReport rep = jacquet::assembleLES(spec, opts);
    const bool certified = rep.section.cohomology.certified && rep.stalk.cohomology.certified;

    ReportDocument doc;
    doc.json = header(cfg);
    ordered_json res;
    res["family"] = jacquet::toString(spec.family);
    res["k"] = spec.k;
    res["module"] = moduleName(spec.family, spec.k);
    res["psi"] = smoothCharacterJson(spec.psi);
    res["certified"] = certified;
    if (!certified) res["marker"] = "NON-CERTIFIED";
    ordered_json degrees = ordered_json::array();
    std::ostringstream text;
    text << "H^i J_P of F(" << moduleName(spec.family, spec.k) << ", " << cfg.psi << ")";
    if (!certified) text << "  [NON-CERTIFIED]";
    text << "\n";
    for (std::size_t i = 0; i < 2; ++i) {
        const auto& deg = rep.degrees[i];
        ordered_json dj;
        dj["degree"] = i;
        dj["jh_factors"] = r.characters(deg.jhFactors);
        dj["sub_layer_size"] = deg.subLayerSize;
        dj["extension"] = extensionJson(deg, r);
        dj["finite_slope_complete"] = deg.finiteSlopeComplete;
        degrees.push_back(dj);

        text << "H^" << i << ": " << joinRendered(deg.jhFactors) << "\n";
        text << "  extension: " << jacquet::toString(deg.extension.kind) << "\n";
        for (std::size_t f = 0; f < deg.jhFactors.size(); ++f) {
            text << "  " << chars::render(deg.jhFactors[f]) << "  z-eigenvalue " << r.valueText(deg.heckeEigenvalues[f])
                 << (f < deg.subLayerSize ? "  (section)" : "  (stalk)") << "\n";
        }
    }
    res["degrees"] = degrees;
    for (const auto& [name, part] : {std::pair{"section", &rep.section}, std::pair{"stalk", &rep.stalk}}) {
        ordered_json pj;
        pj["h0"] = r.characters(part->degrees[0]);
        pj["h1"] = r.characters(part->degrees[1]);
        pj["certificate"] = certificateJson(part->cohomology.certificate);
        res[name] = pj;
    }
    doc.json["result"] = res;
    doc.text = text.str();
    return doc;
}

// --------------------------------------------------------------- cohomology

ordered_json piecesJson(const std::vector<cohom::WeightPiece>& pieces) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : pieces) {
        ordered_json j;
        j["weight"] = p.weight;
        j["source_weight"] = p.sourceWeight;
        j["dim"] = p.dim();
        j["basis"] = p.labels;
        arr.push_back(j);
    }
    return arr;
}

ReportDocument cohomologyReport(const JobConfig& cfg) {
    const jacquet::InducedRepSpec spec{*cfg.family, *cfg.k, parseCharacter(cfg.psi, "psi")};
    spec.validate();
    const sl2::WeightModule base = spec.module(resolveTruncation(cfg, spec.defaultTruncation()));
    const sl2::WeightModule m = cfg.plainModule ? base : sl2::nFiniteDual(base);
    const cohom::CohomologyResult c = cohom::cohomology(m, cfg.direction, {cfg.windowOnly});

    ReportDocument doc;
    doc.json = header(cfg);
    ordered_json res;
    res["module"] = moduleName(spec.family, spec.k) + (cfg.plainModule ? "" : " n-finite dual");
    res["direction"] = cohom::toString(cfg.direction);
    res["weight_shift"] = c.weightShiftApplied;
    res["certified"] = c.certified;
    if (!c.certified) res["marker"] = "NON-CERTIFIED";
    res["h0"] = piecesJson(c.nonzeroH0());
    res["h1"] = piecesJson(c.nonzeroH1());
    res["certificate"] = certificateJson(c.certificate);
    doc.json["result"] = res;

    std::ostringstream text;
    text << "H^*(" << cohom::toString(cfg.direction) << ", " << res["module"].get<std::string>() << ")";
    if (!c.certified) text << "  [NON-CERTIFIED]";
    text << "\n";
    for (int deg = 0; deg < 2; ++deg) {
        const auto pieces = deg == 0 ? c.nonzeroH0() : c.nonzeroH1();
        text << "H^" << deg << ":";
        if (pieces.empty()) text << " 0";
        text << "\n";
        for (const auto& p : pieces) {
            text << "  weight " << p.weight << " dim " << p.dim();
            for (const auto& l : p.labels) text << "  " << l;
            text << "\n";
        }
    }
    text << "certificate: " << cohom::toString(c.certificate.kind);
    if (c.certificate.kind == cohom::StabilizationCertificate::Kind::Ladder) {
        text << " coefficient " << c.certificate.coefficient.toString() << ", bound " << c.certificate.bound;
    }
    text << "\n";
    doc.text = text.str();
    return doc;
}

// ---------------------------------------------------------------- bgg-check

ReportDocument bggReport(const JobConfig& cfg) {
    const int k = *cfg.k;
    const sl2::ModuleMap f = sl2::bggMorphism(k, resolveTruncation(cfg, sl2::defaultTruncation(k, -k)));
    const sl2::WeightModule l = sl2::simple(-k);
    const bool equivariant = f.isEquivariant();
    bool matches = true;
    ordered_json nonzero = ordered_json::array();
    for (const auto& [mu, d] : f.cokernelDims()) {
        if (d != l.dim(mu)) matches = false;
        if (d == 0) continue;
        ordered_json j;
        j["weight"] = mu;
        j["dim"] = d;
        nonzero.push_back(j);
    }
    // cokernelDims lists the target window, which contains every weight of L(-k).
    for (int mu : l.weights()) {
        if (!f.cokernelDims().count(mu)) matches = false;
    }

    ReportDocument doc;
    doc.json = header(cfg);
    ordered_json res;
    res["k"] = k;
    res["map"] = "M(" + std::to_string(k + 2) + ") -> M(" + std::to_string(-k) + ")";
    res["equivariant"] = equivariant;
    res["cokernel"] = nonzero;
    res["simple_dimension"] = l.totalDim();
    res["cokernel_matches_simple"] = matches;
    res["passed"] = equivariant && matches;
    doc.json["result"] = res;
    doc.passed = equivariant && matches;

    std::ostringstream text;
    text << "BGG " << res["map"].get<std::string>() << ": equivariant " << (equivariant ? "yes" : "no")
         << ", cokernel = L(" << -k << ") " << (matches ? "yes" : "no") << "\n"
         << (doc.passed ? "PASS" : "FAIL") << "\n";
    doc.text = text.str();
    return doc;
}

// ------------------------------------------------------------------ kostant

ReportDocument kostantReport(const JobConfig& cfg) {
    const int k = *cfg.k;
    const cohom::CohomologyResult c = cohom::cohomology(sl2::nFiniteDual(sl2::simple(-k)), cohom::Direction::N);
    const bool passed = cohom::kostantCheck(k);

    ReportDocument doc;
    doc.json = header(cfg);
    ordered_json res;
    res["k"] = k;
    res["h0"] = piecesJson(c.nonzeroH0());
    res["h1"] = piecesJson(c.nonzeroH1());
    res["expected_h0_weight"] = k;
    res["expected_h1_weight"] = -(k + 2);
    res["passed"] = passed;
    doc.json["result"] = res;
    doc.passed = passed;

    std::ostringstream text;
    text << "Kostant k=" << k << ": H^0 weight " << k << ", H^1 weight " << -(k + 2) << "\n"
         << (passed ? "PASS" : "FAIL") << "\n";
    doc.text = text.str();
    return doc;
}

// ---------------------------------------------------------------- les-check

ReportDocument lesReport(const JobConfig& cfg) {
    const Renderer r{cfg.concreteP};
    const int k = *cfg.k;
    const chars::SmoothCharacter psi = parseCharacter(cfg.psi, "psi");
    const jacquet::PipelineOptions opts{cfg.truncation, cfg.windowOnly};
    const jacquet::JacquetReport sub = jacquet::assembleLES({jacquet::ModuleFamily::Simple, k, psi}, opts);
    const jacquet::JacquetReport middle = jacquet::assembleLES({jacquet::ModuleFamily::Verma, k, psi}, opts);
    const jacquet::JacquetReport quot = jacquet::assembleLES({jacquet::ModuleFamily::Verma, -k - 2, psi}, opts);
    const bool passed = jacquet::lesConsistencyCheck(sub, middle, quot);

    ReportDocument doc;
    doc.json = header(cfg);
    ordered_json res;
    res["k"] = k;
    ordered_json terms = ordered_json::array();
    std::ostringstream text;
    text << "0 -> L(" << -k << ") (x) sm-Ind psi -> Ind chi_" << k << " psi -> Ind chi_" << -k - 2 << " psi -> 0\n";
    for (const auto& [role, rep] : {std::pair{"sub", &sub}, std::pair{"middle", &middle}, std::pair{"quot", &quot}}) {
        ordered_json t;
        t["role"] = role;
        t["family"] = jacquet::toString(rep->spec.family);
        t["k"] = rep->spec.k;
        t["h0"] = r.characters(rep->degrees[0].jhFactors);
        t["h1"] = r.characters(rep->degrees[1].jhFactors);
        terms.push_back(t);
        text << role << ": H^0 = " << joinRendered(rep->degrees[0].jhFactors)
             << "; H^1 = " << joinRendered(rep->degrees[1].jhFactors) << "\n";
    }
    res["terms"] = terms;
    res["passed"] = passed;
    doc.json["result"] = res;
    doc.passed = passed;
    text << (passed ? "PASS" : "FAIL") << "\n";
    doc.text = text.str();
    return doc;
}

// ---------------------------------------------------------------- ext-bound

ReportDocument extReport(const JobConfig& cfg) {
    const Renderer r{cfg.concreteP};
    ext::RelationDeclarations declared;
    for (const auto& d : cfg.relations) {
        const auto [rel, value] = ext::parseDeclaration(d);
        auto [it, inserted] = declared.emplace(rel, value);
        if (!inserted && it->second != value) {
            throw ValidationError("conflicting declarations for " + ext::toString(rel));
        }
    }
    const ext::ExtCase c =
        ext::classifyExt(*cfg.k, *cfg.ell, parseCharacter(cfg.psi, "psi"), parseCharacter(cfg.phi, "phi"), declared);
    const auto [lo, hi] = ext::dimensionInterval(c.verdict);

    ReportDocument doc;
    doc.json = header(cfg);
    ordered_json res;
    res["k"] = c.k;
    res["ell"] = c.ell;
    res["verdict"] = ext::toString(c.verdict);
    res["dimension"] = {{"min", lo}, {"max", hi}};
    res["fired_bullets"] = c.firedBullets;
    ordered_json rels = ordered_json::object();
    for (const auto& [rel, v] : c.relations) rels[ext::toString(rel)] = v;
    res["relations"] = rels;
    res["source"] = r.character(c.source);
    res["h1_factors"] = r.characters(c.h1Factors);
    res["matched"] = r.characters(c.matched);
    doc.json["result"] = res;

    std::ostringstream text;
    text << "Ext^1(Ind chi_" << c.k << " psi, I(chi_" << c.ell << " phi)): " << ext::toString(c.verdict) << " [" << lo
         << ", " << hi << "]\n";
    text << "H^1 J_P(I(chi_" << c.ell << " phi)) = " << joinRendered(c.h1Factors) << "\n";
    text << "matched against " << chars::render(c.source) << ": " << joinRendered(c.matched) << "\n";
    doc.text = text.str();
    return doc;
}

}  // namespace

std::string ReportDocument::serialize(OutputFormat format) const {
    if (format == OutputFormat::Text) return text;
    return json.dump(2) + "\n";
}

ordered_json configEcho(const JobConfig& cfg) {
    ordered_json j;
    if (cfg.family) j["family"] = jacquet::toString(*cfg.family);
    if (cfg.k) j["k"] = *cfg.k;
    if (cfg.ell) j["ell"] = *cfg.ell;
    j["psi"] = cfg.psi;
    if (cfg.command == Command::ExtBound) {
        j["phi"] = cfg.phi;
        j["relations"] = cfg.relations;
    }
    if (cfg.command == Command::Cohomology) {
        j["direction"] = cohom::toString(cfg.direction);
        j["plain"] = cfg.plainModule;
    }
    if (cfg.truncation) j["trunc"] = *cfg.truncation;
    if (cfg.windowOnly) j["window_only"] = true;
    if (cfg.concreteP) j["p"] = *cfg.concreteP;
    return j;
}

ReportDocument runJob(const JobConfig& cfg) {
    cfg.validate();
    switch (cfg.command) {
        case Command::Jacquet: return jacquetReport(cfg);
        case Command::Cohomology: return cohomologyReport(cfg);
        case Command::BggCheck: return bggReport(cfg);
        case Command::Kostant: return kostantReport(cfg);
        case Command::ExtBound: return extReport(cfg);
        case Command::LesCheck: return lesReport(cfg);
    }
    throw std::logic_error("unknown command");
}

int exitCodeFor(const std::exception& e) {
    if (dynamic_cast<const ValidationError*>(&e)) return kExitValidation;
    if (dynamic_cast<const TruncationError*>(&e)) return kExitTruncation;
    if (dynamic_cast<const NeedRelationDeclaration*>(&e)) return kExitUndecidable;
    return kExitSetup;
}

std::string errorClass(const std::exception& e) {
    if (dynamic_cast<const sl2::ParityError*>(&e)) return "parity";
    if (dynamic_cast<const ValidationError*>(&e)) return "validation";
    if (dynamic_cast<const UnsupportedFamilyError*>(&e)) return "unsupported_family";
    if (dynamic_cast<const TruncationError*>(&e)) return "truncation";
    if (dynamic_cast<const NeedRelationDeclaration*>(&e)) return "need_relation_declaration";
    return "internal";
}

ReportDocument errorDocument(const JobConfig& cfg, const std::exception& e) {
    ReportDocument doc;
    doc.json = header(cfg);
    ordered_json err;
    err["class"] = errorClass(e);
    err["exit_code"] = exitCodeFor(e);
    err["message"] = e.what();
    doc.json["error"] = err;
    doc.text = "error (" + errorClass(e) + "): " + e.what() + "\n";
    doc.passed = false;
    return doc;
}

}  // namespace jc::cli
