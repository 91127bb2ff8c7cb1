#include "jc/extbound.hpp"

#include <set>

#include "jc/errors.hpp"

namespace jc::ext {

using chars::PAdicValue;

std::string toString(Relation r) {
    switch (r) {
        case Relation::PsiEqPhi: return "psi-eq-phi";
        case Relation::PsiDeltaEqPhiW: return "psi-delta-eq-phiw";
        case Relation::PhiDeltaEqPhiW: return "phi-delta-eq-phiw";
    }
    return "psi-eq-phi";
}

Relation parseRelation(const std::string& text) { return parseDeclaration(text).first; }

std::pair<Relation, bool> parseDeclaration(const std::string& text) {
    static const std::map<std::string, std::pair<Relation, bool>> table = {
        {"psi-eq-phi", {Relation::PsiEqPhi, true}},
        {"psi-ne-phi", {Relation::PsiEqPhi, false}},
        {"psi-delta-eq-phiw", {Relation::PsiDeltaEqPhiW, true}},
        {"psi-delta-ne-phiw", {Relation::PsiDeltaEqPhiW, false}},
        {"phi-delta-eq-phiw", {Relation::PhiDeltaEqPhiW, true}},
        {"phi-delta-ne-phiw", {Relation::PhiDeltaEqPhiW, false}},
    };
    auto it = table.find(text);
    if (it == table.end()) throw ValidationError("unknown relation declaration '" + text + "'");
    return it->second;
}

std::string toString(Verdict v) {
    switch (v) {
        case Verdict::Trivial: return "Trivial";
        case Verdict::OneDim: return "OneDim";
        case Verdict::AtMostOneDim: return "AtMostOneDim";
        case Verdict::OneOrTwoDim: return "OneOrTwoDim";
    }
    return "Trivial";
}

std::pair<int, int> dimensionInterval(Verdict v) {
    switch (v) {
        case Verdict::Trivial: return {0, 0};
        case Verdict::OneDim: return {1, 1};
        case Verdict::AtMostOneDim: return {0, 1};
        case Verdict::OneOrTwoDim: return {1, 2};
    }
    return {0, 0};
}

namespace {

const PAdicValue kDeltaAtZ{-2, 1};

bool fromDeclaration(Relation r, bool valuesAgree, const RelationDeclarations& declared) {
    auto it = declared.find(r);
    if (!valuesAgree) {
        if (it != declared.end() && it->second) {
            throw ValidationError("declared " + toString(r) + " contradicts the values at z");
        }
        return false;
    }
    if (it == declared.end()) {
        throw NeedRelationDeclaration("cannot decide " + toString(r) +
                                      " from values at z; declare it (e.g. --relation " + toString(r) + ")");
    }
    return it->second;
}

}  // namespace

bool decideRelation(Relation r, const SmoothCharacter& psi, const SmoothCharacter& phi,
                    const RelationDeclarations& declared) {
    switch (r) {
        case Relation::PsiEqPhi: {
            const bool agree = psi.valueAtZ == phi.valueAtZ;
            if (psi.label == phi.label) {
                if (!agree) throw ValidationError("characters labelled '" + psi.label + "' have different values at z");
                auto it = declared.find(r);
                if (it != declared.end() && !it->second) {
                    throw ValidationError("psi-ne-phi declared for two characters with the same label");
                }
                return true;
            }
            return fromDeclaration(r, agree, declared);
        }
        case Relation::PsiDeltaEqPhiW:
            return fromDeclaration(r, psi.valueAtZ * kDeltaAtZ == phi.wValueAtZ(), declared);
        case Relation::PhiDeltaEqPhiW:
            return fromDeclaration(r, phi.valueAtZ * kDeltaAtZ == phi.wValueAtZ(), declared);
    }
    throw std::logic_error("unknown relation");
}

ExtCase classifyExt(int k, int ell, const SmoothCharacter& psi, const SmoothCharacter& phi,
                    const RelationDeclarations& declared) {
    if (k >= 0 || k % 2 != 0) throw ValidationError("k must be a negative even integer, got " + std::to_string(k));
    if (ell % 2 != 0) throw ValidationError("ell must be even, got " + std::to_string(ell));
    if (k == ell) throw ValidationError("k and ell must differ");
    psi.validate();
    phi.validate();

    ExtCase out;
    out.k = k;
    out.ell = ell;
    out.psi = psi;
    out.phi = phi;
    out.source = chars::sectionCharacter(k, psi);

    // I(chi_ell phi) is F(L(-ell), phi) for ell >= 0 and Ind chi_ell phi otherwise.
    const jacquet::InducedRepSpec target{
        ell >= 0 ? jacquet::ModuleFamily::Simple : jacquet::ModuleFamily::Verma, ell, phi};
    out.h1Factors = jacquet::assembleLES(target).degrees[1].jhFactors;

    if (k != -(ell + 2)) return out;

    const bool psiEqPhi = decideRelation(Relation::PsiEqPhi, psi, phi, declared);
    const bool psiDeltaEqPhiW = decideRelation(Relation::PsiDeltaEqPhiW, psi, phi, declared);
    const bool phiDeltaEqPhiW = decideRelation(Relation::PhiDeltaEqPhiW, psi, phi, declared);
    if (psiEqPhi && psiDeltaEqPhiW != phiDeltaEqPhiW) {
        throw ValidationError("inconsistent declarations: psi = phi but psi delta_P = phi^w and phi delta_P = phi^w disagree");
    }
    if (psiDeltaEqPhiW && phiDeltaEqPhiW && !psiEqPhi) {
        throw ValidationError("inconsistent declarations: psi delta_P = phi^w = phi delta_P forces psi = phi");
    }
    out.relations = {{Relation::PsiEqPhi, psiEqPhi},
                     {Relation::PsiDeltaEqPhiW, psiDeltaEqPhiW},
                     {Relation::PhiDeltaEqPhiW, phiDeltaEqPhiW}};

    const std::pair<bool, Verdict> bullets[] = {
        {!phiDeltaEqPhiW && psiEqPhi, Verdict::OneDim},
        {!phiDeltaEqPhiW && psiDeltaEqPhiW, Verdict::AtMostOneDim},
        {phiDeltaEqPhiW && psiEqPhi, Verdict::OneOrTwoDim},
        {psiDeltaEqPhiW, Verdict::AtMostOneDim},
    };
    for (int i = 0; i < 4; ++i) {
        if (!bullets[i].first) continue;
        if (out.firedBullets.empty()) out.verdict = bullets[i].second;
        out.firedBullets.push_back(i + 1);
    }

    for (const auto& f : out.h1Factors) {
        if (f.weight != k) continue;
        const bool deltaLine = f.psiExp == 1 && f.psiwExp == 0 && f.deltaExp == 1;
        const bool wLine = f.psiExp == 0 && f.psiwExp == 1 && f.deltaExp == 0;
        if ((deltaLine && psiEqPhi) || (wLine && psiDeltaEqPhiW)) out.matched.push_back(f);
    }
    return out;
}

std::pair<int, int> homDimensionBound(const TorusCharacter& source, const jacquet::JacquetReport& report, int degree) {
    if (degree < 0 || degree > 1) return {0, 0};
    const auto& deg = report.degrees[static_cast<std::size_t>(degree)];
    std::set<std::size_t> undetermined;
    for (const auto& [s, q] : deg.extension.pairs) {
        undetermined.insert(s);
        undetermined.insert(q);
    }
    int lo = 0;
    int hi = 0;
    for (std::size_t i = 0; i < deg.jhFactors.size(); ++i) {
        if (!(deg.jhFactors[i] == source)) continue;
        ++hi;
        switch (deg.extension.kind) {
            case jacquet::ExtensionKind::DirectSumDetermined: ++lo; break;
            case jacquet::ExtensionKind::ExtClassUndetermined:
                if (!undetermined.count(i)) ++lo;
                break;
            default: break;
        }
    }
    return {lo, hi};
}

}  // namespace jc::ext
