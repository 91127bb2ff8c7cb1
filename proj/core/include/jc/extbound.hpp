#pragma once

// Dimension bounds for Ext^1_G(Ind chi_k psi, I(chi_l phi)), k < 0, read off
// by matching chi_k psi delta_P against the factors of H^1 J_P(I(chi_l phi)).

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jc/jacquet.hpp"

namespace jc::ext {

using chars::SmoothCharacter;
using chars::TorusCharacter;

enum class Relation {
    PsiEqPhi,        // psi = phi
    PsiDeltaEqPhiW,  // psi delta_P = phi^w
    PhiDeltaEqPhiW,  // phi delta_P = phi^w
};

std::string toString(Relation r);
Relation parseRelation(const std::string& text);  // "psi-eq-phi", "psi-delta-eq-phiw", "phi-delta-eq-phiw"

/// Declared truth values; "psi-ne-phi" style declarations store false.
using RelationDeclarations = std::map<Relation, bool>;
/// Parses "psi-eq-phi" (true) or "psi-ne-phi" (false) and friends.
std::pair<Relation, bool> parseDeclaration(const std::string& text);

enum class Verdict { Trivial, OneDim, AtMostOneDim, OneOrTwoDim };
std::string toString(Verdict v);
std::pair<int, int> dimensionInterval(Verdict v);

struct ExtCase {
    int k = 0;
    int ell = 0;
    SmoothCharacter psi;
    SmoothCharacter phi;
    Verdict verdict = Verdict::Trivial;
    std::vector<int> firedBullets;  // 1-based, in listed order
    std::map<Relation, bool> relations;  // evaluated predicates (empty when k != -(ell+2))
    TorusCharacter source;                  // chi_k psi delta_P
    std::vector<TorusCharacter> h1Factors;  // H^1 J_P(I(chi_ell phi))
    std::vector<TorusCharacter> matched;    // factors of h1Factors equal to source
};

/// Decides a relation from the values at z when they differ, otherwise from
/// the declarations; throws NeedRelationDeclaration when neither applies.
bool decideRelation(Relation r, const SmoothCharacter& psi, const SmoothCharacter& phi,
                    const RelationDeclarations& declared);

ExtCase classifyExt(int k, int ell, const SmoothCharacter& psi, const SmoothCharacter& phi,
                    const RelationDeclarations& declared = {});

/// (min, max) for dim Hom_T(source, H^degree J_P). max is the multiplicity
/// of source among the factors; factors inside an undetermined extension or
/// behind an undetermined connecting map contribute to max only.
std::pair<int, int> homDimensionBound(const TorusCharacter& source, const jacquet::JacquetReport& report, int degree);

}  // namespace jc::ext
