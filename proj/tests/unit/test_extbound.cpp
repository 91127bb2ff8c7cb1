#include <doctest.h>

#include "jc/errors.hpp"
#include "jc/extbound.hpp"

using namespace jc::ext;
using jc::chars::PAdicValue;
using jc::la::Rational;

namespace {

SmoothCharacter character(const std::string& symbol, const std::string& label, PAdicValue z, bool selfDual) {
    SmoothCharacter c;
    c.symbol = symbol;
    c.label = label;
    c.torusUnitLabel = label;
    c.valueAtZ = z;
    c.wSelfDual = selfDual;
    return c;
}

}  // namespace

TEST_CASE("Trivial unless k = -(ell+2)") {
    const SmoothCharacter psi = SmoothCharacter::trivial("psi");
    const SmoothCharacter phi = SmoothCharacter::trivial("phi");
    for (int k = -10; k < 0; k += 2) {
        for (int ell = -8; ell <= 8; ell += 2) {
            if (k == ell || k == -(ell + 2)) continue;
            const ExtCase c = classifyExt(k, ell, psi, phi);
            CHECK((c.verdict == Verdict::Trivial));
            CHECK(c.firedBullets.empty());
        }
    }
}

TEST_CASE("bullet 1: phi delta != phi^w and psi = phi") {
    const ExtCase c = classifyExt(-4, 2, SmoothCharacter::trivial("psi"), SmoothCharacter::trivial("phi"));
    CHECK((c.verdict == Verdict::OneDim));
    CHECK(c.firedBullets == std::vector<int>{1});
    REQUIRE(c.matched.size() == 1);
    CHECK(jc::chars::render(c.matched[0]) == "chi_{-4} phi delta_P");
    CHECK(dimensionInterval(c.verdict) == std::pair{1, 1});
}

TEST_CASE("last bullet: psi delta = phi^w") {
    // phi(z) = p^2: phi^w(z) = p^-2 = psi delta_P(z) for psi(z) = 1, while phi delta_P(z) = 1.
    const SmoothCharacter psi = character("psi", "a", {0, 1}, true);
    const SmoothCharacter phi = character("phi", "b", {2, 1}, false);
    RelationDeclarations d{{Relation::PsiDeltaEqPhiW, true}};
    const ExtCase c = classifyExt(-4, 2, psi, phi, d);
    CHECK((c.verdict == Verdict::AtMostOneDim));
    CHECK(c.firedBullets == std::vector<int>{2, 4});
}

TEST_CASE("one-or-two bullet") {
    // phi delta = phi^w needs phi(z)^2 = p^2: phi(z) = p
    const SmoothCharacter phi = character("phi", "a", {1, 1}, false);
    const SmoothCharacter psi = character("psi", "a", {1, 1}, false);
    RelationDeclarations d{{Relation::PhiDeltaEqPhiW, true}, {Relation::PsiDeltaEqPhiW, true}};
    const ExtCase c = classifyExt(-2, 0, psi, phi, d);
    CHECK((c.verdict == Verdict::OneOrTwoDim));
    CHECK(c.firedBullets == std::vector<int>{3, 4});
    CHECK(dimensionInterval(c.verdict) == std::pair{1, 2});
}

TEST_CASE("undecidable relations need declarations") {
    const SmoothCharacter psi = character("psi", "a", {0, 1}, true);
    const SmoothCharacter phi = character("phi", "b", {0, 1}, true);
    CHECK_THROWS_AS(classifyExt(-4, 2, psi, phi), jc::NeedRelationDeclaration);
    CHECK_NOTHROW(classifyExt(-4, 2, psi, phi, {{Relation::PsiEqPhi, false}}));
    // Characters far apart at z need nothing.
    const SmoothCharacter far = character("phi", "c", {5, 7}, false);
    CHECK_NOTHROW(classifyExt(-4, 2, psi, far));
}

TEST_CASE("declarations contradicting z-values are rejected") {
    const SmoothCharacter psi = SmoothCharacter::trivial("psi");
    const SmoothCharacter phi = character("phi", "c", {5, 7}, false);
    CHECK_THROWS_AS(classifyExt(-4, 2, psi, phi, {{Relation::PsiEqPhi, true}}), jc::ValidationError);
}

TEST_CASE("declaration order does not matter") {
    const SmoothCharacter psi = character("psi", "a", {0, 1}, true);
    const SmoothCharacter phi = character("phi", "b", {2, 1}, false);
    RelationDeclarations one;
    one.emplace(Relation::PsiDeltaEqPhiW, true);
    one.emplace(Relation::PhiDeltaEqPhiW, false);
    RelationDeclarations two;
    two.emplace(Relation::PhiDeltaEqPhiW, false);
    two.emplace(Relation::PsiDeltaEqPhiW, true);
    CHECK((classifyExt(-4, 2, psi, phi, one).verdict == classifyExt(-4, 2, psi, phi, two).verdict));
}

TEST_CASE("hypotheses") {
    const SmoothCharacter t = SmoothCharacter::trivial();
    CHECK_THROWS_AS(classifyExt(2, 0, t, t), jc::ValidationError);
    CHECK_THROWS_AS(classifyExt(-4, -4, t, t), jc::ValidationError);
    CHECK_THROWS_AS(classifyExt(-3, 1, t, t), jc::ValidationError);
}

TEST_CASE("declaration strings") {
    CHECK(parseDeclaration("psi-ne-phi") == std::pair{Relation::PsiEqPhi, false});
    CHECK(parseDeclaration("phi-delta-eq-phiw") == std::pair{Relation::PhiDeltaEqPhiW, true});
    CHECK_THROWS_AS(parseDeclaration("psi-is-phi"), jc::ValidationError);
}

TEST_CASE("hom dimension bounds") {
    const SmoothCharacter t = SmoothCharacter::trivial();
    const int k = 2;
    const auto dual = jc::jacquet::assembleLES({jc::jacquet::ModuleFamily::DualVerma, k, t});
    const TorusCharacter src{-(k + 2), 1, 0, 1, t};
    CHECK(homDimensionBound(src, dual, 1) == std::pair{0, 1});
    CHECK(homDimensionBound(src, dual, 0) == std::pair{1, 1});
    CHECK(homDimensionBound(TorusCharacter{40, 0, 0, 0, t}, dual, 0) == std::pair{0, 0});
    for (int deg = 0; deg < 2; ++deg) {
        const auto [lo, hi] = homDimensionBound(src, dual, deg);
        CHECK(lo <= hi);
    }
}
