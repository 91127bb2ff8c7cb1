#pragma once

// Characters of the diagonal torus T of SL2(Qp) at the level of formal
// exponents: chi_k * psi^a * (psi^w)^b * delta_P^c, together with their
// eigenvalues at z = diag(p, 1/p) kept as (power of p, rational unit).

#include <compare>
#include <string>
#include <tuple>

#include "jc/exactla.hpp"

namespace jc::chars {

/// Value p^valuation * unit, without committing to a prime.
struct PAdicValue {
    int valuation = 0;
    la::Rational unit = 1;

    friend bool operator==(const PAdicValue&, const PAdicValue&) = default;
    PAdicValue operator*(const PAdicValue& o) const { return {valuation + o.valuation, unit * o.unit}; }
    PAdicValue inverse() const;
    PAdicValue pow(int e) const;
    bool isNonZero() const { return unit != 0; }
    /// Exact rational value for a concrete prime.
    la::Rational evaluate(long prime) const;
};

struct SmoothCharacter {
    std::string symbol = "psi";  // role name used when rendering ("psi", "phi")
    std::string label = "trivial";
    PAdicValue valueAtZ;          // psi(z)
    bool wSelfDual = true;        // psi^w = psi declared
    std::string torusUnitLabel = "trivial";

    static SmoothCharacter trivial(std::string symbol = "psi");
    /// Throws ValidationError on a zero unit or a w-self-dual declaration
    /// incompatible with psi^w(z) = psi(z)^-1.
    void validate() const;
    /// psi^w(z) = psi(w^-1 z w) = psi(z^-1).
    PAdicValue wValueAtZ() const { return valueAtZ.inverse(); }

    friend bool operator==(const SmoothCharacter&, const SmoothCharacter&) = default;
};

struct TorusCharacter {
    int weight = 0;   // algebraic weight k of chi_k
    int psiExp = 0;
    int psiwExp = 0;
    int deltaExp = 0;
    SmoothCharacter psi;

    /// Exponents after merging psi^w into psi when psi is declared
    /// w-self-dual; equality and ordering use this form.
    std::tuple<int, int, int, int, std::string> normalizedKey() const;

    friend bool operator==(const TorusCharacter& a, const TorusCharacter& b) {
        return a.normalizedKey() == b.normalizedKey();
    }
    friend bool operator<(const TorusCharacter& a, const TorusCharacter& b) {
        return a.normalizedKey() < b.normalizedKey();
    }
};

TorusCharacter sectionCharacter(int weight, const SmoothCharacter& psi);  // chi_w psi delta_P
TorusCharacter stalkCharacter(int weight, const SmoothCharacter& psi);    // chi_w psi

/// Conjugation by w: negates the algebraic weight, swaps psi and psi^w and
/// inverts delta_P.
TorusCharacter wTwist(const TorusCharacter& c);

/// Eigenvalue of z on the character line. chi_k(z) = p^k, delta_P(z) = p^-2.
PAdicValue heckeEigenvalue(const TorusCharacter& c);

/// "chi_{-4} psi delta_P", "chi_{2} psi^w".
std::string render(const TorusCharacter& c);
std::string render(const PAdicValue& v);

}  // namespace jc::chars
