#include "jc/characters.hpp"

#include <sstream>

#include "jc/errors.hpp"

namespace jc::chars {

PAdicValue PAdicValue::inverse() const {
    if (unit == 0) throw ValidationError("zero has no inverse");
    return {-valuation, 1 / unit};
}

PAdicValue PAdicValue::pow(int e) const {
    PAdicValue base = e < 0 ? inverse() : *this;
    PAdicValue out;
    for (int i = 0; i < (e < 0 ? -e : e); ++i) out = out * base;
    return out;
}

la::Rational PAdicValue::evaluate(long prime) const {
    la::Integer pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(prime), static_cast<unsigned long>(valuation < 0 ? -valuation : valuation));
    la::Rational scale = valuation < 0 ? la::Rational(1) / la::Rational(pe) : la::Rational(pe);
    return scale * unit;
}

SmoothCharacter SmoothCharacter::trivial(std::string symbol) {
    SmoothCharacter c;
    c.symbol = std::move(symbol);
    return c;
}

void SmoothCharacter::validate() const {
    if (label.empty()) throw ValidationError(symbol + ": empty label");
    if (valueAtZ.unit == 0) throw ValidationError(symbol + ": value at z must be nonzero");
    if (wSelfDual && !(valueAtZ == wValueAtZ())) {
        throw ValidationError(symbol + " declared w-self-dual but psi(z) = " + render(valueAtZ) +
                              " differs from psi(z)^-1");
    }
}

std::tuple<int, int, int, int, std::string> TorusCharacter::normalizedKey() const {
    if (psi.wSelfDual) return {weight, psiExp + psiwExp, 0, deltaExp, psi.label};
    return {weight, psiExp, psiwExp, deltaExp, psi.label};
}

TorusCharacter sectionCharacter(int weight, const SmoothCharacter& psi) {
    return TorusCharacter{weight, 1, 0, 1, psi};
}

TorusCharacter stalkCharacter(int weight, const SmoothCharacter& psi) {
    return TorusCharacter{weight, 1, 0, 0, psi};
}

TorusCharacter wTwist(const TorusCharacter& c) {
    return TorusCharacter{-c.weight, c.psiwExp, c.psiExp, -c.deltaExp, c.psi};
}

PAdicValue heckeEigenvalue(const TorusCharacter& c) {
    PAdicValue v{c.weight, 1};
    v = v * c.psi.valueAtZ.pow(c.psiExp);
    v = v * c.psi.wValueAtZ().pow(c.psiwExp);
    v = v * PAdicValue{-2, 1}.pow(c.deltaExp);
    return v;
}

namespace {

void renderFactor(std::ostringstream& os, const std::string& name, int exp) {
    if (exp == 0) return;
    os << " " << name;
    if (exp != 1) os << "^{" << exp << "}";
}

}  // namespace

std::string render(const TorusCharacter& c) {
    std::ostringstream os;
    os << "chi_{" << c.weight << "}";
    renderFactor(os, c.psi.symbol, c.psiExp);
    renderFactor(os, c.psi.symbol + "^w", c.psiwExp);
    renderFactor(os, "delta_P", c.deltaExp);
    return os.str();
}

std::string render(const PAdicValue& v) {
    std::ostringstream os;
    os << "p^" << v.valuation << " * " << v.unit.get_str();
    return os.str();
}

}  // namespace jc::chars
