#include "jc/sl2mod.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

namespace jc::sl2 {

using la::Integer;
using la::Rational;
using la::SparseMatrix;

std::string toString(Family f) {
    switch (f) {
        case Family::Verma: return "Verma";
        case Family::DualVerma: return "DualVerma";
        case Family::Simple: return "Simple";
        case Family::Generic: return "Generic";
    }
    return "Generic";
}

// ---------------------------------------------------------------- polynomial

IndexPolynomial::IndexPolynomial(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IndexPolynomial::operator()(long long i) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * Integer(static_cast<long>(i)) + Integer(static_cast<long>(*it));
    }
    return acc;
}

IndexPolynomial IndexPolynomial::shifted(long long s) const {
    // Horner in the polynomial ring: p(i+s) = (...(a_n (i+s) + a_{n-1})(i+s) ...).
    std::vector<long long> out;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        std::vector<long long> next(out.size() + 1, 0);
        for (std::size_t d = 0; d < out.size(); ++d) {
            next[d + 1] += out[d];
            next[d] += out[d] * s;
        }
        next[0] += *it;
        out = std::move(next);
    }
    return IndexPolynomial(std::move(out));
}

IndexPolynomial IndexPolynomial::operator-() const {
    std::vector<long long> out = coeffs_;
    for (auto& c : out) c = -c;
    return IndexPolynomial(std::move(out));
}

std::vector<long long> IndexPolynomial::integerRoots() const {
    if (isZero()) throw std::domain_error("zero polynomial has every index as a root");
    std::set<long long> roots;
    switch (degree()) {
        case 0:
            break;
        case 1:
            if (coeffs_[0] % coeffs_[1] == 0) roots.insert(-coeffs_[0] / coeffs_[1]);
            break;
        case 2: {
            const Integer a = static_cast<long>(coeffs_[2]);
            const Integer b = static_cast<long>(coeffs_[1]);
            const Integer c = static_cast<long>(coeffs_[0]);
            const Integer disc = b * b - 4 * a * c;
            if (disc < 0 || mpz_perfect_square_p(disc.get_mpz_t()) == 0) break;
            Integer s;
            mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
            for (const Integer& num : {Integer(-b + s), Integer(-b - s)}) {
                const Integer den = 2 * a;
                if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) != 0) {
                    const Integer r = num / den;
                    roots.insert(r.get_si());
                }
            }
            break;
        }
        default:
            throw std::domain_error("integer roots only implemented up to degree 2");
    }
    return {roots.begin(), roots.end()};
}

std::string IndexPolynomial::toString() const {
    if (isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const long long c = coeffs_[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        const long long mag = std::llabs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (d == 0 || mag != 1) os << mag;
        if (d > 0 && mag != 1) os << "*";
        if (d >= 1) os << "i";
        if (d >= 2) os << "^" << d;
        first = false;
    }
    return os.str();
}

// ------------------------------------------------------------- weight module

namespace {

bool isEven(int v) { return v % 2 == 0; }

void requireEven(int v, const char* what) {
    if (!isEven(v)) {
        throw ParityError(std::string(what) + " must be an even integer, got " + std::to_string(v));
    }
}

SparseMatrix scalar1x1(const Integer& c) {
    SparseMatrix m(1, 1);
    m.set(0, 0, Rational(c));
    return m;
}

std::string toggleHat(const std::string& label) {
    const auto us = label.find('_');
    const std::string head = label.substr(0, us);
    const std::string tail = us == std::string::npos ? "" : label.substr(us);
    if (head.size() > 3 && head.compare(head.size() - 3, 3, "hat") == 0) {
        return head.substr(0, head.size() - 3) + tail;
    }
    return head + "hat" + tail;
}

WeightModule fromLadder(const LadderFormula& f, Family family, bool dual, std::optional<std::size_t> trunc) {
    if (f.weightStep * f.xIndexStep != 2 || f.weightStep * f.yIndexStep != -2) {
        throw std::logic_error("ladder index steps inconsistent with the weight grading");
    }
    WeightModuleParts p;
    p.family = family;
    p.nFiniteDual = dual;
    p.lowestLabelWeight = f.baseWeight;
    p.truncation = trunc;
    p.ladder = f;
    if (f.infinite) {
        (f.weightStep > 0 ? p.openTop : p.openBottom) = true;
    }
    const auto top = static_cast<long long>(f.topIndex);
    for (long long i = 0; i <= top; ++i) {
        const int w = f.weightOf(i);
        p.dims[w] = 1;
        p.labels[w] = {f.basisSymbol + "_" + std::to_string(i)};
    }
    for (long long i = 0; i <= top; ++i) {
        const int w = f.weightOf(i);
        if (const long long t = i + f.xIndexStep; t >= 0 && t <= top) p.x[w] = scalar1x1(f.xCoef(i));
        if (const long long t = i + f.yIndexStep; t >= 0 && t <= top) p.y[w] = scalar1x1(f.yCoef(i));
    }
    return WeightModule::fromParts(std::move(p));
}

}  // namespace

WeightModule WeightModule::fromParts(WeightModuleParts parts) {
    WeightModule m;
    for (const auto& kv : parts.dims) {
        const int w = kv.first;
        if ((w - parts.lowestLabelWeight) % 2 != 0) {
            throw ParityError("weight " + std::to_string(w) + " has parity different from the lowest label weight");
        }
        m.weights_.push_back(w);
    }
    for (std::size_t i = 1; i < m.weights_.size(); ++i) {
        if (m.weights_[i] != m.weights_[i - 1] + 2) {
            throw ValidationError("weights of a module must form a contiguous ladder");
        }
    }
    auto checkBlocks = [&](std::map<int, SparseMatrix>& blocks, int shift, const char* name) {
        for (const auto& [w, b] : blocks) {
            if (!parts.dims.count(w) || !parts.dims.count(w + shift)) {
                throw ValidationError(std::string(name) + " block at weight " + std::to_string(w) +
                                      " leaves the weight window");
            }
            if (b.cols() != parts.dims.at(w) || b.rows() != parts.dims.at(w + shift)) {
                throw ValidationError(std::string(name) + " block at weight " + std::to_string(w) +
                                      " has the wrong shape");
            }
        }
        for (const auto& [w, d] : parts.dims) {
            if (parts.dims.count(w + shift) && !blocks.count(w)) {
                blocks.emplace(w, SparseMatrix(parts.dims.at(w + shift), d));
            }
        }
    };
    checkBlocks(parts.x, 2, "X");
    checkBlocks(parts.y, -2, "Y");
    for (const auto& [w, d] : parts.dims) {
        auto& l = parts.labels[w];
        if (l.size() != d) {
            l.clear();
            for (std::size_t j = 0; j < d; ++j) l.push_back("v" + std::to_string(w) + "_" + std::to_string(j));
        }
    }
    m.parts_ = std::move(parts);
    return m;
}

std::string WeightModule::familyName() const {
    return parts_.nFiniteDual ? "NFiniteDual-of-" + toString(parts_.family) : toString(parts_.family);
}

std::size_t WeightModule::dim(int mu) const {
    auto it = parts_.dims.find(mu);
    return it == parts_.dims.end() ? 0 : it->second;
}

std::size_t WeightModule::totalDim() const {
    std::size_t total = 0;
    for (const auto& kv : parts_.dims) total += kv.second;
    return total;
}

std::vector<std::string> WeightModule::labels(int mu) const {
    auto it = parts_.labels.find(mu);
    return it == parts_.labels.end() ? std::vector<std::string>{} : it->second;
}

bool WeightModule::isKnownWeight(int mu) const {
    if (hasWeight(mu) || weights_.empty()) return true;
    if (mu > weights_.back()) return !parts_.openTop;
    if (mu < weights_.front()) return !parts_.openBottom;
    return true;
}

std::optional<SparseMatrix> WeightModule::xBlock(int mu) const {
    if (!isKnownWeight(mu) || !isKnownWeight(mu + 2)) return std::nullopt;
    if (hasWeight(mu) && hasWeight(mu + 2)) return parts_.x.at(mu);
    return SparseMatrix(dim(mu + 2), dim(mu));
}

std::optional<SparseMatrix> WeightModule::yBlock(int mu) const {
    if (!isKnownWeight(mu) || !isKnownWeight(mu - 2)) return std::nullopt;
    if (hasWeight(mu) && hasWeight(mu - 2)) return parts_.y.at(mu);
    return SparseMatrix(dim(mu - 2), dim(mu));
}

WeightModule WeightModule::withXBlock(int mu, SparseMatrix block) const {
    WeightModuleParts p = parts_;
    p.x[mu] = std::move(block);
    p.family = Family::Generic;
    p.ladder.reset();
    return fromParts(std::move(p));
}

WeightModule WeightModule::withYBlock(int mu, SparseMatrix block) const {
    WeightModuleParts p = parts_;
    p.y[mu] = std::move(block);
    p.family = Family::Generic;
    p.ladder.reset();
    return fromParts(std::move(p));
}

// -------------------------------------------------------------- constructors

std::size_t defaultTruncation(int k, int lambda) {
    return static_cast<std::size_t>(std::max(std::abs(k), std::abs(lambda))) + 16;
}

WeightModule verma(int lambda, std::size_t trunc) {
    requireEven(lambda, "Verma highest weight");
    LadderFormula f;
    f.baseWeight = lambda;
    f.weightStep = 2;
    f.topIndex = trunc;
    f.infinite = true;
    f.xCoef = IndexPolynomial::constant(1);
    f.xIndexStep = 1;
    // Y e_i = -i(lambda + i - 1) e_{i-1}
    f.yCoef = IndexPolynomial({0, 1 - lambda, -1});
    f.yIndexStep = -1;
    return fromLadder(f, Family::Verma, false, trunc);
}

WeightModule dualVerma(int lambda, std::size_t trunc) {
    requireEven(lambda, "dual Verma weight");
    LadderFormula f;
    f.baseWeight = lambda;
    f.weightStep = 2;
    f.topIndex = trunc;
    f.infinite = true;
    // X e_i = -(i+1)(lambda + i) e_{i+1}, Y e_i = e_{i-1}
    f.xCoef = IndexPolynomial({-lambda, -(lambda + 1), -1});
    f.xIndexStep = 1;
    f.yCoef = IndexPolynomial::constant(1);
    f.yIndexStep = -1;
    return fromLadder(f, Family::DualVerma, false, trunc);
}

WeightModule simple(int minusK) {
    requireEven(minusK, "simple module weight");
    if (minusK > 0) {
        throw ValidationError("simple(-k) requires -k <= 0, got " + std::to_string(minusK));
    }
    LadderFormula f;
    f.baseWeight = minusK;
    f.weightStep = 2;
    f.topIndex = static_cast<std::size_t>(-minusK);
    f.infinite = false;
    f.xCoef = IndexPolynomial::constant(1);
    f.xIndexStep = 1;
    f.yCoef = IndexPolynomial({0, 1 - minusK, -1});
    f.yIndexStep = -1;
    return fromLadder(f, Family::Simple, false, std::nullopt);
}

WeightModule nFiniteDual(const WeightModule& m) {
    const WeightModuleParts& src = m.parts();
    WeightModuleParts p;
    p.family = src.family;
    p.nFiniteDual = !src.nFiniteDual;
    p.lowestLabelWeight = -src.lowestLabelWeight;
    p.truncation = src.truncation;
    p.openTop = src.openBottom;
    p.openBottom = src.openTop;
    for (const auto& [w, d] : src.dims) {
        p.dims[-w] = d;
        std::vector<std::string> l;
        for (const auto& s : m.labels(w)) l.push_back(toggleHat(s));
        p.labels[-w] = std::move(l);
    }
    // (tau f)(v) = f(-tau v): every block becomes its negated transpose.
    for (const auto& [w, b] : src.x) p.x[-w - 2] = -b.transposed();
    for (const auto& [w, b] : src.y) p.y[-w + 2] = -b.transposed();
    if (src.ladder) {
        const LadderFormula& f = *src.ladder;
        LadderFormula g = f;
        g.baseWeight = -f.baseWeight;
        g.weightStep = -f.weightStep;
        g.xCoef = -f.xCoef.shifted(-f.xIndexStep);
        g.xIndexStep = -f.xIndexStep;
        g.yCoef = -f.yCoef.shifted(-f.yIndexStep);
        g.yIndexStep = -f.yIndexStep;
        g.basisSymbol = toggleHat(f.basisSymbol);
        p.ladder = g;
    }
    return WeightModule::fromParts(std::move(p));
}

bool checkBracketRelations(const WeightModule& m) {
    for (int mu : m.weights()) {
        const auto yDown = m.yBlock(mu);
        const auto xBack = m.xBlock(mu - 2);
        const auto xUp = m.xBlock(mu);
        const auto yBack = m.yBlock(mu + 2);
        if (!yDown || !xBack || !xUp || !yBack) continue;
        const SparseMatrix bracket = (*xBack) * (*yDown) - (*yBack) * (*xUp);
        if (!(bracket == SparseMatrix::identity(m.dim(mu)).scaled(mu))) return false;
    }
    return true;
}

// --------------------------------------------------------------- module maps

ModuleMap::ModuleMap(WeightModule source, WeightModule target, std::map<int, SparseMatrix> blocks)
    : source_(std::move(source)), target_(std::move(target)), blocks_(std::move(blocks)) {
    for (const auto& [w, b] : blocks_) {
        if (b.rows() != target_.dim(w) || b.cols() != source_.dim(w)) {
            throw ValidationError("module map block at weight " + std::to_string(w) + " has the wrong shape");
        }
    }
}

std::optional<SparseMatrix> ModuleMap::block(int mu) const {
    if (!source_.isKnownWeight(mu) || !target_.isKnownWeight(mu)) return std::nullopt;
    auto it = blocks_.find(mu);
    if (it != blocks_.end()) return it->second;
    return SparseMatrix(target_.dim(mu), source_.dim(mu));
}

bool ModuleMap::isEquivariant() const {
    std::set<int> ws(source_.weights().begin(), source_.weights().end());
    ws.insert(target_.weights().begin(), target_.weights().end());
    for (int mu : ws) {
        const auto f = block(mu);
        if (!f) continue;
        const auto tx = target_.xBlock(mu);
        const auto sx = source_.xBlock(mu);
        const auto fUp = block(mu + 2);
        if (tx && sx && fUp && !((*tx) * (*f) == (*fUp) * (*sx))) return false;
        const auto ty = target_.yBlock(mu);
        const auto sy = source_.yBlock(mu);
        const auto fDown = block(mu - 2);
        if (ty && sy && fDown && !((*ty) * (*f) == (*fDown) * (*sy))) return false;
    }
    return true;
}

std::map<int, std::size_t> ModuleMap::cokernelDims() const {
    std::map<int, std::size_t> out;
    for (int mu : target_.weights()) {
        if (const auto f = block(mu)) out[mu] = target_.dim(mu) - la::rank(*f);
    }
    return out;
}

std::map<int, std::size_t> ModuleMap::kernelDims() const {
    std::map<int, std::size_t> out;
    for (int mu : source_.weights()) {
        if (const auto f = block(mu)) out[mu] = source_.dim(mu) - la::rank(*f);
    }
    return out;
}

ModuleMap bggMorphism(int k, std::size_t trunc) {
    requireEven(k, "k");
    if (k < 0) throw ValidationError("BGG morphism needs k >= 0, got " + std::to_string(k));
    const auto kk = static_cast<std::size_t>(k);
    if (trunc < kk + 2) {
        throw TruncationError("BGG morphism for k = " + std::to_string(k) + " needs truncation >= " +
                              std::to_string(k + 2) + "; increase truncation");
    }
    WeightModule target = verma(-k, trunc);
    WeightModule source = verma(k + 2, trunc - kk - 1);
    std::map<int, SparseMatrix> blocks;
    for (std::size_t j = 0; j + kk + 1 <= trunc; ++j) {
        blocks.emplace(k + 2 + 2 * static_cast<int>(j), SparseMatrix::identity(1));
    }
    return ModuleMap(std::move(source), std::move(target), std::move(blocks));
}

ModuleMap simpleQuotientMap(int k, std::size_t trunc) {
    requireEven(k, "k");
    if (k < 0) throw ValidationError("simple quotient needs k >= 0, got " + std::to_string(k));
    if (trunc < static_cast<std::size_t>(k)) {
        throw TruncationError("quotient map needs truncation >= k; increase truncation");
    }
    WeightModule source = verma(-k, trunc);
    WeightModule target = simple(-k);
    std::map<int, SparseMatrix> blocks;
    for (int w = -k; w <= k; w += 2) blocks.emplace(w, SparseMatrix::identity(1));
    return ModuleMap(std::move(source), std::move(target), std::move(blocks));
}

}  // namespace jc::sl2
