#pragma once

// Weight-graded sl2-modules: Verma modules, their category-O duals, finite
// dimensional simple quotients, n-finite duals and the BGG embedding.
//
// Conventions: X raises weight by 2, Y lowers it by 2, H acts on V_mu by mu
// and is never stored. [X,Y] = H.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jc/errors.hpp"
#include "jc/exactla.hpp"

namespace jc::sl2 {

class ParityError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

enum class Family { Verma, DualVerma, Simple, Generic };

std::string toString(Family f);

/// Integer polynomial in a basis index i, coefficients from degree 0 up.
class IndexPolynomial {
public:
    IndexPolynomial() = default;
    explicit IndexPolynomial(std::vector<long long> coeffs);
    static IndexPolynomial constant(long long c) { return IndexPolynomial({c}); }

    const std::vector<long long>& coefficients() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    bool isZero() const { return coeffs_.empty(); }

    la::Integer operator()(long long i) const;
    IndexPolynomial shifted(long long s) const;  // i -> p(i + s)
    IndexPolynomial operator-() const;

    /// All integer roots, ascending. Throws for the zero polynomial and for
    /// degree above 2.
    std::vector<long long> integerRoots() const;
    std::string toString() const;

    friend bool operator==(const IndexPolynomial&, const IndexPolynomial&) = default;

private:
    std::vector<long long> coeffs_;
};

/// Closed form of a module whose weight spaces are lines e_0, e_1, ... .
/// The X (resp. Y) action sends e_i to xCoef(i) e_{i + xIndexStep}
/// (resp. yCoef(i) e_{i + yIndexStep}) whenever both indices exist.
struct LadderFormula {
    int baseWeight = 0;  // weight of e_0
    int weightStep = 2;  // weight(e_i) = baseWeight + weightStep * i
    std::size_t topIndex = 0;
    bool infinite = false;  // the untruncated module continues past topIndex
    IndexPolynomial xCoef;
    int xIndexStep = 1;
    IndexPolynomial yCoef;
    int yIndexStep = -1;
    std::string basisSymbol = "e";

    int weightOf(long long index) const { return baseWeight + weightStep * static_cast<int>(index); }
    long long indexOf(int weight) const { return (weight - baseWeight) / weightStep; }
};

struct WeightModuleParts {
    Family family = Family::Generic;
    bool nFiniteDual = false;
    int lowestLabelWeight = 0;
    std::map<int, std::size_t> dims;
    std::map<int, la::SparseMatrix> x;  // keyed by source weight
    std::map<int, la::SparseMatrix> y;
    std::map<int, std::vector<std::string>> labels;
    std::optional<std::size_t> truncation;  // empty for finite-dimensional modules
    bool openTop = false;     // weights above the window are cut off, not zero
    bool openBottom = false;  // likewise below
    std::optional<LadderFormula> ladder;
};

class WeightModule {
public:
    WeightModule() = default;

    /// Validates parity, contiguity of the weights and block shapes. Missing
    /// blocks between present weights are zero.
    static WeightModule fromParts(WeightModuleParts parts);
    const WeightModuleParts& parts() const { return parts_; }

    Family family() const { return parts_.family; }
    bool isNFiniteDual() const { return parts_.nFiniteDual; }
    std::string familyName() const;
    int lowestLabelWeight() const { return parts_.lowestLabelWeight; }
    std::optional<std::size_t> truncation() const { return parts_.truncation; }
    bool isFiniteDimensional() const { return !parts_.openTop && !parts_.openBottom; }
    bool openTop() const { return parts_.openTop; }
    bool openBottom() const { return parts_.openBottom; }
    const std::optional<LadderFormula>& ladder() const { return parts_.ladder; }

    const std::vector<int>& weights() const { return weights_; }
    bool hasWeight(int mu) const { return parts_.dims.count(mu) != 0; }
    std::size_t dim(int mu) const;
    std::size_t totalDim() const;
    std::vector<std::string> labels(int mu) const;

    /// True when V_mu is determined: either inside the window or beyond a
    /// closed end (where it is zero).
    bool isKnownWeight(int mu) const;

    /// Block V_mu -> V_{mu+2} (resp. V_{mu-2}); empty when either space lies
    /// past an open end of the window.
    std::optional<la::SparseMatrix> xBlock(int mu) const;
    std::optional<la::SparseMatrix> yBlock(int mu) const;

    WeightModule withXBlock(int mu, la::SparseMatrix block) const;
    WeightModule withYBlock(int mu, la::SparseMatrix block) const;

private:
    WeightModuleParts parts_;
    std::vector<int> weights_;
};

WeightModule verma(int lambda, std::size_t trunc);
WeightModule dualVerma(int lambda, std::size_t trunc);
WeightModule simple(int minusK);
WeightModule nFiniteDual(const WeightModule& m);

/// [X,Y] = H on every weight where the three blocks involved are known.
bool checkBracketRelations(const WeightModule& m);

std::size_t defaultTruncation(int k, int lambda);

class ModuleMap {
public:
    ModuleMap(WeightModule source, WeightModule target, std::map<int, la::SparseMatrix> blocks);

    const WeightModule& source() const { return source_; }
    const WeightModule& target() const { return target_; }
    /// target.dim(mu) x source.dim(mu); empty when either side is unknown.
    std::optional<la::SparseMatrix> block(int mu) const;

    bool isEquivariant() const;
    /// dim of target V_mu / image, for every weight of the target window.
    std::map<int, std::size_t> cokernelDims() const;
    std::map<int, std::size_t> kernelDims() const;

private:
    WeightModule source_;
    WeightModule target_;
    std::map<int, la::SparseMatrix> blocks_;
};

/// M(k+2) -> M(-k), e'_j |-> e_{k+1+j}, with the target truncated at trunc.
ModuleMap bggMorphism(int k, std::size_t trunc);
/// M(-k) -> L(-k).
ModuleMap simpleQuotientMap(int k, std::size_t trunc);

}  // namespace jc::sl2
