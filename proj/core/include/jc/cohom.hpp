#pragma once

// Cohomology of the one-dimensional nilpotent radicals n = <X> and
// nbar = <Y> on weight modules.
//
// For a one-dimensional Lie algebra spanned by A acting on V:
//   H^0 = ker A,  H^1 = coker A (x) dual line,  H^i = 0 for i >= 2.
// The dual line of n has weight -2, that of nbar weight +2.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jc/exactla.hpp"
#include "jc/sl2mod.hpp"

namespace jc::cohom {

enum class Direction { N, NBar };

std::string toString(Direction d);
Direction parseDirection(const std::string& text);
int weightShift(Direction d);  // -2 for n, +2 for nbar

/// Proof that the ladder operator of one direction has no kernel or
/// cokernel beyond `bound` (a basis index of the ladder).
struct StabilizationCertificate {
    enum class Kind { Empty, FiniteDimensional, Ladder };
    Kind kind = Kind::Empty;
    sl2::IndexPolynomial coefficient;  // ladder coefficient as a function of the source index
    int indexStep = 0;                 // source index -> target index
    std::vector<long long> roots;      // all integer roots of `coefficient`
    long long bound = 0;
    std::optional<std::size_t> windowTop;  // top basis index available; empty when finite
};

std::string toString(StabilizationCertificate::Kind k);

struct WeightPiece {
    int weight = 0;  // reported weight (after the dual-line shift for H^1)
    int sourceWeight = 0;  // weight inside the module
    la::Subspace space;    // subspace (H^0) or quotient representatives (H^1) of V_sourceWeight
    std::vector<std::string> labels;  // one rendered basis vector per dimension
    std::size_t dim() const { return space.dim(); }
};

struct CohomologyResult {
    Direction direction = Direction::N;
    int weightShiftApplied = -2;
    // Keyed by module weight (pre-shift). Only weights where the operator is
    // fully determined by the window appear; zero-dimensional pieces included.
    std::map<int, WeightPiece> h0;
    std::map<int, WeightPiece> h1;
    StabilizationCertificate certificate;
    bool certified = true;  // false only in window-only mode

    /// Nonzero pieces in descending source weight.
    std::vector<WeightPiece> nonzeroH0() const;
    std::vector<WeightPiece> nonzeroH1() const;
    std::size_t dimension(int degree) const;  // structurally zero for degree >= 2
};

struct CohomologyOptions {
    bool windowOnly = false;  // permit uncertified window-only answers
};

StabilizationCertificate stabilizationCertificate(const sl2::WeightModule& m, Direction d);

CohomologyResult cohomology(const sl2::WeightModule& m, Direction d, const CohomologyOptions& opts = {});

/// H^0(n, L(-k)^) is one line of weight k and H^1 one line of weight -(k+2).
bool kostantCheck(int k);

}  // namespace jc::cohom
