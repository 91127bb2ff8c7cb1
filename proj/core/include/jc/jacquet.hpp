#pragma once

// Derived Jacquet-Emerton modules H^0 J_P, H^1 J_P of the Orlik-Strauch
// representations F(M, psi) of SL2(Qp) for M a Verma module M(-k), its
// dual M(-k)^v, or the simple quotient L(-k).
//
// Pipeline: n-cohomology of the n-finite dual of M gives the section part
// (twisted by psi delta_P), nbar-cohomology gives the stalk at w (twisted by
// psi, then conjugated by w); the two are spliced through the six-term
// sequence
//   0 -> H0(sec) -> H0 -> H0(stalk) -> H1(sec) -> H1 -> H1(stalk) -> 0.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jc/characters.hpp"
#include "jc/cohom.hpp"
#include "jc/sl2mod.hpp"

namespace jc::jacquet {

using chars::SmoothCharacter;
using chars::TorusCharacter;

enum class ModuleFamily { Verma, DualVerma, Simple };

std::string toString(ModuleFamily f);
ModuleFamily parseFamily(const std::string& text);

/// F(M, psi) with M = M(-k), M(-k)^v or L(-k). `k` is the weight of the
/// character chi_k, so Verma(k) is the principal series Ind chi_k psi.
struct InducedRepSpec {
    ModuleFamily family = ModuleFamily::Verma;
    int k = 0;
    SmoothCharacter psi;

    void validate() const;
    sl2::WeightModule module(std::size_t trunc) const;
    std::size_t defaultTruncation() const;
};

struct PipelineOptions {
    std::optional<std::size_t> truncation;  // default: max(|k|, |lambda|) + 16
    bool windowOnly = false;
};

struct PartCharacters {
    std::array<std::vector<TorusCharacter>, 2> degrees;
    cohom::CohomologyResult cohomology;
};

PartCharacters sectionCohomologyCharacters(const InducedRepSpec& spec, const PipelineOptions& opts = {});
PartCharacters stalkCohomologyCharacters(const InducedRepSpec& spec, const PipelineOptions& opts = {});

std::vector<TorusCharacter> wTwistAll(const std::vector<TorusCharacter>& cs);

enum class ExtensionKind { Zero, DirectSumDetermined, ExtClassUndetermined, ConnectingUndetermined };
std::string toString(ExtensionKind k);

struct ExtensionFlag {
    ExtensionKind kind = ExtensionKind::Zero;
    // Layers of an undetermined class: sub from the section part, quot from
    // the stalk part, paired when they share an algebraic weight.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (index in jh, index in jh)
};

struct DegreeReport {
    std::vector<TorusCharacter> jhFactors;  // sub layer first, quotient layer last
    std::size_t subLayerSize = 0;           // leading factors coming from the section part
    ExtensionFlag extension;
    std::vector<chars::PAdicValue> heckeEigenvalues;
    bool finiteSlopeComplete = true;
};

struct JacquetReport {
    InducedRepSpec spec;
    std::array<DegreeReport, 2> degrees;
    PartCharacters section;
    PartCharacters stalk;
    std::size_t truncation = 0;
};

JacquetReport assembleLES(const InducedRepSpec& spec, const PipelineOptions& opts = {});

/// Euler characteristics of the three terms of
///   0 -> L(-k) (x) sm-Ind psi -> Ind chi_k psi -> Ind chi_{-k-2} psi -> 0
/// satisfy chi(sub) - chi(middle) + chi(quot) = 0 character by character.
bool lesConsistencyCheck(int k, const SmoothCharacter& psi);
bool lesConsistencyCheck(const JacquetReport& sub, const JacquetReport& middle, const JacquetReport& quot);

}  // namespace jc::jacquet
