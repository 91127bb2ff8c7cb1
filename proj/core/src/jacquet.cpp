#include "jc/jacquet.hpp"

#include <map>

#include "jc/errors.hpp"

namespace jc::jacquet {

using cohom::Direction;

std::string toString(ModuleFamily f) {
    switch (f) {
        case ModuleFamily::Verma: return "verma";
        case ModuleFamily::DualVerma: return "dualverma";
        case ModuleFamily::Simple: return "simple";
    }
    return "verma";
}

ModuleFamily parseFamily(const std::string& text) {
    if (text == "verma") return ModuleFamily::Verma;
    if (text == "dualverma") return ModuleFamily::DualVerma;
    if (text == "simple") return ModuleFamily::Simple;
    throw ValidationError("family must be one of verma, dualverma, simple; got '" + text + "'");
}

void InducedRepSpec::validate() const {
    if (k % 2 != 0) throw sl2::ParityError("k must be even, got " + std::to_string(k));
    if (family == ModuleFamily::Simple && k < 0) {
        throw ValidationError("the simple family L(-k) needs k >= 0, got " + std::to_string(k));
    }
    psi.validate();
}

sl2::WeightModule InducedRepSpec::module(std::size_t trunc) const {
    switch (family) {
        case ModuleFamily::Verma: return sl2::verma(-k, trunc);
        case ModuleFamily::DualVerma: return sl2::dualVerma(-k, trunc);
        case ModuleFamily::Simple: return sl2::simple(-k);
    }
    throw std::logic_error("unknown family");
}

std::size_t InducedRepSpec::defaultTruncation() const { return sl2::defaultTruncation(k, -k); }

namespace {

std::size_t truncationFor(const InducedRepSpec& spec, const PipelineOptions& opts) {
    return opts.truncation.value_or(spec.defaultTruncation());
}

cohom::CohomologyResult dualCohomology(const InducedRepSpec& spec, const PipelineOptions& opts, Direction d) {
    spec.validate();
    const sl2::WeightModule dual = sl2::nFiniteDual(spec.module(truncationFor(spec, opts)));
    return cohom::cohomology(dual, d, {opts.windowOnly});
}

template <typename MakeChar>
void collectLines(const std::vector<cohom::WeightPiece>& pieces, std::vector<TorusCharacter>& out, MakeChar make) {
    for (const auto& piece : pieces) {
        for (std::size_t j = 0; j < piece.dim(); ++j) out.push_back(make(piece.weight));
    }
}

bool provablyDistinct(const TorusCharacter& a, const TorusCharacter& b) {
    return a.weight != b.weight || !(chars::heckeEigenvalue(a) == chars::heckeEigenvalue(b));
}

}  // namespace

PartCharacters sectionCohomologyCharacters(const InducedRepSpec& spec, const PipelineOptions& opts) {
    PartCharacters part;
    part.cohomology = dualCohomology(spec, opts, Direction::N);
    // n kills the locally constant factor; its N_0-invariants form the
    // psi delta_P line in every degree.
    auto make = [&](int w) { return chars::sectionCharacter(w, spec.psi); };
    collectLines(part.cohomology.nonzeroH0(), part.degrees[0], make);
    collectLines(part.cohomology.nonzeroH1(), part.degrees[1], make);
    return part;
}

PartCharacters stalkCohomologyCharacters(const InducedRepSpec& spec, const PipelineOptions& opts) {
    PartCharacters part;
    part.cohomology = dualCohomology(spec, opts, Direction::NBar);
    auto make = [&](int w) { return chars::wTwist(chars::stalkCharacter(w, spec.psi)); };
    collectLines(part.cohomology.nonzeroH0(), part.degrees[0], make);
    collectLines(part.cohomology.nonzeroH1(), part.degrees[1], make);
    return part;
}

std::vector<TorusCharacter> wTwistAll(const std::vector<TorusCharacter>& cs) {
    std::vector<TorusCharacter> out;
    out.reserve(cs.size());
    for (const auto& c : cs) out.push_back(chars::wTwist(c));
    return out;
}

std::string toString(ExtensionKind k) {
    switch (k) {
        case ExtensionKind::Zero: return "zero";
        case ExtensionKind::DirectSumDetermined: return "direct_sum_determined";
        case ExtensionKind::ExtClassUndetermined: return "ext_class_undetermined";
        case ExtensionKind::ConnectingUndetermined: return "connecting_undetermined";
    }
    return "zero";
}

JacquetReport assembleLES(const InducedRepSpec& spec, const PipelineOptions& opts) {
    JacquetReport report;
    report.spec = spec;
    report.truncation = spec.family == ModuleFamily::Simple ? 0 : truncationFor(spec, opts);
    report.section = sectionCohomologyCharacters(spec, opts);
    report.stalk = stalkCohomologyCharacters(spec, opts);

    // The connecting map H0(stalk) -> H1(sec) is T-equivariant, hence zero
    // when no pair of characters across it can coincide.
    bool connectingZero = true;
    for (const auto& a : report.stalk.degrees[0]) {
        for (const auto& b : report.section.degrees[1]) {
            if (!provablyDistinct(a, b)) connectingZero = false;
        }
    }

    for (std::size_t i = 0; i < 2; ++i) {
        DegreeReport& deg = report.degrees[i];
        const auto& sub = report.section.degrees[i];
        const auto& quot = report.stalk.degrees[i];
        deg.jhFactors = sub;
        deg.jhFactors.insert(deg.jhFactors.end(), quot.begin(), quot.end());
        deg.subLayerSize = sub.size();
        for (const auto& c : deg.jhFactors) {
            deg.heckeEigenvalues.push_back(chars::heckeEigenvalue(c));
            if (!deg.heckeEigenvalues.back().isNonZero()) deg.finiteSlopeComplete = false;
        }

        if (!connectingZero) {
            deg.extension.kind = ExtensionKind::ConnectingUndetermined;
            continue;
        }
        if (deg.jhFactors.empty()) {
            deg.extension.kind = ExtensionKind::Zero;
            continue;
        }
        for (std::size_t s = 0; s < sub.size(); ++s) {
            for (std::size_t q = 0; q < quot.size(); ++q) {
                // Distinct algebraic weights split under the t-action.
                if (sub[s].weight == quot[q].weight) deg.extension.pairs.emplace_back(s, sub.size() + q);
            }
        }
        deg.extension.kind =
            deg.extension.pairs.empty() ? ExtensionKind::DirectSumDetermined : ExtensionKind::ExtClassUndetermined;
    }
    return report;
}

namespace {

void accumulateEuler(const JacquetReport& r, int sign, std::map<std::tuple<int, int, int, int, std::string>, int>& acc) {
    for (std::size_t i = 0; i < 2; ++i) {
        const int s = i == 0 ? sign : -sign;
        for (const auto& c : r.degrees[i].jhFactors) acc[c.normalizedKey()] += s;
    }
}

}  // namespace

bool lesConsistencyCheck(const JacquetReport& sub, const JacquetReport& middle, const JacquetReport& quot) {
    std::map<std::tuple<int, int, int, int, std::string>, int> acc;
    accumulateEuler(sub, 1, acc);
    accumulateEuler(middle, -1, acc);
    accumulateEuler(quot, 1, acc);
    for (const auto& [key, n] : acc) {
        if (n != 0) return false;
    }
    return true;
}

bool lesConsistencyCheck(int k, const SmoothCharacter& psi) {
    if (k < 0 || k % 2 != 0) throw ValidationError("LES check needs k >= 0 even, got " + std::to_string(k));
    const JacquetReport sub = assembleLES({ModuleFamily::Simple, k, psi});
    const JacquetReport middle = assembleLES({ModuleFamily::Verma, k, psi});
    const JacquetReport quot = assembleLES({ModuleFamily::Verma, -k - 2, psi});
    return lesConsistencyCheck(sub, middle, quot);
}

}  // namespace jc::jacquet
