#include "jc/cohom.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace jc::cohom {

using la::Rational;
using la::SparseMatrix;
using sl2::WeightModule;

std::string toString(Direction d) { return d == Direction::N ? "n" : "nbar"; }

Direction parseDirection(const std::string& text) {
    if (text == "n") return Direction::N;
    if (text == "nbar") return Direction::NBar;
    throw ValidationError("direction must be 'n' or 'nbar', got '" + text + "'");
}

int weightShift(Direction d) { return d == Direction::N ? -2 : 2; }

std::string toString(StabilizationCertificate::Kind k) {
    switch (k) {
        case StabilizationCertificate::Kind::Empty: return "empty";
        case StabilizationCertificate::Kind::FiniteDimensional: return "finite-dimensional";
        case StabilizationCertificate::Kind::Ladder: return "ladder";
    }
    return "empty";
}

namespace {

std::optional<SparseMatrix> operatorBlock(const WeightModule& m, Direction d, int mu) {
    return d == Direction::N ? m.xBlock(mu) : m.yBlock(mu);
}

std::string renderVector(const la::Vector& v, const std::vector<std::string>& labels) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] == 0) continue;
        Rational c = v[j];
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            c = abs(c);
        } else if (c < 0) {
            os << "-";
            c = abs(c);
        }
        if (c != 1) os << c.get_str() << "*";
        os << (j < labels.size() ? labels[j] : "b" + std::to_string(j));
        first = false;
    }
    return first ? "0" : os.str();
}

std::vector<WeightPiece> nonzeroDescending(const std::map<int, WeightPiece>& pieces) {
    std::vector<WeightPiece> out;
    for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
        if (it->second.dim() > 0) out.push_back(it->second);
    }
    return out;
}

}  // namespace

std::vector<WeightPiece> CohomologyResult::nonzeroH0() const { return nonzeroDescending(h0); }
std::vector<WeightPiece> CohomologyResult::nonzeroH1() const { return nonzeroDescending(h1); }

std::size_t CohomologyResult::dimension(int degree) const {
    if (degree < 0 || degree >= 2) return 0;
    std::size_t total = 0;
    for (const auto& [w, p] : degree == 0 ? h0 : h1) total += p.dim();
    return total;
}

StabilizationCertificate stabilizationCertificate(const WeightModule& m, Direction d) {
    StabilizationCertificate cert;
    if (m.weights().empty()) return cert;

    const auto& ladder = m.ladder();
    if (ladder) {
        cert.coefficient = d == Direction::N ? ladder->xCoef : ladder->yCoef;
        cert.indexStep = d == Direction::N ? ladder->xIndexStep : ladder->yIndexStep;
    }
    if (m.isFiniteDimensional()) {
        cert.kind = StabilizationCertificate::Kind::FiniteDimensional;
        if (ladder && !cert.coefficient.isZero()) cert.roots = cert.coefficient.integerRoots();
        cert.bound = ladder ? static_cast<long long>(ladder->topIndex) : static_cast<long long>(m.weights().size()) - 1;
        return cert;
    }
    if (!ladder) {
        throw UnsupportedFamilyError("module family " + m.familyName() +
                                     " has no closed-form ladder coefficient; increase truncation and use window-only mode");
    }
    if (cert.coefficient.isZero()) {
        throw UnsupportedFamilyError("ladder operator vanishes identically on " + m.familyName() +
                                     "; no finite stabilization bound exists");
    }
    cert.kind = StabilizationCertificate::Kind::Ladder;
    cert.roots = cert.coefficient.integerRoots();
    cert.bound = cert.roots.empty() ? 0 : std::max<long long>(0, cert.roots.back() + 1);
    cert.windowTop = ladder->topIndex;
    return cert;
}

CohomologyResult cohomology(const WeightModule& m, Direction d, const CohomologyOptions& opts) {
    if (!sl2::checkBracketRelations(m)) {
        throw ValidationError("module " + m.familyName() + " violates [X,Y] = H");
    }
    CohomologyResult result;
    result.direction = d;
    result.weightShiftApplied = weightShift(d);
    try {
        result.certificate = stabilizationCertificate(m, d);
        const auto& cert = result.certificate;
        if (cert.kind == StabilizationCertificate::Kind::Ladder &&
            static_cast<long long>(*cert.windowTop) < cert.bound + 1) {
            throw TruncationError("truncation " + std::to_string(*cert.windowTop) + " is below the certified bound " +
                                  std::to_string(cert.bound + 1) + " for " + m.familyName() + " (" + toString(d) +
                                  "); increase truncation");
        }
    } catch (const TruncationError&) {
        if (!opts.windowOnly) throw;
        result.certified = false;
    }
    if (opts.windowOnly) result.certified = false;

    const int shift = weightShift(d);
    const int step = d == Direction::N ? 2 : -2;
    for (int mu : m.weights()) {
        const auto labels = m.labels(mu);
        if (const auto a = operatorBlock(m, d, mu)) {
            WeightPiece piece;
            piece.weight = mu;
            piece.sourceWeight = mu;
            piece.space = la::kernel(*a);
            for (const auto& v : piece.space.basis()) piece.labels.push_back(renderVector(v, labels));
            result.h0.emplace(mu, std::move(piece));
        }
        if (const auto a = operatorBlock(m, d, mu - step)) {
            WeightPiece piece;
            piece.weight = mu + shift;
            piece.sourceWeight = mu;
            piece.space = la::cokernelBasis(*a);
            for (const auto& v : piece.space.basis()) piece.labels.push_back(renderVector(v, labels));
            result.h1.emplace(mu, std::move(piece));
        }
    }

    const auto& cert = result.certificate;
    if (result.certified && cert.kind == StabilizationCertificate::Kind::Ladder) {
        const auto& ladder = *m.ladder();
        for (const auto* pieces : {&result.h0, &result.h1}) {
            for (const auto& [w, piece] : *pieces) {
                if (piece.dim() > 0 && ladder.indexOf(w) > cert.bound) {
                    throw std::logic_error("cohomology found at index " + std::to_string(ladder.indexOf(w)) +
                                           " beyond the certified bound " + std::to_string(cert.bound));
                }
            }
        }
    }
    return result;
}

bool kostantCheck(int k) {
    if (k < 0 || k % 2 != 0) throw ValidationError("Kostant check needs k >= 0 even, got " + std::to_string(k));
    const CohomologyResult r = cohomology(sl2::nFiniteDual(sl2::simple(-k)), Direction::N);
    const auto h0 = r.nonzeroH0();
    const auto h1 = r.nonzeroH1();
    return h0.size() == 1 && h0[0].dim() == 1 && h0[0].weight == k && h1.size() == 1 && h1[0].dim() == 1 &&
           h1[0].weight == -(k + 2);
}

}  // namespace jc::cohom
