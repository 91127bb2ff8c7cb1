#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "jc/characters.hpp"
#include "jc/cohom.hpp"
#include "jc/extbound.hpp"
#include "jc/jacquet.hpp"

namespace jc::cli {

inline constexpr const char* kToolName = "jcalc";
inline constexpr const char* kToolVersion = "1.0.0";

enum class Command { Jacquet, Cohomology, BggCheck, Kostant, ExtBound, LesCheck };
enum class OutputFormat { Json, Text };

std::string toString(Command c);
Command parseCommand(const std::string& text);

// Process exit statuses. Error classes map to disjoint codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitValidation = 2,
    kExitTruncation = 3,
    kExitUndecidable = 4,
    kExitSetup = 5,
};

/// "trivial" or "label:valuation:unit[:selfdual]", e.g. "chi1:1:3/2".
chars::SmoothCharacter parseCharacter(const std::string& text, const std::string& symbol);
std::string formatCharacter(const chars::SmoothCharacter& c);

struct JobConfig {
    Command command = Command::Jacquet;
    std::optional<jacquet::ModuleFamily> family;
    std::optional<int> k;
    std::optional<int> ell;
    std::string psi = "trivial";
    std::string phi = "trivial";
    std::vector<std::string> relations;
    std::optional<std::size_t> truncation;
    bool windowOnly = false;
    bool plainModule = false;  // cohomology of M itself instead of its n-finite dual
    cohom::Direction direction = cohom::Direction::N;
    OutputFormat format = OutputFormat::Json;
    std::optional<long> concreteP;

    /// Throws ValidationError naming the violated constraint.
    void validate() const;
};

/// Flat "key = value" text, '#' starts a comment. Keys: command, family, k,
/// ell, psi, phi, relation (repeatable, comma separated), trunc,
/// window_only, plain, direction, format, p.
JobConfig parseConfigText(const std::string& text);
JobConfig loadConfigFile(const std::filesystem::path& path);

struct ReportDocument {
    nlohmann::ordered_json json;
    std::string text;
    bool passed = true;  // false when a check command reports failure

    std::string serialize(OutputFormat format) const;
};

/// Throws ValidationError, TruncationError or NeedRelationDeclaration.
ReportDocument runJob(const JobConfig& config);

/// Exit code for an exception escaping runJob.
int exitCodeFor(const std::exception& e);
std::string errorClass(const std::exception& e);

/// Document recorded for a failed job, so that error paths can be kept
/// under golden-file regression as well.
ReportDocument errorDocument(const JobConfig& config, const std::exception& e);

nlohmann::ordered_json configEcho(const JobConfig& config);

// ------------------------------------------------------------------ corpus

struct FixtureOutcome {
    std::string name;
    bool passed = false;
    std::string detail;  // first divergent path, or the setup problem
    std::string output;  // produced document
};

struct CorpusSummary {
    std::vector<FixtureOutcome> fixtures;  // sorted by name
    bool setupError = false;
    std::string setupMessage;

    bool allPassed() const;
    std::string render() const;
    int exitCode() const;
};

struct CorpusOptions {
    std::filesystem::path dir;
    std::size_t jobs = 1;
    bool update = false;  // rewrite golden files instead of comparing
};

CorpusSummary corpusRegression(const CorpusOptions& opts);

/// First differing location between two documents: a JSON pointer when both
/// parse as JSON, otherwise "line N". Empty when identical.
std::string firstDivergence(const std::string& expected, const std::string& actual);

}  // namespace jc::cli
