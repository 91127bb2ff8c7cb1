#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include "jc/cli.hpp"

namespace jc::cli {

using nlohmann::ordered_json;

namespace {

std::string readFile(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string escapePointerToken(const std::string& key) {
    std::string out;
    for (char c : key) {
        if (c == '~') {
            out += "~0";
        } else if (c == '/') {
            out += "~1";
        } else {
            out += c;
        }
    }
    return out;
}

// Empty optional when the two values are equal.
std::optional<std::string> jsonDivergence(const ordered_json& a, const ordered_json& b, const std::string& path) {
    if (a.type() != b.type()) return path.empty() ? "/" : path;
    if (a.is_object()) {
        auto ia = a.begin();
        auto ib = b.begin();
        for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
            if (ia.key() != ib.key()) return path + "/" + escapePointerToken(ia.key());
            if (auto d = jsonDivergence(ia.value(), ib.value(), path + "/" + escapePointerToken(ia.key()))) return d;
        }
        if (ia != a.end()) return path + "/" + escapePointerToken(ia.key());
        if (ib != b.end()) return path + "/" + escapePointerToken(ib.key());
        return std::nullopt;
    }
    if (a.is_array()) {
        const std::size_t n = std::min(a.size(), b.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (auto d = jsonDivergence(a[i], b[i], path + "/" + std::to_string(i))) return d;
        }
        if (a.size() != b.size()) return path + "/" + std::to_string(n);
        return std::nullopt;
    }
    if (a != b) return path.empty() ? "/" : path;
    return std::nullopt;
}

std::string lineDivergence(const std::string& a, const std::string& b) {
    std::istringstream sa(a);
    std::istringstream sb(b);
    std::string la;
    std::string lb;
    for (std::size_t line = 1;; ++line) {
        const bool ga = static_cast<bool>(std::getline(sa, la));
        const bool gb = static_cast<bool>(std::getline(sb, lb));
        if (!ga && !gb) return "end of file";
        if (ga != gb || la != lb) return "line " + std::to_string(line);
    }
}

FixtureOutcome runFixture(const std::filesystem::path& cfgPath, bool update) {
    FixtureOutcome out;
    out.name = cfgPath.stem().string();
    JobConfig cfg;
    try {
        cfg = loadConfigFile(cfgPath);
    } catch (const std::exception& e) {
        out.detail = std::string("unreadable config: ") + e.what();
        return out;
    }
    ReportDocument doc;
    try {
        doc = runJob(cfg);
    } catch (const std::exception& e) {
        doc = errorDocument(cfg, e);
    }
    out.output = doc.serialize(cfg.format);

    const auto golden = std::filesystem::path(cfgPath).replace_extension(".golden");
    if (update) {
        std::ofstream(golden, std::ios::binary) << out.output;
        out.passed = true;
        out.detail = "updated";
        return out;
    }
    if (!std::filesystem::exists(golden)) {
        out.detail = "missing golden file " + golden.filename().string();
        return out;
    }
    const std::string expected = readFile(golden);
    if (expected == out.output) {
        out.passed = true;
        return out;
    }
    out.detail = "differs at " + firstDivergence(expected, out.output);
    return out;
}

}  // namespace

std::string firstDivergence(const std::string& expected, const std::string& actual) {
    if (expected == actual) return "";
    const auto a = ordered_json::parse(expected, nullptr, false);
    const auto b = ordered_json::parse(actual, nullptr, false);
    if (!a.is_discarded() && !b.is_discarded()) {
        if (auto d = jsonDivergence(a, b, "")) return *d;
    }
    return lineDivergence(expected, actual);
}

bool CorpusSummary::allPassed() const {
    if (setupError) return false;
    return std::all_of(fixtures.begin(), fixtures.end(), [](const FixtureOutcome& f) { return f.passed; });
}

std::string CorpusSummary::render() const {
    std::ostringstream os;
    if (setupError) {
        os << "corpus setup error: " << setupMessage << "\n";
        return os.str();
    }
    std::size_t failed = 0;
    for (const auto& f : fixtures) {
        if (f.passed) {
            os << "PASS " << f.name;
            if (!f.detail.empty()) os << " (" << f.detail << ")";
            os << "\n";
        } else {
            ++failed;
            os << "FAIL " << f.name << ": " << f.detail << "\n";
        }
    }
    os << fixtures.size() << " fixtures, " << failed << " failed\n";
    return os.str();
}

int CorpusSummary::exitCode() const {
    if (setupError) return kExitSetup;
    return allPassed() ? kExitOk : kExitCheckFailed;
}

CorpusSummary corpusRegression(const CorpusOptions& opts) {
    CorpusSummary summary;
    std::error_code ec;
    if (!std::filesystem::is_directory(opts.dir, ec)) {
        summary.setupError = true;
        summary.setupMessage = "fixture directory not found: " + opts.dir.string();
        return summary;
    }
    std::vector<std::filesystem::path> configs;
    for (const auto& entry : std::filesystem::directory_iterator(opts.dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".cfg") configs.push_back(entry.path());
    }
    if (configs.empty()) {
        summary.setupError = true;
        summary.setupMessage = "no fixtures (*.cfg) in " + opts.dir.string();
        return summary;
    }
    std::sort(configs.begin(), configs.end());

    summary.fixtures.resize(configs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < configs.size(); i = next++) {
            summary.fixtures[i] = runFixture(configs[i], opts.update);
        }
    };
    const std::size_t jobs = std::clamp<std::size_t>(opts.jobs, 1, configs.size());
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return summary;
}

}  // namespace jc::cli
