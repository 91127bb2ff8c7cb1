#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "jc/cli.hpp"
#include "jc/errors.hpp"

namespace jc::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

int parseInt(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(value, &pos);
    } catch (const std::exception&) {
        throw ValidationError(key + ": not an integer: '" + value + "'");
    }
    if (pos != value.size()) throw ValidationError(key + ": not an integer: '" + value + "'");
    return v;
}

bool parseBool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw ValidationError(key + ": expected true/false, got '" + value + "'");
}

bool isPrime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

void requireEven(const char* name, int v) {
    if (v % 2 != 0) throw ValidationError(std::string(name) + " must be even, got " + std::to_string(v));
}

}  // namespace

std::string toString(Command c) {
    switch (c) {
        case Command::Jacquet: return "jacquet";
        case Command::Cohomology: return "cohomology";
        case Command::BggCheck: return "bgg-check";
        case Command::Kostant: return "kostant";
        case Command::ExtBound: return "ext-bound";
        case Command::LesCheck: return "les-check";
    }
    return "jacquet";
}

Command parseCommand(const std::string& text) {
    for (Command c : {Command::Jacquet, Command::Cohomology, Command::BggCheck, Command::Kostant, Command::ExtBound,
                      Command::LesCheck}) {
        if (toString(c) == text) return c;
    }
    throw ValidationError("unknown command '" + text + "'");
}

chars::SmoothCharacter parseCharacter(const std::string& text, const std::string& symbol) {
    if (text == "trivial") return chars::SmoothCharacter::trivial(symbol);
    const auto parts = split(text, ':');
    if (parts.size() < 3 || parts.size() > 4) {
        throw ValidationError(symbol + ": expected 'trivial' or 'label:valuation:unit[:selfdual]', got '" + text + "'");
    }
    chars::SmoothCharacter c;
    c.symbol = symbol;
    c.label = parts[0];
    c.torusUnitLabel = parts[0];
    c.valueAtZ.valuation = parseInt(symbol + " valuation", parts[1]);
    try {
        c.valueAtZ.unit = la::parseRational(parts[2]);
    } catch (const std::invalid_argument& e) {
        throw ValidationError(symbol + " unit: " + e.what());
    }
    c.wSelfDual = false;
    if (parts.size() == 4) {
        if (parts[3] != "selfdual") throw ValidationError(symbol + ": unknown flag '" + parts[3] + "'");
        c.wSelfDual = true;
    }
    if (c.label == "trivial" && !(c.valueAtZ == chars::PAdicValue{})) {
        throw ValidationError(symbol + ": the label 'trivial' is reserved for the trivial character");
    }
    c.validate();
    return c;
}

std::string formatCharacter(const chars::SmoothCharacter& c) {
    if (c.label == "trivial") return "trivial";
    std::string s = c.label + ":" + std::to_string(c.valueAtZ.valuation) + ":" + c.valueAtZ.unit.get_str();
    if (c.wSelfDual) s += ":selfdual";
    return s;
}

void JobConfig::validate() const {
    auto needK = [&]() {
        if (!k) throw ValidationError(toString(command) + " requires k");
        requireEven("k", *k);
        return *k;
    };
    auto needNonNegativeK = [&]() {
        const int v = needK();
        if (v < 0) throw ValidationError(toString(command) + " requires k >= 0, got " + std::to_string(v));
        return v;
    };
    switch (command) {
        case Command::Jacquet:
        case Command::Cohomology: {
            if (!family) throw ValidationError(toString(command) + " requires a family (verma, dualverma, simple)");
            const int v = needK();
            if (*family == jacquet::ModuleFamily::Simple && v < 0) {
                throw ValidationError("family simple requires k >= 0, got " + std::to_string(v));
            }
            break;
        }
        case Command::BggCheck:
        case Command::Kostant:
        case Command::LesCheck:
            needNonNegativeK();
            break;
        case Command::ExtBound: {
            const int v = needK();
            if (v >= 0) throw ValidationError("ext-bound requires k < 0, got " + std::to_string(v));
            if (!ell) throw ValidationError("ext-bound requires ell");
            requireEven("ell", *ell);
            if (*ell == v) throw ValidationError("ext-bound requires k != ell");
            for (const auto& r : relations) ext::parseDeclaration(r);
            parseCharacter(phi, "phi");
            break;
        }
    }
    parseCharacter(psi, "psi");
    if (concreteP && !isPrime(*concreteP)) {
        throw ValidationError("p must be a prime, got " + std::to_string(*concreteP));
    }
}

JobConfig parseConfigText(const std::string& text) {
    JobConfig cfg;
    bool haveCommand = false;
    std::istringstream is(text);
    std::string line;
    int lineNo = 0;
    while (std::getline(is, line)) {
        ++lineNo;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ValidationError("config line " + std::to_string(lineNo) + ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "command") {
            cfg.command = parseCommand(value);
            haveCommand = true;
        } else if (key == "family") {
            cfg.family = jacquet::parseFamily(value);
        } else if (key == "k") {
            cfg.k = parseInt(key, value);
        } else if (key == "ell") {
            cfg.ell = parseInt(key, value);
        } else if (key == "psi") {
            cfg.psi = value;
        } else if (key == "phi") {
            cfg.phi = value;
        } else if (key == "relation") {
            for (const auto& r : split(value, ',')) {
                if (!trim(r).empty()) cfg.relations.push_back(trim(r));
            }
        } else if (key == "trunc") {
            const int t = parseInt(key, value);
            if (t < 0) throw ValidationError("trunc must be non-negative");
            cfg.truncation = static_cast<std::size_t>(t);
        } else if (key == "window_only") {
            cfg.windowOnly = parseBool(key, value);
        } else if (key == "plain") {
            cfg.plainModule = parseBool(key, value);
        } else if (key == "direction") {
            cfg.direction = cohom::parseDirection(value);
        } else if (key == "format") {
            if (value == "json") {
                cfg.format = OutputFormat::Json;
            } else if (value == "text") {
                cfg.format = OutputFormat::Text;
            } else {
                throw ValidationError("format must be json or text");
            }
        } else if (key == "p") {
            cfg.concreteP = parseInt(key, value);
        } else {
            throw ValidationError("config line " + std::to_string(lineNo) + ": unknown key '" + key + "'");
        }
    }
    if (!haveCommand) throw ValidationError("config has no 'command' key");
    return cfg;
}

JobConfig loadConfigFile(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read config file " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return parseConfigText(os.str());
}

}  // namespace jc::cli
