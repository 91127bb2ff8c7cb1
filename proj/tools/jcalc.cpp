// jcalc: command-line front end for the Jacquet module calculator.
#include <cstdlib>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "jc/cli.hpp"
#include "jc/errors.hpp"

#ifndef JC_CORPUS_DIR
#define JC_CORPUS_DIR "corpus"
#endif

namespace {

using namespace jc::cli;

struct Flags {
    std::string family;
    int k = 0;
    int ell = 0;
    std::string direction = "n";
    std::size_t trunc = 0;
    long p = 0;
    bool json = false;
};

void addCommon(CLI::App* sub, JobConfig& cfg, Flags& f) {
    sub->add_option("--trunc", f.trunc, "highest basis index kept in truncated modules");
    sub->add_option("--p", f.p, "concrete prime for displaying eigenvalues");
    sub->add_flag("--json", f.json, "write a JSON report");
    sub->add_option("--psi", cfg.psi, "'trivial' or label:valuation:unit[:selfdual]");
}

void applyTruncationDefault(JobConfig& cfg) {
    if (cfg.truncation) return;
    const char* env = std::getenv("JACQUET_TRUNC_DEFAULT");
    if (!env || !*env) return;
    std::size_t pos = 0;
    long v = -1;
    try {
        v = std::stol(env, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != std::string(env).size() || v < 0) {
        throw jc::ValidationError(std::string("JACQUET_TRUNC_DEFAULT must be a non-negative integer, got '") + env + "'");
    }
    cfg.truncation = static_cast<std::size_t>(v);
}

int runConfigured(JobConfig cfg) {
    try {
        applyTruncationDefault(cfg);
        const ReportDocument doc = runJob(cfg);
        std::cout << doc.serialize(cfg.format);
        return doc.passed ? kExitOk : kExitCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << kToolName << ": " << errorClass(e) << ": " << e.what() << "\n";
        return exitCodeFor(e);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Derived Jacquet-Emerton modules of Orlik-Strauch representations of SL2(Qp)", kToolName};
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
    app.require_subcommand(0, 1);

    JobConfig cfg;
    Flags f;
    std::string configPath;
    app.add_option("--config", configPath, "run the job described by a key = value file")->check(CLI::ExistingFile);

    auto* jac = app.add_subcommand("jacquet", "H^0 and H^1 of J_P for F(M, psi)");
    jac->add_option("--family", f.family, "verma, dualverma or simple")->required();
    jac->add_option("--k", f.k, "even weight k; the module is M(-k), M(-k)^v or L(-k)")->required();
    jac->add_flag("--window-only", cfg.windowOnly, "accept uncertified window-only answers");
    addCommon(jac, cfg, f);

    auto* coh = app.add_subcommand("cohomology", "n or nbar cohomology of the n-finite dual of M");
    coh->add_option("--family", f.family, "verma, dualverma or simple")->required();
    coh->add_option("--k", f.k, "even weight k")->required();
    coh->add_option("--direction", f.direction, "n or nbar");
    coh->add_flag("--plain", cfg.plainModule, "use M itself rather than its n-finite dual");
    coh->add_flag("--window-only", cfg.windowOnly, "accept uncertified window-only answers");
    addCommon(coh, cfg, f);

    auto* bgg = app.add_subcommand("bgg-check", "equivariance and cokernel of M(k+2) -> M(-k)");
    bgg->add_option("--k", f.k, "non-negative even k")->required();
    addCommon(bgg, cfg, f);

    auto* kos = app.add_subcommand("kostant", "n-cohomology of the simple module L(-k)");
    kos->add_option("--k", f.k, "non-negative even k")->required();
    addCommon(kos, cfg, f);

    auto* extb = app.add_subcommand("ext-bound", "dimension of Ext^1(Ind chi_k psi, I(chi_ell phi))");
    extb->add_option("--k", f.k, "negative even k")->required();
    extb->add_option("--ell", f.ell, "even ell")->required();
    extb->add_option("--phi", cfg.phi, "'trivial' or label:valuation:unit[:selfdual]");
    extb->add_option("--relation", cfg.relations, "declared relation, e.g. psi-eq-phi or psi-delta-ne-phiw");
    addCommon(extb, cfg, f);

    auto* les = app.add_subcommand("les-check", "Euler characteristic check along 0 -> L(-k) -> M(-k) -> M(k+2) -> 0");
    les->add_option("--k", f.k, "non-negative even k")->required();
    addCommon(les, cfg, f);

    auto* corpus = app.add_subcommand("corpus", "golden-file regression corpus");
    auto* corpusRun = corpus->add_subcommand("run", "run every fixture and diff against its golden report");
    corpus->require_subcommand(1);
    CorpusOptions copts;
    copts.dir = JC_CORPUS_DIR;
    copts.jobs = std::max(1u, std::thread::hardware_concurrency());
    std::string dir = copts.dir.string();
    corpusRun->add_option("--dir", dir, "fixture directory");
    corpusRun->add_option("--jobs", copts.jobs, "worker threads")->check(CLI::PositiveNumber);
    corpusRun->add_flag("--update", copts.update, "rewrite golden files from current output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }

    if (corpusRun->parsed()) {
        copts.dir = dir;
        const CorpusSummary summary = corpusRegression(copts);
        (summary.setupError ? std::cerr : std::cout) << summary.render();
        return summary.exitCode();
    }

    if (!configPath.empty()) {
        if (!app.get_subcommands().empty()) {
            std::cerr << kToolName << ": --config cannot be combined with a subcommand\n";
            return kExitValidation;
        }
        try {
            return runConfigured(loadConfigFile(configPath));
        } catch (const std::exception& e) {
            std::cerr << kToolName << ": " << errorClass(e) << ": " << e.what() << "\n";
            return exitCodeFor(e);
        }
    }

    const std::pair<CLI::App*, Command> table[] = {{jac, Command::Jacquet},    {coh, Command::Cohomology},
                                                   {bgg, Command::BggCheck},   {kos, Command::Kostant},
                                                   {extb, Command::ExtBound},  {les, Command::LesCheck}};
    CLI::App* chosen = nullptr;
    for (const auto& [sub, command] : table) {
        if (sub->parsed()) {
            chosen = sub;
            cfg.command = command;
        }
    }
    if (!chosen) {
        std::cerr << app.help();
        return kExitValidation;
    }

    try {
        if (!f.family.empty()) cfg.family = jc::jacquet::parseFamily(f.family);
        cfg.k = f.k;
        if (chosen == extb) cfg.ell = f.ell;
        if (chosen->count("--trunc")) cfg.truncation = f.trunc;
        if (chosen->count("--p")) cfg.concreteP = f.p;
        if (chosen == coh) cfg.direction = jc::cohom::parseDirection(f.direction);
    } catch (const std::exception& e) {
        std::cerr << kToolName << ": " << errorClass(e) << ": " << e.what() << "\n";
        return exitCodeFor(e);
    }
    cfg.format = f.json ? OutputFormat::Json : OutputFormat::Text;
    return runConfigured(cfg);
}
