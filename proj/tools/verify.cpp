// verify <suite> [--cap N] [--lambda L] [--mu M] [--kappa K] [--family F] [--out PATH] [--jobs J]
//
// Exit codes: 0 all checks pass, 1 some check failed, 2 usage error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "framedef/checks.hpp"
#include "framedef/errors.hpp"

int main(int argc, char** argv) {
    using namespace framedef;
    CLI::App app{"Exact verification of deformation identities for framed 2x2 matrices"};
    std::string suite;
    RunOptions options;
    std::string out_path;
    bool no_timing = false;

    app.add_option("suite", suite, "relation | delta | triangular | points | arcs | schnitt | groebner | bijektion | finite | all")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    app.add_option("--cap", options.cap, "truncation degree")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--lambda", options.lambda, "off-diagonal constant of X (0 or odd)");
    app.add_option("--mu", options.mu, "off-diagonal constant of Y (0 or odd)");
    app.add_option("--kappa", options.kappa, "off-diagonal constant of Z (0 or odd)");
    app.add_option("--family", options.family, "punkte1 | punkte2 | bogen1 | bogen2")
        ->check(CLI::IsMember({"punkte1", "punkte2", "bogen1", "bogen2"}));
    app.add_option("--out", out_path, "write the report here instead of standard output");
    app.add_option("--jobs", options.jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_flag("--no-timing", no_timing, "omit the timing section");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    VerificationReport report;
    try {
        report = run_suite(suite, options);
    } catch (const PreconditionViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::string text = report.to_json(!no_timing).dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 2;
        }
        f << text;
    }
    std::cerr << suite << ": " << report.records.size() - report.failures() << "/" << report.records.size()
              << " checks passed\n";
    return report.all_passed() ? 0 : 1;
}
