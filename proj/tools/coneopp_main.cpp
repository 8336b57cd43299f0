// Command-line front end. Every subcommand loads a JSON problem config,
// runs one verification suite, and emits a JSON report whose bytes are a
// pure function of (inputs, flags, seed). Exit codes: 0 all checks pass,
// 1 at least one FAIL, 2 no FAIL but something INCONCLUSIVE, 3 bad input.
#include <CLI11.hpp>

#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "coneopp/runner.hpp"

namespace {

using namespace coneopp;

struct Options {
    std::string config_path;
    std::string second_path; // translate-eq only
    std::string out_path;
    RunOptions run;
};

int emit(const std::string& command, Json inputs, std::vector<ResultEntry> entries,
         const Options& opt) {
    Report rep;
    rep.command = command;
    rep.inputs = std::move(inputs);
    rep.results = std::move(entries);
    rep.seed = opt.run.seed;
    rep.window = opt.run.window.radius;
    rep.cases = opt.run.cases;
    rep.tol = opt.run.tol;
    if (opt.out_path.empty())
        std::cout << render_report(rep);
    else
        write_report(rep, opt.out_path);
    return exit_code(rep);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lattice cone modules, their opposites, and machine-checkable "
                 "certificates that the two sides differ"};
    app.require_subcommand(1);

    Options opt;
    std::string action;
    std::vector<CLI::Option*> window_flags;

    auto add_common = [&](CLI::App* cmd, bool two_configs = false) {
        cmd->add_option("config", opt.config_path, "problem config (JSON)")
            ->required()
            ->check(CLI::ExistingFile);
        if (two_configs)
            cmd->add_option("second", opt.second_path, "second problem config (JSON)")
                ->required()
                ->check(CLI::ExistingFile);
        window_flags.push_back(
            cmd->add_option("--window", opt.run.window.radius,
                            "half-width of the verification window "
                            "(default from CONEOPP_WINDOW when the flag is absent)")
                ->check(CLI::PositiveNumber));
        cmd->add_option("--seed", opt.run.seed, "seed for the randomized checks");
        cmd->add_option("--cases", opt.run.cases, "randomized cases per suite")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--tol", opt.run.tol, "numerical tolerance for floating checks");
        cmd->add_option("--out", opt.out_path, "write the JSON report here, not stdout");
    };

    auto wire = [&](CLI::App* parent, const char* name, const char* help,
                    const char* act, bool two = false) {
        CLI::App* cmd = parent->add_subcommand(name, help);
        add_common(cmd, two);
        cmd->callback([&action, act] { action = act; });
        return cmd;
    };

    CLI::App* cone = app.add_subcommand("cone", "structural checks on a cone");
    cone->require_subcommand(1);
    wire(cone, "check", "validate generators, halfspaces, and growth bounds",
         "cone check");

    CLI::App* module_cmd = app.add_subcommand("module", "lattice module operations");
    module_cmd->require_subcommand(1);
    wire(module_cmd, "opposite", "opposite construction and involution checks",
         "module opposite");
    wire(module_cmd, "translate-eq",
         "decide whether two modules differ by a lattice translation",
         "module translate-eq", true);

    CLI::App* certify = app.add_subcommand("certify", "asymmetry certificates");
    certify->require_subcommand(1);
    wire(certify, "asymmetry",
         "certify that the cone module is not a translate of its opposite",
         "certify asymmetry");

    CLI::App* verify = app.add_subcommand("verify", "representation-level checks");
    verify->require_subcommand(1);
    wire(verify, "opposite-rep",
         "opposite representation: classes, intertwiner, inversion chain",
         "verify opposite-rep");
    wire(verify, "dilation", "bilateral dilation and wandering projections",
         "verify dilation");
    wire(verify, "purity", "escape indices against their growth bounds",
         "verify purity");
    wire(verify, "ccr", "Weyl commutation, covariance, and Gram positivity",
         "verify ccr");

    CLI::App* report_cmd = app.add_subcommand("report", "aggregate runs");
    report_cmd->require_subcommand(1);
    wire(report_cmd, "all", "run every suite against one config", "report all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    // The environment default applies only when no --window flag was given;
    // a value that is not a positive integer is an input error.
    bool window_flag_given = false;
    for (const auto* flag : window_flags)
        if (flag->count() > 0) window_flag_given = true;
    if (!window_flag_given) {
        if (const char* env = std::getenv("CONEOPP_WINDOW")) {
            const std::string text(env);
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(text, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != text.size() || value < 1) {
                std::cerr << "error: CONEOPP_WINDOW must be a positive integer, got \""
                          << text << "\"\n";
                return 3;
            }
            opt.run.window.radius = value;
        }
    }

    try {
        const ProblemConfig pc = load_config(opt.config_path);
        Json inputs;
        std::vector<ResultEntry> entries;

        if (action == "cone check") {
            inputs["config"] = pc.echo;
            entries = run_cone_check(pc.cone, opt.run);
        } else if (action == "module opposite") {
            inputs["config"] = pc.echo;
            entries = run_module_opposite(pc.module, opt.run);
        } else if (action == "module translate-eq") {
            const ProblemConfig pc2 = load_config(opt.second_path);
            inputs["first"] = pc.echo;
            inputs["second"] = pc2.echo;
            entries = run_translate_eq(pc.module, pc2.module, opt.run);
        } else if (action == "certify asymmetry") {
            inputs["config"] = pc.echo;
            entries = run_certify_asymmetry(pc.cone, opt.run);
        } else if (action == "verify opposite-rep") {
            inputs["config"] = pc.echo;
            entries = run_verify_opposite_rep(pc.module, opt.run);
        } else if (action == "verify dilation") {
            inputs["config"] = pc.echo;
            entries = run_verify_dilation(pc.module, opt.run);
        } else if (action == "verify purity") {
            inputs["config"] = pc.echo;
            entries = run_verify_purity(pc.module, opt.run);
        } else if (action == "verify ccr") {
            inputs["config"] = pc.echo;
            entries = run_verify_ccr(pc.module, opt.run);
        } else if (action == "report all") {
            inputs["config"] = pc.echo;
            entries = run_report_all(pc, opt.run);
        }

        return emit(action, std::move(inputs), std::move(entries), opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
