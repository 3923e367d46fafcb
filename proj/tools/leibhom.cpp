#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "leibhom/report.hpp"

int main(int argc, char **argv)
{
    using namespace leibhom;

    CLI::App app{"leibhom: exact Leibniz homology workbench"};
    app.set_version_flag("--version", std::string(kToolVersion));

    std::string command;
    std::string format = "text";
    std::string out_path;
    std::size_t cap = Limits{}.max_columns;
    RunConfig cfg;

    app.add_option("command", command, "validate | hl | li | conjecture1 | conjecture2 | wigner | export")->required();
    app.add_option("input", cfg.input, "algebra JSON file or builtin:<name>");
    app.add_option("--degree", cfg.degree, "top chain degree N");
    app.add_option("--weight", cfg.weight, "top weight W (conjecture1)");
    app.add_option("--generators", cfg.generators, "generator count (conjecture1) or dim V (wigner)");
    app.add_option("--action", cfg.action, "signed | unsigned | both (conjecture2)");
    app.add_option("--seed", cfg.seed, "SplitMix64 seed (wigner)");
    app.add_option("--trials", cfg.trials, "random trials per degree (wigner)");
    app.add_option("--format", format, "text | json | csv");
    app.add_option("--cap", cap, "maximum number of matrix columns");
    app.add_option("--out", out_path, "write the report to this file");
    app.add_flag("--representatives", cfg.representatives, "print cycle representatives");
    app.add_flag("--timing", cfg.timing, "include wall-clock timing");
    app.add_flag("--self-test-corrupt", cfg.corrupt_idempotent, "corrupt e_N^(1) to exercise the abort path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kSuccess : kInputError;
    }

    try {
        cfg.command = parse_command(command);
        cfg.format = parse_format(format);
        cfg.limits.max_columns = cap;
        const Report report = run(cfg);
        const std::string text = render(report, cfg.format);
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) {
                throw InputError("cannot write '" + out_path + "'");
            }
            out << text;
        }
        return report.exit_code;
    } catch (const InputError &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const ResourceLimitError &e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kResourceCap;
    } catch (const CheckFailure &e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kCheckFailed;
    } catch (const std::invalid_argument &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    }
}
