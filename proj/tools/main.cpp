// splitcensus CLI: census and verification runs over lacunary polynomials
// that split completely modulo a prime.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "splitcensus/runner.hpp"

int main(int argc, char** argv) {
    using namespace splitcensus;

    CLI::App app{
        "splitcensus: exact census of fully split lacunary polynomials over F_p,\n"
        "gcd-pattern graph classification, and lemma verification sweeps"};
    app.set_config("--config", "", "flat key=value configuration file");

    std::string command;
    app.add_option("command", command,
                   "one of: census, verify-lemmas, zero-bound, domination, bound-compare")
        ->required();

    RunConfig cfg;
    std::string format = "csv";
    app.add_option("--p", cfg.p, "odd prime modulus");
    app.add_option("--k", cfg.k, "sparsity parameter (number of nonconstant terms)");
    app.add_option("--t", cfg.t_spec, "top exponent, a single value or a range A..B");
    u64 d_value = 0;
    auto* d_opt = app.add_option("--D", d_value, "gcd threshold for graph classification");
    app.add_option("--jobs", cfg.jobs, "worker count")->capture_default_str();
    app.add_option("--out", cfg.out, "output path (default: stdout)");
    app.add_option("--format", format, "csv or json")->capture_default_str();
    app.add_option("--budget", cfg.budget, "max enumeration steps")->capture_default_str();
    app.add_flag("--strict-pattern,!--no-strict-pattern", cfg.strict_pattern,
                 "require every coefficient nonzero (default on)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // config parse problems are exit 1
    }

    const auto cmd = parse_command(command);
    if (!cmd) {
        std::cerr << "error: invalid command '" << command
                  << "' (expected census, verify-lemmas, zero-bound, domination or "
                     "bound-compare)\n";
        return 1;
    }
    cfg.command = *cmd;
    if (d_opt->count() > 0) cfg.d = d_value;

    if (format == "csv") {
        cfg.format = OutputFormat::csv;
    } else if (format == "json") {
        cfg.format = OutputFormat::json;
    } else {
        std::cerr << "error: invalid --format: expected csv or json, got '" << format << "'\n";
        return 1;
    }

    return run(cfg, std::cerr);
}
