#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

void add_common(CLI::App* cmd, lstc::cli::CommonOptions& opts, std::string& format) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->default_val("table");
    cmd->add_flag("--verify", opts.verify,
                  "Re-check each exact claim through an independent route");
    cmd->add_flag("--allow-large", opts.allow_large, "Lift the n <= 64 guard rail");
}

lstc::cli::Format parse_format(const std::string& f) {
    return f == "json" ? lstc::cli::Format::Json : lstc::cli::Format::Table;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "lstc: exact Lusternik-Schnirelmann category and topological complexity bounds\n"
        "for spaces given by finitely presented even-degree cohomology rings"};
    app.require_subcommand(1);

    int fcpn_n = 0;
    lstc::cli::CommonOptions fcpn_opts;
    std::string fcpn_format;
    auto* fcpn = app.add_subcommand("fcpn", "Report on the configuration space F(CP^n,2)");
    fcpn->add_option("--n", fcpn_n, "Projective space parameter")->required();
    add_common(fcpn, fcpn_opts, fcpn_format);

    lstc::cli::RingOptions ring_opts;
    lstc::cli::CommonOptions ring_common;
    std::string ring_format;
    auto* ring = app.add_subcommand("ring", "Report on a custom presentation file");
    ring->add_option("path", ring_opts.path, "Presentation document")->required();
    ring->add_option("--max-degree", ring_opts.max_degree,
                     "Truncation cap (overrides a maxdeg line; results become lower bounds)");
    ring->add_option("--cw-dim", ring_opts.cw_dimension, "CW dimension of the space");
    ring->add_option("--connectivity", ring_opts.connectivity,
                     "Largest c with the space c-connected (>= 1)");
    ring->add_flag("--no-paracompact", [&](std::int64_t) { ring_opts.paracompact = false; },
                   "Space not known paracompact: drop the dimensional TC upper bound");
    add_common(ring, ring_common, ring_format);

    int sweep_from = 0, sweep_to = 0;
    lstc::cli::CommonOptions sweep_opts;
    std::string sweep_format;
    auto* sweep = app.add_subcommand("sweep", "One row per n with the certified identities");
    sweep->add_option("--from", sweep_from, "First n")->required();
    sweep->add_option("--to", sweep_to, "Last n")->required();
    add_common(sweep, sweep_opts, sweep_format);

    int compare_n = 0;
    lstc::cli::CommonOptions compare_opts;
    std::string compare_format;
    auto* compare =
        app.add_subcommand("compare", "TC of F(CP^n,2) next to TC of CP^n x CP^n");
    compare->add_option("--n", compare_n, "Projective space parameter")->required();
    add_common(compare, compare_opts, compare_format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return lstc::cli::exit_usage_error;
    }

    if (fcpn->parsed()) {
        fcpn_opts.format = parse_format(fcpn_format);
        return lstc::cli::cmd_fcpn(fcpn_n, fcpn_opts, std::cout, std::cerr);
    }
    if (ring->parsed()) {
        ring_common.format = parse_format(ring_format);
        return lstc::cli::cmd_ring(ring_opts, ring_common, std::cout, std::cerr);
    }
    if (sweep->parsed()) {
        sweep_opts.format = parse_format(sweep_format);
        return lstc::cli::cmd_sweep(sweep_from, sweep_to, sweep_opts, std::cout, std::cerr);
    }
    if (compare->parsed()) {
        compare_opts.format = parse_format(compare_format);
        return lstc::cli::cmd_compare(compare_n, compare_opts, std::cout, std::cerr);
    }
    return lstc::cli::exit_usage_error;
}
