// Command-line front end: ingest exact joint distributions, run partial
// information decompositions, export lattices and reports.
//
// Exit codes: 0 success, 1 consistency-validation failure, 2 usage or
// parse error.  Set PID_MAX_N=6 to unlock six-source enumeration.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "pidlat/pidlat.hpp"

namespace {

int max_sources_from_env() {
    const char* v = std::getenv("PID_MAX_N");
    if (!v) return pidlat::kDefaultMaxSources;
    const int parsed = std::atoi(v);
    const int unlocked = std::min(parsed, pidlat::kAbsoluteMaxSources);
    return std::max(unlocked, pidlat::kDefaultMaxSources);
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << content;
}

std::string node_line(const pidlat::Lattice& lattice, int index) {
    using pidlat::NodeView;
    return pidlat::node_label(lattice, index, NodeView::antichain) + "\t" +
           pidlat::node_label(lattice, index, NodeView::bitstring) + "\t" +
           pidlat::node_label(lattice, index, NodeView::statement);
}

struct DecomposeOptions {
    std::string input;
    std::string measure = "sx";
    std::string format = "csv";
    std::string output;
    bool emit_split = false;
    bool emit_pointwise = false;
    double tolerance = 1e-9;
};

int run_decompose(const DecomposeOptions& opt, bool report_only, bool echo) {
    const pidlat::JointDistribution dist = pidlat::load_distribution(opt.input);
    const pidlat::Measure measure = pidlat::parse_measure(opt.measure);
    if (!(opt.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
    const pidlat::Lattice lattice = pidlat::Lattice::build(dist.source_count(), max_sources_from_env());
    const pidlat::DecompositionResult result = pidlat::decompose(dist, measure, lattice, opt.tolerance);

    if (report_only) {
        std::string out;
        if (echo) out += pidlat::echo_csv(dist);
        out += "collection\tresidual\n";
        for (const auto& r : result.diagnostics.residuals)
            out += pidlat::to_string(r.collection) + "\t" + pidlat::format_g12(r.residual) + "\n";
        out += pidlat::consistency_summary(result.diagnostics) + "\n";
        write_output(opt.output, out);
    } else if (opt.format == "json") {
        nlohmann::json j = pidlat::atom_table_json(result, dist, opt.emit_split, opt.emit_pointwise);
        write_output(opt.output, j.dump(2) + "\n");
        std::cerr << pidlat::consistency_summary(result.diagnostics) << "\n";
    } else if (opt.format == "csv") {
        std::string out = pidlat::atom_table_csv(result, opt.emit_split);
        if (opt.emit_pointwise) out += "\n" + pidlat::pointwise_table_csv(result, dist, opt.emit_split);
        write_output(opt.output, out);
        std::cerr << pidlat::consistency_summary(result.diagnostics) << "\n";
    } else {
        throw std::invalid_argument("unknown format '" + opt.format + "' (expected csv or json)");
    }
    return result.diagnostics.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Partial information decomposition on exact discrete distributions"};
    app.require_subcommand(1);

    DecomposeOptions dec;
    CLI::App* cmd_decompose = app.add_subcommand("decompose", "Decompose a distribution into information atoms");
    cmd_decompose->add_option("--input,-i", dec.input, "Distribution file (.csv or .json)")->required();
    cmd_decompose->add_option("--measure,-m", dec.measure, "Measure system: sx, res, ws, ms, unq");
    cmd_decompose->add_option("--format,-f", dec.format, "Output format: csv or json");
    cmd_decompose->add_option("--output,-o", dec.output, "Output file (default stdout)");
    cmd_decompose->add_flag("--emit-split", dec.emit_split, "Include informative/misinformative atom columns");
    cmd_decompose->add_flag("--emit-pointwise", dec.emit_pointwise, "Include per-realization atom tables");
    cmd_decompose->add_option("--tolerance", dec.tolerance, "Consistency tolerance (default 1e-9)");

    DecomposeOptions val;
    bool val_echo = false;
    CLI::App* cmd_validate = app.add_subcommand("validate", "Check minimal consistency of a decomposition");
    cmd_validate->add_option("--input,-i", val.input, "Distribution file (.csv or .json)")->required();
    cmd_validate->add_option("--measure,-m", val.measure, "Measure system: sx, res, ws, ms, unq");
    cmd_validate->add_option("--output,-o", val.output, "Output file (default stdout)");
    cmd_validate->add_option("--tolerance", val.tolerance, "Consistency tolerance (default 1e-9)");
    cmd_validate->add_flag("--echo", val_echo, "Echo the parsed distribution before the report");

    int lat_n = 0;
    std::string lat_format = "dot", lat_view = "antichain", lat_output;
    CLI::App* cmd_lattice = app.add_subcommand("lattice", "Export the lattice as DOT or JSON");
    cmd_lattice->add_option("--n,-n", lat_n, "Number of sources")->required();
    cmd_lattice->add_option("--format,-f", lat_format, "Output format: dot or json");
    cmd_lattice->add_option("--view", lat_view, "Node labels: antichain, bitstring or statement");
    cmd_lattice->add_option("--output,-o", lat_output, "Output file (default stdout)");

    int chl_n = 0;
    std::string chl_antichain;
    bool chl_parents = false;
    CLI::App* cmd_children = app.add_subcommand("children", "List the lower covers of a lattice node");
    cmd_children->add_option("--n,-n", chl_n, "Number of sources")->required();
    cmd_children->add_option("antichain", chl_antichain, "Node as an antichain, e.g. \"1;2,3\" or \"{1}{2,3}\"")
        ->required();
    cmd_children->add_flag("--parents", chl_parents, "Also list upper covers");

    int rank_n = 3;
    std::string rank_output;
    CLI::App* cmd_rankcheck = app.add_subcommand("rankcheck", "Strong-synergy criterion rank report");
    cmd_rankcheck->add_option("--n,-n", rank_n, "Number of sources (2 or 3)");
    cmd_rankcheck->add_option("--output,-o", rank_output, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_decompose->parsed()) return run_decompose(dec, false, false);
        if (cmd_validate->parsed()) return run_decompose(val, true, val_echo);

        if (cmd_lattice->parsed()) {
            const pidlat::Lattice lattice = pidlat::Lattice::build(lat_n, max_sources_from_env());
            const pidlat::NodeView view = pidlat::parse_node_view(lat_view);
            if (lat_format == "dot")
                write_output(lat_output, pidlat::export_dot(lattice, view));
            else if (lat_format == "json")
                write_output(lat_output, pidlat::lattice_json(lattice).dump(2) + "\n");
            else
                throw std::invalid_argument("unknown format '" + lat_format + "' (expected dot or json)");
            return 0;
        }

        if (cmd_children->parsed()) {
            const pidlat::Lattice lattice = pidlat::Lattice::build(chl_n, max_sources_from_env());
            const pidlat::Antichain alpha = pidlat::parse_antichain(chl_antichain, chl_n);
            const int index = lattice.index_of(alpha);
            if (index < 0) throw std::invalid_argument("antichain is not a lattice node");
            std::string out = "node:\t" + node_line(lattice, index) + "\nchildren:\n";
            for (int c : lattice.children_of(index)) out += node_line(lattice, c) + "\n";
            if (chl_parents) {
                out += "parents:\n";
                for (int p : lattice.parents_of(index)) out += node_line(lattice, p) + "\n";
            }
            write_output("", out);
            return 0;
        }

        if (cmd_rankcheck->parsed()) {
            const pidlat::Lattice lattice = pidlat::Lattice::build(rank_n, max_sources_from_env());
            const pidlat::RankCheckReport report = pidlat::strong_synergy_rank_check(lattice);
            write_output(rank_output, pidlat::rank_check_json(report).dump(2) + "\n");
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
