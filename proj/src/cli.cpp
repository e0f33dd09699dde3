#include "groewalk/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "groewalk/errors.hpp"
#include "groewalk/format.hpp"
#include "groewalk/jsonio.hpp"
#include "groewalk/parser.hpp"

namespace groewalk {

namespace {

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path, 0, 0);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_problem(buf.str());
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write output file: " + path);
    out << content;
}

const WeightVector& named_weight(const ProblemFile& problem, const std::string& name) {
    const WeightVector* w = problem.weight(name);
    if (!w) throw PreconditionError("no weight named '" + name + "' in the problem file");
    return *w;
}

struct CommonArgs {
    std::string file;
    bool serial = false;
};

int command_gb(const std::string& file, const std::string& order_spec,
               const std::string& json_path, std::ostream& out) {
    ProblemFile problem = load_problem(file);
    MonomialOrder order = parse_order_spec(order_spec, *problem.context);
    GroebnerBasis basis = reduced_gb(problem.generator_polys(), order);
    for (const auto& s : canonical_strings(basis.polys, basis.order)) out << s << "\n";
    if (!json_path.empty()) write_file(json_path, basis_record(basis).dump(2) + "\n");
    return 0;
}

int command_eliminate(const std::string& file, const std::string& sigma_name,
                      const std::string& tau_name, const std::string& mode_name,
                      const std::string& trace_path, const std::string& json_path,
                      std::ostream& out) {
    ProblemFile problem = load_problem(file);
    const WeightVector& sigma = named_weight(problem, sigma_name);
    const WeightVector& tau = named_weight(problem, tau_name);
    WalkMode mode = mode_name == "tran" ? WalkMode::TranBoundary : WalkMode::Improved;
    WalkResult result = eliminate_walk(problem.generator_polys(), sigma, tau, mode);
    for (const auto& s : canonical_strings(result.elimination_basis, result.final_gb.order))
        out << s << "\n";
    out << "# mode=" << to_string(mode) << " stop=" << to_string(result.trace.stop_reason)
        << " conversions=" << result.trace.conversions << "\n";
    nlohmann::json trace =
        trace_record(result.trace, mode, sigma, tau, *problem.context);
    if (!trace_path.empty()) write_file(trace_path, trace.dump(2) + "\n");
    if (!json_path.empty()) {
        nlohmann::json rec;
        rec["format"] = 1;
        rec["mode"] = to_string(mode);
        rec["elimination_basis"] =
            canonical_strings(result.elimination_basis, result.final_gb.order);
        rec["trace"] = std::move(trace);
        write_file(json_path, rec.dump(2) + "\n");
    }
    return 0;
}

int command_fan(const std::string& file, const std::string& json_path,
                const std::string& csv_path, std::size_t max_dim, bool serial,
                std::ostream& out) {
    ProblemFile problem = load_problem(file);
    FanOptions opts;
    opts.max_dimension = max_dim;
    opts.parallel = !serial;
    GroebnerFan fan = enumerate_fan(problem.generator_polys(), opts);
    auto ev = ev_region(fan);
    out << "cells: " << fan.cells.size() << "\n";
    out << "ev_region: " << ev.size() << "\n";
    for (std::size_t i = 0; i < fan.cells.size(); ++i) {
        const FanCell& cell = fan.cells[i];
        bool is_ev = is_ideal_specific_elim_order(cell.gb);
        out << "cell " << i << ": class=" << to_string(boundary_class(cell.cone))
            << " ev=" << (is_ev ? "true" : "false") << " gb=" << cell.key << "\n";
    }
    if (!json_path.empty()) write_file(json_path, fan_record(fan).dump(2) + "\n");
    if (!csv_path.empty()) write_file(csv_path, section_csv(fan));
    return 0;
}

int command_check_ieo(const std::string& file, const std::string& order_spec,
                      std::ostream& out) {
    ProblemFile problem = load_problem(file);
    MonomialOrder order = parse_order_spec(order_spec, *problem.context);
    GroebnerBasis basis = reduced_gb(problem.generator_polys(), order);
    out << "is_ieo: " << (is_ideal_specific_elim_order(basis) ? "true" : "false") << "\n";
    for (const auto& p : x_leading_elements(basis))
        out << "lead_x: " << to_canonical_string(p, basis.order) << "\n";
    return 0;
}

int command_star_check(const std::string& file, std::size_t samples, unsigned long seed,
                       const std::string& json_path, std::size_t max_dim, bool serial,
                       std::ostream& out) {
    ProblemFile problem = load_problem(file);
    FanOptions opts;
    opts.max_dimension = max_dim;
    opts.parallel = !serial;
    GroebnerFan fan = enumerate_fan(problem.generator_polys(), opts);
    StarCheckReport report = check_star_shaped(fan, samples, seed, !serial);
    out << "samples=" << report.samples_tested << " violations=" << report.violations.size()
        << " seed=" << report.seed << "\n";
    for (const auto& v : report.violations) {
        out << "violation: sigma=" << weight_vector_string(v.sigma)
            << " tau=" << weight_vector_string(v.tau)
            << " omega=" << weight_vector_string(v.omega) << " witness=" << v.witness_key
            << "\n";
    }
    if (!json_path.empty()) write_file(json_path, star_report_record(report).dump(2) + "\n");
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Groebner bases, fans and walk-based variable elimination over Q"};
    app.require_subcommand(1);

    std::string file, order_spec, json_path, csv_path, trace_path;
    std::string sigma_name, tau_name, mode_name = "improved";
    std::size_t samples = 200, max_dim = 4;
    unsigned long seed = 42;
    bool serial = false;

    auto* gb = app.add_subcommand("gb", "reduced Groebner basis under an order");
    gb->add_option("file", file)->required();
    gb->add_option("--order", order_spec, "order spec, e.g. rows=[[9,6,5]];tiebreak=x>u>v")
        ->required();
    gb->add_option("--json", json_path);

    auto* elim = app.add_subcommand("eliminate", "walk-based elimination basis");
    elim->add_option("file", file)->required();
    elim->add_option("--sigma", sigma_name, "start weight name")->required();
    elim->add_option("--tau", tau_name, "target weight name")->required();
    elim->add_option("--mode", mode_name)->check(CLI::IsMember({"improved", "tran"}));
    elim->add_option("--trace-json", trace_path);
    elim->add_option("--json", json_path);

    auto* fan = app.add_subcommand("fan", "enumerate the Groebner fan");
    fan->add_option("file", file)->required();
    fan->add_option("--json", json_path);
    fan->add_option("--section-csv", csv_path);
    fan->add_option("--max-dim", max_dim);
    fan->add_flag("--serial", serial, "serial reference enumeration");

    auto* ieo = app.add_subcommand("check-ieo", "is the order ideal-specific for elimination?");
    ieo->add_option("file", file)->required();
    ieo->add_option("--order", order_spec)->required();

    auto* star = app.add_subcommand("star-check", "sampled star-shapedness check");
    star->add_option("file", file)->required();
    star->add_option("--samples", samples);
    star->add_option("--seed", seed);
    star->add_option("--json", json_path);
    star->add_option("--max-dim", max_dim);
    star->add_flag("--serial", serial);

    try {
        app.parse(argc, argv);
        if (gb->parsed()) return command_gb(file, order_spec, json_path, out);
        if (elim->parsed())
            return command_eliminate(file, sigma_name, tau_name, mode_name, trace_path,
                                     json_path, out);
        if (fan->parsed())
            return command_fan(file, json_path, csv_path, max_dim, serial, out);
        if (ieo->parsed()) return command_check_ieo(file, order_spec, out);
        if (star->parsed())
            return command_star_check(file, samples, seed, json_path, max_dim, serial, out);
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            app.exit(e, out, err);
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DimensionGuardError& e) {
        err << "dimension guard: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace groewalk
