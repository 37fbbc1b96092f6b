// kleinlab command-line driver: scattering coefficients, spectra, charge
// bookkeeping, and vacuum currents for piecewise-constant Dirac potentials.

#include "kleinlab/bound_states.hpp"
#include "kleinlab/charge_counting.hpp"
#include "kleinlab/coulomb.hpp"
#include "kleinlab/emission.hpp"
#include "kleinlab/scattering.hpp"
#include "kleinlab/spectral_flow.hpp"
#include "kleinlab/sweep.hpp"
#include "kleinlab/units.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using kleinlab::cli::Table;

struct GlobalOpts {
    double mass = 1.0;
    std::string out = "-";
    std::string format = "csv";
    int jobs = 0;
    double tol = 1e-10;
};

int write_out(const Table& table, const GlobalOpts& opts) {
    const char delimiter = opts.format == "tsv" ? '\t' : ',';
    if (opts.out == "-") {
        kleinlab::cli::write_table(table, std::cout, delimiter);
        return 0;
    }
    std::ofstream os(opts.out);
    if (!os) {
        std::cerr << "error: cannot open output file '" << opts.out << "'\n";
        return 2;
    }
    kleinlab::cli::write_table(table, os, delimiter);
    return 0;
}

Table domain_failure(std::vector<std::string> header) {
    Table t;
    std::vector<std::string> row(header.size(), "nan");
    row.back() = "DOMAIN_ERR";
    t.header = std::move(header);
    t.rows.push_back(std::move(row));
    return t;
}

std::string fmt(double v) { return kleinlab::cli::format_value(v); }

const char* parity_name(kleinlab::spectrum::Parity p) {
    return p == kleinlab::spectrum::Parity::even ? "even" : "odd";
}

Table resonance_table(double V, double a, const kleinlab::UnitSystem& units) {
    Table t;
    t.header = {"N", "E_N/m", "status"};
    try {
        const auto list =
            kleinlab::analytic::resonance_energies(kleinlab::BarrierPotential{V, a}, units);
        for (const auto& res : list)
            t.rows.push_back({std::to_string(res.index), fmt(res.energy), "OK"});
    } catch (const kleinlab::DomainError&) {
        return domain_failure(t.header);
    } catch (const std::invalid_argument&) {
        return domain_failure(t.header);
    }
    return t;
}

Table spectrum_table(double V, double a, const kleinlab::UnitSystem& units, double tol) {
    Table t;
    t.header = {"index", "parity", "branch", "E/m", "p_well/m", "residual",
                "threshold", "status"};
    try {
        const auto states = kleinlab::spectrum::find_bound_states(V, a, units, tol);
        int i = 0;
        for (const auto& s : states) {
            t.rows.push_back({std::to_string(i++), parity_name(s.parity),
                              std::to_string(s.branch_index), fmt(s.energy),
                              fmt(s.well_momentum), fmt(s.residual),
                              s.at_boundary ? "1" : "0", "OK"});
        }
    } catch (const kleinlab::DomainError&) {
        return domain_failure(t.header);
    } catch (const std::invalid_argument&) {
        return domain_failure(t.header);
    }
    return t;
}

Table ramp_table(double V_max, int steps, double a, const kleinlab::UnitSystem& units,
                 double tol) {
    Table t;
    t.header = {"event", "parity", "branch", "V_c/m", "status"};
    try {
        const auto flow = kleinlab::spectrum::ramp_spectrum(V_max, steps, a, units, tol);
        for (const auto& ev : flow.events) {
            const char* kind =
                ev.type == kleinlab::spectrum::CrossingType::zero_energy
                    ? "zero_energy"
                    : "lower_continuum";
            t.rows.push_back({kind, parity_name(ev.parity), std::to_string(ev.branch_index),
                              fmt(ev.depth), "OK"});
        }
    } catch (const kleinlab::DomainError&) {
        return domain_failure(t.header);
    } catch (const std::invalid_argument&) {
        return domain_failure(t.header);
    }
    return t;
}

Table emission_lines_table(double delta, double a, const kleinlab::UnitSystem& units) {
    Table t;
    t.header = {"N", "p_N/m", "E_N/m", "status"};
    try {
        const auto spec = kleinlab::supercritical::emission_spectrum(delta, a, units);
        for (const auto& w : spec.warnings)
            std::cerr << "warning: " << w << '\n';
        for (const auto& line : spec.lines)
            t.rows.push_back(
                {std::to_string(line.index), fmt(line.momentum), fmt(line.energy), "OK"});
    } catch (const kleinlab::DomainError&) {
        return domain_failure(t.header);
    } catch (const std::invalid_argument&) {
        return domain_failure(t.header);
    }
    return t;
}

Table emission_summary_table(double delta, double a, const kleinlab::UnitSystem& units) {
    Table t;
    t.header = {"Delta/m", "a*m",          "exact_count", "estimated_count",
                "tau_level*m", "tau_sweep*m", "p_mean/m",    "status"};
    try {
        const auto spec = kleinlab::supercritical::emission_spectrum(delta, a, units);
        for (const auto& w : spec.warnings)
            std::cerr << "warning: " << w << '\n';
        t.rows.push_back({fmt(spec.delta), fmt(spec.half_width),
                          std::to_string(spec.exact_count), fmt(spec.estimated_count),
                          fmt(spec.level_spacing_time), fmt(spec.sweep_time),
                          fmt(spec.mean_momentum), "OK"});
    } catch (const kleinlab::DomainError&) {
        return domain_failure(t.header);
    } catch (const std::invalid_argument&) {
        return domain_failure(t.header);
    }
    return t;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dirac step, barrier, and well toolkit: scattering coefficients, "
                 "bound-state spectra, supercritical charge counting, and vacuum "
                 "currents in one dimension (hbar = c = 1, energies in units of m)."};
    app.require_subcommand(1);
    app.set_version_flag("--version", "kleinlab 0.1.0");
    app.fallthrough();

    GlobalOpts opts;
    app.add_option("--mass", opts.mass, "Fermion mass m (sets the unit scale)")
        ->capture_default_str();
    app.add_option("--out", opts.out, "Output path, or - for stdout")
        ->capture_default_str();
    app.add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"csv", "tsv"}))
        ->capture_default_str();
    app.add_option("--jobs", opts.jobs,
                   "Worker threads for sweeps (0: KLEINLAB_JOBS or hardware)")
        ->capture_default_str();
    app.add_option("--tol", opts.tol, "Root-finding / averaging tolerance")
        ->capture_default_str();

    double E = 0, V = 0, a = 0, delta = 0, lambda = 0, Z = 0, p_mom = 0, f_ratio = 1.0;
    double alpha = kleinlab::coulomb::fine_structure_default;
    double V_max = 0;
    int steps = 0;
    bool summary = false;
    std::string profile = "step";

    auto* step_cmd = app.add_subcommand("step", "Sharp-step reflection/transmission");
    step_cmd->add_option("--E", E, "Incident energy")->required();
    step_cmd->add_option("--V", V, "Step height")->required();

    auto* barrier_cmd =
        app.add_subcommand("barrier", "Square-barrier reflection/transmission");
    barrier_cmd->add_option("--E", E, "Incident energy")->required();
    barrier_cmd->add_option("--V", V, "Barrier height")->required();
    barrier_cmd->add_option("--a", a, "Barrier half-width")->required();

    auto* res_cmd =
        app.add_subcommand("resonances", "Transmission resonances of the barrier");
    res_cmd->add_option("--V", V, "Barrier height")->required();
    res_cmd->add_option("--a", a, "Barrier half-width")->required();

    auto* spec_cmd =
        app.add_subcommand("well-spectrum", "Bound states of the square well");
    spec_cmd->add_option("--V", V, "Well depth")->required();
    spec_cmd->add_option("--a", a, "Well half-width")->required();

    auto* ramp_cmd = app.add_subcommand(
        "ramp", "Track levels while the well deepens; report gap crossings");
    ramp_cmd->add_option("--V-max", V_max, "Final well depth")->required();
    ramp_cmd->add_option("--steps", steps, "Number of depth slices")->required();
    ramp_cmd->add_option("--a", a, "Well half-width")->required();

    auto* delta_cmd = app.add_subcommand("delta-well", "Delta-well level positions");
    delta_cmd->add_option("--lambda", lambda, "Well strength 2Va")->required();

    auto* counts_cmd = app.add_subcommand(
        "counts", "Closed-form supercritical level and positron counts");
    counts_cmd->add_option("--V", V, "Well depth")->required();
    counts_cmd->add_option("--a", a, "Well half-width")->required();

    auto* emission_cmd = app.add_subcommand(
        "emission", "Positron lines of a marginally supercritical well");
    emission_cmd->add_option("--delta", delta, "Depth excess over 2m")->required();
    emission_cmd->add_option("--a", a, "Well half-width")->required();
    emission_cmd->add_flag("--summary", summary,
                           "One-row summary instead of the line list");

    auto* coulomb_cmd = app.add_subcommand(
        "coulomb", "Coulomb-tail tunnelling suppression for positron escape");
    coulomb_cmd->add_option("--Z", Z, "Nuclear charge")->required();
    coulomb_cmd->add_option("--alpha", alpha, "Fine-structure constant")
        ->capture_default_str();
    coulomb_cmd->add_option("--E", E, "Positron energy")->required();
    coulomb_cmd->add_option("--p", p_mom, "Positron momentum (nonrelativistic form)");
    coulomb_cmd->add_option("--f", f_ratio, "Gamma-function prefactor ratio")
        ->capture_default_str();

    auto* vac_cmd = app.add_subcommand(
        "vacuum-current", "Integrated steady vacuum current of a supercritical profile");
    vac_cmd->add_option("--V", V, "Step/barrier height")->required();
    vac_cmd->add_option("--profile", profile, "Potential profile")
        ->check(CLI::IsMember({"step", "barrier"}))
        ->capture_default_str();

    auto* sweep_cmd =
        app.add_subcommand("sweep", "Sweep one parameter of a registered target");
    std::string config_path, target, sweep_param, scale_name;
    double start = 0, stop = 0;
    long count = 0;
    std::vector<std::string> set_kv;
    sweep_cmd->add_option("--config", config_path, "key=value config file");
    sweep_cmd->add_option("--target", target, "Target quantity (see --list)");
    sweep_cmd->add_option("--sweep", sweep_param, "Parameter to sweep");
    sweep_cmd->add_option("--start", start, "Sweep start");
    sweep_cmd->add_option("--stop", stop, "Sweep stop");
    sweep_cmd->add_option("--count", count, "Number of points");
    sweep_cmd->add_option("--scale", scale_name, "linear or log")
        ->check(CLI::IsMember({"linear", "log", "logarithmic"}));
    sweep_cmd->add_option("--set", set_kv, "Fix a parameter, e.g. --set V=4");
    bool list_targets = false;
    sweep_cmd->add_flag("--list", list_targets, "List targets and their parameters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const kleinlab::UnitSystem units{opts.mass};

    try {
        if (step_cmd->parsed())
            return write_out(
                kleinlab::cli::run_point("step", {{"E", E}, {"V", V}}, units, opts.tol),
                opts);
        if (barrier_cmd->parsed())
            return write_out(kleinlab::cli::run_point(
                                 "barrier", {{"E", E}, {"V", V}, {"a", a}}, units, opts.tol),
                             opts);
        if (res_cmd->parsed())
            return write_out(resonance_table(V, a, units), opts);
        if (spec_cmd->parsed())
            return write_out(spectrum_table(V, a, units, opts.tol), opts);
        if (ramp_cmd->parsed())
            return write_out(ramp_table(V_max, steps, a, units, opts.tol), opts);
        if (delta_cmd->parsed())
            return write_out(
                kleinlab::cli::run_point("delta-well", {{"lambda", lambda}}, units, opts.tol),
                opts);
        if (counts_cmd->parsed())
            return write_out(
                kleinlab::cli::run_point("counts", {{"V", V}, {"a", a}}, units, opts.tol),
                opts);
        if (emission_cmd->parsed())
            return write_out(summary ? emission_summary_table(delta, a, units)
                                     : emission_lines_table(delta, a, units),
                             opts);
        if (coulomb_cmd->parsed()) {
            std::map<std::string, double> params{
                {"Z", Z}, {"alpha", alpha}, {"E", E}, {"f", f_ratio}};
            if (coulomb_cmd->count("--p") > 0)
                params["p"] = p_mom;
            return write_out(kleinlab::cli::run_point("coulomb", params, units, opts.tol),
                             opts);
        }
        if (vac_cmd->parsed()) {
            const std::string target_name =
                profile == "barrier" ? "vacuum-barrier" : "vacuum-step";
            return write_out(
                kleinlab::cli::run_point(target_name, {{"V", V}}, units, opts.tol), opts);
        }
        if (sweep_cmd->parsed()) {
            if (list_targets) {
                for (const auto& [name, spec] : kleinlab::cli::targets()) {
                    std::cout << name << ":";
                    for (const auto& param : spec.input_names)
                        std::cout << ' ' << param;
                    std::cout << '\n';
                }
                return 0;
            }
            kleinlab::cli::SweepSpec spec;
            if (sweep_cmd->count("--config") > 0)
                spec = kleinlab::cli::load_config(config_path);
            if (sweep_cmd->count("--target") > 0)
                spec.target = target;
            if (sweep_cmd->count("--sweep") > 0)
                spec.sweep_param = sweep_param;
            if (sweep_cmd->count("--start") > 0)
                spec.start = start;
            if (sweep_cmd->count("--stop") > 0)
                spec.stop = stop;
            if (sweep_cmd->count("--count") > 0)
                spec.count = count;
            if (sweep_cmd->count("--scale") > 0)
                spec.scale = scale_name == "linear" ? kleinlab::cli::Scale::linear
                                                    : kleinlab::cli::Scale::logarithmic;
            for (const auto& kv : set_kv) {
                const auto eq = kv.find('=');
                if (eq == std::string::npos || eq == 0)
                    throw kleinlab::cli::ConfigError("--set expects name=value, got '" +
                                                     kv + "'");
                spec.fixed[kv.substr(0, eq)] =
                    std::stod(kv.substr(eq + 1)); // may throw invalid_argument
            }
            if (app.count("--mass") > 0)
                spec.mass = opts.mass;
            if (app.count("--jobs") > 0)
                spec.jobs = opts.jobs;
            if (app.count("--tol") > 0)
                spec.tol = opts.tol;
            if (app.count("--out") > 0)
                spec.out = opts.out;
            if (app.count("--format") > 0)
                spec.format = opts.format;
            GlobalOpts sweep_opts = opts;
            sweep_opts.out = spec.out;
            sweep_opts.format = spec.format;
            return write_out(kleinlab::cli::run_sweep(spec), sweep_opts);
        }
    } catch (const kleinlab::cli::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const kleinlab::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
