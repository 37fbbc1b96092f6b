#include "kleinlab/sweep.hpp"

#include "kleinlab/bound_states.hpp"
#include "kleinlab/charge_counting.hpp"
#include "kleinlab/coulomb.hpp"
#include "kleinlab/kinematics.hpp"
#include "kleinlab/potential.hpp"
#include "kleinlab/scattering.hpp"
#include "kleinlab/vacuum.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <system_error>
#include <thread>

namespace kleinlab::cli {

namespace {

using Params = std::map<std::string, double>;

std::string fmt(double v) { return format_value(v); }
std::string fmt_ll(long long v) { return std::to_string(v); }

const char* regime_name(Regime r) {
    switch (r) {
    case Regime::propagating_ordinary: return "ordinary";
    case Regime::propagating_klein: return "klein";
    case Regime::evanescent: return "evanescent";
    }
    return "unknown";
}

const char* parity_name(spectrum::Parity p) {
    return p == spectrum::Parity::even ? "even" : "odd";
}

std::vector<std::string> eval_step(const Params& p, const UnitSystem& u, double) {
    const auto r = analytic::step_coefficients(p.at("E"), StepPotential{p.at("V")}, u);
    return {fmt(r.kappa), fmt(r.R), fmt(r.T), fmt(r.k), fmt(r.p),
            fmt(r.unitarity_residual)};
}

std::vector<std::string> eval_barrier(const Params& p, const UnitSystem& u, double) {
    const auto r = analytic::barrier_coefficients(
        p.at("E"), BarrierPotential{p.at("V"), p.at("a")}, u);
    return {std::string(regime_name(r.regime)), fmt(r.kappa_sq), fmt(r.R), fmt(r.T),
            fmt(r.k), fmt(r.p), fmt(r.unitarity_residual)};
}

std::vector<std::string> eval_averaged(const Params& p, const UnitSystem& u, double) {
    const auto r = analytic::averaged_coefficients(p.at("E"), p.at("V"), u);
    return {fmt(r.R_infinity), fmt(r.T_infinity)};
}

std::vector<std::string> eval_kappa(const Params& p, const UnitSystem& u, double) {
    const double k2 = analytic::kinematic_kappa_sq(p.at("E"), p.at("V"), u);
    double kappa = std::numeric_limits<double>::quiet_NaN();
    try {
        kappa = analytic::kinematic_kappa(p.at("E"), p.at("V"), u);
    } catch (const DomainError&) {
        // outside the Klein zone only kappa^2 is meaningful
    }
    return {fmt(kappa), fmt(k2)};
}

std::vector<std::string> eval_effective(const Params& p, const UnitSystem& u, double) {
    return {fmt(effective_potential(p.at("V"), p.at("E"), u))};
}

std::vector<std::string> eval_counts(const Params& p, const UnitSystem& u, double) {
    const double V = p.at("V");
    const double a = p.at("a");
    const auto qs = supercritical::count_supercritical(V, a, u);
    const auto qp = supercritical::count_positrons(V, a, u);
    return {fmt_ll(qs), fmt_ll(qp.lower), fmt_ll(qp.upper)};
}

std::vector<std::string> eval_critical(const Params& p, const UnitSystem& u, double) {
    const double Nf = p.at("N");
    const auto ip = supercritical::int_part(Nf);
    if (!ip.on_boundary || ip.value < 1)
        throw DomainError("level index N must be a positive integer");
    return {fmt(supercritical::critical_potential(static_cast<int>(ip.value), p.at("a"), u))};
}

std::vector<std::string> eval_delta_well(const Params& p, const UnitSystem& u, double) {
    const double lambda = p.at("lambda");
    if (lambda < 0.0)
        throw DomainError("delta-well strength must be non-negative");
    const auto levels = spectrum::delta_well_states(lambda, u);
    return {fmt(levels.even_energy), fmt(levels.odd_energy),
            std::string(parity_name(levels.active_parity)), fmt(levels.active_energy),
            fmt_ll(supercritical::delta_well_positrons(lambda)),
            fmt_ll(supercritical::delta_well_supercritical(lambda))};
}

std::vector<std::string> eval_coulomb(const Params& p, const UnitSystem&, double) {
    coulomb::CoulombInput in{p.at("Z"), p.at("alpha"), p.at("E"), p.at("p"),
                             p.at("f")};
    double nonrel = std::numeric_limits<double>::quiet_NaN();
    if (std::isfinite(in.momentum))
        nonrel = coulomb::rho_nonrelativistic(in);
    return {fmt(nonrel), fmt(coulomb::rho_relativistic(in)),
            fmt(coulomb::classical_turning_point(in.Z, in.alpha, in.energy))};
}

std::vector<std::string> eval_vacuum(const Params& p, const UnitSystem& u, double,
                                     bool barrier) {
    const double V = p.at("V");
    const auto route = [&](vacuum::QuadratureScheme s) {
        return barrier ? vacuum::vacuum_current_barrier(V, u, s)
                       : vacuum::vacuum_current_step(V, u, s);
    };
    const double j = route(vacuum::QuadratureScheme::adaptive_gauss_kronrod);
    const double check = route(vacuum::QuadratureScheme::composite_gauss_legendre);
    return {fmt(j), fmt(check), fmt(std::abs(j - check))};
}

std::vector<std::string> eval_vacuum_step(const Params& p, const UnitSystem& u,
                                          double tol) {
    return eval_vacuum(p, u, tol, false);
}

std::vector<std::string> eval_vacuum_barrier(const Params& p, const UnitSystem& u,
                                             double tol) {
    return eval_vacuum(p, u, tol, true);
}

std::map<std::string, TargetSpec> build_targets() {
    std::map<std::string, TargetSpec> t;
    t["step"] = {{"E", "V"},
                 {"E/m", "V/m"},
                 {"kappa", "R", "T", "k/m", "p/m", "unitarity_residual"},
                 {},
                 {},
                 eval_step};
    t["barrier"] = {{"E", "V", "a"},
                    {"E/m", "V/m", "a*m"},
                    {"regime", "kappa_sq", "R", "T", "k/m", "p/m", "unitarity_residual"},
                    {},
                    {},
                    eval_barrier};
    t["averaged"] = {{"E", "V"},
                     {"E/m", "V/m"},
                     {"R_infinity", "T_infinity"},
                     {},
                     {},
                     eval_averaged};
    t["kappa"] = {{"E", "V"}, {"E/m", "V/m"}, {"kappa", "kappa_sq"}, {}, {}, eval_kappa};
    t["effective-potential"] = {
        {"E", "V"}, {"E/m", "V/m"}, {"V_eff/m"}, {}, {}, eval_effective};
    t["counts"] = {{"V", "a"},
                   {"V/m", "a*m"},
                   {"Q_S", "Q_p_min", "Q_p_max"},
                   {},
                   {},
                   eval_counts};
    t["critical-depth"] = {{"N", "a"}, {"N", "a*m"}, {"V_c/m"}, {}, {}, eval_critical};
    t["delta-well"] = {{"lambda"},
                       {"lambda"},
                       {"E_even/m", "E_odd/m", "active_parity", "E_active/m", "Q_p",
                        "Q_S"},
                       {},
                       {},
                       eval_delta_well};
    t["coulomb"] = {{"Z", "alpha", "E", "p", "f"},
                    {"Z", "alpha", "E/m", "p/m", "f"},
                    {"rho_nonrel", "rho_rel", "r_c*m"},
                    {{"alpha", coulomb::fine_structure_default}, {"f", 1.0}},
                    {"p"},
                    eval_coulomb};
    t["vacuum-step"] = {{"V"},
                        {"V/m"},
                        {"j_vac/m", "j_vac_check/m", "route_delta"},
                        {},
                        {},
                        eval_vacuum_step};
    t["vacuum-barrier"] = {{"V"},
                           {"V/m"},
                           {"j_vac/m", "j_vac_check/m", "route_delta"},
                           {},
                           {},
                           eval_vacuum_barrier};
    return t;
}

double parse_double(const std::string& text, int line) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
        throw ConfigError("cannot parse number '" + text + "'", line);
    return v;
}

long parse_long(const std::string& text, int line) {
    long v = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
        throw ConfigError("cannot parse integer '" + text + "'", line);
    return v;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

Params resolved_params(const SweepSpec& spec, const TargetSpec& target,
                       double sweep_value) {
    Params p = spec.fixed;
    if (!spec.sweep_param.empty())
        p[spec.sweep_param] = sweep_value;
    for (const auto& [name, value] : target.defaults)
        p.emplace(name, value);
    for (const auto& name : target.allow_missing)
        p.emplace(name, std::numeric_limits<double>::quiet_NaN());
    return p;
}

void validate(const SweepSpec& spec, const TargetSpec& target) {
    const auto known = [&](const std::string& name) {
        return std::find(target.input_names.begin(), target.input_names.end(), name) !=
               target.input_names.end();
    };
    for (const auto& [name, value] : spec.fixed) {
        (void)value;
        if (!known(name))
            throw ConfigError("unknown parameter '" + name + "' for target '" +
                              spec.target + "'");
    }
    if (!spec.sweep_param.empty() && !known(spec.sweep_param))
        throw ConfigError("cannot sweep unknown parameter '" + spec.sweep_param + "'");
    for (const auto& name : target.input_names) {
        if (target.defaults.count(name) || target.allow_missing.count(name))
            continue;
        if (name == spec.sweep_param || spec.fixed.count(name))
            continue;
        throw ConfigError("missing required parameter '" + name + "'");
    }
    if (spec.count < 1)
        throw ConfigError("sweep count must be at least 1");
    if (spec.scale == Scale::logarithmic && (spec.start <= 0.0 || spec.stop <= 0.0))
        throw ConfigError("logarithmic sweeps need positive endpoints");
    if (spec.mass <= 0.0)
        throw ConfigError("mass must be positive");
    if (spec.format != "csv" && spec.format != "tsv")
        throw ConfigError("format must be csv or tsv");
}

std::vector<double> grid_points(const SweepSpec& spec) {
    std::vector<double> xs(static_cast<std::size_t>(spec.count));
    const long n = spec.count;
    for (long i = 0; i < n; ++i) {
        double x;
        if (n == 1) {
            x = spec.start;
        } else if (i == n - 1) {
            x = spec.stop;
        } else if (spec.scale == Scale::linear) {
            x = spec.start + (spec.stop - spec.start) * static_cast<double>(i) /
                                 static_cast<double>(n - 1);
        } else {
            const double t = static_cast<double>(i) / static_cast<double>(n - 1);
            x = spec.start * std::pow(spec.stop / spec.start, t);
        }
        xs[static_cast<std::size_t>(i)] = x;
    }
    return xs;
}

std::vector<std::string> one_row(const TargetSpec& target, const Params& params,
                                 const UnitSystem& units, double tol) {
    std::vector<std::string> row;
    row.reserve(target.input_columns.size() + target.output_columns.size() + 1);
    for (const auto& name : target.input_names)
        row.push_back(fmt(params.at(name)));
    try {
        auto outputs = target.eval(params, units, tol);
        row.insert(row.end(), outputs.begin(), outputs.end());
        row.emplace_back("OK");
    } catch (const DomainError&) {
        for (std::size_t i = 0; i < target.output_columns.size(); ++i)
            row.emplace_back("nan");
        row.emplace_back("DOMAIN_ERR");
    } catch (const std::invalid_argument&) {
        for (std::size_t i = 0; i < target.output_columns.size(); ++i)
            row.emplace_back("nan");
        row.emplace_back("DOMAIN_ERR");
    }
    return row;
}

} // namespace

const std::map<std::string, TargetSpec>& targets() {
    static const std::map<std::string, TargetSpec> t = build_targets();
    return t;
}

std::string format_value(double v) {
    char buf[48];
    auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    if (ec != std::errc{})
        return "nan";
    return std::string(buf, ptr);
}

int resolve_jobs(int requested) {
    if (requested > 0)
        return requested;
    if (const char* env = std::getenv("KLEINLAB_JOBS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<int>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

SweepSpec load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    SweepSpec spec;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected key=value", line_no);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError("empty key", line_no);
        if (value.empty())
            throw ConfigError("empty value for key '" + key + "'", line_no);
        if (key == "target") {
            spec.target = value;
        } else if (key == "sweep") {
            spec.sweep_param = value;
        } else if (key == "start") {
            spec.start = parse_double(value, line_no);
        } else if (key == "stop") {
            spec.stop = parse_double(value, line_no);
        } else if (key == "count") {
            spec.count = parse_long(value, line_no);
        } else if (key == "scale") {
            if (value == "linear")
                spec.scale = Scale::linear;
            else if (value == "log" || value == "logarithmic")
                spec.scale = Scale::logarithmic;
            else
                throw ConfigError("scale must be linear or log", line_no);
        } else if (key == "out") {
            spec.out = value;
        } else if (key == "format") {
            spec.format = value;
        } else if (key == "jobs") {
            spec.jobs = static_cast<int>(parse_long(value, line_no));
        } else if (key == "mass") {
            spec.mass = parse_double(value, line_no);
        } else if (key == "tol") {
            spec.tol = parse_double(value, line_no);
        } else {
            // Anything else must be a parameter of the chosen target; the
            // target line may come later in the file, so resolve now only if
            // it is already known, otherwise remember and let validation
            // reject it (still with this line number).
            if (!spec.target.empty()) {
                const auto it = targets().find(spec.target);
                if (it != targets().end()) {
                    const auto& names = it->second.input_names;
                    if (std::find(names.begin(), names.end(), key) == names.end())
                        throw ConfigError("unknown key '" + key + "'", line_no);
                }
            }
            spec.fixed[key] = parse_double(value, line_no);
        }
    }
    if (!spec.target.empty()) {
        const auto it = targets().find(spec.target);
        if (it == targets().end())
            throw ConfigError("unknown target '" + spec.target + "'");
    }
    return spec;
}

Table run_sweep(const SweepSpec& spec) {
    const auto it = targets().find(spec.target);
    if (it == targets().end())
        throw ConfigError("unknown target '" + spec.target + "'");
    const TargetSpec& target = it->second;
    validate(spec, target);

    const UnitSystem units{spec.mass};
    const auto xs = grid_points(spec);

    Table table;
    table.header = target.input_columns;
    table.header.insert(table.header.end(), target.output_columns.begin(),
                        target.output_columns.end());
    table.header.emplace_back("status");
    table.rows.resize(xs.size());

    const int jobs = static_cast<int>(std::min<long>(resolve_jobs(spec.jobs), spec.count));
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&](int worker) {
        for (std::size_t i = static_cast<std::size_t>(worker); i < xs.size();
             i += static_cast<std::size_t>(jobs)) {
            try {
                const Params params = resolved_params(spec, target, xs[i]);
                table.rows[i] = one_row(target, params, units, spec.tol);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                return;
            }
        }
    };
    if (jobs <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int w = 0; w < jobs; ++w)
            pool.emplace_back(work, w);
        for (auto& th : pool)
            th.join();
    }
    if (failure)
        std::rethrow_exception(failure);
    return table;
}

Table run_point(const std::string& target_name, const Params& params,
                const UnitSystem& units, double tol) {
    const auto it = targets().find(target_name);
    if (it == targets().end())
        throw ConfigError("unknown target '" + target_name + "'");
    const TargetSpec& target = it->second;

    SweepSpec probe;
    probe.target = target_name;
    probe.fixed = params;
    probe.mass = units.mass;
    probe.tol = tol;
    validate(probe, target);

    Table table;
    table.header = target.input_columns;
    table.header.insert(table.header.end(), target.output_columns.begin(),
                        target.output_columns.end());
    table.header.emplace_back("status");
    table.rows.push_back(one_row(target, resolved_params(probe, target, 0.0), units, tol));
    return table;
}

namespace {

void write_field(std::ostream& os, const std::string& field, char delimiter) {
    const bool quote = field.find(delimiter) != std::string::npos ||
                       field.find('"') != std::string::npos ||
                       field.find('\n') != std::string::npos;
    if (!quote) {
        os << field;
        return;
    }
    os << '"';
    for (const char c : field) {
        if (c == '"')
            os << '"';
        os << c;
    }
    os << '"';
}

void write_row(std::ostream& os, const std::vector<std::string>& row, char delimiter) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i > 0)
            os << delimiter;
        write_field(os, row[i], delimiter);
    }
    os << '\n';
}

} // namespace

void write_table(const Table& table, std::ostream& os, char delimiter) {
    write_row(os, table.header, delimiter);
    for (const auto& row : table.rows)
        write_row(os, row, delimiter);
}

} // namespace kleinlab::cli
