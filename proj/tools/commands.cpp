#include "commands.hpp"

#include "diracwell/dirac_field.hpp"
#include "diracwell/limits.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <cstdlib>
#include <filesystem>
#include <future>
#include <iostream>
#include <numbers>
#include <optional>
#include <regex>

namespace diracwell::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

// Reference ground states: R = 10 nm, l = 0.
struct Table1Row {
    double potential_ev;
    double kinetic_mev;
    double zeta_per_m;
    double xi_per_m;
    double kappa;
};

constexpr Table1Row kTable1[] = {
    {0.01, 1.53, 2.00e8, 4.71e8, 44.1},
    {0.10, 1.95, 2.26e8, 1.60e9, 2.23e6},
    {1.00, 2.12, 2.36e8, 5.12e9, 2.32e21},
    {10.0, 2.18, 2.39e8, 1.62e10, 1.75e69},
};
constexpr double kTable1Radius = 10.0;
constexpr double kEnergyTolMev = 0.01;
constexpr double kWaveNumberRelTol = 0.01;
constexpr double kLog10KappaTol = 0.11;

enum class Format { csv, json };

struct CommonOptions {
    std::string format = "csv";
    std::string output;
    std::string manifest;
};

/// Everything a command produced, for the manifest.
struct RunRecord {
    std::string command;
    std::vector<std::string> args;
    json config = json::object();
    std::vector<EigenState> states;
    std::vector<std::string> outputs;
    std::vector<std::string> notes;
    PhysicalConstants constants = codata2018;
};

fs::path output_root()
{
    if (const char* dir = std::getenv("DIRACWELL_OUTPUT_DIR"); dir && *dir) return dir;
    return ".";
}

fs::path resolve(const std::string& path)
{
    fs::path p(path);
    return p.is_absolute() ? p : output_root() / p;
}

std::string utc_now()
{
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

double log10_kappa(const EigenState& s)
{
    return s.kappa.log_abs / std::numbers::ln10;
}

json constants_json(const PhysicalConstants& c)
{
    return {{"hbar_c_ev_nm", c.hbar_c},
            {"rest_energy_ev", c.rest_energy},
            {"elementary_charge_c", c.elementary_charge},
            {"speed_of_light_m_per_s", c.speed_of_light}};
}

json config_json(const WellConfig& c)
{
    return {{"radius_nm", c.radius_nm}, {"potential_ev", c.potential_ev}, {"azimuthal_l", c.azimuthal_l}, {"pz", c.pz}};
}

void write_manifest(const RunRecord& run, const CommonOptions& opts)
{
    fs::path path;
    if (!opts.manifest.empty())
        path = resolve(opts.manifest);
    else if (!opts.output.empty())
        path = resolve(opts.output + ".manifest.json");
    else
        path = output_root() / ("diracwell-" + run.command + ".manifest.json");

    json states = json::array();
    for (const auto& s : run.states) {
        states.push_back({{"l", s.azimuthal_l},
                          {"n", s.radial_n},
                          {"E_kin_meV", s.kinetic_energy_mev()},
                          {"ln_kappa", s.kappa.log_abs},
                          {"kappa_sign", s.kappa.sign}});
    }
    json m;
    m["command"] = run.command;
    m["arguments"] = run.args;
    m["config"] = run.config;
    m["states_solved"] = states;
    m["output_paths"] = run.outputs;
    m["tool_version"] = kToolVersion;
    m["constants_used"] = constants_json(run.constants);
    m["notes"] = run.notes;
    m["created_utc"] = utc_now();
    write_atomic(path, m.dump(2) + "\n");
}

/// Sends `contents` to --output (atomically) or to stdout.
void emit(RunRecord& run, const std::string& output, const std::string& contents, std::ostream& out)
{
    if (output.empty()) {
        out << contents;
        run.outputs.push_back("<stdout>");
        return;
    }
    const fs::path path = resolve(output);
    write_atomic(path, contents);
    run.outputs.push_back(path.string());
}

std::string render(const Table& table, Format format, const json& extra = json::object())
{
    if (format == Format::csv) return table.to_csv();
    json doc = extra;
    doc["rows"] = table.to_json();
    return doc.dump(2) + "\n";
}

Format parse_format(const std::string& f)
{
    return f == "json" ? Format::json : Format::csv;
}

WellConfig checked_config(double radius, double potential, int l, const PhysicalConstants& c)
{
    try {
        return to_internal(WellConfig{radius, potential, l}, c);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void add_common(CLI::App& cmd, CommonOptions& opts)
{
    cmd.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd.add_option("--output", opts.output, "Output file (default: stdout)");
    cmd.add_option("--manifest", opts.manifest, "Run manifest path (default: <output>.manifest.json)");
}

// -- solve ------------------------------------------------------------------

struct SolveOptions {
    double radius = 10.0;
    double potential = 0.0;
    int l = 0;
    int max_states = 100000;
};

int run_solve(const SolveOptions& o, const CommonOptions& common, RunRecord& run, std::ostream& out)
{
    const WellConfig config = checked_config(o.radius, o.potential, o.l, run.constants);
    if (o.max_states < 1) throw UsageError("--max-states must be >= 1");
    run.config = config_json(config);
    run.states = find_eigenstates(config, o.max_states, run.constants);
    if (run.states.empty()) run.notes.push_back("no bound state found");
    emit(run, common.output, render(eigenstate_table(run.states), parse_format(common.format)), out);
    return kExitOk;
}

// -- table1 -----------------------------------------------------------------

struct Table1Options {
    std::optional<double> rest_energy;
    std::optional<double> hbar_c;
};

int run_table1(const Table1Options& o, const CommonOptions& common, RunRecord& run, std::ostream& out)
{
    if (o.rest_energy) {
        run.constants.rest_energy = *o.rest_energy;
        run.notes.push_back("rest energy overridden");
    }
    if (o.hbar_c) {
        run.constants.hbar_c = *o.hbar_c;
        run.notes.push_back("hbar c overridden");
    }
    Table table;
    table.columns = {"U_eV",          "ref_E_kin_meV",    "E_kin_meV",     "delta_E_kin_meV",
                     "ref_zeta_per_m", "zeta_per_m",      "rel_delta_zeta", "ref_xi_per_m",
                     "xi_per_m",      "rel_delta_xi",       "ref_log10_kappa", "log10_kappa",
                     "delta_log10_kappa", "pass"};
    json potentials = json::array();
    bool all_pass = true;
    for (const auto& ref : kTable1) {
        potentials.push_back(ref.potential_ev);
        const WellConfig config = checked_config(kTable1Radius, ref.potential_ev, 0, run.constants);
        const auto states = find_eigenstates(config, 1, run.constants);
        if (states.empty()) throw std::runtime_error("no ground state for U = " + format_double(ref.potential_ev));
        const EigenState& s = states.front();
        run.states.push_back(s);

        const double e = s.kinetic_energy_mev();
        const double zeta = units::per_nm_to_per_m(s.wave_numbers.zeta);
        const double xi = units::per_nm_to_per_m(s.wave_numbers.xi);
        const double lk = log10_kappa(s);
        const double ref_lk = std::log10(ref.kappa);
        const double d_e = e - ref.kinetic_mev;
        const double d_zeta = (zeta - ref.zeta_per_m) / ref.zeta_per_m;
        const double d_xi = (xi - ref.xi_per_m) / ref.xi_per_m;
        const double d_lk = lk - ref_lk;
        const bool pass = std::abs(d_e) <= kEnergyTolMev && std::abs(d_zeta) <= kWaveNumberRelTol
            && std::abs(d_xi) <= kWaveNumberRelTol && std::abs(d_lk) <= kLog10KappaTol && s.kappa.sign > 0;
        all_pass = all_pass && pass;
        table.add({ref.potential_ev, ref.kinetic_mev, e, d_e, ref.zeta_per_m, zeta, d_zeta, ref.xi_per_m, xi, d_xi,
                   ref_lk, lk, d_lk, std::string(pass ? "pass" : "fail")});
    }
    run.config = {{"radius_nm", kTable1Radius}, {"potentials_ev", potentials}, {"azimuthal_l", 0}, {"pz", 0.0}};
    emit(run, common.output, render(table, parse_format(common.format), {{"all_pass", all_pass}}), out);
    if (!all_pass) run.notes.push_back("one or more rows outside tolerance");
    return all_pass ? kExitOk : kExitFailure;
}

// -- field ------------------------------------------------------------------

struct FieldOptions {
    double radius = 10.0;
    double potential = 0.0;
    std::string state = "l0n1";
    std::optional<double> rmax;
    int samples = 301;
    int phi_samples = 1;
    std::string normalize = "raw";
};

int run_field(const FieldOptions& o, const CommonOptions& common, RunRecord& run, std::ostream& out)
{
    const StateSelector sel = parse_state_selector(o.state);
    const WellConfig config = checked_config(o.radius, o.potential, sel.l, run.constants);
    if (o.samples < 1) throw UsageError("--samples must be >= 1");
    if (o.phi_samples < 1) throw UsageError("--phi-samples must be >= 1");
    const double rmax = o.rmax.value_or(3.0 * config.radius_nm);
    if (!(rmax >= 0.0) || !std::isfinite(rmax)) throw UsageError("--rmax-nm must be >= 0");

    const auto states = find_eigenstates(config, sel.n, run.constants);
    if (static_cast<int>(states.size()) < sel.n) {
        std::string available;
        for (const auto& s : states)
            available += (available.empty() ? "" : ", ") + ("l" + std::to_string(s.azimuthal_l) + "n"
                                                            + std::to_string(s.radial_n));
        throw UsageError("state " + o.state + " not found; available: " + (available.empty() ? "none" : available));
    }
    const EigenState& state = states[sel.n - 1];
    run.states = {state};
    run.config = config_json(config);

    const auto norm = o.normalize == "unit-charge" ? Normalization::unit_charge : Normalization::raw;
    run.notes.push_back("normalization: " + o.normalize);
    run.notes.push_back(norm == Normalization::raw ? "units: psi dimensionless, j in e*c, charge in e"
                                                   : "units: psi nm^-3/2, j in A/m^2, charge in C/m^3");
    const BoundStateField field(state, config, run.constants, norm);

    Table table;
    table.columns = {"rho_nm", "phi_rad", "re_psi1", "im_psi1", "re_psi4", "im_psi4",
                     "j_rho",  "j_phi",   "j_z",     "charge_density", "region"};
    for (int j = 0; j < o.phi_samples; ++j) {
        const double phi = 2.0 * std::numbers::pi * j / o.phi_samples;
        for (int i = 0; i < o.samples; ++i) {
            const double rho = o.samples == 1 ? 0.0 : rmax * i / (o.samples - 1);
            const SpinorSample s = field.spinor(rho, phi);
            const FieldSample f = field.field(rho, phi);
            table.add({rho, phi, s.psi(0).real(), s.psi(0).imag(), s.psi(3).real(), s.psi(3).imag(), f.j_rho(),
                       f.j_phi(), f.j_z(), f.charge_density,
                       std::string(rho <= config.radius_nm ? "inside" : "outside")});
        }
    }
    emit(run, common.output, render(table, parse_format(common.format), {{"normalization", o.normalize}}), out);
    return kExitOk;
}

// -- sweep ------------------------------------------------------------------

struct SweepOptions {
    double radius = 10.0;
    std::vector<double> potentials{0.01, 0.1, 1.0, 10.0};
    int max_states = 100000;
};

std::string states_path(const std::string& output)
{
    fs::path p(output);
    fs::path ext = p.extension();
    p.replace_extension();
    p += ".states";
    p += ext;
    return p.string();
}

int run_sweep(const SweepOptions& o, const CommonOptions& common, RunRecord& run, std::ostream& out)
{
    if (o.potentials.empty()) throw UsageError("--potentials needs at least one value");
    if (o.max_states < 1) throw UsageError("--max-states must be >= 1");
    std::vector<double> potentials = o.potentials;
    if (!std::is_sorted(potentials.begin(), potentials.end())) {
        std::sort(potentials.begin(), potentials.end());
        run.notes.push_back("potentials auto-sorted ascending");
    }
    if (std::adjacent_find(potentials.begin(), potentials.end()) != potentials.end())
        throw UsageError("--potentials contains duplicates");
    for (double u : potentials) checked_config(o.radius, u, 0, run.constants);

    std::vector<std::future<std::vector<EigenState>>> jobs;
    for (double u : potentials) {
        jobs.push_back(std::async(std::launch::async, [&, u] {
            return find_eigenstates(WellConfig{o.radius, u, 0}, o.max_states, run.constants);
        }));
    }
    const LimitReport report = convergence_report(o.radius, potentials, run.constants);

    Table summary;
    summary.columns = {"U_eV",       "E_kin_meV",   "zeta_per_m",   "zeta_infinite_per_m", "zeta_ratio",
                       "xi_per_m",   "skin_depth_nm", "outside_fraction", "ln_kappa",       "log10_kappa"};
    for (std::size_t i = 0; i < potentials.size(); ++i) {
        const EigenState& g = report.ground_states[i];
        summary.add({potentials[i], g.kinetic_energy_mev(), units::per_nm_to_per_m(report.zeta_ground[i]),
                     units::per_nm_to_per_m(report.zeta_infinite), report.zeta_ratio(i),
                     units::per_nm_to_per_m(g.wave_numbers.xi), report.skin_depths[i], report.outside_fractions[i],
                     g.kappa.log_abs, log10_kappa(g)});
    }

    Table states;
    states.columns = {"U_eV"};
    const Table shape = eigenstate_table({});
    states.columns.insert(states.columns.end(), shape.columns.begin(), shape.columns.end());
    for (std::size_t i = 0; i < potentials.size(); ++i) {
        const auto solved = jobs[i].get();
        const Table t = eigenstate_table(solved);
        for (const auto& row : t.rows) {
            std::vector<Cell> r{potentials[i]};
            r.insert(r.end(), row.begin(), row.end());
            states.add(std::move(r));
        }
        run.states.insert(run.states.end(), solved.begin(), solved.end());
    }

    run.config = {{"radius_nm", o.radius}, {"potentials_ev", potentials}, {"azimuthal_l", 0}, {"pz", 0.0}};
    if (parse_format(common.format) == Format::json) {
        json doc;
        doc["report"] = summary.to_json();
        doc["states"] = states.to_json();
        emit(run, common.output, doc.dump(2) + "\n", out);
    } else if (common.output.empty()) {
        emit(run, common.output, summary.to_csv() + "\n" + states.to_csv(), out);
    } else {
        emit(run, common.output, summary.to_csv(), out);
        emit(run, states_path(common.output), states.to_csv(), out);
    }
    return kExitOk;
}

} // namespace

StateSelector parse_state_selector(std::string_view text)
{
    static const std::regex pattern(R"(l(\d{1,4})n(\d{1,6}))");
    std::cmatch m;
    if (!std::regex_match(text.begin(), text.end(), m, pattern))
        throw UsageError("state selector must look like l<int>n<int> (e.g. l0n1), got '" + std::string(text) + "'");
    StateSelector s{std::stoi(m[1].str()), std::stoi(m[2].str())};
    if (s.n < 1) throw UsageError("radial index n starts at 1");
    return s;
}

Table eigenstate_table(const std::vector<EigenState>& states)
{
    Table t;
    t.columns = {"l",           "n",           "E_kin_meV",     "zeta_per_m",       "xi_per_m",
                 "ln_kappa",    "log10_kappa", "skin_depth_nm", "boundary_residual"};
    for (const auto& s : states) {
        t.add({static_cast<long long>(s.azimuthal_l), static_cast<long long>(s.radial_n), s.kinetic_energy_mev(),
               units::per_nm_to_per_m(s.wave_numbers.zeta), units::per_nm_to_per_m(s.wave_numbers.xi),
               s.kappa.log_abs, log10_kappa(s), skin_depth(s), s.boundary_residual});
    }
    return t;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Bound states, spinors and current densities of a Dirac electron in a cylindrical quantum well",
                 "diracwell"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    CommonOptions common;

    SolveOptions solve;
    auto* solve_cmd = app.add_subcommand("solve", "List bound states of one well");
    solve_cmd->add_option("--radius-nm", solve.radius, "Well radius R (nm)")->capture_default_str();
    solve_cmd->add_option("--potential-ev", solve.potential, "Well depth U (eV)")->required();
    solve_cmd->add_option("--l", solve.l, "Azimuthal quantum number")->capture_default_str();
    solve_cmd->add_option("--max-states", solve.max_states, "Maximum number of states");
    add_common(*solve_cmd, common);

    Table1Options table1;
    auto* table1_cmd = app.add_subcommand("table1", "Reproduce the R = 10 nm ground-state table with pass/fail deltas");
    table1_cmd->add_option("--rest-energy-ev", table1.rest_energy, "Override m c^2 (testing)")->group("");
    table1_cmd->add_option("--hbar-c-ev-nm", table1.hbar_c, "Override hbar c (testing)")->group("");
    add_common(*table1_cmd, common);

    FieldOptions field;
    auto* field_cmd = app.add_subcommand("field", "Sample spinor, current and charge density on a polar grid");
    field_cmd->add_option("--radius-nm", field.radius, "Well radius R (nm)")->capture_default_str();
    field_cmd->add_option("--potential-ev", field.potential, "Well depth U (eV)")->required();
    field_cmd->add_option("--state", field.state, "State selector l<int>n<int>")->capture_default_str();
    field_cmd->add_option("--rmax-nm", field.rmax, "Outer radius of the grid (default 3R)");
    field_cmd->add_option("--samples", field.samples, "Radial samples")->capture_default_str();
    field_cmd->add_option("--phi-samples", field.phi_samples, "Azimuthal samples")->capture_default_str();
    field_cmd->add_option("--normalize", field.normalize, "raw or unit-charge")
        ->check(CLI::IsMember({"raw", "unit-charge"}))
        ->capture_default_str();
    add_common(*field_cmd, common);

    SweepOptions sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Ground-state convergence toward the infinite well");
    sweep_cmd->add_option("--radius-nm", sweep.radius, "Well radius R (nm)")->capture_default_str();
    sweep_cmd->add_option("--potentials", sweep.potentials, "Well depths (eV)")->delimiter(',');
    sweep_cmd->add_option("--max-states", sweep.max_states, "Maximum states per depth in the state table");
    add_common(*sweep_cmd, common);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    RunRecord run;
    run.args = args;
    try {
        int code = kExitOk;
        if (solve_cmd->parsed()) {
            run.command = "solve";
            code = run_solve(solve, common, run, out);
        } else if (table1_cmd->parsed()) {
            run.command = "table1";
            code = run_table1(table1, common, run, out);
        } else if (field_cmd->parsed()) {
            run.command = "field";
            code = run_field(field, common, run, out);
        } else {
            run.command = "sweep";
            code = run_sweep(sweep, common, run, out);
        }
        write_manifest(run, common);
        return code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SolverError& e) {
        err << "solver failure: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

} // namespace diracwell::cli
