// fbgdirac command-line tool: band structure, Tamm surface states, spectral
// transmission sweeps, and unit conversions, driven by a JSON config with
// inline --set overrides. Outputs CSV or JSON for external plotting.

#include "fbgdirac/bands.hpp"
#include "fbgdirac/builders.hpp"
#include "fbgdirac/tamm.hpp"
#include "fbgdirac/tmm.hpp"
#include "fbgdirac/units.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;
using namespace fbgdirac;

namespace {

constexpr int kSchemaVersion = 1;
constexpr double kDbFloor = -300.0; // clamp for log10(0)

// fixed 17-significant-digit formatting: identical configs give
// byte-identical files
std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double to_db(double power)
{
    if (power <= 0.0) {
        return kDbFloor;
    }
    return std::max(10.0 * std::log10(power), kDbFloor);
}

// ---------------------------------------------------------------------------
// config handling

json default_config(const std::string& command)
{
    json cfg = {
        {"schema_version", kSchemaVersion},
        {"params", {{"m0", 1.0}, {"V0", 1.5707963267948966}, {"a", 2.0}}},
        {"grid", {{"min", -6.0}, {"max", 6.0}, {"points", 1201}}},
        {"bands", {{"scan_points", 0}, {"edge_tolerance", 1e-10}}},
        {"tamm", {{"tolerance", 1e-10}}},
        {"grating",
         {{"family", "kp"},
          {"m0", 1.0},
          {"V0", 1.5707963267948966},
          {"a", 2.0},
          {"V1", 0.8},
          {"L", 50.0},
          {"kappa", 1.0},
          {"phase_slope", 0.0},
          {"apodization", {{"order", 3}, {"ramp_width", 0.0}, {"plateau_fraction", 0.75}}},
          {"segments_per_ramp", 2500}}},
        {"scales", {{"n0", 1.45}, {"delta_n", 1e-4}, {"lambda_B", 1.56e-6}}},
        {"energies", json::array()},
        {"lengths", json::array()},
        {"output", {{"format", "csv"}, {"path", "-"}}},
    };
    if (command == "tamm") {
        cfg["params"]["V1"] = 0.8;
        cfg["output"]["format"] = "json";
    }
    if (command == "units") {
        cfg["output"]["format"] = "json";
    }
    if (command == "spectrum") {
        cfg["grid"]["points"] = 4001;
    }
    return cfg;
}

void deep_merge(json& base, const json& overlay)
{
    if (!overlay.is_object() || !base.is_object()) {
        base = overlay;
        return;
    }
    for (const auto& [key, value] : overlay.items()) {
        if (base.contains(key)) {
            deep_merge(base[key], value);
        } else {
            base[key] = value;
        }
    }
}

void apply_set(json& cfg, const std::string& assignment)
{
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw std::invalid_argument("--set expects key.path=value, got '" + assignment + "'");
    }
    const std::string path = assignment.substr(0, eq);
    const std::string raw = assignment.substr(eq + 1);

    json value;
    try {
        value = json::parse(raw);
    } catch (const json::parse_error&) {
        value = raw; // unquoted strings are taken verbatim
    }

    json* node = &cfg;
    std::istringstream keys(path);
    std::string key;
    std::vector<std::string> parts;
    while (std::getline(keys, key, '.')) {
        if (key.empty()) {
            throw std::invalid_argument("--set path has an empty component: '" + path + "'");
        }
        parts.push_back(key);
    }
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        node = &(*node)[parts[i]];
    }
    (*node)[parts.back()] = value;
}

json load_config(const std::string& command, const std::string& config_path,
                 const std::vector<std::string>& sets)
{
    json cfg = default_config(command);
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) {
            throw std::invalid_argument("cannot open config file: " + config_path);
        }
        json user;
        try {
            user = json::parse(in);
        } catch (const json::parse_error& e) {
            throw std::invalid_argument(std::string("config parse error: ") + e.what());
        }
        if (user.contains("schema_version") &&
            user["schema_version"].get<int>() != kSchemaVersion) {
            throw std::invalid_argument("unsupported schema_version (expected 1)");
        }
        deep_merge(cfg, user);
    }
    for (const auto& s : sets) {
        apply_set(cfg, s);
    }
    cfg["schema_version"] = kSchemaVersion;
    cfg["command"] = command;
    return cfg;
}

double require_number(const json& node, const std::string& name)
{
    if (!node.contains(name) || !node[name].is_number()) {
        throw std::invalid_argument("config: '" + name + "' must be a number");
    }
    return node[name].get<double>();
}

DiracParams params_from(const json& cfg, bool need_v1)
{
    const auto& p = cfg.at("params");
    DiracParams out;
    out.m0 = require_number(p, "m0");
    out.V0 = require_number(p, "V0");
    out.a = require_number(p, "a");
    if (p.contains("V1") && !p["V1"].is_null()) {
        out.V1 = require_number(p, "V1");
    }
    if (need_v1) {
        out.validate_tamm();
    } else {
        out.validate();
    }
    return out;
}

std::vector<double> grid_from(const json& cfg)
{
    const auto& g = cfg.at("grid");
    const double lo = require_number(g, "min");
    const double hi = require_number(g, "max");
    const int n = g.at("points").get<int>();
    if (!(lo < hi) || n < 2) {
        throw std::invalid_argument("config: grid requires min < max and points >= 2");
    }
    std::vector<double> grid;
    grid.reserve(n);
    for (int i = 0; i < n; ++i) {
        grid.push_back(lo + (hi - lo) * static_cast<double>(i) / (n - 1));
    }
    return grid;
}

struct GratingInfo {
    GratingProfile profile;
    std::string family;
    double x_left = 0.0;
    double discretization_step = 0.0;
};

GratingInfo grating_from(const json& cfg)
{
    const auto& g = cfg.at("grating");
    const std::string family = g.at("family").get<std::string>();

    GratingInfo info;
    info.family = family;
    if (family == "uniform") {
        const double L = require_number(g, "L");
        info.profile = build_uniform_grating(require_number(g, "kappa"), L,
                                             g.contains("phase_slope")
                                                 ? require_number(g, "phase_slope")
                                                 : 0.0);
        info.x_left = -0.5 * L;
        return info;
    }

    const auto& ap = g.at("apodization");
    ApodizationSpec apod;
    apod.order = ap.at("order").get<int>();
    apod.ramp_width = require_number(ap, "ramp_width");
    apod.plateau_fraction = require_number(ap, "plateau_fraction");
    const int spr = g.at("segments_per_ramp").get<int>();
    const double L = require_number(g, "L");

    if (family == "kp") {
        KpGratingSpec spec;
        spec.m0 = require_number(g, "m0");
        spec.V0 = require_number(g, "V0");
        spec.a = require_number(g, "a");
        spec.L = L;
        spec.apod = apod;
        spec.segments_per_ramp = spr;
        info.profile = build_kp_grating(spec);
    } else if (family == "tamm") {
        TammGratingSpec spec;
        spec.m0 = require_number(g, "m0");
        spec.V0 = require_number(g, "V0");
        spec.a = require_number(g, "a");
        spec.V1 = require_number(g, "V1");
        spec.L = L;
        spec.apod = apod;
        spec.segments_per_ramp = spr;
        info.profile = build_tamm_grating(spec);
    } else {
        throw std::invalid_argument("config: grating.family must be kp, tamm or uniform");
    }
    info.x_left = -0.5 * L;
    info.discretization_step =
        (0.5 * L * (1.0 - apod.plateau_fraction)) / static_cast<double>(spr);
    return info;
}

std::string output_format(const json& cfg)
{
    const std::string f = cfg.at("output").at("format").get<std::string>();
    if (f != "csv" && f != "json") {
        throw std::invalid_argument("config: output.format must be csv or json");
    }
    return f;
}

// Streams either to a file or stdout ("-").
class Sink {
  public:
    explicit Sink(const std::string& path)
    {
        if (path != "-") {
            file_.open(path, std::ios::trunc);
            if (!file_) {
                throw std::invalid_argument("cannot open output file: " + path);
            }
        }
    }
    std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

// ---------------------------------------------------------------------------
// subcommands

int cmd_bands(const json& cfg)
{
    const DiracParams p = params_from(cfg, false);
    const auto grid = grid_from(cfg);
    FindBandsOptions opt;
    opt.scan_points = cfg.at("bands").at("scan_points").get<int>();
    opt.edge_tolerance = require_number(cfg.at("bands"), "edge_tolerance");
    const BandStructure bs =
        find_bands(p, grid.front(), grid.back(), opt);

    json intervals = json::array();
    for (const auto& b : bs.bands) {
        intervals.push_back({b.lo, b.hi});
    }

    Sink sink(cfg.at("output").at("path").get<std::string>());
    auto& out = sink.out();
    if (output_format(cfg) == "csv") {
        out << "# fbgdirac bands\n";
        out << "# config " << cfg.dump() << "\n";
        out << "# bands " << intervals.dump() << "\n";
        out << "E,rhs,in_band,q\n";
        for (const double E : grid) {
            const double rhs = dispersion_rhs(E, p);
            const auto q = bloch_momentum(E, p);
            out << fmt(E) << ',' << fmt(rhs) << ',' << (bs.in_band(E) ? 1 : 0) << ',';
            if (q.has_value()) {
                out << fmt(*q);
            }
            out << '\n';
        }
    } else {
        json rows = json::array();
        for (const double E : grid) {
            const double rhs = dispersion_rhs(E, p);
            const auto q = bloch_momentum(E, p);
            rows.push_back({E, rhs, bs.in_band(E) ? 1 : 0,
                            q.has_value() ? json(*q) : json(nullptr)});
        }
        const json doc = {{"schema_version", kSchemaVersion},
                          {"command", "bands"},
                          {"config", cfg},
                          {"bands", intervals},
                          {"columns", {"E", "rhs", "in_band", "q"}},
                          {"rows", rows}};
        out << doc.dump(2) << '\n';
    }
    return 0;
}

int cmd_tamm(const json& cfg)
{
    const DiracParams p = params_from(cfg, true);
    const double tol = require_number(cfg.at("tamm"), "tolerance");
    const auto states = find_tamm_states(p, tol);

    std::optional<PhysicalScales> scales;
    if (cfg.contains("scales") && cfg["scales"].is_object()) {
        const auto& s = cfg["scales"];
        scales = derive_scales(require_number(s, "n0"), require_number(s, "delta_n"),
                               require_number(s, "lambda_B"));
    }

    const BandStructure bs = find_bands(p, p.m0 - 1.0, p.m0 + *p.V1 + 1.0);

    json jstates = json::array();
    for (const auto& st : states) {
        json j = {{"E0", st.E0}, {"K", st.K}, {"kappa", st.kappa}, {"residual", st.residual}};
        for (const auto& g : bs.gaps()) {
            if (st.E0 > g.lo && st.E0 < g.hi) {
                j["gap"] = {g.lo, g.hi};
                break;
            }
        }
        if (scales) {
            j["detuning_GHz"] = detuning_to_frequency(st.E0, *scales) / 1e9;
        }
        jstates.push_back(j);
    }

    Sink sink(cfg.at("output").at("path").get<std::string>());
    auto& out = sink.out();
    if (output_format(cfg) == "csv") {
        out << "# fbgdirac tamm\n";
        out << "# config " << cfg.dump() << "\n";
        out << "E0,K,kappa,residual\n";
        for (const auto& st : states) {
            out << fmt(st.E0) << ',' << fmt(st.K) << ',' << fmt(st.kappa) << ','
                << fmt(st.residual) << '\n';
        }
    } else {
        const json doc = {{"schema_version", kSchemaVersion},
                          {"command", "tamm"},
                          {"config", cfg},
                          {"states", jstates}};
        out << doc.dump(2) << '\n';
    }
    return 0;
}

int cmd_spectrum(const json& cfg)
{
    const GratingInfo info = grating_from(cfg);
    const auto grid = grid_from(cfg);
    const SpectralResponse resp = sweep(info.profile, grid);

    std::size_t slips = 0, segments = 0;
    for (const auto& el : info.profile.elements) {
        (std::holds_alternative<PhaseSlip>(el) ? slips : segments) += 1;
    }
    const double boundary_kappa =
        std::max(std::get<Segment>(info.profile.elements.front()).kappa,
                 std::get<Segment>(info.profile.elements.back()).kappa);
    const json digest = {{"family", info.family},
                         {"elements", info.profile.elements.size()},
                         {"segments", segments},
                         {"slips", slips},
                         {"total_length", info.profile.total_length()},
                         {"discretization_step", info.discretization_step},
                         {"boundary_kappa", boundary_kappa}};

    std::size_t failed = 0;
    for (const auto okflag : resp.ok) {
        if (!okflag) {
            ++failed;
        }
    }

    Sink sink(cfg.at("output").at("path").get<std::string>());
    auto& out = sink.out();
    if (output_format(cfg) == "csv") {
        out << "# fbgdirac spectrum\n";
        out << "# config " << cfg.dump() << "\n";
        out << "# grating " << digest.dump() << "\n";
        out << "E,T,T_dB,R,arg_t,conservation_residual,ok\n";
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double T = std::norm(resp.t[i]);
            out << fmt(grid[i]) << ',' << fmt(T) << ',' << fmt(to_db(T)) << ','
                << fmt(std::norm(resp.r[i])) << ',' << fmt(std::arg(resp.t[i])) << ','
                << fmt(resp.conservation_residual[i]) << ',' << int(resp.ok[i]) << '\n';
        }
    } else {
        json rows = json::array();
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double T = std::norm(resp.t[i]);
            rows.push_back({grid[i], T, to_db(T), std::norm(resp.r[i]),
                            std::arg(resp.t[i]), resp.conservation_residual[i],
                            int(resp.ok[i])});
        }
        const json doc = {{"schema_version", kSchemaVersion},
                          {"command", "spectrum"},
                          {"config", cfg},
                          {"grating", digest},
                          {"columns",
                           {"E", "T", "T_dB", "R", "arg_t", "conservation_residual", "ok"}},
                          {"rows", rows}};
        out << doc.dump(2) << '\n';
    }

    if (failed * 100 > grid.size()) { // more than 1 % of points failed
        std::cerr << "spectrum: " << failed << "/" << grid.size()
                  << " points failed the conservation check\n";
        return 3;
    }
    return 0;
}

int cmd_units(const json& cfg)
{
    const auto& s = cfg.at("scales");
    const PhysicalScales scales = derive_scales(
        require_number(s, "n0"), require_number(s, "delta_n"), require_number(s, "lambda_B"));

    json conversions = json::array();
    if (cfg.contains("energies")) {
        for (const auto& e : cfg["energies"]) {
            const double E = e.get<double>();
            conversions.push_back({{"E", E},
                                   {"detuning", {{"value", detuning_to_frequency(E, scales) / 1e9},
                                                 {"unit", "GHz"}}}});
        }
    }
    json lengths = json::array();
    if (cfg.contains("lengths")) {
        for (const auto& l : cfg["lengths"]) {
            const double x = l.get<double>();
            lengths.push_back({{"x", x},
                               {"length", {{"value", length_to_meters(x, scales) * 1e2},
                                           {"unit", "cm"}}}});
        }
    }

    const json doc = {
        {"schema_version", kSchemaVersion},
        {"command", "units"},
        {"config", cfg},
        {"Z", {{"value", scales.Z * 1e3}, {"unit", "mm"}}},
        {"T", {{"value", scales.T * 1e12}, {"unit", "ps"}}},
        {"f_unit", {{"value", scales.f_unit / 1e9}, {"unit", "GHz"}}},
        {"weak_grating", scales.weak_grating()},
        {"energies", conversions},
        {"lengths", lengths},
    };

    if (!scales.weak_grating()) {
        std::cerr << "units: warning: delta_n/n0 > 0.01, outside the weak-grating regime\n";
    }

    Sink sink(cfg.at("output").at("path").get<std::string>());
    sink.out() << doc.dump(2) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Dirac-Kronig-Penney band structure, Tamm surface states, and "
                 "fibre-Bragg-grating transmission spectra"};
    app.require_subcommand(1);

    std::string config_path, output_path, format;
    std::vector<std::string> sets;
    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file");
        sub->add_option("--set", sets, "override a config entry, key.path=value");
        sub->add_option("--output", output_path, "output path ('-' for stdout)");
        sub->add_option("--format", format, "output format: csv or json");
    };

    auto* bands = app.add_subcommand("bands", "band structure of the infinite lattice");
    auto* tamm = app.add_subcommand("tamm", "Tamm surface states of the semi-infinite lattice");
    auto* spectrum = app.add_subcommand("spectrum", "spectral transmission of a grating");
    auto* units = app.add_subcommand("units", "physical scales and detuning conversions");
    for (auto* sub : {bands, tamm, spectrum, units}) {
        add_common(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const std::string command = app.get_subcommands().front()->get_name();
        json cfg = load_config(command, config_path, sets);
        if (!output_path.empty()) {
            cfg["output"]["path"] = output_path;
        }
        if (!format.empty()) {
            cfg["output"]["format"] = format;
        }

        if (command == "bands") {
            return cmd_bands(cfg);
        }
        if (command == "tamm") {
            return cmd_tamm(cfg);
        }
        if (command == "spectrum") {
            return cmd_spectrum(cfg);
        }
        return cmd_units(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
