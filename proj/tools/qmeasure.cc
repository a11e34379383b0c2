// Copyright 2026 The qmeasure Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qmeasure/cv_transform.h"
#include "qmeasure/report.h"
#include "qmeasure/scenarios.h"
#include "qmeasure/verification.h"
#include "qmeasure/wavefunction.h"

namespace {

using nlohmann::json;
using namespace qmeasure;

constexpr int kExitUsage = 1;
constexpr int kExitNotDecomposable = 2;
constexpr int kExitNumerical = 3;

constexpr std::size_t kDefaultGridPoints = 1024;
constexpr std::size_t kMinGridPoints = 16;
constexpr std::size_t kMaxGridPoints = 4096;
constexpr double kDetTolerance = 1e-9;
// Half-width of a Gaussian's box in units of its standard deviation.
constexpr double kBoxSigmas = 10.0;
// Narrowest feature the grid must resolve, in grid spacings.
constexpr double kMinSpacingsPerWidth = 4.0;

const char *const kGaussianHelp = "Gaussian as center,width[,momentum]; width is the std. dev. of |psi|^2";

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::vector<double> parse_numbers(const std::string &text, const std::string &flag) {
    std::vector<double> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        char *end = nullptr;
        double v = std::strtod(item.c_str(), &end);
        if (item.empty() || end != item.c_str() + item.size() || !std::isfinite(v)) {
            throw UsageError(flag + ": '" + item + "' is not a finite number");
        }
        out.push_back(v);
    }
    return out;
}

GaussianSpec parse_gaussian(const std::string &text, const std::string &flag) {
    std::vector<double> v = parse_numbers(text, flag);
    if (v.size() != 2 && v.size() != 3) {
        throw UsageError(flag + ": expected center,width[,momentum], got '" + text + "'");
    }
    if (!(v[1] > 0.0)) {
        throw UsageError(flag + ": width must be positive");
    }
    return {v[0], v[1], v.size() == 3 ? v[2] : 0.0};
}

json gaussian_json(const GaussianSpec &g) {
    return {{"center", g.center}, {"width", g.width}, {"momentum", g.momentum}};
}

struct TargetOptions {
    std::string preset;
    double lambda = 1.0;
    int p = 0;
    std::string abcd;
};

void add_target_options(CLI::App *cmd, TargetOptions &t) {
    auto *preset = cmd->add_option("--preset", t.preset, "Preset circuit")->check(CLI::IsMember({"vnm", "csm", "ssm"}));
    cmd->add_option("--lambda", t.lambda, "Scaling parameter (> 0) for --preset")->capture_default_str();
    cmd->add_option("--p", t.p, "Parity bit of the ssm preset")->check(CLI::IsMember({0, 1}))->capture_default_str();
    auto *abcd = cmd->add_option("--abcd", t.abcd, "Explicit transform a,b,c,d");
    preset->excludes(abcd);
}

CoordTransform resolve_target(const TargetOptions &t) {
    if (t.preset.empty() && t.abcd.empty()) {
        throw UsageError("one of --preset or --abcd is required");
    }
    if (!t.abcd.empty()) {
        std::vector<double> v = parse_numbers(t.abcd, "--abcd");
        if (v.size() != 4) {
            throw UsageError("--abcd: expected four numbers a,b,c,d");
        }
        return {v[0], v[1], v[2], v[3]};
    }
    if (!(t.lambda > 0.0) || !std::isfinite(t.lambda)) {
        throw UsageError("--lambda must be positive");
    }
    if (t.preset == "vnm") {
        return CoordTransform::von_neumann(t.lambda);
    }
    if (t.preset == "csm") {
        return CoordTransform::contractive(t.lambda);
    }
    return CoordTransform::swapping(t.lambda, t.p);
}

json target_json(const TargetOptions &t, const CoordTransform &transform) {
    json j = {{"transform", to_json(transform)}, {"det", transform.det()}};
    if (!t.preset.empty()) {
        j["preset"] = t.preset;
        j["lambda"] = t.lambda;
        if (t.preset == "ssm") {
            j["p"] = t.p;
        }
    }
    return j;
}

std::size_t resolve_grid_points(const std::optional<std::size_t> &flag) {
    std::size_t n = kDefaultGridPoints;
    std::string source = "--grid-points";
    if (flag) {
        n = *flag;
    } else if (const char *env = std::getenv("QMEASURE_GRID_POINTS"); env != nullptr && *env != '\0') {
        source = "QMEASURE_GRID_POINTS";
        char *end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (*end != '\0' || env[0] == '-') {
            throw UsageError("QMEASURE_GRID_POINTS: '" + std::string(env) + "' is not a positive integer");
        }
        n = static_cast<std::size_t>(v);
    }
    if (n < kMinGridPoints || n > kMaxGridPoints) {
        throw UsageError(
            source + ": grid points must lie in [" + std::to_string(kMinGridPoints) + ", " +
            std::to_string(kMaxGridPoints) + "], got " + std::to_string(n));
    }
    return n;
}

std::string utc_timestamp() {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json base_report(const std::string &command, int argc, char **argv) {
    json args = json::array();
    for (int i = 1; i < argc; i++) {
        args.push_back(argv[i]);
    }
    return {
        {"schema_version", kSchemaVersion},
        {"tool", "qmeasure"},
        {"version", QMEASURE_VERSION},
        {"command", command},
        {"argv", args},
        {"timestamp", utc_timestamp()},
    };
}

void emit(json report, const std::string &out_path) {
    round_numbers(report, kSignificantDigits);
    std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw UsageError("cannot open '" + out_path + "' for writing");
    }
    out << text;
}

void write_distribution_csv(const OutcomeDistribution &dist, const std::string &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw UsageError("cannot open '" + path + "' for writing");
    }
    dist.write_csv(out);
}

/// The --csv path, or the --out path with a .csv extension, or nothing.
std::string csv_path(const std::string &csv, const std::string &out) {
    if (!csv.empty()) {
        return csv;
    }
    if (out.empty()) {
        return "";
    }
    return std::filesystem::path(out).replace_extension(".csv").string();
}

// ---------------------------------------------------------------- decompose

struct DecomposeOptions {
    TargetOptions target;
    std::string family = "all";
    std::string out;
};

int cmd_decompose(const DecomposeOptions &opt, json report) {
    CoordTransform t = resolve_target(opt.target);
    if (!(std::abs(std::abs(t.det()) - 1.0) < kDetTolerance)) {
        throw UsageError(
            "invalid tuple: gate families require |ad - bc| = 1, got ad - bc = " + std::to_string(t.det()));
    }
    bool all = opt.family == "all";
    report["inputs"] = {{"target", target_json(opt.target, t)}, {"family", opt.family}};
    json families = json::object();
    json residuals = json::object();

    auto run = [&](const std::string &name, auto &&body) {
        if (!all && opt.family != name) {
            return;
        }
        try {
            json entry = body();
            residuals[name] = entry["residual"];
            entry["status"] = "ok";
            families[name] = entry;
        } catch (const NotDecomposable &e) {
            if (!all) throw;
            families[name] = {{"status", "skipped"}, {"reason", e.what()}, {"residual", nullptr}};
            residuals[name] = nullptr;
        } catch (const UnsupportedRegime &e) {
            if (!all) throw;
            families[name] = {{"status", "skipped"}, {"reason", e.what()}, {"residual", nullptr}};
            residuals[name] = nullptr;
        }
    };

    run("von-neumann", [&] {
        VonNeumannParams params = decompose_von_neumann(t);
        json j = to_json(params);
        j["residual"] = compose(params.sequence()).max_abs_diff(t);
        return j;
    });
    run("two-mode", [&] {
        OpticalParams params = decompose_two_mode(t);
        json j = to_json(params);
        j["residual"] = compose(params.sequence()).max_abs_diff(t);
        return j;
    });
    run("single-mode", [&] {
        SingleModeOpticalParams params = decompose_single_mode(t);
        json j = to_json(params);
        j["residual"] = compose(params.sequence()).max_abs_diff(t);
        return j;
    });
    run("hamiltonian", [&] {
        if (t.det() < 0.0) {
            throw NotDecomposable("hamiltonian family requires ad - bc = +1, got -1");
        }
        HamiltonianParams params = hamiltonian_params(t);
        json j = to_json(params);
        j["residual"] = params.transform().max_abs_diff(t);
        return j;
    });
    if (opt.target.preset == "ssm") {
        GateSequence alt = ssm_alternative_sequence(opt.target.lambda, opt.target.p);
        double residual = compose(alt).max_abs_diff(t);
        families["ssm-squeeze-rotate"] = {{"status", "ok"}, {"sequence", to_json(alt)}, {"residual", residual}};
        residuals["ssm-squeeze-rotate"] = residual;
    }

    report["results"] = families;
    report["residuals"] = residuals;
    emit(report, opt.out);
    return 0;
}

// ------------------------------------------------------------------- verify

struct VerifyOptions {
    std::string suite = "all";
    std::string out;
};

int cmd_verify(const VerifyOptions &opt, json report) {
    std::vector<IdentityCheck> checks = run_verify_suite(opt.suite);
    json list = json::array();
    json residuals = json::object();
    bool all_pass = true;
    for (const auto &c : checks) {
        list.push_back({{"name", c.name}, {"residual", c.residual}, {"tolerance", c.tolerance}, {"pass", c.pass()}});
        residuals[c.name] = c.residual;
        all_pass = all_pass && c.pass();
    }
    report["inputs"] = {{"suite", opt.suite}};
    report["results"] = {{"checks", list}, {"all_pass", all_pass}};
    report["residuals"] = residuals;
    emit(report, opt.out);
    return all_pass ? 0 : kExitNumerical;
}

// ----------------------------------------------------------------- simulate

struct SimulateOptions {
    TargetOptions target;
    std::string system = "0,1";
    std::string probe = "0,1";
    std::optional<double> probe_width;
    std::optional<std::size_t> grid_points;
    std::string out;
    std::string csv;
};

struct Span {
    double lo;
    double hi;

    static Span around(double mean, double sd) {
        return {mean - kBoxSigmas * sd, mean + kBoxSigmas * sd};
    }
    Span unite(const Span &o) const {
        return {std::min(lo, o.lo), std::max(hi, o.hi)};
    }
    double spacing(std::size_t n) const {
        return (hi - lo) / static_cast<double>(n - 1);
    }
};

double gaussian_pdf(double x, double mean, double sd) {
    double u = (x - mean) / sd;
    return std::exp(-0.5 * u * u) / (sd * std::sqrt(2.0 * kPi));
}

json grid_json(const Grid1D &g) {
    return {{"min", g.x_min()}, {"max", g.x_max()}, {"points", g.size()}, {"spacing", g.spacing()}};
}

int cmd_simulate(const SimulateOptions &opt, json report) {
    CoordTransform t = resolve_target(opt.target);
    double det = t.det();
    if (!(std::abs(det) > 1e-12)) {
        throw UsageError("invalid tuple: ad - bc must be nonzero");
    }
    GaussianSpec sys = parse_gaussian(opt.system, "--system");
    GaussianSpec probe = parse_gaussian(opt.probe, "--probe");
    if (opt.probe_width) {
        if (!(*opt.probe_width > 0.0)) {
            throw UsageError("--probe-width must be positive");
        }
        probe.width = *opt.probe_width;
    }
    std::size_t n = resolve_grid_points(opt.grid_points);

    // With u = ax + by ~ |ψ|² and v = cx + dy ~ |φ|² independent Gaussians,
    // (x, y) = M⁻¹(u, v) is Gaussian with these moments.
    const auto [a, b, c, d] = t;
    auto moments = [&](double probe_sd) {
        double xm = (d * sys.center - b * probe.center) / det;
        double ym = (-c * sys.center + a * probe.center) / det;
        double xs = std::hypot(d * sys.width, b * probe_sd) / std::abs(det);
        double ys = std::hypot(c * sys.width, a * probe_sd) / std::abs(det);
        return std::array<double, 4>{xm, xs, ym, ys};
    };

    double probe_sd = probe.width;
    Span y_span{};
    for (int pass = 0; pass < 3; pass++) {
        auto m = moments(probe_sd);
        y_span = Span::around(probe.center, probe_sd).unite(Span::around(m[2], m[3]));
        probe_sd = std::max(probe.width, kMinSpacingsPerWidth * y_span.spacing(n));
    }
    auto m = moments(probe_sd);
    y_span = Span::around(probe.center, probe_sd).unite(Span::around(m[2], m[3]));
    Span x_span = Span::around(sys.center, sys.width).unite(Span::around(m[0], m[1]));
    if (sys.width < kMinSpacingsPerWidth * x_span.spacing(n)) {
        throw UsageError("--system width is below 4 grid spacings; raise --grid-points");
    }

    Grid1D gx(x_span.lo, x_span.hi, n);
    Grid1D gy(y_span.lo, y_span.hi, n);
    GaussianSpec probe_eff = probe;
    probe_eff.width = probe_sd;
    WaveFunction psi = sample_gaussian(sys, gx);
    WaveFunction phi = sample_gaussian(probe_eff, gy);
    JointWaveFunction joint = apply_transform(t, psi, phi);
    OutcomeDistribution dist = outcome_distribution(joint);

    double y_mean = m[2];
    double y_sd = m[3];
    double l1_closed = dist.l1_distance([&](double y) { return gaussian_pdf(y, y_mean, y_sd); });
    json l1_born = nullptr;
    if (!opt.target.preset.empty()) {
        OutcomeDistribution scaled = dist.rescaled(opt.target.lambda);
        l1_born = scaled.l1_distance([&](double x) { return gaussian_pdf(x, sys.center, sys.width); });
    }

    WaveFunction post = postmeasurement_state(joint, y_mean);

    report["inputs"] = {
        {"target", target_json(opt.target, t)},
        {"system", gaussian_json(sys)},
        {"probe", gaussian_json(probe)},
        {"grid_points", n},
    };
    report["results"] = {
        {"effective_probe_width", probe_sd},
        {"grid_x", grid_json(gx)},
        {"grid_y", grid_json(gy)},
        {"leaked_mass", joint.leaked_mass},
        {"off_grid_samples", joint.off_grid_samples},
        {"distribution", {{"total", dist.total()}, {"mean", dist.mean()}, {"variance", dist.variance()}}},
        {"closed_form", {{"mean", y_mean}, {"variance", y_sd * y_sd}}},
        {"post_state",
         {{"outcome", y_mean},
          {"center", post.mean()},
          {"width", std::sqrt(post.variance())},
          {"norm", std::sqrt(post.norm_squared())}}},
    };
    report["residuals"] = {
        {"l1_closed_form", l1_closed},
        {"l1_born_rescaled", l1_born},
        {"normalization", std::abs(dist.total() - 1.0)},
    };

    std::string csv = csv_path(opt.csv, opt.out);
    if (!csv.empty()) {
        write_distribution_csv(dist, csv);
        report["results"]["csv"] = csv;
    }
    emit(report, opt.out);
    return 0;
}

// ----------------------------------------------------------------- scenario

struct TwoPeakOptions {
    double lambda = 20.0;
    double separation = 1.0;
    double probe_width = 4.0;
    std::optional<std::size_t> grid_points;
    std::string out;
    std::string csv;
};

int cmd_two_peak(const TwoPeakOptions &opt, json report) {
    std::size_t n = resolve_grid_points(opt.grid_points);
    TwoPeakReport r = scenario_two_peak(opt.lambda, opt.separation, opt.probe_width, n);
    report["inputs"] = {
        {"lambda", opt.lambda}, {"separation", opt.separation}, {"probe_width", opt.probe_width}, {"grid_points", n}};
    report["results"] = to_json(r);
    report["residuals"] = {
        {"normalization_scaled", std::abs(r.scaled.distribution.total() - 1.0)},
        {"normalization_unit", std::abs(r.unit.distribution.total() - 1.0)},
    };
    std::string csv = csv_path(opt.csv, opt.out);
    if (!csv.empty()) {
        write_distribution_csv(r.scaled.distribution, csv);
        report["results"]["csv"] = csv;
    }
    emit(report, opt.out);
    return 0;
}

struct RepeatedOptions {
    std::string scheme = "ssm";
    int rounds = 10;
    std::uint64_t seed = 0;
    double lambda = 1.0;
    int p = 0;
    std::string system = "0,1";
    std::string probe = "0,1";
    std::optional<std::size_t> grid_points;
    std::string out;
};

int cmd_repeated(const RepeatedOptions &opt, json report) {
    if (opt.rounds < 2) {
        throw UsageError("--rounds must be at least 2, got " + std::to_string(opt.rounds));
    }
    if (!(opt.lambda > 0.0)) {
        throw UsageError("--lambda must be positive");
    }
    GaussianSpec sys = parse_gaussian(opt.system, "--system");
    GaussianSpec probe_spec = parse_gaussian(opt.probe, "--probe");
    std::size_t n = resolve_grid_points(opt.grid_points);
    WaveFunction probe = sample_gaussian(probe_spec, Grid1D::standard(n));
    RepeatedScheme scheme = opt.scheme == "csm" ? RepeatedScheme::Contractive : RepeatedScheme::Swapping;
    RepeatedReport r = scenario_repeated_measurement(scheme, opt.rounds, probe, sys, opt.lambda, opt.p, opt.seed);

    report["inputs"] = {
        {"scheme", opt.scheme},
        {"rounds", opt.rounds},
        {"seed", opt.seed},
        {"lambda", opt.lambda},
        {"p", opt.p},
        {"system", gaussian_json(sys)},
        {"probe", gaussian_json(probe_spec)},
        {"grid_points", n},
    };
    report["results"] = to_json(r);
    report["residuals"] = {{"post_state_spread", r.post_state_spread}};
    emit(report, opt.out);
    return 0;
}

int run(int argc, char **argv) {
    CLI::App app{"Indirect quantum measurement circuits: decomposition, verification and simulation"};
    app.set_version_flag("--version", std::string(QMEASURE_VERSION));
    app.require_subcommand(1);

    DecomposeOptions dec;
    auto *decompose = app.add_subcommand("decompose", "Decompose a transform into gate sequences");
    add_target_options(decompose, dec.target);
    decompose->add_option("--family", dec.family, "Gate family")
        ->check(CLI::IsMember({"von-neumann", "two-mode", "single-mode", "hamiltonian", "all"}))
        ->capture_default_str();
    decompose->add_option("--out", dec.out, "Write the JSON report here instead of stdout");

    VerifyOptions ver;
    auto *verify = app.add_subcommand("verify", "Check operator identities against declared tolerances");
    std::vector<std::string> suites = {"all"};
    for (auto name : verify_suite_names()) {
        suites.emplace_back(name);
    }
    verify->add_option("--suite", ver.suite, "Identity suite")->check(CLI::IsMember(suites))->capture_default_str();
    verify->add_option("--out", ver.out, "Write the JSON report here instead of stdout");

    SimulateOptions sim;
    auto *simulate = app.add_subcommand("simulate", "Simulate a measurement of Gaussian states on a grid");
    add_target_options(simulate, sim.target);
    simulate->add_option("--system", sim.system, kGaussianHelp)->capture_default_str();
    simulate->add_option("--probe", sim.probe, kGaussianHelp)->capture_default_str();
    simulate->add_option("--probe-width", sim.probe_width, "Override the probe width");
    simulate->add_option("--grid-points", sim.grid_points, "Points per axis (default 1024 or $QMEASURE_GRID_POINTS)");
    simulate->add_option("--out", sim.out, "Write the JSON report here; the CSV goes next to it");
    simulate->add_option("--csv", sim.csv, "Write the outcome distribution CSV here");

    auto *scenario = app.add_subcommand("scenario", "Run a named measurement scenario");
    scenario->require_subcommand(1);

    TwoPeakOptions tp;
    auto *two_peak = scenario->add_subcommand("two-peak", "Resolve two nearby peaks with a coarse probe");
    two_peak->add_option("--lambda", tp.lambda, "Scaling parameter")->capture_default_str();
    two_peak->add_option("--sep", tp.separation, "Peak separation")->capture_default_str();
    two_peak->add_option("--probe-width", tp.probe_width, "Probe width")->capture_default_str();
    two_peak->add_option("--grid-points", tp.grid_points, "Probe grid points");
    two_peak->add_option("--out", tp.out, "Write the JSON report here; the CSV goes next to it");
    two_peak->add_option("--csv", tp.csv, "Write the scaled outcome distribution CSV here");

    RepeatedOptions rep;
    auto *repeated = scenario->add_subcommand("repeated", "Feed post-measurement states back in, round after round");
    repeated->add_option("--scheme", rep.scheme, "Measurement scheme")
        ->check(CLI::IsMember({"csm", "ssm"}))
        ->capture_default_str();
    repeated->add_option("--rounds", rep.rounds, "Number of rounds (>= 2)")->capture_default_str();
    repeated->add_option("--seed", rep.seed, "Seed of the outcome sampler")->required();
    repeated->add_option("--lambda", rep.lambda, "Scaling parameter")->capture_default_str();
    repeated->add_option("--p", rep.p, "Parity bit of the ssm transform")
        ->check(CLI::IsMember({0, 1}))
        ->capture_default_str();
    repeated->add_option("--system", rep.system, kGaussianHelp)->capture_default_str();
    repeated->add_option("--probe", rep.probe, kGaussianHelp)->capture_default_str();
    repeated->add_option("--grid-points", rep.grid_points, "Grid points on [-16, 16]");
    repeated->add_option("--out", rep.out, "Write the JSON report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    if (*decompose) return cmd_decompose(dec, base_report("decompose", argc, argv));
    if (*verify) return cmd_verify(ver, base_report("verify", argc, argv));
    if (*simulate) return cmd_simulate(sim, base_report("simulate", argc, argv));
    if (*two_peak) return cmd_two_peak(tp, base_report("scenario two-peak", argc, argv));
    return cmd_repeated(rep, base_report("scenario repeated", argc, argv));
}

int fail(int code, const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return code;
}

}  // namespace

int main(int argc, char **argv) {
    try {
        return run(argc, argv);
    } catch (const NotDecomposable &e) {
        return fail(kExitNotDecomposable, e);
    } catch (const UnsupportedRegime &e) {
        return fail(kExitNotDecomposable, e);
    } catch (const ZeroProbabilityOutcome &e) {
        return fail(kExitNumerical, e);
    } catch (const NumericalError &e) {
        return fail(kExitNumerical, e);
    } catch (const std::exception &e) {
        return fail(kExitUsage, e);
    }
}
