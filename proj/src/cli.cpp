#include "polyharm/cli.hpp"
#include "polyharm/errors.hpp"
#include "polyharm/interp.hpp"
#include "polyharm/io.hpp"
#include "polyharm/theory.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace polyharm {

using nlohmann::json;
namespace fs = std::filesystem;

std::vector<double> RunConfig::resolved_radii() const {
    if (!radii.empty()) return radii;
    std::vector<double> out(static_cast<size_t>(N));
    for (int j = 0; j < N; ++j) out[j] = R * (j + 1.0) / N;
    return out;
}

std::vector<double> RunConfig::resolved_probe_radii() const {
    if (!probe_radii.empty()) return probe_radii;
    std::vector<double> out(21);
    for (int i = 0; i < 21; ++i) out[i] = R * (i + 1.0) / 21.0;
    return out;
}

namespace {

std::string trim(const std::string& s) {
    const size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(trim(item));
    return parts;
}

double parse_number(const std::string& v, const std::string& key) {
    try {
        size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw InputError("config: field '" + key + "': not a number: '" + v + "'");
    }
}

int parse_int(const std::string& v, const std::string& key) {
    const double d = parse_number(v, key);
    const int i = static_cast<int>(d);
    if (static_cast<double>(i) != d) {
        throw InputError("config: field '" + key + "': not an integer: '" + v + "'");
    }
    return i;
}

std::vector<double> parse_list(const std::string& v, const std::string& key) {
    std::vector<double> out;
    for (const std::string& p : split(v, ',')) {
        if (!p.empty()) out.push_back(parse_number(p, key));
    }
    return out;
}

void validate(const RunConfig& c) {
    if (c.n != 2 && c.n != 3) throw InputError("config: n must be 2 or 3");
    if (!(c.R > 0.0)) throw InputError("config: R must be positive");
    if (c.N < 1 || c.N > kMaxOrder) throw InputError("config: N must be in [1, 16]");
    if (c.k_max < 0 || c.k_max > kDefaultMaxDegree) {
        throw InputError("config: k_max must be in [0, 64]");
    }
    for (size_t j = 0; j < c.radii.size(); ++j) {
        if (c.radii[j] <= 0.0 || c.radii[j] > c.R) {
            throw InputError("config: radii must lie in (0, R]");
        }
        if (j > 0 && c.radii[j] <= c.radii[j - 1]) {
            throw InputError("config: radii must be strictly increasing");
        }
    }
}

} // namespace

RunConfig parse_config_text(const std::string& text) {
    RunConfig config;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw InputError("config line " + std::to_string(lineno) + ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "n") config.n = parse_int(value, key);
        else if (key == "R") config.R = parse_number(value, key);
        else if (key == "N") config.N = parse_int(value, key);
        else if (key == "k_max") config.k_max = parse_int(value, key);
        else if (key == "exactness") config.exactness = parse_int(value, key);
        else if (key == "threads") config.threads = parse_int(value, key);
        else if (key == "seed") config.seed = static_cast<unsigned long long>(parse_number(value, key));
        else if (key == "radii") config.radii = parse_list(value, key);
        else if (key == "probe_radii") config.probe_radii = parse_list(value, key);
        else if (key == "knots_file") config.knots_file = value;
        else if (key == "function") config.function = value;
        else if (key == "constant_value") config.constant_value = parse_number(value, key);
        else if (key == "gaussian_center") config.gaussian_center = parse_list(value, key);
        else if (key == "gaussian_width") config.gaussian_width = parse_number(value, key);
        else if (key == "exp_linear_scale") config.exp_linear_scale = parse_number(value, key);
        else if (key == "geom_C") config.geom_C = parse_number(value, key);
        else if (key == "all_ell") config.all_ell = parse_int(value, key) != 0;
        else if (key == "k_tail") config.k_tail = parse_int(value, key);
        else if (key == "n_cheb") config.n_cheb = parse_int(value, key);
        else if (key == "profile_lo") config.profile_lo = parse_number(value, key);
        else if (key == "profile_points") config.profile_points = parse_int(value, key);
        else if (key == "samples_file") config.samples_file = value;
        else if (key == "out_dir") config.out_dir = value;
        else if (key == "mode_coeff") {
            const std::vector<double> vals = parse_list(value, key);
            if (vals.size() < 3) {
                throw InputError("config line " + std::to_string(lineno) +
                                 ": mode_coeff needs k, ell and at least one coefficient");
            }
            const int k = static_cast<int>(vals[0]);
            const int ell = static_cast<int>(vals[1]);
            config.mode_coeffs.push_back(
                {{k, ell}, std::vector<double>(vals.begin() + 2, vals.end())});
        } else {
            throw InputError("config line " + std::to_string(lineno) + ": unknown key '" + key +
                             "'");
        }
    }
    validate(config);
    return config;
}

RunConfig parse_config_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open config: " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

BallFunction make_function(const RunConfig& config, const HarmonicBasis& basis) {
    BallFunction f;
    f.dimension = config.n;
    f.radius = config.R;

    if (config.function == "constant") {
        const double c = config.constant_value;
        f.eval = [c](const Vec3&) { return c; };
    } else if (config.function == "gaussian") {
        Vec3 center = {0.0, 0.0, 0.0};
        for (size_t i = 0; i < config.gaussian_center.size() && i < 3; ++i) {
            center[i] = config.gaussian_center[i];
        }
        const double w2 = config.gaussian_width * config.gaussian_width;
        f.eval = [center, w2](const Vec3& x) {
            const double dx = x[0] - center[0], dy = x[1] - center[1], dz = x[2] - center[2];
            return std::exp(-(dx * dx + dy * dy + dz * dz) / w2);
        };
    } else if (config.function == "exp-linear") {
        const double s = config.exp_linear_scale;
        f.eval = [s](const Vec3& x) { return std::exp(s * x[0]); };
    } else if (config.function == "finite-mode") {
        if (config.mode_coeffs.empty()) {
            throw InputError("finite-mode function needs at least one mode_coeff entry");
        }
        struct Term {
            ModeIndex mode;
            long long offset;
            std::vector<double> coeffs;
        };
        auto terms = std::make_shared<std::vector<Term>>();
        for (const auto& [mode, coeffs] : config.mode_coeffs) {
            if (mode.first > basis.max_degree()) {
                throw InputError("finite-mode: mode degree above k_max");
            }
            terms->push_back({{mode.first, mode.second},
                              mode_offset(config.n, mode.first, mode.second), coeffs});
        }
        const HarmonicBasis* b = &basis;
        f.eval = [terms, b](const Vec3& x) {
            const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
            const Vec3 theta = r > 0.0 ? Vec3{x[0] / r, x[1] / r, x[2] / r} : Vec3{0.0, 0.0, 1.0};
            std::vector<double> y;
            b->evaluate_all(theta, y);
            const double t = r * r;
            double acc = 0.0;
            for (const Term& term : *terms) {
                double poly = 0.0;
                for (size_t i = term.coeffs.size(); i-- > 0;) poly = poly * t + term.coeffs[i];
                acc += poly * std::pow(r, term.mode.k) * y[static_cast<size_t>(term.offset)];
            }
            return acc;
        };
    } else if (config.function == "example-geometric") {
        throw InputError("example-geometric has no pointwise form; use report-t2 or diverge");
    } else {
        throw InputError("unknown function '" + config.function + "'");
    }
    return f;
}

BallFunction load_gridded_samples(const fs::path& path, const RunConfig& config,
                                  const QuadratureRule& quad) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open samples file: " + path.string());

    auto table = std::make_shared<std::map<long long, std::vector<double>>>();
    const double scale = 1e12;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line.rfind("r,", 0) == 0) continue; // header
        const std::vector<std::string> cells = split(line, ',');
        if (cells.size() != 3) {
            throw InputError("samples line " + std::to_string(lineno) + ": expected r,node,value");
        }
        const double r = parse_number(cells[0], "r");
        const int node = parse_int(cells[1], "node_index");
        const double v = parse_number(cells[2], "f_value");
        if (node < 0 || node >= static_cast<int>(quad.nodes.size())) {
            throw InputError("samples line " + std::to_string(lineno) + ": node index out of range");
        }
        auto& row = (*table)[llround(r * scale)];
        row.resize(quad.nodes.size(), std::nan(""));
        row[node] = v;
    }

    auto nodes = std::make_shared<std::vector<Vec3>>(quad.nodes);
    BallFunction f;
    f.dimension = config.n;
    f.radius = config.R;
    f.eval = [table, nodes, scale](const Vec3& x) {
        const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
        const auto it = table->find(llround(r * scale));
        if (it == table->end()) {
            throw InputError("gridded samples: no data at the requested radius");
        }
        for (size_t i = 0; i < nodes->size(); ++i) {
            const Vec3& n = (*nodes)[i];
            if (std::abs(n[0] * r - x[0]) < 1e-9 && std::abs(n[1] * r - x[1]) < 1e-9 &&
                std::abs(n[2] * r - x[2]) < 1e-9) {
                const double v = it->second[i];
                if (std::isnan(v)) throw InputError("gridded samples: missing node value");
                return v;
            }
        }
        throw InputError("gridded samples: point does not match any quadrature node");
    };
    return f;
}

namespace {

class Manifest {
  public:
    Manifest(const RunConfig& config, const std::string& command) : command_(command) {
        config_["n"] = config.n;
        config_["R"] = format_double(config.R);
        config_["N"] = config.N;
        config_["k_max"] = config.k_max;
        config_["exactness"] = config.resolved_exactness();
        config_["threads"] = config.threads;
        config_["function"] = config.function;
        config_["k_tail"] = config.resolved_k_tail();
        config_["n_cheb"] = config.n_cheb;
        start_ = clock_::now();
        last_ = start_;
    }

    void stage(const std::string& name) {
        const auto now = clock_::now();
        timings_[name] =
            std::chrono::duration_cast<std::chrono::microseconds>(now - last_).count() / 1000.0;
        last_ = now;
    }

    void add_file(const fs::path& path) {
        outputs_.push_back({{"file", path.filename().string()}, {"digest", file_digest(path)}});
    }

    void save(const fs::path& out_dir) {
        json doc;
        doc["version"] = kVersion;
        doc["command"] = command_;
        doc["config"] = config_;
        doc["timings_ms"] = timings_;
        doc["outputs"] = outputs_;
        std::ofstream out(out_dir / "manifest.json", std::ios::binary);
        out << doc.dump(1) << "\n";
    }

  private:
    using clock_ = std::chrono::steady_clock;
    std::string command_;
    json config_;
    json timings_ = json::object();
    json outputs_ = json::array();
    clock_::time_point start_, last_;
};

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw InputError("cannot create output directory: " + dir.string());
}

BallFunction resolve_function(const RunConfig& config, const HarmonicBasis& basis,
                              const QuadratureRule& quad) {
    if (!config.samples_file.empty()) {
        return load_gridded_samples(config.samples_file, config, quad);
    }
    return make_function(config, basis);
}

GeneralKnots load_general_knots(const fs::path& path, int N) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open knots file: " + path.string());
    GeneralKnots knots;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#' || line.rfind("k,", 0) == 0) continue;
        const std::vector<std::string> cells = split(line, ',');
        if (static_cast<int>(cells.size()) != N + 2) {
            throw InputError("knots file line " + std::to_string(lineno) + ": expected k,ell and " +
                             std::to_string(N) + " radii");
        }
        const int k = parse_int(cells[0], "k");
        const int ell = parse_int(cells[1], "ell");
        std::vector<double> radii(N);
        for (int j = 0; j < N; ++j) radii[j] = parse_number(cells[j + 2], "radius");
        if (k < 0) {
            knots.default_radii = std::move(radii);
        } else {
            knots.per_mode[{k, ell}] = std::move(radii);
        }
    }
    if (knots.default_radii.empty()) {
        throw InputError("knots file: missing default row (k = -1)");
    }
    return knots;
}

} // namespace

int cmd_modes(const RunConfig& config, const fs::path& out_dir) {
    ensure_dir(out_dir);
    Manifest manifest(config, "modes");

    CsvWriter csv({"k", "d_k", "cumulative"});
    long long cumulative = 0;
    for (int k = 0; k <= config.k_max; ++k) {
        const long long dk = mode_dimension(config.n, k);
        cumulative += dk;
        csv.add_raw_row({std::to_string(k), std::to_string(dk), std::to_string(cumulative)});
    }
    csv.save(out_dir / "modes.csv");
    manifest.stage("modes");
    manifest.add_file(out_dir / "modes.csv");
    manifest.save(out_dir);
    return 0;
}

int cmd_interpolate(const RunConfig& config, const fs::path& out_dir) {
    ensure_dir(out_dir);
    Manifest manifest(config, "interpolate");

    auto basis = std::make_shared<HarmonicBasis>(config.n, config.k_max);
    const QuadratureRule quad = build_quadrature(config.n, config.resolved_exactness());
    const BallFunction f = resolve_function(config, *basis, quad);
    manifest.stage("setup");

    PolyharmonicInterpolant h = [&]() {
        if (!config.knots_file.empty()) {
            const GeneralKnots knots = load_general_knots(config.knots_file, config.N);
            const std::vector<double> grid = profile_grid(
                config.R, config.resolved_profile_points(), config.resolved_profile_lo());
            const std::vector<RadialProfile> profiles = radial_profiles(
                f, config.k_max, grid, *basis, quad, config.n_cheb, config.threads);
            return interpolate_general(profiles, knots, config.N, config.k_max, basis, config.R,
                                       config.threads);
        }
        const std::vector<double> radii = config.resolved_radii();
        const std::vector<SphereTrace> traces =
            sphere_traces(f, radii, *basis, quad, config.threads);
        return interpolate_spheres(traces, radii, config.k_max, basis, config.R, config.threads);
    }();
    manifest.stage("interpolate");

    save_interpolant(h, config.knots_file.empty() ? "spheres" : "general",
                     out_dir / "interpolant.json");

    // residuals on the knot spheres (general knots: at the default radii)
    const std::vector<double> radii = config.knots_file.empty()
                                          ? config.resolved_radii()
                                          : load_general_knots(config.knots_file, config.N)
                                                .default_radii;
    CsvWriter residuals({"j", "r", "max_abs_residual"});
    for (size_t j = 0; j < radii.size(); ++j) {
        double worst = 0.0;
        if (radii[j] > 0.0) {
            for (const Vec3& node : quad.nodes) {
                worst = std::max(worst,
                                 std::abs(h.evaluate(radii[j], node) - f(radii[j], node)));
            }
        }
        residuals.add_raw_row(
            {std::to_string(j), format_double(radii[j]), format_double(worst)});
    }
    residuals.save(out_dir / "residuals.csv");

    CsvWriter summary({"n", "N", "k_max", "R", "laplacian_certificate"});
    summary.add_raw_row({std::to_string(config.n), std::to_string(config.N),
                         std::to_string(config.k_max), format_double(config.R),
                         format_double(laplacian_certificate(h, config.N))});
    summary.save(out_dir / "summary.csv");
    manifest.stage("report");

    manifest.add_file(out_dir / "interpolant.json");
    manifest.add_file(out_dir / "residuals.csv");
    manifest.add_file(out_dir / "summary.csv");
    manifest.save(out_dir);
    return 0;
}

int cmd_report_t1(const RunConfig& config, const fs::path& out_dir) {
    ensure_dir(out_dir);
    Manifest manifest(config, "report-t1");

    auto basis = std::make_shared<HarmonicBasis>(config.n, config.k_max);
    const QuadratureRule quad = build_quadrature(config.n, config.resolved_exactness());
    const BallFunction f = resolve_function(config, *basis, quad);
    manifest.stage("setup");

    const std::vector<double> grid = profile_grid(
        config.R, config.resolved_profile_points(), config.resolved_profile_lo());
    const std::vector<RadialProfile> profiles =
        radial_profiles(f, config.k_max, grid, *basis, quad, config.n_cheb, config.threads);
    const SeminormEstimate sem = seminorm(profiles, config.N, config.R, config.resolved_k_tail());
    manifest.stage("seminorm");

    GeneralKnots knots;
    if (!config.knots_file.empty()) {
        knots = load_general_knots(config.knots_file, config.N);
    } else {
        knots.default_radii = config.resolved_radii();
    }
    const PolyharmonicInterpolant h =
        interpolate_general(profiles, knots, config.N, config.k_max, basis, config.R,
                            config.threads);
    const Theorem1Report report = check_theorem1(config.R, config.N, sem, h, f,
                                                 config.resolved_probe_radii(), quad);
    manifest.stage("report");

    CsvWriter summary({"R", "N", "seminorm", "product", "satisfied", "bound_shape", "max_error",
                       "empirical_constant"});
    summary.add_raw_row({format_double(report.R), std::to_string(report.N),
                         format_double(report.seminorm_value), format_double(report.product),
                         report.satisfied ? "1" : "0", format_double(report.bound_shape),
                         format_double(report.max_error),
                         format_double(report.empirical_constant)});
    summary.save(out_dir / "theorem1.csv");

    CsvWriter errors({"r", "l2_error"});
    for (const auto& [r, err] : report.measured_errors) errors.add_row({r, err});
    errors.save(out_dir / "errors.csv");
    manifest.stage("write");

    manifest.add_file(out_dir / "theorem1.csv");
    manifest.add_file(out_dir / "errors.csv");
    manifest.save(out_dir);
    return 0;
}

int cmd_report_t2(const RunConfig& config, const fs::path& out_dir) {
    ensure_dir(out_dir);
    Manifest manifest(config, "report-t2");

    const std::vector<double> radii = config.resolved_radii();
    std::vector<SphereTrace> traces;
    if (config.function == "example-geometric") {
        traces = geometric_traces(config.geom_C, radii, config.k_max, config.n, config.all_ell);
    } else {
        auto basis = std::make_shared<HarmonicBasis>(config.n, config.k_max);
        const QuadratureRule quad = build_quadrature(config.n, config.resolved_exactness());
        const BallFunction f = resolve_function(config, *basis, quad);
        traces = sphere_traces(f, radii, *basis, quad, config.threads);
    }
    manifest.stage("traces");

    const Theorem2Report report = check_theorem2(config.R, traces, radii);
    manifest.stage("report");

    CsvWriter per_sphere({"j", "r", "eta", "ratio"});
    for (size_t j = 0; j < radii.size(); ++j) {
        per_sphere.add_raw_row({std::to_string(j), format_double(radii[j]),
                                format_double(report.etas[j]), format_double(report.ratios[j])});
    }
    per_sphere.save(out_dir / "theorem2_spheres.csv");

    CsvWriter summary({"R", "M", "product", "satisfied", "delta", "tail_ratio"});
    summary.add_raw_row({format_double(report.R), format_double(report.M),
                         format_double(report.product), report.satisfied ? "1" : "0",
                         format_double(report.delta), format_double(report.tail_ratio)});
    summary.save(out_dir / "theorem2.csv");

    CsvWriter sums({"K", "S_K"});
    for (size_t k = 0; k < report.partial_sums.size(); ++k) {
        sums.add_raw_row({std::to_string(k), format_double(report.partial_sums[k])});
    }
    sums.save(out_dir / "partial_sums.csv");
    manifest.stage("write");

    manifest.add_file(out_dir / "theorem2_spheres.csv");
    manifest.add_file(out_dir / "theorem2.csv");
    manifest.add_file(out_dir / "partial_sums.csv");
    manifest.save(out_dir);
    return 0;
}

int cmd_diverge(const RunConfig& config, const fs::path& out_dir) {
    if (config.function != "example-geometric") {
        throw InputError("diverge requires function = example-geometric");
    }
    ensure_dir(out_dir);
    Manifest manifest(config, "diverge");

    const DivergenceDemo demo =
        divergence_demo(config.geom_C, config.R, config.N, config.resolved_radii(), config.k_max,
                        config.n, config.all_ell);
    manifest.stage("demo");

    CsvWriter sums({"k", "S_K", "increment", "closed_form", "mode_integral"});
    for (size_t k = 0; k < demo.partial_sums.size(); ++k) {
        sums.add_raw_row({std::to_string(k), format_double(demo.partial_sums[k]),
                          format_double(demo.increments[k]), format_double(demo.closed_form[k]),
                          format_double(demo.mode_integrals[k])});
    }
    sums.save(out_dir / "partial_sums.csv");

    CsvWriter summary({"C", "R", "CR", "N", "k_max", "verdict", "tail_ratio"});
    summary.add_raw_row({format_double(demo.C), format_double(demo.R),
                         format_double(demo.C * demo.R), std::to_string(demo.N),
                         std::to_string(demo.k_max),
                         demo.verdict == DivergenceDemo::Verdict::diverging ? "diverging"
                                                                            : "converging",
                         format_double(demo.tail_ratio)});
    summary.save(out_dir / "summary.csv");
    manifest.stage("write");

    manifest.add_file(out_dir / "partial_sums.csv");
    manifest.add_file(out_dir / "summary.csv");
    manifest.save(out_dir);
    return 0;
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"polyharm: polyharmonic interpolation on a ball with convergence diagnostics"};
    app.footer("Exit codes: 0 ok, 2 usage/config, 3 input, 4 numeric, 5 boundary case (C*R = 1), "
               "6 domain, 1 other.");

    std::string config_path;
    std::string out_override;
    int threads_override = -1;

    app.add_option("--config", config_path, "run configuration file (key = value)")
        ->required();
    app.add_option("--out", out_override, "output directory (overrides config out_dir)");
    app.add_option("--threads", threads_override, "worker threads (0 = auto)");

    std::string command;
    for (const char* name : {"modes", "interpolate", "report-t1", "report-t2", "diverge"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->callback([&command, name]() { command = name; });
    }
    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        RunConfig config = parse_config_file(config_path);
        if (threads_override >= 0) config.threads = threads_override;
        const fs::path out_dir = out_override.empty() ? fs::path(config.out_dir)
                                                      : fs::path(out_override);
        if (command == "modes") return cmd_modes(config, out_dir);
        if (command == "interpolate") return cmd_interpolate(config, out_dir);
        if (command == "report-t1") return cmd_report_t1(config, out_dir);
        if (command == "report-t2") return cmd_report_t2(config, out_dir);
        if (command == "diverge") return cmd_diverge(config, out_dir);
        std::cerr << "unknown command\n";
        return 2;
    } catch (const BoundaryCaseError& e) {
        std::cerr << "boundary case: " << e.what() << "\n";
        return 5;
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 4;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 6;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace polyharm
