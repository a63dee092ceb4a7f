#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyharm/cli.hpp"
#include "polyharm/errors.hpp"
#include "polyharm/harmonics.hpp"
#include "polyharm/interp.hpp"
#include "polyharm/io.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

using namespace polyharm;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "polyharm_io_cli_tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_cli_binary(const std::string& args) {
    const std::string cmd = std::string(POLYHARM_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

PolyharmonicInterpolant sample_interpolant(std::shared_ptr<const HarmonicBasis> basis) {
    const int n = basis->dimension();
    const int k_max = basis->max_degree();
    std::vector<ModePolynomial> modes;
    for (const ModeIndex& m : mode_list(n, k_max)) {
        const std::vector<double> knots_t = {0.25, 0.64, 1.0};
        const std::vector<double> values = {0.1 * m.k + 0.01 * m.ell, M_PI / (m.k + 1),
                                            std::sqrt(2.0) * m.ell};
        modes.push_back(fit_mode_polynomial_values(m, knots_t, values));
    }
    return PolyharmonicInterpolant(n, 3, k_max, 1.0, std::move(modes), std::move(basis));
}

} // namespace

TEST_CASE("17-digit formatting round-trips exactly") {
    for (double v : {1.0 / 3.0, 0.1, M_PI, 1e-300, 6.02e23, -0.0, 123456789.123456789}) {
        CHECK(std::stod(format_double(v)) == v);
    }
}

TEST_CASE("fnv1a digest known values") {
    CHECK(fnv1a_digest("") == "cbf29ce484222325");
    CHECK(fnv1a_digest("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a_digest("hello") != fnv1a_digest("hellp"));
}

TEST_CASE("interpolant serialization is bit-exact") {
    auto basis = std::make_shared<HarmonicBasis>(3, 3);
    const PolyharmonicInterpolant h = sample_interpolant(basis);
    const std::string text = serialize_interpolant(h, "spheres");
    const PolyharmonicInterpolant h2 = deserialize_interpolant(text, basis);

    CHECK(h2.dimension() == h.dimension());
    CHECK(h2.order() == h.order());
    CHECK(h2.max_degree() == h.max_degree());
    CHECK(h2.ball_radius() == h.ball_radius());
    for (size_t i = 0; i < h.modes().size(); ++i) {
        const ModePolynomial& a = h.modes()[i];
        const ModePolynomial& b = h2.modes()[i];
        REQUIRE(a.knots_t.size() == b.knots_t.size());
        for (size_t j = 0; j < a.knots_t.size(); ++j) {
            CHECK(a.knots_t[j] == b.knots_t[j]);
            CHECK(a.values[j] == b.values[j]);
            CHECK(a.monomial[j] == b.monomial[j]);
        }
    }
    // second round trip is textually identical
    CHECK(serialize_interpolant(h2, "spheres") == text);

    const fs::path file = scratch_dir() / "roundtrip.json";
    save_interpolant(h, "spheres", file);
    const PolyharmonicInterpolant h3 = load_interpolant(file, basis);
    CHECK(h3.evaluate(0.7, {0.0, 0.0, 1.0}) == h.evaluate(0.7, {0.0, 0.0, 1.0}));

    CHECK_THROWS_AS(deserialize_interpolant("not json", basis), InputError);
    CHECK_THROWS_AS(deserialize_interpolant("{\"header\": {}}", basis), InputError);
}

TEST_CASE("csv writer emits a header and 17-digit cells") {
    CsvWriter csv({"a", "b"});
    csv.add_row({1.0 / 3.0, 2.0});
    csv.add_raw_row({"x", "y"});
    const std::string text = csv.str();
    CHECK(text.rfind("a,b\n", 0) == 0);
    CHECK(text.find("0.33333333333333331") != std::string::npos);
    CHECK(text.find("x,y\n") != std::string::npos);
    CHECK_THROWS_AS(csv.add_row({1.0}), InputError);
}

TEST_CASE("config parsing: defaults, values, lists, comments") {
    const RunConfig def = parse_config_text("");
    CHECK(def.n == 3);
    CHECK(def.N == 2);
    CHECK(def.resolved_exactness() == 2 * def.k_max);
    CHECK(def.resolved_k_tail() == def.k_max / 2);
    CHECK(def.resolved_radii().size() == 2);
    CHECK(def.resolved_radii().back() == doctest::Approx(1.0));
    CHECK(def.resolved_probe_radii().size() == 21);

    const RunConfig c = parse_config_text(
        "n = 2          # comment\n"
        "R = 2.5\n"
        "N = 4\n"
        "k_max = 12\n"
        "radii = 0.5, 1.0, 1.75, 2.5\n"
        "function = finite-mode\n"
        "mode_coeff = 2, 1, 0.5, -1.0\n"
        "mode_coeff = 0, 1, 3.0\n"
        "all_ell = 1\n"
        "out_dir = results\n");
    CHECK(c.n == 2);
    CHECK(c.R == 2.5);
    CHECK(c.radii.size() == 4);
    CHECK(c.radii[2] == 1.75);
    REQUIRE(c.mode_coeffs.size() == 2);
    CHECK(c.mode_coeffs[0].first == std::make_pair(2, 1));
    CHECK(c.mode_coeffs[0].second == std::vector<double>{0.5, -1.0});
    CHECK(c.all_ell);
    CHECK(c.out_dir == "results");
}

TEST_CASE("config parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_config_text("unknown_key = 1\n"), InputError);
    CHECK_THROWS_AS(parse_config_text("just a line\n"), InputError);
    CHECK_THROWS_AS(parse_config_text("N = two\n"), InputError);
    CHECK_THROWS_AS(parse_config_text("N = 2.5\n"), InputError);
    CHECK_THROWS_AS(parse_config_text("n = 4\n"), InputError);
    CHECK_THROWS_AS(parse_config_text("R = -1\n"), InputError);
    CHECK_THROWS_AS(parse_config_text("N = 0\n"), InputError);
    CHECK_THROWS_AS(parse_config_text("radii = 1.0, 0.5\n"), InputError);
    CHECK_THROWS_AS(parse_config_text("R = 1\nradii = 0.5, 2.0\n"), InputError);
    CHECK_THROWS_AS(parse_config_text("mode_coeff = 1, 1\n"), InputError);
}

TEST_CASE("built-in functions evaluate as documented") {
    const HarmonicBasis basis(3, 4);
    RunConfig c;

    c.function = "constant";
    c.constant_value = 2.5;
    CHECK(make_function(c, basis).eval({0.3, 0.1, 0.2}) == 2.5);

    c.function = "gaussian";
    c.gaussian_center = {0.5, 0.0, 0.0};
    c.gaussian_width = 2.0;
    const BallFunction g = make_function(c, basis);
    CHECK(g.eval({0.5, 0.0, 0.0}) == doctest::Approx(1.0));
    CHECK(g.eval({0.5, 0.0, 1.0}) == doctest::Approx(std::exp(-0.25)));

    c.function = "exp-linear";
    c.exp_linear_scale = 1.5;
    CHECK(make_function(c, basis).eval({0.4, 9.0, 9.0}) == doctest::Approx(std::exp(0.6)));

    c.function = "finite-mode";
    c.mode_coeffs = {{{1, 2}, {2.0}}}; // 2 r Y_{1,2} = 2 sqrt(3) x
    const BallFunction fm = make_function(c, basis);
    CHECK(fm.eval({0.3, 0.0, 0.0}) == doctest::Approx(2.0 * std::sqrt(3.0) * 0.3));

    c.function = "example-geometric";
    CHECK_THROWS_AS(make_function(c, basis), InputError);
    c.function = "no-such-function";
    CHECK_THROWS_AS(make_function(c, basis), InputError);
    c.function = "finite-mode";
    c.mode_coeffs = {{{9, 1}, {1.0}}}; // above the basis degree
    CHECK_THROWS_AS(make_function(c, basis), InputError);
}

TEST_CASE("gridded samples reproduce an analytic function's traces") {
    RunConfig c;
    c.n = 3;
    c.k_max = 4;
    const HarmonicBasis basis(3, c.k_max);
    const QuadratureRule quad = build_quadrature(3, c.resolved_exactness());

    RunConfig cg = c;
    cg.function = "gaussian";
    const BallFunction g = make_function(cg, basis);

    const std::vector<double> radii = {0.5, 1.0};
    std::ostringstream csv;
    csv << "r,node_index,f_value\n";
    for (double r : radii) {
        for (size_t i = 0; i < quad.nodes.size(); ++i) {
            csv << format_double(r) << "," << i << "," << format_double(g(r, quad.nodes[i]))
                << "\n";
        }
    }
    const fs::path file = scratch_dir() / "samples.csv";
    write_file(file, csv.str());

    const BallFunction fs_fn = load_gridded_samples(file, c, quad);
    for (double r : radii) {
        const SphereTrace a = sphere_trace_coefficients(g, r, basis, quad);
        const SphereTrace b = sphere_trace_coefficients(fs_fn, r, basis, quad);
        for (size_t m = 0; m < a.coefficients.size(); ++m) {
            CHECK(a.coefficients[m] == b.coefficients[m]);
        }
    }
    // unsampled radius and off-grid point are rejected
    CHECK_THROWS_AS(fs_fn.eval({0.25, 0.0, 0.0}), InputError);
    CHECK_THROWS_AS(load_gridded_samples(scratch_dir() / "nope.csv", c, quad), InputError);
}

TEST_CASE("cli: modes command output is stable and correct") {
    const fs::path dir = scratch_dir() / "modes_run";
    const fs::path cfg = scratch_dir() / "modes.cfg";
    write_file(cfg, "n = 3\nk_max = 5\n");

    CHECK(run_cli_binary("--config " + cfg.string() + " --out " + dir.string() + " modes") == 0);
    const std::string csv = read_file(dir / "modes.csv");
    CHECK(csv.rfind("k,d_k,cumulative\n", 0) == 0);
    CHECK(csv.find("2,5,9") != std::string::npos);   // d_2 = 5 at n = 3
    CHECK(csv.find("5,11,36") != std::string::npos); // total_modes(3,5) = 36

    const fs::path dir2 = scratch_dir() / "modes_run2";
    CHECK(run_cli_binary("--config " + cfg.string() + " --out " + dir2.string() + " modes") == 0);
    CHECK(read_file(dir2 / "modes.csv") == csv);
    CHECK(file_digest(dir / "modes.csv") == file_digest(dir2 / "modes.csv"));
}

TEST_CASE("cli: interpolate is byte-deterministic across runs and thread counts") {
    const fs::path cfg = scratch_dir() / "interp.cfg";
    write_file(cfg, "n = 3\nR = 1\nN = 3\nk_max = 8\nfunction = gaussian\n"
                    "gaussian_center = 0.4, 0, 0\n");

    const fs::path d1 = scratch_dir() / "interp1";
    const fs::path d2 = scratch_dir() / "interp2";
    const fs::path d4 = scratch_dir() / "interp4";
    const std::string base = "--config " + cfg.string();
    CHECK(run_cli_binary(base + " --out " + d1.string() + " --threads 1 interpolate") == 0);
    CHECK(run_cli_binary(base + " --out " + d2.string() + " --threads 1 interpolate") == 0);
    CHECK(run_cli_binary(base + " --out " + d4.string() + " --threads 4 interpolate") == 0);

    for (const char* name : {"interpolant.json", "residuals.csv", "summary.csv"}) {
        const std::string ref = read_file(d1 / name);
        CHECK(read_file(d2 / name) == ref);
        CHECK(read_file(d4 / name) == ref);
    }
    // residuals on the knot spheres are small; the header row then data
    const std::string residuals = read_file(d1 / "residuals.csv");
    CHECK(residuals.rfind("j,r,max_abs_residual\n", 0) == 0);
    CHECK(read_file(d1 / "manifest.json").find("\"command\": \"interpolate\"") !=
          std::string::npos);
}

TEST_CASE("cli: report-t2 on the geometric example") {
    const fs::path cfg = scratch_dir() / "t2.cfg";
    write_file(cfg, "n = 3\nR = 1\nN = 3\nk_max = 40\nfunction = example-geometric\n"
                    "geom_C = 0.5\nradii = 0.5, 0.75, 1.0\n");
    const fs::path dir = scratch_dir() / "t2_run";
    CHECK(run_cli_binary("--config " + cfg.string() + " --out " + dir.string() + " report-t2") ==
          0);
    const std::string summary = read_file(dir / "theorem2.csv");
    CHECK(summary.rfind("R,M,product,satisfied,delta,tail_ratio\n", 0) == 0);
    CHECK(summary.find(",1,") != std::string::npos); // satisfied
    CHECK(read_file(dir / "partial_sums.csv").rfind("K,S_K\n", 0) == 0);
    CHECK(read_file(dir / "theorem2_spheres.csv").rfind("j,r,eta,ratio\n", 0) == 0);
}

TEST_CASE("cli: exit codes") {
    const fs::path cfg_boundary = scratch_dir() / "boundary.cfg";
    write_file(cfg_boundary, "R = 1\nN = 2\nk_max = 10\nfunction = example-geometric\n"
                             "geom_C = 1.0\n");
    const fs::path dir = scratch_dir() / "codes";
    CHECK(run_cli_binary("--config " + cfg_boundary.string() + " --out " + dir.string() +
                         " diverge") == 5);

    const fs::path cfg_bad = scratch_dir() / "bad.cfg";
    write_file(cfg_bad, "nonsense = 1\n");
    CHECK(run_cli_binary("--config " + cfg_bad.string() + " modes") == 3);
    CHECK(run_cli_binary("--config " + (scratch_dir() / "missing.cfg").string() + " modes") == 3);

    // diverge requires the geometric example
    const fs::path cfg_gauss = scratch_dir() / "gauss.cfg";
    write_file(cfg_gauss, "function = gaussian\n");
    CHECK(run_cli_binary("--config " + cfg_gauss.string() + " --out " + dir.string() +
                         " diverge") == 3);

    CHECK(run_cli_binary("--config " + cfg_gauss.string()) == 2);  // missing subcommand
    CHECK(run_cli_binary("modes") == 2);                           // missing --config
    CHECK(run_cli_binary("--help") == 0);
}

TEST_CASE("cli: run_cli in process matches the binary behavior") {
    const fs::path cfg = scratch_dir() / "inproc.cfg";
    write_file(cfg, "n = 2\nk_max = 3\n");
    const fs::path dir = scratch_dir() / "inproc";
    const std::string cfg_s = cfg.string(), dir_s = dir.string();
    const char* argv[] = {"polyharm", "--config", cfg_s.c_str(), "--out", dir_s.c_str(), "modes"};
    CHECK(run_cli(6, argv) == 0);
    CHECK(read_file(dir / "modes.csv").find("3,2,7") != std::string::npos);
}
