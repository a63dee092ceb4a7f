#ifndef POLYHARM_CLI_HPP
#define POLYHARM_CLI_HPP

#include "polyharm/radial.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace polyharm {

inline constexpr const char* kVersion = "0.1.0";

// Flat key = value run configuration; lists are comma separated.
struct RunConfig {
    int n = 3;
    double R = 1.0;
    int N = 2;
    int k_max = 8;
    int exactness = -1; // -1: auto (2 * k_max)
    int threads = 0;    // 0: auto
    unsigned long long seed = 12345;

    std::vector<double> radii;       // sphere knots; empty: auto grid
    std::string knots_file;          // per-mode general knots (CSV)
    std::vector<double> probe_radii; // empty: auto grid

    std::string function = "gaussian";
    double constant_value = 1.0;
    std::vector<double> gaussian_center; // empty: origin
    double gaussian_width = 1.0;
    double exp_linear_scale = 1.0;
    double geom_C = 0.5;
    bool all_ell = false;
    // finite-mode spec: (k, ell) -> monomial coefficients in t
    std::vector<std::pair<std::pair<int, int>, std::vector<double>>> mode_coeffs;

    int k_tail = -1;       // -1: auto (k_max / 2)
    int n_cheb = 16;
    double profile_lo = -1.0; // -1: auto (R / 4)
    int profile_points = -1;  // -1: auto (2 * n_cheb)

    std::string samples_file;
    std::string out_dir = "out";

    int resolved_exactness() const { return exactness >= 0 ? exactness : 2 * k_max; }
    int resolved_k_tail() const { return k_tail >= 0 ? k_tail : k_max / 2; }
    double resolved_profile_lo() const { return profile_lo > 0.0 ? profile_lo : R / 4.0; }
    int resolved_profile_points() const {
        return profile_points > 0 ? profile_points : 2 * n_cheb;
    }
    std::vector<double> resolved_radii() const;
    std::vector<double> resolved_probe_radii() const;
};

RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::filesystem::path& path);

// Built-in analytic test functions (constant, gaussian, exp-linear,
// finite-mode); example-geometric has no pointwise form and is handled by
// the trace-level commands.
BallFunction make_function(const RunConfig& config, const HarmonicBasis& basis);

// Gridded sample input (CSV: r,node_index,f_value in quadrature node
// order): evaluable only at the sampled spheres' quadrature nodes.
BallFunction load_gridded_samples(const std::filesystem::path& path, const RunConfig& config,
                                  const QuadratureRule& quad);

int cmd_modes(const RunConfig& config, const std::filesystem::path& out_dir);
int cmd_interpolate(const RunConfig& config, const std::filesystem::path& out_dir);
int cmd_report_t1(const RunConfig& config, const std::filesystem::path& out_dir);
int cmd_report_t2(const RunConfig& config, const std::filesystem::path& out_dir);
int cmd_diverge(const RunConfig& config, const std::filesystem::path& out_dir);

// Full argument-vector entry point used by the binary and by tests.
int run_cli(int argc, const char* const* argv);

} // namespace polyharm

#endif
