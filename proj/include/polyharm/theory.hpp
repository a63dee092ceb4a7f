#ifndef POLYHARM_THEORY_HPP
#define POLYHARM_THEORY_HPP

#include "polyharm/interp.hpp"
#include "polyharm/radial.hpp"

#include <utility>
#include <vector>

namespace polyharm {

// Condition R * ||f|_N < 1 and the error-bound shape R^{2N} ||f|_N^{N+1}
// (the paper's constant C is unspecified; the shape carries C = 1).
struct Theorem1Report {
    double R = 0.0;
    int N = 0;
    double seminorm_value = 0.0;
    double product = 0.0; // R * ||f|_N
    bool satisfied = false;
    double bound_shape = 0.0;
    std::vector<std::pair<double, double>> measured_errors; // (radius, L2 error)
    double max_error = 0.0;
    double empirical_constant = 0.0; // max_error / bound_shape
};

// Condition R * max_j(e^{-eta_j} / r_j) < 1 and the ball-norm partial sums
// of the constructed interpolant.
struct Theorem2Report {
    double R = 0.0;
    std::vector<double> radii;
    std::vector<double> etas;
    std::vector<double> ratios; // e^{-eta_j} / r_j
    double M = 0.0;
    double product = 0.0; // R * M
    bool satisfied = false;
    double delta = 0.0; // min_j |x_j - x_{j-1}|, x_j = r_j^2
    std::vector<double> partial_sums;
    double tail_ratio = 0.0; // observed ratio of the last partial-sum increments
};

struct DivergenceDemo {
    enum class Verdict { diverging, converging };

    double C = 0.0;
    double R = 0.0;
    int N = 0;
    int k_max = 0;
    int dimension = 3;
    bool all_ell = false;
    std::vector<double> radii;
    std::vector<double> partial_sums;   // S_K
    std::vector<double> increments;     // S_K - S_{K-1}
    std::vector<double> closed_form;    // k^{n-2} C^{2k} R^{2k+1} / (2k+1)
    std::vector<double> mode_integrals; // per-degree single-mode integral
    Verdict verdict = Verdict::converging;
    double tail_ratio = 0.0;
};

double theorem1_bound(double R, int N, double seminorm_value);

Theorem1Report check_theorem1(double R, int N, const SeminormEstimate& sem,
                              const PolyharmonicInterpolant& h, const BallFunction& f,
                              const std::vector<double>& probe_radii, const QuadratureRule& quad);

// Builds the interpolant from the traces internally; no basis needed for
// the norm series.
Theorem2Report check_theorem2(double R, const std::vector<SphereTrace>& traces,
                              const std::vector<double>& radii);

// Synthetic traces with phi^j_{k,1} = (C r_j)^k (all ell populated when
// all_ell is set), so that e^{-eta_j} / r_j = C for every sphere.
std::vector<SphereTrace> geometric_traces(double C, const std::vector<double>& radii, int k_max,
                                          int dimension, bool all_ell = false);

DivergenceDemo divergence_demo(double C, double R, int N, const std::vector<double>& radii,
                               int k_max, int dimension = 3, bool all_ell = false);

} // namespace polyharm

#endif
