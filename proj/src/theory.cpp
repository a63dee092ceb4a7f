#include "polyharm/theory.hpp"
#include "polyharm/errors.hpp"

#include <cmath>
#include <limits>

namespace polyharm {

namespace {

// Ratio of the last two positive per-degree increments.  Differencing the
// partial sums instead would underflow once increments fall below the
// total's ulp.
double increment_tail_ratio(const std::vector<double>& per_degree) {
    int hi = -1, lo = -1;
    for (int k = static_cast<int>(per_degree.size()) - 1; k >= 0; --k) {
        if (per_degree[static_cast<size_t>(k)] > 0.0) {
            if (hi < 0) {
                hi = k;
            } else {
                lo = k;
                break;
            }
        }
    }
    if (lo < 0 || hi != lo + 1) return 0.0;
    return per_degree[static_cast<size_t>(hi)] / per_degree[static_cast<size_t>(lo)];
}

} // namespace

double theorem1_bound(double R, int N, double seminorm_value) {
    if (seminorm_value < 0.0) throw DomainError("theorem1_bound: seminorm must be >= 0");
    return std::pow(R, 2 * N) * std::pow(seminorm_value, N + 1);
}

Theorem1Report check_theorem1(double R, int N, const SeminormEstimate& sem,
                              const PolyharmonicInterpolant& h, const BallFunction& f,
                              const std::vector<double>& probe_radii, const QuadratureRule& quad) {
    if (sem.order != N) throw InputError("check_theorem1: seminorm computed with a different N");

    Theorem1Report report;
    report.R = R;
    report.N = N;
    report.seminorm_value = sem.value;
    report.product = R * sem.value;
    report.satisfied = report.product < 1.0;
    report.bound_shape = theorem1_bound(R, N, sem.value);

    for (double r : probe_radii) {
        const double err = l2_error_on_sphere(f, h, r, quad).by_quadrature;
        report.measured_errors.emplace_back(r, err);
        report.max_error = std::max(report.max_error, err);
    }
    report.empirical_constant = report.bound_shape > 0.0
                                    ? report.max_error / report.bound_shape
                                    : std::numeric_limits<double>::infinity();
    return report;
}

Theorem2Report check_theorem2(double R, const std::vector<SphereTrace>& traces,
                              const std::vector<double>& radii) {
    if (traces.size() != radii.size() || traces.empty()) {
        throw InputError("check_theorem2: traces/radii mismatch");
    }

    Theorem2Report report;
    report.R = R;
    report.radii = radii;

    for (const SphereTrace& tr : traces) {
        const DecayEstimate est = estimate_decay(tr); // propagates zero-trace
        report.etas.push_back(est.eta);
        const double ratio = est.is_flat_sentinel() ? 0.0 : std::exp(-est.eta) / tr.radius;
        report.ratios.push_back(ratio);
        report.M = std::max(report.M, ratio);
    }
    report.product = R * report.M;
    report.satisfied = report.product < 1.0;

    report.delta = std::numeric_limits<double>::infinity();
    for (size_t j = 1; j < radii.size(); ++j) {
        report.delta = std::min(report.delta, radii[j] * radii[j] - radii[j - 1] * radii[j - 1]);
    }
    if (radii.size() == 1) report.delta = radii[0] * radii[0];

    const int k_max = traces.front().k_max;
    const PolyharmonicInterpolant h =
        interpolate_spheres(traces, radii, k_max, nullptr, R);
    const BallNorm norm = l2_norm_ball(h);
    report.partial_sums = norm.partial_sums;
    report.tail_ratio = increment_tail_ratio(norm.per_degree);
    return report;
}

std::vector<SphereTrace> geometric_traces(double C, const std::vector<double>& radii, int k_max,
                                          int dimension, bool all_ell) {
    std::vector<SphereTrace> traces;
    traces.reserve(radii.size());
    for (double r : radii) {
        SphereTrace tr;
        tr.dimension = dimension;
        tr.radius = r;
        tr.k_max = k_max;
        tr.coefficients.assign(static_cast<size_t>(total_modes(dimension, k_max)), 0.0);
        size_t idx = 0;
        for (int k = 0; k <= k_max; ++k) {
            const long long dk = mode_dimension(dimension, k);
            const double v = std::pow(C * r, k);
            for (int ell = 1; ell <= dk; ++ell, ++idx) {
                if (ell == 1 || all_ell) tr.coefficients[idx] = v;
            }
        }
        traces.push_back(std::move(tr));
    }
    return traces;
}

DivergenceDemo divergence_demo(double C, double R, int N, const std::vector<double>& radii,
                               int k_max, int dimension, bool all_ell) {
    if (!(C > 0.0)) throw DomainError("divergence_demo: C must be positive");
    if (static_cast<int>(radii.size()) != N) throw InputError("divergence_demo: need N radii");
    if (std::abs(C * R - 1.0) < 1e-12) {
        throw BoundaryCaseError("divergence_demo: C*R = 1 is a boundary case");
    }

    DivergenceDemo demo;
    demo.C = C;
    demo.R = R;
    demo.N = N;
    demo.k_max = k_max;
    demo.dimension = dimension;
    demo.all_ell = all_ell;
    demo.radii = radii;

    const std::vector<SphereTrace> traces = geometric_traces(C, radii, k_max, dimension, all_ell);
    const PolyharmonicInterpolant h = interpolate_spheres(traces, radii, k_max, nullptr, R);
    const BallNorm norm = l2_norm_ball(h);
    demo.partial_sums = norm.partial_sums;
    for (size_t k = 0; k < norm.per_degree.size(); ++k) {
        demo.increments.push_back(norm.per_degree[k]);
        const double kf = k == 0 ? 1.0 : std::pow(static_cast<double>(k), dimension - 2);
        const double term = std::pow(C, 2.0 * k) * std::pow(R, 2.0 * k + 1) / (2.0 * k + 1.0);
        demo.closed_form.push_back(kf * term);
        demo.mode_integrals.push_back(term);
    }

    demo.tail_ratio = increment_tail_ratio(norm.per_degree);

    // Divergence is not decidable from finite sums; the verdict uses a
    // growth threshold plus an increasing-increment test, cross-checked by
    // the closed form elsewhere.
    bool increasing = demo.increments.size() >= 2;
    for (size_t k = std::min<size_t>(30, demo.increments.size() / 2) + 1;
         k < demo.increments.size(); ++k) {
        if (demo.increments[k] <= demo.increments[k - 1]) {
            increasing = false;
            break;
        }
    }
    const double s0 = demo.partial_sums.front();
    const bool grew = demo.partial_sums.back() > 1e6 * s0;
    demo.verdict = (grew && increasing) ? DivergenceDemo::Verdict::diverging
                                        : DivergenceDemo::Verdict::converging;
    return demo;
}

} // namespace polyharm
