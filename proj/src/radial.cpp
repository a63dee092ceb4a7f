#include "polyharm/radial.hpp"
#include "polyharm/errors.hpp"
#include "polyharm/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace polyharm {

double SphereTrace::at(int k, int ell) const {
    return coefficients[static_cast<size_t>(mode_offset(dimension, k, ell))];
}

double SphereTrace::degree_envelope(int k) const {
    const long long dk = mode_dimension(dimension, k);
    double env = 0.0;
    for (int ell = 1; ell <= dk; ++ell) env = std::max(env, std::abs(at(k, ell)));
    return env;
}

double RadialProfile::trace(double r) const {
    return profile(r * r) * std::pow(r, mode.k);
}

SphereTrace sphere_trace_coefficients(const BallFunction& f, double r, const HarmonicBasis& basis,
                                      const QuadratureRule& quad) {
    if (r <= 0.0) throw DomainError("sphere_trace_coefficients: radius must be positive");
    if (r > f.radius * (1.0 + 1e-12)) {
        throw DomainError("sphere_trace_coefficients: radius outside the ball");
    }
    if (quad.exactness_degree < 2 * basis.max_degree()) {
        throw InputError("sphere_trace_coefficients: quadrature exactness below 2*k_max");
    }

    SphereTrace trace;
    trace.dimension = basis.dimension();
    trace.radius = r;
    trace.k_max = basis.max_degree();
    trace.coefficients.assign(static_cast<size_t>(basis.size()), 0.0);

    std::vector<double> y;
    for (size_t i = 0; i < quad.nodes.size(); ++i) {
        basis.evaluate_all(quad.nodes[i], y);
        const double wf = quad.weights[i] * f(r, quad.nodes[i]);
        for (size_t m = 0; m < y.size(); ++m) trace.coefficients[m] += wf * y[m];
    }
    return trace;
}

std::vector<SphereTrace> sphere_traces(const BallFunction& f, const std::vector<double>& radii,
                                       const HarmonicBasis& basis, const QuadratureRule& quad,
                                       int threads) {
    std::vector<SphereTrace> traces(radii.size());
    parallel_for(static_cast<long long>(radii.size()), threads, [&](long long i) {
        traces[static_cast<size_t>(i)] =
            sphere_trace_coefficients(f, radii[static_cast<size_t>(i)], basis, quad);
    });
    return traces;
}

namespace {

void check_profile_grid(const std::vector<double>& radii, double R, int cheb_degree) {
    if (static_cast<int>(radii.size()) < 2 * cheb_degree) {
        throw InputError("radial_profile: insufficient samples (need at least 2*N_cheb radii)");
    }
    for (size_t i = 1; i < radii.size(); ++i) {
        if (!(radii[i] > radii[i - 1])) {
            throw InputError("radial_profile: radii must be strictly increasing");
        }
    }
    if (radii.front() < R * kMinRadiusFraction * (1.0 - 1e-12)) {
        throw InputError("radial_profile: radii below R/20 are not allowed (r^-k amplification)");
    }
    if (radii.back() > R * (1.0 + 1e-12)) {
        throw InputError("radial_profile: radii outside the ball");
    }
}

RadialProfile profile_from_traces(const std::vector<SphereTrace>& traces, ModeIndex mode,
                                  const std::vector<double>& radii, double R, int cheb_degree) {
    std::vector<double> trace_vals(radii.size());
    std::vector<double> ts(radii.size());
    std::vector<double> ys(radii.size());
    for (size_t i = 0; i < radii.size(); ++i) {
        trace_vals[i] = traces[i].at(mode.k, mode.ell);
        ts[i] = radii[i] * radii[i];
        ys[i] = trace_vals[i] / std::pow(radii[i], mode.k);
        if (!std::isfinite(ys[i])) {
            throw NumericError("radial_profile: trace / r^k overflowed");
        }
    }
    ChebyshevSeries fit = ChebyshevSeries::fit(ts, ys, cheb_degree, ts.front(), R * R);
    return RadialProfile{mode, std::move(fit), radii, std::move(trace_vals)};
}

} // namespace

std::vector<double> profile_grid(double R, int count, double lo) {
    if (count < 2) throw InputError("profile_grid: need at least two radii");
    if (!(lo > 0.0) || !(lo < R)) throw DomainError("profile_grid: need 0 < lo < R");
    const double t0 = lo * lo, t1 = R * R;
    std::vector<double> radii(count);
    for (int i = 0; i < count; ++i) {
        // Chebyshev-spaced in t = r^2, ascending.
        const double x = std::cos(M_PI * (count - 1 - i) / (count - 1));
        radii[i] = std::sqrt(0.5 * (t0 + t1) + 0.5 * (t1 - t0) * x);
    }
    return radii;
}

RadialProfile radial_profile(const BallFunction& f, ModeIndex mode,
                             const std::vector<double>& radii, const HarmonicBasis& basis,
                             const QuadratureRule& quad, int cheb_degree) {
    check_profile_grid(radii, f.radius, cheb_degree);
    const std::vector<SphereTrace> traces = sphere_traces(f, radii, basis, quad);
    return profile_from_traces(traces, mode, radii, f.radius, cheb_degree);
}

std::vector<RadialProfile> radial_profiles(const BallFunction& f, int k_max,
                                           const std::vector<double>& radii,
                                           const HarmonicBasis& basis, const QuadratureRule& quad,
                                           int cheb_degree, int threads) {
    if (k_max > basis.max_degree()) {
        throw InputError("radial_profiles: k_max above the basis degree");
    }
    check_profile_grid(radii, f.radius, cheb_degree);
    const std::vector<SphereTrace> traces = sphere_traces(f, radii, basis, quad, threads);

    const std::vector<ModeIndex> modes = mode_list(basis.dimension(), k_max);
    std::vector<RadialProfile> profiles;
    profiles.reserve(modes.size());
    for (const ModeIndex& m : modes) {
        profiles.push_back(profile_from_traces(traces, m, radii, f.radius, cheb_degree));
    }
    return profiles;
}

DecayEstimate estimate_decay(const SphereTrace& trace) {
    std::vector<double> env(static_cast<size_t>(trace.k_max) + 1);
    double peak = 0.0;
    for (int k = 0; k <= trace.k_max; ++k) {
        env[k] = trace.degree_envelope(k);
        peak = std::max(peak, env[k]);
    }
    if (peak <= kUnderflowFloor) {
        throw NumericError("estimate_decay: zero trace (all coefficients below floor)");
    }
    const double floor = std::max(kUnderflowFloor, peak * kNoiseFloorRelative);
    std::vector<int> usable;
    for (int k = 0; k <= trace.k_max; ++k) {
        if (env[k] > floor) usable.push_back(k);
    }
    if (usable.size() < 5) {
        // Effectively finite spectrum; decays faster than any exponential.
        DecayEstimate flat;
        for (int k : usable) flat.K = std::max(flat.K, env[k]);
        flat.k_lo = usable.front();
        flat.k_hi = usable.back();
        return flat;
    }

    // Fit window: the upper half of the usable degrees (the slope is an
    // asymptotic quantity), at least 5 points.
    size_t start = usable.size() / 2;
    if (usable.size() - start < 5) start = usable.size() - 5;

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double count = static_cast<double>(usable.size() - start);
    for (size_t i = start; i < usable.size(); ++i) {
        const double x = usable[i];
        const double y = std::log(env[usable[i]]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / count;

    DecayEstimate est;
    est.eta = -slope;
    est.k_lo = usable[start];
    est.k_hi = usable.back();
    double max_dev = 0.0;
    for (size_t i = start; i < usable.size(); ++i) {
        const double dev = std::log(env[usable[i]]) - (intercept + slope * usable[i]);
        max_dev = std::max(max_dev, dev);
    }
    est.residual = max_dev;
    est.K = std::exp(intercept + max_dev); // envelope bound holds on the window
    return est;
}

SeminormEstimate seminorm(const std::vector<RadialProfile>& profiles, int N, double R,
                          int k_tail) {
    if (profiles.empty()) throw InputError("seminorm: no profiles");
    if (N < 0) throw DomainError("seminorm: order must be >= 0");

    int k_max = 0;
    for (const RadialProfile& p : profiles) k_max = std::max(k_max, p.mode.k);
    if (k_max <= k_tail) throw InputError("seminorm: k_tail must be below the largest degree");

    double n_fact = 1.0;
    for (int i = 2; i <= N; ++i) n_fact *= i;

    SeminormEstimate est;
    est.order = N;
    est.k_tail = k_tail;
    est.per_mode.reserve(profiles.size());
    for (const RadialProfile& p : profiles) {
        if (N > p.profile.degree() / 2) {
            throw NumericError("seminorm: derivative order exceeds N_cheb/2 (ill-conditioned)");
        }
        const double sup = p.profile.derivative(N).sup_abs(0.0, R * R);
        const double v = sup == 0.0 ? 0.0 : std::pow(sup / n_fact, 1.0 / (p.mode.k + N + 1));
        est.per_mode.emplace_back(p.mode, v);
        if (p.mode.k >= k_tail) est.value = std::max(est.value, v);
    }
    return est;
}

} // namespace polyharm
