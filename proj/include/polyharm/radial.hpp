#ifndef POLYHARM_RADIAL_HPP
#define POLYHARM_RADIAL_HPP

#include "polyharm/chebyshev.hpp"
#include "polyharm/harmonics.hpp"
#include "polyharm/modes.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

namespace polyharm {

// A function on the closed ball of the given radius, supplied as an
// evaluator at Cartesian points.
struct BallFunction {
    int dimension = 3;
    double radius = 1.0;
    std::function<double(const Vec3&)> eval;

    double operator()(double r, const Vec3& theta) const {
        return eval({r * theta[0], r * theta[1], r * theta[2]});
    }
};

// Expansion coefficients of theta -> f(r theta) at one radius, flattened in
// ascending (k, ell) order.
struct SphereTrace {
    int dimension = 3;
    double radius = 0.0;
    int k_max = 0;
    std::vector<double> coefficients;

    double at(int k, int ell) const;
    // max_ell |coefficient| at degree k
    double degree_envelope(int k) const;
};

// One mode's radial data: the raw trace r -> f~_{k,l}(r) at the sample
// radii and the smooth profile t -> f_{k,l}(t) with f~(r) = f(r^2) r^k,
// represented as a Chebyshev fit.
struct RadialProfile {
    ModeIndex mode;
    ChebyshevSeries profile;
    std::vector<double> sample_radii;
    std::vector<double> trace_samples;

    double trace(double r) const;
};

// Envelope fit |phi_{k,l}| <= K e^{-eta k}.  When fewer than 5 degrees
// carry mass above the underflow floor no slope can be fitted; eta is then
// the +infinity sentinel (the spectrum is effectively finite).
struct DecayEstimate {
    double K = 0.0;
    double eta = std::numeric_limits<double>::infinity();
    double residual = 0.0;
    int k_lo = 0;
    int k_hi = 0;

    bool is_flat_sentinel() const { return !std::isfinite(eta) && eta > 0; }
};

struct SeminormEstimate {
    int order = 0; // N
    double value = 0.0;
    std::vector<std::pair<ModeIndex, double>> per_mode;
    int k_tail = 0;
};

// Division by r^k is ill-conditioned near 0; profiles are computed from
// radii >= radius/20 and rely on the Chebyshev extension toward t = 0.
// The default fit degree is modest on purpose: extrapolating a degree-d
// Chebyshev series below its sample window amplifies rounding noise by
// roughly cosh(d * arccosh(|x(0)|)), so high degrees destroy the extension.
inline constexpr double kMinRadiusFraction = 1.0 / 20.0;
inline constexpr int kDefaultChebDegree = 16;
inline constexpr double kUnderflowFloor = 1e-300;
// Coefficients this far below the peak envelope are rounding noise, not
// spectrum, and are excluded from the decay fit.
inline constexpr double kNoiseFloorRelative = 1e-13;

SphereTrace sphere_trace_coefficients(const BallFunction& f, double r, const HarmonicBasis& basis,
                                      const QuadratureRule& quad);

// Traces at several radii, computed in parallel (one slot per radius).
std::vector<SphereTrace> sphere_traces(const BallFunction& f, const std::vector<double>& radii,
                                       const HarmonicBasis& basis, const QuadratureRule& quad,
                                       int threads = 1);

RadialProfile radial_profile(const BallFunction& f, ModeIndex mode,
                             const std::vector<double>& radii, const HarmonicBasis& basis,
                             const QuadratureRule& quad, int cheb_degree = kDefaultChebDegree);

// Profiles for every mode k <= k_max, sharing one trace computation per
// radius.  Flattened ascending (k, ell).
std::vector<RadialProfile> radial_profiles(const BallFunction& f, int k_max,
                                           const std::vector<double>& radii,
                                           const HarmonicBasis& basis, const QuadratureRule& quad,
                                           int cheb_degree = kDefaultChebDegree, int threads = 1);

// A convenient profile sampling grid: `count` radii, Chebyshev-spaced in
// t = r^2 over [lo, R].
std::vector<double> profile_grid(double R, int count, double lo);

DecayEstimate estimate_decay(const SphereTrace& trace);

SeminormEstimate seminorm(const std::vector<RadialProfile>& profiles, int N, double R, int k_tail);

} // namespace polyharm

#endif
