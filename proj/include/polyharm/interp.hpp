#ifndef POLYHARM_INTERP_HPP
#define POLYHARM_INTERP_HPP

#include "polyharm/harmonics.hpp"
#include "polyharm/modes.hpp"
#include "polyharm/radial.hpp"

#include <map>
#include <memory>
#include <utility>
#include <vector>

namespace polyharm {

// Monomial conversion and the Laplacian power recurrence degrade beyond
// this interpolation order.
inline constexpr int kMaxOrder = 16;

// Shared concentric-sphere knots r_0 < ... < r_{N-1}, r_0 > 0.
struct SphereKnots {
    std::vector<double> radii;

    int order() const { return static_cast<int>(radii.size()); }
};

// Per-mode knots for the general (Theorem-1-style) problem: a default
// radius set with optional per-mode overrides.  r = 0 is allowed here
// (the data are f_{k,l} values, no division by r^k).
struct GeneralKnots {
    std::vector<double> default_radii;
    std::map<std::pair<int, int>, std::vector<double>> per_mode;

    int order() const { return static_cast<int>(default_radii.size()); }
    const std::vector<double>& radii_for(ModeIndex mode) const;
};

// Lagrange fundamental functions w_j(t) at the given pairwise-distinct
// knots, evaluated in second-form barycentric arithmetic.  At a knot the
// exact unit vector is returned.
std::vector<double> lagrange_basis(const std::vector<double>& knots_t, double t);

// Barycentric weights 1 / prod_{i != j} (x_j - x_i).
std::vector<double> barycentric_weights(const std::vector<double>& knots_t);

// One mode's degree <= N-1 polynomial in t = r^2, stored both in
// barycentric form (primary) and monomial form (for the Laplacian
// recurrence and norms).
struct ModePolynomial {
    ModeIndex mode;
    std::vector<double> knots_t;
    std::vector<double> values; // interpolated data at knots_t
    std::vector<double> bary_weights;
    std::vector<double> monomial; // monomial[i] * t^i

    int order() const { return static_cast<int>(knots_t.size()); }
    double eval(double t) const; // barycentric
    double eval_monomial(double t) const;
    double max_abs_value() const;
};

// Fit from sphere data: interpolates phi_j / r_j^k at x_j = r_j^2.
ModePolynomial fit_mode_polynomial(ModeIndex mode, const std::vector<double>& knot_radii,
                                   const std::vector<double>& data);

// Fit from profile values f_{k,l}(x_j) directly (general knots; r = 0 ok).
ModePolynomial fit_mode_polynomial_values(ModeIndex mode, const std::vector<double>& knots_t,
                                          const std::vector<double>& values);

class PolyharmonicInterpolant {
  public:
    PolyharmonicInterpolant(int dimension, int order, int k_max, double R,
                            std::vector<ModePolynomial> modes,
                            std::shared_ptr<const HarmonicBasis> basis);

    int dimension() const { return n_; }
    int order() const { return order_; } // N
    int max_degree() const { return k_max_; }
    double ball_radius() const { return R_; }
    const std::vector<ModePolynomial>& modes() const { return modes_; }
    const ModePolynomial& mode(int k, int ell) const;
    const std::shared_ptr<const HarmonicBasis>& basis() const { return basis_; }

    // Truncated sum over k <= k_max in ascending (k, ell) order.
    double evaluate(double r, const Vec3& theta) const;

  private:
    int n_, order_, k_max_;
    double R_;
    std::vector<ModePolynomial> modes_;
    std::shared_ptr<const HarmonicBasis> basis_; // may be null for norm-only use
};

// Theorem-1 setting: per-mode Lagrange fit of the profile at the squared
// knots.  Profiles must cover all modes k <= k_max.
PolyharmonicInterpolant interpolate_general(const std::vector<RadialProfile>& profiles,
                                            const GeneralKnots& knots, int N, int k_max,
                                            std::shared_ptr<const HarmonicBasis> basis, double R,
                                            int threads = 1);

// Theorem-2 setting: one full trace per sphere, data phi_j / r_j^k.
PolyharmonicInterpolant interpolate_spheres(const std::vector<SphereTrace>& traces,
                                            const std::vector<double>& radii, int k_max,
                                            std::shared_ptr<const HarmonicBasis> basis, double R,
                                            int threads = 1);

struct SphereL2Error {
    double by_quadrature = 0.0;
    double by_parseval = 0.0;
};

// || f(r.) - h(r.) ||_{L2(S^{n-1})} under the normalized measure, computed
// two ways: directly by quadrature and via Parseval over the trace
// coefficients.
SphereL2Error l2_error_on_sphere(const BallFunction& f, const PolyharmonicInterpolant& h, double r,
                                 const QuadratureRule& quad);

struct BallNorm {
    double total = 0.0;
    std::vector<double> partial_sums;  // S_K, cumulative over degrees
    std::vector<double> per_degree;    // sum over ell of the mode integrals
};

// sum_{k,l} int_0^R r^{2k} h_{kl}(r^2)^2 dr by per-mode Gauss-Legendre
// (exact for the polynomial integrands), accumulated in ascending k.  The
// measure is the paper-literal dr; with_jacobian adds the r^{n-1} factor
// for the physical L2(B_R).
BallNorm l2_norm_ball(const PolyharmonicInterpolant& h, bool with_jacobian = false);

struct ModeCoefficients {
    ModeIndex mode;
    std::vector<double> monomial;
};

// Applies the radial Laplacian factor identity
//   Delta(r^s Y_k) = [s(s+n-2) - k(k+n-2)] r^{s-2} Y_k,  s = 2m + k,
// p times to every mode polynomial.
std::vector<ModeCoefficients> radial_laplacian_power(const PolyharmonicInterpolant& h, int p);

// max over modes of |Delta^p h coefficients| / |input coefficients|;
// zero for p = order() since degree <= N-1 polynomials are annihilated.
double laplacian_certificate(const PolyharmonicInterpolant& h, int p);

} // namespace polyharm

#endif
