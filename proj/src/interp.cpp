#include "polyharm/interp.hpp"
#include "polyharm/errors.hpp"
#include "polyharm/gauss_legendre.hpp"
#include "polyharm/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace polyharm {

const std::vector<double>& GeneralKnots::radii_for(ModeIndex mode) const {
    const auto it = per_mode.find({mode.k, mode.ell});
    return it == per_mode.end() ? default_radii : it->second;
}

std::vector<double> barycentric_weights(const std::vector<double>& knots_t) {
    const size_t n = knots_t.size();
    std::vector<double> w(n, 1.0);
    for (size_t j = 0; j < n; ++j) {
        for (size_t i = 0; i < n; ++i) {
            if (i == j) continue;
            const double diff = knots_t[j] - knots_t[i];
            if (diff == 0.0) throw NumericError("lagrange: degenerate (coincident) knots");
            w[j] /= diff;
        }
    }
    return w;
}

std::vector<double> lagrange_basis(const std::vector<double>& knots_t, double t) {
    const size_t n = knots_t.size();
    if (n == 0) throw InputError("lagrange_basis: no knots");
    const std::vector<double> w = barycentric_weights(knots_t);

    std::vector<double> omega(n, 0.0);
    for (size_t j = 0; j < n; ++j) {
        if (t == knots_t[j]) { // interpolation property, exactly
            omega[j] = 1.0;
            return omega;
        }
    }
    double denom = 0.0;
    for (size_t j = 0; j < n; ++j) {
        omega[j] = w[j] / (t - knots_t[j]);
        denom += omega[j];
    }
    for (size_t j = 0; j < n; ++j) omega[j] /= denom;
    return omega;
}

double ModePolynomial::eval(double t) const {
    const size_t n = knots_t.size();
    for (size_t j = 0; j < n; ++j) {
        if (t == knots_t[j]) return values[j];
    }
    double num = 0.0, den = 0.0;
    for (size_t j = 0; j < n; ++j) {
        const double q = bary_weights[j] / (t - knots_t[j]);
        num += q * values[j];
        den += q;
    }
    return num / den;
}

double ModePolynomial::eval_monomial(double t) const {
    double acc = 0.0;
    for (size_t i = monomial.size(); i-- > 0;) acc = acc * t + monomial[i];
    return acc;
}

double ModePolynomial::max_abs_value() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

namespace {

// Expand the Lagrange form into monomial coefficients, as
// sum_j values[j] * w_j * prod_{i != j} (t - x_i).
std::vector<double> to_monomial(const std::vector<double>& knots_t,
                                const std::vector<double>& values,
                                const std::vector<double>& w) {
    const size_t n = knots_t.size();
    std::vector<double> coeffs(n, 0.0);
    std::vector<double> root_poly(n, 0.0);
    for (size_t j = 0; j < n; ++j) {
        std::fill(root_poly.begin(), root_poly.end(), 0.0);
        root_poly[0] = 1.0;
        size_t deg = 0;
        for (size_t i = 0; i < n; ++i) {
            if (i == j) continue;
            // multiply by (t - x_i)
            for (size_t c = deg + 1; c > 0; --c) {
                root_poly[c] = root_poly[c - 1] - knots_t[i] * root_poly[c];
            }
            root_poly[0] *= -knots_t[i];
            ++deg;
        }
        const double s = values[j] * w[j];
        for (size_t c = 0; c < n; ++c) coeffs[c] += s * root_poly[c];
    }
    return coeffs;
}

ModePolynomial make_mode_polynomial(ModeIndex mode, std::vector<double> knots_t,
                                    std::vector<double> values) {
    const int n = static_cast<int>(knots_t.size());
    if (n < 1) throw InputError("fit_mode_polynomial: need at least one knot");
    if (n > kMaxOrder) throw DomainError("fit_mode_polynomial: order above the cap of 16");

    ModePolynomial poly;
    poly.mode = mode;
    poly.knots_t = std::move(knots_t);
    poly.values = std::move(values);
    poly.bary_weights = barycentric_weights(poly.knots_t);
    poly.monomial = to_monomial(poly.knots_t, poly.values, poly.bary_weights);

    // Cross-check the two representations.
    const double scale = std::max(poly.max_abs_value(), 1e-300);
    const double hi = std::max(poly.knots_t.back(), 0.0);
    const double lo = std::min(poly.knots_t.front(), 0.0);
    for (int i = 0; i < 100; ++i) {
        const double t = lo + (hi - lo) * i / 99.0;
        if (std::abs(poly.eval(t) - poly.eval_monomial(t)) > 1e-11 * scale * 100.0) {
            throw NumericError("fit_mode_polynomial: barycentric/monomial forms disagree");
        }
    }
    return poly;
}

} // namespace

ModePolynomial fit_mode_polynomial(ModeIndex mode, const std::vector<double>& knot_radii,
                                   const std::vector<double>& data) {
    if (knot_radii.size() != data.size()) {
        throw InputError("fit_mode_polynomial: knots/data size mismatch");
    }
    std::vector<double> knots_t(knot_radii.size());
    std::vector<double> values(knot_radii.size());
    for (size_t j = 0; j < knot_radii.size(); ++j) {
        const double r = knot_radii[j];
        if (r == 0.0 && mode.k >= 1) {
            throw DomainError("fit_mode_polynomial: zero radius with positive degree");
        }
        knots_t[j] = r * r;
        values[j] = mode.k == 0 ? data[j] : data[j] / std::pow(r, mode.k);
        if (!std::isfinite(values[j])) {
            throw NumericError("fit_mode_polynomial: phi / r^k overflowed");
        }
    }
    return make_mode_polynomial(mode, std::move(knots_t), std::move(values));
}

ModePolynomial fit_mode_polynomial_values(ModeIndex mode, const std::vector<double>& knots_t,
                                          const std::vector<double>& values) {
    if (knots_t.size() != values.size()) {
        throw InputError("fit_mode_polynomial_values: knots/values size mismatch");
    }
    return make_mode_polynomial(mode, knots_t, values);
}

PolyharmonicInterpolant::PolyharmonicInterpolant(int dimension, int order, int k_max, double R,
                                                 std::vector<ModePolynomial> modes,
                                                 std::shared_ptr<const HarmonicBasis> basis)
    : n_(dimension), order_(order), k_max_(k_max), R_(R), modes_(std::move(modes)),
      basis_(std::move(basis)) {
    if (order_ < 1) throw DomainError("PolyharmonicInterpolant: order must be >= 1");
    if (order_ > kMaxOrder) throw DomainError("PolyharmonicInterpolant: order above the cap of 16");
    if (modes_.size() != static_cast<size_t>(total_modes(n_, k_max_))) {
        throw InputError("PolyharmonicInterpolant: incomplete mode set");
    }
    for (const ModePolynomial& m : modes_) {
        if (m.order() > order_) {
            throw InputError("PolyharmonicInterpolant: mode polynomial degree above N-1");
        }
    }
}

const ModePolynomial& PolyharmonicInterpolant::mode(int k, int ell) const {
    return modes_[static_cast<size_t>(mode_offset(n_, k, ell))];
}

double PolyharmonicInterpolant::evaluate(double r, const Vec3& theta) const {
    if (!basis_) throw Error("PolyharmonicInterpolant::evaluate: no basis attached");
    if (r < 0.0 || r > R_ * (1.0 + 1e-12)) {
        throw DomainError("PolyharmonicInterpolant::evaluate: radius outside the ball");
    }
    std::vector<double> y;
    basis_->evaluate_all(theta, y);

    const double t = r * r;
    double acc = 0.0;
    size_t idx = 0;
    double rk = 1.0;
    for (int k = 0; k <= k_max_; ++k) {
        const long long dk = mode_dimension(n_, k);
        for (int ell = 1; ell <= dk; ++ell, ++idx) {
            acc += modes_[idx].eval(t) * rk * y[idx];
        }
        rk *= r;
    }
    return acc;
}

namespace {

std::vector<ModePolynomial> parallel_mode_fit(
    int n, int k_max, int threads,
    const std::function<ModePolynomial(const ModeIndex&)>& fit_one) {
    const std::vector<ModeIndex> modes = mode_list(n, k_max);
    std::vector<ModePolynomial> out(modes.size());
    parallel_for(static_cast<long long>(modes.size()), threads,
                 [&](long long i) { out[static_cast<size_t>(i)] = fit_one(modes[i]); });
    return out;
}

} // namespace

PolyharmonicInterpolant interpolate_general(const std::vector<RadialProfile>& profiles,
                                            const GeneralKnots& knots, int N, int k_max,
                                            std::shared_ptr<const HarmonicBasis> basis, double R,
                                            int threads) {
    if (knots.order() != N) throw InputError("interpolate_general: knot count != N");
    const int n = basis ? basis->dimension() : 3;

    std::map<std::pair<int, int>, const RadialProfile*> by_mode;
    for (const RadialProfile& p : profiles) by_mode[{p.mode.k, p.mode.ell}] = &p;

    auto fit_one = [&](const ModeIndex& m) {
        const auto it = by_mode.find({m.k, m.ell});
        if (it == by_mode.end()) {
            throw InputError("interpolate_general: missing profile for a mode in range");
        }
        const std::vector<double>& radii = knots.radii_for(m);
        if (static_cast<int>(radii.size()) != N) {
            throw InputError("interpolate_general: per-mode knot count != N");
        }
        std::vector<double> knots_t(radii.size()), values(radii.size());
        for (size_t j = 0; j < radii.size(); ++j) {
            knots_t[j] = radii[j] * radii[j];
            values[j] = it->second->profile(knots_t[j]);
        }
        return fit_mode_polynomial_values(m, knots_t, values);
    };
    return PolyharmonicInterpolant(n, N, k_max, R, parallel_mode_fit(n, k_max, threads, fit_one),
                                   std::move(basis));
}

PolyharmonicInterpolant interpolate_spheres(const std::vector<SphereTrace>& traces,
                                            const std::vector<double>& radii, int k_max,
                                            std::shared_ptr<const HarmonicBasis> basis, double R,
                                            int threads) {
    const int N = static_cast<int>(radii.size());
    if (N < 1) throw InputError("interpolate_spheres: need at least one sphere");
    if (traces.size() != radii.size()) {
        throw InputError("interpolate_spheres: traces/radii count mismatch");
    }
    if (!(radii.front() > 0.0)) throw InputError("interpolate_spheres: r_0 must be positive");
    for (size_t j = 1; j < radii.size(); ++j) {
        if (!(radii[j] > radii[j - 1])) {
            throw InputError("interpolate_spheres: radii must be strictly increasing");
        }
    }
    const int n = traces.front().dimension;
    for (const SphereTrace& tr : traces) {
        if (tr.k_max != traces.front().k_max || tr.dimension != n) {
            throw InputError("interpolate_spheres: inconsistent traces (k_max/dimension)");
        }
    }
    if (k_max > traces.front().k_max) {
        throw InputError("interpolate_spheres: k_max above the traces' degree");
    }

    auto fit_one = [&](const ModeIndex& m) {
        std::vector<double> data(radii.size());
        for (size_t j = 0; j < radii.size(); ++j) data[j] = traces[j].at(m.k, m.ell);
        return fit_mode_polynomial(m, radii, data);
    };
    return PolyharmonicInterpolant(n, N, k_max, R, parallel_mode_fit(n, k_max, threads, fit_one),
                                   std::move(basis));
}

SphereL2Error l2_error_on_sphere(const BallFunction& f, const PolyharmonicInterpolant& h, double r,
                                 const QuadratureRule& quad) {
    if (r < 0.0 || r > h.ball_radius() * (1.0 + 1e-12)) {
        throw DomainError("l2_error_on_sphere: radius outside the ball");
    }
    if (!h.basis()) throw Error("l2_error_on_sphere: interpolant has no basis attached");
    const HarmonicBasis& basis = *h.basis();

    SphereL2Error err;

    double acc = 0.0;
    std::vector<double> y;
    const double t = r * r;
    for (size_t i = 0; i < quad.nodes.size(); ++i) {
        const double d = f(r, quad.nodes[i]) - h.evaluate(r, quad.nodes[i]);
        acc += quad.weights[i] * d * d;
    }
    err.by_quadrature = std::sqrt(acc);

    // Parseval form over the trace coefficients resolvable by the basis.
    const SphereTrace trace =
        r > 0.0 ? sphere_trace_coefficients(f, r, basis, quad)
                : SphereTrace{basis.dimension(), 0.0, basis.max_degree(),
                              std::vector<double>(static_cast<size_t>(basis.size()), 0.0)};
    double acc2 = 0.0;
    size_t idx = 0;
    double rk = 1.0;
    for (int k = 0; k <= basis.max_degree(); ++k) {
        const long long dk = mode_dimension(basis.dimension(), k);
        for (int ell = 1; ell <= dk; ++ell, ++idx) {
            double c = trace.coefficients[idx];
            if (r == 0.0 && k == 0) c = f(0.0, {0.0, 0.0, 1.0});
            const double hv = k <= h.max_degree() ? rk * h.mode(k, ell).eval(t) : 0.0;
            const double d = c - hv;
            acc2 += d * d;
        }
        rk *= r;
    }
    err.by_parseval = std::sqrt(acc2);
    return err;
}

BallNorm l2_norm_ball(const PolyharmonicInterpolant& h, bool with_jacobian) {
    BallNorm norm;
    norm.per_degree.assign(static_cast<size_t>(h.max_degree()) + 1, 0.0);

    std::map<int, GaussLegendreRule> rules;
    const double R = h.ball_radius();
    const int n = h.dimension();

    size_t idx = 0;
    for (int k = 0; k <= h.max_degree(); ++k) {
        const long long dk = mode_dimension(n, k);
        double deg_sum = 0.0;
        for (int ell = 1; ell <= dk; ++ell, ++idx) {
            const ModePolynomial& p = h.modes()[idx];
            if (p.max_abs_value() == 0.0) continue;
            // integrand degree in r: 2k + 4(N-1) (+ n-1 with the Jacobian)
            const int deg = 2 * k + 4 * (p.order() - 1) + (with_jacobian ? n - 1 : 0);
            const int pts = deg / 2 + 1;
            auto it = rules.find(pts);
            if (it == rules.end()) it = rules.emplace(pts, gauss_legendre(pts, 0.0, R)).first;
            const GaussLegendreRule& gl = it->second;

            double integral = 0.0;
            for (int i = 0; i < pts; ++i) {
                const double r = gl.nodes[i];
                const double v = p.eval(r * r);
                double w = gl.weights[i] * std::pow(r, 2 * k) * v * v;
                if (with_jacobian) w *= std::pow(r, n - 1);
                integral += w;
            }
            deg_sum += integral;
        }
        norm.per_degree[k] = deg_sum;
        norm.total += deg_sum;
        norm.partial_sums.push_back(norm.total);
    }
    return norm;
}

std::vector<ModeCoefficients> radial_laplacian_power(const PolyharmonicInterpolant& h, int p) {
    if (p < 1) throw DomainError("radial_laplacian_power: p must be >= 1");
    const int n = h.dimension();

    std::vector<ModeCoefficients> out;
    out.reserve(h.modes().size());
    for (const ModePolynomial& mp : h.modes()) {
        const int k = mp.mode.k;
        const double kk = static_cast<double>(k) * (k + n - 2);
        std::vector<double> c = mp.monomial;
        for (int q = 0; q < p; ++q) {
            std::vector<double> next(c.size() > 1 ? c.size() - 1 : 1, 0.0);
            if (c.size() <= 1) {
                // constants are annihilated (r^k Y_{k,l} is harmonic)
                next.assign(1, 0.0);
            } else {
                for (size_t m = 1; m < c.size(); ++m) {
                    const double s = 2.0 * m + k;
                    next[m - 1] = c[m] * (s * (s + n - 2) - kk);
                }
            }
            c = std::move(next);
        }
        out.push_back({mp.mode, std::move(c)});
    }
    return out;
}

double laplacian_certificate(const PolyharmonicInterpolant& h, int p) {
    const std::vector<ModeCoefficients> lap = radial_laplacian_power(h, p);
    double worst = 0.0;
    for (size_t i = 0; i < lap.size(); ++i) {
        double in_mag = 0.0;
        for (double c : h.modes()[i].monomial) in_mag = std::max(in_mag, std::abs(c));
        if (in_mag == 0.0) continue;
        double out_mag = 0.0;
        for (double c : lap[i].monomial) out_mag = std::max(out_mag, std::abs(c));
        worst = std::max(worst, out_mag / in_mag);
    }
    return worst;
}

} // namespace polyharm
