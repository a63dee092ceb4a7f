#include "polyharm/harmonics.hpp"
#include "polyharm/errors.hpp"
#include "polyharm/gauss_legendre.hpp"

#include <cmath>

namespace polyharm {

namespace {

void check_dimension(int n) {
    if (n != 2 && n != 3) {
        throw DomainError("harmonics: only dimensions n = 2 and n = 3 are supported");
    }
}

// Seminormalized associated Legendre values Pbar_l^m(c) for all l <= k_max,
// normalized so that int_{-1}^{1} Pbar^2 dx = 2.  Output indexed [l * (k_max+1) + m].
void legendre_table(int k_max, double c, double s, std::vector<double>& p) {
    const int stride = k_max + 1;
    p.assign(static_cast<size_t>(stride) * stride, 0.0);
    double pmm = 1.0; // Pbar_m^m
    for (int m = 0; m <= k_max; ++m) {
        p[static_cast<size_t>(m) * stride + m] = pmm;
        if (m + 1 <= k_max) {
            p[static_cast<size_t>(m + 1) * stride + m] = std::sqrt(2.0 * m + 3.0) * c * pmm;
        }
        for (int l = m + 2; l <= k_max; ++l) {
            const double a =
                std::sqrt((4.0 * l * l - 1.0) / (static_cast<double>(l - m) * (l + m)));
            const double b = std::sqrt((2.0 * l + 1.0) * (l - 1.0 - m) * (l - 1.0 + m) /
                                       ((2.0 * l - 3.0) * (l - m) * (l + m)));
            p[static_cast<size_t>(l) * stride + m] =
                a * c * p[static_cast<size_t>(l - 1) * stride + m] -
                b * p[static_cast<size_t>(l - 2) * stride + m];
        }
        pmm *= std::sqrt((2.0 * m + 3.0) / (2.0 * m + 2.0)) * s;
    }
}

} // namespace

HarmonicBasis::HarmonicBasis(int n, int k_max) : n_(n), k_max_(k_max) {
    check_dimension(n);
    if (k_max < 0) throw DomainError("HarmonicBasis: k_max must be >= 0");
    n_modes_ = total_modes(n, k_max);
}

void HarmonicBasis::evaluate_all(const Vec3& theta, std::vector<double>& out) const {
    out.assign(static_cast<size_t>(n_modes_), 0.0);
    const double sqrt2 = std::sqrt(2.0);

    if (n_ == 2) {
        // cos(k phi), sin(k phi) by the Chebyshev angle-addition recurrence.
        const double c1 = theta[0], s1 = theta[1];
        out[0] = 1.0;
        double cm1 = 1.0, sm1 = 0.0; // cos/sin of (k-1) phi
        double cm = c1, sm = s1;
        for (int k = 1; k <= k_max_; ++k) {
            out[static_cast<size_t>(2 * k - 1)] = sqrt2 * cm;
            out[static_cast<size_t>(2 * k)] = sqrt2 * sm;
            const double cn = 2.0 * c1 * cm - cm1;
            const double sn = 2.0 * c1 * sm - sm1;
            cm1 = cm;
            sm1 = sm;
            cm = cn;
            sm = sn;
        }
        return;
    }

    // n == 3
    const double c = theta[2];
    const double s = std::hypot(theta[0], theta[1]);
    double cphi = 1.0, sphi = 0.0;
    if (s > 0.0) {
        cphi = theta[0] / s;
        sphi = theta[1] / s;
    }

    std::vector<double> p;
    legendre_table(k_max_, c, s, p);
    const int stride = k_max_ + 1;

    // cos(m phi), sin(m phi) tables.
    std::vector<double> cm(static_cast<size_t>(k_max_) + 1), sm(static_cast<size_t>(k_max_) + 1);
    cm[0] = 1.0;
    sm[0] = 0.0;
    if (k_max_ >= 1) {
        cm[1] = cphi;
        sm[1] = sphi;
        for (int m = 2; m <= k_max_; ++m) {
            cm[m] = 2.0 * cphi * cm[m - 1] - cm[m - 2];
            sm[m] = 2.0 * cphi * sm[m - 1] - sm[m - 2];
        }
    }

    for (int k = 0; k <= k_max_; ++k) {
        const size_t base = static_cast<size_t>(k) * k; // sum of d_j, j < k
        out[base] = p[static_cast<size_t>(k) * stride]; // zonal, ell = 1
        for (int m = 1; m <= k; ++m) {
            const double pkm = p[static_cast<size_t>(k) * stride + m];
            out[base + static_cast<size_t>(2 * m - 1)] = sqrt2 * pkm * cm[m];
            out[base + static_cast<size_t>(2 * m)] = sqrt2 * pkm * sm[m];
        }
    }
}

double HarmonicBasis::evaluate(ModeIndex mode, const Vec3& theta) const {
    if (mode.k > k_max_) throw DomainError("HarmonicBasis::evaluate: degree above k_max");
    std::vector<double> all;
    evaluate_all(theta, all);
    return all[static_cast<size_t>(mode_offset(n_, mode.k, mode.ell))];
}

HarmonicBasis build_basis(int n, int k_max) { return HarmonicBasis(n, k_max); }

QuadratureRule build_quadrature(int n, int exactness_degree) {
    check_dimension(n);
    if (exactness_degree < 0) throw DomainError("build_quadrature: exactness must be >= 0");

    QuadratureRule rule;
    rule.dimension = n;
    rule.exactness_degree = exactness_degree;

    if (n == 2) {
        const int m = exactness_degree + 2;
        rule.nodes.reserve(m);
        rule.weights.assign(m, 1.0 / m);
        for (int j = 0; j < m; ++j) {
            const double phi = 2.0 * M_PI * j / m;
            rule.nodes.push_back({std::cos(phi), std::sin(phi), 0.0});
        }
        return rule;
    }

    // n == 3: Gauss-Legendre in cos(polar) x equispaced azimuth.  A product
    // of two harmonics with k + k' <= exactness has azimuthal frequencies
    // <= exactness and polar degree <= exactness in cos(theta).
    const int n_polar = exactness_degree / 2 + 1;
    const int n_azim = exactness_degree + 2;
    const GaussLegendreRule gl = gauss_legendre(n_polar);
    rule.nodes.reserve(static_cast<size_t>(n_polar) * n_azim);
    rule.weights.reserve(static_cast<size_t>(n_polar) * n_azim);
    for (int i = 0; i < n_polar; ++i) {
        const double ct = gl.nodes[i];
        const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
        const double w = gl.weights[i] / (2.0 * n_azim);
        for (int j = 0; j < n_azim; ++j) {
            const double phi = 2.0 * M_PI * j / n_azim;
            rule.nodes.push_back({st * std::cos(phi), st * std::sin(phi), ct});
            rule.weights.push_back(w);
        }
    }
    return rule;
}

} // namespace polyharm
