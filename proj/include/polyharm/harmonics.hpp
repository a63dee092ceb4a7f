#ifndef POLYHARM_HARMONICS_HPP
#define POLYHARM_HARMONICS_HPP

#include "polyharm/modes.hpp"

#include <array>
#include <vector>

namespace polyharm {

using Vec3 = std::array<double, 3>;

// Quadrature on S^{n-1} for the normalized scalar product
// (1/omega_{n-1}) int u v dtheta; weights sum to 1.
struct QuadratureRule {
    int dimension = 3;
    std::vector<Vec3> nodes;
    std::vector<double> weights;
    int exactness_degree = 0;
};

// Real spherical harmonics on S^{n-1}, n in {2,3}, orthonormal under the
// normalized scalar product: (1/omega) int Y^2 = 1.
//
// n = 2: Y_{0,1} = 1, Y_{k,1} = sqrt(2) cos(k phi), Y_{k,2} = sqrt(2) sin(k phi).
// n = 3: ell = 1 is the zonal (m = 0) harmonic; ell = 2m, 2m+1 are the
//        cos(m phi) and sin(m phi) harmonics.  Built by the seminormalized
//        associated-Legendre recurrence (stable through k ~ 64 and beyond).
class HarmonicBasis {
  public:
    HarmonicBasis(int n, int k_max);

    int dimension() const { return n_; }
    int max_degree() const { return k_max_; }
    long long size() const { return n_modes_; }

    double evaluate(ModeIndex mode, const Vec3& theta) const;

    // All Y_{k,ell}(theta) for k <= k_max in flattened ascending (k, ell)
    // order.  out is resized to size().
    void evaluate_all(const Vec3& theta, std::vector<double>& out) const;

  private:
    int n_;
    int k_max_;
    long long n_modes_;
};

// Default cap on the basis degree; the Legendre recurrence is comfortably
// stable there in double precision.
inline constexpr int kDefaultMaxDegree = 64;

HarmonicBasis build_basis(int n, int k_max);

// n = 2: equispaced angles with equal weights.  n = 3: Gauss-Legendre in
// cos(polar) x equispaced azimuth, sized so all products of harmonics with
// k + k' <= exactness_degree are integrated exactly.
QuadratureRule build_quadrature(int n, int exactness_degree);

// Sum_i w_i u(theta_i) v(theta_i), in node order.
template <typename U, typename V>
double inner_product(U&& u, V&& v, const QuadratureRule& q) {
    double acc = 0.0;
    for (size_t i = 0; i < q.nodes.size(); ++i) {
        acc += q.weights[i] * u(q.nodes[i]) * v(q.nodes[i]);
    }
    return acc;
}

} // namespace polyharm

#endif
