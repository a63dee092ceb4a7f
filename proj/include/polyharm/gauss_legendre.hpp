#ifndef POLYHARM_GAUSS_LEGENDRE_HPP
#define POLYHARM_GAUSS_LEGENDRE_HPP

#include <vector>

namespace polyharm {

struct GaussLegendreRule {
    std::vector<double> nodes;   // ascending, in (-1, 1)
    std::vector<double> weights; // sum to 2
};

// n-point Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree
// <= 2n-1.  Nodes found by Newton iteration on the Legendre recurrence.
GaussLegendreRule gauss_legendre(int n);

// The same rule mapped to [a, b] (weights sum to b - a).
GaussLegendreRule gauss_legendre(int n, double a, double b);

} // namespace polyharm

#endif
