#ifndef POLYHARM_CHEBYSHEV_HPP
#define POLYHARM_CHEBYSHEV_HPP

#include <functional>
#include <vector>

namespace polyharm {

// Chebyshev series sum_j c_j T_j(x) on an interval [a, b].  Being a global
// polynomial, it evaluates anywhere; evaluation outside [a, b] is
// polynomial extrapolation.
class ChebyshevSeries {
  public:
    ChebyshevSeries(double a, double b, std::vector<double> coeffs);

    // Interpolation at degree+1 Chebyshev points of the second kind.
    static ChebyshevSeries interpolate(double a, double b, int degree,
                                       const std::function<double(double)>& f);

    // Least-squares fit of degree `degree` through arbitrary samples
    // (ts[i], ys[i]); requires at least degree+1 samples.
    static ChebyshevSeries fit(const std::vector<double>& ts, const std::vector<double>& ys,
                               int degree, double a, double b);

    double operator()(double t) const; // Clenshaw
    ChebyshevSeries derivative() const;
    ChebyshevSeries derivative(int order) const;

    // max |p(t)| over a uniform grid on [lo, hi].
    double sup_abs(double lo, double hi, int samples = 2001) const;

    double lower() const { return a_; }
    double upper() const { return b_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<double>& coefficients() const { return coeffs_; }

  private:
    double a_, b_;
    std::vector<double> coeffs_;
};

} // namespace polyharm

#endif
