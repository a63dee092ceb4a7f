#include "polyharm/chebyshev.hpp"
#include "polyharm/errors.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace polyharm {

ChebyshevSeries::ChebyshevSeries(double a, double b, std::vector<double> coeffs)
    : a_(a), b_(b), coeffs_(std::move(coeffs)) {
    if (!(a < b)) throw DomainError("ChebyshevSeries: need a < b");
    if (coeffs_.empty()) coeffs_.push_back(0.0);
}

ChebyshevSeries ChebyshevSeries::interpolate(double a, double b, int degree,
                                             const std::function<double(double)>& f) {
    if (degree < 0) throw DomainError("ChebyshevSeries::interpolate: degree must be >= 0");
    const int n = degree + 1;
    std::vector<double> fx(n);
    // Chebyshev points of the second kind x_i = cos(pi i / degree); for
    // degree 0 the single point is the midpoint.
    std::vector<double> xs(n);
    for (int i = 0; i < n; ++i) {
        xs[i] = (degree == 0) ? 0.0 : std::cos(M_PI * i / degree);
        fx[i] = f(0.5 * (a + b) + 0.5 * (b - a) * xs[i]);
    }
    // Discrete cosine transform (type I) for the coefficients.
    std::vector<double> c(n, 0.0);
    if (degree == 0) {
        c[0] = fx[0];
    } else {
        for (int j = 0; j <= degree; ++j) {
            double acc = 0.5 * (fx[0] + (j % 2 == 0 ? fx[degree] : -fx[degree]));
            for (int i = 1; i < degree; ++i) acc += fx[i] * std::cos(M_PI * j * i / degree);
            c[j] = 2.0 * acc / degree;
        }
        c[0] *= 0.5;
        c[degree] *= 0.5;
    }
    return ChebyshevSeries(a, b, std::move(c));
}

ChebyshevSeries ChebyshevSeries::fit(const std::vector<double>& ts, const std::vector<double>& ys,
                                     int degree, double a, double b) {
    if (ts.size() != ys.size()) throw InputError("ChebyshevSeries::fit: size mismatch");
    if (static_cast<int>(ts.size()) < degree + 1) {
        throw InputError("ChebyshevSeries::fit: fewer samples than coefficients");
    }
    const int m = static_cast<int>(ts.size());
    const int n = degree + 1;
    Eigen::MatrixXd A(m, n);
    Eigen::VectorXd rhs(m);
    for (int i = 0; i < m; ++i) {
        const double x = (2.0 * ts[i] - a - b) / (b - a);
        double t0 = 1.0, t1 = x;
        A(i, 0) = 1.0;
        if (n > 1) A(i, 1) = x;
        for (int j = 2; j < n; ++j) {
            const double t2 = 2.0 * x * t1 - t0;
            A(i, j) = t2;
            t0 = t1;
            t1 = t2;
        }
        rhs(i) = ys[i];
    }
    const Eigen::VectorXd sol = A.householderQr().solve(rhs);
    std::vector<double> c(sol.data(), sol.data() + n);
    return ChebyshevSeries(a, b, std::move(c));
}

double ChebyshevSeries::operator()(double t) const {
    const double x = (2.0 * t - a_ - b_) / (b_ - a_);
    double b1 = 0.0, b2 = 0.0;
    for (int j = static_cast<int>(coeffs_.size()) - 1; j >= 1; --j) {
        const double tmp = 2.0 * x * b1 - b2 + coeffs_[j];
        b2 = b1;
        b1 = tmp;
    }
    return x * b1 - b2 + coeffs_[0];
}

ChebyshevSeries ChebyshevSeries::derivative() const {
    const int n = static_cast<int>(coeffs_.size());
    std::vector<double> d(std::max(1, n - 1), 0.0);
    if (n > 1) {
        // Standard recurrence d_{j-1} = d_{j+1} + 2 j c_j on [-1, 1].
        std::vector<double> w(n + 1, 0.0);
        for (int j = n - 1; j >= 1; --j) w[j - 1] = w[j + 1] + 2.0 * j * coeffs_[j];
        w[0] *= 0.5;
        const double scale = 2.0 / (b_ - a_);
        for (int j = 0; j < n - 1; ++j) d[j] = scale * w[j];
    }
    return ChebyshevSeries(a_, b_, std::move(d));
}

ChebyshevSeries ChebyshevSeries::derivative(int order) const {
    if (order < 0) throw DomainError("ChebyshevSeries::derivative: negative order");
    ChebyshevSeries d = *this;
    for (int i = 0; i < order; ++i) d = d.derivative();
    return d;
}

double ChebyshevSeries::sup_abs(double lo, double hi, int samples) const {
    double best = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double t = lo + (hi - lo) * i / (samples - 1);
        best = std::max(best, std::abs((*this)(t)));
    }
    return best;
}

} // namespace polyharm
