#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyharm/chebyshev.hpp"
#include "polyharm/errors.hpp"

#include <cmath>

using namespace polyharm;

TEST_CASE("interpolation of exp on [0,1]") {
    const auto fit = ChebyshevSeries::interpolate(0.0, 1.0, 20,
                                                  [](double t) { return std::exp(-t); });
    for (int i = 0; i <= 100; ++i) {
        const double t = i / 100.0;
        CHECK(fit(t) == doctest::Approx(std::exp(-t)).epsilon(1e-13));
    }
}

TEST_CASE("least-squares fit reproduces polynomial data exactly") {
    std::vector<double> ts, ys;
    for (int i = 0; i < 40; ++i) {
        const double t = 0.1 + 0.9 * i / 39.0;
        ts.push_back(t);
        ys.push_back(3.0 - 2.0 * t + 0.5 * t * t);
    }
    const auto fit = ChebyshevSeries::fit(ts, ys, 8, 0.1, 1.0);
    for (double t : {0.0, 0.15, 0.5, 1.0}) { // includes extrapolation to 0
        CHECK(fit(t) == doctest::Approx(3.0 - 2.0 * t + 0.5 * t * t).epsilon(1e-12));
    }
}

TEST_CASE("derivative recurrence against closed forms") {
    const double c = 1.7;
    const auto fit = ChebyshevSeries::interpolate(0.0, 2.0, 30,
                                                  [c](double t) { return std::exp(c * t); });
    const auto d3 = fit.derivative(3);
    for (double t : {0.0, 0.4, 1.3, 2.0}) {
        CHECK(d3(t) == doctest::Approx(c * c * c * std::exp(c * t)).epsilon(1e-7));
    }

    // derivative of a quadratic is exact
    const auto quad = ChebyshevSeries::fit({0.0, 0.5, 1.0, 1.5, 2.0},
                                           {0.0, 0.25, 1.0, 2.25, 4.0}, 3, 0.0, 2.0);
    const auto d1 = quad.derivative();
    CHECK(d1(0.7) == doctest::Approx(1.4).epsilon(1e-12));
}

TEST_CASE("sup_abs scans the requested window") {
    const ChebyshevSeries line(0.0, 1.0, {0.0, 1.0}); // x on [-1,1] -> 2t-1
    CHECK(line.sup_abs(0.0, 1.0) == doctest::Approx(1.0));
    CHECK(line.sup_abs(0.5, 1.0) == doctest::Approx(1.0));
}

TEST_CASE("argument checking") {
    CHECK_THROWS_AS(ChebyshevSeries(1.0, 1.0, {1.0}), DomainError);
    CHECK_THROWS_AS(ChebyshevSeries::fit({0.0, 1.0}, {1.0, 2.0}, 4, 0.0, 1.0), InputError);
}
