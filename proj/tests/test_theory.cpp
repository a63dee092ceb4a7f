#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyharm/errors.hpp"
#include "polyharm/harmonics.hpp"
#include "polyharm/interp.hpp"
#include "polyharm/theory.hpp"

#include <cmath>
#include <memory>
#include <vector>

using namespace polyharm;

namespace {

// Minimal constant setup: f = 1 interpolated on one sphere.
struct ConstantCase {
    std::shared_ptr<HarmonicBasis> basis = std::make_shared<HarmonicBasis>(3, 2);
    QuadratureRule quad = build_quadrature(3, 4);
    BallFunction f{3, 1.0, [](const Vec3&) { return 1.0; }};
    PolyharmonicInterpolant h;

    ConstantCase()
        : h(interpolate_spheres(sphere_traces(f, {0.5, 1.0}, *basis, quad), {0.5, 1.0}, 2, basis,
                                1.0)) {}
};

} // namespace

TEST_CASE("error bound shape") {
    CHECK(theorem1_bound(1.0, 2, 0.0) == 0.0);
    CHECK(theorem1_bound(1.0, 2, 0.5) == doctest::Approx(0.125).epsilon(1e-15)); // 0.5^3
    CHECK(theorem1_bound(2.0, 1, 0.3) == doctest::Approx(4.0 * 0.09).epsilon(1e-15));
    // below the threshold the shape decreases in N
    double prev = 1.0;
    for (int N = 1; N <= 8; ++N) {
        const double b = theorem1_bound(0.9, N, 0.8);
        CHECK(b < prev);
        prev = b;
    }
    CHECK_THROWS_AS(theorem1_bound(1.0, 2, -0.1), DomainError);
}

TEST_CASE("smoothness condition flips exactly at product 1") {
    ConstantCase c;
    const double R = 1.0;
    for (double value : {1.0 - 1e-9, 1.0 + 1e-9}) {
        SeminormEstimate sem;
        sem.order = 2;
        sem.value = value / R;
        const Theorem1Report rep = check_theorem1(R, 2, sem, c.h, c.f, {0.5}, c.quad);
        CHECK(rep.satisfied == (value < 1.0));
        CHECK(rep.product == doctest::Approx(value).epsilon(1e-14));
    }
}

TEST_CASE("zero seminorm gives a zero bound and infinite empirical constant") {
    ConstantCase c;
    SeminormEstimate sem;
    sem.order = 2;
    sem.value = 0.0;
    const Theorem1Report rep = check_theorem1(1.0, 2, sem, c.h, c.f, {0.3, 0.8}, c.quad);
    CHECK(rep.satisfied);
    CHECK(rep.bound_shape == 0.0);
    CHECK(rep.max_error < 1e-12); // constant is reproduced exactly
    CHECK(std::isinf(rep.empirical_constant));
    CHECK(rep.measured_errors.size() == 2);
}

TEST_CASE("seminorm order mismatch is rejected") {
    ConstantCase c;
    SeminormEstimate sem;
    sem.order = 3;
    CHECK_THROWS_AS(check_theorem1(1.0, 2, sem, c.h, c.f, {0.5}, c.quad), InputError);
}

TEST_CASE("geometric traces make every sphere ratio equal to C") {
    const std::vector<double> radii = {0.5, 0.75, 1.0};
    for (double C : {0.5, 1.5}) {
        const auto traces = geometric_traces(C, radii, 40, 3);
        const Theorem2Report rep = check_theorem2(1.0, traces, radii);
        REQUIRE(rep.ratios.size() == 3);
        for (double ratio : rep.ratios) CHECK(ratio == doctest::Approx(C).epsilon(1e-6));
        CHECK(rep.M == doctest::Approx(C).epsilon(1e-6));
        CHECK(rep.satisfied == (C < 1.0));
        // delta is the smallest squared-radius gap: 0.75^2 - 0.5^2 = 0.3125
        CHECK(rep.delta == doctest::Approx(0.3125).epsilon(1e-14));
    }
}

TEST_CASE("satisfied geometric case has a contracting norm tail") {
    const std::vector<double> radii = {0.5, 0.75, 1.0};
    const auto traces = geometric_traces(0.5, radii, 60, 3);
    const Theorem2Report rep = check_theorem2(1.0, traces, radii);
    CHECK(rep.satisfied);
    // increments shrink roughly by (C*R)^2 = 0.25 per degree
    CHECK(rep.tail_ratio == doctest::Approx(0.25).epsilon(0.05));
    const size_t last = rep.partial_sums.size() - 1;
    CHECK(rep.partial_sums[last] - rep.partial_sums[last - 10] < 1e-6 * rep.partial_sums[last]);
}

TEST_CASE("constant function hits the flat-spectrum sentinel and passes trivially") {
    auto basis = std::make_shared<HarmonicBasis>(3, 12);
    const QuadratureRule quad = build_quadrature(3, 24);
    const BallFunction one{3, 1.0, [](const Vec3&) { return 1.0; }};
    const std::vector<double> radii = {0.4, 0.7, 1.0};
    const auto traces = sphere_traces(one, radii, *basis, quad);
    const Theorem2Report rep = check_theorem2(1.0, traces, radii);
    CHECK(rep.satisfied);
    CHECK(rep.M == 0.0);
    for (double eta : rep.etas) CHECK(std::isinf(eta));
}

TEST_CASE("divergence demo matches the closed-form mode integrals") {
    const int N = 3, k_max = 120;
    const std::vector<double> radii = {0.5, 0.75, 1.0};
    for (double CR : {0.8, 1.2}) {
        const DivergenceDemo demo = divergence_demo(CR, 1.0, N, radii, k_max, 3);
        REQUIRE(demo.increments.size() == static_cast<size_t>(k_max) + 1);
        for (int k = 0; k <= k_max; ++k) {
            const double want = std::pow(CR, 2.0 * k) / (2.0 * k + 1.0);
            CHECK(demo.mode_integrals[static_cast<size_t>(k)] ==
                  doctest::Approx(want).epsilon(1e-10));
            // single populated mode per degree: the increment is the integral
            CHECK(demo.increments[static_cast<size_t>(k)] ==
                  doctest::Approx(want).epsilon(1e-10));
        }
    }
}

TEST_CASE("closed form carries the degree-count weight") {
    const DivergenceDemo demo = divergence_demo(1.2, 1.0, 2, {0.6, 1.0}, 10, 3);
    for (int k = 1; k <= 10; ++k) {
        CHECK(demo.closed_form[static_cast<size_t>(k)] ==
              doctest::Approx(k * demo.mode_integrals[static_cast<size_t>(k)]).epsilon(1e-14));
    }
    // with every order populated, the increment picks up d_k = 2k+1 modes
    const DivergenceDemo all = divergence_demo(1.2, 1.0, 2, {0.6, 1.0}, 10, 3, true);
    for (int k = 0; k <= 10; ++k) {
        CHECK(all.increments[static_cast<size_t>(k)] ==
              doctest::Approx((2 * k + 1) * all.mode_integrals[static_cast<size_t>(k)])
                  .epsilon(1e-10));
    }
}

TEST_CASE("partial sums diverge above the threshold and converge below") {
    const std::vector<double> radii = {0.5, 0.75, 1.0};

    const DivergenceDemo hot = divergence_demo(1.2, 1.0, 3, radii, 200, 3);
    CHECK(hot.verdict == DivergenceDemo::Verdict::diverging);
    CHECK(hot.partial_sums.back() > 1e6 * hot.partial_sums.front());
    for (size_t k = 31; k < hot.increments.size(); ++k) {
        CHECK(hot.increments[k] > hot.increments[k - 1]);
    }

    const DivergenceDemo cool = divergence_demo(0.8, 1.0, 3, radii, 200, 3);
    CHECK(cool.verdict == DivergenceDemo::Verdict::converging);
    CHECK(cool.tail_ratio == doctest::Approx(0.64).epsilon(0.08));
    const size_t last = cool.partial_sums.size() - 1;
    CHECK(std::abs(cool.partial_sums[last] - cool.partial_sums[last - 50]) < 1e-6);
}

TEST_CASE("degree-zero-only series is the plain radius integral") {
    const DivergenceDemo demo = divergence_demo(0.5, 1.0, 1, {1.0}, 0, 3);
    REQUIRE(demo.partial_sums.size() == 1);
    CHECK(demo.partial_sums[0] == doctest::Approx(1.0).epsilon(1e-14)); // int_0^1 dr
}

TEST_CASE("boundary and input errors") {
    CHECK_THROWS_AS(divergence_demo(1.0, 1.0, 2, {0.5, 1.0}, 10, 3), BoundaryCaseError);
    CHECK_THROWS_AS(divergence_demo(2.0, 0.5, 2, {0.25, 0.5}, 10, 3), BoundaryCaseError);
    CHECK_THROWS_AS(divergence_demo(-1.0, 1.0, 2, {0.5, 1.0}, 10, 3), DomainError);
    CHECK_THROWS_AS(divergence_demo(1.2, 1.0, 3, {0.5, 1.0}, 10, 3), InputError); // N mismatch
    CHECK_THROWS_AS(check_theorem2(1.0, {}, {}), InputError);
}
