#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyharm/errors.hpp"
#include "polyharm/gauss_legendre.hpp"
#include "polyharm/harmonics.hpp"

#include <cmath>
#include <vector>

using namespace polyharm;

TEST_CASE("gauss-legendre integrates polynomials exactly") {
    const GaussLegendreRule gl = gauss_legendre(6);
    double sum_w = 0.0, x10 = 0.0;
    for (int i = 0; i < 6; ++i) {
        sum_w += gl.weights[i];
        x10 += gl.weights[i] * std::pow(gl.nodes[i], 10);
    }
    CHECK(sum_w == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(x10 == doctest::Approx(2.0 / 11.0).epsilon(1e-13)); // degree 10 <= 2*6-1
}

TEST_CASE("quadrature rules are normalized and on the sphere") {
    for (int n : {2, 3}) {
        const QuadratureRule q = build_quadrature(n, 12);
        double sum = 0.0;
        for (size_t i = 0; i < q.nodes.size(); ++i) {
            const Vec3& p = q.nodes[i];
            const double norm = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
            CHECK(std::abs(norm - 1.0) < 1e-14);
            sum += q.weights[i];
        }
        CHECK(std::abs(sum - 1.0) < 1e-14);
    }
}

TEST_CASE("n=2 rule at exactness 2 has four equal-weight nodes") {
    const QuadratureRule q = build_quadrature(2, 2);
    REQUIRE(q.nodes.size() == 4);
    for (double w : q.weights) CHECK(w == doctest::Approx(0.25));
    // (1/2pi) int cos^2 = 1/2 discretely
    const double v = inner_product([](const Vec3& p) { return p[0]; },
                                   [](const Vec3& p) { return p[0]; }, q);
    CHECK(v == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("constant mode is 1 and normalized") {
    for (int n : {2, 3}) {
        const HarmonicBasis basis(n, 4);
        const QuadratureRule q = build_quadrature(n, 8);
        for (const Vec3& node : q.nodes) {
            CHECK(basis.evaluate({0, 1}, node) == doctest::Approx(1.0));
        }
    }
}

TEST_CASE("n=2 basis is the normalized Fourier basis") {
    const HarmonicBasis basis(2, 5);
    const double phi = 0.7;
    const Vec3 p = {std::cos(phi), std::sin(phi), 0.0};
    for (int k = 1; k <= 5; ++k) {
        CHECK(basis.evaluate({k, 1}, p) == doctest::Approx(std::sqrt(2.0) * std::cos(k * phi)));
        CHECK(basis.evaluate({k, 2}, p) == doctest::Approx(std::sqrt(2.0) * std::sin(k * phi)));
    }
}

TEST_CASE("n=3 degree-1 harmonics are sqrt(3) x_i / r") {
    const HarmonicBasis basis(3, 2);
    const Vec3 p = {0.36, -0.48, 0.8};
    CHECK(basis.evaluate({1, 1}, p) == doctest::Approx(std::sqrt(3.0) * p[2]));
    CHECK(basis.evaluate({1, 2}, p) == doctest::Approx(std::sqrt(3.0) * p[0]));
    CHECK(basis.evaluate({1, 3}, p) == doctest::Approx(std::sqrt(3.0) * p[1]));
}

TEST_CASE("Gram matrix is the identity under the rule") {
    for (int n : {2, 3}) {
        const int k_max = 8;
        const HarmonicBasis basis(n, k_max);
        const QuadratureRule q = build_quadrature(n, 2 * k_max);

        const size_t m = static_cast<size_t>(basis.size());
        std::vector<double> gram(m * m, 0.0);
        std::vector<double> y;
        for (size_t i = 0; i < q.nodes.size(); ++i) {
            basis.evaluate_all(q.nodes[i], y);
            for (size_t a = 0; a < m; ++a) {
                for (size_t b = a; b < m; ++b) {
                    gram[a * m + b] += q.weights[i] * y[a] * y[b];
                }
            }
        }
        double worst = 0.0;
        for (size_t a = 0; a < m; ++a) {
            for (size_t b = a; b < m; ++b) {
                const double target = a == b ? 1.0 : 0.0;
                worst = std::max(worst, std::abs(gram[a * m + b] - target));
            }
        }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("inner product examples") {
    const HarmonicBasis basis(3, 6);
    const QuadratureRule q = build_quadrature(3, 12);
    auto Y = [&](ModeIndex m) {
        return [&basis, m](const Vec3& p) { return basis.evaluate(m, p); };
    };
    CHECK(inner_product(Y({3, 2}), Y({3, 2}), q) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(inner_product(Y({3, 2}), Y({4, 1}), q)) < 1e-10);
    CHECK(std::abs(inner_product(Y({2, 1}), Y({2, 3}), q)) < 1e-10);
    CHECK(inner_product([](const Vec3&) { return 1.0; }, [](const Vec3&) { return 1.0; }, q) ==
          doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("radial Laplacian factor vanishes at s = k") {
    for (int n : {2, 3}) {
        for (int k = 0; k <= 10; ++k) {
            const double s = k;
            CHECK(s * (s + n - 2) - k * (k + n - 2) == 0.0);
        }
    }
}

TEST_CASE("unsupported dimensions are rejected") {
    CHECK_THROWS_AS(build_basis(4, 3), DomainError);
    CHECK_THROWS_AS(build_quadrature(1, 3), DomainError);
}
