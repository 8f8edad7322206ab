#include <doctest.h>

#include <atomic>
#include <cmath>
#include <random>

#include "weylab/errors.hpp"
#include "weylab/numerics.hpp"

using namespace weylab;

TEST_SUITE("numerics") {
    TEST_CASE("gamma function matches the standard library on (0, 50]") {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> u(0.01, 50.0);
        for (int i = 0; i < 500; ++i) {
            const double x = u(rng);
            CHECK(gamma_fn(x) == doctest::Approx(std::tgamma(x)).epsilon(1e-12));
            CHECK(log_gamma_fn(x) == doctest::Approx(std::lgamma(x)).epsilon(1e-12));
        }
        CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-14));
    }

    TEST_CASE("Gauss-Legendre rule integrates polynomials of degree 2n-1 exactly") {
        std::vector<double> x, w;
        gauss_legendre(10, x, w);
        for (int p = 0; p < 20; ++p) {
            double s = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * std::pow(x[i], p);
            const double exact = p % 2 == 1 ? 0.0 : 2.0 / (p + 1);
            CHECK(s == doctest::Approx(exact).epsilon(1e-14).scale(1.0));
        }
    }

    TEST_CASE("adaptive quadrature handles kinks at breakpoints and reports failure") {
        const double v = integrate([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0, 1e-14, 1e-14, {0.3}).value;
        CHECK(v == doctest::Approx(0.5 * (0.09 + 0.49)).epsilon(1e-13));
        const double s = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-10, 1e-10).value;
        CHECK(s == doctest::Approx(2.0).epsilon(1e-8));
        CHECK_THROWS_AS(integrate([](double x) { return std::sin(1.0 / x); }, 0.0, 1.0, 1e-15, 1e-15, {}, 6), Error);
    }

    TEST_CASE("least squares recovers an exact line") {
        std::vector<double> x{1, 2, 3, 4}, y{3, 5, 7, 9};
        const LinearFit f = least_squares_line(x, y);
        CHECK(f.slope == doctest::Approx(2.0));
        CHECK(f.intercept == doctest::Approx(1.0));
    }

    TEST_CASE("grids and parallel_for") {
        const auto g = log_space(1.0, 100.0, 3);
        CHECK(g[1] == doctest::Approx(10.0));
        CHECK(lin_space(0.0, 1.0, 5)[2] == doctest::Approx(0.5));
        std::atomic<int> sum{0};
        parallel_for(1000, [&](std::size_t i) { sum += static_cast<int>(i); });
        CHECK(sum == 999 * 1000 / 2);
        CHECK_THROWS(parallel_for(10, [](std::size_t i) {
            if (i == 3) throw std::runtime_error("boom");
        }));
    }
}
