#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <random>

#include "weylab/errors.hpp"
#include "weylab/numerics.hpp"
#include "weylab/riesz_calculus.hpp"

using namespace weylab;

namespace {

constexpr double pi = 3.14159265358979323846;

SampledFunction random_step(std::mt19937_64& rng, int cells, double lmax) {
    std::uniform_real_distribution<double> u(-1, 1), w(0.2, 1.8);
    std::vector<double> grid{0.0};
    for (int i = 1; i < cells; ++i) grid.push_back(grid.back() + w(rng) * lmax / cells);
    std::vector<double> v;
    for (int i = 0; i < cells; ++i) v.push_back(u(rng));
    return SampledFunction(grid, v);
}

// Lift by adaptive quadrature after the substitution u = (x - mu)^kappa, which removes the kernel singularity.
double lift_oracle(const SampledFunction& f, double kappa, double x) {
    std::vector<double> bps;
    for (double g : f.grid())
        if (g > 0 && g < x) bps.push_back(std::pow(x - g, kappa));
    std::sort(bps.begin(), bps.end());
    const double top = std::pow(x, kappa);
    const double v = integrate([&](double u) { return f.evaluate(x - std::pow(u, 1 / kappa)); }, 0, top, 1e-13, 1e-12, bps).value;
    return v / std::tgamma(kappa + 1);
}

}  // namespace

TEST_SUITE("riesz_calculus") {
    TEST_CASE("lifts of constants and the identity") {
        const auto grid = lin_space(0, 10, 41);
        const SampledFunction one(grid, std::vector<double>(grid.size(), 1.0));
        const SampledFunction id(grid, grid, Interpolation::PiecewiseLinear);
        for (double k : {0.3, 0.5, 1.0, 2.7}) {
            const SampledFunction a = riesz_lift(one, k), b = riesz_lift(id, k);
            CHECK(a.lift_order() == k);
            for (double x : {0.5, 3.3, 10.0}) {
                CHECK(a.evaluate(x) == doctest::Approx(std::pow(x, k) / std::tgamma(k + 1)).epsilon(1e-12));
                CHECK(b.evaluate(x) == doctest::Approx(std::pow(x, k + 1) / std::tgamma(k + 2)).epsilon(1e-12));
            }
        }
        CHECK_THROWS_AS(riesz_lift(one, 0.0), Error);
        CHECK_THROWS_AS(riesz_lift(one, -1.0), Error);
        CHECK_THROWS_AS(SampledFunction({0.1, 1.0}, {1, 2}), Error);
        CHECK_THROWS_AS(SampledFunction({0.0, 1.0, 1.0}, {1, 2, 3}), Error);
    }

    TEST_CASE("lift of the counting function is the Riesz mean") {
        const Spectrum d = rectangle_spectrum(1, 1, BoundaryCondition::Dirichlet, 100);
        const SampledFunction n = counting_function_sampled(d, 100);
        CHECK(riesz_lift(n, 1.0).evaluate(30) == doctest::Approx(30 - 2 * pi * pi).epsilon(1e-12));
        for (double lam : {25.0, 60.0, 99.0})
            for (double g : {1.0, 2.0, 0.5})
                CHECK(std::tgamma(g + 1) * riesz_lift(n, g).evaluate(lam) == doctest::Approx(riesz_mean(d, lam, g)).epsilon(1e-11));
        CHECK_THROWS_AS(counting_function_sampled(d, 101), Error);
    }

    TEST_CASE("lifts agree with a quadrature oracle") {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 10; ++trial) {
            const SampledFunction f = random_step(rng, 12, 5.0);
            for (double k : {0.25, 0.8, 1.7}) {
                const SampledFunction l = riesz_lift(f, k);
                for (double x : {0.7, 2.2, 4.9}) CHECK(l.evaluate(x) == doctest::Approx(lift_oracle(f, k, x)).epsilon(1e-9).scale(1.0));
            }
        }
    }

    TEST_CASE("semigroup law") {
        const auto grid = lin_space(0, 1, 2048);
        const SampledFunction one(grid, std::vector<double>(grid.size(), 1.0));
        CHECK(semigroup_check(one, 0.5, 0.5) < 1e-8);
        std::mt19937_64 rng(9);
        for (int i = 0; i < 10; ++i) CHECK(semigroup_check(random_step(rng, 30, 3.0), 0.3, 0.7) < 1e-6);
        CHECK_THROWS_AS(semigroup_check(one, 0.5, 0.0), Error);
    }

    TEST_CASE("lift properties: linearity, positivity, monotonicity") {
        std::mt19937_64 rng(21);
        const SampledFunction f = random_step(rng, 15, 4.0);
        std::vector<double> gv;
        std::uniform_real_distribution<double> u(-2, 2);
        for (std::size_t i = 0; i < f.grid().size(); ++i) gv.push_back(u(rng));
        const SampledFunction g(f.grid(), gv);
        std::vector<double> comb;
        for (std::size_t i = 0; i < gv.size(); ++i) comb.push_back(2.5 * f.values()[i] - 1.5 * gv[i]);
        const SampledFunction h(f.grid(), comb);
        const double k = 0.6;
        const SampledFunction lf = riesz_lift(f, k), lg = riesz_lift(g, k), lh = riesz_lift(h, k);
        for (double x : lin_space(0, 5, 50)) CHECK(lh.evaluate(x) == doctest::Approx(2.5 * lf.evaluate(x) - 1.5 * lg.evaluate(x)).epsilon(1e-12).scale(1.0));

        std::vector<double> pos;
        for (double v : gv) pos.push_back(std::abs(v));
        const SampledFunction nonneg(f.grid(), pos);
        for (double k : {0.4, 1.0, 1.7}) {
            const SampledFunction p = riesz_lift(nonneg, k);
            double prev = 0;
            for (double x : lin_space(0, 5, 200)) {
                const double v = p.evaluate(x);
                CHECK(v >= 0);
                // The kernel (x - mu)^{k-1} is nondecreasing in x only for k >= 1.
                if (k >= 1) CHECK(v >= prev - 1e-14);
                prev = v;
            }
        }
        // Below order one monotonicity fails: the lift of 1_[0,1] of order 1/2 decays past 1.
        const SampledFunction box({0.0, 1.0}, {1.0, 0.0});
        const SampledFunction half = riesz_lift(box, 0.5);
        for (double x : {1.5, 2.0, 4.0})
            CHECK(half.evaluate(x) == doctest::Approx((std::sqrt(x) - std::sqrt(x - 1)) / std::tgamma(1.5)).epsilon(1e-13));
        CHECK(half.evaluate(4.0) < half.evaluate(1.0));
    }

    TEST_CASE("lift is stable under grid refinement") {
        // Refining the grid without changing the interpolant leaves the lift unchanged.
        std::mt19937_64 rng(33);
        const SampledFunction f = random_step(rng, 10, 2.0);
        std::vector<double> fine, vals;
        for (std::size_t i = 0; i < f.grid().size(); ++i) {
            const double a = f.grid()[i];
            const double b = i + 1 < f.grid().size() ? f.grid()[i + 1] : a + 0.2;
            fine.push_back(a);
            vals.push_back(f.values()[i]);
            fine.push_back(0.5 * (a + b));
            vals.push_back(f.values()[i]);
        }
        const SampledFunction g(fine, vals);
        const SampledFunction lf = riesz_lift(f, 0.7), lg = riesz_lift(g, 0.7);
        for (double x : lin_space(0, 2, 40)) CHECK(lg.evaluate(x) == doctest::Approx(lf.evaluate(x)).epsilon(1e-12).scale(1.0));
    }

    TEST_CASE("interpolation certificate") {
        const auto grid = lin_space(0, 4, 33);
        const SampledFunction one(grid, std::vector<double>(grid.size(), 1.0));
        const InterpolationCertificate c = riesz_interpolation_certificate(one, 0.5, 1.0);
        CHECK(c.lhs == doctest::Approx(std::sqrt(4.0) / std::tgamma(1.5)).epsilon(1e-12));
        CHECK(c.constant == doctest::Approx(4 * std::exp(1 / (2 * std::exp(1.0)))).epsilon(1e-14));
        CHECK(c.ratio < 1);
        const SampledFunction zero(grid, std::vector<double>(grid.size(), 0.0));
        CHECK(riesz_interpolation_certificate(zero, 0.3, 0.9).ratio == 0.0);
        CHECK_THROWS_AS(riesz_interpolation_certificate(one, 1.0, 1.0), Error);
        CHECK_THROWS_AS(riesz_interpolation_certificate(one, 0.0, 1.0), Error);
        CHECK(interpolation_constant(1.7) == doctest::Approx(std::pow(4.0, 4.0) * 4 * std::exp(1 / (2 * std::exp(1.0)))));
        std::mt19937_64 rng(77);
        std::uniform_real_distribution<double> u(0.01, 1.0);
        for (int i = 0; i < 100; ++i) {
            double s = u(rng), g = u(rng);
            if (s > g) std::swap(s, g);
            CHECK(riesz_interpolation_certificate(random_step(rng, 20, 3.0), s, g).ratio < 1.0);
        }
    }

    TEST_CASE("Aizenman-Lieb identity") {
        const Spectrum d = rectangle_spectrum(1, 1, BoundaryCondition::Dirichlet, 200);
        const AizenmanLieb a = aizenman_lieb_check(d, 2.0, 30);
        CHECK(a.lhs == doctest::Approx(std::pow(30 - 2 * pi * pi, 2)).epsilon(1e-13));
        CHECK(a.rhs == doctest::Approx(a.lhs).epsilon(1e-6));
        const AizenmanLieb z = aizenman_lieb_check(d, 2.0, 15);
        CHECK(z.lhs == 0.0);
        CHECK(z.rhs == 0.0);
        for (double g : {1.5, 2.5, 3.0}) {
            const AizenmanLieb b = aizenman_lieb_check(d, g, 180);
            CHECK(b.rhs == doctest::Approx(b.lhs).epsilon(1e-8));
        }
        CHECK_THROWS_AS(aizenman_lieb_check(d, 1.0, 30), Error);
        CHECK_THROWS_AS(aizenman_lieb_check(d, 2.0, 190, 20), Error);
    }

    TEST_CASE("CSV round trip") {
        std::mt19937_64 rng(1);
        const SampledFunction f = random_step(rng, 17, 3.0);
        const std::string path = "weylab_sampled_roundtrip.csv";
        save_sampled_csv(f, path);
        const SampledFunction g = load_sampled_csv(path);
        REQUIRE(g.grid().size() == f.grid().size());
        for (std::size_t i = 0; i < f.grid().size(); ++i) {
            CHECK(g.grid()[i] == f.grid()[i]);
            CHECK(g.values()[i] == f.values()[i]);
        }
        std::remove(path.c_str());
    }
}
