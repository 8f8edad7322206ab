#include <doctest.h>

#include <cmath>
#include <random>

#include "weylab/errors.hpp"
#include "weylab/weyl_constants.hpp"

using namespace weylab;

namespace {

constexpr double pi = 3.14159265358979323846;

// Independent evaluation through the standard library gamma function.
double lt_oracle(double g, int d) { return std::tgamma(g + 1) / (std::pow(4 * pi, 0.5 * d) * std::tgamma(g + 0.5 * d + 1)); }

}  // namespace

TEST_SUITE("weyl_constants") {
    TEST_CASE("semiclassical constants") {
        CHECK(lt_constant(0, 2) == doctest::Approx(1 / (4 * pi)).epsilon(1e-12));
        CHECK(lt_constant(0, 1) == doctest::Approx(1 / pi).epsilon(1e-12));
        CHECK(lt_constant(1, 2) == doctest::Approx(lt_oracle(1, 2)).epsilon(1e-12));
        CHECK(lt_constant(1, 2) == doctest::Approx(1 / (8 * pi)).epsilon(1e-12));
        CHECK_THROWS_AS(lt_constant(-0.5, 2), Error);
        CHECK_THROWS_AS(lt_constant(1, 0), Error);
    }

    TEST_CASE("constant recursion in gamma") {
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> ug(0.0, 5.0);
        std::uniform_int_distribution<int> ud(1, 6);
        for (int i = 0; i < 20; ++i) {
            const double g = ug(rng);
            const int d = ud(rng);
            const double ratio = std::tgamma(g + 2) * std::tgamma(g + 0.5 * d + 1) /
                                 (std::tgamma(g + 1) * std::tgamma(g + 0.5 * d + 2));
            CHECK(lt_constant(g + 1, d) == doctest::Approx(lt_constant(g, d) * ratio).epsilon(1e-12));
            CHECK(lt_constant(g, d) == doctest::Approx(lt_oracle(g, d)).epsilon(1e-12));
        }
    }

    TEST_CASE("two-term prediction") {
        const double lam = 1e4;
        const double expected = lt_oracle(1, 2) * 1e8 - 0.25 * lt_oracle(1, 1) * 4 * 1e6;
        CHECK(two_term_prediction(lam, 1, 2, 1, 4, BoundaryCondition::Dirichlet) == doctest::Approx(expected).epsilon(1e-12));
        CHECK(two_term_prediction(7.5, 0, 2, 2.0, 0.0, BoundaryCondition::Neumann) ==
              doctest::Approx(lt_oracle(0, 2) * 2.0 * 7.5).epsilon(1e-13));
        for (double l : {0.1, 1.0, 50.0, 1e5})
            CHECK(two_term_prediction(l, 0.5, 2, 1, 4, BoundaryCondition::Dirichlet) <
                  two_term_prediction(l, 0.5, 2, 1, 4, BoundaryCondition::Neumann));
        CHECK_THROWS_AS(two_term_prediction(-1, 1, 2, 1, 4, BoundaryCondition::Dirichlet), Error);
    }

    TEST_CASE("corner sums") {
        CHECK(corner_sum({pi / 2, pi / 2, pi / 2, pi / 2}) == doctest::Approx(0.25).epsilon(1e-14));
        CHECK(corner_sum({pi / 3, pi / 3, pi / 3}) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
        CHECK(corner_sum({pi, pi, pi}) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
        CHECK_THROWS_AS(corner_sum({0.0, pi}), Error);
        CHECK_THROWS_AS(corner_sum({2 * pi + 1e-9}), Error);
        CHECK_NOTHROW(corner_sum({2 * pi}));
        CHECK_THROWS_AS(three_term_polygon_prediction(10, 1, 1, 4, {}, BoundaryCondition::Dirichlet), Error);
    }

    TEST_CASE("three-term prediction with straight angles equals the two-term prediction") {
        for (double l : {1.0, 10.0, 1e3, 1e5})
            for (auto bc : {BoundaryCondition::Dirichlet, BoundaryCondition::Neumann})
                CHECK(three_term_polygon_prediction(l, 1.3, 2, 6, {pi, pi, pi, pi}, bc) ==
                      two_term_prediction(l, 1.3, 2, 2, 6, bc));
        const double l = 400;
        CHECK(three_term_polygon_prediction(l, 1, 1, 4, {pi / 2, pi / 2, pi / 2, pi / 2}, BoundaryCondition::Neumann) ==
              doctest::Approx(two_term_prediction(l, 1, 2, 1, 4, BoundaryCondition::Neumann) + 0.25 * l));
    }

    TEST_CASE("heat predictions") {
        const double t = 0.01;
        CHECK(heat_two_term_prediction(t, 2, 1, 4, BoundaryCondition::Dirichlet) ==
              doctest::Approx(1 / (4 * pi * t) * (1 - std::sqrt(t * pi) / 2 * 4)).epsilon(1e-13));
        CHECK(heat_two_term_prediction(10.0, 2, 1, 4, BoundaryCondition::Dirichlet) < 0.0);
        const double d = heat_two_term_prediction(t, 3, 2, 5, BoundaryCondition::Dirichlet);
        const double n = heat_two_term_prediction(t, 3, 2, 5, BoundaryCondition::Neumann);
        CHECK(0.5 * (d + n) == doctest::Approx(std::pow(4 * pi * t, -1.5) * 2).epsilon(1e-13));
        // Linearity in (volume, perimeter).
        const double a = heat_two_term_prediction(t, 2, 1, 4, BoundaryCondition::Neumann);
        const double b = heat_two_term_prediction(t, 2, 3, 2, BoundaryCondition::Neumann);
        const double ab = heat_two_term_prediction(t, 2, 2 * 1 + 3 * 3, 2 * 4 + 3 * 2, BoundaryCondition::Neumann);
        CHECK(ab == doctest::Approx(2 * a + 3 * b).epsilon(1e-13));

        const std::vector<double> right(4, pi / 2);
        const double ts = 1 / (4 * pi);
        CHECK(heat_polygon_prediction(ts, 1, 4, right) ==
              doctest::Approx(1 - 4 / (8 * std::sqrt(pi * ts)) + 0.25).epsilon(1e-13));
        // Same area, different perimeter: only the perimeter term changes.
        const double sq = heat_polygon_prediction(t, 1, 4, right);
        const double rc = heat_polygon_prediction(t, 1, 5, right);
        CHECK(sq - rc == doctest::Approx(1 / (8 * std::sqrt(pi * t))).epsilon(1e-12));
    }

    TEST_CASE("error envelopes") {
        const double per = 4, gamma = 1;
        // r_in sqrt(lambda) = 1.
        const double lam = 100, rin = 0.1;
        CHECK(error_envelope(lam, gamma, per, rin, 2, BoundaryCondition::Dirichlet) ==
              doctest::Approx(per * std::pow(lam, gamma + 0.5)).epsilon(1e-13));
        double prev = INFINITY;
        for (double r : {0.05, 0.1, 0.2, 0.4, 0.8}) {
            const double e = error_envelope(lam, 0.5, per, r, 2, BoundaryCondition::Dirichlet);
            CHECK(e < prev);
            prev = e;
        }
        // At r_in sqrt(lambda) = e the logarithm is 1.
        const double alpha = envelope_exponent(gamma);
        const double rin_e = std::exp(1.0) / std::sqrt(lam);
        CHECK(error_envelope(lam, gamma, per, rin_e, 2, BoundaryCondition::Neumann) ==
              doctest::Approx(per * std::pow(lam, 1.5) * (std::pow(2.0, -alpha) + std::exp(-1.0))).epsilon(1e-13));
        CHECK(envelope_exponent(1.0) == 1.0);
        CHECK(envelope_exponent(2.5) == 1.0);
        CHECK(envelope_exponent(0.5) == doctest::Approx(0.45));
        CHECK(envelope_exponent(0.5, 0.5) == doctest::Approx(0.25));
    }

    TEST_CASE("prediction reports and boundary-condition names") {
        const PredictionReport r = make_report(3.0, 10.25, 7.125, 1.0);
        CHECK(r.remainder == 10.25 - 7.125);
        CHECK(parse_boundary_condition("neumann") == BoundaryCondition::Neumann);
        CHECK(parse_boundary_condition("D") == BoundaryCondition::Dirichlet);
        CHECK_THROWS_AS(parse_boundary_condition("robin"), Error);
        CHECK(std::string(to_string(BoundaryCondition::Dirichlet)) == "dirichlet");
    }
}
