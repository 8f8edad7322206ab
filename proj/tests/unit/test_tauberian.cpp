#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "weylab/errors.hpp"
#include "weylab/numerics.hpp"
#include "weylab/tauberian.hpp"

using namespace weylab;

namespace {

constexpr double pi = 3.14159265358979323846;

const PhiHierarchy& hierarchy(double eps) {
    static const MollifierFamily fam = build_mollifier();
    static const PhiHierarchy h1(fam, 1.0, 6), h01(fam, 0.1, 6), h005(fam, 0.05, 6), h001(fam, 0.01, 6);
    if (eps == 1.0) return h1;
    if (eps == 0.1) return h01;
    if (eps == 0.05) return h005;
    return h001;
}

// Cosine transform of phi by composite Gauss-Legendre directly on the mollifier.
double fourier_oracle(const MollifierFamily& fam, double t) {
    return integrate_fixed([&](double x) { return fam.phi(x) * std::cos(t * x); }, -fam.half_width, fam.half_width, 800, 20);
}

// Image sum for the one-dimensional Dirichlet heat kernel on [0, a] at (x, x).
double dirichlet_images(double a, double x, double t) {
    double s = 0;
    for (int n = -40; n <= 40; ++n) {
        s += std::exp(-std::pow(2 * n * a, 2) / (4 * t)) - std::exp(-std::pow(2 * x - 2 * n * a, 2) / (4 * t));
    }
    return s / std::sqrt(4 * pi * t);
}

}  // namespace

TEST_SUITE("tauberian") {
    TEST_CASE("mollifier family") {
        const MollifierFamily fam = build_mollifier();
        const PhiHierarchy& h = hierarchy(1.0);
        CHECK(h.integral(0) == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(integrate_fixed([&](double x) { return fam.phi(x); }, -100, 100, 400, 20) == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(integrate([&](double s) { return fam.chi(s); }, -1, 1, 1e-14, 1e-13, {-0.9, 0, 0.9}).value ==
              doctest::Approx(1.0).epsilon(1e-10));
        CHECK(fam.chi(1.0) == 0.0);
        CHECK(fam.chi(-1.5) == 0.0);
        for (double x : {0.1, 1.7, 13.0, 55.5}) {
            CHECK(fam.phi(x) == doctest::Approx(fam.phi(-x)).epsilon(1e-14));
            CHECK(fam.phi(x) >= 0);
            CHECK(fam.chi(x / 60) == fam.chi(-x / 60));
        }
        CHECK(std::abs(fourier_oracle(fam, 1.5)) < 1e-9);
        CHECK(std::abs(fourier_oracle(fam, 1.0001)) < 1e-9);
        CHECK(fam.phi_hat(0.5) == doctest::Approx(fourier_oracle(fam, 0.5)).epsilon(1e-7));
        CHECK(fam.phi_hat(0.0) == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(fam.phi_hat(1.5) == 0.0);
    }

    TEST_CASE("coefficients") {
        for (double eps : {1.0, 0.1, 0.05, 0.01}) {
            const PhiHierarchy& h = hierarchy(eps);
            CHECK(h.b(0) == 1.0);
            CHECK(h.b(1) == 0.0);
            CHECK(h.b(3) == 0.0);
            CHECK(h.b(5) == 0.0);
            CHECK(h.b(2) == doctest::Approx(-h.integral(2)).epsilon(1e-12));
            for (int m = 0; m <= 6; ++m) CHECK(std::abs(h.b(m) - h.b_closed_form(m)) < 1e-10);
        }
    }

    TEST_CASE("hierarchy parity and derivatives") {
        for (double eps : {1.0, 0.05}) {
            const PhiHierarchy& h = hierarchy(eps);
            for (int k = 0; k <= 6; ++k) {
                double peak = 0;
                for (double x = 0; x < 30; x += 0.37) peak = std::max(peak, std::abs(h.phi(k, x)));
                for (double x : {0.013, 0.04, 0.3, 1.1, 4.7, 12.0, 29.0}) {
                    const double sign = k % 2 == 0 ? 1.0 : -1.0;
                    CHECK(std::abs(h.phi(k, -x) - sign * h.phi(k, x)) <= 1e-12 * peak);
                }
            }
            // For even k the correction term vanishes and phi_k' = phi_{k-1}.
            for (int k : {2, 4, 6})
                for (double x : {-7.3, -1.2, 0.5, 2.6, 9.9}) {
                    const double step = 1e-4;
                    const double d = (h.phi(k, x + step) - h.phi(k, x - step)) / (2 * step);
                    CHECK(d == doctest::Approx(h.phi(k - 1, x)).epsilon(1e-6).scale(std::abs(h.integral(k)) + 1));
                }
        }
    }

    TEST_CASE("hierarchy preconditions") {
        const MollifierFamily fam = build_mollifier();
        CHECK_THROWS_AS(PhiHierarchy(fam, 0.1, 9), Error);
        CHECK_THROWS_AS(PhiHierarchy(fam, 0.0, 3), Error);
        CHECK_THROWS_AS(PhiHierarchy(fam, 1.5, 3), Error);
    }

    TEST_CASE("majorants") {
        for (double eps : {1.0, 0.1, 0.01}) {
            const auto ratios = majorant_check(hierarchy(eps));
            REQUIRE(ratios.size() == 7);
            CHECK(ratios[0].sup_ratio <= 1.0 + 1e-12);
            for (const MajorantRatio& r : ratios) {
                CHECK(std::isfinite(r.sup_ratio));
                CHECK(r.cutoff_tau > 10);
            }
        }
        const PhiHierarchy& h = hierarchy(0.1);
        for (int k = -1; k <= 6; ++k)
            for (double x : {0.0, 0.05, 1.0, 5.0, 20.0, 40.0}) CHECK(h.psi(k, x) > 0);
    }

    TEST_CASE("atomic measures") {
        AtomicMeasure mu;
        mu.atoms = {{1.0, 2.0}, {3.0, 1.0}};
        CHECK(mu.distribution(1.0) == 1.0);
        CHECK(mu.distribution(2.0) == 2.0);
        CHECK(mu.distribution(-2.0) == -2.0);
        CHECK(mu.distribution(0.0) == 0.0);
        CHECK_NOTHROW(mu.validate());
        AtomicMeasure bad;
        bad.atoms = {{1.0, -1.0}};
        CHECK_THROWS_AS(bad.validate(), Error);
        AtomicMeasure at0;
        at0.atoms = {{0.0, -0.5}};
        at0.K0 = 1.0;
        CHECK_NOTHROW(at0.validate());
        CHECK_THROWS_AS(unsmoothed_riesz(at0, 1, 2), Error);
        at0.K0 = 0.2;
        CHECK_THROWS_AS(at0.validate(), Error);
    }

    TEST_CASE("smoothed Riesz means") {
        AtomicMeasure d1;
        d1.atoms = {{1.0, 1.0}};
        CHECK(unsmoothed_riesz(d1, 1, 2) == 0.75);
        CHECK(smoothed_riesz(d1, 1, 2, hierarchy(0.01)) == doctest::Approx(0.75).epsilon(1e-4));
        const double r01 = smoothed_riesz(d1, 1, 2, hierarchy(0.1));
        const double r001 = smoothed_riesz(d1, 1, 2, hierarchy(0.01));
        CHECK(std::abs(r01 - r001) <= 0.1);
        CHECK(std::abs(r01 - 0.75) > std::abs(r001 - 0.75));
        CHECK(smoothed_riesz(d1, 1, 0.5, hierarchy(0.1)) == 0.0);
        CHECK(smoothed_riesz(AtomicMeasure{}, 2, 3, hierarchy(0.1)) == 0.0);
        AtomicMeasure three;
        three.atoms = {{0.7, 1.0}, {2.3, 0.5}, {5.1, 2.0}};
        for (double g : {0.5, 1.0, 2.0, 3.0}) {
            double expect = 0;
            for (const Atom& a : three.atoms)
                if (a.location < 6) expect += a.weight * std::pow(1 - a.location * a.location / 36, g);
            CHECK(unsmoothed_riesz(three, g, 6) == doctest::Approx(expect).epsilon(1e-14));
            CHECK(smoothed_riesz(three, g, 6, hierarchy(0.01)) == doctest::Approx(expect).epsilon(1e-3));
        }
        CHECK(smoothed_riesz(three, 1.0, 6, 0.01, build_mollifier()) == smoothed_riesz(three, 1.0, 6, hierarchy(0.01)));
    }

    TEST_CASE("convolutions with the odd distribution function") {
        AtomicMeasure mu;
        mu.atoms = {{0.8, 1.0}, {2.5, 3.0}};
        for (double eps : {1.0, 0.05}) {
            const PhiHierarchy& h = hierarchy(eps);
            for (int l : {0, 2, 4, 6}) CHECK(std::abs(phi_conv_N(h, l, mu, 0.0)) < 1e-9);
            // (phi_0 * N)' = phi_0 * T.
            const double step = 1e-4;
            for (double s : {0.3, 1.9, 4.0}) {
                const double d = (phi_conv_N(h, 0, mu, s + step) - phi_conv_N(h, 0, mu, s - step)) / (2 * step);
                CHECK(d == doctest::Approx(phi_conv_T(h, 0, mu, s)).epsilon(1e-6));
            }
            CHECK(chi_conv_N(h, mu, 10.0) == doctest::Approx(mu.distribution(10.0)).epsilon(1e-12));
        }
    }

    TEST_CASE("iterated integration-by-parts identity") {
        AtomicMeasure d1;
        d1.atoms = {{1.0, 1.0}};
        CHECK(verify_iterated_identity(d1, 1, 3.0, hierarchy(0.05)).residual < 1e-6);
        CHECK(verify_iterated_identity(AtomicMeasure{}, 1, 3.0, hierarchy(0.05)).residual == 0.0);
        AtomicMeasure d12;
        d12.atoms = {{1.0, 1.0}, {2.0, 1.0}};
        CHECK(verify_iterated_identity(d12, 2, 3.0, hierarchy(0.05)).residual < 1e-5);
        for (int m : {1, 2, 3})
            for (double tau : {0.5, 2.0, 7.5}) {
                const IdentityReport r = verify_iterated_identity(d12, m, tau, hierarchy(0.1));
                CHECK(r.residual < 1e-8 * (1 + std::abs(r.lhs)));
            }
        CHECK_THROWS_AS(verify_iterated_identity(d12, 6, 3.0, hierarchy(0.1)), Error);
        CHECK_THROWS_AS(verify_iterated_identity(d12, 0, 3.0, hierarchy(0.1)), Error);
        const std::string js = identity_report_json(verify_iterated_identity(d1, 1, 3.0, hierarchy(0.1)));
        CHECK(js.find("\"residual\"") != std::string::npos);
        CHECK(js.find("\"lhs\"") != std::string::npos);
    }

    TEST_CASE("table export") {
        const std::string path = "weylab_phi_table.csv";
        export_table_csv(hierarchy(0.1), 2, path);
        std::ifstream in(path);
        std::string header, line;
        std::getline(in, header);
        CHECK(header == "tau,value");
        int rows = 0;
        while (std::getline(in, line)) ++rows;
        CHECK(rows > 1000);
        std::remove(path.c_str());
    }

    TEST_CASE("rectangle heat kernel and the Laplace-side bound") {
        const Rectangle r{1.0, 1.5};
        for (double t : {0.005, 0.05, 0.3})
            for (Point x : {Point{0.5, 0.75}, Point{0.1, 0.2}}) {
                const double images = dirichlet_images(r.a, x.x, t) * dirichlet_images(r.b, x.y, t);
                CHECK(rectangle_heat_kernel_diagonal(r, x, t, BoundaryCondition::Dirichlet) ==
                      doctest::Approx(images).epsilon(1e-10));
            }
        const Point c{0.5, 0.5};
        const double t = 0.05, d = 0.5;
        const double k = rectangle_heat_kernel_diagonal(Rectangle{1, 1}, c, t, BoundaryCondition::Dirichlet);
        CHECK(std::abs(k - 1 / (4 * pi * t)) <= 1 / (4 * pi * t) * std::exp(-d * d / (4 * t)));
        CHECK_THROWS_AS(rectangle_heat_kernel_diagonal(Rectangle{1, 1}, {1.0, 0.5}, t, BoundaryCondition::Dirichlet), Error);
        // Past t = d^2/4 the closed-form e^{-d^2/4t} bound is exceeded; the peak over s <= t still holds.
        const double tl = 0.2;
        const double gap = 1 / (4 * pi * tl) - dirichlet_images(1, 0.5, tl) * dirichlet_images(1, 0.5, tl);
        CHECK(gap > std::exp(-d * d / (4 * tl)) / (4 * pi * tl));
        CHECK(gap <= std::exp(-1.0) / (pi * d * d));
        const OrderCheck oc = tauberian_order_check(Rectangle{1, 1}, BoundaryCondition::Dirichlet, c, 1.0,
                                                    log_space(1e2, 1e4, 10), {0.2, 0.05});
        REQUIRE(oc.laplace.size() == 2);
        CHECK_FALSE(oc.laplace[0].stated_regime);
        CHECK(oc.laplace[1].stated_regime);
        CHECK(oc.laplace[0].bound == doctest::Approx(std::exp(-1.0) / (pi * d * d)).epsilon(1e-14));
        CHECK(oc.laplace_ok);
    }

    TEST_CASE("order check mechanics") {
        const Rectangle sq{1, 1};
        CHECK_THROWS_AS(tauberian_order_check(sq, BoundaryCondition::Dirichlet, {0.5, 0.5}, 1.0, log_space(1e3, 2e4, 20)), Error);
        CHECK_THROWS_AS(tauberian_order_check(sq, BoundaryCondition::Dirichlet, {0.0, 0.5}, 1.0, log_space(1e3, 1e5, 20)), Error);
        const OrderCheck oc = tauberian_order_check(sq, BoundaryCondition::Dirichlet, {0.5, 0.5}, 1.0, log_space(1e3, 1e5, 40));
        CHECK(oc.laplace_ok);
        CHECK(oc.stated_exponent == 1.5);
        CHECK(oc.interior_exponent == 1.0);
        CHECK(oc.dist_to_boundary == 0.5);
        CHECK(oc.remainders.size() == 40);
        CHECK(std::isfinite(oc.fitted_exponent));
        // The windowed envelope fit recovers a clean power law.
        std::vector<double> lam = log_space(10, 1e4, 50), rem;
        for (std::size_t i = 0; i < lam.size(); ++i) rem.push_back(std::pow(lam[i], 0.8) * (i % 3 == 0 ? 1.0 : 0.3));
        CHECK(envelope_exponent_fit(lam, rem) == doctest::Approx(0.8).epsilon(0.02));
    }
}
