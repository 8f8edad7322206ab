#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "weylab/convex_geometry.hpp"
#include "weylab/errors.hpp"

using namespace weylab;

namespace {

constexpr double pi = 3.14159265358979323846;

// Uniform samples in a box around the polygon counted inside the r-neighbourhood.
struct McArea {
    double value;
    double sigma;
};
McArea mc_neighbourhood_area(const ConvexPolygon& p, double r, std::size_t samples, std::uint64_t seed) {
    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    for (Point v : p.vertices()) {
        x0 = std::min(x0, v.x - r), x1 = std::max(x1, v.x + r);
        y0 = std::min(y0, v.y - r), y1 = std::max(y1, v.y + r);
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(x0, x1), uy(y0, y1);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < samples; ++i)
        if (p.distance_to_set({ux(rng), uy(rng)}) <= r) ++hits;
    const double box = (x1 - x0) * (y1 - y0), q = double(hits) / samples;
    return {box * q, box * std::sqrt(q * (1 - q) / samples)};
}

McArea mc_disk_intersection(const ConvexPolygon& p, Point c, double r, std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-r, r);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        const Point d{u(rng), u(rng)};
        if (dot(d, d) <= r * r && p.contains(c + d)) ++hits;
    }
    const double box = 4 * r * r, q = double(hits) / samples;
    return {box * q, box * std::sqrt(q * (1 - q) / samples)};
}

// Sup of |{d <= l}| / l over a fine grid of l, using the erosion area.
double sampled_theta(const ConvexPolygon& p) {
    const double rin = inradius(p);
    double best = 0;
    for (int i = 1; i <= 4000; ++i) {
        const double l = rin * i / 4000.0;
        best = std::max(best, distance_level_volume(p, l) / l);
    }
    return best;
}

}  // namespace

TEST_SUITE("convex_geometry") {
    TEST_CASE("construction and validation") {
        const ConvexPolygon sq = ConvexPolygon::rectangle(1, 1);
        CHECK(sq.area() == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(sq.perimeter() == doctest::Approx(4.0).epsilon(1e-15));
        double sum = 0;
        for (double a : sq.angles()) sum += a;
        CHECK(sum == doctest::Approx(2 * pi).epsilon(1e-12));
        CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {0, 1}, {1, 1}, {1, 0}}), Error);  // clockwise
        CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {1, 0}, {2, 0}, {1, 1}}), Error);  // collinear
        CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {2, 0}, {1, 0.2}, {2, 1}, {0, 1}}), Error);  // reflex
        CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {1, 0}}), Error);
        std::mt19937_64 rng(11);
        for (int i = 0; i < 50; ++i) {
            const ConvexPolygon p = random_convex_polygon(rng);
            double s = 0;
            for (double a : p.angles()) s += a;
            CHECK(s == doctest::Approx((p.size() - 2) * pi).epsilon(1e-10));
            const ConvexPolygon q = ConvexPolygon::from_json(p.to_json());
            REQUIRE(q.size() == p.size());
            for (std::size_t k = 0; k < p.size(); ++k) {
                CHECK(q.vertices()[k].x == p.vertices()[k].x);
                CHECK(q.vertices()[k].y == p.vertices()[k].y);
            }
        }
        CHECK_THROWS_AS(ConvexPolygon::from_json("{\"vertices\": [[0,0],[1,0]]}"), Error);
        CHECK_THROWS_AS(ConvexPolygon::from_json("not json"), Error);
    }

    TEST_CASE("inradius") {
        CHECK(inradius(ConvexPolygon::rectangle(1, 1)) == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(inradius(ConvexPolygon::rectangle(2, 0.7)) == doctest::Approx(0.35).epsilon(1e-14));
        // Equilateral triangle of side 1: r = 1 / (2 sqrt 3).
        CHECK(inradius(ConvexPolygon::regular(3, 1)) == doctest::Approx(1 / (2 * std::sqrt(3.0))).epsilon(1e-13));
        std::mt19937_64 rng(5);
        for (int i = 0; i < 100; ++i) {
            const ConvexPolygon p = random_convex_polygon(rng);
            const InscribedDisk d = chebyshev_center(p);
            CHECK(p.area() / p.perimeter() <= d.radius * (1 + 1e-12));
            CHECK(d.radius <= 2 * p.area() / p.perimeter() * (1 + 1e-12));
            CHECK(p.distance_to_boundary(d.center) == doctest::Approx(d.radius).epsilon(1e-10));
            // Optimality: the normals of the touching edges leave no open half-circle free.
            std::vector<double> dirs;
            for (std::size_t k = 0; k < p.size(); ++k) {
                const double dist = dot(p.inward_normals()[k], d.center) - p.offsets()[k];
                if (std::abs(dist - d.radius) < 1e-9) dirs.push_back(std::atan2(p.inward_normals()[k].y, p.inward_normals()[k].x));
            }
            REQUIRE(dirs.size() >= 2);
            std::sort(dirs.begin(), dirs.end());
            double gap = dirs.front() + 2 * pi - dirs.back();
            for (std::size_t k = 1; k < dirs.size(); ++k) gap = std::max(gap, dirs[k] - dirs[k - 1]);
            CHECK(gap <= pi + 1e-9);
        }
    }

    TEST_CASE("distance levels and inner parallel bodies") {
        const ConvexPolygon sq = ConvexPolygon::rectangle(1, 1);
        CHECK(distance_level_volume(sq, 0.1) == doctest::Approx(0.36).epsilon(1e-14));
        CHECK(distance_level_volume(sq, 0.5) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(distance_level_volume(sq, 0.0) == 0.0);
        CHECK_THROWS_AS(distance_level_volume(sq, 0.6), Error);
        CHECK_THROWS_AS(distance_level_volume(sq, -0.1), Error);
        CHECK(inner_parallel_perimeter(sq, 0.1) == doctest::Approx(3.2).epsilon(1e-14));
        CHECK(inner_parallel_perimeter(sq, 0.0) == doctest::Approx(4.0).epsilon(1e-14));
        CHECK(inner_parallel_perimeter(sq, 0.1) >= (1 - 0.1 / 0.5) * 4 * (1 - 1e-14));
        CHECK_THROWS_AS(inner_parallel_perimeter(sq, 0.5), Error);
        std::mt19937_64 rng(17);
        std::uniform_real_distribution<double> u(0, 1);
        for (int i = 0; i < 100; ++i) {
            const ConvexPolygon p = random_convex_polygon(rng);
            const double rin = inradius(p);
            const double s = u(rng) * rin;
            const double v = distance_level_volume(p, s);
            CHECK(v <= s * p.perimeter() * (1 + 1e-12));
            CHECK(v + polygon_area(inner_parallel_body(p, s)) == doctest::Approx(p.area()).epsilon(1e-12));
            const double s2 = 0.999 * s;
            const double per = inner_parallel_perimeter(p, s2);
            CHECK(per <= p.perimeter() * (1 + 1e-12));
            CHECK(per >= (1 - s2 / rin) * p.perimeter() * (1 - 1e-12));
            // Erosion pieces reproduce the exact erosion area.
            const double area_s = polygon_area(inner_parallel_body(p, s));
            for (const ErosionPiece& e : erosion_pieces(p))
                if (s >= e.s0 && s <= e.s1) {
                    const double q = s - e.s0;
                    CHECK(e.area0 - e.per0 * q + e.quad * q * q == doctest::Approx(area_s).epsilon(1e-9).scale(p.area()));
                }
        }
    }

    TEST_CASE("theta") {
        CHECK(theta_omega(ConvexPolygon::rectangle(1, 1)) == doctest::Approx(4.0).epsilon(1e-14));
        std::mt19937_64 rng(23);
        for (int i = 0; i < 60; ++i) {
            const ConvexPolygon p = random_convex_polygon(rng);
            const double th = theta_omega(p);
            CHECK(th <= p.perimeter() * (1 + 1e-12));
            CHECK(th >= p.area() / inradius(p) * (1 - 1e-12));
            CHECK(th >= sampled_theta(p) * (1 - 1e-12));
        }
    }

    TEST_CASE("Steiner formula and Minkowski bounds") {
        const ConvexPolygon sq = ConvexPolygon::rectangle(1, 1);
        CHECK(minkowski_ball_area(sq, 1.0) == doctest::Approx(5 + pi).epsilon(1e-14));
        CHECK(minkowski_ball_area(sq, 0.0) == 1.0);
        const McArea mc = mc_neighbourhood_area(sq, 1.0, 1000000, 3);
        CHECK(std::abs(mc.value - (5 + pi)) <= 3 * mc.sigma);
        std::mt19937_64 rng(29);
        std::uniform_real_distribution<double> u(0, 1);
        for (int i = 0; i < 100; ++i) {
            const ConvexPolygon p = random_convex_polygon(rng);
            const double rin = inradius(p);
            for (double r : {0.0, 0.1 * rin, 0.5 * rin, rin, 2.5 * rin}) {
                const MinkowskiBounds b = minkowski_bounds(p, r, 1.0);
                CHECK(b.all_hold);
                CHECK(b.c2_small == doctest::Approx(0.5));
                CHECK(b.small_regime == (r <= rin));
                CHECK(b.excess >= b.lower - 1e-12);
                CHECK(b.excess <= b.upper_general + 1e-12);
                if (b.small_regime) CHECK(b.excess <= b.upper_small + 1e-12);
            }
            const double r = u(rng) * rin;
            CHECK(minkowski_ball_area(p, r) >= p.area() + r * p.perimeter());
        }
        CHECK_THROWS_AS(minkowski_ball_area(sq, -1), Error);
    }

    TEST_CASE("disk intersections and Bishop-Gromov profiles") {
        const ConvexPolygon sq = ConvexPolygon::rectangle(1, 1);
        std::vector<double> radii;
        for (int i = 1; i <= 10; ++i) radii.push_back(0.05 * i);
        for (double v : bishop_gromov_profile(sq, {0.5, 0.5}, radii)) CHECK(v == doctest::Approx(pi).epsilon(1e-12));
        for (double v : bishop_gromov_profile(sq, {0.0, 0.0}, radii)) CHECK(v == doctest::Approx(pi / 4).epsilon(1e-12));
        CHECK(disk_intersection_area(sq, {0.5, 0.5}, 5.0) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(disk_intersection_area(sq, {0.5, 0.0}, 0.3) == doctest::Approx(pi * 0.09 / 2).epsilon(1e-12));
        std::mt19937_64 rng(31);
        std::uniform_real_distribution<double> u(0, 1);
        for (int i = 0; i < 40; ++i) {
            const ConvexPolygon p = random_convex_polygon(rng);
            // Random point of the closure as a convex combination of vertices.
            std::vector<double> w(p.size());
            double tw = 0;
            for (double& x : w) tw += (x = u(rng));
            Point a{0, 0};
            for (std::size_t k = 0; k < p.size(); ++k) a = a + (w[k] / tw) * p.vertices()[k];
            std::vector<double> rs;
            for (int k = 1; k <= 50; ++k) rs.push_back(0.06 * k);
            const std::vector<double> prof = bishop_gromov_profile(p, a, rs);
            for (std::size_t k = 1; k < prof.size(); ++k) CHECK(prof[k] <= prof[k - 1] + 1e-10);
            if (i < 8) {
                const double r = 0.4;
                const McArea mc = mc_disk_intersection(p, a, r, 400000, 100 + i);
                CHECK(std::abs(disk_intersection_area(p, a, r) - mc.value) <= 4 * mc.sigma + 1e-12);
            }
        }
    }

    TEST_CASE("corner parameters") {
        const CornerParams sq = corner_params(ConvexPolygon::rectangle(1, 1));
        CHECK(sq.alpha_min == doctest::Approx(pi / 2).epsilon(1e-14));
        CHECK(sq.R == doctest::Approx(0.25).epsilon(1e-9));
        CHECK(sq.wedges.size() == 4);
        CHECK(corner_params(ConvexPolygon::regular(6, 1)).alpha_min == doctest::Approx(2 * pi / 3).epsilon(1e-13));
        std::mt19937_64 rng(37);
        for (int i = 0; i < 40; ++i) {
            const ConvexPolygon p = random_convex_polygon(rng);
            const CornerParams c = corner_params(p);
            CHECK(c.R > 0);
            double amin = 10;
            for (double a : p.angles()) amin = std::min(amin, a);
            CHECK(c.alpha_min == amin);
        }
    }

    TEST_CASE("perimeter monotone under inclusion") {
        std::mt19937_64 rng(41);
        std::uniform_real_distribution<double> u(0, 1);
        int pairs = 0;
        while (pairs < 100) {
            const ConvexPolygon p = random_convex_polygon(rng);
            const double th = 2 * pi * u(rng);
            const Point n{std::cos(th), std::sin(th)};
            double lo = 1e300, hi = -1e300;
            for (Point v : p.vertices()) lo = std::min(lo, dot(n, v)), hi = std::max(hi, dot(n, v));
            const std::vector<Point> cut = clip_half_plane(p.vertices(), n, lo + (0.1 + 0.8 * u(rng)) * (hi - lo));
            if (cut.size() < 3) continue;
            ++pairs;
            CHECK(polygon_perimeter(cut) <= p.perimeter() * (1 + 1e-12));
            CHECK(polygon_area(cut) <= p.area() * (1 + 1e-12));
        }
    }

    TEST_CASE("scaling homogeneity") {
        std::mt19937_64 rng(43);
        for (int i = 0; i < 30; ++i) {
            const ConvexPolygon p = random_convex_polygon(rng);
            const double s = 2.7;
            std::vector<Point> v;
            for (Point q : p.vertices()) v.push_back(s * q);
            const ConvexPolygon ps(v);
            CHECK(ps.area() == doctest::Approx(s * s * p.area()).epsilon(1e-12));
            CHECK(ps.perimeter() == doctest::Approx(s * p.perimeter()).epsilon(1e-12));
            CHECK(inradius(ps) == doctest::Approx(s * inradius(p)).epsilon(1e-10));
            CHECK(theta_omega(ps) == doctest::Approx(s * theta_omega(p)).epsilon(1e-10));
        }
    }
}
