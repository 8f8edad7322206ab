#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "weylab/weylab.h"

namespace {
constexpr double pi = 3.14159265358979323846;
const char* kUnitSquare = "{\"kind\":\"rectangle\",\"a\":1,\"b\":1}";
}  // namespace

TEST_CASE("status codes and errors") {
    CHECK(std::strlen(wl_version()) > 0);
    CHECK(std::string(wl_status_name(WL_OK)) != std::string(wl_status_name(WL_ERR_RANGE)));
    CHECK(wl_lt_constant(0, 2, nullptr) == WL_ERR_NULL);
    double v = 0;
    CHECK(wl_lt_constant(-1, 2, &v) == WL_ERR_INVALID);
    CHECK(std::strlen(wl_last_error()) > 0);
    CHECK(wl_lt_constant(0, 2, &v) == WL_OK);
    CHECK(v == doctest::Approx(1 / (4 * pi)).epsilon(1e-14));
    CHECK(std::strlen(wl_last_error()) == 0);
    CHECK(wl_spectrum_create("{\"kind\":\"hexagon\"}", WL_DIRICHLET, 100, nullptr) == WL_ERR_NULL);
    wl_spectrum* s = nullptr;
    CHECK(wl_spectrum_create("{\"kind\":\"hexagon\"}", WL_DIRICHLET, 100, &s) == WL_ERR_INVALID);
    CHECK(s == nullptr);
    CHECK(wl_spectrum_create("{not json", WL_DIRICHLET, 100, &s) == WL_ERR_IO);
    CHECK(wl_spectrum_create(kUnitSquare, 7, 100, &s) == WL_ERR_INVALID);
}

TEST_CASE("spectrum handle") {
    wl_spectrum* s = nullptr;
    REQUIRE(wl_spectrum_create(kUnitSquare, WL_DIRICHLET, 200, &s) == WL_OK);
    size_t n = 0;
    REQUIRE(wl_spectrum_size(s, &n) == WL_OK);
    std::vector<double> ev(n);
    size_t count = 0;
    REQUIRE(wl_spectrum_eigenvalues(s, ev.data(), ev.size(), &count) == WL_OK);
    CHECK(count == n);
    CHECK(ev[0] == doctest::Approx(2 * pi * pi).epsilon(1e-14));
    CHECK(ev[1] == doctest::Approx(5 * pi * pi).epsilon(1e-14));
    long long N = 0;
    CHECK(wl_spectrum_counting(s, 60, &N) == WL_OK);
    CHECK(N == 3);
    double r = 0;
    CHECK(wl_spectrum_riesz_mean(s, 60, 1, &r) == WL_OK);
    CHECK(r == doctest::Approx(3 * 60 - 12 * pi * pi).epsilon(1e-13));
    CHECK(wl_spectrum_riesz_mean(s, 500, 1, &r) == WL_ERR_RANGE);
    double direct = 0;
    CHECK(wl_rectangle_riesz_mean(1, 1, WL_DIRICHLET, 60, 1, &direct) == WL_OK);
    CHECK(direct == doctest::Approx(3 * 60 - 12 * pi * pi).epsilon(1e-13));
    char* header = nullptr;
    CHECK(wl_spectrum_header_json(s, &header) == WL_OK);
    REQUIRE(header != nullptr);
    CHECK(std::string(header).find("rectangle") != std::string::npos);
    wl_string_free(header);
    wl_spectrum_free(s);
    wl_spectrum_free(nullptr);
}

TEST_CASE("hierarchy handle") {
    wl_hierarchy* h = nullptr;
    CHECK(wl_hierarchy_create(0.1, 9, &h) == WL_ERR_INVALID);
    REQUIRE(wl_hierarchy_create(0.1, 4, &h) == WL_OK);
    double rec = 0, closed = 0;
    CHECK(wl_hierarchy_coefficient(h, 2, &rec, &closed) == WL_OK);
    CHECK(std::abs(rec - closed) < 1e-10);
    double i0 = 0;
    CHECK(wl_hierarchy_integral(h, 0, &i0) == WL_OK);
    CHECK(i0 == doctest::Approx(1.0).epsilon(1e-10));
    const double loc[] = {1.0, 2.0}, w[] = {1.0, 1.0};
    double u = 0;
    CHECK(wl_unsmoothed_riesz(loc, w, 2, 1, 3, &u) == WL_OK);
    CHECK(u == doctest::Approx(2 - 5.0 / 9).epsilon(1e-14));
    char* js = nullptr;
    CHECK(wl_identity_check(h, loc, w, 2, 2, 3.0, &js) == WL_OK);
    REQUIRE(js != nullptr);
    CHECK(std::string(js).find("residual") != std::string::npos);
    wl_string_free(js);
    wl_hierarchy_free(h);
}

TEST_CASE("polygon handle") {
    const double xy[] = {0, 0, 2, 0, 2, 1, 0, 1};
    wl_polygon* p = nullptr;
    REQUIRE(wl_polygon_create(xy, 4, &p) == WL_OK);
    double a = 0, per = 0, rin = 0, cx = 0, cy = 0;
    CHECK(wl_polygon_area(p, &a) == WL_OK);
    CHECK(wl_polygon_perimeter(p, &per) == WL_OK);
    CHECK(wl_polygon_inradius(p, &rin, &cx, &cy) == WL_OK);
    CHECK(a == doctest::Approx(2));
    CHECK(per == doctest::Approx(6));
    CHECK(rin == doctest::Approx(0.5));
    double vol = 0;
    CHECK(wl_polygon_distance_level_volume(p, 0.8, &vol) == WL_ERR_INVALID);
    wl_minkowski_bounds b{};
    CHECK(wl_polygon_minkowski_bounds(p, 0.2, 1.0, &b) == WL_OK);
    CHECK(b.all_hold);
    char* js = nullptr;
    CHECK(wl_polygon_to_json(p, &js) == WL_OK);
    wl_polygon* q = nullptr;
    CHECK(wl_polygon_from_json(js, &q) == WL_OK);
    wl_string_free(js);
    double aq = 0;
    CHECK(wl_polygon_area(q, &aq) == WL_OK);
    CHECK(aq == a);
    wl_polygon_free(q);
    wl_polygon_free(p);
    const double bad[] = {0, 0, 0, 1, 1, 1, 1, 0};
    CHECK(wl_polygon_create(bad, 4, &p) == WL_ERR_INVALID);
}

TEST_CASE("optimization run handle") {
    wl_run* r = nullptr;
    REQUIRE(wl_optimize_rectangle(2 * pi * pi + 1, 1, WL_DIRICHLET, 1e-6, 1.0, &r) == WL_OK);
    double param = 0, obj = 0, err = 0;
    int degenerate = -1;
    CHECK(wl_run_best(r, &param, &obj, &err, &degenerate) == WL_OK);
    CHECK(param == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(degenerate == 0);
    char* js = nullptr;
    CHECK(wl_run_json(r, &js) == WL_OK);
    CHECK(std::string(js).find("\"trace\"") != std::string::npos);
    wl_string_free(js);
    wl_run_free(r);
}
