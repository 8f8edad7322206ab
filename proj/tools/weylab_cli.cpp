// weylab command-line front end. Talks to the library through the C API only.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "weylab/weylab.h"

using nlohmann::json;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Carries a library status out of the subcommand into the error report.
struct CliError {
    int status;
    std::string message;
};

void check(int status) {
    if (status != WL_OK) throw CliError{status, wl_last_error()};
}

[[noreturn]] void invalid(const std::string& msg) { throw CliError{WL_ERR_INVALID, msg}; }

std::string take_string(char* s) {
    std::string out = s ? s : "";
    wl_string_free(s);
    return out;
}

template <class T, void (*Free)(T*)>
struct Handle {
    T* p = nullptr;
    Handle() = default;
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    ~Handle() { Free(p); }
    T** out() { return &p; }
    T* get() const { return p; }
};
using Spectrum = Handle<wl_spectrum, wl_spectrum_free>;
using Polygon = Handle<wl_polygon, wl_polygon_free>;
using Hierarchy = Handle<wl_hierarchy, wl_hierarchy_free>;
using Run = Handle<wl_run, wl_run_free>;

struct Config {
    std::string domain = "unit-square";
    std::string bc = "dirichlet";
    std::vector<double> gammas;
    std::vector<int> dims;
    std::string lambda_spec;
    std::string t_spec;
    double grid_h = 0.02;
    double tol = 1e-6;
    std::string out;
    unsigned long long seed = 1;
    bool experimental = false;

    // Subcommand-specific extras.
    std::string save;
    int count = 200;
    double lambda_max = 0.0;
    int mc_samples = 100000;
    double x = -1.0, y = -1.0;
    std::vector<double> eps;
    std::vector<int> ms;
    int order = 6;
    double tau = 3.0;
    std::string table_dir;
    std::string trace_csv;
    int sides = 6;
    std::vector<double> stretches;
};

json config_json(const std::string& command, const Config& c) {
    return json{{"command", command},   {"domain", c.domain},         {"bc", c.bc},
                {"gamma", c.gammas},    {"dim", c.dims},              {"lambda", c.lambda_spec},
                {"t", c.t_spec},        {"grid_h", c.grid_h},         {"tol", c.tol},
                {"seed", c.seed},       {"experimental", c.experimental}, {"count", c.count},
                {"lambda_max", c.lambda_max}, {"mc_samples", c.mc_samples}, {"x", c.x},
                {"y", c.y},             {"eps", c.eps},               {"m", c.ms},
                {"order", c.order},     {"tau", c.tau},               {"sides", c.sides},
                {"stretch", c.stretches}};
}

int parse_bc(const std::string& s) {
    if (s == "dirichlet" || s == "D") return WL_DIRICHLET;
    if (s == "neumann" || s == "N") return WL_NEUMANN;
    invalid("--bc must be dirichlet or neumann");
}

double parse_number(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        invalid("cannot parse " + what + " value '" + s + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    return parts;
}

// "start:stop:count" (log-spaced), "start:stop:count:lin", a comma list, or a single value.
std::vector<double> parse_grid(const std::string& spec, const std::string& what) {
    if (spec.empty()) invalid("empty " + what + " grid");
    std::vector<double> grid;
    if (spec.find(':') != std::string::npos) {
        const auto parts = split(spec, ':');
        if (parts.size() != 3 && parts.size() != 4) invalid(what + " grid must be start:stop:count[:lin|:log]");
        const double a = parse_number(parts[0], what), b = parse_number(parts[1], what);
        const double n = parse_number(parts[2], what);
        if (n < 1 || n != std::floor(n)) invalid(what + " grid count must be a positive integer");
        const bool linear = parts.size() == 4 && parts[3] == "lin";
        if (parts.size() == 4 && parts[3] != "lin" && parts[3] != "log") invalid("grid spacing must be lin or log");
        if (!linear && !(a > 0.0 && b > 0.0)) invalid(what + " log grid needs positive endpoints");
        const int count = static_cast<int>(n);
        for (int i = 0; i < count; ++i) {
            const double f = count == 1 ? 0.0 : double(i) / (count - 1);
            grid.push_back(linear ? a + f * (b - a) : a * std::pow(b / a, f));
        }
    } else {
        for (const auto& p : split(spec, ','))
            if (!p.empty()) grid.push_back(parse_number(p, what));
    }
    if (grid.empty()) invalid("empty " + what + " grid");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1])) invalid(what + " grid must be strictly increasing");
    for (double v : grid)
        if (!(v > 0.0) || !std::isfinite(v)) invalid(what + " values must be positive");
    return grid;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError{WL_ERR_IO, "cannot open '" + path + "'"};
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Domain flag to library JSON.
std::string domain_json(const std::string& spec) {
    if (spec == "unit-square") return json{{"kind", "rectangle"}, {"a", 1.0}, {"b", 1.0}}.dump();
    const auto colon = spec.find(':');
    if (colon == std::string::npos) invalid("unknown domain '" + spec + "'");
    const std::string kind = spec.substr(0, colon), arg = spec.substr(colon + 1);
    if (kind == "rect") {
        const auto parts = split(arg, ',');
        if (parts.size() != 2) invalid("rect domain needs rect:a,b");
        return json{{"kind", "rectangle"}, {"a", parse_number(parts[0], "side")}, {"b", parse_number(parts[1], "side")}}
            .dump();
    }
    if (kind == "disk") return json{{"kind", "disk"}, {"radius", parse_number(arg, "radius")}}.dump();
    if (kind == "polygon") {
        json j;
        try {
            j = json::parse(read_file(arg));
        } catch (const json::exception& e) {
            throw CliError{WL_ERR_IO, "polygon file: " + std::string(e.what())};
        }
        j["kind"] = "polygon";
        return j.dump();
    }
    invalid("unknown domain kind '" + kind + "'");
}

std::string domain_kind(const std::string& djson) { return json::parse(djson)["kind"].get<std::string>(); }

struct Geometry {
    double area = 0, perimeter = 0, inradius = 0;
    std::vector<double> angles;
};

Geometry geometry_of(const std::string& djson) {
    Geometry g;
    check(wl_domain_functionals(djson.c_str(), &g.area, &g.perimeter, &g.inradius));
    std::size_t n = 0;
    check(wl_domain_angles(djson.c_str(), nullptr, 0, &n));
    g.angles.resize(n);
    check(wl_domain_angles(djson.c_str(), g.angles.data(), n, &n));
    return g;
}

// Polygon handle for rectangles and polygons.
void polygon_of(const std::string& djson, Polygon& poly) {
    const json j = json::parse(djson);
    if (j["kind"] == "rectangle") {
        const double a = j["a"], b = j["b"];
        const double xy[] = {0, 0, a, 0, a, b, 0, b};
        check(wl_polygon_create(xy, 4, poly.out()));
    } else if (j["kind"] == "polygon") {
        check(wl_polygon_from_json(djson.c_str(), poly.out()));
    } else {
        invalid("this command needs a polygonal domain");
    }
}

// Exact spectra for rectangles and disks, Dirichlet FD spectra for polygons.
void build_spectrum(const std::string& djson, int bc, double lambda_max, const Config& c, Spectrum& spec) {
    if (domain_kind(djson) != "polygon") {
        check(wl_spectrum_create(djson.c_str(), bc, lambda_max, spec.out()));
        return;
    }
    if (bc != WL_DIRICHLET) invalid("polygon spectra are available for Dirichlet conditions only");
    const Geometry g = geometry_of(djson);
    int k = static_cast<int>(lambda_max * g.area / (4 * kPi) * 1.3) + 10;
    for (int attempt = 0; attempt < 6; ++attempt) {
        Spectrum trial;
        check(wl_spectrum_create_fd(djson.c_str(), c.grid_h, k, trial.out()));
        double top = 0;
        check(wl_spectrum_complete_below(trial.get(), &top));
        if (top >= lambda_max) {
            std::swap(spec.p, trial.p);
            return;
        }
        k *= 2;
    }
    throw CliError{WL_ERR_CAPACITY, "FD spectrum does not reach the requested lambda"};
}

std::vector<double> gammas_or(const Config& c, std::vector<double> fallback) {
    return c.gammas.empty() ? fallback : c.gammas;
}

// ---------------------------------------------------------------------------

json cmd_constants(const Config& c) {
    json rows = json::array();
    for (double g : gammas_or(c, {0.0, 1.0}))
        for (int d : c.dims.empty() ? std::vector<int>{2} : c.dims) {
            double L = 0;
            check(wl_lt_constant(g, d, &L));
            rows.push_back({{"gamma", g}, {"dim", d}, {"L", L}});
        }
    return {{"rows", rows}};
}

json cmd_spectrum(const Config& c) {
    const std::string dj = domain_json(c.domain);
    const int bc = parse_bc(c.bc);
    double lmax = c.lambda_max;
    if (lmax <= 0.0) {
        if (c.lambda_spec.empty()) invalid("spectrum needs --lambda-max or --lambda");
        lmax = parse_grid(c.lambda_spec, "lambda").back();
    }
    Spectrum spec;
    build_spectrum(dj, bc, lmax, c, spec);
    if (!c.save.empty()) check(wl_spectrum_save(spec.get(), c.save.c_str()));
    char* header = nullptr;
    check(wl_spectrum_header_json(spec.get(), &header));
    std::size_t n = 0;
    check(wl_spectrum_size(spec.get(), &n));
    std::vector<double> ev(std::min<std::size_t>(n, 10));
    check(wl_spectrum_eigenvalues(spec.get(), ev.data(), ev.size(), &n));
    return {{"header", json::parse(take_string(header))}, {"count", n}, {"first", ev}, {"saved_to", c.save}};
}

json cmd_weyl_check(const Config& c) {
    const std::string dj = domain_json(c.domain);
    const int bc = parse_bc(c.bc);
    const std::vector<double> lambdas = parse_grid(c.lambda_spec, "lambda");
    const Geometry g = geometry_of(dj);
    const int dim = c.dims.empty() ? 2 : c.dims.front();
    if (dim != 2) invalid("weyl-check works with planar domains (--dim 2)");
    Spectrum spec;
    build_spectrum(dj, bc, lambdas.back(), c, spec);
    json sweeps = json::array();
    for (double gamma : gammas_or(c, {1.0})) {
        json rows = json::array();
        bool all_within = true;
        for (double lam : lambdas) {
            double computed = 0, predicted = 0, envelope = 0;
            check(wl_spectrum_riesz_mean(spec.get(), lam, gamma, &computed));
            check(wl_two_term_prediction(lam, gamma, 2, g.area, g.perimeter, bc, &predicted));
            const bool has_env = gamma > 0.0;
            if (has_env) check(wl_error_envelope(lam, gamma, g.perimeter, g.inradius, 2, bc, 0.9, &envelope));
            const double r = computed - predicted;
            const bool within = !has_env || std::abs(r) <= envelope;
            all_within = all_within && within;
            rows.push_back({{"lambda", lam},
                            {"computed", computed},
                            {"predicted", predicted},
                            {"remainder", r},
                            {"remainder_over_lambda_gamma", r / std::pow(lam, gamma)},
                            {"remainder_over_boundary_order", r / std::pow(lam, gamma + 0.5)},
                            {"envelope", has_env ? json(envelope) : json(nullptr)},
                            {"within_envelope", within}});
        }
        json sweep{{"gamma", gamma}, {"rows", rows}, {"all_within_envelope", all_within}};
        if (!g.angles.empty()) {
            double cs = 0;
            check(wl_corner_sum(g.angles.data(), g.angles.size(), &cs));
            sweep["corner_sum"] = cs;
        }
        sweeps.push_back(sweep);
    }
    return {{"geometry", {{"area", g.area}, {"perimeter", g.perimeter}, {"inradius", g.inradius}}}, {"sweeps", sweeps}};
}

json cmd_polygon_check(const Config& c) {
    const std::string dj = domain_json(c.domain);
    const int bc = parse_bc(c.bc);
    const std::vector<double> lambdas = parse_grid(c.lambda_spec, "lambda");
    const Geometry g = geometry_of(dj);
    if (g.angles.empty()) invalid("polygon-check needs a polygonal domain");
    double cs = 0;
    check(wl_corner_sum(g.angles.data(), g.angles.size(), &cs));
    Spectrum spec;
    build_spectrum(dj, bc, lambdas.back(), c, spec);
    json out = json::array();
    for (double gamma : gammas_or(c, {1.0})) {
        json rows = json::array();
        double mean = 0;
        for (double lam : lambdas) {
            double computed = 0, two = 0, three = 0;
            check(wl_spectrum_riesz_mean(spec.get(), lam, gamma, &computed));
            check(wl_two_term_prediction(lam, gamma, 2, g.area, g.perimeter, bc, &two));
            check(wl_three_term_prediction(lam, gamma, g.area, g.perimeter, g.angles.data(), g.angles.size(), bc, &three));
            const double third = (computed - two) / std::pow(lam, gamma);
            mean += third / lambdas.size();
            rows.push_back({{"lambda", lam}, {"computed", computed}, {"third_term", third},
                            {"three_term_remainder", computed - three}});
        }
        out.push_back({{"gamma", gamma}, {"corner_sum", cs}, {"mean_third_term", mean},
                       {"relative_deviation", std::abs(mean - cs) / std::abs(cs)}, {"rows", rows}});
    }
    return {{"sweeps", out}};
}

json cmd_heat_check(const Config& c) {
    const std::string dj = domain_json(c.domain);
    const int bc = parse_bc(c.bc);
    const std::vector<double> ts = parse_grid(c.t_spec.empty() ? "0.005,0.01,0.02" : c.t_spec, "t");
    const Geometry g = geometry_of(dj);
    // Spectrum range chosen so the heat-trace tail falls below the tolerance at the smallest t.
    const double tmin = ts.front();
    double lmax = (40.0 + std::max(0.0, std::log(g.area / tmin / c.tol))) / tmin;
    Spectrum spec;
    build_spectrum(dj, bc, lmax, c, spec);
    std::optional<std::pair<double, double>> corner;  // (alpha, R)
    if (!g.angles.empty() && bc == WL_DIRICHLET) {
        Polygon poly;
        polygon_of(dj, poly);
        double alpha = 0, R = 0;
        check(wl_polygon_corner_params(poly.get(), &alpha, &R));
        corner = {alpha, R};
    }
    json rows = json::array();
    for (double t : ts) {
        double value = 0, tail = 0, brown = 0;
        int flagged = 0;
        check(wl_spectrum_heat_trace(spec.get(), t, c.tol, &value, &tail, &flagged));
        check(wl_heat_two_term_prediction(t, 2, g.area, g.perimeter, bc, &brown));
        json row{{"t", t},
                 {"trace", value},
                 {"tail_bound", tail},
                 {"tail_flagged", flagged != 0},
                 {"two_term", brown},
                 {"two_term_residual", value - brown},
                 {"residual_over_boundary_order", (value - brown) * std::sqrt(t)}};
        if (corner) {
            double poly_pred = 0, bound = 0;
            check(wl_heat_polygon_prediction(t, g.area, g.perimeter, g.angles.data(), g.angles.size(), &poly_pred));
            check(wl_heat_polygon_remainder_bound(t, static_cast<int>(g.angles.size()), g.area, corner->first,
                                                  corner->second, &bound));
            row["polygon_prediction"] = poly_pred;
            row["polygon_residual"] = value - poly_pred;
            row["polygon_bound"] = bound;
            row["within_polygon_bound"] = std::abs(value - poly_pred) <= bound + tail;
        }
        rows.push_back(row);
    }
    json out{{"rows", rows}, {"lambda_max", lmax}};
    if (corner) out["corner_params"] = {{"alpha_min", corner->first}, {"R", corner->second}};
    return out;
}

json cmd_pointwise_check(const Config& c) {
    const json dom = json::parse(domain_json(c.domain));
    if (dom["kind"] != "rectangle") invalid("pointwise-check needs a rectangle domain");
    const double a = dom["a"], b = dom["b"];
    const double x = c.x < 0 ? 0.5 * a : c.x, y = c.y < 0 ? 0.5 * b : c.y;
    const int bc = parse_bc(c.bc);
    const std::vector<double> lambdas = parse_grid(c.lambda_spec, "lambda");
    json out = json::array();
    for (double gamma : gammas_or(c, {1.0})) {
        char* s = nullptr;
        check(wl_order_check_json(a, b, bc, x, y, gamma, lambdas.data(), lambdas.size(), &s));
        json r = json::parse(take_string(s));
        r["gamma"] = gamma;
        out.push_back(r);
    }
    return {{"point", {x, y}}, {"checks", out}};
}

json cmd_tauberian_demo(const Config& c) {
    const std::vector<double> eps = c.eps.empty() ? std::vector<double>{0.1, 0.05} : c.eps;
    const std::vector<int> ms = c.ms.empty() ? std::vector<int>{1, 2} : c.ms;
    struct Measure {
        std::string name;
        std::vector<double> loc, w;
    };
    const std::vector<Measure> measures = {{"delta_1", {1.0}, {1.0}},
                                           {"delta_1_plus_delta_2", {1.0, 2.0}, {1.0, 1.0}},
                                           {"three_atoms", {0.7, 2.3, 5.1}, {1.0, 0.5, 2.0}}};
    json levels = json::array();
    for (double e : eps) {
        Hierarchy h;
        check(wl_hierarchy_create(e, c.order, h.out()));
        json coeffs = json::array();
        for (int m = 0; m <= c.order; ++m) {
            double rec = 0, closed = 0, I = 0;
            check(wl_hierarchy_coefficient(h.get(), m, &rec, &closed));
            check(wl_hierarchy_integral(h.get(), m, &I));
            coeffs.push_back({{"m", m}, {"b_recursion", rec}, {"b_closed_form", closed}, {"integral", I}});
        }
        char* maj = nullptr;
        check(wl_hierarchy_majorants_json(h.get(), &maj));
        json identities = json::array();
        for (const Measure& mu : measures)
            for (int m : ms) {
                char* rep = nullptr;
                check(wl_identity_check(h.get(), mu.loc.data(), mu.w.data(), mu.loc.size(), m, c.tau, &rep));
                json r = json::parse(take_string(rep));
                r["measure"] = mu.name;
                identities.push_back(r);
            }
        if (!c.table_dir.empty())
            for (int k = 0; k <= c.order; ++k) {
                std::ostringstream path;
                path << c.table_dir << "/phi_eps" << e << "_k" << k << ".csv";
                check(wl_hierarchy_export_csv(h.get(), k, path.str().c_str()));
            }
        levels.push_back({{"eps", e}, {"coefficients", coeffs}, {"majorants", json::parse(take_string(maj))},
                          {"identities", identities}});
    }
    return {{"hierarchies", levels}};
}

json cmd_geometry(const Config& c) {
    json out;
    const std::string dj = domain_json(c.domain);
    if (domain_kind(dj) != "disk") {
        Polygon poly;
        polygon_of(dj, poly);
        double area = 0, per = 0, rin = 0, cx = 0, cy = 0, theta = 0, alpha = 0, R = 0;
        check(wl_polygon_area(poly.get(), &area));
        check(wl_polygon_perimeter(poly.get(), &per));
        check(wl_polygon_inradius(poly.get(), &rin, &cx, &cy));
        check(wl_polygon_theta(poly.get(), &theta));
        check(wl_polygon_corner_params(poly.get(), &alpha, &R));
        out["domain"] = {{"area", area},         {"perimeter", per},   {"inradius", rin}, {"center", {cx, cy}},
                         {"theta_omega", theta}, {"alpha_min", alpha}, {"corner_radius", R}};
    }

    // Randomized invariant suite.
    std::mt19937_64 rng(c.seed);
    int identity_failures = 0, layer_violations = 0, profile_failures = 0, minkowski_failures = 0;
    for (int i = 0; i < c.count; ++i) {
        Polygon poly;
        check(wl_polygon_random(rng(), poly.out()));
        double area = 0, per = 0, rin = 0, cx = 0, cy = 0;
        check(wl_polygon_area(poly.get(), &area));
        check(wl_polygon_perimeter(poly.get(), &per));
        check(wl_polygon_inradius(poly.get(), &rin, &cx, &cy));
        double dc = 0;
        check(wl_polygon_distance_to_boundary(poly.get(), cx, cy, &dc));
        // Inradius bounds: r_in Per / 2 <= |Ω| <= r_in Per, and the center attains r_in.
        if (!(0.5 * rin * per <= area * (1 + 1e-12) && area <= rin * per * (1 + 1e-12)) ||
            std::abs(dc - rin) > 1e-9 * rin)
            ++identity_failures;
        for (int k = 1; k <= 10; ++k) {
            const double s = rin * k / 10.0;
            double vol = 0;
            check(wl_polygon_distance_level_volume(poly.get(), s, &vol));
            if (vol > s * per * (1 + 1e-12)) ++layer_violations;
        }
        std::vector<double> radii;
        for (int k = 1; k <= 40; ++k) radii.push_back(k * 0.05 * std::sqrt(area));
        std::vector<double> prof(radii.size());
        if (wl_polygon_bishop_gromov(poly.get(), cx, cy, radii.data(), radii.size(), prof.data()) != WL_OK)
            ++profile_failures;
        wl_minkowski_bounds mb{};
        for (double f : {0.1, 0.5, 1.0, 3.0}) {
            check(wl_polygon_minkowski_bounds(poly.get(), f * rin, 1.0, &mb));
            if (!mb.all_hold) ++minkowski_failures;
        }
    }
    // Steiner formula against Monte Carlo on one random polygon.
    json steiner;
    if (c.mc_samples > 0) {
        Polygon poly;
        check(wl_polygon_random(rng(), poly.out()));
        std::size_t n = 0;
        check(wl_polygon_size(poly.get(), &n));
        std::vector<double> xy(2 * n);
        check(wl_polygon_vertices(poly.get(), xy.data(), n));
        double rin = 0;
        check(wl_polygon_inradius(poly.get(), &rin, nullptr, nullptr));
        const double r = rin;
        double x0 = xy[0], x1 = xy[0], y0 = xy[1], y1 = xy[1];
        for (std::size_t i = 0; i < n; ++i) {
            x0 = std::min(x0, xy[2 * i]), x1 = std::max(x1, xy[2 * i]);
            y0 = std::min(y0, xy[2 * i + 1]), y1 = std::max(y1, xy[2 * i + 1]);
        }
        x0 -= r, x1 += r, y0 -= r, y1 += r;
        std::uniform_real_distribution<double> ux(x0, x1), uy(y0, y1);
        long hits = 0;
        for (int i = 0; i < c.mc_samples; ++i) {
            double d = 0;
            check(wl_polygon_distance_to_set(poly.get(), ux(rng), uy(rng), &d));
            if (d <= r) ++hits;
        }
        const double box = (x1 - x0) * (y1 - y0);
        const double p = double(hits) / c.mc_samples;
        const double estimate = p * box, sigma = box * std::sqrt(p * (1 - p) / c.mc_samples);
        double exact = 0;
        check(wl_polygon_minkowski_area(poly.get(), r, &exact));
        steiner = {{"radius", r},     {"exact", exact},  {"monte_carlo", estimate},
                   {"sigma", sigma}, {"within_3_sigma", std::abs(exact - estimate) <= 3 * sigma}};
    }
    out["suite"] = {{"polygons", c.count},
                    {"identity_failures", identity_failures},
                    {"layer_bound_violations", layer_violations},
                    {"profile_failures", profile_failures},
                    {"minkowski_bound_failures", minkowski_failures},
                    {"steiner", steiner}};
    return out;
}

json cmd_shape_opt(const Config& c) {
    const int bc = parse_bc(c.bc);
    const std::vector<double> lambdas = parse_grid(c.lambda_spec, "lambda");
    const double gamma = gammas_or(c, {1.0}).front();
    json runs = json::array();
    for (double lam : lambdas) {
        Run run;
        check(wl_optimize_rectangle(lam, gamma, bc, c.tol, 1.0, run.out()));
        char* s = nullptr;
        check(wl_run_json(run.get(), &s));
        runs.push_back(json::parse(take_string(s)));
        if (!c.trace_csv.empty()) {
            std::ostringstream path;
            path << c.trace_csv << "_lambda" << lam << ".csv";
            check(wl_run_save_csv(run.get(), path.str().c_str()));
        }
    }
    char* s = nullptr;
    check(wl_convergence_study_json(lambdas.data(), lambdas.size(), gamma, bc, c.tol, &s));
    json out{{"runs", runs}, {"convergence", json::parse(take_string(s))}};
    if (c.experimental) {
        if (bc != WL_DIRICHLET) invalid("the polygon family is available for Dirichlet conditions only");
        const std::vector<double> stretches =
            c.stretches.empty() ? std::vector<double>{1.0, 1.1, 1.25, 1.5} : c.stretches;
        Run run;
        check(wl_optimize_stretched_polygon(c.sides, lambdas.front(), gamma, c.grid_h, stretches.data(),
                                            stretches.size(), run.out()));
        char* p = nullptr;
        check(wl_run_json(run.get(), &p));
        out["experimental_polygon"] = json::parse(take_string(p));
    }
    return out;
}

void emit(const json& report, const std::string& path) {
    const std::string text = report.dump(2);
    if (path.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw CliError{WL_ERR_IO, "cannot write report to '" + path + "'"};
    out << text << '\n';
}

int report_error(int status, const std::string& message) {
    const json err{{"error", {{"status", wl_status_name(status)}, {"code", status}, {"message", message}}},
                   {"version", wl_version()}};
    std::cout << err.dump(2) << '\n';
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification campaigns for two-term Weyl asymptotics and Riesz means"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(wl_version()));
    Config cfg;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--domain", cfg.domain, "unit-square | rect:a,b | disk:R | polygon:file.json");
        sub->add_option("--bc", cfg.bc, "dirichlet | neumann");
        sub->add_option("--gamma", cfg.gammas, "Riesz exponent(s)")->delimiter(',');
        sub->add_option("--lambda", cfg.lambda_spec, "start:stop:count (log-spaced), :lin suffix, or a list");
        sub->add_option("--t", cfg.t_spec, "heat times, same syntax as --lambda");
        sub->add_option("--grid-h", cfg.grid_h, "finite-difference mesh size");
        sub->add_option("--tol", cfg.tol, "tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--out", cfg.out, "report path (stdout when omitted)");
        sub->add_option("--seed", cfg.seed, "seed for randomized suites");
        sub->add_flag("--experimental", cfg.experimental, "enable experimental families");
    };

    struct Entry {
        const char* name;
        const char* help;
        json (*run)(const Config&);
    };
    const Entry entries[] = {
        {"constants", "semiclassical constants table", cmd_constants},
        {"spectrum", "generate and serialize a spectrum", cmd_spectrum},
        {"weyl-check", "two-term remainder sweeps with envelope verdicts", cmd_weyl_check},
        {"polygon-check", "third-term extraction for polygons", cmd_polygon_check},
        {"heat-check", "heat-trace residuals", cmd_heat_check},
        {"pointwise-check", "pointwise remainder slopes on rectangles", cmd_pointwise_check},
        {"tauberian-demo", "mollifier hierarchy, coefficients and identity residuals", cmd_tauberian_demo},
        {"geometry", "convex geometry invariant suite", cmd_geometry},
        {"shape-opt", "rectangle shape optimization", cmd_shape_opt},
    };
    std::vector<std::pair<CLI::App*, const Entry*>> subs;
    for (const Entry& e : entries) {
        CLI::App* sub = app.add_subcommand(e.name, e.help);
        common(sub);
        subs.push_back({sub, &e});
        const std::string name = e.name;
        if (name == "constants") sub->add_option("--dim", cfg.dims, "dimension(s)")->delimiter(',');
        if (name == "weyl-check") sub->add_option("--dim", cfg.dims, "dimension");
        if (name == "spectrum") {
            sub->add_option("--lambda-max", cfg.lambda_max, "spectral cutoff");
            sub->add_option("--save", cfg.save, "write the spectrum to this file");
        }
        if (name == "pointwise-check") {
            sub->add_option("--x", cfg.x, "point x (default: center)");
            sub->add_option("--y", cfg.y, "point y (default: center)");
        }
        if (name == "tauberian-demo") {
            sub->add_option("--eps", cfg.eps, "smoothing widths")->delimiter(',');
            sub->add_option("--m", cfg.ms, "identity orders")->delimiter(',');
            sub->add_option("--order", cfg.order, "hierarchy depth");
            sub->add_option("--tau", cfg.tau, "evaluation point");
            sub->add_option("--table-dir", cfg.table_dir, "directory for CSV tables");
        }
        if (name == "geometry") {
            sub->add_option("--count", cfg.count, "random polygons")->check(CLI::NonNegativeNumber);
            sub->add_option("--mc-samples", cfg.mc_samples, "Monte Carlo samples")->check(CLI::NonNegativeNumber);
        }
        if (name == "shape-opt") {
            sub->add_option("--trace-csv", cfg.trace_csv, "prefix for trace CSV files");
            sub->add_option("--sides", cfg.sides, "polygon sides (experimental)");
            sub->add_option("--stretch", cfg.stretches, "stretch factors (experimental)")->delimiter(',');
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return report_error(WL_ERR_INVALID, e.what());
    }

    for (const auto& [sub, entry] : subs) {
        if (!sub->parsed()) continue;
        try {
            json report{{"version", wl_version()}, {"config", config_json(entry->name, cfg)}};
            report["results"] = entry->run(cfg);
            emit(report, cfg.out);
            return 0;
        } catch (const CliError& e) {
            return report_error(e.status, e.message);
        } catch (const json::exception& e) {
            return report_error(WL_ERR_INVALID, e.what());
        }
    }
    return report_error(WL_ERR_INVALID, "no subcommand");
}
