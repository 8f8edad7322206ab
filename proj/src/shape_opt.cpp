#include "weylab/shape_opt.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "weylab/errors.hpp"
#include "weylab/numerics.hpp"

namespace weylab {

const char* to_string(ShapeFamily f) { return f == ShapeFamily::Rectangle ? "rectangle" : "stretched-polygon"; }

double rectangle_objective(double aspect, double lambda, double gamma, BoundaryCondition bc, double area) {
    require(aspect > 0.0 && std::isfinite(aspect), "rectangle_objective: aspect must be positive");
    require(area > 0.0, "rectangle_objective: area must be positive");
    const double s = std::sqrt(area);
    return rectangle_riesz_mean(s / std::sqrt(aspect), s * std::sqrt(aspect), bc, lambda, gamma);
}

namespace {

bool better(double a, double b, bool maximize) { return maximize ? a > b : a < b; }

void pick_best(OptimizationRun& run) {
    run.best = run.trace.front();
    for (const TracePoint& p : run.trace)
        if (better(p.objective, run.best.objective, run.maximize)) run.best = p;
}

}  // namespace

OptimizationRun optimize_rectangle(double lambda, double gamma, BoundaryCondition bc, double tol, double area) {
    require(lambda > 0.0 && std::isfinite(lambda), "optimize_rectangle: lambda must be positive");
    require(gamma >= 0.0, "optimize_rectangle: gamma must be >= 0");
    require(tol > 0.0, "optimize_rectangle: tol must be positive");
    OptimizationRun run;
    run.lambda = lambda;
    run.gamma = gamma;
    run.area = area;
    run.bc = bc;
    run.maximize = bc == BoundaryCondition::Dirichlet;
    auto eval = [&](double rho) {
        TracePoint p{rho, rectangle_objective(rho, lambda, gamma, bc, area), 0.0};
        run.trace.push_back(p);
        return p.objective;
    };

    const std::vector<double> grid = lin_space(kMinAspect, 1.0, kPrescanPoints);
    std::size_t best = 0;
    bool all_zero = true;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double v = eval(grid[i]);
        all_zero = all_zero && v == 0.0;
        if (better(v, run.trace[best].objective, run.maximize)) best = i;
    }
    if (all_zero) {
        run.degenerate = true;
        pick_best(run);
        return run;
    }

    // Golden section on the bracket of neighbouring grid points; the sign flip turns minimization into maximization.
    const double sign = run.maximize ? 1.0 : -1.0;
    double lo = grid[best == 0 ? 0 : best - 1];
    double hi = grid[std::min(best + 1, grid.size() - 1)];
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
    double f1 = sign * eval(x1), f2 = sign * eval(x2);
    while (hi - lo > tol) {
        if (f1 >= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = sign * eval(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = sign * eval(x2);
        }
    }
    pick_best(run);
    return run;
}

ConvergenceStudy optimizer_convergence_study(const std::vector<double>& lambdas, double gamma, BoundaryCondition bc,
                                             double tol) {
    require(!lambdas.empty(), "optimizer_convergence_study: empty lambda list");
    for (std::size_t i = 1; i < lambdas.size(); ++i)
        require(lambdas[i] >= lambdas[i - 1], "optimizer_convergence_study: lambdas must be nondecreasing");
    ConvergenceStudy study;
    study.rows.resize(lambdas.size());
    parallel_for(lambdas.size(), [&](std::size_t i) {
        const OptimizationRun run = optimize_rectangle(lambdas[i], gamma, bc, tol);
        study.rows[i] = {lambdas[i], run.best.param, std::abs(run.best.param - 1.0), run.degenerate};
    });
    for (std::size_t i = 1; i < study.rows.size(); ++i)
        if (study.rows[i].symmetry_gap > study.rows[i - 1].symmetry_gap) study.gaps_nonincreasing = false;
    return study;
}

RankingCheck ranking_check(double lambda, double gamma, BoundaryCondition bc, const std::vector<double>& aspects) {
    const std::size_t n = aspects.size();
    std::vector<double> exact(n), predicted(n), envelope(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double rho = aspects[i];
        const double a = 1.0 / std::sqrt(rho), b = std::sqrt(rho);
        exact[i] = rectangle_objective(rho, lambda, gamma, bc);
        predicted[i] = two_term_prediction(lambda, gamma, 2, 1.0, 2.0 * (a + b), bc);
        envelope[i] = error_envelope(lambda, gamma, 2.0 * (a + b), 0.5 * std::min(a, b), 2, bc);
    }
    RankingCheck rc;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            ++rc.pairs;
            const double gap = predicted[i] - predicted[j];
            if (std::abs(gap) <= envelope[i] + envelope[j]) continue;
            ++rc.resolved_pairs;
            if ((gap > 0.0) == (exact[i] - exact[j] > 0.0)) ++rc.agreements;
        }
    return rc;
}

namespace {

ConvexPolygon stretched_polygon(int sides, double s) {
    const double side = std::sqrt(4.0 * std::tan(kPi / sides) / sides);  // unit area
    const ConvexPolygon reg = ConvexPolygon::regular(sides, side);
    std::vector<Point> v;
    for (const Point& p : reg.vertices()) v.push_back({s * p.x, p.y / s});
    return ConvexPolygon(v);
}

double fd_riesz(const ConvexPolygon& poly, double h, double lambda, double gamma) {
    // Weyl estimate with a margin, then grow until the spectrum covers lambda.
    int k = static_cast<int>(lambda * poly.area() / (4.0 * kPi) * 1.3) + 10;
    for (int attempt = 0; attempt < 6; ++attempt) {
        const Spectrum spec = polygon_dirichlet_spectrum_fd(poly, h, k);
        if (spec.eigenvalues.back() >= lambda) return riesz_mean(spec, lambda, gamma);
        k *= 2;
    }
    fail(ErrorKind::Capacity, "optimize_stretched_polygon: FD spectrum does not reach lambda");
}

}  // namespace

OptimizationRun optimize_stretched_polygon(int sides, double lambda, double gamma, double h,
                                           const std::vector<double>& stretches) {
    require(sides >= 3, "optimize_stretched_polygon: need at least three sides");
    require(lambda > 0.0 && gamma >= 0.0 && h > 0.0, "optimize_stretched_polygon: invalid lambda, gamma or h");
    require(!stretches.empty(), "optimize_stretched_polygon: no stretch factors");
    OptimizationRun run;
    run.family = ShapeFamily::StretchedPolygon;
    run.polygon_sides = sides;
    run.lambda = lambda;
    run.gamma = gamma;
    run.trace.resize(stretches.size());
    parallel_for(stretches.size(), [&](std::size_t i) {
        require(stretches[i] > 0.0, "optimize_stretched_polygon: stretch must be positive");
        const ConvexPolygon poly = stretched_polygon(sides, stretches[i]);
        const double coarse = fd_riesz(poly, h, lambda, gamma);
        const double fine = fd_riesz(poly, 0.5 * h, lambda, gamma);
        run.trace[i] = {stretches[i], fine, std::abs(fine - coarse)};
    });
    bool all_zero = true;
    for (const TracePoint& p : run.trace) all_zero = all_zero && p.objective == 0.0;
    run.degenerate = all_zero;
    pick_best(run);
    return run;
}

std::string run_json(const OptimizationRun& run) {
    nlohmann::json trace = nlohmann::json::array();
    for (const TracePoint& p : run.trace) trace.push_back({p.param, p.objective, p.error_bar});
    nlohmann::json j{{"family", to_string(run.family)},
                     {"lambda", run.lambda},
                     {"gamma", run.gamma},
                     {"area", run.area},
                     {"bc", to_string(run.bc)},
                     {"orientation", run.maximize ? "maximize" : "minimize"},
                     {"degenerate", run.degenerate},
                     {"best", {{"param", run.best.param}, {"objective", run.best.objective}, {"error_bar", run.best.error_bar}}},
                     {"trace_columns", {"param", "objective", "error_bar"}},
                     {"trace", trace}};
    if (run.family == ShapeFamily::StretchedPolygon) j["sides"] = run.polygon_sides;
    return j.dump(2);
}

std::string convergence_json(const ConvergenceStudy& study) {
    nlohmann::json rows = nlohmann::json::array();
    for (const ConvergenceRow& r : study.rows)
        rows.push_back({{"lambda", r.lambda}, {"best_aspect", r.best_aspect}, {"symmetry_gap", r.symmetry_gap},
                        {"degenerate", r.degenerate}});
    return nlohmann::json{{"rows", rows}, {"gaps_nonincreasing", study.gaps_nonincreasing}}.dump(2);
}

void save_trace_csv(const OptimizationRun& run, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(ErrorKind::Io, "cannot open '" + path + "' for writing");
    out << "param,objective,error_bar\n";
    char buf[128];
    for (const TracePoint& p : run.trace) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g", p.param, p.objective, p.error_bar);
        out << buf << '\n';
    }
}

}  // namespace weylab
