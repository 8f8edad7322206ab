#include "weylab/weylab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <random>
#include <string>

#include <json.hpp>

#include "weylab/convex_geometry.hpp"
#include "weylab/errors.hpp"
#include "weylab/riesz_calculus.hpp"
#include "weylab/shape_opt.hpp"
#include "weylab/spectra.hpp"
#include "weylab/tauberian.hpp"
#include "weylab/weyl_constants.hpp"

using namespace weylab;

struct wl_spectrum {
    Spectrum value;
};
struct wl_polygon {
    ConvexPolygon value;
};
struct wl_sampled {
    SampledFunction value;
};
struct wl_hierarchy {
    PhiHierarchy value;
};
struct wl_run {
    OptimizationRun value;
};

namespace {

thread_local std::string g_last_error;

int status_of(ErrorKind k) {
    switch (k) {
        case ErrorKind::InvalidArgument: return WL_ERR_INVALID;
        case ErrorKind::OutOfCertifiedRange: return WL_ERR_RANGE;
        case ErrorKind::Capacity: return WL_ERR_CAPACITY;
        case ErrorKind::Convergence: return WL_ERR_CONVERGENCE;
        case ErrorKind::InternalConsistency: return WL_ERR_CONTRACT;
        case ErrorKind::Io: return WL_ERR_IO;
    }
    return WL_ERR_INTERNAL;
}

template <class F>
int guarded(F&& body) {
    try {
        body();
        g_last_error.clear();
        return WL_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return WL_ERR_CAPACITY;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return WL_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return WL_ERR_INTERNAL;
    }
}

int null_arg(const char* what) {
    g_last_error = std::string("null argument: ") + what;
    return WL_ERR_NULL;
}

#define WL_NONNULL(p) \
    if (!(p)) return null_arg(#p)

BoundaryCondition to_bc(int bc) {
    if (bc == WL_DIRICHLET) return BoundaryCondition::Dirichlet;
    if (bc == WL_NEUMANN) return BoundaryCondition::Neumann;
    fail(ErrorKind::InvalidArgument, "boundary condition must be WL_DIRICHLET or WL_NEUMANN");
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::vector<double> to_vector(const double* p, size_t n) { return p ? std::vector<double>(p, p + n) : std::vector<double>{}; }

AtomicMeasure make_measure(const double* loc, const double* w, size_t n) {
    if (n > 0 && (!loc || !w)) fail(ErrorKind::InvalidArgument, "atom arrays must not be null");
    AtomicMeasure mu;
    for (size_t i = 0; i < n; ++i) mu.atoms.push_back({loc[i], w[i]});
    return mu;
}

}  // namespace

extern "C" {

const char* wl_version(void) { return "0.1.0"; }
const char* wl_last_error(void) { return g_last_error.c_str(); }

const char* wl_status_name(int status) {
    switch (status) {
        case WL_OK: return "ok";
        case WL_ERR_NULL: return "null-argument";
        case WL_ERR_INVALID: return "invalid-argument";
        case WL_ERR_RANGE: return "out-of-certified-range";
        case WL_ERR_CAPACITY: return "capacity";
        case WL_ERR_CONVERGENCE: return "convergence";
        case WL_ERR_CONTRACT: return "internal-consistency";
        case WL_ERR_IO: return "io";
        default: return "internal";
    }
}

void wl_string_free(char* s) { std::free(s); }

// ---- constants and predictors

int wl_lt_constant(double gamma, int dim, double* out) {
    WL_NONNULL(out);
    return guarded([&] { *out = lt_constant(gamma, dim); });
}

int wl_two_term_prediction(double lambda, double gamma, int dim, double volume, double perimeter, int bc, double* out) {
    WL_NONNULL(out);
    return guarded([&] { *out = two_term_prediction(lambda, gamma, dim, volume, perimeter, to_bc(bc)); });
}

int wl_corner_sum(const double* angles, size_t n, double* out) {
    WL_NONNULL(out);
    return guarded([&] { *out = corner_sum(to_vector(angles, n)); });
}

int wl_three_term_prediction(double lambda, double gamma, double area, double perimeter, const double* angles, size_t n,
                             int bc, double* out) {
    WL_NONNULL(out);
    return guarded(
        [&] { *out = three_term_polygon_prediction(lambda, gamma, area, perimeter, to_vector(angles, n), to_bc(bc)); });
}

int wl_heat_two_term_prediction(double t, int dim, double volume, double perimeter, int bc, double* out) {
    WL_NONNULL(out);
    return guarded([&] { *out = heat_two_term_prediction(t, dim, volume, perimeter, to_bc(bc)); });
}

int wl_heat_polygon_prediction(double t, double area, double perimeter, const double* angles, size_t n, double* out) {
    WL_NONNULL(out);
    return guarded([&] { *out = heat_polygon_prediction(t, area, perimeter, to_vector(angles, n)); });
}

int wl_heat_polygon_remainder_bound(double t, int n_corners, double area, double min_angle, double radius, double* out) {
    WL_NONNULL(out);
    return guarded([&] { *out = heat_polygon_remainder_bound(t, n_corners, area, min_angle, radius); });
}

int wl_envelope_exponent(double gamma, double alpha_fraction, double* out) {
    WL_NONNULL(out);
    return guarded([&] { *out = envelope_exponent(gamma, alpha_fraction); });
}

int wl_error_envelope(double lambda, double gamma, double perimeter, double inradius, int dim, int bc,
                      double alpha_fraction, double* out) {
    WL_NONNULL(out);
    return guarded(
        [&] { *out = error_envelope(lambda, gamma, perimeter, inradius, dim, to_bc(bc), alpha_fraction); });
}

int wl_domain_functionals(const char* domain_json, double* area, double* perimeter, double* inradius) {
    WL_NONNULL(domain_json);
    return guarded([&] {
        const Domain d = domain_from_json(domain_json);
        if (area) *area = domain_area(d);
        if (perimeter) *perimeter = domain_perimeter(d);
        if (inradius) *inradius = domain_inradius(d);
    });
}

int wl_domain_angles(const char* domain_json, double* out, size_t cap, size_t* count) {
    WL_NONNULL(domain_json);
    WL_NONNULL(count);
    return guarded([&] {
        const std::vector<double> a = domain_angles(domain_from_json(domain_json));
        *count = a.size();
        if (out)
            for (size_t i = 0; i < std::min(cap, a.size()); ++i) out[i] = a[i];
    });
}

// ---- spectra

int wl_spectrum_create(const char* domain_json, int bc, double lambda_max, wl_spectrum** out) {
    WL_NONNULL(domain_json);
    WL_NONNULL(out);
    return guarded([&] {
        const Domain d = domain_from_json(domain_json);
        const BoundaryCondition b = to_bc(bc);
        Spectrum s;
        if (const auto* r = std::get_if<Rectangle>(&d))
            s = rectangle_spectrum(r->a, r->b, b, lambda_max);
        else if (const auto* c = std::get_if<Disk>(&d))
            s = disk_spectrum(c->radius, b, lambda_max);
        else
            fail(ErrorKind::InvalidArgument, "exact spectra exist for rectangles and disks; use the FD solver for polygons");
        *out = new wl_spectrum{std::move(s)};
    });
}

int wl_spectrum_create_fd(const char* polygon_json, double h, int num_eigs, wl_spectrum** out) {
    WL_NONNULL(polygon_json);
    WL_NONNULL(out);
    return guarded([&] {
        const Domain d = domain_from_json(polygon_json);
        const ConvexPolygon poly = [&] {
            if (const auto* p = std::get_if<ConvexPolygon>(&d)) return *p;
            if (const auto* r = std::get_if<Rectangle>(&d)) return ConvexPolygon::rectangle(r->a, r->b);
            fail(ErrorKind::InvalidArgument, "FD spectra need a polygonal domain");
        }();
        *out = new wl_spectrum{polygon_dirichlet_spectrum_fd(poly, h, num_eigs)};
    });
}

int wl_spectrum_load(const char* path, wl_spectrum** out) {
    WL_NONNULL(path);
    WL_NONNULL(out);
    return guarded([&] { *out = new wl_spectrum{load_spectrum(path)}; });
}

void wl_spectrum_free(wl_spectrum* s) { delete s; }

int wl_spectrum_save(const wl_spectrum* s, const char* path) {
    WL_NONNULL(s);
    WL_NONNULL(path);
    return guarded([&] { save_spectrum(s->value, path); });
}

int wl_spectrum_size(const wl_spectrum* s, size_t* out) {
    WL_NONNULL(s);
    WL_NONNULL(out);
    *out = s->value.eigenvalues.size();
    g_last_error.clear();
    return WL_OK;
}

int wl_spectrum_eigenvalues(const wl_spectrum* s, double* out, size_t cap, size_t* count) {
    WL_NONNULL(s);
    WL_NONNULL(count);
    const auto& ev = s->value.eigenvalues;
    *count = ev.size();
    if (out)
        for (size_t i = 0; i < std::min(cap, ev.size()); ++i) out[i] = ev[i];
    g_last_error.clear();
    return WL_OK;
}

int wl_spectrum_complete_below(const wl_spectrum* s, double* out) {
    WL_NONNULL(s);
    WL_NONNULL(out);
    *out = s->value.complete_below;
    g_last_error.clear();
    return WL_OK;
}

int wl_spectrum_header_json(const wl_spectrum* s, char** out) {
    WL_NONNULL(s);
    WL_NONNULL(out);
    return guarded([&] { *out = dup_string(spectrum_header_json(s->value)); });
}

int wl_spectrum_counting(const wl_spectrum* s, double lambda, long long* out) {
    WL_NONNULL(s);
    WL_NONNULL(out);
    return guarded([&] { *out = counting_function(s->value, lambda); });
}

int wl_spectrum_riesz_mean(const wl_spectrum* s, double lambda, double gamma, double* out) {
    WL_NONNULL(s);
    WL_NONNULL(out);
    return guarded([&] { *out = riesz_mean(s->value, lambda, gamma); });
}

int wl_spectrum_heat_trace(const wl_spectrum* s, double t, double tol, double* value, double* tail_bound, int* flagged) {
    WL_NONNULL(s);
    WL_NONNULL(value);
    return guarded([&] {
        const HeatTrace h = heat_trace(s->value, t, tol);
        *value = h.value;
        if (tail_bound) *tail_bound = h.tail_bound;
        if (flagged) *flagged = h.flagged ? 1 : 0;
    });
}

int wl_trace_gap(const wl_spectrum* dirichlet, const wl_spectrum* neumann, double lambda, double gamma, double* out) {
    WL_NONNULL(dirichlet);
    WL_NONNULL(neumann);
    WL_NONNULL(out);
    return guarded([&] { *out = dirichlet_neumann_trace_gap(dirichlet->value, neumann->value, lambda, gamma); });
}

int wl_rectangle_riesz_mean(double a, double b, int bc, double lambda, double gamma, double* out) {
    WL_NONNULL(out);
    return guarded([&] { *out = rectangle_riesz_mean(a, b, to_bc(bc), lambda, gamma); });
}

int wl_pointwise_spectral_function(double a, double b, double x, double y, double lambda, double gamma, int bc,
                                   double* out) {
    WL_NONNULL(out);
    return guarded([&] { *out = pointwise_spectral_function(Rectangle{a, b}, Point{x, y}, lambda, gamma, to_bc(bc)); });
}

// ---- Riesz calculus

int wl_sampled_create(const double* grid, const double* values, size_t n, int interp, wl_sampled** out) {
    WL_NONNULL(grid);
    WL_NONNULL(values);
    WL_NONNULL(out);
    return guarded([&] {
        if (interp != WL_INTERP_CONSTANT && interp != WL_INTERP_LINEAR)
            fail(ErrorKind::InvalidArgument, "unknown interpolation mode");
        const Interpolation mode =
            interp == WL_INTERP_LINEAR ? Interpolation::PiecewiseLinear : Interpolation::PiecewiseConstantLeft;
        *out = new wl_sampled{SampledFunction(to_vector(grid, n), to_vector(values, n), mode)};
    });
}

int wl_sampled_from_counting(const wl_spectrum* s, double lambda_max, wl_sampled** out) {
    WL_NONNULL(s);
    WL_NONNULL(out);
    return guarded([&] { *out = new wl_sampled{counting_function_sampled(s->value, lambda_max)}; });
}

int wl_sampled_load_csv(const char* path, int interp, wl_sampled** out) {
    WL_NONNULL(path);
    WL_NONNULL(out);
    return guarded([&] {
        const Interpolation mode =
            interp == WL_INTERP_LINEAR ? Interpolation::PiecewiseLinear : Interpolation::PiecewiseConstantLeft;
        *out = new wl_sampled{load_sampled_csv(path, mode)};
    });
}

void wl_sampled_free(wl_sampled* f) { delete f; }

int wl_sampled_save_csv(const wl_sampled* f, const char* path) {
    WL_NONNULL(f);
    WL_NONNULL(path);
    return guarded([&] { save_sampled_csv(f->value, path); });
}

int wl_sampled_evaluate(const wl_sampled* f, double x, double* out) {
    WL_NONNULL(f);
    WL_NONNULL(out);
    return guarded([&] { *out = f->value.evaluate(x); });
}

int wl_riesz_lift(const wl_sampled* f, double kappa, wl_sampled** out) {
    WL_NONNULL(f);
    WL_NONNULL(out);
    return guarded([&] { *out = new wl_sampled{riesz_lift(f->value, kappa)}; });
}

int wl_semigroup_check(const wl_sampled* f, double kappa1, double kappa2, double* deviation) {
    WL_NONNULL(f);
    WL_NONNULL(deviation);
    return guarded([&] { *deviation = semigroup_check(f->value, kappa1, kappa2); });
}

int wl_interpolation_certificate(const wl_sampled* f, double sigma, double gamma, double* lhs, double* rhs,
                                 double* constant) {
    WL_NONNULL(f);
    return guarded([&] {
        const InterpolationCertificate c = riesz_interpolation_certificate(f->value, sigma, gamma);
        if (lhs) *lhs = c.lhs;
        if (rhs) *rhs = c.rhs;
        if (constant) *constant = c.constant;
    });
}

int wl_aizenman_lieb(const wl_spectrum* s, double gamma, double lambda, double* lhs, double* rhs) {
    WL_NONNULL(s);
    return guarded([&] {
        const AizenmanLieb a = aizenman_lieb_check(s->value, gamma, lambda);
        if (lhs) *lhs = a.lhs;
        if (rhs) *rhs = a.rhs;
    });
}

// ---- Tauberian layer

int wl_hierarchy_create(double eps, int order, wl_hierarchy** out) {
    WL_NONNULL(out);
    return guarded([&] { *out = new wl_hierarchy{build_phi_hierarchy(build_mollifier(), eps, order)}; });
}

void wl_hierarchy_free(wl_hierarchy* h) { delete h; }

int wl_hierarchy_coefficient(const wl_hierarchy* h, int m, double* recursion, double* closed_form) {
    WL_NONNULL(h);
    return guarded([&] {
        require(m >= 0 && m <= h->value.order(), "coefficient index out of range");
        if (recursion) *recursion = h->value.b(m);
        if (closed_form) *closed_form = h->value.b_closed_form(m);
    });
}

int wl_hierarchy_integral(const wl_hierarchy* h, int k, double* out) {
    WL_NONNULL(h);
    WL_NONNULL(out);
    return guarded([&] {
        require(k >= 0 && k <= h->value.order(), "level out of range");
        *out = h->value.integral(k);
    });
}

int wl_hierarchy_phi(const wl_hierarchy* h, int k, double tau, double* out) {
    WL_NONNULL(h);
    WL_NONNULL(out);
    return guarded([&] {
        require(k >= 0 && k <= h->value.order(), "level out of range");
        *out = h->value.phi(k, tau);
    });
}

int wl_hierarchy_majorants_json(const wl_hierarchy* h, char** out) {
    WL_NONNULL(h);
    WL_NONNULL(out);
    return guarded([&] {
        nlohmann::json rows = nlohmann::json::array();
        for (const MajorantRatio& r : majorant_check(h->value))
            rows.push_back({{"k", r.k}, {"sup_ratio", r.sup_ratio}, {"cutoff_tau", r.cutoff_tau}});
        *out = dup_string(rows.dump());
    });
}

int wl_hierarchy_export_csv(const wl_hierarchy* h, int k, const char* path) {
    WL_NONNULL(h);
    WL_NONNULL(path);
    return guarded([&] { export_table_csv(h->value, k, path); });
}

int wl_smoothed_riesz(const wl_hierarchy* h, const double* locations, const double* weights, size_t n, double gamma,
                      double tau, double* out) {
    WL_NONNULL(h);
    WL_NONNULL(out);
    return guarded([&] { *out = smoothed_riesz(make_measure(locations, weights, n), gamma, tau, h->value); });
}

int wl_unsmoothed_riesz(const double* locations, const double* weights, size_t n, double gamma, double tau,
                        double* out) {
    WL_NONNULL(out);
    return guarded([&] { *out = unsmoothed_riesz(make_measure(locations, weights, n), gamma, tau); });
}

int wl_identity_check(const wl_hierarchy* h, const double* locations, const double* weights, size_t n, int m,
                      double tau, char** report_json) {
    WL_NONNULL(h);
    WL_NONNULL(report_json);
    return guarded([&] {
        const IdentityReport r = verify_iterated_identity(make_measure(locations, weights, n), m, tau, h->value);
        *report_json = dup_string(identity_report_json(r));
    });
}

int wl_order_check_json(double a, double b, int bc, double x, double y, double gamma, const double* lambdas, size_t n,
                        char** out) {
    WL_NONNULL(out);
    return guarded([&] {
        const OrderCheck oc =
            tauberian_order_check(Rectangle{a, b}, to_bc(bc), Point{x, y}, gamma, to_vector(lambdas, n));
        nlohmann::json laplace = nlohmann::json::array();
        for (const LaplaceRow& r : oc.laplace)
            laplace.push_back({{"t", r.t}, {"kernel", r.kernel}, {"free_kernel", r.free_kernel}, {"bound", r.bound},
                               {"stated_regime", r.stated_regime}, {"within", r.within}});
        nlohmann::json j{{"fitted_exponent", oc.fitted_exponent},
                         {"raw_exponent", oc.raw_exponent},
                         {"stated_exponent", oc.stated_exponent},
                         {"interior_exponent", oc.interior_exponent},
                         {"dist_to_boundary", oc.dist_to_boundary},
                         {"lambdas", oc.lambdas},
                         {"remainders", oc.remainders},
                         {"laplace", laplace},
                         {"laplace_ok", oc.laplace_ok}};
        *out = dup_string(j.dump());
    });
}

// ---- polygons

int wl_polygon_create(const double* xy, size_t n_vertices, wl_polygon** out) {
    WL_NONNULL(xy);
    WL_NONNULL(out);
    return guarded([&] {
        std::vector<Point> v;
        for (size_t i = 0; i < n_vertices; ++i) v.push_back({xy[2 * i], xy[2 * i + 1]});
        *out = new wl_polygon{ConvexPolygon(std::move(v))};
    });
}

int wl_polygon_from_json(const char* json, wl_polygon** out) {
    WL_NONNULL(json);
    WL_NONNULL(out);
    return guarded([&] { *out = new wl_polygon{ConvexPolygon::from_json(json)}; });
}

int wl_polygon_regular(int n, double side, wl_polygon** out) {
    WL_NONNULL(out);
    return guarded([&] { *out = new wl_polygon{ConvexPolygon::regular(n, side)}; });
}

int wl_polygon_random(unsigned long long seed, wl_polygon** out) {
    WL_NONNULL(out);
    return guarded([&] {
        std::mt19937_64 rng(seed);
        *out = new wl_polygon{random_convex_polygon(rng)};
    });
}

void wl_polygon_free(wl_polygon* p) { delete p; }

int wl_polygon_to_json(const wl_polygon* p, char** out) {
    WL_NONNULL(p);
    WL_NONNULL(out);
    return guarded([&] { *out = dup_string(p->value.to_json()); });
}

int wl_polygon_size(const wl_polygon* p, size_t* out) {
    WL_NONNULL(p);
    WL_NONNULL(out);
    *out = p->value.size();
    g_last_error.clear();
    return WL_OK;
}

int wl_polygon_vertices(const wl_polygon* p, double* xy, size_t cap_vertices) {
    WL_NONNULL(p);
    WL_NONNULL(xy);
    return guarded([&] {
        const auto& v = p->value.vertices();
        if (cap_vertices < v.size()) fail(ErrorKind::Capacity, "vertex buffer too small");
        for (size_t i = 0; i < v.size(); ++i) {
            xy[2 * i] = v[i].x;
            xy[2 * i + 1] = v[i].y;
        }
    });
}

int wl_polygon_angles(const wl_polygon* p, double* out, size_t cap) {
    WL_NONNULL(p);
    WL_NONNULL(out);
    return guarded([&] {
        const auto& a = p->value.angles();
        if (cap < a.size()) fail(ErrorKind::Capacity, "angle buffer too small");
        std::copy(a.begin(), a.end(), out);
    });
}

int wl_polygon_area(const wl_polygon* p, double* out) {
    WL_NONNULL(p);
    WL_NONNULL(out);
    return guarded([&] { *out = p->value.area(); });
}

int wl_polygon_perimeter(const wl_polygon* p, double* out) {
    WL_NONNULL(p);
    WL_NONNULL(out);
    return guarded([&] { *out = p->value.perimeter(); });
}

int wl_polygon_inradius(const wl_polygon* p, double* out, double* cx, double* cy) {
    WL_NONNULL(p);
    WL_NONNULL(out);
    return guarded([&] {
        const InscribedDisk d = chebyshev_center(p->value);
        *out = d.radius;
        if (cx) *cx = d.center.x;
        if (cy) *cy = d.center.y;
    });
}

int wl_polygon_distance_to_boundary(const wl_polygon* p, double x, double y, double* out) {
    WL_NONNULL(p);
    WL_NONNULL(out);
    return guarded([&] { *out = p->value.distance_to_boundary({x, y}); });
}

int wl_polygon_distance_to_set(const wl_polygon* p, double x, double y, double* out) {
    WL_NONNULL(p);
    WL_NONNULL(out);
    return guarded([&] { *out = p->value.distance_to_set({x, y}); });
}

int wl_polygon_distance_level_volume(const wl_polygon* p, double s, double* out) {
    WL_NONNULL(p);
    WL_NONNULL(out);
    return guarded([&] { *out = distance_level_volume(p->value, s); });
}

int wl_polygon_inner_perimeter(const wl_polygon* p, double s, double* out) {
    WL_NONNULL(p);
    WL_NONNULL(out);
    return guarded([&] { *out = inner_parallel_perimeter(p->value, s); });
}

int wl_polygon_theta(const wl_polygon* p, double* out) {
    WL_NONNULL(p);
    WL_NONNULL(out);
    return guarded([&] { *out = theta_omega(p->value); });
}

int wl_polygon_minkowski_area(const wl_polygon* p, double r, double* out) {
    WL_NONNULL(p);
    WL_NONNULL(out);
    return guarded([&] { *out = minkowski_ball_area(p->value, r); });
}

int wl_polygon_minkowski_bounds(const wl_polygon* p, double r, double c1, wl_minkowski_bounds* out) {
    WL_NONNULL(p);
    WL_NONNULL(out);
    return guarded([&] {
        const MinkowskiBounds b = minkowski_bounds(p->value, r, c1);
        *out = {b.excess,      b.lower,    b.upper_general, b.c2_small,           b.upper_small,
                b.c2_large,    b.upper_large, b.small_regime ? 1 : 0, b.all_hold ? 1 : 0};
    });
}

int wl_polygon_disk_area(const wl_polygon* p, double x, double y, double r, double* out) {
    WL_NONNULL(p);
    WL_NONNULL(out);
    return guarded([&] { *out = disk_intersection_area(p->value, {x, y}, r); });
}

int wl_polygon_bishop_gromov(const wl_polygon* p, double x, double y, const double* radii, size_t n, double* out) {
    WL_NONNULL(p);
    WL_NONNULL(radii);
    WL_NONNULL(out);
    return guarded([&] {
        const std::vector<double> prof = bishop_gromov_profile(p->value, {x, y}, to_vector(radii, n));
        std::copy(prof.begin(), prof.end(), out);
    });
}

int wl_polygon_corner_params(const wl_polygon* p, double* alpha_min, double* radius) {
    WL_NONNULL(p);
    return guarded([&] {
        const CornerParams c = corner_params(p->value);
        if (alpha_min) *alpha_min = c.alpha_min;
        if (radius) *radius = c.R;
    });
}

// ---- shape optimization

int wl_rectangle_objective(double aspect, double lambda, double gamma, int bc, double area, double* out) {
    WL_NONNULL(out);
    return guarded([&] { *out = rectangle_objective(aspect, lambda, gamma, to_bc(bc), area); });
}

int wl_optimize_rectangle(double lambda, double gamma, int bc, double tol, double area, wl_run** out) {
    WL_NONNULL(out);
    return guarded([&] { *out = new wl_run{optimize_rectangle(lambda, gamma, to_bc(bc), tol, area)}; });
}

int wl_optimize_stretched_polygon(int sides, double lambda, double gamma, double h, const double* stretches, size_t n,
                                  wl_run** out) {
    WL_NONNULL(out);
    return guarded(
        [&] { *out = new wl_run{optimize_stretched_polygon(sides, lambda, gamma, h, to_vector(stretches, n))}; });
}

void wl_run_free(wl_run* r) { delete r; }

int wl_run_best(const wl_run* r, double* param, double* objective, double* error_bar, int* degenerate) {
    WL_NONNULL(r);
    const OptimizationRun& run = r->value;
    if (param) *param = run.best.param;
    if (objective) *objective = run.best.objective;
    if (error_bar) *error_bar = run.best.error_bar;
    if (degenerate) *degenerate = run.degenerate ? 1 : 0;
    g_last_error.clear();
    return WL_OK;
}

int wl_run_json(const wl_run* r, char** out) {
    WL_NONNULL(r);
    WL_NONNULL(out);
    return guarded([&] { *out = dup_string(run_json(r->value)); });
}

int wl_run_save_csv(const wl_run* r, const char* path) {
    WL_NONNULL(r);
    WL_NONNULL(path);
    return guarded([&] { save_trace_csv(r->value, path); });
}

int wl_convergence_study_json(const double* lambdas, size_t n, double gamma, int bc, double tol, char** out) {
    WL_NONNULL(out);
    return guarded(
        [&] { *out = dup_string(convergence_json(optimizer_convergence_study(to_vector(lambdas, n), gamma, to_bc(bc), tol))); });
}

int wl_ranking_check(double lambda, double gamma, int bc, const double* aspects, size_t n, int* pairs, int* resolved,
                     int* agreements) {
    return guarded([&] {
        const RankingCheck rc = ranking_check(lambda, gamma, to_bc(bc), to_vector(aspects, n));
        if (pairs) *pairs = rc.pairs;
        if (resolved) *resolved = rc.resolved_pairs;
        if (agreements) *agreements = rc.agreements;
    });
}

}  // extern "C"
