/* C interface to the weylab library. All handles are opaque; every call returns a status code
 * and writes results through out-pointers. Strings returned through char** are owned by the
 * caller and released with wl_string_free. */
#ifndef WEYLAB_H
#define WEYLAB_H

#include <stddef.h>

#if defined(WEYLAB_BUILDING_LIBRARY)
#define WL_API __attribute__((visibility("default")))
#else
#define WL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

enum {
    WL_OK = 0,
    WL_ERR_NULL = -1,
    WL_ERR_INVALID = -2,
    WL_ERR_RANGE = -3,       /* outside the certified range of a spectrum */
    WL_ERR_CAPACITY = -4,
    WL_ERR_CONVERGENCE = -5,
    WL_ERR_CONTRACT = -6,    /* internal consistency check failed */
    WL_ERR_IO = -7,
    WL_ERR_INTERNAL = -99
};

enum { WL_DIRICHLET = 0, WL_NEUMANN = 1 };
enum { WL_INTERP_CONSTANT = 0, WL_INTERP_LINEAR = 1 };

typedef struct wl_spectrum wl_spectrum;
typedef struct wl_polygon wl_polygon;
typedef struct wl_sampled wl_sampled;
typedef struct wl_hierarchy wl_hierarchy;
typedef struct wl_run wl_run;

WL_API const char* wl_version(void);
/* Message of the last failure on the calling thread; empty after a success. */
WL_API const char* wl_last_error(void);
WL_API const char* wl_status_name(int status);
WL_API void wl_string_free(char* s);

/* Constants and predictors. */
WL_API int wl_lt_constant(double gamma, int dim, double* out);
WL_API int wl_two_term_prediction(double lambda, double gamma, int dim, double volume, double perimeter, int bc,
                                  double* out);
WL_API int wl_corner_sum(const double* angles, size_t n, double* out);
WL_API int wl_three_term_prediction(double lambda, double gamma, double area, double perimeter, const double* angles,
                                    size_t n, int bc, double* out);
WL_API int wl_heat_two_term_prediction(double t, int dim, double volume, double perimeter, int bc, double* out);
WL_API int wl_heat_polygon_prediction(double t, double area, double perimeter, const double* angles, size_t n,
                                      double* out);
WL_API int wl_heat_polygon_remainder_bound(double t, int n_corners, double area, double min_angle, double radius,
                                           double* out);
WL_API int wl_envelope_exponent(double gamma, double alpha_fraction, double* out);
WL_API int wl_error_envelope(double lambda, double gamma, double perimeter, double inradius, int dim, int bc,
                             double alpha_fraction, double* out);

/* Domains are described by JSON: {"kind":"rectangle","a":..,"b":..}, {"kind":"disk","radius":..}
 * or {"kind":"polygon","vertices":[[x,y],...]}. */
WL_API int wl_domain_functionals(const char* domain_json, double* area, double* perimeter, double* inradius);
WL_API int wl_domain_angles(const char* domain_json, double* out, size_t cap, size_t* count);

/* Spectra. */
WL_API int wl_spectrum_create(const char* domain_json, int bc, double lambda_max, wl_spectrum** out);
WL_API int wl_spectrum_create_fd(const char* polygon_json, double h, int num_eigs, wl_spectrum** out);
WL_API int wl_spectrum_load(const char* path, wl_spectrum** out);
WL_API void wl_spectrum_free(wl_spectrum* s);
WL_API int wl_spectrum_save(const wl_spectrum* s, const char* path);
WL_API int wl_spectrum_size(const wl_spectrum* s, size_t* out);
WL_API int wl_spectrum_eigenvalues(const wl_spectrum* s, double* out, size_t cap, size_t* count);
WL_API int wl_spectrum_complete_below(const wl_spectrum* s, double* out);
WL_API int wl_spectrum_header_json(const wl_spectrum* s, char** out);
WL_API int wl_spectrum_counting(const wl_spectrum* s, double lambda, long long* out);
WL_API int wl_spectrum_riesz_mean(const wl_spectrum* s, double lambda, double gamma, double* out);
WL_API int wl_spectrum_heat_trace(const wl_spectrum* s, double t, double tol, double* value, double* tail_bound,
                                  int* flagged);
WL_API int wl_trace_gap(const wl_spectrum* dirichlet, const wl_spectrum* neumann, double lambda, double gamma,
                        double* out);
WL_API int wl_rectangle_riesz_mean(double a, double b, int bc, double lambda, double gamma, double* out);
WL_API int wl_pointwise_spectral_function(double a, double b, double x, double y, double lambda, double gamma, int bc,
                                          double* out);

/* Riesz calculus on sampled functions. */
WL_API int wl_sampled_create(const double* grid, const double* values, size_t n, int interp, wl_sampled** out);
WL_API int wl_sampled_from_counting(const wl_spectrum* s, double lambda_max, wl_sampled** out);
WL_API int wl_sampled_load_csv(const char* path, int interp, wl_sampled** out);
WL_API void wl_sampled_free(wl_sampled* f);
WL_API int wl_sampled_save_csv(const wl_sampled* f, const char* path);
WL_API int wl_sampled_evaluate(const wl_sampled* f, double x, double* out);
WL_API int wl_riesz_lift(const wl_sampled* f, double kappa, wl_sampled** out);
WL_API int wl_semigroup_check(const wl_sampled* f, double kappa1, double kappa2, double* deviation);
WL_API int wl_interpolation_certificate(const wl_sampled* f, double sigma, double gamma, double* lhs, double* rhs,
                                        double* constant);
WL_API int wl_aizenman_lieb(const wl_spectrum* s, double gamma, double lambda, double* lhs, double* rhs);

/* Tauberian layer. Atoms are given as parallel arrays of locations (> 0) and weights. */
WL_API int wl_hierarchy_create(double eps, int order, wl_hierarchy** out);
WL_API void wl_hierarchy_free(wl_hierarchy* h);
WL_API int wl_hierarchy_coefficient(const wl_hierarchy* h, int m, double* recursion, double* closed_form);
WL_API int wl_hierarchy_integral(const wl_hierarchy* h, int k, double* out);
WL_API int wl_hierarchy_phi(const wl_hierarchy* h, int k, double tau, double* out);
WL_API int wl_hierarchy_majorants_json(const wl_hierarchy* h, char** out);
WL_API int wl_hierarchy_export_csv(const wl_hierarchy* h, int k, const char* path);
WL_API int wl_smoothed_riesz(const wl_hierarchy* h, const double* locations, const double* weights, size_t n,
                             double gamma, double tau, double* out);
WL_API int wl_unsmoothed_riesz(const double* locations, const double* weights, size_t n, double gamma, double tau,
                               double* out);
WL_API int wl_identity_check(const wl_hierarchy* h, const double* locations, const double* weights, size_t n, int m,
                             double tau, char** report_json);
WL_API int wl_order_check_json(double a, double b, int bc, double x, double y, double gamma, const double* lambdas,
                               size_t n, char** out);

/* Convex polygons. */
WL_API int wl_polygon_create(const double* xy, size_t n_vertices, wl_polygon** out);
WL_API int wl_polygon_from_json(const char* json, wl_polygon** out);
WL_API int wl_polygon_regular(int n, double side, wl_polygon** out);
WL_API int wl_polygon_random(unsigned long long seed, wl_polygon** out);
WL_API void wl_polygon_free(wl_polygon* p);
WL_API int wl_polygon_to_json(const wl_polygon* p, char** out);
WL_API int wl_polygon_size(const wl_polygon* p, size_t* out);
WL_API int wl_polygon_vertices(const wl_polygon* p, double* xy, size_t cap_vertices);
WL_API int wl_polygon_angles(const wl_polygon* p, double* out, size_t cap);
WL_API int wl_polygon_area(const wl_polygon* p, double* out);
WL_API int wl_polygon_perimeter(const wl_polygon* p, double* out);
WL_API int wl_polygon_inradius(const wl_polygon* p, double* out, double* cx, double* cy);
WL_API int wl_polygon_distance_to_boundary(const wl_polygon* p, double x, double y, double* out);
WL_API int wl_polygon_distance_to_set(const wl_polygon* p, double x, double y, double* out);
WL_API int wl_polygon_distance_level_volume(const wl_polygon* p, double s, double* out);
WL_API int wl_polygon_inner_perimeter(const wl_polygon* p, double s, double* out);
WL_API int wl_polygon_theta(const wl_polygon* p, double* out);
WL_API int wl_polygon_minkowski_area(const wl_polygon* p, double r, double* out);

typedef struct {
    double excess, lower, upper_general, c2_small, upper_small, c2_large, upper_large;
    int small_regime, all_hold;
} wl_minkowski_bounds;
WL_API int wl_polygon_minkowski_bounds(const wl_polygon* p, double r, double c1, wl_minkowski_bounds* out);
WL_API int wl_polygon_disk_area(const wl_polygon* p, double x, double y, double r, double* out);
WL_API int wl_polygon_bishop_gromov(const wl_polygon* p, double x, double y, const double* radii, size_t n,
                                    double* out);
WL_API int wl_polygon_corner_params(const wl_polygon* p, double* alpha_min, double* radius);

/* Shape optimization. */
WL_API int wl_rectangle_objective(double aspect, double lambda, double gamma, int bc, double area, double* out);
WL_API int wl_optimize_rectangle(double lambda, double gamma, int bc, double tol, double area, wl_run** out);
WL_API int wl_optimize_stretched_polygon(int sides, double lambda, double gamma, double h, const double* stretches,
                                         size_t n, wl_run** out);
WL_API void wl_run_free(wl_run* r);
WL_API int wl_run_best(const wl_run* r, double* param, double* objective, double* error_bar, int* degenerate);
WL_API int wl_run_json(const wl_run* r, char** out);
WL_API int wl_run_save_csv(const wl_run* r, const char* path);
WL_API int wl_convergence_study_json(const double* lambdas, size_t n, double gamma, int bc, double tol, char** out);
WL_API int wl_ranking_check(double lambda, double gamma, int bc, const double* aspects, size_t n, int* pairs,
                            int* resolved, int* agreements);

#ifdef __cplusplus
}
#endif

#endif
