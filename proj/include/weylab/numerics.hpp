#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace weylab {

inline constexpr double kPi = 3.14159265358979323846;

// Lanczos approximation (g = 7, 9 terms) with reflection below 1/2.
double gamma_fn(double x);
double log_gamma_fn(double x);

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
};

// Adaptive Gauss-Kronrod (7/15) on [a, b], split at the given interior breakpoints.
// Throws ErrorKind::Convergence when the tolerance is not met.
QuadResult integrate(const std::function<double(double)>& f, double a, double b, double abs_tol = 1e-12,
                     double rel_tol = 1e-12, const std::vector<double>& breakpoints = {}, int max_depth = 50);

// Composite Gauss-Legendre with fixed panels, no error control.
double integrate_fixed(const std::function<double(double)>& f, double a, double b, int panels, int order = 20);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
};
LinearFit least_squares_line(const std::vector<double>& x, const std::vector<double>& y);

std::vector<double> log_space(double start, double stop, std::size_t count);
std::vector<double> lin_space(double start, double stop, std::size_t count);

// Worker count from WEYLAB_THREADS, defaulting to hardware concurrency.
unsigned worker_count();

// Runs body(i) for i in [0, n) over worker_count() threads.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace weylab
