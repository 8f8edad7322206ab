#pragma once

#include <vector>

namespace weylab {

double bessel_j(double nu, double x);
double bessel_j_prime(double nu, double x);

// Positive zeros of J_nu below x_max, ascending, refined by bisection to abs_tol.
std::vector<double> bessel_j_zeros(int nu, double x_max, double abs_tol = 1e-12);
// Row nu holds the zeros of J_nu below x_max; rows stop at the first empty order.
std::vector<std::vector<double>> bessel_j_zero_table(double x_max, double abs_tol = 1e-12);
// Positive zeros of J_nu' below x_max (excluding x = 0).
std::vector<double> bessel_jp_zeros(int nu, double x_max, double abs_tol = 1e-12);

}  // namespace weylab
