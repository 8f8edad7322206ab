#include "weylab/bessel.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "weylab/errors.hpp"
#include "weylab/numerics.hpp"

namespace weylab {

double bessel_j(double nu, double x) {
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    return std::cyl_bessel_j(nu, x);
}

double bessel_j_prime(double nu, double x) {
    if (nu == 0.0) return -bessel_j(1.0, x);
    return 0.5 * (bessel_j(nu - 1.0, x) - bessel_j(nu + 1.0, x));
}

namespace {

double bisect(const std::function<double(double)>& f, double a, double b, double abs_tol, int nu, int k) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0)) {
        std::ostringstream os;
        os << "Bessel zero bracketing failed for (nu=" << nu << ", k=" << k << ") on [" << a << ", " << b << "]";
        fail(ErrorKind::Convergence, os.str());
    }
    while (b - a > abs_tol) {
        const double m = 0.5 * (a + b);
        if (m <= a || m >= b) break;
        const double fm = f(m);
        if (fm == 0.0) return m;
        if ((fm > 0.0) == (fa > 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

// Zeros of f between consecutive entries of a sorted bracket list, one per bracket.
std::vector<double> zeros_in_brackets(const std::function<double(double)>& f, const std::vector<double>& brackets,
                                      double x_max, double abs_tol, int nu) {
    std::vector<double> out;
    for (std::size_t k = 0; k + 1 < brackets.size(); ++k) {
        if (brackets[k] >= x_max) break;
        const double z = bisect(f, brackets[k], brackets[k + 1], abs_tol, nu, static_cast<int>(k + 1));
        if (z < x_max) out.push_back(z);
    }
    return out;
}

// Zeros of J_0 by a sign scan; they are spaced by nearly pi so a step of 0.5 separates them.
std::vector<double> scan_j0_zeros(double x_max, double abs_tol) {
    std::vector<double> out;
    const auto f = [](double x) { return bessel_j(0.0, x); };
    double a = 0.5, fa = f(a);
    while (a < x_max + 4.0) {
        const double b = a + 0.5, fb = f(b);
        if ((fa > 0.0) != (fb > 0.0)) out.push_back(bisect(f, a, b, abs_tol, 0, static_cast<int>(out.size() + 1)));
        a = b;
        fa = fb;
    }
    return out;
}

}  // namespace

std::vector<double> bessel_j_zeros(int nu, double x_max, double abs_tol) {
    require(nu >= 0, "bessel_j_zeros: order must be nonnegative");
    require(x_max > 0.0, "bessel_j_zeros: x_max must be positive");
    // Interlacing: the zeros of J_{nu+1} separate consecutive zeros of J_nu and lie above them,
    // so (j_{nu-1,k}, j_{nu-1,k+1}) brackets exactly j_{nu,k}.
    std::vector<double> z = scan_j0_zeros(x_max + 4.0 * (nu + 2), abs_tol);
    for (int m = 1; m <= nu; ++m) {
        const auto f = [m](double x) { return bessel_j(m, x); };
        z = zeros_in_brackets(f, z, std::numeric_limits<double>::infinity(), abs_tol, m);
    }
    std::vector<double> out;
    for (double x : z)
        if (x < x_max) out.push_back(x);
    return out;
}

std::vector<std::vector<double>> bessel_j_zero_table(double x_max, double abs_tol) {
    require(x_max > 0.0, "bessel_j_zero_table: x_max must be positive");
    // J_nu has no zero below nu, which bounds the number of orders needed.
    const int nu_max = static_cast<int>(std::ceil(x_max)) + 1;
    std::vector<double> z = scan_j0_zeros(x_max + 4.0 * (nu_max + 2), abs_tol);
    std::vector<std::vector<double>> table;
    for (int nu = 0; nu <= nu_max; ++nu) {
        if (nu > 0) {
            const auto f = [nu](double x) { return bessel_j(nu, x); };
            // Brackets above x_max are not needed beyond the first one that exceeds it.
            std::vector<double> br;
            for (double x : z) {
                br.push_back(x);
                if (x > x_max + 4.0 * (nu_max - nu + 2)) break;
            }
            z = zeros_in_brackets(f, br, std::numeric_limits<double>::infinity(), abs_tol, nu);
        }
        std::vector<double> row;
        for (double x : z)
            if (x < x_max) row.push_back(x);
        if (row.empty()) break;
        table.push_back(std::move(row));
    }
    return table;
}

std::vector<double> bessel_jp_zeros(int nu, double x_max, double abs_tol) {
    require(nu >= 0, "bessel_jp_zeros: order must be nonnegative");
    require(x_max > 0.0, "bessel_jp_zeros: x_max must be positive");
    if (nu == 0) return bessel_j_zeros(1, x_max, abs_tol);
    // J_nu' has exactly one zero in [nu, j_{nu,1}) and one between consecutive zeros of J_nu.
    std::vector<double> brackets{static_cast<double>(nu)};
    for (double x : bessel_j_zeros(nu, x_max + kPi + 1.0, abs_tol)) brackets.push_back(x);
    const auto f = [nu](double x) { return bessel_j_prime(nu, x); };
    return zeros_in_brackets(f, brackets, x_max, abs_tol, nu);
}

}  // namespace weylab
