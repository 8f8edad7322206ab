#pragma once

#include <string>
#include <vector>

#include "weylab/spectra.hpp"

namespace weylab {

// Piecewise Chebyshev-Lobatto tabulation on fixed panels.
class PanelGrid {
public:
    PanelGrid(std::vector<double> breakpoints, int points_per_panel);

    std::size_t panels() const { return breaks_.size() - 1; }
    int order() const { return n_; }
    std::size_t size() const { return panels() * n_; }
    const std::vector<double>& breakpoints() const { return breaks_; }
    double node(std::size_t panel, int j) const;
    double lo() const { return breaks_.front(); }
    double hi() const { return breaks_.back(); }

    // Barycentric interpolation of tabulated values at x inside [lo, hi].
    double interpolate(const std::vector<double>& values, double x) const;
    // Left cumulative integral from lo(), tabulated at the nodes.
    std::vector<double> cumulative(const std::vector<double>& values) const;
    // Right cumulative integral to hi(), computed panel-wise to avoid cancellation in tails.
    std::vector<double> right_cumulative(const std::vector<double>& values) const;
    double integral(const std::vector<double>& values) const;

private:
    std::size_t locate(double x) const;

    std::vector<double> breaks_;
    int n_;
    std::vector<double> ref_nodes_;
    std::vector<double> bary_weights_;
    std::vector<double> cum_matrix_;  // n x n, row-major, on [-1, 1]
};

// Band-limited density phi = psi^2 / Z where psi is the inverse Fourier transform of
// exp(-a / (1 - (2t)^2)) on |t| < 1/2, and the compact bump chi ∝ exp(-1/(1 - s^2)).
struct MollifierFamily {
    double bump_sharpness = 16.0;  // a
    double half_width = 100.0;     // tabulation range [-T, T]
    int points_per_panel = 24;

    double phi(double tau) const;
    double chi(double s) const;
    // Fourier transform of phi at frequency t, by quadrature of the autocorrelation.
    double phi_hat(double t) const;

    // Normalizers, computed once.
    double psi_norm() const;
    double chi_norm() const;
};

MollifierFamily build_mollifier();

class PhiHierarchy {
public:
    PhiHierarchy(const MollifierFamily& fam, double eps, int K);

    double eps() const { return eps_; }
    int order() const { return K_; }
    const MollifierFamily& family() const { return fam_; }
    const PanelGrid& grid() const { return grid_; }

    double phi(int k, double tau) const;
    // Antiderivative of phi_k from -infinity.
    double phi_cumulative(int k, double tau) const;
    double integral(int k) const { return integrals_.at(k); }
    double chi_eps(double tau) const;
    // Distribution function of chi_eps, 0 to the left and 1 to the right of its support.
    double chi_cumulative(double tau) const;
    // Majorants psi_{-1} .. psi_K, index k >= -1.
    double psi(int k, double tau) const;

    double b(int m) const { return b_.at(m); }
    double b_closed_form(int m) const { return b_closed_.at(m); }

    const std::vector<double>& table(int k) const { return phi_.at(k); }

private:
    MollifierFamily fam_;
    double eps_;
    int K_;
    PanelGrid grid_;
    std::vector<std::vector<double>> phi_, phi_cum_, psi_;
    std::vector<double> chi_, chi_cum_;
    std::vector<double> integrals_;
    std::vector<double> b_, b_closed_;
};

PhiHierarchy build_phi_hierarchy(const MollifierFamily& fam, double eps, int K);

struct MajorantRatio {
    int k = 0;
    double sup_ratio = 0.0;
    double cutoff_tau = 0.0;  // ratios beyond |tau| > cutoff omitted, psi_k too small to resolve
};
std::vector<MajorantRatio> majorant_check(const PhiHierarchy& h);

struct Atom {
    double location = 0.0;
    double weight = 0.0;
};

struct PolynomialDensity {
    double K = 0.0;
    double nu = 1.0;
};

// Measure on [0, inf) extended oddly; the background terms only enter the positivity hypothesis.
struct AtomicMeasure {
    std::vector<Atom> atoms;
    std::vector<PolynomialDensity> polynomial_part;
    double K0 = 0.0;

    void validate() const;
    // Midpoint-regularized odd distribution function.
    double distribution(double tau) const;
};

// Convolutions of tabulated kernels with N_mu and with its derivative.
double phi_conv_N(const PhiHierarchy& h, int k, const AtomicMeasure& mu, double sigma);
double phi_conv_T(const PhiHierarchy& h, int k, const AtomicMeasure& mu, double sigma);
double chi_conv_N(const PhiHierarchy& h, const AtomicMeasure& mu, double sigma);

// Smoothed Riesz mean with the hierarchy's eps.
double smoothed_riesz(const AtomicMeasure& mu, double gamma, double tau, const PhiHierarchy& h);
double smoothed_riesz(const AtomicMeasure& mu, double gamma, double tau, double eps, const MollifierFamily& fam);
// eps -> 0 limit.
double unsmoothed_riesz(const AtomicMeasure& mu, double gamma, double tau);

struct IdentityReport {
    int m = 0;
    double eps = 0.0;
    double tau = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
};
IdentityReport verify_iterated_identity(const AtomicMeasure& mu, int m, double tau, const PhiHierarchy& h);
std::string identity_report_json(const IdentityReport& r);

void export_table_csv(const PhiHierarchy& h, int k, const std::string& path);

// Diagonal heat kernel of a rectangle from the product eigenfunction expansion.
double rectangle_heat_kernel_diagonal(const Rectangle& rect, Point x, double t, BoundaryCondition bc);

struct LaplaceRow {
    double t = 0.0;
    double kernel = 0.0;
    double free_kernel = 0.0;
    double bound = 0.0;  // sup over s <= t of (4 pi s)^{-1} exp(-d^2 / (4s))
    bool stated_regime = true;  // t <= d^2/4, where the sup is attained at s = t
    bool within = true;
};

struct OrderCheck {
    double fitted_exponent = 0.0;  // slope of the windowed envelope of |remainder|
    double raw_exponent = 0.0;     // slope of |remainder| itself
    double stated_exponent = 0.0;  // gamma + 1/2
    double interior_exponent = 0.0;  // (gamma + 1) / 2, the interior bound in two dimensions
    double dist_to_boundary = 0.0;
    std::vector<double> lambdas;
    std::vector<double> remainders;
    std::vector<LaplaceRow> laplace;
    bool laplace_ok = true;
};

OrderCheck tauberian_order_check(const Rectangle& rect, BoundaryCondition bc, Point x, double gamma,
                                 const std::vector<double>& lambda_grid,
                                 const std::vector<double>& laplace_times = {0.2, 0.1, 0.05, 0.02, 0.01});

// Slope of log(local max |r|) against log(lambda), windows of +-half_window grid points.
double envelope_exponent_fit(const std::vector<double>& lambdas, const std::vector<double>& remainders,
                             int half_window = 2);

}  // namespace weylab
