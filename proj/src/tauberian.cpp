#include "weylab/tauberian.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "weylab/errors.hpp"
#include "weylab/numerics.hpp"

namespace weylab {

// ---------------------------------------------------------------------------
// PanelGrid

PanelGrid::PanelGrid(std::vector<double> breakpoints, int points_per_panel)
    : breaks_(std::move(breakpoints)), n_(points_per_panel) {
    require(breaks_.size() >= 2, "PanelGrid: need at least one panel");
    require(n_ >= 3, "PanelGrid: need at least three points per panel");
    for (std::size_t i = 1; i < breaks_.size(); ++i) require(breaks_[i] > breaks_[i - 1], "PanelGrid: breakpoints must increase");
    ref_nodes_.resize(n_);
    bary_weights_.resize(n_);
    for (int j = 0; j < n_; ++j) {
        ref_nodes_[j] = -std::cos(kPi * j / (n_ - 1));
        bary_weights_[j] = (j % 2 == 0 ? 1.0 : -1.0) * ((j == 0 || j == n_ - 1) ? 0.5 : 1.0);
    }
    if (n_ % 2 == 1) ref_nodes_[(n_ - 1) / 2] = 0.0;
    // Q(i, j) = ∫_{-1}^{x_i} l_j, exact by Gauss-Legendre on [-1, x_i].
    std::vector<double> gx, gw;
    gauss_legendre(n_, gx, gw);
    cum_matrix_.assign(static_cast<std::size_t>(n_) * n_, 0.0);
    for (int i = 1; i < n_; ++i) {
        const double b = ref_nodes_[i], half = 0.5 * (b + 1.0);
        for (int q = 0; q < n_; ++q) {
            const double x = -1.0 + half * (gx[q] + 1.0);
            // Lagrange basis values at x via the barycentric formula.
            double den = 0.0;
            std::vector<double> terms(n_);
            int exact = -1;
            for (int j = 0; j < n_; ++j) {
                const double d = x - ref_nodes_[j];
                if (d == 0.0) {
                    exact = j;
                    break;
                }
                terms[j] = bary_weights_[j] / d;
                den += terms[j];
            }
            for (int j = 0; j < n_; ++j) {
                const double lj = exact >= 0 ? (j == exact ? 1.0 : 0.0) : terms[j] / den;
                cum_matrix_[static_cast<std::size_t>(i) * n_ + j] += half * gw[q] * lj;
            }
        }
    }
}

double PanelGrid::node(std::size_t panel, int j) const {
    const double a = breaks_[panel], b = breaks_[panel + 1];
    if (j == 0) return a;
    if (j == n_ - 1) return b;
    return 0.5 * (a + b) + 0.5 * (b - a) * ref_nodes_[j];
}

std::size_t PanelGrid::locate(double x) const {
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
    std::size_t p = static_cast<std::size_t>(it - breaks_.begin());
    if (p == 0) return 0;
    return std::min(p - 1, panels() - 1);
}

double PanelGrid::interpolate(const std::vector<double>& values, double x) const {
    const std::size_t p = locate(x);
    const double a = breaks_[p], b = breaks_[p + 1];
    const double t = (2.0 * x - a - b) / (b - a);
    const double* v = values.data() + p * n_;
    double num = 0.0, den = 0.0;
    for (int j = 0; j < n_; ++j) {
        const double d = t - ref_nodes_[j];
        if (d == 0.0) return v[j];
        const double w = bary_weights_[j] / d;
        num += w * v[j];
        den += w;
    }
    return num / den;
}

std::vector<double> PanelGrid::cumulative(const std::vector<double>& values) const {
    std::vector<double> out(size());
    double offset = 0.0;
    for (std::size_t p = 0; p < panels(); ++p) {
        const double half = 0.5 * (breaks_[p + 1] - breaks_[p]);
        const double* v = values.data() + p * n_;
        for (int i = 0; i < n_; ++i) {
            double s = 0.0;
            for (int j = 0; j < n_; ++j) s += cum_matrix_[static_cast<std::size_t>(i) * n_ + j] * v[j];
            out[p * n_ + i] = offset + half * s;
        }
        offset = out[p * n_ + n_ - 1];
    }
    return out;
}

std::vector<double> PanelGrid::right_cumulative(const std::vector<double>& values) const {
    std::vector<double> out(size());
    double suffix = 0.0;
    for (std::size_t pp = panels(); pp-- > 0;) {
        const double half = 0.5 * (breaks_[pp + 1] - breaks_[pp]);
        const double* v = values.data() + pp * n_;
        const std::size_t last = static_cast<std::size_t>(n_ - 1) * n_;
        for (int i = 0; i < n_; ++i) {
            double s = 0.0;
            for (int j = 0; j < n_; ++j)
                s += (cum_matrix_[last + j] - cum_matrix_[static_cast<std::size_t>(i) * n_ + j]) * v[j];
            out[pp * n_ + i] = suffix + half * s;
        }
        suffix = out[pp * n_];
    }
    return out;
}

double PanelGrid::integral(const std::vector<double>& values) const { return cumulative(values).back(); }

// ---------------------------------------------------------------------------
// Mollifier family

namespace {

struct FamilyCache {
    std::vector<double> t, wb;  // quadrature nodes on [0, 1/2] and weights times the bump
    double psi_norm = 0.0;
    double chi_norm = 0.0;
    double a = -1.0;
};

const FamilyCache& family_cache(double a) {
    thread_local FamilyCache cache;
    if (cache.a == a) return cache;
    cache = FamilyCache{};
    cache.a = a;
    std::vector<double> gx, gw;
    gauss_legendre(24, gx, gw);
    const int panels = 16;
    const double width = 0.5 / panels;
    double norm2 = 0.0;
    for (int p = 0; p < panels; ++p)
        for (int q = 0; q < 24; ++q) {
            const double t = p * width + 0.5 * width * (gx[q] + 1.0);
            const double u = 2.0 * t;
            const double bump = u < 1.0 ? std::exp(-a / (1.0 - u * u)) : 0.0;
            cache.t.push_back(t);
            cache.wb.push_back(0.5 * width * gw[q] * bump);
            norm2 += 0.5 * width * gw[q] * bump * bump;
        }
    cache.psi_norm = norm2 / kPi;
    cache.chi_norm = integrate([](double s) { return std::abs(s) < 1.0 ? std::exp(-1.0 / (1.0 - s * s)) : 0.0; },
                               -1.0, 1.0, 1e-16, 1e-15, {-0.99, -0.9, -0.5, 0.0, 0.5, 0.9, 0.99})
                         .value;
    return cache;
}

}  // namespace

double MollifierFamily::psi_norm() const { return family_cache(bump_sharpness).psi_norm; }
double MollifierFamily::chi_norm() const { return family_cache(bump_sharpness).chi_norm; }

double MollifierFamily::phi(double tau) const {
    const FamilyCache& c = family_cache(bump_sharpness);
    double psi = 0.0;
    for (std::size_t i = 0; i < c.t.size(); ++i) psi += c.wb[i] * std::cos(c.t[i] * tau);
    psi /= kPi;
    return psi * psi / c.psi_norm;
}

double MollifierFamily::chi(double s) const {
    if (std::abs(s) >= 1.0) return 0.0;
    return std::exp(-1.0 / (1.0 - s * s)) / chi_norm();
}

double MollifierFamily::phi_hat(double t) const {
    const double a = bump_sharpness;
    auto bump = [a](double s) {
        const double u = 2.0 * s;
        return std::abs(u) < 1.0 ? std::exp(-a / (1.0 - u * u)) : 0.0;
    };
    const double lo = std::max(-0.5, t - 0.5), hi = std::min(0.5, t + 0.5);
    if (lo >= hi) return 0.0;
    const double conv = integrate([&](double s) { return bump(s) * bump(t - s); }, lo, hi, 1e-30, 1e-13).value;
    return conv / (2.0 * kPi * psi_norm());
}

MollifierFamily build_mollifier() { return MollifierFamily{}; }

// ---------------------------------------------------------------------------
// Hierarchy

namespace {

std::vector<double> hierarchy_breakpoints(double eps, double T) {
    if (!(eps > 0.0 && eps <= 1.0)) fail(ErrorKind::InvalidArgument, "build_phi_hierarchy: eps must lie in (0, 1]");
    std::vector<double> pos;  // nonnegative breakpoints
    const double core[] = {0.0, 0.25, 0.5, 0.75};
    for (double c : core) pos.push_back(c * eps);
    for (int j = 3; j <= 12; ++j) pos.push_back(eps * (1.0 - std::ldexp(1.0, -j)));
    pos.push_back(eps);
    for (double x = 2.0 * eps; x < 1.0; x *= 2.0) pos.push_back(x);
    for (double x = 1.0; x <= T + 1e-9; x += 1.0)
        if (x > pos.back()) pos.push_back(x);
    std::sort(pos.begin(), pos.end());
    pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
    std::vector<double> all;
    for (auto it = pos.rbegin(); it != pos.rend(); ++it)
        if (*it > 0.0) all.push_back(-*it);
    for (double x : pos) all.push_back(x);
    return all;
}

}  // namespace

PhiHierarchy::PhiHierarchy(const MollifierFamily& fam, double eps, int K)
    : fam_(fam), eps_(eps), K_(K), grid_(hierarchy_breakpoints(eps, fam.half_width), fam.points_per_panel) {
    if (K < 0) fail(ErrorKind::InvalidArgument, "build_phi_hierarchy: K must be >= 0");
    if (K > 8) fail(ErrorKind::InvalidArgument, "build_phi_hierarchy: K > 8 is beyond the tabulation's stable range");
    const std::size_t n = grid_.size();
    std::vector<double> x(n);
    for (std::size_t p = 0; p < grid_.panels(); ++p)
        for (int j = 0; j < grid_.order(); ++j) x[p * grid_.order() + j] = grid_.node(p, j);

    // The nodes are mirror images (x[n-1-i] = -x[i]), so each level is projected onto its exact
    // parity; otherwise roundoff from the left-to-right sweeps accumulates in the odd integrals.
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(x[i] + x[n - 1 - i]) > 1e-13 * (1.0 + std::abs(x[i])))
            fail(ErrorKind::InternalConsistency, "build_phi_hierarchy: tabulation grid is not symmetric");
    auto project = [n](std::vector<double>& v, double parity) {
        for (std::size_t i = 0; i < n / 2; ++i) {
            const double e = 0.5 * (v[i] + parity * v[n - 1 - i]);
            v[i] = e;
            v[n - 1 - i] = parity * e;
        }
        if (n % 2 == 1 && parity < 0) v[n / 2] = 0.0;
    };

    chi_.resize(n);
    for (std::size_t i = 0; i < n; ++i) chi_[i] = fam_.chi(x[i] / eps_) / eps_;
    chi_cum_ = grid_.cumulative(chi_);
    const double chi_total = chi_cum_.back();
    for (double& v : chi_cum_) v = v / chi_total - 0.5;
    project(chi_cum_, -1.0);
    for (double& v : chi_cum_) v += 0.5;

    phi_.assign(K_ + 1, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) phi_[0][i] = fam_.phi(x[i]);
    project(phi_[0], 1.0);
    integrals_.assign(K_ + 1, 0.0);
    for (int k = 1; k <= K_; ++k) {
        const std::vector<double> cum = grid_.cumulative(phi_[k - 1]);
        integrals_[k - 1] = cum.back();
        for (std::size_t i = 0; i < n; ++i) phi_[k][i] = cum[i] - integrals_[k - 1] * chi_cum_[i];
        project(phi_[k], k % 2 == 0 ? 1.0 : -1.0);
    }
    phi_cum_.resize(K_ + 1);
    for (int k = 0; k <= K_; ++k) {
        phi_cum_[k] = grid_.cumulative(phi_[k]);
        integrals_[k] = phi_cum_[k].back();
        double peak = 0.0;
        for (double v : phi_[k]) peak = std::max(peak, std::abs(v));
        // Each level must have decayed at the edge of the table.
        if (std::abs(phi_[k].back()) > 1e-9 * peak || std::abs(phi_[k].front()) > 1e-9 * peak) {
            std::ostringstream os;
            os << "build_phi_hierarchy: level k=" << k << " has not decayed at |tau|=" << fam_.half_width
               << " (edge " << phi_[k].back() << ", peak " << peak << ")";
            fail(ErrorKind::Convergence, os.str());
        }
    }

    psi_.assign(K_ + 2, std::vector<double>(n));
    psi_[0] = phi_[0];
    psi_[1] = phi_[0];
    for (int k = 1; k <= K_; ++k) {
        std::vector<double> integrand(n);
        for (std::size_t i = 0; i < n; ++i) integrand[i] = x[i] * psi_[k - 1][i];  // sigma * psi_{k-2}
        psi_[k + 1] = grid_.right_cumulative(integrand);
    }

    b_.assign(K_ + 1, 0.0);
    b_[0] = 1.0;
    for (int m = 1; m <= K_; ++m) {
        if (m % 2 == 1) continue;  // zero for odd m
        double s = 0.0;
        for (int j = 0; j < m; j += 2) s += b_[j] * integrals_[m - j];
        b_[m] = -s;  // (-1)^{m-1} with m even
    }
    // Sum over compositions of m into j parts: comp[j][m] = Σ_k I_k comp[j-1][m-k].
    b_closed_.assign(K_ + 1, 0.0);
    b_closed_[0] = 1.0;
    std::vector<std::vector<double>> comp(K_ + 1, std::vector<double>(K_ + 1, 0.0));
    comp[0][0] = 1.0;
    for (int j = 1; j <= K_; ++j)
        for (int m = j; m <= K_; ++m)
            for (int k = 1; k <= m - j + 1; ++k) comp[j][m] += integrals_[k] * comp[j - 1][m - k];
    for (int m = 1; m <= K_; ++m)
        for (int j = 1; j <= m; ++j) b_closed_[m] += (j % 2 == 0 ? 1.0 : -1.0) * comp[j][m];
}

double PhiHierarchy::phi(int k, double tau) const {
    if (tau <= grid_.lo() || tau >= grid_.hi()) return 0.0;
    return grid_.interpolate(phi_.at(k), tau);
}

double PhiHierarchy::phi_cumulative(int k, double tau) const {
    if (tau <= grid_.lo()) return 0.0;
    if (tau >= grid_.hi()) return integrals_.at(k);
    return grid_.interpolate(phi_cum_.at(k), tau);
}

double PhiHierarchy::chi_eps(double tau) const { return fam_.chi(tau / eps_) / eps_; }

double PhiHierarchy::chi_cumulative(double tau) const {
    if (tau <= -eps_) return 0.0;
    if (tau >= eps_) return 1.0;
    return grid_.interpolate(chi_cum_, tau);
}

double PhiHierarchy::psi(int k, double tau) const {
    require(k >= -1 && k <= K_, "PhiHierarchy::psi: index out of range");
    const double a = std::abs(tau);
    if (a >= grid_.hi()) return 0.0;
    return grid_.interpolate(psi_[k + 1], a);
}

PhiHierarchy build_phi_hierarchy(const MollifierFamily& fam, double eps, int K) { return PhiHierarchy(fam, eps, K); }

std::vector<MajorantRatio> majorant_check(const PhiHierarchy& h) {
    const PanelGrid& g = h.grid();
    std::vector<MajorantRatio> out;
    for (int k = 0; k <= h.order(); ++k) {
        MajorantRatio r;
        r.k = k;
        const double peak = h.psi(k, 0.0);
        double cutoff = 0.0;
        for (std::size_t p = 0; p < g.panels(); ++p)
            for (int j = 0; j < g.order(); ++j) {
                const double tau = g.node(p, j);
                const double ps = h.psi(k, tau);
                if (!(ps > 1e-12 * peak)) continue;
                cutoff = std::max(cutoff, std::abs(tau));
                r.sup_ratio = std::max(r.sup_ratio, std::abs(h.table(k)[p * g.order() + j]) / ps);
            }
        r.cutoff_tau = cutoff;
        out.push_back(r);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Atomic measures and smoothed Riesz means

void AtomicMeasure::validate() const {
    for (const Atom& a : atoms) {
        require(std::isfinite(a.location) && std::isfinite(a.weight), "AtomicMeasure: non-finite atom");
        require(a.location >= 0.0, "AtomicMeasure: atoms must lie in [0, inf)");
        if (a.location == 0.0)
            require(a.weight + K0 >= 0.0, "AtomicMeasure: augmented measure negative at 0");
        else
            require(a.weight >= 0.0, "AtomicMeasure: augmented measure negative at an atom");
    }
    require(K0 >= 0.0, "AtomicMeasure: K0 must be >= 0");
    for (const PolynomialDensity& d : polynomial_part)
        require(d.K >= 0.0 && d.nu > 0.0, "AtomicMeasure: background needs K >= 0 and nu > 0");
}

namespace {

void require_odd_extendable(const AtomicMeasure& mu) {
    mu.validate();
    for (const Atom& a : mu.atoms)
        require(a.location > 0.0, "AtomicMeasure: atoms at 0 cannot be extended oddly");
}

}  // namespace

double AtomicMeasure::distribution(double tau) const {
    if (tau == 0.0) return 0.0;
    if (tau < 0.0) return -distribution(-tau);
    double s = 0.0;
    for (const Atom& a : atoms) {
        if (a.location < tau)
            s += a.weight;
        else if (a.location == tau)
            s += 0.5 * a.weight;
    }
    return s;
}

double phi_conv_N(const PhiHierarchy& h, int k, const AtomicMeasure& mu, double sigma) {
    const double total = h.integral(k);
    double s = 0.0;
    for (const Atom& a : mu.atoms)
        s += a.weight * (h.phi_cumulative(k, sigma - a.location) - total + h.phi_cumulative(k, sigma + a.location));
    return s;
}

double phi_conv_T(const PhiHierarchy& h, int k, const AtomicMeasure& mu, double sigma) {
    double s = 0.0;
    for (const Atom& a : mu.atoms) s += a.weight * (h.phi(k, sigma - a.location) + h.phi(k, sigma + a.location));
    return s;
}

double chi_conv_N(const PhiHierarchy& h, const AtomicMeasure& mu, double sigma) {
    double s = 0.0;
    for (const Atom& a : mu.atoms)
        s += a.weight * (h.chi_cumulative(sigma - a.location) - 1.0 + h.chi_cumulative(sigma + a.location));
    return s;
}

namespace {

std::vector<double> atom_breaks(const AtomicMeasure& mu, double eps, double tau) {
    std::vector<double> b;
    for (const Atom& a : mu.atoms)
        for (double x : {a.location - eps, a.location, a.location + eps, eps - a.location})
            if (x > 0.0 && x < tau) b.push_back(x);
    if (eps > 0.0 && eps < tau) b.push_back(eps);
    return b;
}

// (2γ/τ)∫_0^τ (1 - σ²/τ²)^{γ-1}(σ/τ) F(σ) dσ for a piecewise-smooth F.
double riesz_average(const std::function<double(double)>& F, double gamma, double tau, std::vector<double> breaks) {
    require(tau > 0.0, "smoothed_riesz: tau must be positive");
    require(gamma > 0.0, "smoothed_riesz: gamma must be positive");
    if (gamma >= 1.0) {
        auto integrand = [&](double s) {
            const double u = s / tau;
            return (2.0 * gamma / tau) * std::pow(std::max(0.0, 1.0 - u * u), gamma - 1.0) * u * F(s);
        };
        return integrate(integrand, 0.0, tau, 1e-14, 1e-13, breaks).value;
    }
    // w = (1 - σ²/τ²)^γ removes the endpoint singularity.
    std::vector<double> wb;
    for (double x : breaks) wb.push_back(std::pow(1.0 - (x / tau) * (x / tau), gamma));
    auto integrand = [&](double w) { return F(tau * std::sqrt(std::max(0.0, 1.0 - std::pow(w, 1.0 / gamma)))); };
    return integrate(integrand, 0.0, 1.0, 1e-14, 1e-13, wb).value;
}

}  // namespace

double smoothed_riesz(const AtomicMeasure& mu, double gamma, double tau, const PhiHierarchy& h) {
    require_odd_extendable(mu);
    if (mu.atoms.empty()) return 0.0;
    return riesz_average([&](double s) { return chi_conv_N(h, mu, s); }, gamma, tau, atom_breaks(mu, h.eps(), tau));
}

double smoothed_riesz(const AtomicMeasure& mu, double gamma, double tau, double eps, const MollifierFamily& fam) {
    return smoothed_riesz(mu, gamma, tau, PhiHierarchy(fam, eps, 0));
}

double unsmoothed_riesz(const AtomicMeasure& mu, double gamma, double tau) {
    require_odd_extendable(mu);
    require(tau > 0.0 && gamma > 0.0, "unsmoothed_riesz: tau and gamma must be positive");
    double s = 0.0;
    for (const Atom& a : mu.atoms)
        if (a.location < tau) s += a.weight * std::pow(1.0 - (a.location / tau) * (a.location / tau), gamma);
    return s;
}

namespace {

// Coefficients of G_m(s) = (1 - s²)^{m-1} s, ascending powers.
std::vector<double> g_poly(int m) {
    std::vector<double> p{1.0};
    for (int i = 0; i < m - 1; ++i) {
        std::vector<double> q(p.size() + 2, 0.0);
        for (std::size_t k = 0; k < p.size(); ++k) {
            q[k] += p[k];
            q[k + 2] -= p[k];
        }
        p = q;
    }
    p.insert(p.begin(), 0.0);
    return p;
}

std::vector<double> poly_derivative(std::vector<double> p, int times) {
    for (int t = 0; t < times; ++t) {
        if (p.size() <= 1) return {0.0};
        std::vector<double> d(p.size() - 1);
        for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = k * p[k];
        p = d;
    }
    return p;
}

double poly_eval(const std::vector<double>& p, double x) {
    double s = 0.0;
    for (std::size_t k = p.size(); k-- > 0;) s = s * x + p[k];
    return s;
}

}  // namespace

IdentityReport verify_iterated_identity(const AtomicMeasure& mu, int m, double tau, const PhiHierarchy& h) {
    require_odd_extendable(mu);
    require(m >= 1, "verify_iterated_identity: m must be >= 1");
    require(m + 1 <= h.order(), "verify_iterated_identity: hierarchy order must be at least m + 1");
    require(tau > 0.0, "verify_iterated_identity: tau must be positive");
    IdentityReport r;
    r.m = m;
    r.eps = h.eps();
    r.tau = tau;
    if (mu.atoms.empty()) return r;
    const std::vector<double> breaks = atom_breaks(mu, h.eps(), tau);
    const std::vector<double> G = g_poly(m);
    const double tol = 1e-14;
    r.lhs = smoothed_riesz(mu, m, tau, h);

    double rhs = 0.0;
    for (int j = 0; j <= m; j += 2) {
        const std::vector<double> Gj = poly_derivative(G, j);
        const double I = integrate([&](double s) { return poly_eval(Gj, s / tau) * phi_conv_N(h, 0, mu, s); }, 0.0, tau,
                                   tol, 1e-13, breaks)
                             .value;
        rhs += 2.0 * m * h.b(j) * std::pow(tau, -j - 1.0) * I;
    }
    const std::vector<double> Gm = poly_derivative(G, m);
    const double sign_m = (m % 2 == 0) ? 1.0 : -1.0;
    for (int j = 0; j <= m; j += 2) {
        const int k = m + 1 - j;
        const double I = integrate([&](double s) { return poly_eval(Gm, s / tau) * phi_conv_T(h, k, mu, s); }, 0.0, tau,
                                   tol, 1e-13, breaks)
                             .value;
        rhs -= 2.0 * m * sign_m * h.b(j) * std::pow(tau, -m - 1.0) * I;
    }
    double fact = 1.0;
    for (int i = 2; i <= m; ++i) fact *= i;
    for (int j = 0; j <= m - 1; j += 2)
        rhs -= std::ldexp(1.0, m) * fact * h.b(j) * std::pow(tau, -m) * phi_conv_N(h, m - j, mu, tau);
    r.rhs = rhs;
    r.residual = std::abs(r.lhs - r.rhs);
    return r;
}

std::string identity_report_json(const IdentityReport& r) {
    nlohmann::json j{{"m", r.m}, {"eps", r.eps}, {"tau", r.tau}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"residual", r.residual}};
    return j.dump();
}

void export_table_csv(const PhiHierarchy& h, int k, const std::string& path) {
    require(k >= 0 && k <= h.order(), "export_table_csv: level out of range");
    std::ofstream out(path);
    if (!out) fail(ErrorKind::Io, "cannot open '" + path + "' for writing");
    out << "tau,value\n";
    const PanelGrid& g = h.grid();
    char a[64], b[64];
    for (std::size_t p = 0; p < g.panels(); ++p)
        for (int j = (p == 0 ? 0 : 1); j < g.order(); ++j) {
            std::snprintf(a, sizeof a, "%.17g", g.node(p, j));
            std::snprintf(b, sizeof b, "%.17g", h.table(k)[p * g.order() + j]);
            out << a << ',' << b << '\n';
        }
}

// ---------------------------------------------------------------------------
// Laplace-side checks on rectangles

namespace {

double heat_kernel_1d(double len, double x, double t, bool dirichlet) {
    const double c = kPi * kPi * t / (len * len);
    double s = dirichlet ? 0.0 : 1.0 / len;
    for (long m = 1;; ++m) {
        const double decay = std::exp(-c * double(m) * double(m));
        if (decay < 1e-20 && m > 2) break;
        const double arg = m * kPi * x / len;
        const double w = dirichlet ? std::sin(arg) : std::cos(arg);
        s += 2.0 / len * w * w * decay;
    }
    return s;
}

}  // namespace

double rectangle_heat_kernel_diagonal(const Rectangle& rect, Point x, double t, BoundaryCondition bc) {
    require(t > 0.0, "rectangle_heat_kernel_diagonal: t must be positive");
    require(x.x > 0.0 && x.x < rect.a && x.y > 0.0 && x.y < rect.b, "rectangle_heat_kernel_diagonal: point outside");
    const bool d = bc == BoundaryCondition::Dirichlet;
    return heat_kernel_1d(rect.a, x.x, t, d) * heat_kernel_1d(rect.b, x.y, t, d);
}

double envelope_exponent_fit(const std::vector<double>& lambdas, const std::vector<double>& remainders, int half_window) {
    require(lambdas.size() == remainders.size() && lambdas.size() >= 3, "envelope_exponent_fit: need >= 3 points");
    std::vector<double> lx, ly;
    const int n = static_cast<int>(lambdas.size());
    for (int i = 0; i < n; ++i) {
        double e = 0.0;
        for (int j = std::max(0, i - half_window); j <= std::min(n - 1, i + half_window); ++j)
            e = std::max(e, std::abs(remainders[j]));
        if (e > 0.0) {
            lx.push_back(std::log(lambdas[i]));
            ly.push_back(std::log(e));
        }
    }
    return least_squares_line(lx, ly).slope;
}

OrderCheck tauberian_order_check(const Rectangle& rect, BoundaryCondition bc, Point x, double gamma,
                                 const std::vector<double>& lambda_grid, const std::vector<double>& laplace_times) {
    validate_domain(rect);
    require(x.x > 0.0 && x.x < rect.a && x.y > 0.0 && x.y < rect.b, "tauberian_order_check: point must be interior");
    require(gamma >= 0.0, "tauberian_order_check: gamma must be >= 0");
    require(lambda_grid.size() >= 3, "tauberian_order_check: need at least three lambda values");
    for (std::size_t i = 1; i < lambda_grid.size(); ++i)
        require(lambda_grid[i] > lambda_grid[i - 1], "tauberian_order_check: lambda grid must increase");
    require(lambda_grid.front() > 0.0, "tauberian_order_check: lambda must be positive");
    if (std::log10(lambda_grid.back() / lambda_grid.front()) < 1.5)
        fail(ErrorKind::InvalidArgument, "tauberian_order_check: lambda range spans fewer than 1.5 decades");

    OrderCheck oc;
    oc.dist_to_boundary = std::min({x.x, rect.a - x.x, x.y, rect.b - x.y});
    oc.stated_exponent = gamma + 0.5;
    oc.interior_exponent = 0.5 * (gamma + 1.0);
    const double d2 = oc.dist_to_boundary * oc.dist_to_boundary;
    for (double t : laplace_times) {
        LaplaceRow row;
        row.t = t;
        row.kernel = rectangle_heat_kernel_diagonal(rect, x, t, bc);
        row.free_kernel = 1.0 / (4.0 * kPi * t);
        // The free kernel over s in (0, t] peaks at s = d^2/4, so the closed form e^{-d^2/4t}
        // bound only holds up to that time; beyond it the peak value is the bound.
        row.stated_regime = t <= d2 / 4.0;
        const double s = row.stated_regime ? t : d2 / 4.0;
        row.bound = std::exp(-d2 / (4.0 * s)) / (4.0 * kPi * s);
        const double slack = 1e-12 * row.free_kernel;
        if (bc == BoundaryCondition::Dirichlet) {
            const double diff = row.free_kernel - row.kernel;
            row.within = diff >= -slack && diff <= row.bound + slack;
        } else {
            // The reflection bound is stated for Dirichlet; Neumann rows are reported only.
            row.within = true;
        }
        oc.laplace_ok = oc.laplace_ok && row.within;
        oc.laplace.push_back(row);
    }
    const double L = lt_constant(gamma, 2);
    oc.lambdas = lambda_grid;
    oc.remainders.resize(lambda_grid.size());
    parallel_for(lambda_grid.size(), [&](std::size_t i) {
        const double lam = lambda_grid[i];
        oc.remainders[i] = pointwise_spectral_function(rect, x, lam, gamma, bc) - L * std::pow(lam, gamma + 1.0);
    });
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < lambda_grid.size(); ++i)
        if (oc.remainders[i] != 0.0) {
            lx.push_back(std::log(lambda_grid[i]));
            ly.push_back(std::log(std::abs(oc.remainders[i])));
        }
    oc.raw_exponent = lx.size() >= 2 ? least_squares_line(lx, ly).slope : 0.0;
    oc.fitted_exponent = envelope_exponent_fit(lambda_grid, oc.remainders);
    return oc;
}

}  // namespace weylab
