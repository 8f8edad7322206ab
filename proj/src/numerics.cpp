#include "weylab/numerics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>

#include "weylab/errors.hpp"

namespace weylab {

namespace {

constexpr double kLanczosG = 7.0;
constexpr double kLanczosCoef[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

double lanczos_series(double z) {
    double a = kLanczosCoef[0];
    for (int i = 1; i < 9; ++i) a += kLanczosCoef[i] / (z + i);
    return a;
}

}  // namespace

double gamma_fn(double x) {
    require(std::isfinite(x), "gamma_fn: non-finite argument");
    if (x < 0.5) {
        require(std::floor(x) != x, "gamma_fn: pole at non-positive integer");
        return kPi / (std::sin(kPi * x) * gamma_fn(1.0 - x));
    }
    const double z = x - 1.0;
    const double t = z + kLanczosG + 0.5;
    // Split the power to avoid overflow for large arguments.
    const double p = std::pow(t, 0.5 * (z + 0.5));
    return std::sqrt(2.0 * kPi) * p * (std::exp(-t) * p) * lanczos_series(z);
}

double log_gamma_fn(double x) {
    require(x > 0.0 && std::isfinite(x), "log_gamma_fn: argument must be positive");
    if (x < 0.5) return std::log(kPi / std::sin(kPi * x)) - log_gamma_fn(1.0 - x);
    const double z = x - 1.0;
    const double t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(lanczos_series(z));
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    require(n >= 1, "gauss_legendre: n must be positive");
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    // Legendre P_n and its derivative at x via the three-term recurrence.
    auto legendre = [n](double x, double& deriv) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        deriv = n * (p0 - x * p1) / (1.0 - x * x);
        return p1;
    };
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            const double dx = legendre(x, dp) / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        legendre(x, dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

namespace {

constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

QuadResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    const double fc = f(c);
    double rk = fc * kWgk[7];
    double rg = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double s = f(c - dx) + f(c + dx);
        rk += kWgk[j] * s;
        if (j % 2 == 1) rg += kWg[j / 2] * s;
    }
    return {rk * h, std::abs((rk - rg) * h)};
}

struct Adaptive {
    const std::function<double(double)>& f;
    double abs_tol;
    double rel_tol;
    int max_depth;
    bool failed = false;

    QuadResult run(double a, double b, const QuadResult& whole, double tol, int depth) {
        if (whole.error <= tol || std::abs(b - a) < 1e-15 * std::max(1.0, std::abs(a))) return whole;
        if (depth >= max_depth) {
            failed = true;
            return whole;
        }
        const double m = 0.5 * (a + b);
        const QuadResult left = gk15(f, a, m);
        const QuadResult right = gk15(f, m, b);
        const QuadResult l = run(a, m, left, 0.5 * tol, depth + 1);
        const QuadResult r = run(m, b, right, 0.5 * tol, depth + 1);
        return {l.value + r.value, l.error + r.error};
    }
};

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b, double abs_tol, double rel_tol,
                     const std::vector<double>& breakpoints, int max_depth) {
    require(std::isfinite(a) && std::isfinite(b), "integrate: limits must be finite");
    if (a == b) return {};
    double sign = 1.0;
    if (b < a) {
        std::swap(a, b);
        sign = -1.0;
    }
    std::vector<double> pts{a};
    for (double p : breakpoints)
        if (p > a && p < b) pts.push_back(p);
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::vector<QuadResult> first(pts.size() - 1);
    double rough = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        first[i] = gk15(f, pts[i], pts[i + 1]);
        rough += std::abs(first[i].value);
    }
    const double tol = std::max(abs_tol, rel_tol * rough);
    Adaptive ad{f, abs_tol, rel_tol, max_depth};
    QuadResult total;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double share = tol * (pts[i + 1] - pts[i]) / (b - a);
        const QuadResult r = ad.run(pts[i], pts[i + 1], first[i], share, 0);
        total.value += r.value;
        total.error += r.error;
    }
    if (ad.failed && total.error > tol) {
        std::ostringstream os;
        os << "integrate: tolerance " << tol << " not met on [" << a << ", " << b << "], achieved " << total.error;
        fail(ErrorKind::Convergence, os.str());
    }
    total.value *= sign;
    return total;
}

double integrate_fixed(const std::function<double(double)>& f, double a, double b, int panels, int order) {
    std::vector<double> x, w;
    gauss_legendre(order, x, w);
    const double h = (b - a) / panels;
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h;
        double s = 0.0;
        for (int i = 0; i < order; ++i) s += w[i] * f(lo + 0.5 * h * (x[i] + 1.0));
        sum += 0.5 * h * s;
    }
    return sum;
}

LinearFit least_squares_line(const std::vector<double>& x, const std::vector<double>& y) {
    require(x.size() == y.size() && x.size() >= 2, "least_squares_line: need at least two points");
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    require(sxx > 0.0, "least_squares_line: abscissae are all equal");
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    return fit;
}

std::vector<double> log_space(double start, double stop, std::size_t count) {
    require(start > 0.0 && stop > 0.0, "log_space: endpoints must be positive");
    std::vector<double> out(count);
    if (count == 1) {
        out[0] = start;
        return out;
    }
    const double l0 = std::log(start), l1 = std::log(stop);
    for (std::size_t i = 0; i < count; ++i) out[i] = std::exp(l0 + (l1 - l0) * i / (count - 1.0));
    out.front() = start;
    out.back() = stop;
    return out;
}

std::vector<double> lin_space(double start, double stop, std::size_t count) {
    std::vector<double> out(count);
    if (count == 1) {
        out[0] = start;
        return out;
    }
    for (std::size_t i = 0; i < count; ++i) out[i] = start + (stop - start) * i / (count - 1.0);
    out.back() = stop;
    return out;
}

unsigned worker_count() {
    if (const char* env = std::getenv("WEYLAB_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) return static_cast<unsigned>(std::min<long>(v, 256));
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1u : hw;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!err) err = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace weylab
