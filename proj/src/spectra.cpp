#include "weylab/spectra.hpp"

#include <Eigen/SparseCore>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "weylab/bessel.hpp"
#include "weylab/eigensolver.hpp"
#include "weylab/errors.hpp"
#include "weylab/numerics.hpp"

namespace weylab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Compensated summation.
struct Accumulator {
    double sum = 0.0, comp = 0.0;
    void add(double x) {
        const double t = sum + x;
        comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

double riesz_term(double gap, double gamma) {
    if (gamma == 0.0) return 1.0;
    if (gamma == 1.0) return gap;
    return std::pow(gap, gamma);
}

// Assigns block ids to runs of equal (within rel_tol) sorted values.
std::vector<int> group_blocks(const std::vector<double>& vals, double rel_tol) {
    std::vector<int> ids(vals.size());
    int id = -1;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (i == 0 || vals[i] - vals[i - 1] > rel_tol * std::max(1.0, std::abs(vals[i]))) ++id;
        ids[i] = id;
    }
    return ids;
}

}  // namespace

void validate_domain(const Domain& d) {
    std::visit(overloaded{[](const Rectangle& r) {
                              require(r.a > 0.0 && r.b > 0.0 && std::isfinite(r.a) && std::isfinite(r.b),
                                      "rectangle sides must be positive");
                          },
                          [](const Disk& k) { require(k.radius > 0.0 && std::isfinite(k.radius), "disk radius must be positive"); },
                          [](const ConvexPolygon&) {}},
               d);
}

double domain_area(const Domain& d) {
    return std::visit(overloaded{[](const Rectangle& r) { return r.a * r.b; },
                                 [](const Disk& k) { return kPi * k.radius * k.radius; },
                                 [](const ConvexPolygon& p) { return p.area(); }},
                      d);
}

double domain_perimeter(const Domain& d) {
    return std::visit(overloaded{[](const Rectangle& r) { return 2.0 * (r.a + r.b); },
                                 [](const Disk& k) { return 2.0 * kPi * k.radius; },
                                 [](const ConvexPolygon& p) { return p.perimeter(); }},
                      d);
}

double domain_inradius(const Domain& d) {
    return std::visit(overloaded{[](const Rectangle& r) { return 0.5 * std::min(r.a, r.b); },
                                 [](const Disk& k) { return k.radius; },
                                 [](const ConvexPolygon& p) { return inradius(p); }},
                      d);
}

std::vector<double> domain_angles(const Domain& d) {
    return std::visit(overloaded{[](const Rectangle&) { return std::vector<double>(4, 0.5 * kPi); },
                                 [](const Disk&) { return std::vector<double>{}; },
                                 [](const ConvexPolygon& p) { return p.angles(); }},
                      d);
}

namespace {

nlohmann::json domain_to_json_value(const Domain& d) {
    return std::visit(overloaded{[](const Rectangle& r) { return nlohmann::json{{"kind", "rectangle"}, {"a", r.a}, {"b", r.b}}; },
                                 [](const Disk& k) { return nlohmann::json{{"kind", "disk"}, {"radius", k.radius}}; },
                                 [](const ConvexPolygon& p) {
                                     nlohmann::json j = nlohmann::json::parse(p.to_json());
                                     j["kind"] = "polygon";
                                     return j;
                                 }},
                      d);
}

Domain domain_from_json_value(const nlohmann::json& j) {
    require(j.is_object() && j.contains("kind"), "domain JSON needs a 'kind' field");
    const std::string kind = j["kind"].get<std::string>();
    Domain d;
    if (kind == "rectangle")
        d = Rectangle{j.at("a").get<double>(), j.at("b").get<double>()};
    else if (kind == "disk")
        d = Disk{j.at("radius").get<double>()};
    else if (kind == "polygon")
        d = ConvexPolygon::from_json(j.dump());
    else
        fail(ErrorKind::InvalidArgument, "unknown domain kind '" + kind + "'");
    validate_domain(d);
    return d;
}

}  // namespace

std::string domain_json(const Domain& d) { return domain_to_json_value(d).dump(); }

Domain domain_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        fail(ErrorKind::Io, std::string("domain JSON parse error: ") + e.what());
    }
    return domain_from_json_value(j);
}

Spectrum rectangle_spectrum(double a, double b, BoundaryCondition bc, double lambda_max, std::size_t capacity) {
    require(a > 0.0 && b > 0.0, "rectangle_spectrum: sides must be positive");
    require(lambda_max > 0.0 && std::isfinite(lambda_max), "rectangle_spectrum: lambda_max must be positive");
    // Area term plus the boundary term bounds the Neumann count from above.
    const double estimate = a * b * lambda_max / (4.0 * kPi) + (a + b) * std::sqrt(lambda_max) / kPi + 1.0;
    if (estimate > static_cast<double>(capacity)) {
        std::ostringstream os;
        os << "rectangle_spectrum: about " << estimate << " eigenvalues exceeds capacity " << capacity;
        fail(ErrorKind::Capacity, os.str());
    }
    const int start = bc == BoundaryCondition::Dirichlet ? 1 : 0;
    const double ca = kPi * kPi / (a * a), cb = kPi * kPi / (b * b);
    std::vector<double> vals;
    vals.reserve(static_cast<std::size_t>(estimate));
    for (long m = start;; ++m) {
        const double em = ca * double(m) * double(m);
        if (em + cb * double(start) * double(start) >= lambda_max) break;
        for (long n = start;; ++n) {
            const double e = em + cb * double(n) * double(n);
            if (e >= lambda_max) break;
            vals.push_back(e);
        }
    }
    std::sort(vals.begin(), vals.end());
    Spectrum s;
    s.block_ids = group_blocks(vals, 0.0);
    s.eigenvalues = std::move(vals);
    s.bc = bc;
    s.complete_below = lambda_max;
    s.domain = Rectangle{a, b};
    s.exact = true;
    return s;
}

Spectrum disk_spectrum(double radius, BoundaryCondition bc, double lambda_max, std::size_t capacity) {
    require(radius > 0.0, "disk_spectrum: radius must be positive");
    require(lambda_max > 0.0 && std::isfinite(lambda_max), "disk_spectrum: lambda_max must be positive");
    const double estimate = radius * radius * lambda_max / 4.0 + radius * std::sqrt(lambda_max) + 1.0;
    if (estimate > static_cast<double>(capacity)) fail(ErrorKind::Capacity, "disk_spectrum: enumeration exceeds capacity");
    const double x_max = radius * std::sqrt(lambda_max);
    struct Mode {
        double value;
        int mult;
    };
    std::vector<Mode> modes;
    if (bc == BoundaryCondition::Dirichlet) {
        const auto table = bessel_j_zero_table(x_max);
        for (std::size_t nu = 0; nu < table.size(); ++nu)
            for (double z : table[nu]) modes.push_back({(z / radius) * (z / radius), nu == 0 ? 1 : 2});
    } else {
        modes.push_back({0.0, 1});
        // Zeros of J_nu' sit below the matching zeros of J_nu, so pad the table.
        const double pad = 2.0 * std::cbrt(x_max + 1.0) + 6.0;
        const auto table = bessel_j_zero_table(x_max + pad);
        for (std::size_t nu = 0; nu < table.size(); ++nu) {
            std::vector<double> zeros;
            if (nu == 0) {
                if (table.size() > 1) zeros = table[1];
            } else {
                std::vector<double> brackets{static_cast<double>(nu)};
                brackets.insert(brackets.end(), table[nu].begin(), table[nu].end());
                const int order = static_cast<int>(nu);
                const auto f = [order](double x) { return bessel_j_prime(order, x); };
                for (std::size_t k = 0; k + 1 < brackets.size() && brackets[k] < x_max; ++k) {
                    double lo = brackets[k], hi = brackets[k + 1];
                    double flo = f(lo);
                    if ((flo > 0.0) == (f(hi) > 0.0)) {
                        std::ostringstream os;
                        os << "Bessel derivative zero bracketing failed for (nu=" << nu << ", k=" << k + 1 << ")";
                        fail(ErrorKind::Convergence, os.str());
                    }
                    while (hi - lo > 1e-12) {
                        const double mid = 0.5 * (lo + hi);
                        if (mid <= lo || mid >= hi) break;
                        const double fm = f(mid);
                        if ((fm > 0.0) == (flo > 0.0)) {
                            lo = mid;
                            flo = fm;
                        } else {
                            hi = mid;
                        }
                    }
                    zeros.push_back(0.5 * (lo + hi));
                }
            }
            for (double z : zeros)
                if (z < x_max) modes.push_back({(z / radius) * (z / radius), nu == 0 ? 1 : 2});
        }
    }
    std::sort(modes.begin(), modes.end(), [](const Mode& x, const Mode& y) { return x.value < y.value; });
    Spectrum s;
    int block = 0;
    for (const Mode& md : modes) {
        if (md.value >= lambda_max) continue;
        for (int c = 0; c < md.mult; ++c) {
            s.eigenvalues.push_back(md.value);
            s.block_ids.push_back(block);
        }
        ++block;
    }
    s.bc = bc;
    s.complete_below = lambda_max;
    s.domain = Disk{radius};
    s.exact = true;
    return s;
}

Spectrum polygon_dirichlet_spectrum_fd(const ConvexPolygon& poly, double h, int num_eigs) {
    require(h > 0.0 && std::isfinite(h), "polygon_dirichlet_spectrum_fd: h must be positive");
    require(num_eigs >= 1, "polygon_dirichlet_spectrum_fd: num_eigs must be >= 1");
    const double rin = inradius(poly);
    require(h < 0.5 * rin, "polygon_dirichlet_spectrum_fd: h must be below half the inradius");
    double xmin = poly.vertices()[0].x, xmax = xmin, ymin = poly.vertices()[0].y, ymax = ymin;
    for (const Point& p : poly.vertices()) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    const int nx = static_cast<int>(std::floor((xmax - xmin) / h + 1e-9)) + 1;
    const int ny = static_cast<int>(std::floor((ymax - ymin) / h + 1e-9)) + 1;
    std::vector<int> index(static_cast<std::size_t>(nx) * ny, -1);
    int count = 0;
    const double inside_tol = 1e-9 * h;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            const Point p{xmin + i * h, ymin + j * h};
            bool strict = true;
            for (std::size_t e = 0; e < poly.size() && strict; ++e)
                if (dot(poly.inward_normals()[e], p) - poly.offsets()[e] <= inside_tol) strict = false;
            if (strict) index[static_cast<std::size_t>(j) * nx + i] = count++;
        }
    if (count < num_eigs) fail(ErrorKind::InvalidArgument, "polygon_dirichlet_spectrum_fd: insufficient resolution");
    const double inv_h2 = 1.0 / (h * h);
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(static_cast<std::size_t>(count) * 5);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            const int id = index[static_cast<std::size_t>(j) * nx + i];
            if (id < 0) continue;
            trips.emplace_back(id, id, 4.0 * inv_h2);
            const int di[4] = {1, -1, 0, 0}, dj[4] = {0, 0, 1, -1};
            for (int q = 0; q < 4; ++q) {
                const int ii = i + di[q], jj = j + dj[q];
                if (ii < 0 || jj < 0 || ii >= nx || jj >= ny) continue;
                const int nb = index[static_cast<std::size_t>(jj) * nx + ii];
                if (nb >= 0) trips.emplace_back(id, nb, -inv_h2);
            }
        }
    Eigen::SparseMatrix<double> A(count, count);
    A.setFromTriplets(trips.begin(), trips.end());
    const EigenResult er = smallest_eigenvalues(A, num_eigs);
    Spectrum s;
    s.eigenvalues = er.values;
    s.block_ids = group_blocks(s.eigenvalues, 1e-8);
    s.bc = BoundaryCondition::Dirichlet;
    s.complete_below = s.eigenvalues.back();
    s.domain = poly;
    s.exact = false;
    return s;
}

namespace {

void check_certified(const Spectrum& spec, double lambda) {
    require(std::isfinite(lambda), "lambda must be finite");
    if (lambda > spec.complete_below) {
        std::ostringstream os;
        os << "lambda=" << lambda << " above the certified threshold " << spec.complete_below;
        fail(ErrorKind::OutOfCertifiedRange, os.str());
    }
}

}  // namespace

long long counting_function(const Spectrum& spec, double lambda) {
    check_certified(spec, lambda);
    return std::lower_bound(spec.eigenvalues.begin(), spec.eigenvalues.end(), lambda) - spec.eigenvalues.begin();
}

double riesz_mean(const Spectrum& spec, double lambda, double gamma) {
    require(gamma >= 0.0 && std::isfinite(gamma), "riesz_mean: gamma must be >= 0");
    const long long n = counting_function(spec, lambda);
    if (gamma == 0.0) return static_cast<double>(n);
    Accumulator acc;
    for (long long i = 0; i < n; ++i) acc.add(riesz_term(lambda - spec.eigenvalues[i], gamma));
    return acc.value();
}

HeatTrace heat_trace(const Spectrum& spec, double t, double tolerance) {
    require(t > 0.0 && std::isfinite(t), "heat_trace: t must be positive");
    HeatTrace ht;
    Accumulator acc;
    // Ascending eigenvalues give descending terms; sum small ones first.
    for (auto it = spec.eigenvalues.rbegin(); it != spec.eigenvalues.rend(); ++it)
        if (*it < spec.complete_below) acc.add(std::exp(-t * *it));
    ht.value = acc.value();
    // With N(mu) <= 16 L_{0,2} |Omega| mu the omitted tail is at most
    // 16 L_{0,2} |Omega| t^{-1} (1 + t Lambda) e^{-t Lambda}.
    const double x = t * spec.complete_below;
    ht.tail_bound = 16.0 * lt_constant(0.0, 2) * domain_area(spec.domain) / t * (1.0 + x) * std::exp(-x);
    ht.flagged = tolerance > 0.0 && ht.tail_bound > tolerance;
    return ht;
}

double pointwise_spectral_function(const Rectangle& rect, Point x, double lambda, double gamma, BoundaryCondition bc) {
    validate_domain(rect);
    require(x.x > 0.0 && x.x < rect.a && x.y > 0.0 && x.y < rect.b,
            "pointwise_spectral_function: point must lie strictly inside the rectangle");
    require(lambda >= 0.0 && std::isfinite(lambda), "pointwise_spectral_function: lambda must be >= 0");
    require(gamma >= 0.0, "pointwise_spectral_function: gamma must be >= 0");
    const bool dir = bc == BoundaryCondition::Dirichlet;
    const int start = dir ? 1 : 0;
    const double ca = kPi * kPi / (rect.a * rect.a), cb = kPi * kPi / (rect.b * rect.b);
    const long mmax = static_cast<long>(std::sqrt(std::max(0.0, lambda) / ca)) + 1;
    const long nmax = static_cast<long>(std::sqrt(std::max(0.0, lambda) / cb)) + 1;
    // Squared normalized 1D eigenfunctions at the point.
    auto profile = [dir](long count, double len, double coord) {
        std::vector<double> w(count + 1);
        for (long k = 0; k <= count; ++k) {
            const double arg = k * kPi * coord / len;
            if (dir) {
                const double s = std::sin(arg);
                w[k] = 2.0 / len * s * s;
            } else {
                const double c = std::cos(arg);
                w[k] = (k == 0 ? 1.0 : 2.0) / len * c * c;
            }
        }
        return w;
    };
    const auto wx = profile(mmax, rect.a, x.x), wy = profile(nmax, rect.b, x.y);
    Accumulator acc;
    for (long m = start; m <= mmax; ++m) {
        const double em = ca * double(m) * double(m);
        if (em + cb * double(start) * double(start) >= lambda) break;
        for (long n = start; n <= nmax; ++n) {
            const double e = em + cb * double(n) * double(n);
            if (e >= lambda) break;
            acc.add(riesz_term(lambda - e, gamma) * wx[m] * wy[n]);
        }
    }
    return acc.value();
}

SpectralFunctionSample spectral_function_sample(const Rectangle& rect, Point x, const std::vector<double>& lambdas,
                                                BoundaryCondition bc) {
    SpectralFunctionSample s;
    s.point = x;
    s.dist_to_boundary = std::min({x.x, rect.a - x.x, x.y, rect.b - x.y});
    s.lambdas = lambdas;
    for (double l : lambdas) s.values.push_back(pointwise_spectral_function(rect, x, l, 0.0, bc));
    return s;
}

double dirichlet_neumann_trace_gap(const Spectrum& spec_d, const Spectrum& spec_n, double lambda, double gamma) {
    if (spec_d.bc != BoundaryCondition::Dirichlet || spec_n.bc != BoundaryCondition::Neumann)
        fail(ErrorKind::InvalidArgument, "dirichlet_neumann_trace_gap: expected a Dirichlet and a Neumann spectrum");
    if (domain_json(spec_d.domain) != domain_json(spec_n.domain))
        fail(ErrorKind::InternalConsistency, "dirichlet_neumann_trace_gap: spectra belong to different domains");
    return riesz_mean(spec_n, lambda, gamma) - riesz_mean(spec_d, lambda, gamma);
}

double rectangle_riesz_mean(double a, double b, BoundaryCondition bc, double lambda, double gamma) {
    require(a > 0.0 && b > 0.0, "rectangle_riesz_mean: sides must be positive");
    require(lambda >= 0.0 && gamma >= 0.0, "rectangle_riesz_mean: lambda and gamma must be >= 0");
    const int start = bc == BoundaryCondition::Dirichlet ? 1 : 0;
    const double ca = kPi * kPi / (a * a), cb = kPi * kPi / (b * b);
    Accumulator acc;
    for (long m = start;; ++m) {
        const double em = ca * double(m) * double(m);
        if (em + cb * double(start) * double(start) >= lambda) break;
        for (long n = start;; ++n) {
            const double e = em + cb * double(n) * double(n);
            if (e >= lambda) break;
            acc.add(riesz_term(lambda - e, gamma));
        }
    }
    return acc.value();
}

std::string spectrum_header_json(const Spectrum& spec) {
    nlohmann::json j;
    j["bc"] = to_string(spec.bc);
    j["domain"] = domain_to_json_value(spec.domain);
    j["complete_below"] = spec.complete_below;
    j["exact"] = spec.exact;
    return j.dump();
}

void save_spectrum(const Spectrum& spec, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(ErrorKind::Io, "cannot open '" + path + "' for writing");
    out << spectrum_header_json(spec) << '\n';
    char buf[64];
    for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", spec.eigenvalues[i]);
        out << i << ',' << buf << ',' << spec.block_ids[i] << '\n';
    }
    if (!out) fail(ErrorKind::Io, "write to '" + path + "' failed");
}

Spectrum load_spectrum(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Io, "cannot open '" + path + "'");
    std::string line;
    if (!std::getline(in, line)) fail(ErrorKind::Io, "spectrum file is empty");
    nlohmann::json h;
    try {
        h = nlohmann::json::parse(line);
    } catch (const std::exception& e) {
        fail(ErrorKind::Io, std::string("spectrum header parse error: ") + e.what());
    }
    Spectrum s;
    try {
        s.bc = parse_boundary_condition(h.at("bc").get<std::string>().c_str());
        s.domain = domain_from_json_value(h.at("domain"));
        s.complete_below = h.at("complete_below").get<double>();
        s.exact = h.at("exact").get<bool>();
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::Io, std::string("spectrum header malformed: ") + e.what());
    }
    std::size_t expected = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string idx, val, blk;
        if (!std::getline(ls, idx, ',') || !std::getline(ls, val, ',') || !std::getline(ls, blk))
            fail(ErrorKind::Io, "malformed spectrum record: " + line);
        if (std::stoull(idx) != expected) fail(ErrorKind::Io, "spectrum records out of order at " + idx);
        s.eigenvalues.push_back(std::strtod(val.c_str(), nullptr));
        s.block_ids.push_back(std::stoi(blk));
        ++expected;
    }
    if (!std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end()))
        fail(ErrorKind::Io, "spectrum file eigenvalues are not sorted");
    return s;
}

}  // namespace weylab
