#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "weylab/convex_geometry.hpp"
#include "weylab/weyl_constants.hpp"

namespace weylab {

struct Rectangle {
    double a = 1.0;
    double b = 1.0;
};

struct Disk {
    double radius = 1.0;
};

using Domain = std::variant<Rectangle, Disk, ConvexPolygon>;

void validate_domain(const Domain& d);
double domain_area(const Domain& d);
double domain_perimeter(const Domain& d);
double domain_inradius(const Domain& d);
// Interior angles for polygonal domains; empty for the disk.
std::vector<double> domain_angles(const Domain& d);
std::string domain_json(const Domain& d);
Domain domain_from_json(const std::string& text);

struct Spectrum {
    std::vector<double> eigenvalues;  // nondecreasing, multiplicities expanded
    std::vector<int> block_ids;       // equal ids mark one degenerate block
    BoundaryCondition bc = BoundaryCondition::Dirichlet;
    double complete_below = 0.0;
    Domain domain = Rectangle{};
    bool exact = true;
};

inline constexpr std::size_t kDefaultSpectrumCapacity = 50'000'000;

Spectrum rectangle_spectrum(double a, double b, BoundaryCondition bc, double lambda_max,
                            std::size_t capacity = kDefaultSpectrumCapacity);
Spectrum disk_spectrum(double radius, BoundaryCondition bc, double lambda_max,
                       std::size_t capacity = kDefaultSpectrumCapacity);
Spectrum polygon_dirichlet_spectrum_fd(const ConvexPolygon& poly, double h, int num_eigs);

// Number of eigenvalues strictly below lambda.
long long counting_function(const Spectrum& spec, double lambda);
// Sum over eigenvalues below lambda of (lambda - eigenvalue)^gamma.
double riesz_mean(const Spectrum& spec, double lambda, double gamma);

struct HeatTrace {
    double value = 0.0;
    double tail_bound = 0.0;
    bool flagged = false;  // tail_bound exceeded the requested tolerance
};
// tolerance <= 0 disables flagging.
HeatTrace heat_trace(const Spectrum& spec, double t, double tolerance = 0.0);

// Riesz mean of the spectral function on the diagonal at x, from the product eigenfunctions.
double pointwise_spectral_function(const Rectangle& rect, Point x, double lambda, double gamma, BoundaryCondition bc);

struct SpectralFunctionSample {
    Point point;
    double dist_to_boundary = 0.0;
    std::vector<double> lambdas;
    std::vector<double> values;  // counting-type spectral function (gamma = 0)
};
SpectralFunctionSample spectral_function_sample(const Rectangle& rect, Point x, const std::vector<double>& lambdas,
                                                BoundaryCondition bc);

// Tr(-Δ^N - λ)_-^γ - Tr(-Δ^D - λ)_-^γ.
double dirichlet_neumann_trace_gap(const Spectrum& spec_d, const Spectrum& spec_n, double lambda, double gamma = 1.0);

// Riesz mean on a rectangle by direct lattice enumeration, no stored spectrum.
double rectangle_riesz_mean(double a, double b, BoundaryCondition bc, double lambda, double gamma);

std::string spectrum_header_json(const Spectrum& spec);
void save_spectrum(const Spectrum& spec, const std::string& path);
Spectrum load_spectrum(const std::string& path);

}  // namespace weylab
