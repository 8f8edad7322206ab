#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace weylab {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
double norm(Point a);

// Relative tolerance on the sine of the turning angle between consecutive edges.
inline constexpr double kDegeneracyTol = 1e-12;

// Strictly convex polygon with counter-clockwise vertices. Immutable.
class ConvexPolygon {
public:
    explicit ConvexPolygon(std::vector<Point> vertices);

    static ConvexPolygon rectangle(double a, double b);
    static ConvexPolygon regular(int n, double side);

    const std::vector<Point>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    double area() const { return area_; }
    double perimeter() const { return perimeter_; }
    // Interior angle at each vertex, in vertex order.
    const std::vector<double>& angles() const { return angles_; }
    // Inward unit normal n_i and offset c_i of edge i (from vertex i to i+1): n_i . x >= c_i inside.
    const std::vector<Point>& inward_normals() const { return normals_; }
    const std::vector<double>& offsets() const { return offsets_; }

    bool contains(Point p, double tol = 0.0) const;
    // Distance to the boundary for interior points, 0 on or outside the boundary.
    double distance_to_boundary(Point p) const;
    // Euclidean distance to the closed polygon (0 inside).
    double distance_to_set(Point p) const;

    std::string to_json() const;
    static ConvexPolygon from_json(const std::string& text);

private:
    std::vector<Point> vertices_;
    std::vector<double> angles_;
    std::vector<Point> normals_;
    std::vector<double> offsets_;
    double area_ = 0.0;
    double perimeter_ = 0.0;
};

double polygon_area(const std::vector<Point>& pts);
double polygon_perimeter(const std::vector<Point>& pts);

struct InscribedDisk {
    Point center;
    double radius = 0.0;
};

// Chebyshev center by enumerating vertices of the three-variable linear program.
InscribedDisk chebyshev_center(const ConvexPolygon& poly);
double inradius(const ConvexPolygon& poly);

// Erosion {x : d(x) >= s}; may degenerate to fewer than three points.
std::vector<Point> inner_parallel_body(const ConvexPolygon& poly, double s);

double distance_level_volume(const ConvexPolygon& poly, double s);
double inner_parallel_perimeter(const ConvexPolygon& poly, double s);

// One piece of the erosion area A(s) = area0 - per0 (s - s0) + quad (s - s0)^2 on [s0, s1].
struct ErosionPiece {
    double s0 = 0.0;
    double s1 = 0.0;
    double area0 = 0.0;
    double per0 = 0.0;
    double quad = 0.0;
};
std::vector<ErosionPiece> erosion_pieces(const ConvexPolygon& poly);

// sup over l > 0 of |{d <= l}| / l, from the exact erosion pieces.
double theta_omega(const ConvexPolygon& poly);

// Planar Steiner formula.
double minkowski_ball_area(const ConvexPolygon& poly, double r);

struct MinkowskiBounds {
    double excess = 0.0;            // |P + B_r| - |P|
    double lower = 0.0;             // r Per
    double upper_general = 0.0;     // Per (r + r^2 / (2 r_in))
    double c2_small = 0.0;          // proof constant on r <= c1 r_in
    double upper_small = 0.0;       // Per r (1 + c2_small r / r_in), only when r <= c1 r_in
    double c2_large = 0.0;          // proof constant on r >= c1 r_in
    double upper_large = 0.0;       // c2_large Per r (r / r_in), only when r >= c1 r_in
    bool small_regime = true;
    bool all_hold = true;
};
MinkowskiBounds minkowski_bounds(const ConvexPolygon& poly, double r, double c1);

// Exact area of P intersected with the disk of radius r about c.
double disk_intersection_area(const ConvexPolygon& poly, Point c, double r);

// |P ∩ B_r(a)| / r^2 for increasing radii; throws InternalConsistency if it increases beyond 1e-10.
std::vector<double> bishop_gromov_profile(const ConvexPolygon& poly, Point a, const std::vector<double>& radii);

struct Wedge {
    Point apex;
    Point dir_next;  // unit vector toward the next vertex
    Point dir_prev;  // unit vector toward the previous vertex
    double angle = 0.0;
};

struct CornerParams {
    double alpha_min = 0.0;
    double R = 0.0;
    std::vector<Wedge> wedges;
};

CornerParams corner_params(const ConvexPolygon& poly);

// Vertices on an ellipse at sorted random angles, rejected until strictly convex.
ConvexPolygon random_convex_polygon(std::mt19937_64& rng, int min_vertices = 3, int max_vertices = 12);

// Clip by the half-plane {x : n . x >= c}; returns the clipped vertex list (may be degenerate).
std::vector<Point> clip_half_plane(const std::vector<Point>& pts, Point n, double c);

}  // namespace weylab
