#include "weylab/convex_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "weylab/errors.hpp"
#include "weylab/numerics.hpp"

namespace weylab {

double norm(Point a) { return std::hypot(a.x, a.y); }

double polygon_area(const std::vector<Point>& pts) {
    if (pts.size() < 3) return 0.0;
    double s = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) s += cross(pts[i], pts[(i + 1) % pts.size()]);
    return 0.5 * s;
}

double polygon_perimeter(const std::vector<Point>& pts) {
    if (pts.size() < 2) return 0.0;
    if (pts.size() == 2) return 2.0 * norm(pts[1] - pts[0]);
    double s = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) s += norm(pts[(i + 1) % pts.size()] - pts[i]);
    return s;
}

ConvexPolygon::ConvexPolygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
    const std::size_t n = vertices_.size();
    require(n >= 3, "polygon needs at least three vertices");
    for (const Point& p : vertices_) require(std::isfinite(p.x) && std::isfinite(p.y), "polygon vertex not finite");
    angles_.resize(n);
    normals_.resize(n);
    offsets_.resize(n);
    double angle_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point prev = vertices_[(i + n - 1) % n], cur = vertices_[i], next = vertices_[(i + 1) % n];
        const Point e0 = cur - prev, e1 = next - cur;
        const double l0 = norm(e0), l1 = norm(e1);
        require(l0 > 0.0 && l1 > 0.0, "polygon has repeated vertices");
        const double turn = cross(e0, e1) / (l0 * l1);
        require(turn > kDegeneracyTol, "polygon is not strictly convex with counter-clockwise orientation");
        // Interior angle = pi - turning angle.
        angles_[i] = kPi - std::atan2(cross(e0, e1), dot(e0, e1));
        angle_sum += angles_[i];
        normals_[i] = {-e1.y / l1, e1.x / l1};
        offsets_[i] = dot(normals_[i], cur);
        perimeter_ += l1;
    }
    area_ = polygon_area(vertices_);
    require(area_ > 0.0, "polygon area must be positive");
    // Turning angles must add to one full turn, otherwise the vertex list winds more than once.
    if (std::abs(angle_sum - (n - 2.0) * kPi) > 1e-10 * n)
        fail(ErrorKind::InvalidArgument, "polygon interior angles do not sum to (n-2) pi; vertex list is not simple");
}

ConvexPolygon ConvexPolygon::rectangle(double a, double b) {
    require(a > 0.0 && b > 0.0, "rectangle sides must be positive");
    return ConvexPolygon({{0.0, 0.0}, {a, 0.0}, {a, b}, {0.0, b}});
}

ConvexPolygon ConvexPolygon::regular(int n, double side) {
    require(n >= 3 && side > 0.0, "regular polygon needs n >= 3 and positive side");
    const double circ = side / (2.0 * std::sin(kPi / n));
    std::vector<Point> v(n);
    for (int i = 0; i < n; ++i) {
        const double t = 2.0 * kPi * i / n;
        v[i] = {circ * std::cos(t), circ * std::sin(t)};
    }
    return ConvexPolygon(std::move(v));
}

bool ConvexPolygon::contains(Point p, double tol) const {
    for (std::size_t i = 0; i < size(); ++i)
        if (dot(normals_[i], p) - offsets_[i] < -tol) return false;
    return true;
}

double ConvexPolygon::distance_to_boundary(Point p) const {
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < size(); ++i) d = std::min(d, dot(normals_[i], p) - offsets_[i]);
    return std::max(0.0, d);
}

namespace {

double point_segment_distance(Point p, Point a, Point b) {
    const Point ab = b - a;
    double t = dot(p - a, ab) / dot(ab, ab);
    t = std::clamp(t, 0.0, 1.0);
    return norm(p - (a + t * ab));
}

}  // namespace

double ConvexPolygon::distance_to_set(Point p) const {
    if (contains(p)) return 0.0;
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < size(); ++i)
        d = std::min(d, point_segment_distance(p, vertices_[i], vertices_[(i + 1) % size()]));
    return d;
}

std::string ConvexPolygon::to_json() const {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (const Point& p : vertices_) j["vertices"].push_back({p.x, p.y});
    return j.dump();
}

ConvexPolygon ConvexPolygon::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        fail(ErrorKind::Io, std::string("polygon JSON parse error: ") + e.what());
    }
    require(j.is_object() && j.contains("vertices") && j["vertices"].is_array(), "polygon JSON needs a 'vertices' array");
    std::vector<Point> v;
    for (const auto& p : j["vertices"]) {
        require(p.is_array() && p.size() == 2 && p[0].is_number() && p[1].is_number(),
                "polygon vertex must be [x, y]");
        v.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    return ConvexPolygon(std::move(v));
}

InscribedDisk chebyshev_center(const ConvexPolygon& poly) {
    const auto& n = poly.inward_normals();
    const auto& c = poly.offsets();
    const std::size_t m = poly.size();
    const double scale = std::sqrt(poly.area());
    InscribedDisk best{{0.0, 0.0}, -1.0};
    // Each constraint reads n_i . x - r >= c_i; the optimum sits where three of them are tight.
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k) {
                const std::size_t idx[3] = {i, j, k};
                double A[3][3], b[3];
                for (int r = 0; r < 3; ++r) {
                    A[r][0] = n[idx[r]].x;
                    A[r][1] = n[idx[r]].y;
                    A[r][2] = -1.0;
                    b[r] = c[idx[r]];
                }
                const double det = A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) -
                                   A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
                                   A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);
                if (std::abs(det) < 1e-14) continue;
                double sol[3];
                for (int col = 0; col < 3; ++col) {
                    double M[3][3];
                    for (int r = 0; r < 3; ++r)
                        for (int q = 0; q < 3; ++q) M[r][q] = (q == col) ? b[r] : A[r][q];
                    sol[col] = (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                                M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                                M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0])) /
                               det;
                }
                const Point x{sol[0], sol[1]};
                const double r = sol[2];
                if (r <= best.radius) continue;
                bool feasible = true;
                for (std::size_t q = 0; q < m && feasible; ++q)
                    if (dot(n[q], x) - c[q] < r - 1e-12 * scale) feasible = false;
                if (feasible) best = {x, r};
            }
    if (best.radius <= 0.0) fail(ErrorKind::InternalConsistency, "chebyshev_center: no feasible vertex found");
    // Snap the radius to the exact minimum distance at the chosen center.
    best.radius = poly.distance_to_boundary(best.center);
    return best;
}

double inradius(const ConvexPolygon& poly) { return chebyshev_center(poly).radius; }

std::vector<Point> clip_half_plane(const std::vector<Point>& pts, Point n, double c) {
    std::vector<Point> out;
    const std::size_t m = pts.size();
    if (m == 0) return out;
    for (std::size_t i = 0; i < m; ++i) {
        const Point p = pts[i], q = pts[(i + 1) % m];
        const double fp = dot(n, p) - c, fq = dot(n, q) - c;
        if (fp >= 0.0) out.push_back(p);
        if ((fp >= 0.0) != (fq >= 0.0)) {
            const double t = fp / (fp - fq);
            out.push_back(p + t * (q - p));
        }
    }
    return out;
}

std::vector<Point> inner_parallel_body(const ConvexPolygon& poly, double s) {
    require(s >= 0.0, "inner_parallel_body: s must be nonnegative");
    std::vector<Point> pts = poly.vertices();
    for (std::size_t i = 0; i < poly.size(); ++i) {
        pts = clip_half_plane(pts, poly.inward_normals()[i], poly.offsets()[i] + s);
        if (pts.empty()) break;
    }
    return pts;
}

double distance_level_volume(const ConvexPolygon& poly, double s) {
    const double r = inradius(poly);
    if (!(s >= 0.0 && s <= r * (1.0 + 1e-12)))
        fail(ErrorKind::InvalidArgument, "distance_level_volume: s outside [0, r_in]");
    return poly.area() - std::max(0.0, polygon_area(inner_parallel_body(poly, s)));
}

double inner_parallel_perimeter(const ConvexPolygon& poly, double s) {
    const double r = inradius(poly);
    if (!(s >= 0.0 && s < r)) fail(ErrorKind::InvalidArgument, "inner_parallel_perimeter: s outside [0, r_in)");
    return polygon_perimeter(inner_parallel_body(poly, s));
}

namespace {

// Drops near-duplicate consecutive points produced by clipping.
std::vector<Point> dedupe(const std::vector<Point>& pts, double tol) {
    std::vector<Point> out;
    for (const Point& p : pts)
        if (out.empty() || norm(p - out.back()) > tol) out.push_back(p);
    while (out.size() > 1 && norm(out.front() - out.back()) <= tol) out.pop_back();
    return out;
}

}  // namespace

std::vector<ErosionPiece> erosion_pieces(const ConvexPolygon& poly) {
    const double rin = inradius(poly);
    const double scale = std::sqrt(poly.area());
    std::vector<ErosionPiece> pieces;
    double s = 0.0;
    for (int guard = 0; guard < 10 * static_cast<int>(poly.size()) + 10; ++guard) {
        const std::vector<Point> body = dedupe(inner_parallel_body(poly, s), 1e-13 * scale);
        const double area = polygon_area(body);
        if (body.size() < 3 || area <= 1e-24 * poly.area() || s >= rin) break;
        // Edges of an eroded convex polygon move inward at unit speed; edge j shrinks at rate
        // cot(b_j / 2) + cot(b_{j+1} / 2) with b the interior angles at its endpoints.
        const std::size_t m = body.size();
        std::vector<double> half_cot(m);
        double quad = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const Point e0 = body[j] - body[(j + m - 1) % m], e1 = body[(j + 1) % m] - body[j];
            const double interior = kPi - std::atan2(cross(e0, e1), dot(e0, e1));
            half_cot[j] = 1.0 / std::tan(0.5 * interior);
            quad += half_cot[j];
        }
        double step = rin - s;
        for (std::size_t j = 0; j < m; ++j) {
            const double len = norm(body[(j + 1) % m] - body[j]);
            const double rate = half_cot[j] + half_cot[(j + 1) % m];
            if (rate > 0.0) step = std::min(step, len / rate);
        }
        step = std::max(step, 1e-15 * scale);
        ErosionPiece piece{s, std::min(rin, s + step), area, polygon_perimeter(body), quad};
        pieces.push_back(piece);
        s = piece.s1;
    }
    if (pieces.empty()) fail(ErrorKind::InternalConsistency, "erosion_pieces: polygon collapsed immediately");
    pieces.back().s1 = rin;
    return pieces;
}

double theta_omega(const ConvexPolygon& poly) {
    const double total = poly.area();
    double best = 0.0;
    // On a piece, |{d <= l}| = total - A(l) = a0 + a1 l + a2 l^2, so the ratio is a0/l + a1 + a2 l.
    for (const ErosionPiece& p : erosion_pieces(poly)) {
        const double a2 = -p.quad;
        const double a1 = p.per0 + 2.0 * p.quad * p.s0;
        const double a0 = total - p.area0 - p.per0 * p.s0 - p.quad * p.s0 * p.s0;
        auto ratio = [&](double l) { return a0 / l + a1 + a2 * l; };
        if (p.s0 == 0.0)
            best = std::max(best, a1);  // limit l -> 0+
        else
            best = std::max(best, ratio(p.s0));
        best = std::max(best, ratio(p.s1));
        if (a2 != 0.0 && a0 / a2 > 0.0) {
            const double l = std::sqrt(a0 / a2);
            if (l > p.s0 && l < p.s1) best = std::max(best, ratio(l));
        }
    }
    // Beyond the inradius the ratio is total / l, decreasing.
    return best;
}

double minkowski_ball_area(const ConvexPolygon& poly, double r) {
    require(r >= 0.0, "minkowski_ball_area: r must be nonnegative");
    return poly.area() + r * poly.perimeter() + kPi * r * r;
}

MinkowskiBounds minkowski_bounds(const ConvexPolygon& poly, double r, double c1) {
    require(r >= 0.0, "minkowski_bounds: r must be nonnegative");
    require(c1 > 0.0, "minkowski_bounds: c1 must be positive");
    const double rin = inradius(poly);
    const double per = poly.perimeter();
    const double tol = 1e-12 * (poly.area() + r * per + r * r);
    MinkowskiBounds b;
    b.excess = minkowski_ball_area(poly, r) - poly.area();
    b.lower = r * per;
    b.upper_general = per * (r + r * r / (2.0 * rin));
    b.c2_small = ((1.0 + c1) * (1.0 + c1) - 1.0 - 2.0 * c1) / (2.0 * c1 * c1);
    b.c2_large = ((1.0 + c1) * (1.0 + c1) + 1.0) / (2.0 * c1 * c1);
    b.small_regime = r <= c1 * rin;
    b.all_hold = b.excess >= b.lower - tol && b.excess <= b.upper_general + tol;
    if (b.small_regime) {
        b.upper_small = per * r * (1.0 + b.c2_small * r / rin);
        b.all_hold = b.all_hold && b.excess <= b.upper_small + tol;
    }
    if (r >= c1 * rin) {
        b.upper_large = b.c2_large * per * r * (r / rin);
        b.all_hold = b.all_hold && b.excess + poly.area() <= b.upper_large + tol;
    }
    return b;
}

namespace {

// Signed area of the disk of radius r about the origin intersected with triangle (0, a, b).
double disk_triangle_area(Point a, Point b, double r) {
    const double r2 = r * r;
    auto sector = [r2](Point u, Point v) { return 0.5 * r2 * std::atan2(cross(u, v), dot(u, v)); };
    const double da = dot(a, a), db = dot(b, b);
    const bool a_in = da <= r2, b_in = db <= r2;
    if (a_in && b_in) return 0.5 * cross(a, b);
    const Point d = b - a;
    const double qa = dot(d, d);
    if (qa == 0.0) return 0.0;
    const double qb = dot(a, d), qc = da - r2;
    const double disc = qb * qb - qa * qc;
    if (disc <= 0.0) return sector(a, b);
    const double sq = std::sqrt(disc);
    const double t1 = (-qb - sq) / qa, t2 = (-qb + sq) / qa;
    if (a_in) {
        const Point p = a + std::clamp(t2, 0.0, 1.0) * d;
        return 0.5 * cross(a, p) + sector(p, b);
    }
    if (b_in) {
        const Point p = a + std::clamp(t1, 0.0, 1.0) * d;
        return sector(a, p) + 0.5 * cross(p, b);
    }
    if (t1 > 0.0 && t2 < 1.0) {
        const Point p1 = a + t1 * d, p2 = a + t2 * d;
        return sector(a, p1) + 0.5 * cross(p1, p2) + sector(p2, b);
    }
    return sector(a, b);
}

}  // namespace

double disk_intersection_area(const ConvexPolygon& poly, Point c, double r) {
    require(r >= 0.0, "disk_intersection_area: r must be nonnegative");
    if (r == 0.0) return 0.0;
    const auto& v = poly.vertices();
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) s += disk_triangle_area(v[i] - c, v[(i + 1) % v.size()] - c, r);
    return s;
}

std::vector<double> bishop_gromov_profile(const ConvexPolygon& poly, Point a, const std::vector<double>& radii) {
    const double scale = std::sqrt(poly.area());
    require(poly.contains(a, 1e-12 * scale), "bishop_gromov_profile: point outside the closed polygon");
    std::vector<double> out;
    out.reserve(radii.size());
    for (std::size_t i = 0; i < radii.size(); ++i) {
        require(radii[i] > 0.0, "bishop_gromov_profile: radii must be positive");
        if (i > 0) require(radii[i] > radii[i - 1], "bishop_gromov_profile: radii must be increasing");
        const double v = disk_intersection_area(poly, a, radii[i]) / (radii[i] * radii[i]);
        if (!out.empty() && v > out.back() + 1e-10) {
            std::ostringstream os;
            os << "bishop_gromov_profile: ratio increased from " << out.back() << " to " << v << " at r=" << radii[i];
            fail(ErrorKind::InternalConsistency, os.str());
        }
        out.push_back(v);
    }
    return out;
}

namespace {

struct Sector {
    Point apex;
    Point d1;  // counter-clockwise start direction
    Point d2;  // counter-clockwise end direction
    double r;
};

bool in_angular_range(const Sector& s, Point v) { return cross(s.d1, v) >= 0.0 && cross(v, s.d2) >= 0.0; }

bool point_in_sector(const Sector& s, Point p) {
    const Point v = p - s.apex;
    return dot(v, v) <= s.r * s.r && in_angular_range(s, v);
}

bool segments_intersect(Point p1, Point p2, Point q1, Point q2) {
    const Point r = p2 - p1, s = q2 - q1;
    const double den = cross(r, s);
    const Point qp = q1 - p1;
    if (den == 0.0) {
        if (cross(qp, r) != 0.0) return false;
        const double rr = dot(r, r);
        const double t0 = dot(qp, r) / rr, t1 = t0 + dot(s, r) / rr;
        return std::max(t0, t1) >= 0.0 && std::min(t0, t1) <= 1.0;
    }
    const double t = cross(qp, s) / den, u = cross(qp, r) / den;
    return t >= 0.0 && t <= 1.0 && u >= 0.0 && u <= 1.0;
}

bool segment_hits_arc(Point a, Point b, const Sector& s) {
    const Point d = b - a, f = a - s.apex;
    const double qa = dot(d, d), qb = dot(f, d), qc = dot(f, f) - s.r * s.r;
    const double disc = qb * qb - qa * qc;
    if (disc < 0.0) return false;
    const double sq = std::sqrt(disc);
    for (double t : {(-qb - sq) / qa, (-qb + sq) / qa})
        if (t >= 0.0 && t <= 1.0 && in_angular_range(s, f + t * d)) return true;
    return false;
}

bool arcs_intersect(const Sector& s1, const Sector& s2) {
    const Point d = s2.apex - s1.apex;
    const double dist = norm(d);
    if (dist > s1.r + s2.r || dist < std::abs(s1.r - s2.r) || dist == 0.0) return false;
    const double a = (s1.r * s1.r - s2.r * s2.r + dist * dist) / (2.0 * dist);
    const double h = std::sqrt(std::max(0.0, s1.r * s1.r - a * a));
    const Point mid = s1.apex + (a / dist) * d;
    const Point off{-d.y * h / dist, d.x * h / dist};
    for (Point p : {mid + off, mid - off})
        if (in_angular_range(s1, p - s1.apex) && in_angular_range(s2, p - s2.apex)) return true;
    return false;
}

bool sectors_intersect(const Sector& s1, const Sector& s2) {
    if (point_in_sector(s2, s1.apex) || point_in_sector(s1, s2.apex)) return true;
    const Point e1[2] = {s1.apex + s1.r * s1.d1, s1.apex + s1.r * s1.d2};
    const Point e2[2] = {s2.apex + s2.r * s2.d1, s2.apex + s2.r * s2.d2};
    for (const Point& p : e1)
        for (const Point& q : e2)
            if (segments_intersect(s1.apex, p, s2.apex, q)) return true;
    for (const Point& p : e1)
        if (segment_hits_arc(s1.apex, p, s2)) return true;
    for (const Point& q : e2)
        if (segment_hits_arc(s2.apex, q, s1)) return true;
    return arcs_intersect(s1, s2);
}

// Minimum of n . x over the sector.
double sector_min_linear(const Sector& s, Point n) {
    double m = std::min({dot(n, s.apex), dot(n, s.apex + s.r * s.d1), dot(n, s.apex + s.r * s.d2)});
    const Point u{-n.x / norm(n), -n.y / norm(n)};
    if (in_angular_range(s, u)) m = std::min(m, dot(n, s.apex + s.r * u));
    return m;
}

bool sectors_admissible(const ConvexPolygon& poly, const std::vector<Wedge>& wedges, double r) {
    std::vector<Sector> sec;
    for (const Wedge& w : wedges) sec.push_back({w.apex, w.dir_next, w.dir_prev, r});
    const std::size_t n = sec.size();
    const double tol = 1e-14 * std::sqrt(poly.area());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t e = 0; e < n; ++e) {
            // The two edges meeting at vertex i bound the sector by construction.
            if (e == i || (e + 1) % n == i) continue;
            if (sector_min_linear(sec[i], poly.inward_normals()[e]) < poly.offsets()[e] - tol) return false;
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (sectors_intersect(sec[i], sec[j])) return false;
    return true;
}

}  // namespace

CornerParams corner_params(const ConvexPolygon& poly) {
    const auto& v = poly.vertices();
    const std::size_t n = v.size();
    CornerParams cp;
    cp.alpha_min = *std::min_element(poly.angles().begin(), poly.angles().end());
    double hi = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const Point to_next = v[(i + 1) % n] - v[i], to_prev = v[(i + n - 1) % n] - v[i];
        cp.wedges.push_back({v[i], (1.0 / norm(to_next)) * to_next, (1.0 / norm(to_prev)) * to_prev, poly.angles()[i]});
        hi = std::min({hi, norm(to_next), norm(to_prev)});
    }
    double lo = 0.0;
    if (sectors_admissible(poly, cp.wedges, hi)) {
        lo = hi;
    } else {
        for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (sectors_admissible(poly, cp.wedges, mid))
                lo = mid;
            else
                hi = mid;
        }
    }
    cp.R = 0.5 * lo;
    if (!(cp.R > 0.0)) fail(ErrorKind::InternalConsistency, "corner_params: no admissible wedge radius");
    return cp;
}

ConvexPolygon random_convex_polygon(std::mt19937_64& rng, int min_vertices, int max_vertices) {
    require(min_vertices >= 3 && max_vertices >= min_vertices, "random_convex_polygon: bad vertex range");
    std::uniform_int_distribution<int> count(min_vertices, max_vertices);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const int n = count(rng);
        const double ax = 0.3 + 1.7 * unit(rng), by = 0.3 + 1.7 * unit(rng);
        const double rot = 2.0 * kPi * unit(rng);
        const Point shift{4.0 * unit(rng) - 2.0, 4.0 * unit(rng) - 2.0};
        std::vector<double> t(n);
        for (double& x : t) x = 2.0 * kPi * unit(rng);
        std::sort(t.begin(), t.end());
        std::vector<Point> pts;
        for (double a : t) {
            const Point p{ax * std::cos(a), by * std::sin(a)};
            pts.push_back(shift + Point{p.x * std::cos(rot) - p.y * std::sin(rot), p.x * std::sin(rot) + p.y * std::cos(rot)});
        }
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            const Point e0 = pts[i] - pts[(i + n - 1) % n], e1 = pts[(i + 1) % n] - pts[i];
            // Keep well-conditioned samples: no tiny edges, no nearly straight corners.
            if (norm(e0) < 1e-3 || cross(e0, e1) < 1e-6 * norm(e0) * norm(e1)) ok = false;
        }
        if (ok) return ConvexPolygon(std::move(pts));
    }
    fail(ErrorKind::InternalConsistency, "random_convex_polygon: rejection sampling failed");
}

}  // namespace weylab
