#include "flexisim/geometry.hpp"

#include <algorithm>

namespace flexisim {

namespace {

constexpr double kEps = 1e-12;

int orientation(Vec2 a, Vec2 b, Vec2 c) {
    double v = cross(b - a, c - a);
    if (v > kEps) return 1;
    if (v < -kEps) return -1;
    return 0;
}

bool on_segment(Vec2 a, Vec2 b, Vec2 p) {
    if (orientation(a, b, p) != 0) return false;
    return p.x >= std::min(a.x, b.x) - kEps && p.x <= std::max(a.x, b.x) + kEps &&
           p.y >= std::min(a.y, b.y) - kEps && p.y <= std::max(a.y, b.y) + kEps;
}

} // namespace

bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    int o1 = orientation(a, b, c);
    int o2 = orientation(a, b, d);
    int o3 = orientation(c, d, a);
    int o4 = orientation(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(a, b, c)) return true;
    if (o2 == 0 && on_segment(a, b, d)) return true;
    if (o3 == 0 && on_segment(c, d, a)) return true;
    if (o4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

double Polygon::signed_area() const {
    double acc = 0.0;
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        acc += cross(vertices[i], vertices[(i + 1) % n]);
    }
    return 0.5 * acc;
}

bool Polygon::contains(Vec2 p) const {
    if (empty()) return false;
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (on_segment(vertices[i], vertices[(i + 1) % n], p)) return true;
    }
    // Ray casting towards +x.
    bool inside = false;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Vec2& vi = vertices[i];
        const Vec2& vj = vertices[j];
        if ((vi.y > p.y) != (vj.y > p.y)) {
            double x_cross = vj.x + (p.y - vj.y) / (vi.y - vj.y) * (vi.x - vj.x);
            if (p.x < x_cross) inside = !inside;
        }
    }
    return inside;
}

bool Polygon::is_simple() const {
    const std::size_t n = vertices.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 a = vertices[i];
        Vec2 b = vertices[(i + 1) % n];
        for (std::size_t j = i + 1; j < n; ++j) {
            // Skip adjacent edges (they share an endpoint by construction).
            if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
            Vec2 c = vertices[j];
            Vec2 d = vertices[(j + 1) % n];
            if (segments_intersect(a, b, c, d)) return false;
        }
    }
    return true;
}

double WaypointPath::total_length() const {
    double len = 0.0;
    for (std::size_t i = 1; i < waypoints.size(); ++i) {
        len += distance(waypoints[i - 1], waypoints[i]);
    }
    return len;
}

double WaypointPath::duration_s() const {
    if (speed_mps <= 0.0) return 0.0;
    return total_length() / speed_mps;
}

Vec2 WaypointPath::position_at(double t_s) const {
    if (waypoints.empty()) return {};
    if (waypoints.size() == 1 || speed_mps <= 0.0 || t_s <= 0.0) return waypoints.front();
    double remaining = t_s * speed_mps;
    for (std::size_t i = 1; i < waypoints.size(); ++i) {
        double seg = distance(waypoints[i - 1], waypoints[i]);
        if (remaining <= seg) {
            if (seg <= 0.0) continue;
            double f = remaining / seg;
            return waypoints[i - 1] + f * (waypoints[i] - waypoints[i - 1]);
        }
        remaining -= seg;
    }
    return waypoints.back();
}

} // namespace flexisim
