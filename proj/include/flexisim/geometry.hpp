#pragma once

#include <cmath>
#include <vector>

namespace flexisim {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
    friend Vec2 operator*(Vec2 v, double s) { return {s * v.x, s * v.y}; }
    friend bool operator==(const Vec2&, const Vec2&) = default;

    double norm() const { return std::hypot(x, y); }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }

// Closed polygon given by its vertices in order (no repeated last vertex).
struct Polygon {
    std::vector<Vec2> vertices;

    friend bool operator==(const Polygon&, const Polygon&) = default;

    bool empty() const { return vertices.size() < 3; }
    double signed_area() const;

    // Points on the boundary count as inside.
    bool contains(Vec2 p) const;

    // True when no two non-adjacent edges intersect.
    bool is_simple() const;
};

// Proper or touching intersection of segments [a,b] and [c,d].
bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d);

// Piecewise-linear waypoint track traversed at constant speed, starting at
// waypoints.front() at t=0 and stopping at the final waypoint.
struct WaypointPath {
    std::vector<Vec2> waypoints;
    double speed_mps = 0.0;

    friend bool operator==(const WaypointPath&, const WaypointPath&) = default;

    double total_length() const;
    double duration_s() const;
    Vec2 position_at(double t_s) const;
};

} // namespace flexisim
