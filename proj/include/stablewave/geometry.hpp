#pragma once

#include <cmath>
#include <functional>
#include <string>

namespace stablewave {

/// Point in the plane.
struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double c, const Point2& p) { return {c * p.x, c * p.y}; }
inline bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }

inline double dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }
inline double norm(const Point2& p) { return std::hypot(p.x, p.y); }
inline double distance(const Point2& a, const Point2& b) { return std::hypot(a.x - b.x, a.y - b.y); }

/// Planar region given by a membership test plus its (externally known) area.
/// The area is metadata for scale-law checks; the membership test alone drives sums.
struct Region {
    std::function<bool(const Point2&)> contains;
    double area = 0.0;
    std::string name;
};

inline Region rect_region(double x0, double x1, double y0, double y1) {
    return {[=](const Point2& p) { return p.x >= x0 && p.x < x1 && p.y >= y0 && p.y < y1; },
            (x1 - x0) * (y1 - y0),
            "rect"};
}

inline Region disc_region(Point2 center, double radius) {
    return {[=](const Point2& p) { return distance(p, center) < radius; },
            M_PI * radius * radius,
            "disc"};
}

/// Axis-aligned rectangle used as a quadrature domain.
struct Rect {
    double x0, x1, y0, y1;
};

}  // namespace stablewave
