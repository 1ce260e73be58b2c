/*
 * Copyright 2026 the bda authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "bda/common.hpp"

namespace bda {

/// A point in projected meters.
struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

using Ring = std::vector<Point2>;

/// Polygon as a list of rings: rings[0] is the outer boundary, the rest are
/// holes. Rings may be stored open or closed (first == last); both work.
struct Polygon {
    std::vector<Ring> rings;
};

struct Box {
    double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;

    bool contains(const Point2& p) const {
        return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1;
    }
    Box expanded(double m) const { return {x0 - m, y0 - m, x1 + m, y1 + m}; }
};

inline double signed_area(const Ring& ring) {
    double a = 0.0;
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& p = ring[i];
        const Point2& q = ring[(i + 1) % n];
        a += p.x * q.y - q.x * p.y;
    }
    return 0.5 * a;
}

/// Area-weighted centroid of a polygon. Holes (rings beyond the first)
/// subtract from the outer ring regardless of their winding order.
inline Point2 centroid(const Polygon& poly) {
    require(!poly.rings.empty() && poly.rings[0].size() >= 3, "degenerate polygon");
    double total_area = 0.0, cx = 0.0, cy = 0.0;
    for (std::size_t r = 0; r < poly.rings.size(); ++r) {
        const Ring& ring = poly.rings[r];
        if (ring.size() < 3) continue;
        double a = 0.0, sx = 0.0, sy = 0.0;
        const std::size_t n = ring.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point2& p = ring[i];
            const Point2& q = ring[(i + 1) % n];
            const double cross = p.x * q.y - q.x * p.y;
            a += cross;
            sx += (p.x + q.x) * cross;
            sy += (p.y + q.y) * cross;
        }
        a *= 0.5;
        if (std::abs(a) < 1e-300) continue;
        const double sign = (r == 0) ? 1.0 : -1.0;
        const double w = sign * std::abs(a);
        total_area += w;
        // ring centroid = (sx, sy) / (6a); weight by signed ring area
        cx += w * (sx / (6.0 * a));
        cy += w * (sy / (6.0 * a));
    }
    require(std::abs(total_area) > 1e-300, "zero-area polygon");
    return {cx / total_area, cy / total_area};
}

inline Box bounding_box(const Polygon& poly) {
    Box b{std::numeric_limits<double>::max(), std::numeric_limits<double>::max(),
          std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()};
    for (const Ring& ring : poly.rings) {
        for (const Point2& p : ring) {
            b.x0 = std::min(b.x0, p.x);
            b.y0 = std::min(b.y0, p.y);
            b.x1 = std::max(b.x1, p.x);
            b.y1 = std::max(b.y1, p.y);
        }
    }
    return b;
}

/// Even-odd rule over all rings, so holes are handled naturally.
inline bool point_in_polygon(const Polygon& poly, const Point2& p) {
    bool inside = false;
    for (const Ring& ring : poly.rings) {
        const std::size_t n = ring.size();
        for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
            const Point2& a = ring[i];
            const Point2& b = ring[j];
            if ((a.y > p.y) != (b.y > p.y)) {
                const double x_cross = (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x;
                if (p.x < x_cross) inside = !inside;
            }
        }
    }
    return inside;
}

inline double distance_to_segment(const Point2& p, const Point2& a, const Point2& b) {
    const double vx = b.x - a.x, vy = b.y - a.y;
    const double len2 = vx * vx + vy * vy;
    double t = 0.0;
    if (len2 > 0.0) {
        t = ((p.x - a.x) * vx + (p.y - a.y) * vy) / len2;
        t = std::clamp(t, 0.0, 1.0);
    }
    const double dx = p.x - (a.x + t * vx);
    const double dy = p.y - (a.y + t * vy);
    return std::sqrt(dx * dx + dy * dy);
}

/// Distance from a point to a polygon's boundary-or-interior: 0 inside,
/// otherwise the minimum distance to any ring segment.
inline double distance_to_polygon(const Polygon& poly, const Point2& p) {
    if (point_in_polygon(poly, p)) return 0.0;
    double best = std::numeric_limits<double>::max();
    for (const Ring& ring : poly.rings) {
        const std::size_t n = ring.size();
        for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
            best = std::min(best, distance_to_segment(p, ring[i], ring[j]));
        }
    }
    return best;
}

inline double distance(const Point2& a, const Point2& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

} // namespace bda
