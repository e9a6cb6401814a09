#pragma once

#include <limits>
#include <span>
#include <variant>
#include <vector>

#include "logdens/divisor.hpp"

namespace logdens {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Counterclockwise, strictly convex vertex list. One or two vertices are
/// accepted as the degenerate point/segment cases.
struct Polygon {
    std::vector<complexd> vertices;
};

struct Disk {
    complexd center;
    double radius;
};

/// Closed strip of width `width` whose axis points in direction `axis`; the
/// center line is offset by `offset` along the orthogonal direction
/// axis + pi/2. Width in the direction axis ± pi/2 equals `width`.
struct Strip {
    double axis;
    double width;
    double offset = 0.0;
};

struct EmptyBody {};

class ConvexBody {
public:
    using Shape = std::variant<EmptyBody, Polygon, Disk, Strip>;

    ConvexBody() : shape_(EmptyBody{}) {}
    explicit ConvexBody(Polygon p);  // validates convex ccw position
    explicit ConvexBody(Disk d);     // validates radius > 0
    explicit ConvexBody(Strip s);    // validates width >= 0

    /// Convex hull of a point cloud; collinear clouds collapse to a segment.
    static ConvexBody hull_of(std::span<const complexd> points);

    bool is_empty() const { return std::holds_alternative<EmptyBody>(shape_); }
    const Shape& shape() const { return shape_; }

private:
    Shape shape_;
};

/// sup_{s in S} Re(s e^{-i theta}); -inf for the empty body, +inf for a strip
/// off its orthogonal directions.
double support(const ConvexBody& body, double theta);

/// Positively homogeneous support: |z| * support(arg z), with 0 * x = 0.
double support_homogeneous(const ConvexBody& body, complexd z);

/// support(theta) + support(theta + pi); pi-periodic; -inf iff empty.
double width(const ConvexBody& body, double theta);

/// inf over theta of width. Exact for polygons (minimum over edge normals).
double breadth(const ConvexBody& body);

/// sup over theta of width = max pairwise distance. +inf for strips.
double diameter(const ConvexBody& body);

ConvexBody rotate(const ConvexBody& body, double phi);
ConvexBody translate(const ConvexBody& body, complexd t);

}  // namespace logdens
