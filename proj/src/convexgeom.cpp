#include "logdens/convexgeom.hpp"

#include <algorithm>
#include <cmath>

namespace logdens {

namespace {

constexpr double kAngleTol = 1e-9;

double cross(complexd a, complexd b) {
    return a.real() * b.imag() - a.imag() * b.real();
}

void validate_polygon(const Polygon& p) {
    const auto& v = p.vertices;
    if (v.empty()) throw Error("polygon needs at least one vertex");
    for (complexd z : v)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw Error("polygon vertices must be finite");
    if (v.size() == 1) return;
    if (v.size() == 2) {
        if (v[0] == v[1]) throw Error("degenerate segment endpoints coincide");
        return;
    }
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const complexd a = v[(i + 1) % n] - v[i];
        const complexd b = v[(i + 2) % n] - v[(i + 1) % n];
        if (!(cross(a, b) > 0.0))
            throw Error("polygon vertices must be in strictly convex counterclockwise position");
    }
}

}  // namespace

ConvexBody::ConvexBody(Polygon p) : shape_(EmptyBody{}) {
    validate_polygon(p);
    shape_ = std::move(p);
}

ConvexBody::ConvexBody(Disk d) : shape_(EmptyBody{}) {
    if (!(d.radius > 0.0)) throw Error("disk radius must be positive");
    shape_ = d;
}

ConvexBody::ConvexBody(Strip s) : shape_(EmptyBody{}) {
    if (!(s.width >= 0.0)) throw Error("strip width must be nonnegative");
    shape_ = s;
}

ConvexBody ConvexBody::hull_of(std::span<const complexd> points) {
    if (points.empty()) return ConvexBody();
    std::vector<complexd> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), [](complexd a, complexd b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() == 1) return ConvexBody(Polygon{{pts[0]}});
    // monotone chain, strict turns (collinear points dropped)
    std::vector<complexd> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = pts.size() - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    if (hull.size() == 2 || hull.size() == 1) return ConvexBody(Polygon{std::move(hull)});
    return ConvexBody(Polygon{std::move(hull)});
}

double support(const ConvexBody& body, double theta) {
    if (body.is_empty()) return -kInf;
    const complexd u = unit_dir(theta);
    if (const auto* p = std::get_if<Polygon>(&body.shape())) {
        double best = -kInf;
        for (complexd v : p->vertices)
            best = std::max(best, v.real() * u.real() + v.imag() * u.imag());
        return best;
    }
    if (const auto* d = std::get_if<Disk>(&body.shape()))
        return d->center.real() * u.real() + d->center.imag() * u.imag() + d->radius;
    const auto& s = std::get<Strip>(body.shape());
    const double psi = wrap_angle(theta - s.axis);
    if (std::abs(psi - kPi / 2.0) <= kAngleTol) return s.width / 2.0 + s.offset;
    if (std::abs(psi + kPi / 2.0) <= kAngleTol) return s.width / 2.0 - s.offset;
    return kInf;
}

double support_homogeneous(const ConvexBody& body, complexd z) {
    if (z == complexd{0.0, 0.0}) return 0.0;  // 0 * x = 0 convention
    return std::abs(z) * support(body, std::arg(z));
}

double width(const ConvexBody& body, double theta) {
    const double a = support(body, theta);
    const double b = support(body, theta + kPi);
    if (a == -kInf || b == -kInf) return -kInf;
    return a + b;
}

double breadth(const ConvexBody& body) {
    if (body.is_empty()) return -kInf;
    if (const auto* d = std::get_if<Disk>(&body.shape())) return 2.0 * d->radius;
    if (const auto* s = std::get_if<Strip>(&body.shape())) return s->width;
    const auto& v = std::get<Polygon>(body.shape()).vertices;
    if (v.size() <= 2) return 0.0;
    const std::size_t n = v.size();
    double best = kInf;
    for (std::size_t i = 0; i < n; ++i) {
        const complexd edge = v[(i + 1) % n] - v[i];
        const complexd dir = edge / std::abs(edge);
        double farthest = 0.0;
        for (complexd w : v) farthest = std::max(farthest, cross(dir, w - v[i]));
        best = std::min(best, farthest);
    }
    return best;
}

double diameter(const ConvexBody& body) {
    if (body.is_empty()) return -kInf;
    if (const auto* d = std::get_if<Disk>(&body.shape())) return 2.0 * d->radius;
    if (std::holds_alternative<Strip>(body.shape())) return kInf;
    const auto& v = std::get<Polygon>(body.shape()).vertices;
    double best = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            best = std::max(best, std::abs(v[i] - v[j]));
    return best;
}

ConvexBody rotate(const ConvexBody& body, double phi) {
    if (body.is_empty()) return body;
    const complexd u = unit_dir(phi);
    if (const auto* p = std::get_if<Polygon>(&body.shape())) {
        Polygon q = *p;
        for (complexd& z : q.vertices) z *= u;
        return ConvexBody(std::move(q));
    }
    if (const auto* d = std::get_if<Disk>(&body.shape()))
        return ConvexBody(Disk{d->center * u, d->radius});
    const auto& s = std::get<Strip>(body.shape());
    return ConvexBody(Strip{s.axis + phi, s.width, s.offset});
}

ConvexBody translate(const ConvexBody& body, complexd t) {
    if (body.is_empty()) return body;
    if (const auto* p = std::get_if<Polygon>(&body.shape())) {
        Polygon q = *p;
        for (complexd& z : q.vertices) z += t;
        return ConvexBody(std::move(q));
    }
    if (const auto* d = std::get_if<Disk>(&body.shape()))
        return ConvexBody(Disk{d->center + t, d->radius});
    const auto& s = std::get<Strip>(body.shape());
    // shift of the center line along the orthogonal direction axis + pi/2
    const complexd u = unit_dir(s.axis);
    const double shift = t.imag() * u.real() - t.real() * u.imag();
    return ConvexBody(Strip{s.axis, s.width, s.offset + shift});
}

}  // namespace logdens
