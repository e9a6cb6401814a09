#include "logdens/divisor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace logdens {

namespace {

bool point_less(complexd a, complexd b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

bool canonical_less(const Entry& a, const Entry& b) {
    const double ma = std::abs(a.point);
    const double mb = std::abs(b.point);
    if (ma != mb) return ma < mb;
    return point_less(a.point, b.point);
}

}  // namespace

complexd unit_dir(double theta) {
    double c = std::cos(theta);
    double s = std::sin(theta);
    if (std::abs(c) < 1e-15) c = 0.0;
    if (std::abs(s) < 1e-15) s = 0.0;
    if (std::abs(c - 1.0) < 1e-15) c = 1.0;
    if (std::abs(c + 1.0) < 1e-15) c = -1.0;
    if (std::abs(s - 1.0) < 1e-15) s = 1.0;
    if (std::abs(s + 1.0) < 1e-15) s = -1.0;
    return {c, s};
}

double wrap_angle(double phi) {
    double w = std::remainder(phi, 2.0 * kPi);
    if (w <= -kPi) w += 2.0 * kPi;
    return w;
}

bool operator==(const Entry& a, const Entry& b) {
    return a.point == b.point && a.multiplicity == b.multiplicity;
}

PointDistribution::PointDistribution()
    : truncation_radius_(std::numeric_limits<double>::infinity()) {}

PointDistribution PointDistribution::from_points(std::vector<Entry> entries,
                                                 std::optional<double> truncation_radius) {
    for (const Entry& e : entries) {
        if (e.multiplicity < 1)
            throw Error("point multiplicity must be a finite positive integer");
        if (!std::isfinite(e.point.real()) || !std::isfinite(e.point.imag()))
            throw Error("point coordinates must be finite");
    }
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return point_less(a.point, b.point); });
    std::vector<Entry> merged;
    merged.reserve(entries.size());
    for (const Entry& e : entries) {
        if (!merged.empty() && merged.back().point == e.point)
            merged.back().multiplicity += e.multiplicity;
        else
            merged.push_back(e);
    }
    std::sort(merged.begin(), merged.end(), canonical_less);

    PointDistribution dist;
    dist.entries_ = std::move(merged);
    dist.moduli_.reserve(dist.entries_.size());
    dist.cum_.reserve(dist.entries_.size());
    long long running = 0;
    double max_mod = 0.0;
    for (const Entry& e : dist.entries_) {
        const double m = std::abs(e.point);
        max_mod = std::max(max_mod, m);
        running += e.multiplicity;
        dist.moduli_.push_back(m);
        dist.cum_.push_back(running);
    }
    if (truncation_radius) {
        if (!(*truncation_radius > 0.0))
            throw Error("truncation radius must be positive");
        if (max_mod > *truncation_radius * (1.0 + 1e-12))
            throw Error("materialized point outside the truncation radius");
        dist.truncation_radius_ = *truncation_radius;
    } else {
        dist.truncation_radius_ = dist.entries_.empty()
                                      ? std::numeric_limits<double>::infinity()
                                      : max_mod;
    }
    return dist;
}

PointDistribution PointDistribution::from_points(const std::vector<complexd>& points,
                                                 std::optional<double> truncation_radius) {
    std::vector<Entry> entries;
    entries.reserve(points.size());
    for (complexd z : points) entries.push_back({z, 1});
    return from_points(std::move(entries), truncation_radius);
}

long long PointDistribution::total_count() const {
    return cum_.empty() ? 0 : cum_.back();
}

long long PointDistribution::multiplicity_at(complexd z) const {
    const double m = std::abs(z);
    auto lo = std::lower_bound(moduli_.begin(), moduli_.end(), m);
    for (auto it = lo; it != moduli_.end() && *it == m; ++it) {
        const Entry& e = entries_[static_cast<std::size_t>(it - moduli_.begin())];
        if (e.point == z) return e.multiplicity;
    }
    return 0;
}

long long PointDistribution::count_in_closed_disk(double r) const {
    auto it = std::upper_bound(moduli_.begin(), moduli_.end(), r);
    if (it == moduli_.begin()) return 0;
    return cum_[static_cast<std::size_t>(it - moduli_.begin()) - 1];
}

double PointDistribution::max_modulus() const {
    return moduli_.empty() ? 0.0 : moduli_.back();
}

PointDistribution PointDistribution::with_source(std::string descriptor) const {
    PointDistribution copy = *this;
    copy.source_ = std::move(descriptor);
    return copy;
}

bool approx_equal(const PointDistribution& a, const PointDistribution& b, double tol) {
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    if (ea.size() != eb.size()) return false;
    for (std::size_t k = 0; k < ea.size(); ++k) {
        if (ea[k].multiplicity != eb[k].multiplicity) return false;
        const double scale = std::max({1.0, std::abs(ea[k].point), std::abs(eb[k].point)});
        if (std::abs(ea[k].point - eb[k].point) > tol * scale) return false;
    }
    return true;
}

bool region_contains(const Region& region, complexd z) {
    const double m = std::abs(z);
    if (const auto* d = std::get_if<ClosedDisk>(&region)) return m <= d->radius;
    if (const auto* a = std::get_if<Annulus>(&region)) return m > a->inner && m <= a->outer;
    const auto& s = std::get<Sector>(region);
    if (z == complexd{0.0, 0.0}) return false;
    if (s.radial && !(m > s.radial->inner && m <= s.radial->outer)) return false;
    return std::abs(wrap_angle(std::arg(z) - s.direction)) < s.half_angle;
}

double region_outer_radius(const Region& region) {
    if (const auto* d = std::get_if<ClosedDisk>(&region)) return d->radius;
    if (const auto* a = std::get_if<Annulus>(&region)) return a->outer;
    const auto& s = std::get<Sector>(region);
    return s.radial ? s.radial->outer : std::numeric_limits<double>::infinity();
}

CountResult count(const PointDistribution& dist, const Region& region) {
    CountResult result;
    result.lower_bound_only = region_outer_radius(region) > dist.truncation_radius();
    if (const auto* d = std::get_if<ClosedDisk>(&region)) {
        result.value = dist.count_in_closed_disk(d->radius);
        return result;
    }
    if (const auto* a = std::get_if<Annulus>(&region)) {
        if (a->inner < 0.0 || a->outer <= a->inner) throw Error("invalid annulus bounds");
        result.value = dist.count_in_closed_disk(a->outer) - dist.count_in_closed_disk(a->inner);
        return result;
    }
    for (const Entry& e : dist.entries())
        if (region_contains(region, e.point)) result.value += e.multiplicity;
    return result;
}

PointDistribution rotate(const PointDistribution& dist, double theta) {
    const complexd w = unit_dir(theta);
    std::vector<Entry> entries = dist.entries();
    for (Entry& e : entries) e.point *= w;
    return PointDistribution::from_points(std::move(entries), dist.truncation_radius());
}

PointDistribution scale(const PointDistribution& dist, complexd w) {
    if (w == complexd{0.0, 0.0}) throw Error("cannot scale a distribution by zero");
    std::vector<Entry> entries = dist.entries();
    for (Entry& e : entries) e.point *= w;
    return PointDistribution::from_points(std::move(entries),
                                          dist.truncation_radius() * std::abs(w));
}

PointDistribution union_of(const PointDistribution& a, const PointDistribution& b) {
    const double horizon = std::min(a.truncation_radius(), b.truncation_radius());
    std::vector<Entry> entries;
    entries.reserve(a.entries().size() + b.entries().size());
    for (const PointDistribution* d : {&a, &b})
        for (const Entry& e : d->entries())
            if (std::abs(e.point) <= horizon * (1.0 + 1e-12)) entries.push_back(e);
    return PointDistribution::from_points(std::move(entries), horizon);
}

PointDistribution difference(const PointDistribution& a, const PointDistribution& b) {
    std::vector<Entry> result;
    result.reserve(a.entries().size());
    for (const Entry& e : b.entries()) {
        if (a.multiplicity_at(e.point) < e.multiplicity)
            throw Error("difference requires W to be contained in Z pointwise");
    }
    for (const Entry& e : a.entries()) {
        const long long remaining = e.multiplicity - b.multiplicity_at(e.point);
        if (remaining > 0) result.push_back({e.point, remaining});
    }
    return PointDistribution::from_points(std::move(result), a.truncation_radius());
}

PointDistribution sector_part(const PointDistribution& dist, double theta, double half_angle) {
    if (!(half_angle > 0.0) || half_angle > kPi / 2.0 + 1e-15)
        throw Error("sector half-angle must lie in (0, pi/2]");
    std::vector<Entry> kept;
    for (const Entry& e : dist.entries()) {
        if (e.point == complexd{0.0, 0.0}) continue;
        if (std::abs(wrap_angle(std::arg(e.point) - theta)) < half_angle) kept.push_back(e);
    }
    return PointDistribution::from_points(std::move(kept), dist.truncation_radius());
}

UpperDensityEstimate upper_density(const PointDistribution& dist, double p,
                                   std::span<const double> radii, double growth_factor) {
    if (radii.empty()) throw Error("upper_density requires a nonempty radius grid");
    if (!(p > 0.0)) throw Error("upper_density order p must be positive");
    UpperDensityEstimate est;
    double top = 0.0;
    for (double r : radii) {
        if (!(r > 0.0) || r > dist.truncation_radius() * (1.0 + 1e-12))
            throw Error("upper_density grid must lie in (0, truncation_radius]");
        top = std::max(top, r);
    }
    double early_max = 0.0, late_max = 0.0;
    bool has_early = false;
    const double decade_cut = top / 10.0;
    for (double r : radii) {
        const double q =
            static_cast<double>(dist.count_in_closed_disk(r)) / std::pow(r, p);
        if (q > est.value) {
            est.value = q;
            est.argmax_radius = r;
        }
        if (r > decade_cut) {
            late_max = std::max(late_max, q);
        } else {
            early_max = std::max(early_max, q);
            has_early = true;
        }
    }
    est.divergent = has_early && late_max > early_max * growth_factor && late_max > 0.0;
    return est;
}

}  // namespace logdens
