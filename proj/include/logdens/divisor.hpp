#pragma once

#include <complex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace logdens {

using complexd = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Base error for all library failures.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A precondition of a theorem/criterion is violated (CLI exit code 2).
struct HypothesisError : Error {
    using Error::Error;
};

/// e^{i*theta} with components snapped to exact 0/±1 at multiples of pi/2,
/// so axis-aligned rotations keep real/imaginary parts exactly zero.
complexd unit_dir(double theta);

/// Wraps an angle into (-pi, pi].
double wrap_angle(double phi);

struct Entry {
    complexd point;
    long long multiplicity = 1;
};

bool operator==(const Entry& a, const Entry& b);

/// A multiset of complex points with finite multiplicities, materialized up to
/// a truncation radius. Immutable after construction; all operations below are
/// pure and return new values.
class PointDistribution {
public:
    /// The empty distribution (truncation radius +inf: trivially complete
    /// knowledge of "no points anywhere").
    PointDistribution();

    /// Canonicalizes: merges entries with exactly equal coordinates, rejects
    /// multiplicities < 1 and non-finite coordinates. If no truncation radius
    /// is given, uses max |z| (or +inf when empty).
    static PointDistribution from_points(std::vector<Entry> entries,
                                         std::optional<double> truncation_radius = std::nullopt);
    static PointDistribution from_points(const std::vector<complexd>& points,
                                         std::optional<double> truncation_radius = std::nullopt);

    /// Entries in canonical order: by (|z|, Re z, Im z).
    const std::vector<Entry>& entries() const { return entries_; }

    double truncation_radius() const { return truncation_radius_; }

    bool empty() const { return entries_.empty(); }

    /// Total number of points counted with multiplicity.
    long long total_count() const;

    /// Multiplicity at an exact coordinate (0 if absent).
    long long multiplicity_at(complexd z) const;

    /// Number of points (with multiplicity) in the closed disk |z| <= r.
    long long count_in_closed_disk(double r) const;

    double max_modulus() const;

    /// Generator descriptor for generator-backed distributions, empty for
    /// explicit ones.
    const std::string& source() const { return source_; }
    PointDistribution with_source(std::string descriptor) const;

    friend bool operator==(const PointDistribution& a, const PointDistribution& b) {
        return a.entries_ == b.entries_;
    }

private:
    std::vector<Entry> entries_;
    std::vector<double> moduli_;     // |entries_[k].point|, nondecreasing
    std::vector<long long> cum_;     // cumulative multiplicities
    double truncation_radius_ = 0.0;
    std::string source_;
};

/// Pointwise equality up to a relative coordinate tolerance (for round-trip
/// checks of rotate/scale, which are floating-point maps).
bool approx_equal(const PointDistribution& a, const PointDistribution& b, double tol = 1e-12);

// --- Regions -----------------------------------------------------------

struct ClosedDisk {
    double radius;
};

/// Half-open annulus: inner < |z| <= outer.
struct Annulus {
    double inner;
    double outer;
};

/// Open sector |arg z - direction| < half_angle (mod 2pi), optionally
/// restricted to an annulus. The origin never belongs to a sector.
struct Sector {
    double direction;
    double half_angle;
    std::optional<Annulus> radial;
};

using Region = std::variant<ClosedDisk, Annulus, Sector>;

bool region_contains(const Region& region, complexd z);

/// Outer radius of the region (+inf for radially unbounded sectors).
double region_outer_radius(const Region& region);

struct CountResult {
    long long value = 0;
    /// Set when the region extends past the truncation radius, so the count
    /// is only a lower bound for the underlying (untruncated) distribution.
    bool lower_bound_only = false;
};

CountResult count(const PointDistribution& dist, const Region& region);

// --- Distribution algebra ----------------------------------------------

/// Multiplicity at z of the result equals dist(e^{-i*theta} z).
PointDistribution rotate(const PointDistribution& dist, double theta);

/// (w*Z)(z) = Z(z/w); truncation radius scales by |w|. Throws on w == 0.
PointDistribution scale(const PointDistribution& dist, complexd w);

/// Multiplicities add on the common horizon (the smaller truncation radius);
/// points beyond it are dropped, since the union is only known there.
PointDistribution union_of(const PointDistribution& a, const PointDistribution& b);

/// Multiplicities subtract; requires b ⊂ a pointwise, else throws.
PointDistribution difference(const PointDistribution& a, const PointDistribution& b);

/// Points with |arg z - theta| < half_angle, the origin excluded.
/// Requires 0 < half_angle <= pi/2.
PointDistribution sector_part(const PointDistribution& dist, double theta, double half_angle);

struct UpperDensityEstimate {
    double value = 0.0;
    /// The running maximum of count/r^p still grows at the horizon.
    bool divergent = false;
    double argmax_radius = 0.0;
};

/// max over the given radii of Z(closed disk r)/r^p. The divergence flag is
/// set when the last-decade maximum exceeds the earlier maximum by more than
/// growth_factor.
UpperDensityEstimate upper_density(const PointDistribution& dist, double p,
                                   std::span<const double> radii,
                                   double growth_factor = 1.25);

}  // namespace logdens
