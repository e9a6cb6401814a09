#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "logdens/divisor.hpp"

namespace logdens {

/// Geometric radius ladder r_i = base * ratio^i, i = 0..steps, with the top
/// radius not exceeding the horizon.
struct RadialGrid {
    double base = 1.0;
    double ratio = 0.0;
    int steps = 0;

    static RadialGrid geometric(double base, double ratio, double horizon);

    double radius(int i) const;
    int point_count() const { return steps + 1; }
    std::vector<double> radii() const;
    double top() const { return radius(steps); }
};

enum class Provenance { Right, Left, Submeasure, User };

std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

/// Sampled values of an interval function l(r_i, r_j) over a geometric grid,
/// stored as the full upper triangle i < j.
class IntervalMeasureTable {
public:
    /// values must hold point_count*(point_count-1)/2 entries in row-major
    /// upper-triangular order ((0,1), (0,2), ..., (0,m), (1,2), ...).
    /// All values must be finite and >= 0; radii strictly increasing and
    /// close to geometric.
    IntervalMeasureTable(std::vector<double> radii, std::vector<double> values,
                         Provenance provenance);

    static IntervalMeasureTable from_distribution(const PointDistribution& dist,
                                                  const RadialGrid& grid, Provenance kind);

    double value(int i, int j) const { return values_[flat_index(i, j)]; }
    const std::vector<double>& radii() const { return radii_; }
    int point_count() const { return static_cast<int>(radii_.size()); }
    Provenance provenance() const { return provenance_; }

    /// Mean logarithmic step of the grid.
    double log_step() const { return log_step_; }
    double span_decades() const;

    friend IntervalMeasureTable add(const IntervalMeasureTable& a, const IntervalMeasureTable& b);
    friend IntervalMeasureTable scale_table(const IntervalMeasureTable& a, double c);
    friend IntervalMeasureTable max_table(const IntervalMeasureTable& a,
                                          const IntervalMeasureTable& b);

private:
    std::size_t flat_index(int i, int j) const;

    std::vector<double> radii_;
    std::vector<double> values_;
    Provenance provenance_;
    double log_step_ = 0.0;
};

// --- Interval measures ---------------------------------------------------

/// Sum over r < |z| <= R of multiplicity * max{Re(1/z), 0}.
/// Requires 0 < r < R <= truncation radius.
double right_log_measure(const PointDistribution& dist, double r, double R);

/// right_log_measure of -Z.
double left_log_measure(const PointDistribution& dist, double r, double R);

/// max of the right and left logarithmic measures.
double log_submeasure(const PointDistribution& dist, double r, double R);

// --- Block densities ------------------------------------------------------

struct BlockDensityParams {
    /// limsup_{r->inf} is estimated as the max over the top fraction of the
    /// radial grid.
    double tail_fraction = 0.30;
    /// Relative spread of the four estimates below which a common value is
    /// declared.
    double tolerance = 0.05;
    /// Per-decade growth of the pair supremum treated as "stopped growing"
    /// in the dens_b bisection.
    double b_growth_tol = 0.02;
};

struct DensityReport {
    double bar = 0.0;          // limsup over large block factors
    double underline = 0.0;    // liminf over large block factors
    double inf_variant = 0.0;  // inf over all block factors
    double b_variant = 0.0;    // smallest b with bounded pair supremum
    double spread = 0.0;       // max - min of the four
    double relative_spread = 0.0;
    double tail_slope = 0.0;   // per-decade drift of the largest-block estimate
    bool converged = false;
    std::optional<double> value;  // declared ln-dens when the spread is small
    int largest_block_exponent = 0;

    double max_estimate() const;
};

/// The four logarithmic block densities of an interval table. Requires the
/// grid to span at least three decades.
DensityReport block_density(const IntervalMeasureTable& table,
                            const BlockDensityParams& params = {});

/// Block ratio curve: for each block exponent k, the tail limsup estimate of
/// l(r, r*q^k) divided by k*ln q. Used by the density plots.
std::vector<std::pair<double, double>> block_ratio_curve(const IntervalMeasureTable& table,
                                                         double tail_fraction = 0.30);

// --- Submeasure axioms ------------------------------------------------------

struct AxiomReport {
    double l1_bound = 0.0;  // max over grid r of l(r, 2r)
    struct Violation {
        int i, j, k;
        double excess;
    };
    std::vector<Violation> l2_violations;
    /// max |l(r1,r3) - l(r1,r2) - l(r2,r3)| over grid triples; ~0 for
    /// additive measures.
    double max_additivity_gap = 0.0;
};

AxiomReport check_submeasure_axioms(const IntervalMeasureTable& table, double eps_rel = 1e-9);

// --- Tail growth / divergence detection -------------------------------------

enum class TailGrowth { Divergent, Bounded, Inconclusive };

std::string to_string(TailGrowth g);

struct TailGrowthReport {
    TailGrowth kind = TailGrowth::Inconclusive;
    double per_decade = 0.0;  // max growth per decade over the last three decades
    std::array<double, 3> decade_growth{};
};

struct PairSupParams {
    double divergence_margin = 1.0;  // growth >= this per decade => divergent
    double bounded_margin = 0.1;     // growth < this per decade => bounded
};

/// Classifies the running supremum over grid pairs (r_i, r_j), j growing, of
/// value(i,j) - log_coefficient * ln(r_j/r_i), across the last three decades.
TailGrowthReport pair_sup_growth(const IntervalMeasureTable& table, double log_coefficient,
                                 const PairSupParams& params = {});

/// Same detector restricted to grid radii nearest to powers of e.
TailGrowthReport ladder_sup_growth(const IntervalMeasureTable& table, double log_coefficient,
                                   const PairSupParams& params = {});

// --- Redheffer sufficient conditions -----------------------------------------

enum class RedhefferKind { FiniteBySum, FiniteBySeparation, Unknown };

std::string to_string(RedhefferKind k);

struct RedhefferResult {
    RedhefferKind kind = RedhefferKind::Unknown;
    std::string detail;
};

struct RedhefferParams {
    /// Decade sums of 1/|z| must decay at least this fast to call the sum
    /// convergent.
    double sum_decay_ratio = 0.6;
    double separation_min = 1e-9;
    /// Last-decade max |Im| may exceed the earlier max by at most this factor
    /// for the strip test.
    double strip_growth_factor = 1.2;
};

/// Checks the two sufficient conditions for finite external Redheffer density
/// of Z near the direction theta, on the sector part of half-angle a.
RedhefferResult redheffer_sufficient(const PointDistribution& dist, double theta,
                                     double half_angle, const RedhefferParams& params = {});

// --- Fast rotated tables -----------------------------------------------------

/// Precomputes per-point data so that the submeasure table of e^{i*theta}Z can
/// be built in O(n) per angle. Used by the theta sweeps of the corollaries.
class RotatedTableBuilder {
public:
    RotatedTableBuilder(const PointDistribution& dist, const RadialGrid& grid);

    IntervalMeasureTable submeasure_table(double theta) const;

private:
    std::vector<double> radii_;
    std::vector<double> u_, v_;  // Re(1/z), Im(1/z)
    std::vector<double> mult_;
    std::vector<int> cell_;
};

}  // namespace logdens
