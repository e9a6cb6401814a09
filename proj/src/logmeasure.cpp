#include "logdens/logmeasure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace logdens {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kLn10 = 2.302585092994046;
}  // namespace

RadialGrid RadialGrid::geometric(double base, double ratio, double horizon) {
    if (!(base > 0.0) || !(ratio > 1.0))
        throw Error("radial grid requires base > 0 and ratio > 1");
    if (!(horizon >= base * ratio * ratio * ratio))
        throw Error("grid horizon must be at least base * ratio^3");
    RadialGrid grid;
    grid.base = base;
    grid.ratio = ratio;
    grid.steps = static_cast<int>(std::floor(std::log(horizon / base) / std::log(ratio) + 1e-9));
    return grid;
}

double RadialGrid::radius(int i) const {
    return base * std::pow(ratio, static_cast<double>(i));
}

std::vector<double> RadialGrid::radii() const {
    std::vector<double> out(static_cast<std::size_t>(steps) + 1);
    for (int i = 0; i <= steps; ++i) out[static_cast<std::size_t>(i)] = radius(i);
    return out;
}

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::Right: return "right";
        case Provenance::Left: return "left";
        case Provenance::Submeasure: return "submeasure";
        case Provenance::User: return "user";
    }
    return "user";
}

Provenance provenance_from_string(const std::string& s) {
    if (s == "right") return Provenance::Right;
    if (s == "left") return Provenance::Left;
    if (s == "submeasure") return Provenance::Submeasure;
    if (s == "user") return Provenance::User;
    throw Error("unknown table provenance '" + s + "'");
}

IntervalMeasureTable::IntervalMeasureTable(std::vector<double> radii, std::vector<double> values,
                                           Provenance provenance)
    : radii_(std::move(radii)), values_(std::move(values)), provenance_(provenance) {
    const std::size_t m = radii_.size();
    if (m < 2) throw Error("interval table needs at least two grid radii");
    if (!(radii_.front() > 0.0)) throw Error("grid radii must be positive");
    for (std::size_t i = 1; i < m; ++i)
        if (!(radii_[i] > radii_[i - 1])) throw Error("grid radii must be strictly increasing");
    if (values_.size() != m * (m - 1) / 2)
        throw Error("interval table value count does not match the grid");
    for (double& v : values_) {
        if (!std::isfinite(v)) throw Error("interval table values must be finite");
        if (v < 0.0) {
            if (v < -1e-9) throw Error("interval table values must be nonnegative");
            v = 0.0;
        }
    }
    log_step_ = std::log(radii_.back() / radii_.front()) / static_cast<double>(m - 1);
}

std::size_t IntervalMeasureTable::flat_index(int i, int j) const {
    const auto m = static_cast<long long>(radii_.size());
    return static_cast<std::size_t>(static_cast<long long>(i) * (2 * m - i - 1) / 2 + (j - i - 1));
}

double IntervalMeasureTable::span_decades() const {
    return std::log10(radii_.back() / radii_.front());
}

IntervalMeasureTable IntervalMeasureTable::from_distribution(const PointDistribution& dist,
                                                             const RadialGrid& grid,
                                                             Provenance kind) {
    const std::vector<double> radii = grid.radii();
    if (radii.back() > dist.truncation_radius() * (1.0 + 1e-12))
        throw Error("grid extends beyond the truncation radius");
    const int m = static_cast<int>(radii.size());
    std::vector<double> cell_right(static_cast<std::size_t>(m) - 1, 0.0);
    std::vector<double> cell_left(static_cast<std::size_t>(m) - 1, 0.0);
    for (const Entry& e : dist.entries()) {
        const double mod = std::abs(e.point);
        if (mod <= radii.front() || mod > radii.back()) continue;
        const auto it = std::lower_bound(radii.begin(), radii.end(), mod);
        const int cell = static_cast<int>(it - radii.begin()) - 1;
        const double re_inv = e.point.real() / std::norm(e.point);
        const double w = static_cast<double>(e.multiplicity);
        if (re_inv > 0.0)
            cell_right[static_cast<std::size_t>(cell)] += w * re_inv;
        else
            cell_left[static_cast<std::size_t>(cell)] -= w * re_inv;
    }
    std::vector<double> cum_right(static_cast<std::size_t>(m), 0.0);
    std::vector<double> cum_left(static_cast<std::size_t>(m), 0.0);
    for (int i = 1; i < m; ++i) {
        cum_right[static_cast<std::size_t>(i)] =
            cum_right[static_cast<std::size_t>(i) - 1] + cell_right[static_cast<std::size_t>(i) - 1];
        cum_left[static_cast<std::size_t>(i)] =
            cum_left[static_cast<std::size_t>(i) - 1] + cell_left[static_cast<std::size_t>(i) - 1];
    }
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(m) * (m - 1) / 2);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const double right = cum_right[static_cast<std::size_t>(j)] -
                                 cum_right[static_cast<std::size_t>(i)];
            const double left = cum_left[static_cast<std::size_t>(j)] -
                                cum_left[static_cast<std::size_t>(i)];
            switch (kind) {
                case Provenance::Right: values.push_back(right); break;
                case Provenance::Left: values.push_back(left); break;
                default: values.push_back(std::max(right, left)); break;
            }
        }
    }
    return IntervalMeasureTable(radii, std::move(values),
                                kind == Provenance::User ? Provenance::Submeasure : kind);
}

IntervalMeasureTable add(const IntervalMeasureTable& a, const IntervalMeasureTable& b) {
    if (a.radii_ != b.radii_) throw Error("table grids differ");
    std::vector<double> values = a.values_;
    for (std::size_t k = 0; k < values.size(); ++k) values[k] += b.values_[k];
    return IntervalMeasureTable(a.radii_, std::move(values), Provenance::User);
}

IntervalMeasureTable scale_table(const IntervalMeasureTable& a, double c) {
    if (!(c >= 0.0)) throw Error("table scale factor must be nonnegative");
    std::vector<double> values = a.values_;
    for (double& v : values) v *= c;
    return IntervalMeasureTable(a.radii_, std::move(values), Provenance::User);
}

IntervalMeasureTable max_table(const IntervalMeasureTable& a, const IntervalMeasureTable& b) {
    if (a.radii_ != b.radii_) throw Error("table grids differ");
    std::vector<double> values = a.values_;
    for (std::size_t k = 0; k < values.size(); ++k)
        values[k] = std::max(values[k], b.values_[k]);
    return IntervalMeasureTable(a.radii_, std::move(values), Provenance::User);
}

double right_log_measure(const PointDistribution& dist, double r, double R) {
    if (!(r > 0.0) || !(R > r)) throw Error("interval requires 0 < r < R");
    if (R > dist.truncation_radius() * (1.0 + 1e-12))
        throw Error("interval end exceeds the truncation radius");
    double sum = 0.0;
    for (const Entry& e : dist.entries()) {
        const double mod = std::abs(e.point);
        if (mod <= r) continue;
        if (mod > R) break;  // entries are sorted by modulus
        const double re_inv = e.point.real() / std::norm(e.point);
        if (re_inv > 0.0) sum += static_cast<double>(e.multiplicity) * re_inv;
    }
    return sum;
}

double left_log_measure(const PointDistribution& dist, double r, double R) {
    if (!(r > 0.0) || !(R > r)) throw Error("interval requires 0 < r < R");
    if (R > dist.truncation_radius() * (1.0 + 1e-12))
        throw Error("interval end exceeds the truncation radius");
    double sum = 0.0;
    for (const Entry& e : dist.entries()) {
        const double mod = std::abs(e.point);
        if (mod <= r) continue;
        if (mod > R) break;
        const double re_inv = e.point.real() / std::norm(e.point);
        if (re_inv < 0.0) sum -= static_cast<double>(e.multiplicity) * re_inv;
    }
    return sum;
}

double log_submeasure(const PointDistribution& dist, double r, double R) {
    return std::max(right_log_measure(dist, r, R), left_log_measure(dist, r, R));
}

// --- Block densities --------------------------------------------------------

namespace {

struct BlockStats {
    std::vector<double> ratio;  // indexed by block exponent k, [1..maxk]
    int maxk = 0;
};

BlockStats block_ratios(const IntervalMeasureTable& table, double tail_fraction) {
    const int m = table.point_count();
    BlockStats stats;
    stats.maxk = std::max(1, (m - 1) / 2);
    stats.ratio.assign(static_cast<std::size_t>(stats.maxk) + 1, 0.0);
    const double lnq = table.log_step();
    for (int k = 1; k <= stats.maxk; ++k) {
        const int imax = m - 1 - k;
        const int istart = std::min(
            imax, static_cast<int>(std::floor((1.0 - tail_fraction) * imax)));
        double best = 0.0;
        for (int i = istart; i <= imax; ++i) best = std::max(best, table.value(i, i + k));
        stats.ratio[static_cast<std::size_t>(k)] = best / (static_cast<double>(k) * lnq);
    }
    return stats;
}

std::vector<double> running_pair_sup(const IntervalMeasureTable& table, double coef) {
    const int m = table.point_count();
    const auto& radii = table.radii();
    std::vector<double> sup(static_cast<std::size_t>(m), kNegInf);
    double run = kNegInf;
    for (int j = 1; j < m; ++j) {
        for (int i = 0; i < j; ++i) {
            const double v = table.value(i, j) - coef * std::log(radii[static_cast<std::size_t>(j)] /
                                                                 radii[static_cast<std::size_t>(i)]);
            run = std::max(run, v);
        }
        sup[static_cast<std::size_t>(j)] = run;
    }
    return sup;
}

TailGrowthReport classify_running_sup(std::span<const double> sup, std::span<const double> radii,
                                      double divergence_margin, double bounded_margin) {
    TailGrowthReport report;
    const std::size_t m = radii.size();
    const double top = radii[m - 1];
    std::array<std::size_t, 4> anchor{};
    for (int d = 0; d < 4; ++d) {
        const double target = top / std::pow(10.0, 3 - d);
        auto it = std::lower_bound(radii.begin(), radii.end(), target * (1.0 - 1e-9));
        std::size_t idx = static_cast<std::size_t>(it - radii.begin());
        idx = std::max<std::size_t>(idx, 1);  // sup is undefined at the first radius
        idx = std::min(idx, m - 1);
        anchor[static_cast<std::size_t>(d)] = idx;
    }
    double worst = 0.0;
    for (int d = 0; d < 3; ++d) {
        const std::size_t a = anchor[static_cast<std::size_t>(d)];
        const std::size_t b = anchor[static_cast<std::size_t>(d) + 1];
        if (b <= a) {
            report.kind = TailGrowth::Inconclusive;
            return report;
        }
        const double decades = std::log10(radii[b] / radii[a]);
        const double g = (sup[b] - sup[a]) / std::max(decades, 1e-12);
        report.decade_growth[static_cast<std::size_t>(d)] = g;
        worst = std::max(worst, g);
    }
    report.per_decade = worst;
    const bool all_large = std::all_of(report.decade_growth.begin(), report.decade_growth.end(),
                                       [&](double g) { return g >= divergence_margin; });
    if (all_large)
        report.kind = TailGrowth::Divergent;
    else if (worst < bounded_margin)
        report.kind = TailGrowth::Bounded;
    else
        report.kind = TailGrowth::Inconclusive;
    return report;
}

/// Max per-decade growth of the running pair supremum at coefficient b.
double pair_growth_at(const IntervalMeasureTable& table, double b) {
    const std::vector<double> sup = running_pair_sup(table, b);
    const TailGrowthReport r =
        classify_running_sup(sup, table.radii(), std::numeric_limits<double>::infinity(), 0.0);
    return r.per_decade;
}

double bisect_b_variant(const IntervalMeasureTable& table, double growth_tol) {
    const int m = table.point_count();
    const double lnq = table.log_step();
    if (pair_growth_at(table, 0.0) <= growth_tol) {
        // already bounded at b = 0; the slope correction below still applies
        const double g = pair_growth_at(table, 0.0);
        return std::max(0.0, g / kLn10);
    }
    double max_adjacent = 0.0;
    for (int i = 0; i + 1 < m; ++i)
        max_adjacent = std::max(max_adjacent, table.value(i, i + 1) / lnq);
    double hi = max_adjacent + 1.0;
    int guard = 0;
    while (pair_growth_at(table, hi) > growth_tol && guard++ < 60) hi *= 2.0;
    double lo = 0.0;
    for (int iter = 0; iter < 60 && hi - lo > 1e-7 * std::max(1.0, hi); ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (pair_growth_at(table, mid) <= growth_tol)
            hi = mid;
        else
            lo = mid;
    }
    // First-order correction: near the true density d the residual growth per
    // decade is (d - b) * ln 10, so adding g/ln10 recovers d.
    const double g = pair_growth_at(table, hi);
    return hi + std::max(0.0, g) / kLn10;
}

}  // namespace

double DensityReport::max_estimate() const {
    return std::max(std::max(bar, underline), std::max(inf_variant, b_variant));
}

DensityReport block_density(const IntervalMeasureTable& table, const BlockDensityParams& params) {
    if (table.span_decades() < 3.0 - 1e-9)
        throw Error("block densities need a grid spanning at least three decades");
    const int m = table.point_count();
    const double lnq = table.log_step();
    const BlockStats stats = block_ratios(table, params.tail_fraction);

    DensityReport report;
    report.largest_block_exponent = stats.maxk;
    const int topk_start = std::max(
        1, static_cast<int>(std::floor((1.0 - params.tail_fraction) * stats.maxk)));
    report.bar = 0.0;
    report.underline = std::numeric_limits<double>::infinity();
    report.inf_variant = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= stats.maxk; ++k) {
        const double rk = stats.ratio[static_cast<std::size_t>(k)];
        report.inf_variant = std::min(report.inf_variant, rk);
        if (k >= topk_start) {
            report.bar = std::max(report.bar, rk);
            report.underline = std::min(report.underline, rk);
        }
    }
    if (!std::isfinite(report.underline)) report.underline = 0.0;
    if (!std::isfinite(report.inf_variant)) report.inf_variant = 0.0;

    report.b_variant = bisect_b_variant(table, params.b_growth_tol);

    // Tail drift of the largest block whose window still has a few samples.
    report.tail_slope = 0.0;
    for (int k = stats.maxk; k >= 1; --k) {
        const int imax = m - 1 - k;
        const int istart = std::min(
            imax, static_cast<int>(std::floor((1.0 - params.tail_fraction) * imax)));
        if (imax - istart < 5) continue;
        const int mid = (istart + imax) / 2;
        double m1 = 0.0, m2 = 0.0;
        for (int i = istart; i <= mid; ++i) m1 = std::max(m1, table.value(i, i + k));
        for (int i = mid + 1; i <= imax; ++i) m2 = std::max(m2, table.value(i, i + k));
        const double lna = static_cast<double>(k) * lnq;
        const double half_decades =
            (static_cast<double>(imax - istart + 1) / 2.0) * lnq / kLn10;
        report.tail_slope = (m2 - m1) / lna / std::max(half_decades, 1e-12);
        break;
    }

    const double estimates[4] = {report.bar, report.underline, report.inf_variant,
                                 report.b_variant};
    const double maxv = *std::max_element(estimates, estimates + 4);
    const double minv = *std::min_element(estimates, estimates + 4);
    report.spread = maxv - minv;
    // Densities are compared against thresholds of order one, so near-zero
    // estimates that agree absolutely are treated as agreeing relatively.
    report.relative_spread = report.spread / std::max(maxv, 1.0);
    if (report.relative_spread <= params.tolerance || report.spread <= 1e-9)
        report.value = report.bar;
    report.converged = report.value.has_value() && std::abs(report.tail_slope) <= params.tolerance;
    return report;
}

std::vector<std::pair<double, double>> block_ratio_curve(const IntervalMeasureTable& table,
                                                         double tail_fraction) {
    const BlockStats stats = block_ratios(table, tail_fraction);
    std::vector<std::pair<double, double>> curve;
    curve.reserve(static_cast<std::size_t>(stats.maxk));
    for (int k = 1; k <= stats.maxk; ++k)
        curve.emplace_back(std::exp(static_cast<double>(k) * table.log_step()),
                           stats.ratio[static_cast<std::size_t>(k)]);
    return curve;
}

AxiomReport check_submeasure_axioms(const IntervalMeasureTable& table, double eps_rel) {
    AxiomReport report;
    const int m = table.point_count();
    const auto& radii = table.radii();
    for (int i = 0; i < m; ++i) {
        auto it = std::lower_bound(radii.begin(), radii.end(),
                                   2.0 * radii[static_cast<std::size_t>(i)]);
        if (it == radii.end()) break;
        const int j = static_cast<int>(it - radii.begin());
        if (j > i) report.l1_bound = std::max(report.l1_bound, table.value(i, j));
    }
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            for (int k = j + 1; k < m; ++k) {
                const double whole = table.value(i, k);
                const double split = table.value(i, j) + table.value(j, k);
                const double gap = whole - split;
                report.max_additivity_gap =
                    std::max(report.max_additivity_gap, std::abs(gap));
                if (gap > eps_rel * std::max(1.0, whole))
                    report.l2_violations.push_back({i, j, k, gap});
            }
        }
    }
    return report;
}

std::string to_string(TailGrowth g) {
    switch (g) {
        case TailGrowth::Divergent: return "divergent";
        case TailGrowth::Bounded: return "bounded";
        case TailGrowth::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

TailGrowthReport pair_sup_growth(const IntervalMeasureTable& table, double log_coefficient,
                                 const PairSupParams& params) {
    const std::vector<double> sup = running_pair_sup(table, log_coefficient);
    return classify_running_sup(sup, table.radii(), params.divergence_margin,
                                params.bounded_margin);
}

TailGrowthReport ladder_sup_growth(const IntervalMeasureTable& table, double log_coefficient,
                                   const PairSupParams& params) {
    const auto& radii = table.radii();
    const int m = table.point_count();
    std::vector<int> ladder;
    double target = std::max(1.0, radii.front());
    while (target <= radii.back() * (1.0 + 1e-9)) {
        auto it = std::lower_bound(radii.begin(), radii.end(), target * (1.0 - 1e-9));
        int idx = std::min(static_cast<int>(it - radii.begin()), m - 1);
        if (ladder.empty() || idx > ladder.back()) ladder.push_back(idx);
        target *= std::exp(1.0);
    }
    if (ladder.size() < 2) {
        TailGrowthReport report;
        report.kind = TailGrowth::Inconclusive;
        return report;
    }
    std::vector<double> sub_radii(ladder.size());
    std::vector<double> sup(ladder.size(), kNegInf);
    double run = kNegInf;
    for (std::size_t jj = 0; jj < ladder.size(); ++jj) {
        sub_radii[jj] = radii[static_cast<std::size_t>(ladder[jj])];
        for (std::size_t ii = 0; ii < jj; ++ii) {
            const double v = table.value(ladder[ii], ladder[jj]) -
                             log_coefficient * std::log(sub_radii[jj] / sub_radii[ii]);
            run = std::max(run, v);
        }
        if (jj > 0) sup[jj] = run;
    }
    return classify_running_sup(sup, sub_radii, params.divergence_margin, params.bounded_margin);
}

std::string to_string(RedhefferKind k) {
    switch (k) {
        case RedhefferKind::FiniteBySum: return "finite_by_sum";
        case RedhefferKind::FiniteBySeparation: return "finite_by_separation";
        case RedhefferKind::Unknown: return "unknown";
    }
    return "unknown";
}

RedhefferResult redheffer_sufficient(const PointDistribution& dist, double theta,
                                     double half_angle, const RedhefferParams& params) {
    const PointDistribution part = sector_part(dist, theta, half_angle);
    if (part.empty()) return {RedhefferKind::FiniteBySum, "empty sector part"};

    // (i) tail-sum decay of sum 1/|z| across the last three decades
    const double top = part.max_modulus();
    double decade_sum[3] = {0.0, 0.0, 0.0};
    for (const Entry& e : part.entries()) {
        const double mod = std::abs(e.point);
        for (int d = 0; d < 3; ++d) {
            const double hi = top / std::pow(10.0, d);
            const double lo = hi / 10.0;
            if (mod > lo && mod <= hi)
                decade_sum[d] += static_cast<double>(e.multiplicity) / mod;
        }
    }
    if (decade_sum[0] == 0.0 ||
        (decade_sum[1] > 0.0 && decade_sum[2] > 0.0 &&
         decade_sum[0] <= params.sum_decay_ratio * decade_sum[1] &&
         decade_sum[1] <= params.sum_decay_ratio * decade_sum[2])) {
        return {RedhefferKind::FiniteBySum, "decade sums of 1/|z| decay at the horizon"};
    }

    // (ii) separated and inside a horizontal strip after rotation by -theta
    const PointDistribution aligned = rotate(part, -theta);
    bool separated = true;
    for (const Entry& e : aligned.entries()) {
        if (e.multiplicity > 1) {
            separated = false;
            break;
        }
    }
    if (separated) {
        std::vector<complexd> pts;
        pts.reserve(aligned.entries().size());
        for (const Entry& e : aligned.entries()) pts.push_back(e.point);
        std::sort(pts.begin(), pts.end(), [](complexd a, complexd b) {
            return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
        });
        double dmin = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i + 1 < pts.size() && separated; ++i) {
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                if (pts[j].real() - pts[i].real() >= dmin) break;
                dmin = std::min(dmin, std::abs(pts[j] - pts[i]));
                if (dmin < params.separation_min) {
                    separated = false;
                    break;
                }
            }
        }
    }
    if (separated) {
        double early_im = 0.0, late_im = 0.0;
        bool has_early = false;
        const double cut = top / 10.0;
        for (const Entry& e : aligned.entries()) {
            const double mod = std::abs(e.point);
            const double im = std::abs(e.point.imag());
            if (mod <= cut) {
                early_im = std::max(early_im, im);
                has_early = true;
            } else {
                late_im = std::max(late_im, im);
            }
        }
        if (has_early && late_im <= early_im * params.strip_growth_factor + 1e-9)
            return {RedhefferKind::FiniteBySeparation,
                    "separated; |Im| bounded across the horizon after rotation"};
    }
    return {RedhefferKind::Unknown, "neither sufficient condition detected"};
}

RotatedTableBuilder::RotatedTableBuilder(const PointDistribution& dist, const RadialGrid& grid) {
    radii_ = grid.radii();
    if (radii_.back() > dist.truncation_radius() * (1.0 + 1e-12))
        throw Error("grid extends beyond the truncation radius");
    const std::size_t n = dist.entries().size();
    u_.reserve(n);
    v_.reserve(n);
    mult_.reserve(n);
    cell_.reserve(n);
    for (const Entry& e : dist.entries()) {
        const double mod = std::abs(e.point);
        if (mod <= radii_.front() || mod > radii_.back()) continue;
        const auto it = std::lower_bound(radii_.begin(), radii_.end(), mod);
        cell_.push_back(static_cast<int>(it - radii_.begin()) - 1);
        const double nrm = std::norm(e.point);
        u_.push_back(e.point.real() / nrm);   // Re(1/z)
        v_.push_back(-e.point.imag() / nrm);  // Im(1/z)
        mult_.push_back(static_cast<double>(e.multiplicity));
    }
}

IntervalMeasureTable RotatedTableBuilder::submeasure_table(double theta) const {
    // Re(1/(e^{i theta} z)) = Re(e^{-i theta}/z) = u cos(theta) + v sin(theta)
    const complexd w = unit_dir(theta);
    const double c = w.real();
    const double s = w.imag();
    const int m = static_cast<int>(radii_.size());
    std::vector<double> cell_right(static_cast<std::size_t>(m) - 1, 0.0);
    std::vector<double> cell_left(static_cast<std::size_t>(m) - 1, 0.0);
    for (std::size_t k = 0; k < u_.size(); ++k) {
        const double re_inv = u_[k] * c + v_[k] * s;
        if (re_inv > 0.0)
            cell_right[static_cast<std::size_t>(cell_[k])] += mult_[k] * re_inv;
        else
            cell_left[static_cast<std::size_t>(cell_[k])] -= mult_[k] * re_inv;
    }
    std::vector<double> cum_right(static_cast<std::size_t>(m), 0.0);
    std::vector<double> cum_left(static_cast<std::size_t>(m), 0.0);
    for (int i = 1; i < m; ++i) {
        cum_right[static_cast<std::size_t>(i)] =
            cum_right[static_cast<std::size_t>(i) - 1] + cell_right[static_cast<std::size_t>(i) - 1];
        cum_left[static_cast<std::size_t>(i)] =
            cum_left[static_cast<std::size_t>(i) - 1] + cell_left[static_cast<std::size_t>(i) - 1];
    }
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(m) * (m - 1) / 2);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const double right = cum_right[static_cast<std::size_t>(j)] -
                                 cum_right[static_cast<std::size_t>(i)];
            const double left = cum_left[static_cast<std::size_t>(j)] -
                                cum_left[static_cast<std::size_t>(i)];
            values.push_back(std::max(right, left));
        }
    }
    return IntervalMeasureTable(radii_, std::move(values), Provenance::Submeasure);
}

}  // namespace logdens
