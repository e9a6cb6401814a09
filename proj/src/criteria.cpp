#include "logdens/criteria.hpp"

#include "logdens/convexgeom.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace logdens {

namespace {

constexpr double kTwoPi = 2.0 * kPi;

DensityReport zero_report() {
    DensityReport r;
    r.value = 0.0;
    r.converged = true;
    return r;
}

double uncertainty(const DensityReport& report, const EstimationParams& params) {
    return std::max(report.spread, params.min_uncertainty);
}

struct ThetaScan {
    double inf_low = 0.0;       // min over theta of (estimate - uncertainty)
    double inf_high = 0.0;      // min over theta of (estimate + uncertainty)
    double sup_low = 0.0;       // max over theta of (estimate - uncertainty)
    double sup_high = 0.0;      // max over theta of (estimate + uncertainty)
    bool all_converged = true;
    double arg_inf = 0.0;
    double arg_sup = 0.0;
    DensityReport at_inf;
    DensityReport at_sup;
};

ThetaScan scan_directions(const PointDistribution& dist, const EstimationParams& params) {
    const RadialGrid grid = params.grid_for(dist);
    const RotatedTableBuilder builder(dist, grid);
    ThetaScan scan;
    bool first = true;
    for (int j = 0; j < params.theta_steps; ++j) {
        const double theta = kPi * static_cast<double>(j) / params.theta_steps;
        const IntervalMeasureTable table = builder.submeasure_table(theta);
        const DensityReport report = block_density(table, params.block);
        const double v = report.value.value_or(report.bar);
        const double u = uncertainty(report, params);
        scan.all_converged = scan.all_converged && report.converged;
        if (first || v - u < scan.inf_low) {
            scan.inf_low = v - u;
            scan.inf_high = v + u;
            scan.arg_inf = theta;
            scan.at_inf = report;
        }
        if (first || v + u > scan.sup_high) {
            scan.sup_low = v - u;
            scan.sup_high = v + u;
            scan.arg_sup = theta;
            scan.at_sup = report;
        }
        first = false;
    }
    return scan;
}

std::string fmt(double x) {
    std::ostringstream out;
    out.precision(12);
    out << x;
    return out.str();
}

}  // namespace

void EstimationParams::validate() const {
    if (!(grid_base > 0.0)) throw Error("grid base must be positive");
    if (!(grid_ratio > 1.0)) throw Error("grid ratio must exceed 1");
    if (!(horizon >= grid_base * grid_ratio * grid_ratio * grid_ratio))
        throw Error("horizon must be at least base * ratio^3");
    if (!(block.tolerance > 0.0)) throw Error("tolerance must be positive");
    if (theta_steps < 1) throw Error("theta_steps must be positive");
}

RadialGrid EstimationParams::grid_for(const PointDistribution& dist) const {
    validate();
    const double usable = std::min(horizon, dist.truncation_radius());
    if (!(usable >= grid_base * grid_ratio * grid_ratio * grid_ratio))
        throw Error("horizon too small for any estimate at this truncation radius");
    return RadialGrid::geometric(grid_base, grid_ratio, usable);
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Complete: return "complete";
        case Verdict::Incomplete: return "incomplete";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

std::string CompletenessVerdict::flags_joined() const {
    std::string out;
    for (const std::string& f : flags) {
        if (!out.empty()) out += ';';
        out += f;
    }
    return out;
}

DensityReport ln_dens(const PointDistribution& dist, const EstimationParams& params) {
    if (dist.empty()) return zero_report();
    const RadialGrid grid = params.grid_for(dist);
    const IntervalMeasureTable table =
        IntervalMeasureTable::from_distribution(dist, grid, Provenance::Submeasure);
    return block_density(table, params.block);
}

bool upper_density_divergent(const PointDistribution& dist, const EstimationParams& params) {
    if (dist.empty()) return false;
    const RadialGrid grid = params.grid_for(dist);
    const std::vector<double> radii = grid.radii();
    return upper_density(dist, 1.0, radii, params.density_growth_factor).divergent;
}

CriticalWidth critical_width(const PointDistribution& dist, double theta,
                             const EstimationParams& params) {
    if (dist.empty()) throw Error("critical_width requires a nonempty distribution");
    CriticalWidth result;
    if (upper_density_divergent(dist, params)) {
        result.infinite = true;
        result.value = kInf;
        return result;
    }
    const PointDistribution rotated = rotate(dist, kPi / 2.0 - theta);
    result.report = ln_dens(rotated, params);
    result.value = kTwoPi * result.report.value.value_or(result.report.bar);
    return result;
}

CompletenessVerdict theorem1_verdict(const PointDistribution& dist, double b, double theta,
                                     const EstimationParams& params) {
    if (!(b > 0.0)) throw Error("theorem1_verdict requires b > 0");
    CompletenessVerdict verdict;
    verdict.criterion = "theorem1";
    verdict.b = b;
    verdict.theta = theta;
    const double threshold = b / kTwoPi;
    if (!dist.empty() && upper_density_divergent(dist, params)) {
        verdict.verdict = Verdict::Complete;
        verdict.clause =
            "I-II: complete in Hol(D) for convex domains of width(theta)<=b and in "
            "C(K)&Hol(int K) for convex compacts of width(theta)<b (infinite upper density)";
        verdict.margin = kInf;
        verdict.flags.push_back("upper-density:divergent");
        return verdict;
    }
    const DensityReport report =
        dist.empty() ? zero_report() : ln_dens(rotate(dist, kPi / 2.0 - theta), params);
    verdict.diagnostics = report;
    const double v = report.value.value_or(report.bar);
    const double u = uncertainty(report, params);
    verdict.margin = v - threshold;
    verdict.flags.push_back("lndens:" + fmt(v));
    verdict.flags.push_back("uncertainty:" + fmt(u));
    if (report.converged && v - u >= threshold) {
        verdict.verdict = Verdict::Complete;
        verdict.clause =
            "I-II: complete in Hol(D) for convex domains of width(theta)<=b and in "
            "C(K)&Hol(int K) for convex compacts of width(theta)<b";
    } else if (report.converged && v + u < threshold) {
        verdict.verdict = Verdict::Incomplete;
        verdict.clause = "III fails: log block density below b/(2pi)";
    } else {
        verdict.verdict = Verdict::Inconclusive;
        verdict.clause = "estimate straddles b/(2pi) or diagnostics not converged";
    }
    return verdict;
}

CompletenessVerdict theorem2_verdict(const PointDistribution& dist, double b, double theta,
                                     RedhefferAssertion assertion,
                                     const EstimationParams& params) {
    if (!(b >= 0.0)) throw Error("theorem2_verdict requires b >= 0");
    CompletenessVerdict verdict;
    verdict.criterion = "theorem2";
    verdict.b = b;
    verdict.theta = theta;

    if (assertion == RedhefferAssertion::UserAsserted) {
        verdict.flags.push_back("redheffer:asserted-by-user");
    } else {
        bool confirmed_both = true;
        for (double dir : {theta, theta - kPi}) {
            RedhefferKind found = RedhefferKind::Unknown;
            for (double a : {kPi / 2.0, kPi / 4.0, kPi / 8.0}) {
                const RedhefferResult res =
                    redheffer_sufficient(dist, dir, a, params.redheffer);
                if (res.kind != RedhefferKind::Unknown) {
                    found = res.kind;
                    break;
                }
            }
            confirmed_both = confirmed_both && found != RedhefferKind::Unknown;
        }
        if (confirmed_both) {
            verdict.flags.push_back("redheffer:heuristically-confirmed");
        } else {
            verdict.verdict = Verdict::Inconclusive;
            verdict.clause =
                "finite Redheffer density near theta and theta-pi neither asserted nor "
                "heuristically confirmed";
            verdict.flags.push_back("redheffer:unknown");
            return verdict;
        }
    }

    if (dist.empty()) {
        verdict.verdict = Verdict::Incomplete;
        verdict.clause = "II fails: the pair supremum is bounded (empty distribution)";
        verdict.flags.push_back("ladder:bounded");
        return verdict;
    }

    const RadialGrid grid = params.grid_for(dist);
    const PointDistribution rotated = rotate(dist, kPi / 2.0 - theta);
    const IntervalMeasureTable table =
        IntervalMeasureTable::from_distribution(rotated, grid, Provenance::Submeasure);
    const double coefficient = b / kTwoPi;
    const TailGrowthReport continuous = pair_sup_growth(table, coefficient, params.pair);
    const TailGrowthReport ladder = ladder_sup_growth(table, coefficient, params.pair);
    verdict.flags.push_back("continuous:" + to_string(continuous.kind));
    verdict.flags.push_back("ladder:" + to_string(ladder.kind));
    verdict.flags.push_back(continuous.kind == ladder.kind ? "detectors:agree"
                                                           : "detectors:disagree");
    verdict.flags.push_back("growth-per-decade:" + fmt(continuous.per_decade));
    switch (continuous.kind) {
        case TailGrowth::Divergent:
            verdict.verdict = Verdict::Complete;
            verdict.clause =
                "I and IV: complete in C(K)&Hol(int K) for convex compacts of "
                "width(theta)<=b and in the closed-strip space of width b";
            verdict.margin = continuous.per_decade - params.pair.divergence_margin;
            break;
        case TailGrowth::Bounded:
            verdict.verdict = Verdict::Incomplete;
            verdict.clause = "II fails: the pair supremum is bounded at coefficient b/(2pi)";
            verdict.margin = continuous.per_decade - params.pair.bounded_margin;
            break;
        case TailGrowth::Inconclusive:
            verdict.verdict = Verdict::Inconclusive;
            verdict.clause = "pair supremum growth between the bounded and divergent margins";
            verdict.margin = 0.0;
            break;
    }
    return verdict;
}

CompletenessVerdict breadth_criterion(const PointDistribution& dist, double b,
                                      const EstimationParams& params) {
    if (!(b > 0.0)) throw Error("breadth_criterion requires b > 0");
    CompletenessVerdict verdict;
    verdict.criterion = "corollary3";
    verdict.b = b;
    verdict.theta = 0.0;
    const double threshold = b / kTwoPi;
    if (dist.empty()) {
        verdict.verdict = Verdict::Incomplete;
        verdict.clause = "III fails: inf over directions of the log block density is 0";
        verdict.margin = -threshold;
        verdict.diagnostics = zero_report();
        return verdict;
    }
    if (upper_density_divergent(dist, params))
        throw HypothesisError("breadth criterion requires finite upper density");
    const ThetaScan scan = scan_directions(dist, params);
    verdict.diagnostics = scan.at_inf;
    verdict.theta = scan.arg_inf;
    verdict.margin = 0.5 * (scan.inf_low + scan.inf_high) - threshold;
    verdict.flags.push_back("theta-steps:" + std::to_string(params.theta_steps));
    verdict.flags.push_back("inf-lndens:" + fmt(0.5 * (scan.inf_low + scan.inf_high)));
    verdict.flags.push_back("arg-inf:" + fmt(scan.arg_inf));
    if (scan.all_converged && scan.inf_low >= threshold) {
        verdict.verdict = Verdict::Complete;
        verdict.clause =
            "I-II: complete in Hol(D) for convex domains of breadth<=b and in "
            "C(K)&Hol(int K) for convex compacts of breadth<b";
    } else if (scan.at_inf.converged && scan.inf_high < threshold) {
        verdict.verdict = Verdict::Incomplete;
        verdict.clause = "III fails: a direction with log block density below b/(2pi) exists";
    } else {
        verdict.verdict = Verdict::Inconclusive;
        verdict.clause = "direction sweep straddles b/(2pi) or diagnostics not converged";
    }
    return verdict;
}

CompletenessVerdict diameter_sufficient(const PointDistribution& dist, double b,
                                        const EstimationParams& params) {
    if (!(b > 0.0)) throw Error("diameter_sufficient requires b > 0");
    CompletenessVerdict verdict;
    verdict.criterion = "corollary4";
    verdict.b = b;
    verdict.theta = 0.0;
    const double threshold = b / kTwoPi;
    if (dist.empty()) {
        verdict.verdict = Verdict::Inconclusive;
        verdict.clause = "no-conclusion: the diameter condition is one-directional";
        verdict.margin = -threshold;
        return verdict;
    }
    if (upper_density_divergent(dist, params)) {
        verdict.verdict = Verdict::Complete;
        verdict.clause =
            "complete in C(K)&Hol(int K) for convex compacts of diameter<b and in Hol(D) "
            "for convex domains of diameter<=b (infinite upper density)";
        verdict.margin = kInf;
        verdict.flags.push_back("upper-density:divergent");
        return verdict;
    }
    const ThetaScan scan = scan_directions(dist, params);
    verdict.diagnostics = scan.at_sup;
    verdict.theta = scan.arg_sup;
    verdict.margin = 0.5 * (scan.sup_low + scan.sup_high) - threshold;
    verdict.flags.push_back("theta-steps:" + std::to_string(params.theta_steps));
    verdict.flags.push_back("sup-lndens:" + fmt(0.5 * (scan.sup_low + scan.sup_high)));
    verdict.flags.push_back("arg-sup:" + fmt(scan.arg_sup));
    if (scan.at_sup.converged && scan.sup_low >= threshold) {
        verdict.verdict = Verdict::Complete;
        verdict.clause =
            "complete in C(K)&Hol(int K) for convex compacts of diameter<b and in Hol(D) "
            "for convex domains of diameter<=b";
    } else {
        verdict.verdict = Verdict::Inconclusive;
        verdict.clause = "no-conclusion: the diameter condition is one-directional";
    }
    return verdict;
}

}  // namespace logdens
