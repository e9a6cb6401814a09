#pragma once

#include <string>
#include <vector>

#include "logdens/logmeasure.hpp"

namespace logdens {

struct EstimationParams {
    double grid_base = 1.0;
    double grid_ratio = 1.1331484530668263;  // e^{1/8}
    double horizon = 1e6;
    BlockDensityParams block;
    PairSupParams pair;
    RedhefferParams redheffer;
    int theta_steps = 720;
    double density_growth_factor = 1.25;
    double min_uncertainty = 1e-9;

    void validate() const;

    /// Grid clipped to the distribution's truncation radius. Throws when the
    /// usable horizon spans less than three grid steps.
    RadialGrid grid_for(const PointDistribution& dist) const;
};

enum class Verdict { Complete, Incomplete, Inconclusive };

std::string to_string(Verdict v);

struct CompletenessVerdict {
    Verdict verdict = Verdict::Inconclusive;
    std::string criterion;  // theorem1 | theorem2 | corollary3 | corollary4
    std::string clause;     // the geometric statement certified or refuted
    double b = 0.0;
    double theta = 0.0;
    /// theorem1/corollaries: ln-dens estimate minus b/(2 pi);
    /// theorem2: measured per-decade growth minus the relevant margin.
    double margin = 0.0;
    DensityReport diagnostics;
    std::vector<std::string> flags;

    std::string flags_joined() const;  // ';'-separated for CSV
};

/// Logarithmic block density of the distribution (of its L table over the
/// configured grid). Empty distributions give the zero report, converged.
DensityReport ln_dens(const PointDistribution& dist, const EstimationParams& params = {});

/// Upper-density divergence heuristic over the configured grid (p = 1).
bool upper_density_divergent(const PointDistribution& dist, const EstimationParams& params = {});

struct CriticalWidth {
    double value = 0.0;  // +inf when the upper density diverges
    bool infinite = false;
    DensityReport report;
};

/// 2*pi*ln-dens(rotate(Z, pi/2 - theta)): the strip width threshold below
/// which Exp^Z stays complete in direction theta.
CriticalWidth critical_width(const PointDistribution& dist, double theta,
                             const EstimationParams& params = {});

CompletenessVerdict theorem1_verdict(const PointDistribution& dist, double b, double theta,
                                     const EstimationParams& params = {});

enum class RedhefferAssertion { UserAsserted, CheckHeuristically };

CompletenessVerdict theorem2_verdict(const PointDistribution& dist, double b, double theta,
                                     RedhefferAssertion assertion = RedhefferAssertion::CheckHeuristically,
                                     const EstimationParams& params = {});

/// Corollary for convex sets of breadth <= b: inf over directions of
/// ln-dens(e^{i theta} Z) against b/(2 pi). Requires finite upper density.
CompletenessVerdict breadth_criterion(const PointDistribution& dist, double b,
                                      const EstimationParams& params = {});

/// One-directional diameter condition: complete when the upper density
/// diverges or sup over directions of ln-dens reaches b/(2 pi); otherwise no
/// conclusion (reported as inconclusive).
CompletenessVerdict diameter_sufficient(const PointDistribution& dist, double b,
                                        const EstimationParams& params = {});

}  // namespace logdens
