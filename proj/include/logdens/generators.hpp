#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "logdens/divisor.hpp"

namespace logdens {

/// Deterministic 64-bit generator (splitmix64). Used instead of the standard
/// distributions so that identical seeds give byte-identical output files on
/// every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    /// Uniform in [0, 1) with 53 significant bits.
    double uniform01();

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi);

    /// Exponential with the given rate.
    double exponential(double rate);

private:
    std::uint64_t state_;
};

/// Parses numbers in generator specs and CLI flags: plain decimals plus the
/// forms "pi", "2pi", "pi/4", "3pi/4", "a/b" and "10^4".
double parse_scalar(const std::string& text);

/// `kind key=value ...`, e.g. `arith n=1000 step=1 dir=0` or
/// `sector theta=0 a=pi/4 density=1 horizon=1e4 seed=7`.
struct GeneratorSpec {
    std::string kind;
    std::map<std::string, double> params;

    static GeneratorSpec parse(const std::string& text);
    std::string canonical() const;

    double get(const std::string& key, double fallback) const;
    double require(const std::string& key) const;
};

/// Materializes a generator-backed distribution up to its horizon.
///
/// Kinds:
///   arith   n, step (default 1), dir (default 0): {k*step*e^{i dir} : 1<=k<=n}
///   geom    n, ratio, first (default 1), dir:     {first*ratio^k*e^{i dir} : 0<=k<n}
///   lattice m, spacing (default 1), rot (default 0): {(j+ik)*spacing*e^{i rot} : 1<=j,k<=m}
///   sector  theta, a, density, horizon, seed: Poisson cloud, radii a unit-rate
///           renewal process scaled by 1/density, arguments uniform in
///           (theta-a, theta+a).
PointDistribution generate(const GeneratorSpec& spec);

}  // namespace logdens
