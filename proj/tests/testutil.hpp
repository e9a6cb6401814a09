#pragma once

#include <cmath>
#include <vector>

#include "logdens/divisor.hpp"
#include "logdens/generators.hpp"

namespace testutil {

/// {k : 1 <= k <= n} on the positive real axis.
inline logdens::PointDistribution harmonic(long long n) {
    std::vector<logdens::Entry> entries;
    entries.reserve(static_cast<std::size_t>(n));
    for (long long k = 1; k <= n; ++k)
        entries.push_back({{static_cast<double>(k), 0.0}, 1});
    return logdens::PointDistribution::from_points(std::move(entries),
                                                   static_cast<double>(n));
}

/// H_n = sum_{k<=n} 1/k via the asymptotic expansion, accurate to ~1/(120 n^4).
inline double harmonic_number(double n) {
    constexpr double kEulerGamma = 0.5772156649015329;
    return std::log(n) + kEulerGamma + 1.0 / (2.0 * n) - 1.0 / (12.0 * n * n);
}

/// A small random multiset: moduli log-uniform in [r_lo, r_hi], arguments
/// uniform, multiplicities in {1, 2, 3}.
inline logdens::PointDistribution random_cloud(logdens::SplitMix64& rng, int n_points,
                                               double r_lo, double r_hi,
                                               double truncation = 0.0) {
    std::vector<logdens::Entry> entries;
    for (int k = 0; k < n_points; ++k) {
        const double r = r_lo * std::exp(rng.uniform(0.0, std::log(r_hi / r_lo)));
        const double phi = rng.uniform(0.0, 2.0 * logdens::kPi);
        const long long mult = 1 + static_cast<long long>(rng.next() % 3);
        entries.push_back({r * std::polar(1.0, phi), mult});
    }
    return logdens::PointDistribution::from_points(
        std::move(entries),
        truncation > 0.0 ? std::optional<double>(truncation) : std::nullopt);
}

}  // namespace testutil
