#include "logdens/generators.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace logdens {

std::uint64_t SplitMix64::next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double SplitMix64::uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
}

double SplitMix64::exponential(double rate) {
    double u;
    do {
        u = uniform01();
    } while (u == 0.0);
    return -std::log(u) / rate;
}

namespace {

double parse_plain(const std::string& s) {
    if (s.empty()) throw Error("empty number");
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size()) throw Error("cannot parse number: '" + s + "'");
    return v;
}

}  // namespace

double parse_scalar(const std::string& text) {
    std::string s = text;
    const auto pi_pos = s.find("pi");
    if (pi_pos != std::string::npos) {
        const std::string before = s.substr(0, pi_pos);
        std::string after = s.substr(pi_pos + 2);
        double factor = 1.0;
        if (!before.empty() && before != "+") {
            factor = before == "-" ? -1.0 : parse_plain(before);
        }
        double divisor = 1.0;
        if (!after.empty()) {
            if (after.front() != '/') throw Error("cannot parse number: '" + text + "'");
            divisor = parse_plain(after.substr(1));
        }
        return factor * kPi / divisor;
    }
    const auto hat = s.find('^');
    if (hat != std::string::npos)
        return std::pow(parse_plain(s.substr(0, hat)), parse_plain(s.substr(hat + 1)));
    const auto slash = s.find('/');
    if (slash != std::string::npos)
        return parse_plain(s.substr(0, slash)) / parse_plain(s.substr(slash + 1));
    return parse_plain(s);
}

GeneratorSpec GeneratorSpec::parse(const std::string& text) {
    std::istringstream in(text);
    GeneratorSpec spec;
    if (!(in >> spec.kind)) throw Error("empty generator spec");
    std::string token;
    while (in >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos || eq == 0)
            throw Error("generator spec tokens must be key=value, got '" + token + "'");
        spec.params[token.substr(0, eq)] = parse_scalar(token.substr(eq + 1));
    }
    return spec;
}

std::string GeneratorSpec::canonical() const {
    std::ostringstream out;
    out.precision(17);
    out << kind;
    for (const auto& [key, value] : params) {
        out << ' ' << key << '=' << value;
    }
    return out.str();
}

double GeneratorSpec::get(const std::string& key, double fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

double GeneratorSpec::require(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end())
        throw Error("generator '" + kind + "' requires parameter '" + key + "'");
    return it->second;
}

namespace {

long long int_param(double v, const char* name) {
    const long long n = static_cast<long long>(std::llround(v));
    if (std::abs(v - static_cast<double>(n)) > 1e-9 || n < 0)
        throw Error(std::string("parameter '") + name + "' must be a nonnegative integer");
    return n;
}

PointDistribution gen_arith(const GeneratorSpec& spec) {
    const long long n = int_param(spec.require("n"), "n");
    const double step = spec.get("step", 1.0);
    if (!(step > 0.0)) throw Error("arith step must be positive");
    const complexd dir = unit_dir(spec.get("dir", 0.0));
    std::vector<Entry> entries;
    entries.reserve(static_cast<std::size_t>(n));
    for (long long k = 1; k <= n; ++k)
        entries.push_back({static_cast<double>(k) * step * dir, 1});
    return PointDistribution::from_points(std::move(entries),
                                          static_cast<double>(n) * step);
}

PointDistribution gen_geom(const GeneratorSpec& spec) {
    const long long n = int_param(spec.require("n"), "n");
    const double ratio = spec.get("ratio", 2.0);
    const double first = spec.get("first", 1.0);
    if (!(ratio > 1.0) || !(first > 0.0)) throw Error("geom requires ratio > 1, first > 0");
    const complexd dir = unit_dir(spec.get("dir", 0.0));
    std::vector<Entry> entries;
    double r = first;
    for (long long k = 0; k < n; ++k, r *= ratio) entries.push_back({r * dir, 1});
    return PointDistribution::from_points(std::move(entries),
                                          first * std::pow(ratio, static_cast<double>(n - 1)));
}

PointDistribution gen_lattice(const GeneratorSpec& spec) {
    const long long m = int_param(spec.require("m"), "m");
    const double spacing = spec.get("spacing", 1.0);
    if (!(spacing > 0.0)) throw Error("lattice spacing must be positive");
    const complexd rot = unit_dir(spec.get("rot", 0.0));
    std::vector<Entry> entries;
    entries.reserve(static_cast<std::size_t>(m * m));
    for (long long j = 1; j <= m; ++j)
        for (long long k = 1; k <= m; ++k)
            entries.push_back(
                {complexd(static_cast<double>(j), static_cast<double>(k)) * spacing * rot, 1});
    const double corner = std::sqrt(2.0) * static_cast<double>(m) * spacing;
    return PointDistribution::from_points(std::move(entries), corner * (1.0 + 1e-12));
}

PointDistribution gen_sector(const GeneratorSpec& spec) {
    const double theta = spec.get("theta", 0.0);
    const double a = spec.get("a", kPi / 4.0);
    const double density = spec.get("density", 1.0);
    const double horizon = spec.require("horizon");
    if (!(a > 0.0) || a > kPi / 2.0) throw Error("sector half-angle must lie in (0, pi/2]");
    if (!(density > 0.0) || !(horizon > 0.0))
        throw Error("sector requires density > 0 and horizon > 0");
    SplitMix64 rng(static_cast<std::uint64_t>(spec.get("seed", 1.0)));
    std::vector<Entry> entries;
    // Unit-rate renewal radii scaled by 1/density: count in |z|<=r is
    // Poisson with mean density*r.
    double r = 0.0;
    while (true) {
        r += rng.exponential(density);
        if (r > horizon) break;
        const double phi = theta + rng.uniform(-a, a);
        entries.push_back({r * std::polar(1.0, phi), 1});
    }
    return PointDistribution::from_points(std::move(entries), horizon);
}

}  // namespace

PointDistribution generate(const GeneratorSpec& spec) {
    PointDistribution dist;
    if (spec.kind == "arith")
        dist = gen_arith(spec);
    else if (spec.kind == "geom")
        dist = gen_geom(spec);
    else if (spec.kind == "lattice")
        dist = gen_lattice(spec);
    else if (spec.kind == "sector")
        dist = gen_sector(spec);
    else
        throw Error("unknown generator kind '" + spec.kind + "'");
    return dist.with_source(spec.canonical());
}

}  // namespace logdens
