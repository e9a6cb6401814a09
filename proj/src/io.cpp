#include "logdens/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace logdens {

namespace fs = std::filesystem;

std::string format_g12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string format_exact(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

void atomic_write(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open '" + tmp.string() + "' for writing");
        out << content;
        if (!out) throw Error("write to '" + tmp.string() + "' failed");
    }
    fs::rename(tmp, path);
}

namespace {

std::string strip(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& token, const std::string& context) {
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size())
        throw Error("cannot parse number '" + token + "' in " + context);
    return v;
}

}  // namespace

PointDistribution read_distribution(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open distribution file '" + path.string() + "'");
    std::vector<Entry> entries;
    std::optional<double> truncation;
    std::string source;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string ctx = path.string() + ":" + std::to_string(lineno);
        std::string text = strip(line);
        if (text.empty()) continue;
        if (text.front() == '#') {
            const std::string directive = strip(text.substr(1));
            if (directive.rfind("truncation_radius:", 0) == 0)
                truncation = parse_double(strip(directive.substr(18)), ctx);
            else if (directive.rfind("source:", 0) == 0)
                source = strip(directive.substr(7));
            continue;
        }
        const auto hash = text.find('#');
        if (hash != std::string::npos) text = strip(text.substr(0, hash));
        std::istringstream fields(text);
        std::string re_tok, im_tok, mult_tok;
        if (!(fields >> re_tok >> im_tok))
            throw Error("expected 're im [mult]' at " + ctx);
        Entry entry;
        entry.point = {parse_double(re_tok, ctx), parse_double(im_tok, ctx)};
        if (fields >> mult_tok) {
            char* end = nullptr;
            const long long m = std::strtoll(mult_tok.c_str(), &end, 10);
            if (end != mult_tok.c_str() + mult_tok.size() || m < 1)
                throw Error("multiplicity must be a finite positive integer at " + ctx);
            entry.multiplicity = m;
        }
        std::string extra;
        if (fields >> extra) throw Error("trailing tokens at " + ctx);
        entries.push_back(entry);
    }
    if (truncation && std::isinf(*truncation))
        truncation = std::nullopt;  // from_points defaults handle it
    PointDistribution dist = PointDistribution::from_points(std::move(entries), truncation);
    if (!source.empty()) dist = dist.with_source(source);
    return dist;
}

std::string distribution_to_string(const PointDistribution& dist) {
    std::ostringstream out;
    out << "# logdens distribution: re im mult\n";
    if (!dist.source().empty()) out << "# source: " << dist.source() << "\n";
    if (std::isfinite(dist.truncation_radius()))
        out << "# truncation_radius: " << format_exact(dist.truncation_radius()) << "\n";
    for (const Entry& e : dist.entries()) {
        out << format_exact(e.point.real()) << ' ' << format_exact(e.point.imag());
        if (e.multiplicity != 1) out << ' ' << e.multiplicity;
        out << '\n';
    }
    return out.str();
}

void write_distribution(const fs::path& path, const PointDistribution& dist) {
    atomic_write(path, distribution_to_string(dist));
}

IntervalMeasureTable read_table_csv(const fs::path& path, Provenance provenance) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open table file '" + path.string() + "'");
    std::string line;
    if (!std::getline(in, line) || strip(line) != "r,R,value")
        throw Error("table CSV must start with the header 'r,R,value'");
    std::map<std::pair<double, double>, double> cells;
    std::vector<double> radii;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string text = strip(line);
        if (text.empty()) continue;
        std::istringstream fields(text);
        std::string r_tok, big_tok, v_tok;
        if (!std::getline(fields, r_tok, ',') || !std::getline(fields, big_tok, ',') ||
            !std::getline(fields, v_tok))
            throw Error("bad table row at line " + std::to_string(lineno));
        const std::string ctx = path.string() + ":" + std::to_string(lineno);
        const double r = parse_double(strip(r_tok), ctx);
        const double R = parse_double(strip(big_tok), ctx);
        const double v = parse_double(strip(v_tok), ctx);
        cells[{r, R}] = v;
        radii.push_back(r);
        radii.push_back(R);
    }
    std::sort(radii.begin(), radii.end());
    radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
    const std::size_t m = radii.size();
    std::vector<double> values;
    values.reserve(m * (m - 1) / 2);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            auto it = cells.find({radii[i], radii[j]});
            if (it == cells.end())
                throw Error("table CSV is missing the pair (" + format_g12(radii[i]) + ", " +
                            format_g12(radii[j]) + ")");
            values.push_back(it->second);
        }
    }
    return IntervalMeasureTable(std::move(radii), std::move(values), provenance);
}

std::string table_to_csv(const IntervalMeasureTable& table) {
    std::ostringstream out;
    out << "r,R,value\n";
    const int m = table.point_count();
    const auto& radii = table.radii();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            out << format_g12(radii[static_cast<std::size_t>(i)]) << ','
                << format_g12(radii[static_cast<std::size_t>(j)]) << ','
                << format_g12(table.value(i, j)) << '\n';
    return out.str();
}

void write_table_csv(const fs::path& path, const IntervalMeasureTable& table) {
    atomic_write(path, table_to_csv(table));
}

ConvexBody parse_body(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<complexd> polygon_vertices;
    while (std::getline(in, line)) {
        std::string t = strip(line);
        if (t.empty() || t.front() == '#') continue;
        std::istringstream fields(t);
        std::string kind;
        fields >> kind;
        if (kind == "polygon:") {
            double re, im;
            if (!(fields >> re >> im)) throw Error("polygon line needs 're im'");
            polygon_vertices.emplace_back(re, im);
        } else if (kind == "disk:") {
            double re, im, r;
            if (!(fields >> re >> im >> r)) throw Error("disk line needs 're im r'");
            if (!polygon_vertices.empty()) throw Error("mixed body kinds in one file");
            return ConvexBody(Disk{{re, im}, r});
        } else if (kind == "strip:") {
            double phi, b, offset = 0.0;
            if (!(fields >> phi >> b)) throw Error("strip line needs 'phi b [offset]'");
            fields >> offset;
            if (!polygon_vertices.empty()) throw Error("mixed body kinds in one file");
            return ConvexBody(Strip{phi, b, offset});
        } else {
            throw Error("unknown body line '" + t + "'");
        }
    }
    if (polygon_vertices.empty()) return ConvexBody();
    return ConvexBody(Polygon{std::move(polygon_vertices)});
}

ConvexBody read_body(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open body file '" + path.string() + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_body(buffer.str());
}

std::string density_report_to_csv(const DensityReport& report) {
    std::ostringstream out;
    out << "quantity,value\n";
    out << "bar," << format_g12(report.bar) << '\n';
    out << "underline," << format_g12(report.underline) << '\n';
    out << "inf," << format_g12(report.inf_variant) << '\n';
    out << "b," << format_g12(report.b_variant) << '\n';
    out << "spread," << format_g12(report.spread) << '\n';
    out << "relative_spread," << format_g12(report.relative_spread) << '\n';
    out << "tail_slope," << format_g12(report.tail_slope) << '\n';
    out << "converged," << (report.converged ? 1 : 0) << '\n';
    out << "value," << (report.value ? format_g12(*report.value) : std::string("nan")) << '\n';
    out << "largest_block_exponent," << report.largest_block_exponent << '\n';
    return out.str();
}

std::string verdicts_to_csv(std::span<const CompletenessVerdict> verdicts) {
    std::ostringstream out;
    out << "theorem,clause,b,theta,verdict,margin,flags\n";
    for (const CompletenessVerdict& v : verdicts) {
        std::string clause = v.clause;
        std::replace(clause.begin(), clause.end(), ',', ';');
        out << v.criterion << ",\"" << clause << "\"," << format_g12(v.b) << ','
            << format_g12(v.theta) << ',' << to_string(v.verdict) << ','
            << format_g12(v.margin) << ',' << v.flags_joined() << '\n';
    }
    return out.str();
}

}  // namespace logdens
