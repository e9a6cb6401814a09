#pragma once

#include <filesystem>
#include <ostream>
#include <span>
#include <string>

#include "logdens/convexgeom.hpp"
#include "logdens/criteria.hpp"
#include "logdens/logmeasure.hpp"

namespace logdens {

/// 12-significant-digit formatting used for all derived numeric output.
std::string format_g12(double x);

/// Shortest round-trip formatting (data files must parse back bit-exact).
std::string format_exact(double x);

/// Writes via a temp file in the same directory, then renames.
void atomic_write(const std::filesystem::path& path, const std::string& content);

// Distribution files: one `re im mult` entry per line (mult optional,
// default 1), `#` comments; the directive `# truncation_radius: <v>` carries
// the horizon.
PointDistribution read_distribution(const std::filesystem::path& path);
std::string distribution_to_string(const PointDistribution& dist);
void write_distribution(const std::filesystem::path& path, const PointDistribution& dist);

// Interval tables as CSV with header `r,R,value`.
IntervalMeasureTable read_table_csv(const std::filesystem::path& path,
                                    Provenance provenance = Provenance::User);
std::string table_to_csv(const IntervalMeasureTable& table);
void write_table_csv(const std::filesystem::path& path, const IntervalMeasureTable& table);

// Body files: `disk: re im r` / `strip: phi b offset` on one line, or one
// `polygon: re im` line per vertex.
ConvexBody read_body(const std::filesystem::path& path);
ConvexBody parse_body(const std::string& text);

std::string density_report_to_csv(const DensityReport& report);

// Verdict CSV: header `theorem,clause,b,theta,verdict,margin,flags`.
std::string verdicts_to_csv(std::span<const CompletenessVerdict> verdicts);

}  // namespace logdens
