#ifndef RCS_CLI_EMIT_HPP
#define RCS_CLI_EMIT_HPP

#include <string>
#include <vector>

#include "rcs/spectral.hpp"

namespace rcs::cli {

using Metadata = std::vector<std::pair<std::string, std::string>>;

std::string classification_name(Classification c);
Classification classification_from_name(const std::string& s);

/// CSV: "# key = value" header block, then one row per point, complex values
/// as (re, im) column pairs printed with 17 significant digits.
void write_points_csv(const std::string& path, const Metadata& meta,
                      const std::vector<SpectrumPoint>& pts);

/// JSON mirror of the CSV content; doubles round-trip bit exactly.
void write_points_json(const std::string& path, const Metadata& meta,
                       const std::vector<SpectrumPoint>& pts);

struct ParsedPoints {
    Metadata meta;
    std::vector<SpectrumPoint> points;
};

ParsedPoints read_points_csv(const std::string& path);
ParsedPoints read_points_json(const std::string& path);

/// Sweep export: trajectory rows (theta, trajectory id, re E, im E) and the
/// per-theta cut curve (theta, xi, re E, im E).
void write_sweep_csv(const std::string& traj_path, const std::string& cut_path,
                     const Metadata& meta, const SweepResult& sw);
void write_sweep_json(const std::string& path, const Metadata& meta,
                      const SweepResult& sw);

} // namespace rcs::cli

#endif
