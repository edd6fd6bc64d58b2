#pragma once

#include <string>

#include "nlcl/diagnostics.hpp"
#include "nlcl/grid.hpp"
#include "nlcl/run.hpp"

namespace nlcl {

/// 17 significant digits, shortest exact round-trip is not attempted.
std::string format_real(double value);

std::string snapshot_csv(const Snapshot& snapshot, const Grid& grid);
std::string series_csv(const DiagnosticsSeries& series);

/// Writes `contents` to `path`, creating parent directories. Throws ErrorKind::io.
void write_file(const std::string& path, const std::string& contents);

void write_csv(const Snapshot& snapshot, const Grid& grid, const std::string& path);
void write_csv(const DiagnosticsSeries& series, const std::string& path);

}  // namespace nlcl
