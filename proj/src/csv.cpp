#include "nlcl/csv.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "nlcl/error.hpp"

namespace nlcl {

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string snapshot_csv(const Snapshot& snapshot, const Grid& grid) {
  std::string out = "x,rho\n";
  out.reserve(out.size() + snapshot.rho.size() * 48);
  for (std::size_t j = 0; j < snapshot.rho.size(); ++j) {
    out += format_real(grid.cell_center(static_cast<long>(j)));
    out += ',';
    out += format_real(snapshot.rho[j]);
    out += '\n';
  }
  return out;
}

std::string series_csv(const DiagnosticsSeries& series) {
  std::string out = "t,l1,linf,tv,entropy_residual,bound_linf,bound_tv\n";
  for (const DiagnosticsRecord& r : series.records) {
    for (double v : {r.t, r.l1, r.linf, r.tv, r.entropy_residual, r.bound_linf}) {
      out += format_real(v);
      out += ',';
    }
    out += format_real(r.bound_tv);
    out += '\n';
  }
  return out;
}

void write_file(const std::string& path, const std::string& contents) {
  const std::filesystem::path p(path);
  std::error_code ec;
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path(), ec);
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::io, "cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorKind::io, "failed writing '" + path + "'");
}

void write_csv(const Snapshot& snapshot, const Grid& grid, const std::string& path) {
  write_file(path, snapshot_csv(snapshot, grid));
}

void write_csv(const DiagnosticsSeries& series, const std::string& path) {
  write_file(path, series_csv(series));
}

}  // namespace nlcl
