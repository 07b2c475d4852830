#ifndef UAVDEPLOY_OUTPUT_HPP
#define UAVDEPLOY_OUTPUT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "uavdeploy/tessellation.hpp"

namespace uavdeploy {

/// Shortest text that reads back to the same double.
std::string format_double(double v);

/// Small row-oriented CSV builder; values are written with format_double.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  CsvTable &row();
  CsvTable &add(double v);
  CsvTable &add(std::int64_t v);
  CsvTable &add(std::size_t v) { return add(static_cast<std::int64_t>(v)); }
  CsvTable &add(int v) { return add(static_cast<std::int64_t>(v)); }
  CsvTable &add(const std::string &v);

  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Writes to `path.tmp` and renames over `path`.
void write_file_atomic(const std::string &path, const std::string &content);

std::uint64_t fnv1a64(const std::string &text);

/// Binary PPM (P6) of the owner raster, one colour per UAV, black squares
/// at the UAV ground positions, grey outside the region.
std::string render_cells_ppm(const AssignmentGrid &grid, const Deployment &deployment);

std::string deployment_csv(const Deployment &deployment);
std::string cells_csv(const AssignmentGrid &grid);

}  // namespace uavdeploy

#endif
