// Serialization: mesh dump/load, matrix triplet dump, reproducible CSV
// tables, SVG line plots, and the JSON surface configuration format.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hypspec/spectrum.hpp"
#include "hypspec/surface.hpp"

namespace hypspec::io {

// 17-significant-digit decimal rendering; round-trips binary64 exactly.
std::string format_full(double v);

// FNV-1a of a configuration string; printed in CSV headers so every row can
// be traced back to its exact inputs.
std::uint64_t config_hash(const std::string& config);

// ASCII mesh format, header "hypspec-mesh v1".  dump(load(dump(m))) is byte
// identical to dump(m).
std::string dump_mesh(const surface::SurfaceMesh& mesh);
surface::SurfaceMesh load_mesh(std::istream& in);
surface::SurfaceMesh load_mesh_string(const std::string& text);

// Coordinate-triplet matrix dump with a one-line header (debug aid).
std::string dump_matrix(const spectrum::SparseSymmetric& m,
                        const std::string& name);

// CSV table: "# hypspec v1 <command> <hash>" line, a header row, then data
// rows with full-precision floats.  Identical inputs give identical bytes.
class CsvTable {
 public:
  CsvTable(std::string command, std::string config,
           std::vector<std::string> columns);
  void add_row(const std::vector<double>& values);
  std::string str() const;
  void write(const std::string& path) const;

 private:
  std::string command_;
  std::uint64_t hash_;
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> rows_;
};

// Minimal SVG polyline plot of one or more (x, y) series (convenience
// artifact; nothing downstream parses it).
struct Series {
  std::string label;
  std::vector<double> x, y;
};
void write_svg_plot(const std::string& path, const std::string& title,
                    const std::vector<Series>& series, bool log_x = false,
                    bool log_y = false);

// JSON surface configuration:
// {genus, pants: [...], curves: [{slots: [[p,s],[p,s]], length, twist}],
//  mesh: {h, n_theta, delta_cut}}
struct SurfaceConfig {
  surface::FNCoordinates fn;
  surface::MeshParams mesh;
};
SurfaceConfig parse_surface_config(const std::string& json_text);
SurfaceConfig read_surface_config(const std::string& path);
std::string write_surface_config(const SurfaceConfig& config);

}  // namespace hypspec::io
