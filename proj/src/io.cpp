#include "hypspec/io.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <map>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hypspec::io {

namespace {

void expect(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error("io: malformed mesh file: " + what);
}

double parse_double(const std::string& tok) {
  size_t pos = 0;
  const double v = std::stod(tok, &pos);
  expect(pos == tok.size(), "bad number '" + tok + "'");
  return v;
}

}  // namespace

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::uint64_t config_hash(const std::string& config) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : config) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string dump_mesh(const surface::SurfaceMesh& mesh) {
  std::ostringstream out;
  out << "hypspec-mesh v1\n";
  out << "genus " << mesh.genus << "\n";
  out << "params " << format_full(mesh.params.h) << ' ' << mesh.params.n_theta
      << ' ' << format_full(mesh.params.delta_cut) << "\n";
  out << "counts " << mesh.vertices.size() << ' ' << mesh.triangles.size()
      << ' ' << mesh.charts.size() << ' ' << mesh.identifications.size()
      << "\n";
  // chart table in chart-id order; hexagon node tables are not serialized
  // (identifications already encode the gluing)
  for (const auto& ref : mesh.charts) {
    switch (ref.kind) {
      case surface::ChartRef::kCollar: {
        const auto& c = mesh.collar_charts[ref.index];
        out << "chart collar " << c.curve << ' ' << format_full(c.ell) << ' '
            << format_full(c.s_min) << ' ' << format_full(c.s_max) << ' '
            << c.n_s << ' ' << c.n_theta << ' ' << c.first_vertex << "\n";
        break;
      }
      case surface::ChartRef::kHexagon: {
        const auto& hx = mesh.hex_charts[ref.index];
        out << "chart hex " << hx.pants << ' ' << hx.half << ' '
            << hx.first_vertex << ' ' << hx.n_vertices << "\n";
        break;
      }
      case surface::ChartRef::kFlat:
        out << "chart flat\n";
        break;
    }
  }
  for (const auto& v : mesh.vertices)
    out << "v " << v.chart << ' ' << format_full(v.x) << ' ' << format_full(v.y)
        << ' ' << format_full(v.rho) << "\n";
  for (const auto& t : mesh.triangles)
    out << "t " << t.v[0] << ' ' << t.v[1] << ' ' << t.v[2] << "\n";
  for (const auto& id : mesh.identifications)
    out << "id " << id[0] << ' ' << id[1] << "\n";
  return out.str();
}

surface::SurfaceMesh load_mesh(std::istream& in) {
  surface::SurfaceMesh mesh;
  std::string line;
  expect(static_cast<bool>(std::getline(in, line)), "empty input");
  expect(line == "hypspec-mesh v1", "bad magic line");

  auto tokens_of = [&](const std::string& l) {
    std::istringstream ss(l);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
  };

  size_t nv = 0, ntri = 0, ncharts = 0, nid = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto tok = tokens_of(line);
    if (tok[0] == "genus") {
      expect(tok.size() == 2, "genus line");
      mesh.genus = std::stoi(tok[1]);
    } else if (tok[0] == "params") {
      expect(tok.size() == 4, "params line");
      mesh.params.h = parse_double(tok[1]);
      mesh.params.n_theta = std::stoi(tok[2]);
      mesh.params.delta_cut = parse_double(tok[3]);
    } else if (tok[0] == "counts") {
      expect(tok.size() == 5, "counts line");
      nv = std::stoul(tok[1]);
      ntri = std::stoul(tok[2]);
      ncharts = std::stoul(tok[3]);
      nid = std::stoul(tok[4]);
      mesh.vertices.reserve(nv);
      mesh.triangles.reserve(ntri);
    } else if (tok[0] == "chart") {
      expect(tok.size() >= 2, "chart line");
      if (tok[1] == "collar") {
        expect(tok.size() == 9, "collar chart line");
        surface::CollarChart c;
        c.curve = std::stoi(tok[2]);
        c.ell = parse_double(tok[3]);
        c.s_min = parse_double(tok[4]);
        c.s_max = parse_double(tok[5]);
        c.n_s = std::stoi(tok[6]);
        c.n_theta = std::stoi(tok[7]);
        c.first_vertex = std::stoi(tok[8]);
        mesh.charts.push_back({surface::ChartRef::kCollar,
                               static_cast<int>(mesh.collar_charts.size())});
        mesh.collar_charts.push_back(c);
      } else if (tok[1] == "hex") {
        expect(tok.size() == 6, "hex chart line");
        surface::HexChart hx;
        hx.pants = std::stoi(tok[2]);
        hx.half = std::stoi(tok[3]);
        hx.first_vertex = std::stoi(tok[4]);
        hx.n_vertices = std::stoi(tok[5]);
        mesh.charts.push_back({surface::ChartRef::kHexagon,
                               static_cast<int>(mesh.hex_charts.size())});
        mesh.hex_charts.push_back(hx);
      } else if (tok[1] == "flat") {
        mesh.charts.push_back({surface::ChartRef::kFlat, 0});
      } else {
        expect(false, "unknown chart kind");
      }
    } else if (tok[0] == "v") {
      expect(tok.size() == 5, "vertex line");
      mesh.vertices.push_back({std::stoi(tok[1]), parse_double(tok[2]),
                               parse_double(tok[3]), parse_double(tok[4])});
    } else if (tok[0] == "t") {
      expect(tok.size() == 4, "triangle line");
      surface::Triangle t;
      t.v = {std::stoi(tok[1]), std::stoi(tok[2]), std::stoi(tok[3])};
      expect(t.v[0] >= 0 && static_cast<size_t>(t.v[0]) < mesh.vertices.size() &&
                 t.v[1] >= 0 && static_cast<size_t>(t.v[1]) < mesh.vertices.size() &&
                 t.v[2] >= 0 && static_cast<size_t>(t.v[2]) < mesh.vertices.size(),
             "triangle vertex out of range");
      t.chart = mesh.vertices[t.v[0]].chart;
      mesh.triangles.push_back(t);
    } else if (tok[0] == "id") {
      expect(tok.size() == 3, "identification line");
      mesh.identifications.push_back({std::stoi(tok[1]), std::stoi(tok[2])});
    } else {
      expect(false, "unknown record '" + tok[0] + "'");
    }
  }
  expect(mesh.vertices.size() == nv, "vertex count mismatch");
  expect(mesh.triangles.size() == ntri, "triangle count mismatch");
  expect(mesh.charts.size() == ncharts, "chart count mismatch");
  expect(mesh.identifications.size() == nid, "identification count mismatch");

  // rebuild the dof map exactly as build_mesh does
  std::vector<int> parent(mesh.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& id : mesh.identifications) {
    expect(id[0] >= 0 && static_cast<size_t>(id[0]) < mesh.vertices.size() &&
               id[1] >= 0 && static_cast<size_t>(id[1]) < mesh.vertices.size(),
           "identification out of range");
    parent[find(id[0])] = find(id[1]);
  }
  std::map<int, int> root_to_dof;
  mesh.vertex_dof.resize(mesh.vertices.size());
  for (size_t v = 0; v < mesh.vertices.size(); ++v) {
    const int r = find(static_cast<int>(v));
    auto [it, fresh] = root_to_dof.try_emplace(r, static_cast<int>(root_to_dof.size()));
    mesh.vertex_dof[v] = it->second;
  }
  mesh.n_dofs = static_cast<int>(root_to_dof.size());
  return mesh;
}

surface::SurfaceMesh load_mesh_string(const std::string& text) {
  std::istringstream in(text);
  return load_mesh(in);
}

std::string dump_matrix(const spectrum::SparseSymmetric& m,
                        const std::string& name) {
  std::ostringstream out;
  out << "hypspec-matrix v1 " << name << ' ' << m.rows() << ' ' << m.cols()
      << ' ' << m.nonZeros() << "\n";
  for (int k = 0; k < m.outerSize(); ++k)
    for (spectrum::SparseSymmetric::InnerIterator it(m, k); it; ++it)
      out << it.row() << ' ' << it.col() << ' ' << format_full(it.value())
          << "\n";
  return out.str();
}

CsvTable::CsvTable(std::string command, std::string config,
                   std::vector<std::string> columns)
    : command_(std::move(command)),
      hash_(config_hash(command_ + '\n' + config)),
      columns_(std::move(columns)) {}

void CsvTable::add_row(const std::vector<double>& values) {
  if (values.size() != columns_.size())
    throw std::invalid_argument("io: CSV row width mismatch");
  rows_.push_back(values);
}

std::string CsvTable::str() const {
  std::ostringstream out;
  char hash[20];
  std::snprintf(hash, sizeof hash, "%016" PRIx64, hash_);
  out << "# hypspec v1 " << command_ << ' ' << hash << "\n";
  for (size_t i = 0; i < columns_.size(); ++i)
    out << (i ? "," : "") << columns_[i];
  out << "\n";
  for (const auto& row : rows_) {
    for (size_t i = 0; i < row.size(); ++i)
      out << (i ? "," : "") << format_full(row[i]);
    out << "\n";
  }
  return out.str();
}

void CsvTable::write(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("io: cannot open " + path);
  out << str();
}

void write_svg_plot(const std::string& path, const std::string& title,
                    const std::vector<Series>& series, bool log_x,
                    bool log_y) {
  const int W = 720, H = 480, ML = 70, MR = 20, MT = 40, MB = 50;
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  auto tx = [&](double v) { return log_x ? std::log10(v) : v; };
  auto ty = [&](double v) { return log_y ? std::log10(v) : v; };
  for (const auto& s : series)
    for (size_t i = 0; i < s.x.size(); ++i) {
      xmin = std::min(xmin, tx(s.x[i]));
      xmax = std::max(xmax, tx(s.x[i]));
      ymin = std::min(ymin, ty(s.y[i]));
      ymax = std::max(ymax, ty(s.y[i]));
    }
  if (!(xmax > xmin)) xmax = xmin + 1.0;
  if (!(ymax > ymin)) ymax = ymin + 1.0;
  auto px = [&](double v) { return ML + (tx(v) - xmin) / (xmax - xmin) * (W - ML - MR); };
  auto py = [&](double v) { return H - MB - (ty(v) - ymin) / (ymax - ymin) * (H - MT - MB); };

  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                 "#ff7f0e", "#8c564b"};
  std::ostringstream out;
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='"
      << H << "'>\n<rect width='100%' height='100%' fill='white'/>\n"
      << "<text x='" << W / 2 << "' y='24' text-anchor='middle' "
      << "font-family='sans-serif' font-size='15'>" << title << "</text>\n"
      << "<rect x='" << ML << "' y='" << MT << "' width='" << W - ML - MR
      << "' height='" << H - MT - MB << "' fill='none' stroke='black'/>\n";
  for (size_t si = 0; si < series.size(); ++si) {
    const auto& s = series[si];
    out << "<polyline fill='none' stroke='" << colors[si % 6]
        << "' stroke-width='1.5' points='";
    for (size_t i = 0; i < s.x.size(); ++i)
      out << px(s.x[i]) << ',' << py(s.y[i]) << ' ';
    out << "'/>\n<text x='" << W - MR - 10 << "' y='" << MT + 18 + 16 * si
        << "' text-anchor='end' font-family='sans-serif' font-size='12' fill='"
        << colors[si % 6] << "'>" << s.label << "</text>\n";
  }
  out << "</svg>\n";
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("io: cannot open " + path);
  f << out.str();
}

SurfaceConfig parse_surface_config(const std::string& json_text) {
  const nlohmann::json j = nlohmann::json::parse(json_text);
  SurfaceConfig cfg;
  if (j.contains("pants")) {
    if (j["pants"].is_number_integer())
      cfg.fn.graph.n_pants = j["pants"].get<int>();
    else
      cfg.fn.graph.n_pants = static_cast<int>(j["pants"].size());
  }
  for (const auto& c : j.at("curves")) {
    const auto& slots = c.at("slots");
    if (slots.size() != 2) throw std::runtime_error("io: curve needs 2 slots");
    surface::CurveGluing g;
    g.end0 = {slots[0][0].get<int>(), slots[0][1].get<int>()};
    g.end1 = {slots[1][0].get<int>(), slots[1][1].get<int>()};
    cfg.fn.graph.curves.push_back(g);
    cfg.fn.lengths.push_back(c.at("length").get<double>());
    cfg.fn.twists.push_back(c.value("twist", 0.0));
  }
  if (j.contains("genus") && j["genus"].get<int>() != cfg.fn.graph.genus())
    throw std::runtime_error("io: declared genus does not match pants count");
  if (j.contains("mesh")) {
    const auto& m = j["mesh"];
    cfg.mesh.h = m.value("h", cfg.mesh.h);
    cfg.mesh.n_theta = m.value("n_theta", cfg.mesh.n_theta);
    cfg.mesh.delta_cut = m.value("delta_cut", cfg.mesh.delta_cut);
  }
  return cfg;
}

SurfaceConfig read_surface_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("io: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_surface_config(buf.str());
}

std::string write_surface_config(const SurfaceConfig& config) {
  nlohmann::json j;
  j["genus"] = config.fn.graph.genus();
  j["pants"] = config.fn.graph.n_pants;
  j["curves"] = nlohmann::json::array();
  for (size_t i = 0; i < config.fn.graph.curves.size(); ++i) {
    const auto& c = config.fn.graph.curves[i];
    j["curves"].push_back(
        {{"slots",
          {{c.end0.pants, c.end0.slot}, {c.end1.pants, c.end1.slot}}},
         {"length", config.fn.lengths[i]},
         {"twist", config.fn.twists[i]}});
  }
  j["mesh"] = {{"h", config.mesh.h},
               {"n_theta", config.mesh.n_theta},
               {"delta_cut", config.mesh.delta_cut}};
  return j.dump(2) + "\n";
}

}  // namespace hypspec::io
