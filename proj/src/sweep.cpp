#include "xyzent/sweep.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace xyzent {

namespace {

constexpr std::array<std::pair<AxisParam, std::string_view>, 9> kAxisNames{{
    {AxisParam::j_x, "j_x"},
    {AxisParam::j_y, "j_y"},
    {AxisParam::j_z, "j_z"},
    {AxisParam::B, "B"},
    {AxisParam::b, "b"},
    {AxisParam::D, "D"},
    {AxisParam::kT, "kT"},
    {AxisParam::j_plus_over_kT, "j_plus_over_kT"},
    {AxisParam::j_minus_over_j_plus, "j_minus_over_j_plus"},
}};

constexpr std::string_view kCsvHeader = "axis1,axis2,c_closed,c_numeric,abs_diff";

double parse_double(std::string_view s, const std::string& field) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ConfigError(field, "expected a number, got '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t begin = 0;
  while (true) {
    const std::size_t end = s.find(sep, begin);
    parts.push_back(s.substr(begin, end == std::string_view::npos ? std::string_view::npos : end - begin));
    if (end == std::string_view::npos) break;
    begin = end + 1;
  }
  return parts;
}

// Derived axes depend on kT and on J+, so plain couplings are set first.
int apply_rank(AxisParam p) {
  switch (p) {
    case AxisParam::j_plus_over_kT: return 1;
    case AxisParam::j_minus_over_j_plus: return 2;
    default: return 0;
  }
}

void apply(AxisParam p, double v, ModelParams& params, double& kT) {
  switch (p) {
    case AxisParam::j_x: params.j_x = v; break;
    case AxisParam::j_y: params.j_y = v; break;
    case AxisParam::j_z: params.j_z = v; break;
    case AxisParam::B: params.field_B = v; break;
    case AxisParam::b: params.field_b = v; break;
    case AxisParam::D: params.dm_D = v; break;
    case AxisParam::kT: kT = v; break;
    case AxisParam::j_plus_over_kT: {
      const double jm = 0.5 * (params.j_x - params.j_y);
      const double jp = v * kT;
      params.j_x = jp + jm;
      params.j_y = jp - jm;
      break;
    }
    case AxisParam::j_minus_over_j_plus: {
      const double jp = 0.5 * (params.j_x + params.j_y);
      const double jm = v * jp;
      params.j_x = jp + jm;
      params.j_y = jp - jm;
      break;
    }
  }
}

struct GridPoint {
  double a1 = 0.0, a2 = 0.0;
  ModelParams params;
  double kT = 1.0;
};

std::vector<GridPoint> grid(const SweepConfig& config) {
  const std::vector<double> v1 = config.axis1.values();
  const std::vector<double> v2 = config.axis2 ? config.axis2->values() : std::vector<double>{0.0};
  std::vector<GridPoint> points;
  points.reserve(v1.size() * v2.size());
  for (double a1 : v1) {
    for (double a2 : v2) {
      GridPoint g{a1, a2, config.base, config.kT};
      for (int rank = 0; rank < 3; ++rank) {
        if (apply_rank(config.axis1.param) == rank) apply(config.axis1.param, a1, g.params, g.kT);
        if (config.axis2 && apply_rank(config.axis2->param) == rank) apply(config.axis2->param, a2, g.params, g.kT);
      }
      points.push_back(g);
    }
  }
  return points;
}

SweepRow concurrence_row(const GridPoint& g) {
  const Temperature kT(g.kT);
  SweepRow row{g.a1, g.a2, 0.0, 0.0, 0.0, 0.0};
  row.c_numeric = numeric_concurrence(g.params, kT).concurrence;
  const auto closed = closed_form_concurrence(classify(g.params), g.params, kT);
  row.c_closed = closed.value_or(row.c_numeric);
  row.abs_diff = std::abs(row.c_closed - row.c_numeric);
  return row;
}

SweepRow threshold_row(const GridPoint& g) {
  SweepRow row{g.a1, g.a2, 0.0, 0.0, 0.0, 0.0};
  const Threshold closed = critical_temperature(classify(g.params), g.params);
  const Threshold numeric = critical_temperature_numeric(g.params);
  row.c_closed = closed.exists() ? closed.value : 0.0;
  row.c_numeric = numeric.exists() ? numeric.value : 0.0;
  row.abs_diff = std::abs(row.c_closed - row.c_numeric);
  return row;
}

}  // namespace

std::string_view to_string(AxisParam p) {
  for (const auto& [param, name] : kAxisNames)
    if (param == p) return name;
  return "?";
}

std::optional<AxisParam> parse_axis_param(std::string_view name) {
  for (const auto& [param, n] : kAxisNames)
    if (n == name) return param;
  return std::nullopt;
}

std::vector<double> Axis::values() const {
  std::vector<double> v(static_cast<std::size_t>(std::max(count, 0)));
  if (count <= 0) return v;
  if (count == 1) {
    v[0] = start;
    return v;
  }
  const double span = stop - start;
  for (int i = 0; i < count; ++i) v[static_cast<std::size_t>(i)] = start + span * i / (count - 1);
  v.back() = stop;
  return v;
}

Axis parse_axis(std::string_view spec, const std::string& field) {
  const auto parts = split(spec, ':');
  if (parts.size() != 4) throw ConfigError(field, "expected name:start:stop:count, got '" + std::string(spec) + "'");
  const auto param = parse_axis_param(parts[0]);
  if (!param) throw ConfigError(field, "unknown parameter name '" + std::string(parts[0]) + "'");
  Axis a;
  a.param = *param;
  a.start = parse_double(parts[1], field);
  a.stop = parse_double(parts[2], field);
  int count = 0;
  const auto [ptr, ec] = std::from_chars(parts[3].data(), parts[3].data() + parts[3].size(), count);
  if (ec != std::errc() || ptr != parts[3].data() + parts[3].size())
    throw ConfigError(field, "count must be an integer, got '" + std::string(parts[3]) + "'");
  a.count = count;
  return a;
}

void SweepConfig::validate() const {
  try {
    base.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("base", e.what());
  }
  const auto check_axis = [](const Axis& a, const std::string& field) {
    if (a.count < 2) throw ConfigError(field, "count must be >= 2");
    if (!std::isfinite(a.start) || !std::isfinite(a.stop)) throw ConfigError(field, "range must be finite");
    if (!(a.start < a.stop)) throw ConfigError(field, "start must be < stop");
    if (a.param == AxisParam::kT && !(a.start > 0.0)) throw ConfigError(field, "kT values must be > 0");
  };

  if (mode == SweepMode::figure) {
    if (!figure_id || *figure_id < 1 || *figure_id > 6) throw ConfigError("figure", "figure id must be in 1..6");
    return;
  }
  check_axis(axis1, "axis1");
  if (axis2) {
    check_axis(*axis2, "axis2");
    if (axis2->param == axis1.param) throw ConfigError("axis2", "must differ from axis1");
  }
  const bool kT_swept = axis1.param == AxisParam::kT || (axis2 && axis2->param == AxisParam::kT);
  if (!kT_swept && !(kT > 0.0 && std::isfinite(kT))) throw ConfigError("kT", "must be finite and > 0");
  if (mode == SweepMode::threshold && kT_swept)
    throw ConfigError(axis1.param == AxisParam::kT ? "axis1" : "axis2", "threshold mode solves for kT; do not sweep it");
}

SweepTable run_sweep(const SweepConfig& config) {
  config.validate();
  if (config.mode == SweepMode::figure) return reproduce_figure(*config.figure_id);

  SweepTable table;
  for (const GridPoint& g : grid(config))
    table.rows.push_back(config.mode == SweepMode::threshold ? threshold_row(g) : concurrence_row(g));
  return table;
}

SweepConfig figure_config(int figure_id) {
  SweepConfig c;
  c.kT = 1.0;
  const Axis kT_axis{AxisParam::kT, 0.05, 5.0, 200};
  const Axis dm_axis{AxisParam::D, 0.0, 5.0, 61};
  const Axis ratio_axis{AxisParam::j_minus_over_j_plus, 0.0, 3.0, 61};
  switch (figure_id) {
    case 1:
      c.axis1 = {AxisParam::j_plus_over_kT, 0.0, 6.0, 61};
      c.axis2 = ratio_axis;
      break;
    case 2:
      c.axis1 = {AxisParam::j_plus_over_kT, -6.0, 0.0, 61};
      c.axis2 = ratio_axis;
      break;
    case 3:
    case 5:
      c.base = {1.0, 2.0, 3.0, 0.0, 0.0, 0.0};
      break;
    case 4:
    case 6:
      c.base = {-1.0, -2.0, -3.0, 0.0, 0.0, 0.0};
      break;
    default:
      throw ConfigError("figure", "figure id must be in 1..6, got " + std::to_string(figure_id));
  }
  if (figure_id == 3 || figure_id == 4) c.axis1 = kT_axis;
  if (figure_id == 5 || figure_id == 6) {
    c.axis1 = dm_axis;
    c.axis2 = kT_axis;
  }
  return c;
}

SweepTable reproduce_figure(int figure_id) {
  SweepTable table = run_sweep(figure_config(figure_id));
  if (figure_id == 3 || figure_id == 4) {
    const ModelParams p = figure_config(figure_id).base;
    table.aux_name = "f_T";
    for (SweepRow& row : table.rows) row.aux = xyz_entanglement_function(p, Temperature(row.axis1));
  }
  return table;
}

std::string format_number(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  return std::string(buf.data(), ptr);
}

void write_csv(const SweepTable& table, std::ostream& out) {
  out << kCsvHeader;
  if (!table.aux_name.empty()) out << ',' << table.aux_name;
  out << '\n';
  for (const SweepRow& r : table.rows) {
    out << format_number(r.axis1) << ',' << format_number(r.axis2) << ',' << format_number(r.c_closed) << ','
        << format_number(r.c_numeric) << ',' << format_number(r.abs_diff);
    if (!table.aux_name.empty()) out << ',' << format_number(r.aux);
    out << '\n';
  }
}

void emit_csv(const SweepTable& table, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_csv(table, out);
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

SweepTable parse_csv(std::istream& in) {
  SweepTable table;
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("csv", "missing header");
  const auto header = split(line, ',');
  if (header.size() < 5 || line.substr(0, kCsvHeader.size()) != kCsvHeader)
    throw ConfigError("csv", "unexpected header '" + line + "'");
  if (header.size() == 6) table.aux_name = std::string(header[5]);

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != header.size()) throw ConfigError("csv", "wrong field count in '" + line + "'");
    SweepRow r;
    r.axis1 = parse_double(f[0], "csv");
    r.axis2 = parse_double(f[1], "csv");
    r.c_closed = parse_double(f[2], "csv");
    r.c_numeric = parse_double(f[3], "csv");
    r.abs_diff = parse_double(f[4], "csv");
    if (f.size() == 6) r.aux = parse_double(f[5], "csv");
    table.rows.push_back(r);
  }
  return table;
}

}  // namespace xyzent
