#pragma once

// Parameter-grid evaluation of the concurrence and CSV output.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "xyzent/reductions.hpp"

namespace xyzent {

/// Invalid run configuration; field() names the offending setting.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class AxisParam { j_x, j_y, j_z, B, b, D, kT, j_plus_over_kT, j_minus_over_j_plus };

std::string_view to_string(AxisParam p);
std::optional<AxisParam> parse_axis_param(std::string_view name);

struct Axis {
  AxisParam param = AxisParam::kT;
  double start = 0.0;
  double stop = 1.0;
  int count = 2;

  /// count points from start to stop inclusive; both endpoints are exact.
  std::vector<double> values() const;
};

/// Parses "name:start:stop:count".
Axis parse_axis(std::string_view spec, const std::string& field = "axis");

enum class SweepMode { concurrence, threshold, figure };

struct SweepConfig {
  ModelParams base;
  double kT = 1.0;
  Axis axis1;
  std::optional<Axis> axis2;
  SweepMode mode = SweepMode::concurrence;
  std::optional<int> figure_id;
  std::string output_path;

  /// Throws ConfigError naming the offending field.
  void validate() const;
};

struct SweepRow {
  double axis1 = 0.0;
  double axis2 = 0.0;
  double c_closed = 0.0;
  double c_numeric = 0.0;
  double abs_diff = 0.0;
  double aux = 0.0;  // only emitted when the table names an aux column
};

struct SweepTable {
  std::vector<SweepRow> rows;
  /// Extra trailing column, e.g. "f_T" for the pure-XYZ temperature figures.
  std::string aux_name;
};

/// One row per grid point, axis1 major. In concurrence mode c_closed comes
/// from the cataloged case formula and c_numeric from the full numeric
/// pipeline; uncataloged points repeat c_numeric with abs_diff 0. In
/// threshold mode the two columns hold the critical temperature from the
/// case formula and from numeric bisection (0 when none exists), and the kT
/// axis is not allowed. Figure mode delegates to reproduce_figure.
/// An absent axis2 is reported as 0 in the axis2 column.
SweepTable run_sweep(const SweepConfig& config);

/// Grid definitions behind the six figures:
///  1  XY antiferromagnet, J+/kT in [0, 6] x J-/J+ in [0, 3], 61 x 61
///  2  XY ferromagnet, J+/kT in [-6, 0] x J-/J+ in [0, 3], 61 x 61
///  3  XYZ (Jz, Jy, Jx) = (3, 2, 1), kT in [0.05, 5], 200 points, plus f(T)
///  4  XYZ (Jz, Jy, Jx) = (-3, -2, -1), same axis, plus f(T)
///  5  figure 3 couplings, D in [0, 5] (61) x the figure 3 kT axis
///  6  figure 4 couplings, same axes as 5
SweepConfig figure_config(int figure_id);
SweepTable reproduce_figure(int figure_id);

/// Shortest form that carries 17 significant digits.
std::string format_number(double v);

void write_csv(const SweepTable& table, std::ostream& out);
/// Writes header + rows with LF endings. Throws IoError with the path.
void emit_csv(const SweepTable& table, const std::string& path);
SweepTable parse_csv(std::istream& in);

}  // namespace xyzent
