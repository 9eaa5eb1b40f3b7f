// xyzent: thermal concurrence of the two-qubit XYZ model from the command line.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "xyzent/sweep.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIo = 1;

struct Options {
  xyzent::ModelParams params;
  double kT = 1.0;

  std::string axis1, axis2, mode = "concurrence", out;
  std::string kind = "temperature";
  bool numeric = false;
  int figure_id = 0;
};

void write_table(const xyzent::SweepTable& table, const std::string& out) {
  if (out.empty() || out == "-") {
    xyzent::write_csv(table, std::cout);
    std::cout.flush();
    if (!std::cout) throw xyzent::IoError("failed writing to stdout");
  } else {
    xyzent::emit_csv(table, out);
  }
}

std::string threshold_text(const xyzent::Threshold& t) {
  return t.exists() ? xyzent::format_number(t.value) : std::string("none");
}

void run_eval(const Options& o) {
  const xyzent::Temperature kT(o.kT);
  const xyzent::ModelCase c = xyzent::classify(o.params);
  const xyzent::ConcurrenceResult numeric = xyzent::numeric_concurrence(o.params, kT);
  const auto closed = xyzent::closed_form_concurrence(c, o.params, kT);

  std::cout << "case " << c.describe() << '\n';
  std::cout << "C_numeric " << xyzent::format_number(numeric.concurrence) << '\n';
  std::cout << "C_closed " << (closed ? xyzent::format_number(*closed) : std::string("n/a")) << '\n';
  std::cout << "lambdas";
  for (double l : numeric.lambdas) std::cout << ' ' << xyzent::format_number(l);
  std::cout << '\n';
}

void run_sweep_command(const Options& o) {
  xyzent::SweepConfig config;
  config.base = o.params;
  config.kT = o.kT;
  config.axis1 = xyzent::parse_axis(o.axis1, "axis1");
  if (!o.axis2.empty()) config.axis2 = xyzent::parse_axis(o.axis2, "axis2");
  if (o.mode == "threshold") config.mode = xyzent::SweepMode::threshold;
  else if (o.mode != "concurrence") throw xyzent::ConfigError("mode", "expected concurrence or threshold");
  config.output_path = o.out;
  write_table(xyzent::run_sweep(config), o.out);
}

void run_threshold(const Options& o) {
  const xyzent::ModelCase c = xyzent::classify(o.params);
  if (o.kind == "temperature") {
    const xyzent::Threshold t =
        o.numeric ? xyzent::critical_temperature_numeric(o.params) : xyzent::critical_temperature(c, o.params);
    std::cout << "kT_c " << threshold_text(t) << '\n';
  } else if (o.kind == "dm") {
    const xyzent::Threshold t = xyzent::critical_dm(c, o.params, xyzent::Temperature(o.kT));
    std::cout << "D_c " << threshold_text(t) << '\n';
  } else {
    throw xyzent::ConfigError("kind", "expected temperature or dm");
  }
}

void run_figure(const Options& o) {
  if (o.figure_id < 1 || o.figure_id > 6) throw xyzent::ConfigError("figure", "id must be in 1..6");
  write_table(xyzent::reproduce_figure(o.figure_id), o.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermal entanglement of two qubits in the XYZ Heisenberg model"};
  app.set_version_flag("--version", "xyzent 1.0.0");
  app.set_config("--config", "", "Flat key=value file; keys mirror the flag names");
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--jx", o.params.j_x, "Exchange coupling J_x");
  app.add_option("--jy", o.params.j_y, "Exchange coupling J_y");
  app.add_option("--jz", o.params.j_z, "Exchange coupling J_z");
  app.add_option("--B", o.params.field_B, "Uniform magnetic field");
  app.add_option("--b", o.params.field_b, "Staggered magnetic field");
  app.add_option("--D", o.params.dm_D, "Dzyaloshinskii-Moriya coupling");
  app.add_option("--kT", o.kT, "Temperature in units of energy");

  CLI::App* eval = app.add_subcommand("eval", "Concurrence at a single point");

  CLI::App* sweep = app.add_subcommand("sweep", "Concurrence or kT_c over a 1D or 2D grid, as CSV");
  sweep->add_option("--axis1", o.axis1, "name:start:stop:count")->required();
  sweep->add_option("--axis2", o.axis2, "name:start:stop:count");
  sweep->add_option("--mode", o.mode, "concurrence or threshold");
  sweep->add_option("--out", o.out, "Output CSV path (stdout when omitted)");

  CLI::App* threshold = app.add_subcommand("threshold", "Critical temperature or critical DM coupling");
  threshold->add_option("--kind", o.kind, "temperature or dm");
  threshold->add_flag("--numeric", o.numeric, "Bisect the numeric concurrence instead of the case formula");

  CLI::App* figure = app.add_subcommand("figure", "Data behind one of the six figures, as CSV");
  figure->add_option("id", o.figure_id, "Figure number 1..6")->required();
  figure->add_option("--out", o.out, "Output CSV path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    o.params.validate();
    if (*eval) run_eval(o);
    else if (*sweep) run_sweep_command(o);
    else if (*threshold) run_threshold(o);
    else if (*figure) run_figure(o);
  } catch (const xyzent::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return 0;
}
