#pragma once

// Special cases of the XYZ model (Ising, XX, XY, XXX, XXZ, XYZ with or
// without B, b, D), their closed-form concurrences and the critical
// temperature / critical DM coupling solvers built on them.

#include <optional>
#include <string>
#include <string_view>

#include "xyzent/entanglement.hpp"

namespace xyzent {

enum class ModelTag { Ising, XX, XY, XXX, XXZ, XYZ };
enum class Regime { antiferromagnetic, ferromagnetic, mixed };

struct FieldSet {
  bool B = false;
  bool b = false;
  bool D = false;

  bool none() const { return !B && !b && !D; }
  friend bool operator==(const FieldSet&, const FieldSet&) = default;
};

struct ModelCase {
  ModelTag tag = ModelTag::XYZ;
  Regime regime = Regime::mixed;
  FieldSet active_fields;

  /// e.g. "XXX+D (antiferromagnetic)"
  std::string describe() const;
  friend bool operator==(const ModelCase&, const ModelCase&) = default;
};

std::string_view to_string(ModelTag tag);
std::string_view to_string(Regime regime);

enum class ThresholdKind { critical_temperature, critical_dm, none_exists };

struct Threshold {
  ThresholdKind kind = ThresholdKind::none_exists;
  double value = 0.0;

  bool exists() const { return kind != ThresholdKind::none_exists; }
};

/// Couplings are compared with an absolute tolerance of 1e-12.
/// Precedence: Ising (Jx = Jy = 0), then Jz = 0 (XX or XY), then XXX, XXZ,
/// and XYZ for everything else. The regime follows the sign of the
/// case-defining coupling: Jz for Ising, J = Jx for XX/XXX/XXZ, and the
/// common sign of (Jx, Jy) for XY or (Jx, Jy, Jz) for XYZ.
ModelCase classify(const ModelParams& params);

/// Signed entanglement indicator of the cataloged closed form: positive
/// exactly when the case formula predicts C > 0, and equal to C there.
/// Returns nullopt when the case has no cataloged formula.
/// Throws std::invalid_argument when the case does not match params.
std::optional<double> entanglement_margin(const ModelCase& model_case, const ModelParams& params, Temperature kT);

/// max(margin, 0), or nullopt when no formula is cataloged for the case.
std::optional<double> closed_form_concurrence(const ModelCase& model_case, const ModelParams& params,
                                              Temperature kT);

/// Temperature above which the concurrence vanishes. Closed form for XX
/// (kT_c = sqrt(J^2 + D^2) / asinh 1, for any B) and for the XXX
/// antiferromagnet (kT_c = 2J / ln 3, for any B); bisection on the case
/// formula otherwise. Uncataloged cases fall back to the numeric pipeline.
Threshold critical_temperature(const ModelCase& model_case, const ModelParams& params);

/// Same threshold located by bisection on the numeric concurrence.
Threshold critical_temperature_numeric(const ModelParams& params);

/// Smallest D >= 0 with C > 0 at fixed kT, by bisection on the case formula
/// with D as the free variable. Requires B = b = 0. Returns value 0 when the
/// state is already entangled at D = 0.
Threshold critical_dm(const ModelCase& model_case, const ModelParams& params, Temperature kT);

/// The pure-XYZ entanglement function plotted against temperature:
///   f(T) = sinh(J+/kT) - cosh(J-/kT) e^{-Jz/kT}                       (antiferromagnetic)
///   f(T) = sinh(|J-|/kT) - cosh(|J+|/kT) e^{-|Jz|/kT}                 (ferromagnetic)
double xyz_entanglement_function(const ModelParams& params, Temperature kT);

}  // namespace xyzent
