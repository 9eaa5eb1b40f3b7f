#include "xyzent/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <initializer_list>
#include <limits>
#include <stdexcept>

namespace xyzent {

std::string_view to_string(ModelTag tag) {
  switch (tag) {
    case ModelTag::Ising: return "Ising";
    case ModelTag::XX: return "XX";
    case ModelTag::XY: return "XY";
    case ModelTag::XXX: return "XXX";
    case ModelTag::XXZ: return "XXZ";
    case ModelTag::XYZ: return "XYZ";
  }
  return "?";
}

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::antiferromagnetic: return "antiferromagnetic";
    case Regime::ferromagnetic: return "ferromagnetic";
    case Regime::mixed: return "mixed";
  }
  return "?";
}

std::string ModelCase::describe() const {
  std::string s(to_string(tag));
  if (active_fields.B) s += "+B";
  if (active_fields.b) s += "+b";
  if (active_fields.D) s += "+D";
  s += " (";
  s += to_string(regime);
  s += ")";
  return s;
}

namespace {

constexpr double kEqualTol = 1e-12;

bool same(double a, double b) { return std::abs(a - b) <= kEqualTol; }
bool zero(double a) { return std::abs(a) <= kEqualTol; }

Regime sign_regime(double j) {
  if (j > kEqualTol) return Regime::antiferromagnetic;
  if (j < -kEqualTol) return Regime::ferromagnetic;
  return Regime::mixed;
}

Regime common_sign_regime(std::initializer_list<double> js) {
  const bool all_pos = std::all_of(js.begin(), js.end(), [](double j) { return j > kEqualTol; });
  const bool all_neg = std::all_of(js.begin(), js.end(), [](double j) { return j < -kEqualTol; });
  if (all_pos) return Regime::antiferromagnetic;
  if (all_neg) return Regime::ferromagnetic;
  return Regime::mixed;
}

// coef * exp(expo)
struct Term {
  double coef;
  double expo;
};

// (sum of num terms) / (sum of den terms), evaluated after factoring out the
// largest exponent so that no intermediate overflows.
double exp_ratio(std::initializer_list<Term> num, std::initializer_list<Term> den) {
  double top = -std::numeric_limits<double>::infinity();
  for (const Term& t : num) top = std::max(top, t.expo);
  for (const Term& t : den) top = std::max(top, t.expo);
  double n = 0.0, d = 0.0;
  for (const Term& t : num) n += t.coef * std::exp(t.expo - top);
  for (const Term& t : den) d += t.coef * std::exp(t.expo - top);
  return n / d;
}

// Dominant {|01>,|10>} block:
//   (sinh b - e^{-jz} cosh jm) / (cosh b + e^{-jz} cosh jm)
// with every argument already divided by kT.
double transverse_branch(double b, double jm, double jz) {
  return exp_ratio({{0.5, b}, {-0.5, -b}, {-0.5, jm - jz}, {-0.5, -jm - jz}},
                   {{0.5, b}, {0.5, -b}, {0.5, jm - jz}, {0.5, -jm - jz}});
}

// Dominant {|00>,|11>} block:
//   (sinh |jm| - e^{jz} cosh b) / (cosh jm + e^{jz} cosh b)
double anisotropy_branch(double b, double jm, double jz) {
  const double a = std::abs(jm);
  return exp_ratio({{0.5, a}, {-0.5, -a}, {-0.5, b + jz}, {-0.5, -b + jz}},
                   {{0.5, a}, {0.5, -a}, {0.5, b + jz}, {0.5, -b + jz}});
}

double raw_margin(const ModelParams& params, Temperature kT) {
  return concurrence_from_lambdas(closed_form_lambdas(params, kT)).margin();
}

void require_consistent(const ModelCase& model_case, const ModelParams& params) {
  const ModelCase actual = classify(params);
  if (!(actual == model_case))
    throw std::invalid_argument("model case " + model_case.describe() + " does not match parameters, which are " +
                                actual.describe());
}

bool is_ising_without_dm(const ModelCase& c) { return c.tag == ModelTag::Ising && !c.active_fields.D; }

Threshold bisect_temperature(const std::function<double(double)>& margin, double scale) {
  if (!(scale > 0.0)) return {};
  double hi = 10.0 * scale;
  for (int i = 0; i < 60 && margin(hi) > 0.0; ++i) hi *= 2.0;
  if (margin(hi) > 0.0) return {};

  double lo = hi;
  bool found = false;
  for (int i = 0; i < 60; ++i) {
    lo *= 0.5;
    if (margin(lo) > 0.0) {
      found = true;
      break;
    }
  }
  if (!found) return {};

  for (int i = 0; i < 200 && hi - lo > 1e-10 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (margin(mid) > 0.0 ? lo : hi) = mid;
  }
  return {ThresholdKind::critical_temperature, 0.5 * (lo + hi)};
}

}  // namespace

ModelCase classify(const ModelParams& params) {
  params.validate();
  ModelCase c;
  c.active_fields = {!zero(params.field_B), !zero(params.field_b), !zero(params.dm_D)};
  const double jx = params.j_x, jy = params.j_y, jz = params.j_z;

  if (zero(jx) && zero(jy)) {
    c.tag = ModelTag::Ising;
    c.regime = sign_regime(jz);
  } else if (zero(jz)) {
    if (same(jx, jy)) {
      c.tag = ModelTag::XX;
      c.regime = sign_regime(jx);
    } else {
      c.tag = ModelTag::XY;
      c.regime = common_sign_regime({jx, jy});
    }
  } else if (same(jx, jy) && same(jy, jz)) {
    c.tag = ModelTag::XXX;
    c.regime = sign_regime(jx);
  } else if (same(jx, jy)) {
    c.tag = ModelTag::XXZ;
    c.regime = sign_regime(jx);
  } else {
    c.tag = ModelTag::XYZ;
    c.regime = common_sign_regime({jx, jy, jz});
  }
  return c;
}

std::optional<double> entanglement_margin(const ModelCase& model_case, const ModelParams& params, Temperature kT) {
  require_consistent(model_case, params);
  const double t = kT.value();
  const Derived d = derive(params);
  const FieldSet& f = model_case.active_fields;
  const bool only_B = f.B && !f.b && !f.D;
  const bool only_b = !f.B && f.b && !f.D;
  const bool only_D = !f.B && !f.b && f.D;
  const double jz = params.j_z / t;

  switch (model_case.tag) {
    case ModelTag::Ising:
      // No transverse coupling: lambda1 = lambda2 and the state is separable.
      if (f.none() || only_B || only_b) return raw_margin(params, kT);
      if (only_D) return transverse_branch(std::abs(params.dm_D) / t, 0.0, jz);
      return std::nullopt;

    case ModelTag::XX: {
      const double j = std::abs(params.j_x) / t;
      if (f.none()) return exp_ratio({{0.5, j}, {-0.5, -j}, {-1.0, 0.0}}, {{0.5, j}, {0.5, -j}, {1.0, 0.0}});
      if (only_B) {
        const double b = params.field_B / t;
        return exp_ratio({{0.5, j}, {-0.5, -j}, {-1.0, 0.0}}, {{0.5, j}, {0.5, -j}, {0.5, b}, {0.5, -b}});
      }
      if (only_D) {
        const double v = std::hypot(params.j_x, params.dm_D) / t;
        return exp_ratio({{0.5, v}, {-0.5, -v}, {-1.0, 0.0}}, {{0.5, v}, {0.5, -v}, {1.0, 0.0}});
      }
      return std::nullopt;
    }

    case ModelTag::XY:
    case ModelTag::XYZ: {
      if (!f.none() && !only_D) return std::nullopt;
      const double b = std::hypot(d.j_plus, params.dm_D) / t;
      const double jm = d.j_minus / t;
      return std::max(transverse_branch(b, jm, jz), anisotropy_branch(b, jm, jz));
    }

    case ModelTag::XXX: {
      const double j = params.j_x / t;
      if (f.none()) return exp_ratio({{1.0, 2.0 * j}, {-3.0, 0.0}}, {{1.0, 2.0 * j}, {3.0, 0.0}});
      if (only_B) {
        const double b = params.field_B / t;
        return exp_ratio({{1.0, 2.0 * j}, {-3.0, 0.0}}, {{1.0, 2.0 * j}, {1.0, 0.0}, {1.0, b}, {1.0, -b}});
      }
      if (only_D) return transverse_branch(std::hypot(params.j_x, params.dm_D) / t, 0.0, j);
      return std::nullopt;
    }

    case ModelTag::XXZ:
      if (f.none() || only_D) return transverse_branch(std::hypot(params.j_x, params.dm_D) / t, 0.0, jz);
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<double> closed_form_concurrence(const ModelCase& model_case, const ModelParams& params,
                                              Temperature kT) {
  const auto m = entanglement_margin(model_case, params, kT);
  if (!m) return std::nullopt;
  return std::max(*m, 0.0);
}

Threshold critical_temperature(const ModelCase& model_case, const ModelParams& params) {
  require_consistent(model_case, params);
  const FieldSet& f = model_case.active_fields;

  if (is_ising_without_dm(model_case)) return {};
  if (model_case.tag == ModelTag::XX && !f.b && !(f.B && f.D)) {
    return {ThresholdKind::critical_temperature, std::hypot(params.j_x, params.dm_D) / std::asinh(1.0)};
  }
  if (model_case.tag == ModelTag::XXX && !f.b && !f.D) {
    if (model_case.regime != Regime::antiferromagnetic) return {};
    return {ThresholdKind::critical_temperature, 2.0 * params.j_x / std::log(3.0)};
  }

  if (!entanglement_margin(model_case, params, Temperature(1.0))) return critical_temperature_numeric(params);
  return bisect_temperature([&](double kT) { return *entanglement_margin(model_case, params, Temperature(kT)); },
                            params.max_abs());
}

Threshold critical_temperature_numeric(const ModelParams& params) {
  return bisect_temperature([&](double kT) { return numeric_concurrence(params, Temperature(kT)).margin(); },
                            params.max_abs());
}

Threshold critical_dm(const ModelCase& model_case, const ModelParams& params, Temperature kT) {
  require_consistent(model_case, params);
  if (model_case.active_fields.B || model_case.active_fields.b)
    throw std::invalid_argument("critical DM coupling is only cataloged for B = b = 0, got " + model_case.describe());

  const auto margin = [&](double dm) {
    ModelParams p = params;
    p.dm_D = dm;
    return *entanglement_margin(classify(p), p, kT);
  };

  if (margin(0.0) > 0.0) return {ThresholdKind::critical_dm, 0.0};

  double hi = std::max(10.0 * kT.value(), 10.0 * params.max_abs());
  for (int i = 0; i < 60 && margin(hi) <= 0.0; ++i) hi *= 2.0;
  if (margin(hi) <= 0.0) return {};

  double lo = 0.0;
  for (int i = 0; i < 200 && hi - lo > 1e-10 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (margin(mid) > 0.0 ? hi : lo) = mid;
  }
  return {ThresholdKind::critical_dm, 0.5 * (lo + hi)};
}

double xyz_entanglement_function(const ModelParams& params, Temperature kT) {
  const Derived d = derive(params);
  const double t = kT.value();
  if (classify(params).regime == Regime::ferromagnetic) {
    return std::sinh(std::abs(d.j_minus) / t) - std::cosh(std::abs(d.j_plus) / t) * std::exp(-std::abs(params.j_z) / t);
  }
  return std::sinh(d.j_plus / t) - std::cosh(d.j_minus / t) * std::exp(-params.j_z / t);
}

}  // namespace xyzent
