#include "diagen/fn/families.hpp"

#include <cassert>
#include <cmath>

#include "diagen/geom/types.hpp"  // kPi
#include "diagen/util/format.hpp"

namespace diagen::fn {

using geom::kPi;

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Sine:
      return "sine";
    case Family::Cosine:
      return "cosine";
    case Family::Tangent:
      return "tangent";
    case Family::Polynomial:
      return "polynomial";
    case Family::PiecewisePolynomial:
      return "piecewise-polynomial";
    case Family::Logarithmic:
      return "logarithmic";
    case Family::Absolute:
      return "absolute";
  }
  return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
  for (Family f : all_families())
    if (family_name(f) == name) return f;
  return std::nullopt;
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> fams = {
      Family::Sine,     Family::Cosine,
      Family::Tangent,  Family::Polynomial,
      Family::PiecewisePolynomial, Family::Logarithmic,
      Family::Absolute};
  return fams;
}

namespace {

/// "2x + 3" (phase omitted when zero, coefficient 1 left bare).
std::string linear_text(double slope, double intercept) {
  return poly_text({slope, intercept});
}

std::vector<double> sample_poly_coeffs(util::Rng& rng, int degree) {
  std::vector<double> coeffs(degree + 1);
  do {
    coeffs[0] = rng.uniform_int(-3, 3);
  } while (coeffs[0] == 0);
  for (int i = 1; i <= degree; ++i) coeffs[i] = rng.uniform_int(-3, 3);
  return coeffs;
}

std::string segment_text(const std::vector<double>& coeffs, double lo, double hi,
                         bool closed_hi) {
  std::string out = poly_text(coeffs);
  out += " on [" + util::format_quantity(lo) + ", " + util::format_quantity(hi);
  out += closed_hi ? "]" : ")";
  return out;
}

}  // namespace

FunctionSpec sample_function(util::Rng& rng) {
  return sample_function_of(rng.pick(all_families()), rng);
}

FunctionSpec sample_function_of(Family family, util::Rng& rng) {
  FunctionSpec spec;
  spec.family = family;
  switch (family) {
    case Family::Sine:
    case Family::Cosine:
    case Family::Tangent: {
      double amplitude = rng.uniform_int(1, 3);
      double frequency = rng.uniform_int(1, 2);
      double phase = rng.uniform_int(0, 6);
      spec.params = {amplitude, frequency, phase};
      spec.x_lo = -kPi;
      spec.x_hi = kPi;
      const char* fn = family == Family::Sine     ? "sin"
                       : family == Family::Cosine ? "cos"
                                                  : "tan";
      std::string coeff = amplitude == 1 ? "" : util::format_quantity(amplitude);
      spec.expression_text =
          "y = " + coeff + fn + "(" + linear_text(frequency, phase) + ")";
      break;
    }
    case Family::Polynomial: {
      int degree = rng.uniform_int(1, 4);
      spec.params = sample_poly_coeffs(rng, degree);
      spec.x_lo = rng.uniform_int(-6, -3);
      spec.x_hi = rng.uniform_int(3, 6);
      spec.expression_text = "y = " + poly_text(spec.params);
      break;
    }
    case Family::PiecewisePolynomial: {
      spec.x_lo = rng.uniform_int(-12, -8);
      spec.x_hi = rng.uniform_int(8, 12);
      int pieces = rng.uniform_int(2, 3);
      // Interior breakpoints: distinct integers, kept 3 units from the ends
      // and from each other so every piece has real width.
      if (pieces == 2) {
        spec.cuts = {static_cast<double>(rng.uniform_int(-4, 4))};
      } else {
        double c0 = rng.uniform_int(-5, -1);
        double c1 = rng.uniform_int(static_cast<int>(c0) + 3, 5);
        spec.cuts = {c0, c1};
      }
      for (int i = 0; i < pieces; ++i)
        spec.segments.push_back(sample_poly_coeffs(rng, rng.uniform_int(1, 4)));
      std::string text = "y = ";
      for (int i = 0; i < pieces; ++i) {
        double lo = i == 0 ? spec.x_lo : spec.cuts[i - 1];
        double hi = i == pieces - 1 ? spec.x_hi : spec.cuts[i];
        if (i) text += "; ";
        text += segment_text(spec.segments[i], lo, hi, i == pieces - 1);
      }
      spec.expression_text = text;
      break;
    }
    case Family::Logarithmic: {
      static const std::vector<int> a_choices = {-3, -2, -1, 1, 2, 3};
      static const std::vector<int> base_choices = {2, 10, 2};  // {2, 10, floor(e)}
      double a = rng.pick(a_choices);
      double b = rng.pick(base_choices);
      double c = rng.uniform_int(1, 3);
      double d = rng.uniform_int(1, 6);
      spec.params = {a, b, c, d};
      spec.x_lo = rng.uniform_int(-6, -3);
      spec.x_hi = rng.uniform_int(3, 6);
      double pole = -d / c;
      if (spec.x_lo <= pole) spec.x_lo = pole + 0.25;  // keep c*x + d > 0
      std::string coeff = a == 1 ? "" : a == -1 ? "-" : util::format_quantity(a);
      spec.expression_text = "y = " + coeff + "log_" + util::format_quantity(b) + "(" +
                             linear_text(c, d) + ")";
      break;
    }
    case Family::Absolute: {
      double a = 0;
      while (a == 0) a = rng.uniform_int(-5, 5);
      double b = rng.uniform_int(-5, 5);
      spec.params = {a, b};
      spec.x_lo = rng.uniform_int(-6, -3);
      spec.x_hi = rng.uniform_int(3, 6);
      spec.expression_text = "y = |" + linear_text(a, b) + "|";
      break;
    }
  }
  return spec;
}

namespace {

ExprPtr poly_expr(const std::vector<double>& coeffs_high_to_low) {
  int degree = static_cast<int>(coeffs_high_to_low.size()) - 1;
  std::vector<ExprPtr> terms;
  for (int i = 0; i <= degree; ++i) {
    double c = coeffs_high_to_low[i];
    if (c == 0) continue;
    int power = degree - i;
    if (power == 0)
      terms.push_back(constant(c));
    else
      terms.push_back(mul({constant(c), pow_int(variable(), power)}));
  }
  if (terms.empty()) terms.push_back(constant(0));
  return simplify(add(std::move(terms)));
}

ExprPtr linear_expr(double slope, double intercept) {
  return poly_expr({slope, intercept});
}

}  // namespace

ExprPtr build_expression(const FunctionSpec& spec) {
  switch (spec.family) {
    case Family::Sine:
      return simplify(mul({constant(spec.params[0]),
                           sin_of(linear_expr(spec.params[1], spec.params[2]))}));
    case Family::Cosine:
      return simplify(mul({constant(spec.params[0]),
                           cos_of(linear_expr(spec.params[1], spec.params[2]))}));
    case Family::Tangent:
      return simplify(mul({constant(spec.params[0]),
                           tan_of(linear_expr(spec.params[1], spec.params[2]))}));
    case Family::Polynomial:
      return poly_expr(spec.params);
    case Family::PiecewisePolynomial: {
      std::vector<ExprPtr> pieces;
      for (const auto& seg : spec.segments) pieces.push_back(poly_expr(seg));
      return piecewise(std::move(pieces), spec.cuts);
    }
    case Family::Logarithmic:
      return simplify(mul({constant(spec.params[0]),
                           log_base(spec.params[1],
                                    linear_expr(spec.params[2], spec.params[3]))}));
    case Family::Absolute:
      return abs_of(linear_expr(spec.params[0], spec.params[1]));
  }
  return constant(0);
}

std::string derivative_text(const FunctionSpec& spec) {
  switch (spec.family) {
    case Family::Sine: {
      double af = spec.params[0] * spec.params[1];
      std::string coeff = af == 1 ? "" : util::format_quantity(af);
      return "y' = " + coeff + "cos(" + linear_text(spec.params[1], spec.params[2]) + ")";
    }
    case Family::Cosine: {
      double af = spec.params[0] * spec.params[1];
      std::string coeff = af == 1 ? "" : util::format_quantity(af);
      return "y' = -" + coeff + "sin(" + linear_text(spec.params[1], spec.params[2]) + ")";
    }
    case Family::Tangent: {
      double af = spec.params[0] * spec.params[1];
      return "y' = " + util::format_quantity(af) + "/cos^2(" +
             linear_text(spec.params[1], spec.params[2]) + ")";
    }
    case Family::Polynomial: {
      std::vector<double> deriv;
      int degree = static_cast<int>(spec.params.size()) - 1;
      for (int i = 0; i < degree; ++i) deriv.push_back(spec.params[i] * (degree - i));
      if (deriv.empty()) deriv.push_back(0);
      return "y' = " + poly_text(deriv);
    }
    case Family::PiecewisePolynomial: {
      std::string out = "y' = ";
      for (std::size_t i = 0; i < spec.segments.size(); ++i) {
        const auto& seg = spec.segments[i];
        std::vector<double> deriv;
        int degree = static_cast<int>(seg.size()) - 1;
        for (int j = 0; j < degree; ++j) deriv.push_back(seg[j] * (degree - j));
        if (deriv.empty()) deriv.push_back(0);
        double lo = i == 0 ? spec.x_lo : spec.cuts[i - 1];
        double hi = i + 1 == spec.segments.size() ? spec.x_hi : spec.cuts[i];
        if (i) out += "; ";
        out += segment_text(deriv, lo, hi, i + 1 == spec.segments.size());
      }
      return out;
    }
    case Family::Logarithmic: {
      double ac = spec.params[0] * spec.params[2];
      return "y' = " + util::format_quantity(ac) + "/((ln " +
             util::format_quantity(spec.params[1]) + ")(" +
             linear_text(spec.params[2], spec.params[3]) + "))";
    }
    case Family::Absolute: {
      double a = spec.params[0];
      std::string coeff = a == 1 ? "" : a == -1 ? "-" : util::format_quantity(a) + " ";
      return "y' = " + coeff + "sign(" + linear_text(spec.params[0], spec.params[1]) + ")";
    }
  }
  return "y' = 0";
}

std::vector<double> pole_positions(const FunctionSpec& spec) {
  std::vector<double> poles;
  if (spec.family == Family::Tangent) {
    double f = spec.params[1], phi = spec.params[2];
    // f*x + phi = pi/2 + k*pi
    double k_lo = std::ceil((f * spec.x_lo + phi - kPi / 2) / kPi);
    for (double k = k_lo;; k += 1) {
      double x = (kPi / 2 + k * kPi - phi) / f;
      if (x > spec.x_hi) break;
      if (x >= spec.x_lo) poles.push_back(x);
    }
  } else if (spec.family == Family::Logarithmic) {
    poles.push_back(-spec.params[3] / spec.params[2]);
  }
  return poles;
}

}  // namespace diagen::fn
