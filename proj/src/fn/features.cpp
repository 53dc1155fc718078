#include "diagen/fn/features.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "diagen/fn/expression.hpp"

namespace diagen::fn {

namespace {

constexpr double kZeroBand = 1e-12;   // |f| below this at a grid node counts as a zero
constexpr double kEdgeShrink = 1e-9;  // keep brackets off discontinuities

struct Piece {
  double lo;
  double hi;
};

/// Splits the domain at tangent poles and piecewise cuts so that every piece
/// is continuous.  The left side of each cut is shrunk slightly so a
/// sign-change bracket can never straddle a jump.
std::vector<Piece> continuous_pieces(const FunctionSpec& spec) {
  std::vector<double> breaks = pole_positions(spec);
  if (spec.family == Family::PiecewisePolynomial)
    breaks.insert(breaks.end(), spec.cuts.begin(), spec.cuts.end());
  std::sort(breaks.begin(), breaks.end());

  std::vector<Piece> pieces;
  double lo = spec.x_lo;
  for (double b : breaks) {
    if (b <= spec.x_lo || b >= spec.x_hi) continue;
    pieces.push_back({lo, b - kEdgeShrink});
    lo = b + kEdgeShrink;
  }
  pieces.push_back({lo, spec.x_hi});
  return pieces;
}

double bisect_zero(const ExprPtr& f, double a, double b) {
  double fa = eval(f, a);
  for (int i = 0; i < 60; ++i) {
    double m = 0.5 * (a + b);
    double fm = eval(f, m);
    if (fm == 0) return m;
    if ((fa < 0) != (fm < 0))
      b = m;
    else
      a = m, fa = fm;
  }
  return 0.5 * (a + b);
}

int slope_sign(double value, double tol) {
  if (value > tol) return 1;
  if (value < -tol) return -1;
  return 0;
}

}  // namespace

FunctionFeatures scan_features(const FunctionSpec& spec, double step, double tol) {
  FunctionFeatures out;
  ExprPtr f = build_expression(spec);
  ExprPtr d = differentiate(f);

  double width = spec.x_hi - spec.x_lo;
  if (step <= 0) step = width * 1e-3;

  out.asymptotes = pole_positions(spec);
  // A log pole only matters if it sits at the domain edge or inside it.
  if (spec.family == Family::Logarithmic) {
    // The pole is left of the domain by construction; still reported because
    // the curve's behaviour near x_lo is governed by it.
  }

  out.y_min = std::numeric_limits<double>::infinity();
  out.y_max = -std::numeric_limits<double>::infinity();

  std::vector<double> zeros;
  std::vector<Extremum> extrema;

  for (const Piece& piece : continuous_pieces(spec)) {
    double span = piece.hi - piece.lo;
    if (span <= 0) continue;
    int n = std::max(8, static_cast<int>(std::ceil(span / step)));
    std::vector<double> xs(n + 1), ys(n + 1), ds(n + 1);
    for (int i = 0; i <= n; ++i) {
      double x = piece.lo + span * i / n;
      xs[i] = x;
      ys[i] = eval(f, x);
      ds[i] = eval(d, x);
      if (std::isfinite(ys[i])) {
        out.y_min = std::min(out.y_min, ys[i]);
        out.y_max = std::max(out.y_max, ys[i]);
      }
    }

    // --- zeros: exact grid hits plus sign-change brackets -----------------
    for (int i = 0; i <= n; ++i) {
      if (std::abs(ys[i]) <= kZeroBand) zeros.push_back(xs[i]);
    }
    for (int i = 0; i < n; ++i) {
      if (std::abs(ys[i]) <= kZeroBand || std::abs(ys[i + 1]) <= kZeroBand) continue;
      if ((ys[i] < 0) != (ys[i + 1] < 0))
        zeros.push_back(bisect_zero(f, xs[i], xs[i + 1]));
    }

    // --- interior extrema: derivative sign changes ------------------------
    // Pattern  + .. - : max;  - .. + : min.  A flat run ({+,0,...,0,-}) from
    // even-multiplicity derivative roots is handled by skipping zeros until
    // the next nonzero sign.
    int i = 1;
    while (i < n) {
      int s_prev = slope_sign(ds[i - 1], tol);
      int s_here = slope_sign(ds[i], tol);
      if (s_prev == 0) {
        ++i;
        continue;
      }
      if (s_here == s_prev) {
        ++i;
        continue;
      }
      // find the next nonzero slope at or after i
      int j = i;
      while (j <= n && slope_sign(ds[j], tol) == 0) ++j;
      if (j > n) break;
      int s_next = slope_sign(ds[j], tol);
      if (s_next != s_prev) {
        double x_star = bisect_zero(d, xs[i - 1], xs[j]);
        // Don't report domain endpoints as interior extrema.
        if (x_star > spec.x_lo + kEdgeShrink * 2 && x_star < spec.x_hi - kEdgeShrink * 2) {
          double y_star = eval(f, x_star);
          if (std::isfinite(y_star))
            extrema.push_back({x_star, y_star, s_prev > 0});
        }
      }
      i = j + 1;
    }

    // --- monotone intervals between extrema within this piece -------------
    std::vector<double> knots = {piece.lo};
    for (const Extremum& e : extrema)
      if (e.x > piece.lo && e.x < piece.hi) knots.push_back(e.x);
    knots.push_back(piece.hi);
    std::sort(knots.begin(), knots.end());
    for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
      double a = knots[k], b = knots[k + 1];
      if (b - a < step) continue;
      double mid = 0.5 * (a + b);
      int s = slope_sign(eval(d, mid), tol);
      if (s == 0) continue;  // flat segment, not worth narrating
      out.monotone.push_back({a, b, s > 0});
    }
  }

  // Deduplicate zeros that were found both as a grid hit and as a bracket,
  // or that straddle a piecewise cut, then merge touching zeros supplied by
  // extrema resting on the axis.
  for (const Extremum& e : extrema)
    if (std::abs(e.y) <= 1e-9) zeros.push_back(e.x);
  std::sort(zeros.begin(), zeros.end());
  double merge_tol = std::max(step * 0.5, 1e-7);
  for (double z : zeros) {
    if (out.zeros.empty() || z - out.zeros.back() > merge_tol) out.zeros.push_back(z);
  }

  std::sort(extrema.begin(), extrema.end(),
            [](const Extremum& a, const Extremum& b) { return a.x < b.x; });
  for (const Extremum& e : extrema) {
    if (out.extrema.empty() || e.x - out.extrema.back().x > merge_tol)
      out.extrema.push_back(e);
  }

  if (!std::isfinite(out.y_min)) out.y_min = 0;
  if (!std::isfinite(out.y_max)) out.y_max = 0;
  return out;
}

}  // namespace diagen::fn
