#include "diagen/plane/formulas.hpp"

#include <cassert>
#include <cmath>
#include <map>

#include "diagen/geom/build.hpp"
#include "diagen/geom/catalog.hpp"
#include "diagen/util/format.hpp"

namespace diagen::plane {

std::string_view question_type_name(QuestionType t) {
  switch (t) {
    case QuestionType::Perimeter: return "perimeter";
    case QuestionType::Area: return "area";
    case QuestionType::BaseLength: return "base_length";
    case QuestionType::Angle: return "angle";
    case QuestionType::ArcLength: return "arc_length";
    case QuestionType::ExtendedEdge: return "extended_edge";
  }
  return "perimeter";
}

std::optional<QuestionType> question_type_from_name(std::string_view name) {
  for (QuestionType t : all_question_types())
    if (question_type_name(t) == name) return t;
  return std::nullopt;
}

const std::vector<QuestionType>& all_question_types() {
  static const std::vector<QuestionType> kAll = {
      QuestionType::Perimeter, QuestionType::Area,      QuestionType::BaseLength,
      QuestionType::Angle,     QuestionType::ArcLength, QuestionType::ExtendedEdge,
  };
  return kAll;
}

std::string angle_name(const geom::ShapeInstance& shape, int i) {
  int m = static_cast<int>(shape.labels.size());
  return shape.labels[(i + m - 1) % m] + shape.labels[i] + shape.labels[(i + 1) % m];
}

namespace {

using geom::AttrKey;
using geom::ShapeKind;
using geom::deg2rad;
using geom::kPi;

std::string q(double v) { return util::format_quantity(v); }
std::string deg(double v) { return q(v) + " degrees"; }
std::string nm(const geom::ShapeInstance& s) { return geom::display_name(s); }

// ---- evaluators ------------------------------------------------------------

double ev_identity(std::span<const double> in) { return in[0]; }
double ev_iso_base(std::span<const double> in) {
  return 2 * in[0] * std::sin(deg2rad(in[1]) / 2);
}
double ev_right_hyp(std::span<const double> in) { return in[0] / std::cos(deg2rad(in[1])); }
double ev_right_leg(std::span<const double> in) { return in[0] * std::tan(deg2rad(in[1])); }
double ev_trap_top(std::span<const double> in) {
  return in[0] - 2 * in[1] * std::cos(deg2rad(in[2]));
}

double ev_square_perim(std::span<const double> in) { return 4 * in[0]; }
double ev_rect_perim(std::span<const double> in) { return 2 * (in[0] + in[1]); }
double ev_equi_perim(std::span<const double> in) { return 3 * in[0]; }
double ev_iso_perim(std::span<const double> in) { return 2 * in[0] + ev_iso_base(in); }
double ev_right_perim(std::span<const double> in) {
  return in[0] + ev_right_leg(in) + ev_right_hyp(in);
}
double ev_para_perim(std::span<const double> in) { return 2 * (in[0] + in[1]); }
double ev_trap_perim(std::span<const double> in) {
  return in[0] + ev_trap_top(in) + 2 * in[1];
}
double ev_sector_perim(std::span<const double> in) {
  return 2 * in[0] + in[0] * deg2rad(in[1]);
}
double ev_circle_perim(std::span<const double> in) { return kPi * in[0]; }
double ev_semi_perim(std::span<const double> in) { return kPi * in[0] / 2 + in[0]; }

double ev_square_area(std::span<const double> in) { return in[0] * in[0]; }
double ev_rect_area(std::span<const double> in) { return in[0] * in[1]; }
double ev_equi_area(std::span<const double> in) {
  return std::sqrt(3.0) / 4 * in[0] * in[0];
}
double ev_iso_area(std::span<const double> in) {
  return 0.5 * in[0] * in[0] * std::sin(deg2rad(in[1]));
}
double ev_right_area(std::span<const double> in) { return 0.5 * in[0] * ev_right_leg(in); }
double ev_para_area(std::span<const double> in) {
  return in[0] * in[1] * std::sin(deg2rad(in[2]));
}
double ev_trap_area(std::span<const double> in) {
  double top = ev_trap_top(in);
  double h = in[1] * std::sin(deg2rad(in[2]));
  return 0.5 * (in[0] + top) * h;
}
double ev_sector_area(std::span<const double> in) {
  return 0.5 * deg2rad(in[1]) * in[0] * in[0];
}
double ev_circle_area(std::span<const double> in) { return kPi * in[0] * in[0] / 4; }
double ev_semi_area(std::span<const double> in) { return kPi * in[0] * in[0] / 8; }

double ev_sector_arc(std::span<const double> in) { return in[0] * deg2rad(in[1]); }
double ev_semi_arc(std::span<const double> in) { return kPi * in[0] / 2; }

double ev_iso_base_angle(std::span<const double> in) { return (180.0 - in[0]) / 2; }
double ev_right_other_acute(std::span<const double> in) { return 90.0 - in[0]; }
double ev_supplement(std::span<const double> in) { return 180.0 - in[0]; }

// ---- explanations ----------------------------------------------------------
//
// Every explanation ends with "= <value>" (optionally followed by a unit
// word) so the final stated value can be recovered from the text after the
// last equals sign.

std::string ex_shared_side(const ExplainCtx& c) {
  assert(c.next != nullptr);
  return c.shape.edge_name(0) + " is a side of both " + nm(c.shape) + " and " +
         nm(*c.next) + ", so " + c.shape.edge_name(0) + " = " + q(c.output) + ".";
}

std::string ex_all_sides_equal(const ExplainCtx& c) {
  const char* count =
      c.shape.kind == ShapeKind::EquilateralTriangle ? "three" : "four";
  return "All " + std::string(count) + " sides of " + nm(c.shape) + " are equal, so " +
         c.shape.edge_name(c.output_key.index) + " = " + c.shape.edge_name(0) + " = " +
         q(c.output) + ".";
}

std::string ex_opposite_sides(const ExplainCtx& c) {
  return "Opposite sides of " + nm(c.shape) + " are equal, so " +
         c.shape.edge_name(c.output_key.index) + " = " + c.shape.edge_name(0) + " = " +
         q(c.output) + ".";
}

std::string ex_iso_legs(const ExplainCtx& c) {
  return nm(c.shape) + " is isosceles with " + c.shape.edge_name(2) + " = " +
         c.shape.edge_name(0) + ", so " + c.shape.edge_name(2) + " = " + q(c.output) +
         ".";
}

std::string ex_sector_radii(const ExplainCtx& c) {
  return c.shape.edge_name(0) + " and " + c.shape.edge_name(2) +
         " are radii of the same circle in " + nm(c.shape) + ", so " +
         c.shape.edge_name(2) + " = " + q(c.output) + ".";
}

std::string ex_iso_base(const ExplainCtx& c) {
  return "In " + nm(c.shape) + " the legs measure " + q(c.inputs[0]) +
         " and the apex angle " + angle_name(c.shape, 0) + " is " + deg(c.inputs[1]) +
         ", so base " + c.shape.edge_name(1) + " = 2 * " + q(c.inputs[0]) + " * sin(" +
         deg(c.inputs[1] / 2) + ") = " + q(c.output) + ".";
}

std::string ex_right_hyp(const ExplainCtx& c) {
  return "In " + nm(c.shape) + " angle " + angle_name(c.shape, 1) + " = " +
         deg(c.inputs[1]) + " and leg " + c.shape.edge_name(0) + " = " + q(c.inputs[0]) +
         ", so hypotenuse " + c.shape.edge_name(1) + " = " + q(c.inputs[0]) + " / cos(" +
         deg(c.inputs[1]) + ") = " + q(c.output) + ".";
}

std::string ex_right_leg(const ExplainCtx& c) {
  return "In " + nm(c.shape) + " angle " + angle_name(c.shape, 1) + " = " +
         deg(c.inputs[1]) + " and leg " + c.shape.edge_name(0) + " = " + q(c.inputs[0]) +
         ", so leg " + c.shape.edge_name(2) + " = " + q(c.inputs[0]) + " * tan(" +
         deg(c.inputs[1]) + ") = " + q(c.output) + ".";
}

std::string ex_trap_top(const ExplainCtx& c) {
  return "In " + nm(c.shape) + " the long base " + c.shape.edge_name(0) + " = " +
         q(c.inputs[0]) + ", each leg = " + q(c.inputs[1]) + ", and the base angle = " +
         deg(c.inputs[2]) + ", so the top side " + c.shape.edge_name(2) + " = " +
         q(c.inputs[0]) + " - 2 * " + q(c.inputs[1]) + " * cos(" + deg(c.inputs[2]) +
         ") = " + q(c.output) + ".";
}

std::string ex_square_perim(const ExplainCtx& c) {
  return "The perimeter of " + nm(c.shape) + " is 4 * " + q(c.inputs[0]) + " = " +
         q(c.output) + ".";
}

std::string ex_rect_perim(const ExplainCtx& c) {
  return "The perimeter of " + nm(c.shape) + " is 2 * (" + q(c.inputs[0]) + " + " +
         q(c.inputs[1]) + ") = " + q(c.output) + ".";
}

std::string ex_equi_perim(const ExplainCtx& c) {
  return "The perimeter of " + nm(c.shape) + " is 3 * " + q(c.inputs[0]) + " = " +
         q(c.output) + ".";
}

std::string ex_iso_perim(const ExplainCtx& c) {
  double base = ev_iso_base(c.inputs);
  return "Base " + c.shape.edge_name(1) + " of " + nm(c.shape) + " is 2 * " +
         q(c.inputs[0]) + " * sin(" + deg(c.inputs[1] / 2) + ") = " + q(base) +
         ", so the perimeter is " + q(c.inputs[0]) + " + " + q(c.inputs[0]) + " + " +
         q(base) + " = " + q(c.output) + ".";
}

std::string ex_right_perim(const ExplainCtx& c) {
  double leg = ev_right_leg(c.inputs);
  double hyp = ev_right_hyp(c.inputs);
  return "In " + nm(c.shape) + ", leg " + c.shape.edge_name(2) + " = " + q(c.inputs[0]) +
         " * tan(" + deg(c.inputs[1]) + ") = " + q(leg) + " and hypotenuse " +
         c.shape.edge_name(1) + " = " + q(c.inputs[0]) + " / cos(" + deg(c.inputs[1]) +
         ") = " + q(hyp) + ", so the perimeter is " + q(c.inputs[0]) + " + " + q(leg) +
         " + " + q(hyp) + " = " + q(c.output) + ".";
}

std::string ex_para_perim(const ExplainCtx& c) {
  return "The perimeter of " + nm(c.shape) + " is 2 * (" + q(c.inputs[0]) + " + " +
         q(c.inputs[1]) + ") = " + q(c.output) + ".";
}

std::string ex_trap_perim(const ExplainCtx& c) {
  double top = ev_trap_top(c.inputs);
  return "The top side of " + nm(c.shape) + " is " + q(c.inputs[0]) + " - 2 * " +
         q(c.inputs[1]) + " * cos(" + deg(c.inputs[2]) + ") = " + q(top) +
         ", so the perimeter is " + q(c.inputs[0]) + " + " + q(top) + " + 2 * " +
         q(c.inputs[1]) + " = " + q(c.output) + ".";
}

std::string ex_sector_perim(const ExplainCtx& c) {
  double arc = ev_sector_arc(c.inputs);
  return "The arc of " + nm(c.shape) + " is " + q(c.inputs[1]) + "/360 * 2 * pi * " +
         q(c.inputs[0]) + " = " + q(arc) + ", so the perimeter is " + q(c.inputs[0]) +
         " + " + q(c.inputs[0]) + " + " + q(arc) + " = " + q(c.output) + ".";
}

std::string ex_circle_perim(const ExplainCtx& c) {
  return "The diameter of " + nm(c.shape) + " is " + q(c.inputs[0]) +
         ", so the circumference is pi * " + q(c.inputs[0]) + " = " + q(c.output) + ".";
}

std::string ex_semi_perim(const ExplainCtx& c) {
  double arc = ev_semi_arc(c.inputs);
  return "The arc of " + nm(c.shape) + " is pi * " + q(c.inputs[0]) + " / 2 = " +
         q(arc) + ", so the perimeter is " + q(arc) + " + " + q(c.inputs[0]) + " = " +
         q(c.output) + ".";
}

std::string ex_square_area(const ExplainCtx& c) {
  return "The area of " + nm(c.shape) + " is " + q(c.inputs[0]) + " * " +
         q(c.inputs[0]) + " = " + q(c.output) + ".";
}

std::string ex_rect_area(const ExplainCtx& c) {
  return "The area of " + nm(c.shape) + " is " + q(c.inputs[0]) + " * " +
         q(c.inputs[1]) + " = " + q(c.output) + ".";
}

std::string ex_equi_area(const ExplainCtx& c) {
  return "The area of " + nm(c.shape) + " is (sqrt(3)/4) * " + q(c.inputs[0]) + "^2 = " +
         q(c.output) + ".";
}

std::string ex_iso_area(const ExplainCtx& c) {
  return "The area of " + nm(c.shape) + " is (1/2) * " + q(c.inputs[0]) + " * " +
         q(c.inputs[0]) + " * sin(" + deg(c.inputs[1]) + ") = " + q(c.output) + ".";
}

std::string ex_right_area(const ExplainCtx& c) {
  double leg = ev_right_leg(c.inputs);
  return "Leg " + c.shape.edge_name(2) + " of " + nm(c.shape) + " is " + q(c.inputs[0]) +
         " * tan(" + deg(c.inputs[1]) + ") = " + q(leg) + ", so the area is (1/2) * " +
         q(c.inputs[0]) + " * " + q(leg) + " = " + q(c.output) + ".";
}

std::string ex_para_area(const ExplainCtx& c) {
  return "The area of " + nm(c.shape) + " is " + q(c.inputs[0]) + " * " +
         q(c.inputs[1]) + " * sin(" + deg(c.inputs[2]) + ") = " + q(c.output) + ".";
}

std::string ex_trap_area(const ExplainCtx& c) {
  double top = ev_trap_top(c.inputs);
  double h = c.inputs[1] * std::sin(deg2rad(c.inputs[2]));
  return "The top side of " + nm(c.shape) + " is " + q(top) + " and its height is " +
         q(c.inputs[1]) + " * sin(" + deg(c.inputs[2]) + ") = " + q(h) +
         ", so the area is (1/2) * (" + q(c.inputs[0]) + " + " + q(top) + ") * " + q(h) +
         " = " + q(c.output) + ".";
}

std::string ex_sector_area(const ExplainCtx& c) {
  return "The area of " + nm(c.shape) + " is " + q(c.inputs[1]) + "/360 * pi * " +
         q(c.inputs[0]) + "^2 = " + q(c.output) + ".";
}

std::string ex_circle_area(const ExplainCtx& c) {
  return "The radius of " + nm(c.shape) + " is " + q(c.inputs[0]) + "/2 = " +
         q(c.inputs[0] / 2) + ", so the area is pi * " + q(c.inputs[0] / 2) + "^2 = " +
         q(c.output) + ".";
}

std::string ex_semi_area(const ExplainCtx& c) {
  return "The radius of " + nm(c.shape) + " is " + q(c.inputs[0]) + "/2 = " +
         q(c.inputs[0] / 2) + ", so the area is pi * " + q(c.inputs[0] / 2) +
         "^2 / 2 = " + q(c.output) + ".";
}

std::string ex_sector_arc(const ExplainCtx& c) {
  return "The arc of " + nm(c.shape) + " spans " + deg(c.inputs[1]) + " with radius " +
         q(c.inputs[0]) + ", so the arc length is " + q(c.inputs[1]) +
         "/360 * 2 * pi * " + q(c.inputs[0]) + " = " + q(c.output) + ".";
}

std::string ex_semi_arc(const ExplainCtx& c) {
  return "The arc of " + nm(c.shape) + " is half a circle of diameter " +
         q(c.inputs[0]) + ", so the arc length is pi * " + q(c.inputs[0]) + " / 2 = " +
         q(c.output) + ".";
}

std::string ex_iso_base_angle(const ExplainCtx& c) {
  return "The base angles of " + nm(c.shape) +
         " are equal and its angles sum to 180 degrees, so angle " +
         angle_name(c.shape, 1) + " = (180 - " + q(c.inputs[0]) + ") / 2 = " +
         deg(c.output) + ".";
}

std::string ex_right_other_acute(const ExplainCtx& c) {
  return "The acute angles of " + nm(c.shape) + " sum to 90 degrees, so angle " +
         angle_name(c.shape, 2) + " = 90 - " + q(c.inputs[0]) + " = " + deg(c.output) +
         ".";
}

std::string ex_para_angle(const ExplainCtx& c) {
  return "Consecutive angles of " + nm(c.shape) + " sum to 180 degrees, so angle " +
         angle_name(c.shape, 1) + " = 180 - " + q(c.inputs[0]) + " = " + deg(c.output) +
         ".";
}

std::string ex_trap_angle(const ExplainCtx& c) {
  return "The base angle at " + c.shape.labels[1] + " equals the base angle at " +
         c.shape.labels[0] + ", and angles along leg " + c.shape.edge_name(1) +
         " sum to 180 degrees, so angle " + angle_name(c.shape, 2) + " = 180 - " +
         q(c.inputs[0]) + " = " + deg(c.output) + ".";
}

// ---- registry --------------------------------------------------------------

const AttrKey S0 = AttrKey::side(0);

const Formula kSharedSide{"shared-side", {S0}, S0, ev_identity, ex_shared_side};

const Formula kSquareSide1{"square-sides-equal-1", {S0}, AttrKey::side(1), ev_identity,
                           ex_all_sides_equal};
const Formula kSquareSide2{"square-sides-equal-2", {S0}, AttrKey::side(2), ev_identity,
                           ex_all_sides_equal};
const Formula kSquareSide3{"square-sides-equal-3", {S0}, AttrKey::side(3), ev_identity,
                           ex_all_sides_equal};
const Formula kRectSide2{"rectangle-opposite-sides", {S0}, AttrKey::side(2), ev_identity,
                         ex_opposite_sides};
const Formula kParaSide2{"parallelogram-opposite-sides", {S0}, AttrKey::side(2),
                         ev_identity, ex_opposite_sides};
const Formula kEquiSide1{"equilateral-sides-equal-1", {S0}, AttrKey::side(1),
                         ev_identity, ex_all_sides_equal};
const Formula kEquiSide2{"equilateral-sides-equal-2", {S0}, AttrKey::side(2),
                         ev_identity, ex_all_sides_equal};
const Formula kIsoBase{"isosceles-base", {S0, AttrKey::angle(0)}, AttrKey::side(1),
                       ev_iso_base, ex_iso_base};
const Formula kIsoLeg{"isosceles-legs-equal", {S0}, AttrKey::side(2), ev_identity,
                      ex_iso_legs};
const Formula kRightHyp{"right-hypotenuse", {S0, AttrKey::angle(1)}, AttrKey::side(1),
                        ev_right_hyp, ex_right_hyp};
const Formula kRightLeg{"right-leg", {S0, AttrKey::angle(1)}, AttrKey::side(2),
                        ev_right_leg, ex_right_leg};
const Formula kTrapTop{"trapezoid-top",
                       {S0, AttrKey::side(1), AttrKey::angle(0)},
                       AttrKey::side(2),
                       ev_trap_top,
                       ex_trap_top};
const Formula kSectorRadius2{"sector-radii-equal", {S0}, AttrKey::side(2), ev_identity,
                             ex_sector_radii};

const Formula kSquarePerim{"square-perimeter", {S0}, AttrKey::perimeter(),
                           ev_square_perim, ex_square_perim};
const Formula kRectPerim{"rectangle-perimeter",
                         {S0, AttrKey::side(1)},
                         AttrKey::perimeter(),
                         ev_rect_perim,
                         ex_rect_perim};
const Formula kEquiPerim{"equilateral-perimeter", {S0}, AttrKey::perimeter(),
                         ev_equi_perim, ex_equi_perim};
const Formula kIsoPerim{"isosceles-perimeter",
                        {S0, AttrKey::angle(0)},
                        AttrKey::perimeter(),
                        ev_iso_perim,
                        ex_iso_perim};
const Formula kRightPerim{"right-perimeter",
                          {S0, AttrKey::angle(1)},
                          AttrKey::perimeter(),
                          ev_right_perim,
                          ex_right_perim};
const Formula kParaPerim{"parallelogram-perimeter",
                         {S0, AttrKey::side(1)},
                         AttrKey::perimeter(),
                         ev_para_perim,
                         ex_para_perim};
const Formula kTrapPerim{"trapezoid-perimeter",
                         {S0, AttrKey::side(1), AttrKey::angle(0)},
                         AttrKey::perimeter(),
                         ev_trap_perim,
                         ex_trap_perim};
const Formula kSectorPerim{"sector-perimeter",
                           {S0, AttrKey::arc_angle()},
                           AttrKey::perimeter(),
                           ev_sector_perim,
                           ex_sector_perim};
const Formula kCirclePerim{"circle-circumference", {S0}, AttrKey::perimeter(),
                           ev_circle_perim, ex_circle_perim};
const Formula kSemiPerim{"semicircle-perimeter", {S0}, AttrKey::perimeter(),
                         ev_semi_perim, ex_semi_perim};

const Formula kSquareArea{"square-area", {S0}, AttrKey::area(), ev_square_area,
                          ex_square_area};
const Formula kRectArea{"rectangle-area",
                        {S0, AttrKey::side(1)},
                        AttrKey::area(),
                        ev_rect_area,
                        ex_rect_area};
const Formula kEquiArea{"equilateral-area", {S0}, AttrKey::area(), ev_equi_area,
                        ex_equi_area};
const Formula kIsoArea{"isosceles-area",
                       {S0, AttrKey::angle(0)},
                       AttrKey::area(),
                       ev_iso_area,
                       ex_iso_area};
const Formula kRightArea{"right-area",
                         {S0, AttrKey::angle(1)},
                         AttrKey::area(),
                         ev_right_area,
                         ex_right_area};
const Formula kParaArea{"parallelogram-area",
                        {S0, AttrKey::side(1), AttrKey::angle(0)},
                        AttrKey::area(),
                        ev_para_area,
                        ex_para_area};
const Formula kTrapArea{"trapezoid-area",
                        {S0, AttrKey::side(1), AttrKey::angle(0)},
                        AttrKey::area(),
                        ev_trap_area,
                        ex_trap_area};
const Formula kSectorArea{"sector-area",
                          {S0, AttrKey::arc_angle()},
                          AttrKey::area(),
                          ev_sector_area,
                          ex_sector_area};
const Formula kCircleArea{"circle-area", {S0}, AttrKey::area(), ev_circle_area,
                          ex_circle_area};
const Formula kSemiArea{"semicircle-area", {S0}, AttrKey::area(), ev_semi_area,
                        ex_semi_area};

const Formula kSectorArc{"sector-arc-length",
                         {S0, AttrKey::arc_angle()},
                         AttrKey::arc_length(),
                         ev_sector_arc,
                         ex_sector_arc};
const Formula kSemiArc{"semicircle-arc-length", {S0}, AttrKey::arc_length(), ev_semi_arc,
                       ex_semi_arc};

const Formula kIsoBaseAngle{"isosceles-base-angle",
                            {AttrKey::angle(0)},
                            AttrKey::angle(1),
                            ev_iso_base_angle,
                            ex_iso_base_angle};
const Formula kRightOtherAcute{"right-other-acute",
                               {AttrKey::angle(1)},
                               AttrKey::angle(2),
                               ev_right_other_acute,
                               ex_right_other_acute};
const Formula kParaAngle{"parallelogram-adjacent-angle",
                         {AttrKey::angle(0)},
                         AttrKey::angle(1),
                         ev_supplement,
                         ex_para_angle};
const Formula kTrapAngle{"trapezoid-top-angle",
                         {AttrKey::angle(0)},
                         AttrKey::angle(2),
                         ev_supplement,
                         ex_trap_angle};

}  // namespace

const Formula* meta_formula(geom::ShapeKind kind, int edge) {
  if (edge == 0) {
    // Only a figure's first shape still offers its initial side; the derived
    // value is the same segment restated for the next shape.
    return geom::kind_info(kind).terminal_only ? nullptr : &kSharedSide;
  }
  switch (kind) {
    case ShapeKind::Square:
      if (edge == 1) return &kSquareSide1;
      if (edge == 2) return &kSquareSide2;
      if (edge == 3) return &kSquareSide3;
      return nullptr;
    case ShapeKind::Rectangle:
      return edge == 2 ? &kRectSide2 : nullptr;
    case ShapeKind::IsoscelesTriangle:
      if (edge == 1) return &kIsoBase;
      if (edge == 2) return &kIsoLeg;
      return nullptr;
    case ShapeKind::EquilateralTriangle:
      if (edge == 1) return &kEquiSide1;
      if (edge == 2) return &kEquiSide2;
      return nullptr;
    case ShapeKind::RightTriangle:
      if (edge == 1) return &kRightHyp;
      if (edge == 2) return &kRightLeg;
      return nullptr;
    case ShapeKind::Sector:
      return edge == 2 ? &kSectorRadius2 : nullptr;
    case ShapeKind::Parallelogram:
      return edge == 2 ? &kParaSide2 : nullptr;
    case ShapeKind::Trapezoid:
      return edge == 2 ? &kTrapTop : nullptr;
    case ShapeKind::Circle:
    case ShapeKind::Semicircle:
      return nullptr;
  }
  return nullptr;
}

const std::vector<QuestionOption>& question_options(geom::ShapeKind kind) {
  using QT = QuestionType;
  static const std::map<ShapeKind, std::vector<QuestionOption>> kTable = {
      {ShapeKind::Square,
       {{QT::Perimeter, &kSquarePerim, false},
        {QT::Area, &kSquareArea, false},
        {QT::ExtendedEdge, &kSquareSide2, false}}},
      {ShapeKind::Rectangle,
       {{QT::Perimeter, &kRectPerim, false},
        {QT::Area, &kRectArea, false},
        {QT::ExtendedEdge, &kRectSide2, false}}},
      {ShapeKind::IsoscelesTriangle,
       {{QT::Perimeter, &kIsoPerim, false},
        {QT::Area, &kIsoArea, false},
        {QT::BaseLength, &kIsoBase, false},
        {QT::Angle, &kIsoBaseAngle, true},
        {QT::ExtendedEdge, &kIsoBase, false}}},
      {ShapeKind::EquilateralTriangle,
       {{QT::Perimeter, &kEquiPerim, false},
        {QT::Area, &kEquiArea, false},
        {QT::ExtendedEdge, &kEquiSide1, false}}},
      {ShapeKind::RightTriangle,
       {{QT::Perimeter, &kRightPerim, false},
        {QT::Area, &kRightArea, false},
        {QT::Angle, &kRightOtherAcute, true},
        {QT::ExtendedEdge, &kRightHyp, false}}},
      {ShapeKind::Sector,
       {{QT::Perimeter, &kSectorPerim, false},
        {QT::Area, &kSectorArea, false},
        {QT::ArcLength, &kSectorArc, false},
        {QT::ExtendedEdge, &kSectorRadius2, false}}},
      {ShapeKind::Circle,
       {{QT::Perimeter, &kCirclePerim, false}, {QT::Area, &kCircleArea, false}}},
      {ShapeKind::Semicircle,
       {{QT::Perimeter, &kSemiPerim, false},
        {QT::Area, &kSemiArea, false},
        {QT::ArcLength, &kSemiArc, false}}},
      {ShapeKind::Parallelogram,
       {{QT::Perimeter, &kParaPerim, false},
        {QT::Area, &kParaArea, false},
        {QT::Angle, &kParaAngle, true},
        {QT::ExtendedEdge, &kParaSide2, false}}},
      {ShapeKind::Trapezoid,
       {{QT::Perimeter, &kTrapPerim, false},
        {QT::Area, &kTrapArea, false},
        {QT::BaseLength, &kTrapTop, false},
        {QT::Angle, &kTrapAngle, true},
        {QT::ExtendedEdge, &kTrapTop, false}}},
  };
  return kTable.at(kind);
}

const std::vector<geom::AttrKey>& redundant_candidates(geom::ShapeKind kind) {
  // Only angles that are fixed by the kind itself qualify: anything tied to a
  // sampled attribute could hand the solver a shortcut around the chain.
  static const std::vector<AttrKey> kRightAngle = {AttrKey::angle(0)};
  static const std::vector<AttrKey> kNone;
  switch (kind) {
    case ShapeKind::Square:
    case ShapeKind::Rectangle:
    case ShapeKind::RightTriangle:
    case ShapeKind::EquilateralTriangle:
      return kRightAngle;
    default:
      return kNone;
  }
}

}  // namespace diagen::plane
