#pragma once

#include <memory>
#include <string>
#include <vector>

namespace diagen::fn {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Symbolic expression tree closed under differentiation for every function
/// family the engine samples (Sign appears only in derivatives of Abs).
struct Expr {
  enum class Op {
    Const,
    Var,
    Add,
    Mul,
    Pow,   // integer exponent, possibly negative
    Sin,
    Cos,
    Tan,
    Log,   // value = base (> 1)
    Abs,
    Sign,
    Piecewise,
  };

  Op op = Op::Const;
  double value = 0.0;  // Const: the constant; Log: the base
  int exponent = 1;    // Pow only
  std::vector<ExprPtr> kids;
  std::vector<double> cuts;  // Piecewise: interior breakpoints, kids.size()-1 of them
};

ExprPtr constant(double c);
ExprPtr variable();
ExprPtr add(std::vector<ExprPtr> terms);
ExprPtr mul(std::vector<ExprPtr> factors);
ExprPtr pow_int(ExprPtr base, int exponent);
ExprPtr sin_of(ExprPtr inner);
ExprPtr cos_of(ExprPtr inner);
ExprPtr tan_of(ExprPtr inner);
ExprPtr log_base(double base, ExprPtr inner);
ExprPtr abs_of(ExprPtr inner);
ExprPtr sign_of(ExprPtr inner);
/// pieces[i] applies on [cuts[i-1], cuts[i]) with implicit infinite ends.
ExprPtr piecewise(std::vector<ExprPtr> pieces, std::vector<double> cuts);

double eval(const Expr& e, double x);
inline double eval(const ExprPtr& e, double x) { return eval(*e, x); }

/// Symbolic derivative, simplified (constants folded, zero terms dropped).
ExprPtr differentiate(const ExprPtr& e);

/// Flattens nested sums/products and folds constants; deterministic and
/// order-preserving.
ExprPtr simplify(const ExprPtr& e);

/// Canonical display text ("-9x^2 - 4x - 2", "6cos(2x + 3)", "2/cos^2(2x)").
std::string to_string(const ExprPtr& e);

/// Polynomial display from coefficients (highest power first): "-3x^3 - 2x - 1".
std::string poly_text(const std::vector<double>& coeffs_high_to_low);

}  // namespace diagen::fn
