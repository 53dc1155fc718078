#include "diagen/fn/expression.hpp"

#include <cassert>
#include <cmath>

#include "diagen/util/format.hpp"

namespace diagen::fn {

namespace {

ExprPtr node(Expr::Op op, double value = 0.0, int exponent = 1,
             std::vector<ExprPtr> kids = {}, std::vector<double> cuts = {}) {
  Expr e;
  e.op = op;
  e.value = value;
  e.exponent = exponent;
  e.kids = std::move(kids);
  e.cuts = std::move(cuts);
  return std::make_shared<const Expr>(std::move(e));
}

ExprPtr wrap(Expr::Op op, ExprPtr inner) { return node(op, 0.0, 1, {std::move(inner)}); }

}  // namespace

ExprPtr constant(double c) { return node(Expr::Op::Const, c); }
ExprPtr variable() { return node(Expr::Op::Var); }

ExprPtr add(std::vector<ExprPtr> terms) {
  return node(Expr::Op::Add, 0.0, 1, std::move(terms));
}

ExprPtr mul(std::vector<ExprPtr> factors) {
  return node(Expr::Op::Mul, 0.0, 1, std::move(factors));
}

ExprPtr pow_int(ExprPtr base, int exponent) {
  return node(Expr::Op::Pow, 0.0, exponent, {std::move(base)});
}

ExprPtr sin_of(ExprPtr inner) { return wrap(Expr::Op::Sin, std::move(inner)); }
ExprPtr cos_of(ExprPtr inner) { return wrap(Expr::Op::Cos, std::move(inner)); }
ExprPtr tan_of(ExprPtr inner) { return wrap(Expr::Op::Tan, std::move(inner)); }

ExprPtr log_base(double base, ExprPtr inner) {
  assert(base > 1.0);
  return node(Expr::Op::Log, base, 1, {std::move(inner)});
}

ExprPtr abs_of(ExprPtr inner) { return wrap(Expr::Op::Abs, std::move(inner)); }
ExprPtr sign_of(ExprPtr inner) { return wrap(Expr::Op::Sign, std::move(inner)); }

ExprPtr piecewise(std::vector<ExprPtr> pieces, std::vector<double> cuts) {
  assert(pieces.size() == cuts.size() + 1);
  return node(Expr::Op::Piecewise, 0.0, 1, std::move(pieces), std::move(cuts));
}

double eval(const Expr& e, double x) {
  switch (e.op) {
    case Expr::Op::Const:
      return e.value;
    case Expr::Op::Var:
      return x;
    case Expr::Op::Add: {
      double s = 0;
      for (const auto& k : e.kids) s += eval(*k, x);
      return s;
    }
    case Expr::Op::Mul: {
      double p = 1;
      for (const auto& k : e.kids) p *= eval(*k, x);
      return p;
    }
    case Expr::Op::Pow: {
      double b = eval(*e.kids[0], x);
      int n = e.exponent;
      if (n < 0) return 1.0 / std::pow(b, -n);
      double r = 1;
      for (int i = 0; i < n; ++i) r *= b;
      return r;
    }
    case Expr::Op::Sin:
      return std::sin(eval(*e.kids[0], x));
    case Expr::Op::Cos:
      return std::cos(eval(*e.kids[0], x));
    case Expr::Op::Tan:
      return std::tan(eval(*e.kids[0], x));
    case Expr::Op::Log:
      return std::log(eval(*e.kids[0], x)) / std::log(e.value);
    case Expr::Op::Abs:
      return std::fabs(eval(*e.kids[0], x));
    case Expr::Op::Sign: {
      double v = eval(*e.kids[0], x);
      return v > 0 ? 1.0 : v < 0 ? -1.0 : 0.0;
    }
    case Expr::Op::Piecewise: {
      std::size_t i = 0;
      while (i < e.cuts.size() && x >= e.cuts[i]) ++i;
      return eval(*e.kids[i], x);
    }
  }
  return 0;
}

ExprPtr simplify(const ExprPtr& e) {
  using Op = Expr::Op;
  switch (e->op) {
    case Op::Add: {
      std::vector<ExprPtr> terms;
      double c = 0;
      bool folded = false;
      for (const auto& kid : e->kids) {
        auto k = simplify(kid);
        if (k->op == Op::Add) {  // flatten
          for (const auto& g : k->kids) {
            if (g->op == Op::Const) {
              c += g->value;
              folded = true;
            } else {
              terms.push_back(g);
            }
          }
        } else if (k->op == Op::Const) {
          c += k->value;
          folded = true;
        } else {
          terms.push_back(k);
        }
      }
      if (folded && c != 0) terms.push_back(constant(c));
      if (terms.empty()) return constant(0);
      if (terms.size() == 1) return terms[0];
      return add(std::move(terms));
    }
    case Op::Mul: {
      std::vector<ExprPtr> factors;
      double c = 1;
      for (const auto& kid : e->kids) {
        auto k = simplify(kid);
        if (k->op == Op::Mul) {
          for (const auto& g : k->kids) {
            if (g->op == Op::Const)
              c *= g->value;
            else
              factors.push_back(g);
          }
        } else if (k->op == Op::Const) {
          c *= k->value;
        } else {
          factors.push_back(k);
        }
      }
      if (c == 0) return constant(0);
      if (c != 1) factors.insert(factors.begin(), constant(c));
      if (factors.empty()) return constant(1);
      if (factors.size() == 1) return factors[0];
      return mul(std::move(factors));
    }
    case Op::Pow: {
      auto base = simplify(e->kids[0]);
      if (e->exponent == 0) return constant(1);
      if (e->exponent == 1) return base;
      if (base->op == Op::Const) {
        double r = 1;
        int n = std::abs(e->exponent);
        for (int i = 0; i < n; ++i) r *= base->value;
        return constant(e->exponent > 0 ? r : 1.0 / r);
      }
      return pow_int(std::move(base), e->exponent);
    }
    case Op::Sin:
      return sin_of(simplify(e->kids[0]));
    case Op::Cos:
      return cos_of(simplify(e->kids[0]));
    case Op::Tan:
      return tan_of(simplify(e->kids[0]));
    case Op::Log:
      return log_base(e->value, simplify(e->kids[0]));
    case Op::Abs:
      return abs_of(simplify(e->kids[0]));
    case Op::Sign:
      return sign_of(simplify(e->kids[0]));
    case Op::Piecewise: {
      std::vector<ExprPtr> pieces;
      pieces.reserve(e->kids.size());
      for (const auto& k : e->kids) pieces.push_back(simplify(k));
      return piecewise(std::move(pieces), e->cuts);
    }
    default:
      return e;
  }
}

namespace {

ExprPtr d(const ExprPtr& e) {
  using Op = Expr::Op;
  switch (e->op) {
    case Op::Const:
      return constant(0);
    case Op::Var:
      return constant(1);
    case Op::Add: {
      std::vector<ExprPtr> parts;
      for (const auto& k : e->kids) parts.push_back(d(k));
      return add(std::move(parts));
    }
    case Op::Mul: {
      std::vector<ExprPtr> sum;
      for (std::size_t i = 0; i < e->kids.size(); ++i) {
        std::vector<ExprPtr> factors;
        for (std::size_t j = 0; j < e->kids.size(); ++j)
          factors.push_back(i == j ? d(e->kids[j]) : e->kids[j]);
        sum.push_back(mul(std::move(factors)));
      }
      return add(std::move(sum));
    }
    case Op::Pow:
      return mul({constant(e->exponent), pow_int(e->kids[0], e->exponent - 1), d(e->kids[0])});
    case Op::Sin:
      return mul({cos_of(e->kids[0]), d(e->kids[0])});
    case Op::Cos:
      return mul({constant(-1), sin_of(e->kids[0]), d(e->kids[0])});
    case Op::Tan:
      return mul({d(e->kids[0]), pow_int(cos_of(e->kids[0]), -2)});
    case Op::Log:
      return mul({d(e->kids[0]), constant(1.0 / std::log(e->value)), pow_int(e->kids[0], -1)});
    case Op::Abs:
      return mul({sign_of(e->kids[0]), d(e->kids[0])});
    case Op::Sign:
      return constant(0);  // almost everywhere
    case Op::Piecewise: {
      std::vector<ExprPtr> pieces;
      for (const auto& k : e->kids) pieces.push_back(d(k));
      return piecewise(std::move(pieces), e->cuts);
    }
  }
  return constant(0);
}

}  // namespace

ExprPtr differentiate(const ExprPtr& e) { return simplify(d(e)); }

namespace {

std::string const_text(double v) {
  // Integers bare; otherwise up to 4 decimals, trailing zeros trimmed.
  if (v == std::floor(v) && std::fabs(v) < 1e15)
    return std::to_string(static_cast<long long>(v));
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  std::string s = buf;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

std::string atom_text(const ExprPtr& e);

/// Splits a term into (negative?, magnitude text) for sum printing.
std::pair<bool, std::string> term_text(const ExprPtr& e) {
  using Op = Expr::Op;
  if (e->op == Op::Const) {
    bool neg = e->value < 0;
    return {neg, const_text(std::fabs(e->value))};
  }
  if (e->op == Op::Mul) {
    bool neg = false;
    std::string num, den;
    for (const auto& k : e->kids) {
      if (k->op == Op::Const) {
        if (k->value < 0) neg = !neg;
        double mag = std::fabs(k->value);
        if (mag != 1) num += const_text(mag);
      } else if (k->op == Op::Pow && k->exponent < 0) {
        den += atom_text(pow_int(k->kids[0], -k->exponent));
      } else {
        num += atom_text(k);
      }
    }
    if (num.empty()) num = "1";
    return {neg, den.empty() ? num : num + "/" + den};
  }
  return {false, atom_text(e)};
}

std::string atom_text(const ExprPtr& e) {
  using Op = Expr::Op;
  switch (e->op) {
    case Op::Const:
      return e->value < 0 ? "(" + const_text(e->value) + ")" : const_text(e->value);
    case Op::Var:
      return "x";
    case Op::Add: {
      std::string out;
      for (std::size_t i = 0; i < e->kids.size(); ++i) {
        auto [neg, body] = term_text(e->kids[i]);
        if (i == 0)
          out += neg ? "-" + body : body;
        else
          out += (neg ? " - " : " + ") + body;
      }
      return out;
    }
    case Op::Mul: {
      auto [neg, body] = term_text(e);
      return neg ? "-" + body : body;
    }
    case Op::Pow: {
      const auto& base = e->kids[0];
      std::string exp = std::to_string(e->exponent);
      if (base->op == Op::Sin || base->op == Op::Cos || base->op == Op::Tan) {
        std::string inner = atom_text(base);
        std::size_t paren = inner.find('(');
        return inner.substr(0, paren) + "^" + exp + inner.substr(paren);
      }
      if (base->op == Op::Var) return "x^" + exp;
      return "(" + atom_text(base) + ")^" + exp;
    }
    case Op::Sin:
      return "sin(" + atom_text(e->kids[0]) + ")";
    case Op::Cos:
      return "cos(" + atom_text(e->kids[0]) + ")";
    case Op::Tan:
      return "tan(" + atom_text(e->kids[0]) + ")";
    case Op::Log:
      return "log_" + const_text(e->value) + "(" + atom_text(e->kids[0]) + ")";
    case Op::Abs:
      return "|" + atom_text(e->kids[0]) + "|";
    case Op::Sign:
      return "sign(" + atom_text(e->kids[0]) + ")";
    case Op::Piecewise: {
      std::string out = "{ ";
      for (std::size_t i = 0; i < e->kids.size(); ++i) {
        if (i) out += " ; ";
        out += atom_text(e->kids[i]);
      }
      return out + " }";
    }
  }
  return "?";
}

}  // namespace

std::string to_string(const ExprPtr& e) { return atom_text(simplify(e)); }

std::string poly_text(const std::vector<double>& coeffs_high_to_low) {
  const auto& c = coeffs_high_to_low;
  int degree = static_cast<int>(c.size()) - 1;
  std::string out;
  for (int i = 0; i <= degree; ++i) {
    double coeff = c[i];
    if (coeff == 0) continue;
    int power = degree - i;
    bool neg = coeff < 0;
    double mag = std::fabs(coeff);
    std::string body;
    if (power == 0)
      body = const_text(mag);
    else {
      if (mag != 1) body = const_text(mag);
      body += power == 1 ? "x" : "x^" + std::to_string(power);
    }
    if (out.empty())
      out += neg ? "-" + body : body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  if (out.empty()) out = "0";
  return out;
}

}  // namespace diagen::fn
