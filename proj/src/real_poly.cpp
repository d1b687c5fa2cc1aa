#include "scal/real_poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace scal {

Exponent operator+(const Exponent &x, const Exponent &y) {
  return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
}

std::string to_string(const Exponent &e) {
  std::ostringstream os;
  os << "(" << e.a << "," << e.b << "," << e.c << "," << e.d << ")";
  return os.str();
}

int VanishingOrder::value() const {
  if (!value_) {
    throw Error("vanishing order of the zero polynomial is INFINITE");
  }
  return *value_;
}

VanishingOrder operator+(const VanishingOrder &x, const VanishingOrder &y) {
  if (x.is_infinite() || y.is_infinite()) {
    return VanishingOrder::infinite();
  }
  return VanishingOrder::finite(*x.value_ + *y.value_);
}

bool operator<(const VanishingOrder &x, const VanishingOrder &y) {
  if (x.is_infinite()) {
    return false;
  }
  if (y.is_infinite()) {
    return true;
  }
  return *x.value_ < *y.value_;
}

std::string to_string(const VanishingOrder &v) {
  return v.is_infinite() ? std::string("INFINITE") : std::to_string(v.value());
}

NumericPoint to_numeric(const Point &p) { return {p.w.to_complex(), p.z.to_complex()}; }

std::string to_string(const Point &p) { return "(" + to_string(p.w) + ", " + to_string(p.z) + ")"; }

Scalar evaluate(const RealPoly &p, const Point &at) {
  const Scalar zb = conj(at.z);
  const Scalar u = at.w.re();
  const Scalar v = at.w.im();
  Scalar acc(0);
  for (const auto &[e, c] : p.terms()) {
    acc += c * pow(at.z, static_cast<unsigned>(e.a)) * pow(zb, static_cast<unsigned>(e.b)) *
           pow(u, static_cast<unsigned>(e.c)) * pow(v, static_cast<unsigned>(e.d));
  }
  return acc;
}

double poly_eval(const RealPoly &p, const NumericPoint &at) { return NumericPoly(p)(at); }

NumericPoly::NumericPoly(const RealPoly &p) {
  terms_.reserve(p.size());
  for (const auto &[e, c] : p.terms()) {
    terms_.push_back({e, c.to_complex()});
    max_.a = std::max(max_.a, e.a);
    max_.b = std::max(max_.b, e.b);
    max_.c = std::max(max_.c, e.c);
    max_.d = std::max(max_.d, e.d);
  }
}

double NumericPoly::operator()(const NumericPoint &at) const {
  constexpr int kStack = 32;
  std::complex<double> zp[kStack], zbp[kStack];
  double up[kStack], vp[kStack];
  const int top = std::max({max_.a, max_.b, max_.c, max_.d});
  if (top >= kStack) {
    throw Error("polynomial degree too large for the numeric evaluator");
  }
  const std::complex<double> z = at[1];
  const std::complex<double> zb = std::conj(z);
  const double u = at[0].real();
  const double v = at[0].imag();
  zp[0] = zbp[0] = 1.0;
  up[0] = vp[0] = 1.0;
  for (int k = 1; k <= top; ++k) {
    zp[k] = zp[k - 1] * z;
    zbp[k] = zbp[k - 1] * zb;
    up[k] = up[k - 1] * u;
    vp[k] = vp[k - 1] * v;
  }
  std::complex<double> acc = 0.0;
  for (const auto &t : terms_) {
    acc += t.c * zp[t.e.a] * zbp[t.e.b] * (up[t.e.c] * vp[t.e.d]);
  }
  return acc.real();
}

HoloPoly harmonic_part(const RealPoly &p, int lo, int hi) {
  if (!p.z_only()) {
    throw Error("harmonic extraction needs a polynomial in (z, zbar) only");
  }
  std::vector<Scalar> coeffs;
  for (const auto &[e, c] : p.terms()) {
    if (e.b == 0 && e.a >= lo && e.a <= hi) {
      if (static_cast<int>(coeffs.size()) <= e.a) {
        coeffs.resize(static_cast<std::size_t>(e.a) + 1, Scalar(0));
      }
      coeffs[static_cast<std::size_t>(e.a)] = c;
    }
  }
  return HoloPoly(std::move(coeffs));
}

HoloPoly harmonic_extract(const RealPoly &p, int r) { return harmonic_part(p, 1, r); }

RealPoly harmonic_sum(const HoloPoly &h) {
  return RealPoly::from_holo(h) + RealPoly::from_holo(h, true);
}

VanishingOrder vanishing_order(const RealPoly &p) {
  if (p.is_zero()) {
    return VanishingOrder::infinite();
  }
  int best = p.terms().begin()->first.total();
  for (const auto &[e, c] : p.terms()) {
    best = std::min(best, e.total());
  }
  return VanishingOrder::finite(best);
}

Scalar linf_norm_sq(const RealPoly &p) {
  bool exact = true;
  for (const auto &[e, c] : p.terms()) {
    exact = exact && c.is_exact();
  }
  if (exact) {
    Rational best(0);
    for (const auto &[e, c] : p.terms()) {
      best = std::max(best, c.exact().norm_sq());
    }
    return Scalar(best);
  }
  double best = 0.0;
  for (const auto &[e, c] : p.terms()) {
    best = std::max(best, std::norm(c.to_complex()));
  }
  return Scalar::numeric(best);
}

Scalar linf_norm(const RealPoly &p) { return nth_root(linf_norm_sq(p), 2); }

RealPoly exact_divide(const RealPoly &p, const RealPoly &t) {
  Scalar alpha(0), beta(0);
  for (const auto &[e, c] : t.terms()) {
    if (e == Exponent{0, 0, 1, 0}) {
      alpha = c;
    } else if (e == Exponent{0, 0, 0, 1}) {
      beta = c;
    } else {
      throw Error("divisor must be a linear form in (u, v)");
    }
  }
  if (!alpha.is_real() || !beta.is_real()) {
    throw Error("divisor must be a real linear form in (u, v)");
  }
  if (alpha.is_zero() && beta.is_zero()) {
    throw DivisionByZero("division by the zero linear form");
  }
  const RealPoly U = RealPoly::variable(Var::U);
  const RealPoly V = RealPoly::variable(Var::V);

  // Change coordinates so that the divisor is a single variable s: with
  // beta != 0 take (u, s = alpha u + beta v), otherwise s = alpha u.
  const Var slot = beta.is_zero() ? Var::U : Var::V;
  RealPoly changed = beta.is_zero() ? p.substitute(Var::U, U * (Scalar(1) / alpha))
                                    : p.substitute(Var::V, (V - alpha * U) * (Scalar(1) / beta));
  RealPoly quotient;
  for (const auto &[e, c] : changed.terms()) {
    const int power = slot == Var::U ? e.c : e.d;
    if (power == 0) {
      throw NotDivisible("monomial " + to_string(e) + " survives on the zero set of the divisor");
    }
    Exponent lowered = e;
    (slot == Var::U ? lowered.c : lowered.d) -= 1;
    quotient.add_term(lowered, c);
  }
  return beta.is_zero() ? quotient.substitute(Var::U, alpha * U)
                        : quotient.substitute(Var::V, alpha * U + beta * V);
}

RealPoly laplacian_density(const RealPoly &p) {
  RealPoly out;
  for (const auto &[e, c] : p.terms()) {
    if (e.a > 0 && e.b > 0) {
      out.add_term({e.a - 1, e.b - 1, e.c, e.d}, c * Scalar(e.a * e.b));
    }
  }
  return out;
}

RealPoly real_part(const RealPoly &x) { return (x + x.conj_reflect()) * Scalar(Rational(1, 2)); }

RealPoly imag_part(const RealPoly &x) {
  return (x - x.conj_reflect()) * (Scalar(1) / (Scalar(2) * Scalar::i()));
}

std::string to_string(const RealPoly &p) {
  if (p.is_zero()) {
    return "0";
  }
  static const char *names[4] = {"z", "zb", "u", "v"};
  std::string out;
  for (const auto &[e, c] : p.terms()) {
    if (!out.empty()) {
      out += " + ";
    }
    std::string mono;
    const int exps[4] = {e.a, e.b, e.c, e.d};
    for (int k = 0; k < 4; ++k) {
      if (exps[k] == 0) {
        continue;
      }
      if (!mono.empty()) {
        mono += "*";
      }
      mono += names[k];
      if (exps[k] > 1) {
        mono += "^" + std::to_string(exps[k]);
      }
    }
    std::string cs = to_string(c);
    if (mono.empty()) {
      out += cs;
    } else if (cs == "1") {
      out += mono;
    } else {
      out += (c.is_exact() && !c.is_real() ? "(" + cs + ")" : cs) + "*" + mono;
    }
  }
  return out;
}

RealPoly chop(const RealPoly &p, double tol) {
  RealPoly out;
  for (const auto &[e, c] : p.terms()) {
    if (c.is_exact() || c.abs() > tol) {
      out.add_term(e, c);
    }
  }
  return out;
}

ParamPoly lift(const RealPoly &p) {
  return p.map([](const Scalar &c) { return ParamRational::from_scalar(c); });
}

} // namespace scal
