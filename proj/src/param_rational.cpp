#include "scal/param_rational.hpp"

namespace scal {

ParamRational::ParamRational(MuPoly num, MuPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) {
    throw DivisionByZero("rational function with zero denominator");
  }
  reduce();
}

ParamRational ParamRational::mu() { return ParamRational(MuPoly::identity(), MuPoly::constant(Gauss(1))); }

ParamRational ParamRational::from_scalar(const Scalar &s) {
  auto g = s.try_exact();
  if (!g) {
    throw Error("cannot lift a numeric scalar into an exact mu-family");
  }
  return ParamRational(*g);
}

void ParamRational::reduce() {
  if (num_.is_zero()) {
    den_ = MuPoly::constant(Gauss(1));
    return;
  }
  if (den_.degree() > 0) {
    MuPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
  }
  Gauss lc = den_.leading();
  if (!(lc == Gauss(1))) {
    Gauss inv = Gauss(1) / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

Gauss ParamRational::constant_value() const {
  if (!is_constant()) {
    throw Error("parameter-dependent value " + to_string(*this) + " used as a constant");
  }
  return num_.coeff(0);
}

Scalar ParamRational::eval(const Scalar &mu0) const {
  Scalar d = den_(mu0);
  if (d.is_zero()) {
    throw PoleAtParameter("pole of " + to_string(*this) + " at mu = " + to_string(mu0));
  }
  return num_(mu0) / d;
}

ParamRational &ParamRational::operator+=(const ParamRational &o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  reduce();
  return *this;
}

ParamRational &ParamRational::operator-=(const ParamRational &o) {
  if (den_ == o.den_) {
    num_ -= o.num_;
  } else {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
  }
  reduce();
  return *this;
}

ParamRational &ParamRational::operator*=(const ParamRational &o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

ParamRational &ParamRational::operator/=(const ParamRational &o) {
  if (o.is_zero()) {
    throw DivisionByZero("division by the zero rational function");
  }
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  reduce();
  return *this;
}

ParamRational operator+(ParamRational a, const ParamRational &b) { return a += b; }
ParamRational operator-(ParamRational a, const ParamRational &b) { return a -= b; }
ParamRational operator*(ParamRational a, const ParamRational &b) { return a *= b; }
ParamRational operator/(ParamRational a, const ParamRational &b) { return a /= b; }
ParamRational operator-(const ParamRational &a) { return ParamRational(0) - a; }

ParamRational conj(const ParamRational &a) { return ParamRational(conj(a.num()), conj(a.den())); }

bool is_zero(const ParamRational &a) { return a.is_zero(); }

ParamRational pow(const ParamRational &base, unsigned n) {
  ParamRational r(1);
  for (unsigned k = 0; k < n; ++k) {
    r *= base;
  }
  return r;
}

std::string to_string(const MuPoly &p, const std::string &var) {
  if (p.is_zero()) {
    return "0";
  }
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Gauss &c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) {
      continue;
    }
    std::string cs = to_string(c);
    bool compound = !c.is_real() && c.re != 0;
    if (compound) {
      cs = "(" + cs + ")";
    }
    bool negative = !compound && cs.front() == '-';
    if (!out.empty()) {
      out += negative ? " - " : " + ";
      if (negative) {
        cs = cs.substr(1);
      }
    }
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (k == 0) {
      out += cs;
    } else if (cs == "1") {
      out += mono;
    } else if (cs == "-1") {
      out += "-" + mono;
    } else {
      out += cs + "*" + mono;
    }
  }
  return out;
}

std::string to_string(const ParamRational &a) {
  if (a.den().degree() == 0) {
    return to_string(a.num());
  }
  return "(" + to_string(a.num()) + ")/(" + to_string(a.den()) + ")";
}

RationalLimit rational_limit(const ParamRational &f) {
  if (f.is_zero()) {
    return {true, Gauss(0)};
  }
  int dn = f.num().degree();
  int dd = f.den().degree();
  if (dn > dd) {
    return {false, Gauss(0)};
  }
  if (dn < dd) {
    return {true, Gauss(0)};
  }
  return {true, f.num().leading() / f.den().leading()};
}

} // namespace scal
