#pragma once

#include <optional>
#include <string>

#include "scal/unipoly.hpp"

namespace scal {

SCAL_DECLARE_ERROR(PoleAtParameter)

/// Rational function num(mu)/den(mu) of the real parameter mu with exact
/// Gaussian-rational coefficients. Always stored reduced, with a monic
/// denominator; zero is 0/1.
class ParamRational {
public:
  ParamRational() : den_(MuPoly::constant(Gauss(1))) {}
  ParamRational(Gauss c) : num_(MuPoly::constant(std::move(c))), den_(MuPoly::constant(Gauss(1))) {}
  ParamRational(Rational c) : ParamRational(Gauss(std::move(c))) {}
  ParamRational(int c) : ParamRational(Gauss(c)) {}
  ParamRational(long c) : ParamRational(Gauss(c)) {}
  ParamRational(MuPoly num, MuPoly den);

  /// The parameter mu itself.
  static ParamRational mu();
  /// Lifts an exact Scalar; numeric scalars are rejected.
  static ParamRational from_scalar(const Scalar &s);

  const MuPoly &num() const { return num_; }
  const MuPoly &den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  /// The constant value; throws when the function depends on mu.
  Gauss constant_value() const;

  Scalar eval(const Scalar &mu0) const;

  ParamRational &operator+=(const ParamRational &o);
  ParamRational &operator-=(const ParamRational &o);
  ParamRational &operator*=(const ParamRational &o);
  ParamRational &operator/=(const ParamRational &o);

  friend bool operator==(const ParamRational &a, const ParamRational &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

private:
  void reduce();

  MuPoly num_;
  MuPoly den_;
};

ParamRational operator+(ParamRational a, const ParamRational &b);
ParamRational operator-(ParamRational a, const ParamRational &b);
ParamRational operator*(ParamRational a, const ParamRational &b);
ParamRational operator/(ParamRational a, const ParamRational &b);
ParamRational operator-(const ParamRational &a);
ParamRational conj(const ParamRational &a);
bool is_zero(const ParamRational &a);
ParamRational pow(const ParamRational &base, unsigned n);
std::string to_string(const ParamRational &a);
std::string to_string(const MuPoly &p, const std::string &var = "mu");

/// Limit of a rational function as mu -> +infinity.
struct RationalLimit {
  bool finite = false;
  Gauss value; ///< meaningful only when finite
};

RationalLimit rational_limit(const ParamRational &f);

} // namespace scal
