#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace scal {

using Rational = mpq_class;

/// Base class for every typed failure raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string &what) : std::runtime_error(what) {}
  virtual std::string kind() const { return "Error"; }
};

#define SCAL_DECLARE_ERROR(Name)                                              \
  class Name : public Error {                                                 \
  public:                                                                     \
    using Error::Error;                                                       \
    std::string kind() const override { return #Name; }                       \
  };

SCAL_DECLARE_ERROR(ParseError)
SCAL_DECLARE_ERROR(DivisionByZero)

/// Parses "p/q", "p", or a plain decimal such as "-0.25" into an exact rational.
Rational parse_rational(const std::string &text);
std::string format_rational(const Rational &q);

/// Gaussian rational re + i*im.
struct Gauss {
  Rational re;
  Rational im;

  Gauss() = default;
  Gauss(Rational r) : re(std::move(r)), im(0) {}
  Gauss(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  Gauss(long r) : re(r), im(0) {}
  Gauss(int r) : re(r), im(0) {}

  static Gauss i() { return Gauss(0, 1); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  Rational norm_sq() const { return re * re + im * im; }
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  Gauss &operator+=(const Gauss &o);
  Gauss &operator-=(const Gauss &o);
  Gauss &operator*=(const Gauss &o);
  Gauss &operator/=(const Gauss &o);
};

Gauss operator+(Gauss a, const Gauss &b);
Gauss operator-(Gauss a, const Gauss &b);
Gauss operator*(Gauss a, const Gauss &b);
Gauss operator/(Gauss a, const Gauss &b);
Gauss operator-(const Gauss &a);
bool operator==(const Gauss &a, const Gauss &b);
Gauss conj(const Gauss &a);
bool is_zero(const Gauss &a);
std::string to_string(const Gauss &a);

/// A complex coefficient that is either exact (Gaussian rational) or numeric
/// (double complex). Arithmetic between two exact values stays exact; any
/// numeric operand makes the result numeric.
class Scalar {
public:
  using Numeric = std::complex<double>;

  Scalar() : value_(Gauss{}) {}
  Scalar(Gauss g) : value_(std::move(g)) {}
  Scalar(Rational q) : value_(Gauss(std::move(q))) {}
  Scalar(int n) : value_(Gauss(n)) {}
  Scalar(long n) : value_(Gauss(n)) {}
  Scalar(Numeric c) : value_(c) {}
  static Scalar numeric(double re, double im = 0.0) { return Scalar(Numeric(re, im)); }
  static Scalar i() { return Scalar(Gauss::i()); }

  bool is_exact() const { return std::holds_alternative<Gauss>(value_); }
  const Gauss &exact() const;
  std::optional<Gauss> try_exact() const;
  Numeric to_complex() const;

  double real_part() const { return to_complex().real(); }
  double imag_part() const { return to_complex().imag(); }
  double abs() const { return std::abs(to_complex()); }

  bool is_zero() const;
  bool is_real() const;

  Scalar re() const;
  Scalar im() const;

  Scalar &operator+=(const Scalar &o);
  Scalar &operator-=(const Scalar &o);
  Scalar &operator*=(const Scalar &o);
  Scalar &operator/=(const Scalar &o);

  friend bool operator==(const Scalar &a, const Scalar &b);

private:
  std::variant<Gauss, Numeric> value_;
};

Scalar operator+(Scalar a, const Scalar &b);
Scalar operator-(Scalar a, const Scalar &b);
Scalar operator*(Scalar a, const Scalar &b);
Scalar operator/(Scalar a, const Scalar &b);
Scalar operator-(const Scalar &a);
Scalar conj(const Scalar &a);
bool is_zero(const Scalar &a);
std::string to_string(const Scalar &a);

/// Real part comparison for real-valued scalars; exact when both are exact.
bool real_less(const Scalar &a, const Scalar &b);

/// Integer power, n >= 0.
Scalar pow(const Scalar &base, unsigned n);

/// Real positive n-th root; exact when the argument is an exact rational
/// whose numerator and denominator are perfect n-th powers.
Scalar nth_root(const Scalar &x, unsigned n);

/// Shortest round-trip decimal for a double.
std::string format_double(double x);

} // namespace scal
