#include "scal/scalar.hpp"

#include <charconv>
#include <cmath>
#include <regex>

namespace scal {

Rational parse_rational(const std::string &text) {
  static const std::regex fraction(R"(^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$)");
  static const std::regex decimal(R"(^\s*([+-]?)(\d*)\.?(\d*)(?:[eE]([+-]?\d+))?\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, fraction)) {
    mpz_class num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str(), 10);
    mpz_class den(1);
    if (m[2].matched) {
      den = mpz_class(m[2].str(), 10);
      if (den == 0) {
        throw ParseError("zero denominator in rational '" + text + "'");
      }
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (std::regex_match(text, m, decimal) && (m[2].length() + m[3].length()) > 0) {
    std::string digits = m[2].str() + m[3].str();
    long exponent = -static_cast<long>(m[3].length());
    if (m[4].matched) {
      exponent += std::stol(m[4].str());
    }
    mpz_class mantissa(digits.empty() ? "0" : digits, 10);
    if (m[1].str() == "-") {
      mantissa = -mantissa;
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    Rational q = exponent >= 0 ? Rational(mantissa * scale) : Rational(mantissa, scale);
    q.canonicalize();
    return q;
  }
  throw ParseError("cannot parse rational '" + text + "'");
}

std::string format_rational(const Rational &q) { return q.get_str(10); }

Gauss &Gauss::operator+=(const Gauss &o) {
  re += o.re;
  im += o.im;
  return *this;
}

Gauss &Gauss::operator-=(const Gauss &o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Gauss &Gauss::operator*=(const Gauss &o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Gauss &Gauss::operator/=(const Gauss &o) {
  Rational d = o.norm_sq();
  if (d == 0) {
    throw DivisionByZero("division by exact zero");
  }
  Rational r = (re * o.re + im * o.im) / d;
  Rational i = (im * o.re - re * o.im) / d;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Gauss operator+(Gauss a, const Gauss &b) { return a += b; }
Gauss operator-(Gauss a, const Gauss &b) { return a -= b; }
Gauss operator*(Gauss a, const Gauss &b) { return a *= b; }
Gauss operator/(Gauss a, const Gauss &b) { return a /= b; }
Gauss operator-(const Gauss &a) { return Gauss(-a.re, -a.im); }
bool operator==(const Gauss &a, const Gauss &b) { return a.re == b.re && a.im == b.im; }
Gauss conj(const Gauss &a) { return Gauss(a.re, -a.im); }
bool is_zero(const Gauss &a) { return a.is_zero(); }

std::string to_string(const Gauss &a) {
  if (a.im == 0) {
    return format_rational(a.re);
  }
  if (a.re == 0) {
    return format_rational(a.im) + "i";
  }
  std::string sign = a.im < 0 ? "-" : "+";
  Rational mag = abs(a.im);
  return format_rational(a.re) + sign + format_rational(mag) + "i";
}

// ---------------------------------------------------------------------------

const Gauss &Scalar::exact() const {
  if (!is_exact()) {
    throw Error("numeric scalar used where an exact value is required");
  }
  return std::get<Gauss>(value_);
}

std::optional<Gauss> Scalar::try_exact() const {
  if (is_exact()) {
    return std::get<Gauss>(value_);
  }
  return std::nullopt;
}

Scalar::Numeric Scalar::to_complex() const {
  if (is_exact()) {
    return std::get<Gauss>(value_).to_complex();
  }
  return std::get<Numeric>(value_);
}

bool Scalar::is_zero() const {
  if (is_exact()) {
    return std::get<Gauss>(value_).is_zero();
  }
  return std::get<Numeric>(value_) == Numeric(0.0, 0.0);
}

bool Scalar::is_real() const {
  if (is_exact()) {
    return std::get<Gauss>(value_).is_real();
  }
  return std::get<Numeric>(value_).imag() == 0.0;
}

Scalar Scalar::re() const {
  if (is_exact()) {
    return Scalar(Gauss(std::get<Gauss>(value_).re));
  }
  return Scalar(Numeric(std::get<Numeric>(value_).real(), 0.0));
}

Scalar Scalar::im() const {
  if (is_exact()) {
    return Scalar(Gauss(std::get<Gauss>(value_).im));
  }
  return Scalar(Numeric(std::get<Numeric>(value_).imag(), 0.0));
}

Scalar &Scalar::operator+=(const Scalar &o) {
  if (is_exact() && o.is_exact()) {
    std::get<Gauss>(value_) += std::get<Gauss>(o.value_);
  } else {
    value_ = to_complex() + o.to_complex();
  }
  return *this;
}

Scalar &Scalar::operator-=(const Scalar &o) {
  if (is_exact() && o.is_exact()) {
    std::get<Gauss>(value_) -= std::get<Gauss>(o.value_);
  } else {
    value_ = to_complex() - o.to_complex();
  }
  return *this;
}

Scalar &Scalar::operator*=(const Scalar &o) {
  if (is_exact() && o.is_exact()) {
    std::get<Gauss>(value_) *= std::get<Gauss>(o.value_);
  } else {
    value_ = to_complex() * o.to_complex();
  }
  return *this;
}

Scalar &Scalar::operator/=(const Scalar &o) {
  if (is_exact() && o.is_exact()) {
    std::get<Gauss>(value_) /= std::get<Gauss>(o.value_);
  } else {
    if (o.is_zero()) {
      throw DivisionByZero("division by numeric zero");
    }
    value_ = to_complex() / o.to_complex();
  }
  return *this;
}

bool operator==(const Scalar &a, const Scalar &b) {
  if (a.is_exact() && b.is_exact()) {
    return std::get<Gauss>(a.value_) == std::get<Gauss>(b.value_);
  }
  return a.to_complex() == b.to_complex();
}

Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }
Scalar operator-(const Scalar &a) { return Scalar(0) - a; }

Scalar conj(const Scalar &a) {
  if (auto g = a.try_exact()) {
    return Scalar(conj(*g));
  }
  return Scalar(std::conj(a.to_complex()));
}

bool is_zero(const Scalar &a) { return a.is_zero(); }

std::string to_string(const Scalar &a) {
  if (auto g = a.try_exact()) {
    return to_string(*g);
  }
  auto c = a.to_complex();
  if (c.imag() == 0.0) {
    return format_double(c.real());
  }
  return "(" + format_double(c.real()) + (c.imag() < 0 ? "-" : "+") +
         format_double(std::abs(c.imag())) + "i)";
}

bool real_less(const Scalar &a, const Scalar &b) {
  if (a.is_exact() && b.is_exact()) {
    return a.exact().re < b.exact().re;
  }
  return a.real_part() < b.real_part();
}

Scalar pow(const Scalar &base, unsigned n) {
  Scalar result(1);
  Scalar b = base;
  while (n > 0) {
    if (n & 1U) {
      result *= b;
    }
    n >>= 1U;
    if (n > 0) {
      b *= b;
    }
  }
  return result;
}

namespace {

std::optional<mpz_class> exact_integer_root(const mpz_class &x, unsigned n) {
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), x.get_mpz_t(), n) != 0) {
    return r;
  }
  return std::nullopt;
}

} // namespace

Scalar nth_root(const Scalar &x, unsigned n) {
  if (n == 0) {
    throw Error("zeroth root requested");
  }
  if (!x.is_real() || x.real_part() < 0.0) {
    throw Error("nth_root requires a nonnegative real argument");
  }
  if (auto g = x.try_exact()) {
    auto num = exact_integer_root(g->re.get_num(), n);
    auto den = exact_integer_root(g->re.get_den(), n);
    if (num && den) {
      Rational q(*num, *den);
      q.canonicalize();
      return Scalar(q);
    }
  }
  return Scalar::numeric(std::pow(x.real_part(), 1.0 / static_cast<double>(n)));
}

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

} // namespace scal
