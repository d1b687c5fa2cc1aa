#pragma once

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scal/param_rational.hpp"
#include "scal/unipoly.hpp"

namespace scal {

SCAL_DECLARE_ERROR(NotDivisible)
SCAL_DECLARE_ERROR(RealityViolation)

/// Exponents of z^a zbar^b u^c v^d, where u = Re w and v = Im w.
struct Exponent {
  int a = 0;
  int b = 0;
  int c = 0;
  int d = 0;

  int total() const { return a + b + c + d; }
  Exponent reflected() const { return {b, a, c, d}; }
  bool z_only() const { return c == 0 && d == 0; }
  auto operator<=>(const Exponent &) const = default;
};

Exponent operator+(const Exponent &x, const Exponent &y);
std::string to_string(const Exponent &e);

enum class Var { Z = 0, ZBar = 1, U = 2, V = 3 };

/// Sparse polynomial in (z, zbar, u, v) with coefficients in K. Zero
/// coefficients are never stored.
template <typename K> class MultiPoly {
public:
  using Terms = std::map<Exponent, K>;

  MultiPoly() = default;
  static MultiPoly constant(K c) { return term({}, std::move(c)); }
  static MultiPoly term(Exponent e, K c) {
    MultiPoly p;
    p.add_term(e, std::move(c));
    return p;
  }
  static MultiPoly variable(Var v) {
    Exponent e;
    switch (v) {
    case Var::Z: e.a = 1; break;
    case Var::ZBar: e.b = 1; break;
    case Var::U: e.c = 1; break;
    case Var::V: e.d = 1; break;
    }
    return term(e, K(1));
  }
  /// Embeds a holomorphic polynomial in z (or, with bar = true, its
  /// conjugate reflection in zbar).
  static MultiPoly from_holo(const UniPoly<K> &h, bool bar = false) {
    MultiPoly p;
    for (std::size_t k = 0; k < h.coeffs().size(); ++k) {
      Exponent e;
      (bar ? e.b : e.a) = static_cast<int>(k);
      p.add_term(e, bar ? detail::coeff_conj(h.coeffs()[k]) : h.coeffs()[k]);
    }
    return p;
  }

  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  K coeff(const Exponent &e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? K(0) : it->second;
  }

  void add_term(const Exponent &e, const K &c) {
    if (detail::coeff_is_zero(c)) {
      return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (detail::coeff_is_zero(it->second)) {
        terms_.erase(it);
      }
    }
  }

  MultiPoly &operator+=(const MultiPoly &o) {
    for (const auto &[e, c] : o.terms_) {
      add_term(e, c);
    }
    return *this;
  }
  MultiPoly &operator-=(const MultiPoly &o) {
    for (const auto &[e, c] : o.terms_) {
      add_term(e, K(0) - c);
    }
    return *this;
  }
  MultiPoly &operator*=(const K &s) {
    if (detail::coeff_is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second *= s;
      it = detail::coeff_is_zero(it->second) ? terms_.erase(it) : std::next(it);
    }
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly &b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly &b) { return a -= b; }
  friend MultiPoly operator-(MultiPoly a) { return a *= K(-1); }
  friend MultiPoly operator*(MultiPoly a, const K &s) { return a *= s; }
  friend MultiPoly operator*(const K &s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator*(const MultiPoly &x, const MultiPoly &y) {
    MultiPoly out;
    for (const auto &[ex, cx] : x.terms_) {
      for (const auto &[ey, cy] : y.terms_) {
        out.add_term(ex + ey, cx * cy);
      }
    }
    return out;
  }
  friend bool operator==(const MultiPoly &x, const MultiPoly &y) {
    if (x.terms_.size() != y.terms_.size()) {
      return false;
    }
    auto it = y.terms_.begin();
    for (const auto &[e, c] : x.terms_) {
      if (!(it->first == e) || !(it->second == c)) {
        return false;
      }
      ++it;
    }
    return true;
  }

  /// Swaps z and zbar and conjugates coefficients; a real-valued polynomial
  /// is a fixed point.
  MultiPoly conj_reflect() const {
    MultiPoly out;
    for (const auto &[e, c] : terms_) {
      out.terms_.emplace(e.reflected(), detail::coeff_conj(c));
    }
    return out;
  }

  /// First exponent breaking coeff(a,b,c,d) == conj(coeff(b,a,c,d)).
  std::optional<Exponent> reality_violation() const {
    for (const auto &[e, c] : terms_) {
      auto it = terms_.find(e.reflected());
      if (it == terms_.end() || !(it->second == detail::coeff_conj(c))) {
        return e;
      }
    }
    return std::nullopt;
  }
  bool is_real() const { return !reality_violation().has_value(); }

  int degree() const {
    int deg = -1;
    for (const auto &[e, c] : terms_) {
      deg = std::max(deg, e.total());
    }
    return deg;
  }
  bool z_only() const {
    for (const auto &[e, c] : terms_) {
      if (!e.z_only()) {
        return false;
      }
    }
    return true;
  }
  bool depends_on(Var v) const {
    for (const auto &[e, c] : terms_) {
      int x = v == Var::Z ? e.a : v == Var::ZBar ? e.b : v == Var::U ? e.c : e.d;
      if (x > 0) {
        return true;
      }
    }
    return false;
  }

  template <typename Pred> MultiPoly filter(Pred &&keep) const {
    MultiPoly out;
    for (const auto &[e, c] : terms_) {
      if (keep(e)) {
        out.terms_.emplace(e, c);
      }
    }
    return out;
  }
  MultiPoly homogeneous_part(int n) const {
    return filter([n](const Exponent &e) { return e.total() == n; });
  }
  MultiPoly truncated(int max_degree) const {
    return filter([max_degree](const Exponent &e) { return e.total() <= max_degree; });
  }
  /// Restriction to v = 0.
  MultiPoly at_v_zero() const {
    return filter([](const Exponent &e) { return e.d == 0; });
  }

  template <typename F> auto map(F &&fn) const {
    using R = decltype(fn(std::declval<const K &>()));
    MultiPoly<R> out;
    for (const auto &[e, c] : terms_) {
      out.add_term(e, fn(c));
    }
    return out;
  }

  /// Simultaneous substitution of (z, zbar, u, v).
  MultiPoly substitute(const std::array<MultiPoly, 4> &subs) const {
    std::array<std::vector<MultiPoly>, 4> powers;
    auto power = [&](int slot, int n) -> const MultiPoly & {
      auto &cache = powers[static_cast<std::size_t>(slot)];
      if (cache.empty()) {
        cache.push_back(MultiPoly::constant(K(1)));
      }
      while (static_cast<int>(cache.size()) <= n) {
        cache.push_back(cache.back() * subs[static_cast<std::size_t>(slot)]);
      }
      return cache[static_cast<std::size_t>(n)];
    };
    MultiPoly out;
    for (const auto &[e, c] : terms_) {
      MultiPoly t = MultiPoly::constant(c);
      const int exps[4] = {e.a, e.b, e.c, e.d};
      for (int slot = 0; slot < 4; ++slot) {
        if (exps[slot] > 0) {
          t = t * power(slot, exps[slot]);
        }
      }
      out += t;
    }
    return out;
  }

  /// Replaces a single variable, leaving the others in place.
  MultiPoly substitute(Var var, const MultiPoly &with) const {
    std::array<MultiPoly, 4> subs = {variable(Var::Z), variable(Var::ZBar), variable(Var::U),
                                     variable(Var::V)};
    subs[static_cast<std::size_t>(var)] = with;
    return substitute(subs);
  }

private:
  Terms terms_;
};

/// Real-valued polynomial in (z, zbar, u, v) with Scalar coefficients.
using RealPoly = MultiPoly<Scalar>;
/// Polynomial whose coefficients are rational functions of mu.
using ParamPoly = MultiPoly<ParamRational>;

/// Distinguished vanishing order: a nonnegative integer or INFINITE (zero
/// polynomial). Never converts silently to a number.
class VanishingOrder {
public:
  static VanishingOrder infinite() { return VanishingOrder(); }
  static VanishingOrder finite(int n) { return VanishingOrder(n); }

  bool is_infinite() const { return !value_.has_value(); }
  int value() const;

  friend bool operator==(const VanishingOrder &, const VanishingOrder &) = default;
  friend VanishingOrder operator+(const VanishingOrder &x, const VanishingOrder &y);
  friend bool operator<(const VanishingOrder &x, const VanishingOrder &y);

private:
  VanishingOrder() = default;
  explicit VanishingOrder(int n) : value_(n) {}
  std::optional<int> value_;
};

std::string to_string(const VanishingOrder &v);

/// Point (w, z) of C^2 with coordinates in K.
template <typename K> struct PointOf {
  K w;
  K z;

  friend bool operator==(const PointOf &, const PointOf &) = default;
};

using Point = PointOf<Scalar>;

using NumericPoint = std::array<std::complex<double>, 2>;

NumericPoint to_numeric(const Point &p);
std::string to_string(const Point &p);

/// Exact value of P at (w, z) when everything is exact; numeric otherwise.
Scalar evaluate(const RealPoly &p, const Point &at);

/// Evaluates P at (w, z); the imaginary part is zero by the reality
/// invariant and is discarded.
double poly_eval(const RealPoly &p, const NumericPoint &at);

/// Double-precision evaluator compiled once for repeated sampling.
class NumericPoly {
public:
  explicit NumericPoly(const RealPoly &p);
  double operator()(const NumericPoint &at) const;

private:
  struct Term {
    Exponent e;
    std::complex<double> c;
  };
  std::vector<Term> terms_;
  Exponent max_;
};

/// Holomorphic part h(z) = sum_{j=lo}^{hi} (d^j P/dz^j)(0) z^j / j!, i.e.
/// the pure z^j coefficients. P must not depend on u or v.
HoloPoly harmonic_part(const RealPoly &p, int lo, int hi);
HoloPoly harmonic_extract(const RealPoly &p, int r);
/// h + conj(h) as a real polynomial in (z, zbar).
RealPoly harmonic_sum(const HoloPoly &h);

VanishingOrder vanishing_order(const RealPoly &p);

/// Largest squared modulus of the coefficients (exact when all are exact).
Scalar linf_norm_sq(const RealPoly &p);
/// l-infinity norm in the complex monomial basis; exact when the maximal
/// squared modulus is the square of a rational.
Scalar linf_norm(const RealPoly &p);

/// Quotient of P by the real linear form t = alpha u + beta v.
RealPoly exact_divide(const RealPoly &p, const RealPoly &t);

/// d^2 P / dz dzbar, a real polynomial whose sign is that of the Laplacian.
RealPoly laplacian_density(const RealPoly &p);

/// Real and imaginary parts of X (as polynomials): (X + conj X)/2 and
/// (X - conj X)/(2i).
RealPoly real_part(const RealPoly &x);
RealPoly imag_part(const RealPoly &x);

std::string to_string(const RealPoly &p);

/// Drops numeric coefficients of modulus at most tol; exact ones are kept.
RealPoly chop(const RealPoly &p, double tol);

/// Lifts exact coefficients to constant rational functions of mu.
ParamPoly lift(const RealPoly &p);

} // namespace scal
