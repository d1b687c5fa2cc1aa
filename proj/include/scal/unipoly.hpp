#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "scal/scalar.hpp"

namespace scal {

namespace detail {
template <typename K> bool coeff_is_zero(const K &c) { return is_zero(c); }
template <typename K> K coeff_conj(const K &c) { return conj(c); }
} // namespace detail

/// Dense univariate polynomial c0 + c1 x + ... over a coefficient field K.
/// Trailing zeros are never stored, so the zero polynomial has no
/// coefficients and degree() == -1.
template <typename K> class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  static UniPoly constant(K c) { return UniPoly(std::vector<K>{std::move(c)}); }
  static UniPoly monomial(K c, std::size_t degree) {
    std::vector<K> v(degree + 1, K(0));
    v[degree] = std::move(c);
    return UniPoly(std::move(v));
  }
  /// The polynomial x.
  static UniPoly identity() { return monomial(K(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<K> &coeffs() const { return coeffs_; }
  K coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : K(0); }
  const K &leading() const { return coeffs_.back(); }

  UniPoly &operator+=(const UniPoly &o) {
    if (o.coeffs_.size() > coeffs_.size()) {
      coeffs_.resize(o.coeffs_.size(), K(0));
    }
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
      coeffs_[k] += o.coeffs_[k];
    }
    trim();
    return *this;
  }

  UniPoly &operator-=(const UniPoly &o) {
    if (o.coeffs_.size() > coeffs_.size()) {
      coeffs_.resize(o.coeffs_.size(), K(0));
    }
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
      coeffs_[k] -= o.coeffs_[k];
    }
    trim();
    return *this;
  }

  UniPoly &operator*=(const K &c) {
    for (auto &x : coeffs_) {
      x *= c;
    }
    trim();
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly &b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly &b) { return a -= b; }
  friend UniPoly operator-(const UniPoly &a) {
    UniPoly r = a;
    for (auto &x : r.coeffs_) {
      x = K(0) - x;
    }
    return r;
  }
  friend UniPoly operator*(UniPoly a, const K &c) { return a *= c; }
  friend UniPoly operator*(const K &c, UniPoly a) { return a *= c; }

  friend UniPoly operator*(const UniPoly &a, const UniPoly &b) {
    if (a.is_zero() || b.is_zero()) {
      return UniPoly();
    }
    std::vector<K> out(a.coeffs_.size() + b.coeffs_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (detail::coeff_is_zero(a.coeffs_[i])) {
        continue;
      }
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return UniPoly(std::move(out));
  }

  friend bool operator==(const UniPoly &a, const UniPoly &b) {
    if (a.coeffs_.size() != b.coeffs_.size()) {
      return false;
    }
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) {
      if (!(a.coeffs_[k] == b.coeffs_[k])) {
        return false;
      }
    }
    return true;
  }

  /// Horner evaluation at a point of any ring V that K multiplies into.
  template <typename V> V operator()(const V &x) const {
    V acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * x + V(*it);
    }
    return acc;
  }

  UniPoly derivative() const {
    if (coeffs_.size() <= 1) {
      return UniPoly();
    }
    std::vector<K> out(coeffs_.size() - 1, K(0));
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
      out[k - 1] = coeffs_[k] * K(static_cast<long>(k));
    }
    return UniPoly(std::move(out));
  }

  /// Composition this(g(x)).
  UniPoly compose(const UniPoly &g) const {
    UniPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * g + UniPoly::constant(*it);
    }
    return acc;
  }

  /// Coefficientwise map into another coefficient type.
  template <typename F> auto map(F &&fn) const {
    using R = decltype(fn(std::declval<const K &>()));
    std::vector<R> out;
    out.reserve(coeffs_.size());
    for (const auto &c : coeffs_) {
      out.push_back(fn(c));
    }
    return UniPoly<R>(std::move(out));
  }

  /// Euclidean division over a field; returns (quotient, remainder).
  std::pair<UniPoly, UniPoly> divmod(const UniPoly &d) const {
    if (d.is_zero()) {
      throw DivisionByZero("polynomial division by zero");
    }
    UniPoly rem = *this;
    std::vector<K> quot(std::max<int>(degree() - d.degree() + 1, 0), K(0));
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
      std::size_t shift = static_cast<std::size_t>(rem.degree() - d.degree());
      K factor = rem.leading() / d.leading();
      quot[shift] = factor;
      for (std::size_t k = 0; k < d.coeffs_.size(); ++k) {
        rem.coeffs_[k + shift] -= factor * d.coeffs_[k];
      }
      // The leading term cancels exactly over an exact field; drop it
      // explicitly so numeric fields cannot stall.
      rem.coeffs_.pop_back();
      rem.trim();
    }
    return {UniPoly(std::move(quot)), rem};
  }

  UniPoly monic() const {
    if (is_zero()) {
      return *this;
    }
    UniPoly r = *this;
    K lc = leading();
    for (auto &x : r.coeffs_) {
      x = x / lc;
    }
    return r;
  }

private:
  void trim() {
    while (!coeffs_.empty() && detail::coeff_is_zero(coeffs_.back())) {
      coeffs_.pop_back();
    }
  }

  std::vector<K> coeffs_;
};

template <typename K> UniPoly<K> poly_gcd(UniPoly<K> a, UniPoly<K> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <typename K> UniPoly<K> conj(const UniPoly<K> &p) {
  return p.map([](const K &c) { return detail::coeff_conj(c); });
}

/// Holomorphic polynomial h(z) with Scalar coefficients.
using HoloPoly = UniPoly<Scalar>;

/// Polynomial in the real parameter mu with exact coefficients.
using MuPoly = UniPoly<Gauss>;

} // namespace scal
