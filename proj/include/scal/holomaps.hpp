#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "scal/param_rational.hpp"
#include "scal/real_poly.hpp"

namespace scal {

SCAL_DECLARE_ERROR(NotTriangular)
SCAL_DECLARE_ERROR(SingularLinear)

/// Row-major 2x2 matrix [[m00, m01], [m10, m11]] acting on (w, z).
template <typename K> struct Matrix2Of {
  std::array<K, 4> m;

  static Matrix2Of identity() { return {{K(1), K(0), K(0), K(1)}}; }
  static Matrix2Of diagonal(K a, K d) { return {{std::move(a), K(0), K(0), std::move(d)}}; }

  const K &operator()(int row, int col) const { return m[static_cast<std::size_t>(2 * row + col)]; }
  K det() const { return m[0] * m[3] - m[1] * m[2]; }
  bool upper_triangular() const { return detail::coeff_is_zero(m[2]); }

  Matrix2Of inverse() const {
    K d = det();
    if (detail::coeff_is_zero(d)) {
      throw SingularLinear("singular 2x2 matrix");
    }
    return {{m[3] / d, K(0) - m[1] / d, K(0) - m[2] / d, m[0] / d}};
  }

  friend Matrix2Of operator*(const Matrix2Of &x, const Matrix2Of &y) {
    return {{x.m[0] * y.m[0] + x.m[1] * y.m[2], x.m[0] * y.m[1] + x.m[1] * y.m[3],
             x.m[2] * y.m[0] + x.m[3] * y.m[2], x.m[2] * y.m[1] + x.m[3] * y.m[3]}};
  }
  friend bool operator==(const Matrix2Of &, const Matrix2Of &) = default;
};

using Matrix2 = Matrix2Of<Scalar>;

struct Translate {
  Point t;
};

struct Linear {
  Matrix2 m;
};

/// (w, z) -> (w + h(z), z)
struct ShearW {
  HoloPoly h;
};

using ElementaryMap = std::variant<Translate, Linear, ShearW>;

/// Composition word; maps are applied left to right, so {A, B} is B o A.
struct MapWord {
  std::vector<ElementaryMap> maps;

  static MapWord identity() { return {}; }
  /// This word followed by `next`, i.e. next o this.
  MapWord then(const MapWord &next) const;
  MapWord then(const ElementaryMap &next) const;
};

std::string to_string(const ElementaryMap &e);
std::string to_string(const MapWord &w);

/// (w, z) -> (alpha w + f(z), beta z + gamma), alpha and beta nonzero.
template <typename K> struct TriangularMap {
  K alpha{1};
  UniPoly<K> f;
  K beta{1};
  K gamma{0};

  static TriangularMap identity() { return {K(1), UniPoly<K>(), K(1), K(0)}; }

  /// Polynomial degree of the map: max(1, deg f).
  int degree() const { return std::max(1, f.degree()); }
  bool is_affine() const { return f.degree() <= 1; }

  PointOf<K> operator()(const PointOf<K> &p) const { return {alpha * p.w + f(p.z), beta * p.z + gamma}; }

  Matrix2Of<K> jacobian(const PointOf<K> &p) const {
    return {{alpha, f.derivative()(p.z), K(0), beta}};
  }

  /// this o g
  TriangularMap compose(const TriangularMap &g) const {
    UniPoly<K> inner(std::vector<K>{g.gamma, g.beta});
    return {alpha * g.alpha, g.f * alpha + f.compose(inner), beta * g.beta, beta * g.gamma + gamma};
  }

  TriangularMap inverse() const {
    if (detail::coeff_is_zero(alpha) || detail::coeff_is_zero(beta)) {
      throw SingularLinear("triangular map with vanishing diagonal");
    }
    K inv_a = K(1) / alpha;
    K inv_b = K(1) / beta;
    UniPoly<K> inner(std::vector<K>{K(0) - gamma * inv_b, inv_b});
    return {inv_a, f.compose(inner) * (K(0) - inv_a), inv_b, K(0) - gamma * inv_b};
  }

  template <typename F> auto map(F &&fn) const {
    using R = decltype(fn(std::declval<const K &>()));
    return TriangularMap<R>{fn(alpha), f.map(fn), fn(beta), fn(gamma)};
  }

  friend bool operator==(const TriangularMap &, const TriangularMap &) = default;
};

using TriangularPolyMap = TriangularMap<Scalar>;
/// Triangular map whose coefficients are rational functions of mu.
using MapFamily = TriangularMap<ParamRational>;

/// Coefficient slot of a triangular map, named as the monomial w^w_deg z^z_deg
/// of the given component (0 = first, 1 = second).
struct MapTerm {
  int component = 0;
  int w_deg = 0;
  int z_deg = 0;

  auto operator<=>(const MapTerm &) const = default;
};

std::string to_string(const MapTerm &t);

/// Enumerates the coefficient slots of a triangular map together with their
/// values, first component (w, then z^k ascending) then second (z, 1).
template <typename K> std::vector<std::pair<MapTerm, K>> coefficients(const TriangularMap<K> &m) {
  std::vector<std::pair<MapTerm, K>> out;
  out.push_back({{0, 1, 0}, m.alpha});
  for (std::size_t k = 0; k < m.f.coeffs().size(); ++k) {
    out.push_back({{0, 0, static_cast<int>(k)}, m.f.coeffs()[k]});
  }
  out.push_back({{1, 0, 1}, m.beta});
  out.push_back({{1, 0, 0}, m.gamma});
  return out;
}

template <typename K> K coefficient(const TriangularMap<K> &m, const MapTerm &t) {
  if (t.component == 0) {
    return t.w_deg == 1 ? m.alpha : m.f.coeff(static_cast<std::size_t>(t.z_deg));
  }
  return t.z_deg == 1 ? m.beta : m.gamma;
}

template <typename K> std::string to_string(const TriangularMap<K> &m) {
  std::string first = to_string(m.alpha) + "*w";
  for (std::size_t k = 0; k < m.f.coeffs().size(); ++k) {
    if (detail::coeff_is_zero(m.f.coeffs()[k])) {
      continue;
    }
    first += " + (" + to_string(m.f.coeffs()[k]) + ")";
    if (k > 0) {
      first += "*z" + (k > 1 ? "^" + std::to_string(k) : std::string());
    }
  }
  return "(" + first + ", " + to_string(m.beta) + "*z + (" + to_string(m.gamma) + "))";
}

/// rho o F for a map whose first component is W and second is Z, each given
/// as a complex-valued polynomial in (z, zbar, u, v).
template <typename K>
MultiPoly<K> pullback_components(const MultiPoly<K> &rho, const MultiPoly<K> &W, const MultiPoly<K> &Z) {
  const K half(Gauss(Rational(1, 2)));
  const K inv_2i = K(1) / (K(2) * K(Gauss::i()));
  MultiPoly<K> Wc = W.conj_reflect();
  return rho.substitute({Z, Z.conj_reflect(), (W + Wc) * half, (W - Wc) * inv_2i});
}

/// w = u + i v as a polynomial.
template <typename K> MultiPoly<K> w_variable() {
  return MultiPoly<K>::variable(Var::U) + MultiPoly<K>::variable(Var::V) * K(Gauss::i());
}

template <typename K> MultiPoly<K> pullback(const MultiPoly<K> &rho, const TriangularMap<K> &F) {
  const auto Zv = MultiPoly<K>::variable(Var::Z);
  MultiPoly<K> W = w_variable<K>() * F.alpha + MultiPoly<K>::from_holo(F.f);
  MultiPoly<K> Z = Zv * F.beta + MultiPoly<K>::constant(F.gamma);
  return pullback_components(rho, W, Z);
}

Point apply(const ElementaryMap &e, const Point &p);
Point apply(const MapWord &word, const Point &p);

TriangularPolyMap to_triangular(const ElementaryMap &e);
TriangularPolyMap normal_form(const MapWord &word);
/// Word realising a triangular map: ShearW(f/alpha), Linear(diag), Translate.
MapWord to_word(const TriangularPolyMap &m);

Matrix2 jacobian_at(const ElementaryMap &e, const Point &p);
Matrix2 jacobian_at(const MapWord &word, const Point &p);

ElementaryMap invert(const ElementaryMap &e);
MapWord invert(const MapWord &word);

TriangularPolyMap instantiate(const MapFamily &family, const Scalar &mu0);
/// Constant family; exact coefficients only.
MapFamily lift(const TriangularPolyMap &m);

/// rho o F.
RealPoly pullback(const RealPoly &rho, const ElementaryMap &e);
RealPoly pullback(const RealPoly &rho, const MapWord &word);

} // namespace scal
