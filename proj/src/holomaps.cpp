#include "scal/holomaps.hpp"

#include <algorithm>

namespace scal {

namespace {

template <class... Ts> struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

bool all_upper_triangular(const MapWord &word) {
  return std::all_of(word.maps.begin(), word.maps.end(), [](const ElementaryMap &e) {
    const auto *lin = std::get_if<Linear>(&e);
    return lin == nullptr || lin->m.upper_triangular();
  });
}

} // namespace

MapWord MapWord::then(const MapWord &next) const {
  MapWord out = *this;
  out.maps.insert(out.maps.end(), next.maps.begin(), next.maps.end());
  return out;
}

MapWord MapWord::then(const ElementaryMap &next) const {
  MapWord out = *this;
  out.maps.push_back(next);
  return out;
}

std::string to_string(const MapTerm &t) {
  if (t.w_deg == 1) {
    return "w";
  }
  if (t.z_deg == 0) {
    return "1";
  }
  return t.z_deg == 1 ? "z" : "z^" + std::to_string(t.z_deg);
}

std::string to_string(const ElementaryMap &e) {
  return std::visit(overloaded{
                        [](const Translate &t) { return "Translate" + to_string(t.t); },
                        [](const Linear &l) {
                          return "Linear[[" + to_string(l.m.m[0]) + ", " + to_string(l.m.m[1]) + "], [" +
                                 to_string(l.m.m[2]) + ", " + to_string(l.m.m[3]) + "]]";
                        },
                        [](const ShearW &s) {
                          return "ShearW(" + to_string(RealPoly::from_holo(s.h)) + ")";
                        },
                    },
                    e);
}

std::string to_string(const MapWord &w) {
  std::string out = "[";
  for (std::size_t k = 0; k < w.maps.size(); ++k) {
    out += (k ? ", " : "") + to_string(w.maps[k]);
  }
  return out + "]";
}

Point apply(const ElementaryMap &e, const Point &p) {
  return std::visit(overloaded{
                        [&](const Translate &t) { return Point{p.w + t.t.w, p.z + t.t.z}; },
                        [&](const Linear &l) {
                          return Point{l.m.m[0] * p.w + l.m.m[1] * p.z, l.m.m[2] * p.w + l.m.m[3] * p.z};
                        },
                        [&](const ShearW &s) { return Point{p.w + s.h(p.z), p.z}; },
                    },
                    e);
}

Point apply(const MapWord &word, const Point &p) {
  Point x = p;
  for (const auto &e : word.maps) {
    x = scal::apply(e, x);
  }
  return x;
}

TriangularPolyMap to_triangular(const ElementaryMap &e) {
  return std::visit(overloaded{
                        [](const Translate &t) {
                          return TriangularPolyMap{Scalar(1), HoloPoly::constant(t.t.w), Scalar(1), t.t.z};
                        },
                        [](const Linear &l) {
                          if (!l.m.upper_triangular()) {
                            throw NotTriangular("linear entry " + to_string(ElementaryMap(l)) +
                                                " sends w into the z-component");
                          }
                          if (l.m.det().is_zero()) {
                            throw SingularLinear("singular linear entry");
                          }
                          return TriangularPolyMap{l.m.m[0], HoloPoly::monomial(l.m.m[1], 1), l.m.m[3],
                                                   Scalar(0)};
                        },
                        [](const ShearW &s) { return TriangularPolyMap{Scalar(1), s.h, Scalar(1), Scalar(0)}; },
                    },
                    e);
}

TriangularPolyMap normal_form(const MapWord &word) {
  TriangularPolyMap acc = TriangularPolyMap::identity();
  for (const auto &e : word.maps) {
    acc = to_triangular(e).compose(acc);
  }
  return acc;
}

MapWord to_word(const TriangularPolyMap &m) {
  if (m.alpha.is_zero() || m.beta.is_zero()) {
    throw SingularLinear("triangular map with vanishing diagonal");
  }
  MapWord word;
  if (!m.f.is_zero()) {
    word.maps.push_back(ShearW{m.f * (Scalar(1) / m.alpha)});
  }
  if (!(m.alpha == Scalar(1)) || !(m.beta == Scalar(1))) {
    word.maps.push_back(Linear{Matrix2::diagonal(m.alpha, m.beta)});
  }
  if (!m.gamma.is_zero()) {
    word.maps.push_back(Translate{{Scalar(0), m.gamma}});
  }
  return word;
}

Matrix2 jacobian_at(const ElementaryMap &e, const Point &p) {
  return std::visit(overloaded{
                        [](const Translate &) { return Matrix2::identity(); },
                        [](const Linear &l) { return l.m; },
                        [&](const ShearW &s) {
                          return Matrix2{{Scalar(1), s.h.derivative()(p.z), Scalar(0), Scalar(1)}};
                        },
                    },
                    e);
}

Matrix2 jacobian_at(const MapWord &word, const Point &p) {
  Matrix2 acc = Matrix2::identity();
  Point x = p;
  for (const auto &e : word.maps) {
    acc = jacobian_at(e, x) * acc;
    x = scal::apply(e, x);
  }
  return acc;
}

ElementaryMap invert(const ElementaryMap &e) {
  return std::visit(overloaded{
                        [](const Translate &t) -> ElementaryMap {
                          return Translate{{-t.t.w, -t.t.z}};
                        },
                        [](const Linear &l) -> ElementaryMap { return Linear{l.m.inverse()}; },
                        [](const ShearW &s) -> ElementaryMap { return ShearW{-s.h}; },
                    },
                    e);
}

MapWord invert(const MapWord &word) {
  MapWord out;
  out.maps.reserve(word.maps.size());
  for (auto it = word.maps.rbegin(); it != word.maps.rend(); ++it) {
    out.maps.push_back(invert(*it));
  }
  return out;
}

TriangularPolyMap instantiate(const MapFamily &family, const Scalar &mu0) {
  return family.map([&](const ParamRational &c) { return c.eval(mu0); });
}

MapFamily lift(const TriangularPolyMap &m) {
  return m.map([](const Scalar &c) { return ParamRational::from_scalar(c); });
}

RealPoly pullback(const RealPoly &rho, const ElementaryMap &e) {
  const RealPoly w = w_variable<Scalar>();
  const RealPoly z = RealPoly::variable(Var::Z);
  return std::visit(overloaded{
                        [&](const Translate &t) {
                          return pullback_components(rho, w + RealPoly::constant(t.t.w),
                                                     z + RealPoly::constant(t.t.z));
                        },
                        [&](const Linear &l) {
                          return pullback_components(rho, w * l.m.m[0] + z * l.m.m[1],
                                                     w * l.m.m[2] + z * l.m.m[3]);
                        },
                        [&](const ShearW &s) {
                          return pullback_components(rho, w + RealPoly::from_holo(s.h), z);
                        },
                    },
                    e);
}

RealPoly pullback(const RealPoly &rho, const MapWord &word) {
  if (all_upper_triangular(word)) {
    return pullback(rho, normal_form(word));
  }
  // rho o (e_n o ... o e_1) = (...(rho o e_n) o ...) o e_1
  RealPoly out = rho;
  for (auto it = word.maps.rbegin(); it != word.maps.rend(); ++it) {
    out = pullback(out, *it);
  }
  return out;
}

} // namespace scal
