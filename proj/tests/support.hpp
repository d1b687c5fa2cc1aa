#pragma once

#include <random>

#include "scal/frankel.hpp"
#include "scal/io.hpp"
#include "scal/pinchuk.hpp"

namespace testing {

using namespace scal;

inline Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}
inline Scalar ex(long p, long d = 1) { return Scalar(q(p, d)); }
inline Scalar ci(long re, long im) { return Scalar(Gauss(q(re), q(im))); }
inline Point pt(Scalar w, Scalar z) { return {std::move(w), std::move(z)}; }

inline RealPoly mono(int a, int b, int c, int d, Scalar coeff = Scalar(1)) {
  return RealPoly::term({a, b, c, d}, std::move(coeff));
}
inline RealPoly u_var() { return mono(0, 0, 1, 0); }
inline RealPoly v_var() { return mono(0, 0, 0, 1); }

inline RealPoly rho1() { return u_var() + mono(2, 2, 0, 0); }
inline RealPoly rho2() { return u_var() + mono(2, 0, 0, 0) + mono(0, 2, 0, 0) + mono(2, 2, 0, 0); }
inline RealPoly P3() { return mono(1, 3, 0, 0, ex(4)) + mono(2, 2, 0, 0, ex(6)) + mono(3, 1, 0, 0, ex(4)); }
inline RealPoly rho3() { return u_var() + P3(); }

inline ModelDomain omega1() { return ModelDomain(rho1(), 4); }
inline ModelDomain omega2() { return ModelDomain(rho2(), 4); }
inline ModelDomain omega3() { return ModelDomain(rho3(), 4); }

inline ParamRational mu() { return ParamRational::mu(); }
inline ParamRational pr(long p, long d = 1) { return ParamRational(q(p, d)); }
inline ParamRational pi_(long re, long im) { return ParamRational(Gauss(q(re), q(im))); }

/// (w / mu^4, z / mu)
inline MapFamily phi1() {
  MapFamily m;
  m.alpha = pr(1) / pow(mu(), 4);
  m.beta = pr(1) / mu();
  return m;
}

/// psi phi psi^-1 with psi = (w - 2 z^2, z)
inline MapFamily phi2() {
  MapFamily m = phi1();
  m.f = UniPoly<ParamRational>::monomial((pr(2) - pr(2) * pow(mu(), 2)) / pow(mu(), 4), 2);
  return m;
}

inline MapFamily phi3() {
  const ParamRational I = pi_(0, 1);
  const ParamRational m1 = mu() - pr(1);
  const ParamRational d8 = pow(mu(), 8);
  MapFamily m;
  m.alpha = pr(1) / d8;
  m.f = UniPoly<ParamRational>(std::vector<ParamRational>{
      pr(2) * pow(m1, 4) / d8, pr(-8) * I * pow(m1, 3) / d8, pr(-12) * pow(m1, 2) / d8, pr(8) * I * m1 / d8});
  m.beta = pr(1) / pow(mu(), 2);
  m.gamma = (mu() * I - I) / pow(mu(), 2);
  return m;
}

inline TriangularPolyMap shear_map(Scalar c, std::size_t k) {
  return {Scalar(1), HoloPoly::monomial(std::move(c), k), Scalar(1), Scalar(0)};
}

inline Point base1() { return pt(ex(-1), ex(0)); }
inline Point base3() { return pt(ex(1), ci(0, 1)); }

/// Precenters and runs j = first..last.
inline ScalingRun run_for(const ModelDomain &D, const MapFamily &fam, const Point &p, long first, long last) {
  const Precentered pc = precenter(D, fam, p);
  PinchukOptions opts;
  opts.premap = pc.premap;
  return pinchuk_run(pc.domain, pc.family, pc.base, index_range(first, last), opts);
}

// Random generators for the property suites. Everything is seeded so runs
// are reproducible.
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long span = 5) {
    const long d = integer(1, 4);
    Rational r(integer(-span, span), d);
    r.canonicalize();
    return r;
  }
  Rational nonzero_rational(long span = 5) {
    Rational r;
    do {
      r = rational(span);
    } while (r == 0);
    return r;
  }
  Gauss gauss(long span = 5) { return Gauss(rational(span), coin() ? rational(span) : Rational(0)); }
  Gauss nonzero_gauss(long span = 5) {
    Gauss g;
    do {
      g = gauss(span);
    } while (g.is_zero());
    return g;
  }

  HoloPoly holo(int max_degree, bool constant_term = true) {
    std::vector<Scalar> cs;
    const int deg = static_cast<int>(integer(0, max_degree));
    for (int k = 0; k <= deg; ++k) {
      cs.push_back(k == 0 && !constant_term ? Scalar(0) : Scalar(gauss()));
    }
    return HoloPoly(std::move(cs));
  }

  /// Real-valued polynomial: every term is added together with its
  /// conjugate reflection.
  RealPoly real_poly(int terms, int max_deg, bool with_w = true) {
    RealPoly p;
    for (int k = 0; k < terms; ++k) {
      Exponent e{static_cast<int>(integer(0, max_deg)), static_cast<int>(integer(0, max_deg)),
                 with_w ? static_cast<int>(integer(0, 1)) : 0, with_w ? static_cast<int>(integer(0, 1)) : 0};
      Gauss c = gauss();
      if (e.a == e.b) {
        c.im = 0;
        p.add_term(e, Scalar(c));
      } else {
        p.add_term(e, Scalar(c));
        p.add_term(e.reflected(), Scalar(conj(c)));
      }
    }
    return p;
  }

  ElementaryMap elementary() {
    switch (integer(0, 2)) {
    case 0: return Translate{{Scalar(gauss()), Scalar(gauss())}};
    case 1: {
      Matrix2 m = Matrix2::diagonal(Scalar(nonzero_gauss()), Scalar(nonzero_gauss()));
      m.m[1] = Scalar(gauss());
      return Linear{m};
    }
    default: return ShearW{holo(3)};
    }
  }

  MapWord word(int max_len) {
    MapWord w;
    const long n = integer(1, max_len);
    for (long k = 0; k < n; ++k) {
      w.maps.push_back(elementary());
    }
    return w;
  }

  TriangularPolyMap triangular(int max_degree = 3) {
    return {Scalar(nonzero_gauss()), holo(max_degree), Scalar(nonzero_gauss()), Scalar(gauss())};
  }

  /// c0 + c1 mu with a nonzero value for all large mu.
  ParamRational param(bool nonzero = false) {
    const Gauss c0 = gauss(3);
    const Gauss c1 = nonzero ? nonzero_gauss(3) : gauss(3);
    ParamRational out = ParamRational(c0) + ParamRational(c1) * ParamRational::mu();
    if (coin()) {
      out = out / (ParamRational::mu() + ParamRational(Gauss(integer(1, 3))));
    }
    return out;
  }

  MapFamily family(int max_degree = 3) {
    MapFamily m;
    m.alpha = param(true);
    m.beta = param(true);
    m.gamma = param();
    std::vector<ParamRational> f;
    const long deg = integer(0, max_degree);
    for (long k = 0; k <= deg; ++k) {
      f.push_back(param());
    }
    m.f = UniPoly<ParamRational>(std::move(f));
    return m;
  }
};

} // namespace testing
