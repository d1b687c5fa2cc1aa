#include "scal/domains.hpp"

#include <cmath>

#include "scal/centering.hpp"

namespace scal {

namespace {

constexpr Exponent kU{0, 0, 1, 0};

/// g(t) = rho(p + (t, 0)) as a polynomial in t.
HoloPoly ray_restriction(const RealPoly &rho, const Point &p) {
  const Scalar zb = conj(p.z);
  const Scalar u0 = p.w.re();
  const Scalar v0 = p.w.im();
  const HoloPoly shifted(std::vector<Scalar>{u0, Scalar(1)});
  HoloPoly g;
  for (const auto &[e, c] : rho.terms()) {
    Scalar k = c * pow(p.z, static_cast<unsigned>(e.a)) * pow(zb, static_cast<unsigned>(e.b)) *
               pow(v0, static_cast<unsigned>(e.d));
    HoloPoly power = HoloPoly::constant(Scalar(1));
    for (int n = 0; n < e.c; ++n) {
      power = power * shifted;
    }
    g += power * k;
  }
  return g;
}

double real_value(const HoloPoly &g, double t) {
  std::complex<double> acc = 0.0;
  for (auto it = g.coeffs().rbegin(); it != g.coeffs().rend(); ++it) {
    acc = acc * t + it->to_complex();
  }
  return acc.real();
}

} // namespace

bool is_rigid(const RealPoly &rho) {
  for (const auto &[e, c] : rho.terms()) {
    if (e.d > 0 || (e.c > 0 && !(e == kU))) {
      return false;
    }
  }
  return true;
}

ModelDomain::ModelDomain(RealPoly rho, int order_r, std::optional<MapWord> premap)
    : rho_(std::move(rho)), order_r_(order_r), rigid_(false), premap_(std::move(premap)) {
  if (auto bad = rho_.reality_violation()) {
    throw RealityViolation("coefficients at " + to_string(*bad) + " and " + to_string(bad->reflected()) +
                           " are not conjugate");
  }
  if (!(rho_.coeff(kU) == Scalar(1))) {
    throw InvalidDomain("coefficient of Re w must be 1, found " + to_string(rho_.coeff(kU)));
  }
  if (order_r_ < 2) {
    throw InvalidDomain("order_r must be at least 2");
  }
  rigid_ = is_rigid(rho_);
}

BoundaryHit boundary_hit(const ModelDomain &D, const Point &p, const HitOptions &opts) {
  const HoloPoly g = ray_restriction(D.rho(), p);
  const Scalar g0 = g.coeff(0);
  if (!g0.is_real() || !real_less(g0, Scalar(0))) {
    throw NotInterior("rho(p) = " + to_string(g0) + " is not negative at p = " + to_string(p));
  }
  if (g.degree() == 1 && g0.is_exact() && g.coeff(1).is_exact()) {
    Scalar t = -g0 / g.coeff(1);
    if (!t.is_real() || !real_less(Scalar(0), t) || t.real_part() > opts.radius) {
      throw NoIntersection("ray from " + to_string(p) + " meets the boundary at t = " + to_string(t) +
                           ", outside the search radius");
    }
    return {{p.w + t, p.z}, t};
  }

  // Geometric scan for the first sign change, then bisection.
  double lo = 0.0;
  double hi = 0.0;
  bool bracketed = false;
  for (double t = 1e-9; t <= opts.radius * 1.05; t *= 1.05) {
    const double x = std::min(t, opts.radius);
    if (real_value(g, x) >= 0.0) {
      hi = x;
      bracketed = true;
      break;
    }
    lo = x;
  }
  if (!bracketed) {
    throw NoIntersection("no boundary point within radius " + format_double(opts.radius) + " on the ray from " +
                         to_string(p));
  }
  while (hi - lo > opts.tol * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    (real_value(g, mid) >= 0.0 ? hi : lo) = mid;
  }
  const Scalar t = Scalar::numeric(hi);
  return {{p.w + t, p.z}, t};
}

int dangelo_type(const ModelDomain &D, const Point &q) {
  if (!D.rigid()) {
    throw Error("type computation requires a rigid domain");
  }
  const CenteringResult res = center(D, q, D.order_r());
  if (res.P.is_zero()) {
    throw InfiniteType("centered P vanishes to degree " + std::to_string(D.order_r()) + " at " + to_string(q));
  }
  return vanishing_order(res.P).value();
}

SubharmonicResult subharmonic_check(const RealPoly &P, const SubharmonicGrid &grid) {
  if (!P.z_only()) {
    throw Error("subharmonic check needs a polynomial in (z, zbar) only");
  }
  if (grid.samples < 2) {
    throw Error("subharmonic grid needs at least 2 samples per axis");
  }
  SubharmonicResult out;
  out.density = laplacian_density(P);
  const NumericPoly density(out.density);
  const double step = 2.0 * grid.half_width / (grid.samples - 1);
  bool first = true;
  for (int i = 0; i < grid.samples; ++i) {
    for (int k = 0; k < grid.samples; ++k) {
      const std::complex<double> z(-grid.half_width + i * step, -grid.half_width + k * step);
      const double value = density({std::complex<double>(0.0), z});
      if (first || value < out.min_value) {
        out.min_value = value;
        out.witness = z;
        first = false;
      }
    }
  }
  out.pass = out.min_value >= -grid.tol;
  return out;
}

AutomorphismVerdict verify_automorphism(const ModelDomain &D, const MapFamily &fam) {
  const ParamPoly rho = lift(D.rho());
  const ParamPoly pulled = pullback(rho, fam);
  AutomorphismVerdict out;
  out.lambda = pulled.coeff(kU);

  const ParamRational &lambda = out.lambda;
  const bool real = lambda == conj(lambda);
  const bool positive = !lambda.is_zero() && real && lambda.num().leading().re * lambda.den().leading().re > 0;
  if (!positive) {
    out.witness = kU;
    out.mismatches.push_back(kU);
    out.warning = "multiplier " + to_string(lambda) + " is not real and eventually positive";
    return out;
  }

  const ParamPoly diff = pulled - rho * lambda;
  for (const auto &[e, c] : diff.terms()) {
    out.mismatches.push_back(e);
    if (!out.witness && e.a >= e.b) {
      out.witness = e;
    }
  }
  if (!out.mismatches.empty()) {
    if (!out.witness) {
      out.witness = out.mismatches.front();
    }
    out.warning = "rho o phi is not a multiple of rho; the family may still preserve the domain";
    return out;
  }
  out.is_automorphism = true;
  return out;
}

} // namespace scal
