#include "scal/centering.hpp"

namespace scal {

namespace {

constexpr Exponent kU{0, 0, 1, 0};
constexpr Exponent kV{0, 0, 0, 1};

} // namespace

TiltResult tilt(const RealPoly &rho_translated) {
  const Scalar b = rho_translated.coeff(kV);
  if (!b.is_real()) {
    throw RealityViolation("coefficient of Im w is not real");
  }
  const Scalar c = Scalar(1) - Scalar::i() * b;
  return {b, Linear{Matrix2::diagonal(c, Scalar(1))}, c};
}

SweepStep harmonic_sweep_step(const SweepState &state, int j, int r) {
  const RealPoly V = RealPoly::variable(Var::V);
  const RealPoly R0 = state.R.at_v_zero();
  SweepStep out;
  out.h = harmonic_part(R0, j, r);
  out.P_j = R0 - harmonic_sum(out.h);
  out.psi = ShearW{out.h * Scalar(2)};

  // The shear moves t = Im(w/c) to t + s with s = Im(-2h/c).
  const RealPoly s = imag_part(RealPoly::from_holo(out.h) * (Scalar(-2) / state.c));
  const RealPoly shifted_Q = state.Q.substitute(Var::V, V + s);
  out.R = s * shifted_Q;
  out.Q = shifted_Q + exact_divide(out.R - out.R.at_v_zero(), V);
  return out;
}

RealPoly CenteringResult::t_form() const {
  const Scalar n = (c * conj(c)).re();
  return (RealPoly::variable(Var::V) * c.re() - RealPoly::variable(Var::U) * c.im()) * (Scalar(1) / n);
}

RealPoly CenteringResult::Q_materialized() const { return Q.substitute(Var::V, t_form()); }

RealPoly CenteringResult::reconstruct() const {
  return RealPoly::variable(Var::U) + P + R + t_form() * Q_materialized();
}

CenteringResult center_defining(const RealPoly &rho, const Point &q, int r, const CenterOptions &opts) {
  if (r < 1) {
    throw Error("centering order must be at least 1");
  }
  RealPoly rt = pullback(rho, ElementaryMap(Translate{q}));
  const Scalar value = rt.coeff({});
  rt = chop(rt, opts.chop_tol);
  if (!value.is_zero()) {
    if (value.is_exact() || value.abs() > opts.boundary_tol) {
      throw NotOnBoundary("rho(q) = " + to_string(value) + " at q = " + to_string(q));
    }
    rt = rt.filter([](const Exponent &e) { return !(e == Exponent{}); });
  }

  Scalar a(0);
  for (const auto &[e, c] : rt.terms()) {
    if (e == kU) {
      a = c;
    } else if (e.c > 0) {
      throw UnsupportedDefining("defining polynomial is not affine in Re w near q (monomial " + to_string(e) +
                                ")");
    }
  }
  if (a.is_zero() || !a.is_real() || !real_less(Scalar(0), a)) {
    throw DegenerateNormal("coefficient of Re w at q is " + to_string(a));
  }

  CenteringResult out;
  out.scale = a;
  if (!(a == Scalar(1))) {
    rt *= Scalar(1) / a;
  }
  const TiltResult tl = tilt(rt);
  out.b = tl.b;
  out.c = tl.c;

  const RealPoly V = RealPoly::variable(Var::V);
  const RealPoly G = rt.filter([](const Exponent &e) { return e.c == 0; });
  const RealPoly Pq = G.at_v_zero();
  SweepState state{Pq, exact_divide(G - V * tl.b - Pq, V), tl.c};

  out.psi_word.maps.push_back(Translate{{-q.w, -q.z}});
  out.psi_word.maps.push_back(tl.S);
  RealPoly harmonic_free;
  for (int j = 1; j <= r; ++j) {
    SweepStep step = harmonic_sweep_step(state, j, r);
    out.psi_word.maps.push_back(step.psi);
    out.h.push_back(step.h);
    harmonic_free += step.P_j;
    state = {std::move(step.R), std::move(step.Q), tl.c};
  }
  harmonic_free += state.R.at_v_zero();
  harmonic_free = chop(harmonic_free, opts.chop_tol);
  out.P = harmonic_free.truncated(r);
  out.R = harmonic_free - out.P;
  out.Q = chop(state.Q, opts.chop_tol);
  return out;
}

CenteringResult center(const ModelDomain &D, const Point &q, int r, const CenterOptions &opts) {
  return center_defining(D.rho(), q, r, opts);
}

std::vector<CenteringResult> centering_family(const ModelDomain &D, const std::vector<Point> &q_seq, int r,
                                              const CenterOptions &opts) {
  std::vector<CenteringResult> out;
  out.reserve(q_seq.size());
  for (std::size_t k = 0; k < q_seq.size(); ++k) {
    try {
      out.push_back(center(D, q_seq[k], r, opts));
    } catch (const Error &e) {
      throw IndexedError(static_cast<long>(k), e);
    }
  }
  return out;
}

bool has_centering_shape(const MapWord &word) {
  if (word.maps.size() < 2 || !std::holds_alternative<Translate>(word.maps[0])) {
    return false;
  }
  const auto *lin = std::get_if<Linear>(&word.maps[1]);
  if (lin == nullptr || !lin->m.m[1].is_zero() || !lin->m.m[2].is_zero()) {
    return false;
  }
  for (std::size_t k = 2; k < word.maps.size(); ++k) {
    if (!std::holds_alternative<ShearW>(word.maps[k])) {
      return false;
    }
  }
  return true;
}

} // namespace scal
