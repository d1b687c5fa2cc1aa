#include "scal/pinchuk.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace scal {

namespace {

void require_positive(const Scalar &x, const char *name) {
  if (!x.is_real() || !real_less(Scalar(0), x)) {
    throw Error(std::string(name) + " must be a positive real, got " + to_string(x));
  }
}

// An exactly constant tail is its own limit; anything else is an estimate
// and values within tol of zero are taken as zero.
Scalar snap(const Scalar &v, bool constant, double tol) {
  if (!constant && v.abs() <= tol) {
    return Scalar(0);
  }
  return v;
}

struct Cluster {
  double lo_re, hi_re, lo_im, hi_im;
  double diameter() const { return std::hypot(hi_re - lo_re, hi_im - lo_im); }
};

Cluster bounds(const std::vector<std::complex<double>> &xs, const std::vector<std::size_t> &idx) {
  Cluster c{xs[idx[0]].real(), xs[idx[0]].real(), xs[idx[0]].imag(), xs[idx[0]].imag()};
  for (std::size_t k : idx) {
    c.lo_re = std::min(c.lo_re, xs[k].real());
    c.hi_re = std::max(c.hi_re, xs[k].real());
    c.lo_im = std::min(c.lo_im, xs[k].imag());
    c.hi_im = std::max(c.hi_im, xs[k].imag());
  }
  return c;
}

/// Repeatedly halves the bounding box of the selected values, keeping the
/// more populated half, until the values cluster within tol.
std::vector<std::size_t> refine(const std::vector<std::complex<double>> &xs, std::vector<std::size_t> idx,
                                 double tol) {
  while (idx.size() > 1) {
    const Cluster c = bounds(xs, idx);
    if (c.diameter() <= tol) {
      break;
    }
    const bool along_re = (c.hi_re - c.lo_re) >= (c.hi_im - c.lo_im);
    const double cut = along_re ? 0.5 * (c.lo_re + c.hi_re) : 0.5 * (c.lo_im + c.hi_im);
    std::vector<std::size_t> low, high;
    for (std::size_t k : idx) {
      const double x = along_re ? xs[k].real() : xs[k].imag();
      (x <= cut ? low : high).push_back(k);
    }
    idx = low.size() >= high.size() ? std::move(low) : std::move(high);
  }
  return idx;
}

LimitChecks limit_checks(const RealPoly &P, int order_r, const SubharmonicGrid &grid) {
  LimitChecks out;
  out.nonzero = !P.is_zero();
  out.degree_ok = P.degree() <= order_r;
  out.harmonic_free = harmonic_extract(P, std::max(order_r, 1)).is_zero();
  out.subharmonic = subharmonic_check(P, grid).pass;
  return out;
}

} // namespace

Scalar delta_select(const RealPoly &P, const Scalar &epsilon) {
  if (P.is_zero()) {
    throw ZeroPolynomial("delta selection needs a nonzero polynomial");
  }
  if (!P.z_only()) {
    throw Error("delta selection needs a polynomial in (z, zbar) only");
  }
  require_positive(epsilon, "epsilon");
  const Scalar eps_sq = epsilon * epsilon;
  int best_n = 0;
  Scalar best_x;
  for (int n = 1; n <= P.degree(); ++n) {
    const RealPoly part = P.homogeneous_part(n);
    if (part.is_zero()) {
      continue;
    }
    const Scalar x = eps_sq / linf_norm_sq(part);
    // x^(1/2n) < best^(1/2m)  <=>  x^m < best^n
    bool better = best_n == 0;
    if (!better) {
      if (x.is_exact() && best_x.is_exact()) {
        better = real_less(pow(x, static_cast<unsigned>(best_n)), pow(best_x, static_cast<unsigned>(n)));
      } else {
        better = std::log(x.real_part()) / n < std::log(best_x.real_part()) / best_n;
      }
    }
    if (better) {
      best_n = n;
      best_x = x;
    }
  }
  if (best_n == 0) {
    throw ZeroPolynomial("delta selection found only a constant term");
  }
  return nth_root(best_x, static_cast<unsigned>(2 * best_n));
}

Scalar normalization_max(const RealPoly &P, const Scalar &epsilon, const Scalar &delta) {
  Scalar best(0);
  const Scalar eps_sq = epsilon * epsilon;
  const Scalar delta_sq = delta * delta;
  for (const auto &[e, c] : P.terms()) {
    const Scalar value = (c * conj(c)).re() * pow(delta_sq, static_cast<unsigned>(e.total())) / eps_sq;
    if (real_less(best, value)) {
      best = value;
    }
  }
  return nth_root(best, 2);
}

RealPoly dilation_pullback(const RealPoly &rho, const Scalar &epsilon, const Scalar &delta) {
  require_positive(epsilon, "epsilon");
  require_positive(delta, "delta");
  const Scalar inv_eps = Scalar(1) / epsilon;
  RealPoly out;
  for (const auto &[e, c] : rho.terms()) {
    out.add_term(e, c * pow(delta, static_cast<unsigned>(e.a + e.b)) *
                        pow(epsilon, static_cast<unsigned>(e.c + e.d)) * inv_eps);
  }
  return out;
}

const ScalingStep *ScalingRun::find(long j) const {
  for (const auto &s : steps) {
    if (s.j == j) {
      return &s;
    }
  }
  return nullptr;
}

std::vector<long> index_range(long first, long last) {
  std::vector<long> out;
  for (long j = first; j <= last; ++j) {
    out.push_back(j);
  }
  return out;
}

ScalingRun pinchuk_run(const ModelDomain &D, const MapFamily &fam, const Point &p, const std::vector<long> &js,
                       const PinchukOptions &opts) {
  ScalingRun run;
  run.order_r = D.order_r();
  run.base = p;
  run.premap = opts.premap;
  run.base_original = apply(invert(opts.premap), p);

  for (long j : js) {
    try {
      ScalingStep step;
      step.j = j;
      step.phi = instantiate(fam, Scalar(j));
      step.p_j = step.phi(p);
      const BoundaryHit hit = boundary_hit(D, step.p_j, opts.hit);
      step.q_j = hit.q;
      step.epsilon = hit.epsilon;
      step.centering = center(D, hit.q, D.order_r(), opts.center);
      step.c = step.centering.c;
      if (step.centering.P.is_zero()) {
        run.excluded.push_back({j, "TypeExceeded",
                                "type at q_j exceeds " + std::to_string(D.order_r()) + " (centered P vanishes)"});
        continue;
      }
      step.type_at_q = vanishing_order(step.centering.P).value();
      step.delta = delta_select(step.centering.P, step.epsilon);
      const ElementaryMap dilation =
          Linear{Matrix2::diagonal(Scalar(1) / step.epsilon, Scalar(1) / step.delta)};
      step.Lambda = opts.premap.then(step.centering.psi_word).then(dilation);
      step.sigma = opts.premap.then(to_word(step.phi)).then(step.centering.psi_word).then(dilation);
      step.rho_tilde = dilation_pullback(step.centering.reconstruct(), step.epsilon, step.delta);
      run.steps.push_back(std::move(step));
    } catch (const Error &e) {
      throw IndexedError(j, e);
    }
  }
  return run;
}

Precentered precenter(const ModelDomain &D, const MapFamily &fam, const Point &p) {
  RealPoly rho = D.rho();
  MapFamily family = fam;
  Point base = p;
  MapWord premap;
  if (D.premap()) {
    const TriangularPolyMap N = normal_form(*D.premap());
    rho = pullback(rho, invert(*D.premap()));
    family = lift(N).compose(fam.compose(lift(N.inverse())));
    base = N(p);
    premap = *D.premap();
  }

  const PointOf<ParamRational> lifted{ParamRational::from_scalar(base.w), ParamRational::from_scalar(base.z)};
  const PointOf<ParamRational> orbit = family(lifted);
  const RationalLimit lw = rational_limit(orbit.w);
  const RationalLimit lz = rational_limit(orbit.z);
  if (!lw.finite || !lz.finite) {
    throw Error("the orbit fam(p) has no finite limit");
  }
  const Point accumulation{Scalar(lw.value), Scalar(lz.value)};

  const CenteringResult cen = center_defining(rho, accumulation, D.order_r());
  const TriangularPolyMap M = normal_form(cen.psi_word);
  const MapFamily Ml = lift(M);
  return {ModelDomain(cen.reconstruct(), D.order_r()), Ml.compose(family.compose(lift(M.inverse()))), M(base),
          premap.then(cen.psi_word), accumulation};
}

Scalar fit_C(const ScalingRun &run) {
  if (run.steps.empty()) {
    throw Error("empty run");
  }
  std::optional<Scalar> best;
  for (const auto &s : run.steps) {
    const Scalar ratio = s.epsilon / pow(s.delta, static_cast<unsigned>(run.order_r));
    if (!best || real_less(ratio, *best)) {
      best = ratio;
    }
  }
  return *best;
}

std::string to_string(LimitKind k) {
  switch (k) {
  case LimitKind::Converged: return "Converged";
  case LimitKind::SubsequenceSelected: return "SubsequenceSelected";
  case LimitKind::Divergent: return "Divergent";
  }
  return "?";
}

LimitVerdict limit_defining(const ScalingRun &run, const LimitOptions &opts) {
  if (run.steps.empty()) {
    throw Error("limit detection needs a nonempty run");
  }
  std::set<Exponent> monomials;
  for (const auto &s : run.steps) {
    for (const auto &[e, c] : s.rho_tilde.terms()) {
      monomials.insert(e);
    }
  }
  const std::size_t n = run.steps.size();
  std::map<Exponent, std::vector<Scalar>> traces;
  for (const auto &e : monomials) {
    auto &t = traces[e];
    for (const auto &s : run.steps) {
      t.push_back(s.rho_tilde.coeff(e));
    }
  }

  // Cauchy test over the last `tail` entries of the given index set.
  auto cauchy = [&](const std::vector<Scalar> &t, const std::vector<std::size_t> &idx) {
    const std::size_t start = idx.size() > opts.tail ? idx.size() - opts.tail : 0;
    const Scalar &last = t[idx.back()];
    bool exact_equal = true;
    double diam = 0.0;
    for (std::size_t a = start; a < idx.size(); ++a) {
      exact_equal = exact_equal && t[idx[a]].is_exact() && t[idx[a]] == last;
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        diam = std::max(diam, std::abs(t[idx[a]].to_complex() - t[idx[b]].to_complex()));
      }
    }
    return exact_equal || diam <= opts.tol;
  };

  std::vector<std::size_t> all(n);
  for (std::size_t k = 0; k < n; ++k) {
    all[k] = k;
  }
  std::vector<Exponent> failing;
  for (const auto &[e, t] : traces) {
    if (!cauchy(t, all)) {
      failing.push_back(e);
    }
  }

  LimitVerdict out;
  std::vector<std::size_t> selected = all;
  if (failing.empty()) {
    out.kind = LimitKind::Converged;
  } else {
    const std::size_t start = n > opts.tail ? n - opts.tail : 0;
    std::optional<Exponent> unbounded;
    for (const auto &e : failing) {
      const auto &t = traces[e];
      double peak = 0.0;
      for (std::size_t k = start; k < n; ++k) {
        peak = std::max(peak, t[k].abs());
      }
      if (peak > opts.unbounded_factor * std::max(t[start].abs(), 1.0)) {
        if (!unbounded || (!(unbounded->a >= unbounded->b) && e.a >= e.b)) {
          unbounded = e;
        }
      }
    }
    if (!unbounded) {
      for (const auto &e : failing) {
        std::vector<std::complex<double>> xs;
        for (const auto &s : traces[e]) {
          xs.push_back(s.to_complex());
        }
        selected = refine(xs, selected, opts.tol);
      }
      for (const auto &e : failing) {
        if (selected.size() < 2 || !cauchy(traces[e], selected)) {
          unbounded = e;
          break;
        }
      }
      if (!unbounded) {
        out.kind = LimitKind::SubsequenceSelected;
      }
    }
    if (unbounded) {
      out.kind = LimitKind::Divergent;
      out.witness = unbounded;
      out.witness_trace = traces[*unbounded];
      for (long k = 0; k < static_cast<long>(n); ++k) {
        out.indices.push_back(run.steps[static_cast<std::size_t>(k)].j);
      }
      return out;
    }
  }

  for (std::size_t k : selected) {
    out.indices.push_back(run.steps[k].j);
  }
  for (const auto &[e, t] : traces) {
    const std::size_t start = selected.size() > opts.tail ? selected.size() - opts.tail : 0;
    const Scalar &last = t[selected.back()];
    bool constant = last.is_exact();
    for (std::size_t a = start; a < selected.size() && constant; ++a) {
      constant = t[selected[a]] == last;
    }
    out.rho_hat.add_term(e, snap(last, constant, opts.tol));
  }
  out.P_hat = out.rho_hat.filter([](const Exponent &e) { return e.z_only(); });
  out.checks = limit_checks(out.P_hat, run.order_r, opts.grid);
  return out;
}

InverseDiagnostics inverse_diagnostics(const ScalingRun &run, const CompactBox &box, const GridSpec &grid) {
  InverseDiagnostics out;
  for (const auto &s : run.steps) {
    const MapWord inv = invert(s.sigma);
    std::optional<NumericTriangular> tri;
    std::optional<std::complex<double>> tri_det;
    try {
      const TriangularPolyMap nf = normal_form(inv);
      tri.emplace(nf);
      tri_det = (nf.alpha * nf.beta).to_complex();
    } catch (const NotTriangular &) {
    }
    double min_det = INFINITY;
    std::size_t violations = 0;
    std::map<std::array<long long, 4>, NumericPoint> seen;
    const double cell = grid.tolerance;
    for_each_grid_point(box, grid, [&](const NumericPoint &x) {
      NumericPoint y;
      double det;
      if (tri) {
        y = (*tri)(x);
        det = std::abs(*tri_det);
      } else {
        const Point px{Scalar(x[0]), Scalar(x[1])};
        y = to_numeric(apply(inv, px));
        det = jacobian_at(inv, px).det().abs();
      }
      min_det = std::min(min_det, det);
      const std::array<long long, 4> key{std::llround(y[0].real() / cell), std::llround(y[0].imag() / cell),
                                         std::llround(y[1].real() / cell), std::llround(y[1].imag() / cell)};
      auto [it, inserted] = seen.emplace(key, x);
      if (!inserted && it->second != x) {
        ++violations;
      }
    });
    out.js.push_back(s.j);
    out.min_abs_det.push_back(min_det);
    out.injectivity_violations.push_back(violations);
  }
  if (out.min_abs_det.size() >= 2) {
    const bool monotone = std::is_sorted(out.min_abs_det.rbegin(), out.min_abs_det.rend());
    out.decay = monotone && out.min_abs_det.back() * 10.0 < out.min_abs_det.front();
  }
  return out;
}

BaseComparison compare_base_points(const ScalingRun &a, const ScalingRun &b, long j) {
  const ScalingStep *sa = a.find(j);
  const ScalingStep *sb = b.find(j);
  if (sa == nullptr || sb == nullptr) {
    throw Error("index " + std::to_string(j) + " missing from one of the runs");
  }
  BaseComparison out;
  out.B = normal_form(invert(sb->sigma).then(sa->sigma));
  out.degree = out.B.degree();
  out.degree_ok = out.degree <= std::max(a.order_r, b.order_r);
  return out;
}

MapLimit compare_base_points_limit(const ScalingRun &a, const ScalingRun &b, std::size_t tail, double tol) {
  std::vector<TriangularPolyMap> maps;
  for (const auto &s : a.steps) {
    if (b.find(s.j) != nullptr) {
      maps.push_back(compare_base_points(a, b, s.j).B);
    }
  }
  return map_sequence_limit(maps, std::min(tail, maps.size()), tol);
}

} // namespace scal
