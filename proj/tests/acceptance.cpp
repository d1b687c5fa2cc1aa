// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit status if
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>

#include "support.hpp"

using namespace testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string &what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

int failures = 0;

void criterion(int n, const std::string &title, double limit_seconds, const std::function<void(Outcome &)> &body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception &e) {
    out.ok = false;
    out.note = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_seconds > 0 && secs >= limit_seconds) {
    out.require(false, "took " + std::to_string(secs) + " s");
    out.ok = false;
  }
  failures += out.ok ? 0 : 1;
  std::printf("%s criterion %d: %s (%.3f s)%s%s\n", out.ok ? "PASS" : "FAIL", n, title.c_str(), secs,
              out.note.empty() ? "" : " - ", out.note.c_str());
  std::fflush(stdout);
}

MapFamily w_plus_one() {
  MapFamily m;
  m.f = UniPoly<ParamRational>::constant(pr(1));
  return m;
}

TriangularPolyMap w_plus_one_map() { return {Scalar(1), HoloPoly::constant(Scalar(1)), Scalar(1), Scalar(0)}; }

bool close(const Scalar &a, double b, double tol) { return std::abs(a.to_complex() - b) <= tol; }

} // namespace

int main() {
  criterion(1, "Frankel map of the first example is (w + 1, z)", 1.0, [](Outcome &o) {
    const FrankelFamily F = frankel_map(phi1(), base1());
    o.require(F.omega == w_plus_one(), "omega differs from (w + 1, z)");
    const FrankelLimit lim = frankel_limit(F);
    o.require(lim.converged && lim.limit == w_plus_one_map(), "limit is not (w + 1, z)");
  });

  criterion(2, "conjugated second example diverges at z^2", 1.0, [](Outcome &o) {
    const FrankelFamily F = frankel_map(phi2(), base1());
    MapFamily expected = w_plus_one();
    expected.f = UniPoly<ParamRational>(std::vector<ParamRational>{pr(1), pr(0), pr(2) * (pr(1) - mu() * mu())});
    o.require(F.omega == expected, "omega differs from (w + 2(1 - j^2) z^2 + 1, z)");
    const FrankelLimit lim = frankel_limit(F);
    o.require(!lim.converged, "limit reported finite");
    o.require(lim.divergent.size() == 1 && lim.divergent[0].first == MapTerm{0, 0, 2}, "witness is not z^2");
  });

  criterion(3, "third example reproduces omega_mu and diverges", 1.0, [](Outcome &o) {
    const FrankelFamily F = frankel_map(phi3(), base3());
    const ParamRational I = pi_(0, 1);
    const ParamRational m1 = mu() - pr(1);
    const ParamRational c0 = pr(12) * mu() * mu() - pr(8) * mu() - pr(5);
    o.require(F.omega.alpha == pr(1), "w coefficient");
    o.require(F.omega.f.coeff(3) == pr(8) * I * m1, "z^3 coefficient");
    o.require(F.omega.f.coeff(2) == pr(-12) * m1 * m1, "z^2 coefficient");
    o.require(F.omega.f.coeff(1) == pr(24) * I * mu() * m1, "z coefficient");
    o.require(F.omega.f.coeff(0) == c0, "constant coefficient");
    o.require(F.omega.f.degree() == 3, "extra terms in the first component");
    o.require(F.omega.beta == pr(1) && F.omega.gamma == -I, "second component is not z - i");
    const FrankelLimit lim = frankel_limit(F);
    bool witness = false;
    for (const auto &[t, v] : lim.divergent) {
      witness = witness || (t == MapTerm{0, 0, 0} && v == c0);
    }
    o.require(!lim.converged && witness, "12 mu^2 - 8 mu - 5 not among the witnesses");
  });

  criterion(4, "automorphism certificate with multiplier mu^-8", 0.0, [](Outcome &o) {
    const AutomorphismVerdict v = verify_automorphism(omega3(), phi3());
    o.require(v.is_automorphism, "not certified");
    o.require(v.lambda == pr(1) / pow(mu(), 8), "multiplier is " + to_string(v.lambda));
  });

  criterion(5, "centering of the second example at the origin", 0.0, [](Outcome &o) {
    const CenteringResult c = center(omega2(), pt(ex(0), ex(0)), 4);
    o.require(c.P == mono(2, 2, 0, 0), "P is not z^2 zbar^2");
    o.require(harmonic_extract(c.P, 4).is_zero(), "P has harmonic terms");
    o.require(c.R.is_zero() && c.Q.is_zero(), "R or Q nonzero");
    o.require(c.c == ex(1), "c is not 1");
    o.require(has_centering_shape(c.psi_word), "psi word is not Translate Linear(diag) ShearW*");
  });

  criterion(6, "scaling run of the first example", 10.0, [](Outcome &o) {
    const ScalingRun run = run_for(omega1(), phi1(), base1(), 1, 100);
    o.require(run.steps.size() == 100, "missing indices");
    for (const auto &s : run.steps) {
      const long j = s.j;
      o.require(normal_form(s.sigma) == TriangularPolyMap::identity(), "sigma_j is not the identity");
      o.require(s.epsilon == ex(1, j * j * j * j), "epsilon_j != j^-4");
      o.require(s.delta == ex(1, j), "delta_j != j^-1");
    }
    const LimitVerdict v = limit_defining(run);
    o.require(v.kind == LimitKind::Converged, "limit not Converged");
    o.require(v.P_hat == mono(2, 2, 0, 0), "P_hat is not z^2 zbar^2");
    o.require(v.checks.subharmonic && v.checks.nonzero && v.checks.degree_ok && v.checks.harmonic_free,
              "a limit check failed");
  });

  criterion(7, "equivalence closure on the first example", 0.0, [](Outcome &o) {
    const PipelineResult p = equivalence_pipeline(run_for(omega1(), phi1(), base1(), 1, 100));
    o.require(p.report.has_value(), "a limit is missing");
    if (!p.report) {
      return;
    }
    o.require(p.report->symbolic && p.report->symbolic_equal, "symbolic comparison failed");
    o.require(p.report->deviation <= 1e-10, "deviation " + std::to_string(p.report->deviation));
  });

  criterion(8, "modified Frankel rescue with the constant modifier", 0.0, [](Outcome &o) {
    const FrankelFamily F = modified_frankel(phi2(), base1(), lift(shear_map(ex(2), 2)));
    o.require(F.omega == w_plus_one(), "modified omega is not (w + 1, z)");
    const FrankelLimit lim = frankel_limit(F);
    o.require(lim.converged && lim.limit == w_plus_one_map(), "modified limit is not (w + 1, z)");
    o.require(!frankel_limit(frankel_map(phi2(), base1())).converged, "unmodified run does not diverge");
  });

  criterion(9, "property suites", 0.0, [](Outcome &o) {
    Gen g(9001);
    for (int k = 0; k < 100; ++k) {
      const MapFamily fam = g.family();
      const Point p = pt(Scalar(g.gauss()), Scalar(g.gauss()));
      const FrankelFamily F = frankel_map(fam, p);
      const PointOf<ParamRational> at = F.omega(F.base);
      o.require(at.w.is_zero() && at.z.is_zero(), "omega(p) != 0");
      o.require(F.omega.jacobian(F.base) == Matrix2Of<ParamRational>::identity(), "d omega != I");
      const TriangularPolyMap psi{Scalar(g.nonzero_gauss()),
                                  HoloPoly(std::vector<Scalar>{Scalar(g.gauss()), Scalar(g.gauss())}),
                                  Scalar(g.nonzero_gauss()), Scalar(g.gauss())};
      o.require(affine_conjugate_check(fam, p, psi).holds, "affine covariance violated");
    }
    for (int k = 0; k < 100; ++k) {
      RealPoly P = g.real_poly(3, 3, false);
      P = (P - harmonic_sum(harmonic_extract(P, 6))).filter([](const Exponent &e) { return e.total() > 0; });
      if (P.is_zero()) {
        P = mono(1, 1, 0, 0);
      }
      const Scalar eps = pow(ex(1, g.integer(1, 4)), 12);
      const Scalar m = normalization_max(P, eps, delta_select(P, eps));
      o.require(m.is_exact() ? m == ex(1) : close(m, 1.0, 1e-12), "delta normalization != 1");
    }
    MapFamily two = phi1();
    two.alpha = pr(1) / pow(mu(), 2);
    MapFamily six = phi1();
    six.alpha = pr(1) / pow(mu(), 6);
    const std::vector<std::pair<ModelDomain, MapFamily>> fixtures = {
        {omega1(), phi1()}, {ModelDomain(u_var() + mono(1, 1, 0, 0), 2), two},
        {ModelDomain(u_var() + mono(3, 3, 0, 0), 6), six}};
    for (int k = 0; k < 100; ++k) {
      const auto &[D, fam] = fixtures[static_cast<std::size_t>(k) % fixtures.size()];
      const Point z = pt(ex(0), Scalar(g.gauss(1)));
      const Point p = pt(-evaluate(D.rho(), z) - ex(g.integer(1, 6), g.integer(1, 3)), z.z);
      const ScalingRun run = run_for(D, fam, p, 1, 6);
      const Scalar C = fit_C(run);
      o.require(C.real_part() > 0.0, "fitted C not positive");
      for (const auto &s : run.steps) {
        const double bound = (C * pow(s.delta, static_cast<unsigned>(run.order_r))).real_part();
        o.require(s.epsilon.real_part() >= bound * (1 - 1e-12), "epsilon_j < C delta_j^2k");
      }
    }
    for (int k = 0; k < 100; ++k) {
      const MapWord F = g.word(4);
      o.require(normal_form(F.then(invert(F))) == TriangularPolyMap::identity(), "invert round trip");
      const TriangularPolyMap m = g.triangular();
      o.require(m.compose(m.inverse()) == TriangularPolyMap::identity(), "compose/inverse round trip");
    }
    for (int k = 0; k < 100; ++k) {
      const RealPoly a = g.real_poly(3, 3);
      const RealPoly b = g.real_poly(3, 3);
      o.require((a + b).is_real() && (a * b).is_real() && (a * Scalar(g.rational())).is_real(),
                "reality closure");
    }
    for (int k = 0; k < 100; ++k) {
      const int r = static_cast<int>(g.integer(2, 4));
      RealPoly rho = u_var() + g.real_poly(2, 2, false) + harmonic_sum(g.holo(4, false));
      rho = rho.filter([](const Exponent &e) { return e.total() > 0; });
      const Scalar z0(g.gauss(1));
      const Point q = pt(-evaluate(rho - u_var(), pt(ex(0), z0)), z0);
      const CenteringResult c = center_defining(rho, q, r);
      o.require(harmonic_extract(c.P + c.R, r).is_zero(), "centering left harmonic terms");
    }
  });

  criterion(10, "base point comparison gives (2w, 2^(1/4) z)", 0.0, [](Outcome &o) {
    const ScalingRun a = run_for(omega1(), phi1(), base1(), 1, 20);
    const ScalingRun b = run_for(omega1(), phi1(), pt(ex(-2), ex(0)), 1, 20);
    const double r = std::pow(2.0, 0.25);
    for (const auto &s : a.steps) {
      const BaseComparison c = compare_base_points(a, b, s.j);
      o.require(c.degree == 1 && c.degree_ok, "degree bound");
      o.require(close(c.B.alpha, 2.0, 1e-12) && close(c.B.beta, r, 1e-12), "linear part differs");
      o.require(c.B.f.is_zero() && c.B.gamma.abs() <= 1e-12, "translation part nonzero");
    }
    const MapLimit lim = compare_base_points_limit(a, b);
    o.require(lim.cauchy, "limit not finite");
  });

  return failures == 0 ? 0 : 1;
}
