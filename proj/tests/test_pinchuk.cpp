#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

ScalingRun synthetic(const std::vector<RealPoly> &rhos, int order_r = 4) {
  ScalingRun run;
  run.order_r = order_r;
  long j = 1;
  for (const auto &r : rhos) {
    ScalingStep s;
    s.j = j++;
    s.rho_tilde = r;
    run.steps.push_back(std::move(s));
  }
  return run;
}

bool is_diagonal_linear(const ElementaryMap &m) {
  const auto *l = std::get_if<Linear>(&m);
  return l != nullptr && l->m.m[1].is_zero() && l->m.m[2].is_zero();
}

double distance(const Point &a, const Point &b) {
  const NumericPoint x = to_numeric(a);
  const NumericPoint y = to_numeric(b);
  return std::hypot(std::abs(x[0] - y[0]), std::abs(x[1] - y[1]));
}

} // namespace

TEST_SUITE("pinchuk") {

TEST_CASE("delta_select") {
  for (long j : {1L, 2L, 7L}) {
    CHECK(delta_select(mono(2, 2, 0, 0), ex(1, j * j * j * j)) == ex(1, j));
  }
  CHECK(delta_select(mono(1, 1, 0, 0), ex(1, 9)) == ex(1, 3));
  const Scalar irr = delta_select(mono(1, 1, 0, 0), ex(2));
  CHECK(irr.real_part() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(delta_select(mono(1, 1, 0, 0) + mono(2, 2, 0, 0), ex(1)) == ex(1));
  CHECK_THROWS_AS(delta_select(RealPoly(), ex(1)), ZeroPolynomial);
}

TEST_CASE("dilation_pullback") {
  for (long j : {1L, 3L, 10L}) {
    CHECK(dilation_pullback(rho1(), ex(1, j * j * j * j), ex(1, j)) == rho1());
  }
  const RealPoly generic = rho3() + v_var() * mono(1, 1, 0, 0) + mono(1, 0, 0, 0, ex(3)) + mono(0, 1, 0, 0, ex(3));
  CHECK(dilation_pullback(generic, ex(1), ex(1)) == generic);

  // Without centering the harmonic terms survive the dilation.
  for (long j : {2L, 5L}) {
    const Scalar eps = ex(1, j * j * j * j);
    const Scalar delta = delta_select(rho2() - u_var(), eps);
    CHECK(delta == ex(1, j * j));
    CHECK(dilation_pullback(rho2(), eps, delta) ==
          u_var() + mono(2, 0, 0, 0) + mono(0, 2, 0, 0) + mono(2, 2, 0, 0, eps));
  }
}

TEST_CASE("pinchuk_run on the first example") {
  const ScalingRun run = run_for(omega1(), phi1(), base1(), 1, 100);
  REQUIRE(run.steps.size() == 100);
  CHECK(run.excluded.empty());
  for (const auto &s : run.steps) {
    const long j = s.j;
    CHECK(normal_form(s.sigma) == TriangularPolyMap::identity());
    CHECK(s.epsilon == ex(1, j * j * j * j));
    CHECK(s.delta == ex(1, j));
    CHECK(s.c == ex(1));
    CHECK(s.type_at_q == 4);
    CHECK(s.rho_tilde == rho1());
    CHECK(scal::apply(s.sigma, run.base_original) == base1());
  }
  CHECK(fit_C(run) == ex(1));
}

TEST_CASE("the conjugated second example gives identical data") {
  const ScalingRun a = run_for(omega1(), phi1(), base1(), 1, 30);
  const ScalingRun b = run_for(omega2(), phi2(), base1(), 1, 30);
  REQUIRE(a.steps.size() == b.steps.size());
  CHECK(normal_form(b.premap) == shear_map(ex(2), 2));
  for (std::size_t k = 0; k < a.steps.size(); ++k) {
    CHECK(a.steps[k].epsilon == b.steps[k].epsilon);
    CHECK(a.steps[k].delta == b.steps[k].delta);
    CHECK(a.steps[k].c == b.steps[k].c);
    CHECK(a.steps[k].rho_tilde == b.steps[k].rho_tilde);
    CHECK(normal_form(b.steps[k].sigma) == normal_form(a.steps[k].sigma).compose(shear_map(ex(2), 2)));
    CHECK(scal::apply(b.steps[k].sigma, b.base_original) == base1());
  }
}

TEST_CASE("an empty range gives an empty run") {
  CHECK(index_range(5, 4).empty());
  const ScalingRun run = run_for(omega1(), phi1(), base1(), 5, 4);
  CHECK(run.steps.empty());
  CHECK_THROWS_AS(limit_defining(run), Error);
}

TEST_CASE("limit_defining") {
  const LimitVerdict v = limit_defining(run_for(omega1(), phi1(), base1(), 1, 100));
  CHECK(v.kind == LimitKind::Converged);
  CHECK(v.P_hat == mono(2, 2, 0, 0));
  CHECK(v.checks.all());
  CHECK(vanishing_order(v.P_hat).value() % 2 == 0);

  const LimitVerdict c = limit_defining(synthetic(std::vector<RealPoly>(12, rho3())));
  CHECK(c.kind == LimitKind::Converged);
  CHECK(c.P_hat == P3());
  CHECK(c.checks.all());

  std::vector<RealPoly> unc;
  for (long j = 1; j <= 300; ++j) {
    const Scalar eps = Scalar(1) / pow(ex(j), 4);
    unc.push_back(dilation_pullback(rho2(), eps, delta_select(rho2() - u_var(), eps)));
  }
  const LimitVerdict h = limit_defining(synthetic(unc));
  CHECK(h.kind == LimitKind::Converged);
  CHECK(h.P_hat == mono(2, 0, 0, 0) + mono(0, 2, 0, 0));
  CHECK_FALSE(h.checks.harmonic_free);
  CHECK_FALSE(h.checks.all());
}

TEST_CASE("limit_defining selects subsequences and flags growth") {
  std::vector<RealPoly> osc;
  std::vector<RealPoly> grow;
  for (long j = 1; j <= 40; ++j) {
    osc.push_back(rho1() + mono(1, 1, 0, 0, ex(j % 2 == 0 ? 1 : 2)));
    grow.push_back(rho1() + mono(1, 1, 0, 0, pow(ex(j), 8)));
  }
  const LimitVerdict s = limit_defining(synthetic(osc));
  CHECK(s.kind == LimitKind::SubsequenceSelected);
  REQUIRE(!s.indices.empty());
  const long parity = s.indices.front() % 2;
  for (long j : s.indices) {
    CHECK(j % 2 == parity);
  }
  CHECK(s.checks.all());

  const LimitVerdict d = limit_defining(synthetic(grow));
  CHECK(d.kind == LimitKind::Divergent);
  REQUIRE(d.witness);
  CHECK(*d.witness == Exponent{1, 1, 0, 0});
  CHECK(d.witness_trace.size() == 40);
}

TEST_CASE("inverse_diagnostics") {
  CompactBox box;
  GridSpec grid;
  grid.samples = 5;
  const InverseDiagnostics a = inverse_diagnostics(run_for(omega1(), phi1(), base1(), 1, 10), box, grid);
  REQUIRE(a.min_abs_det.size() == 10);
  for (std::size_t k = 0; k < a.min_abs_det.size(); ++k) {
    CHECK(a.min_abs_det[k] == doctest::Approx(1.0));
    CHECK(a.injectivity_violations[k] == 0);
  }
  CHECK_FALSE(a.decay);

  ScalingRun shears = synthetic(std::vector<RealPoly>(6, rho1()));
  Gen g(501);
  for (auto &s : shears.steps) {
    s.sigma = MapWord{{ShearW{g.holo(3)}, ShearW{g.holo(2)}}};
  }
  for (double d : inverse_diagnostics(shears, box, grid).min_abs_det) {
    CHECK(d == doctest::Approx(1.0));
  }

  ScalingRun shrink = synthetic(std::vector<RealPoly>(20, rho1()));
  for (auto &s : shrink.steps) {
    s.sigma = MapWord{{Linear{Matrix2::diagonal(ex(s.j), ex(1))}}};
  }
  const InverseDiagnostics c = inverse_diagnostics(shrink, box, grid);
  for (std::size_t k = 0; k < c.js.size(); ++k) {
    CHECK(c.min_abs_det[k] == doctest::Approx(1.0 / static_cast<double>(c.js[k])));
  }
  CHECK(c.decay);
}

TEST_CASE("compare_base_points") {
  const ScalingRun a = run_for(omega1(), phi1(), base1(), 1, 20);
  const BaseComparison same = compare_base_points(a, a, 7);
  CHECK(same.B == TriangularPolyMap::identity());

  const ScalingRun b = run_for(omega1(), phi1(), pt(ex(-2), ex(0)), 1, 20);
  const double r = std::pow(2.0, 0.25);
  for (long j : {1L, 5L, 20L}) {
    const BaseComparison c = compare_base_points(a, b, j);
    CHECK(c.degree == 1);
    CHECK(c.degree_ok);
    CHECK(std::abs(c.B.alpha.to_complex() - 2.0) <= 1e-12);
    CHECK(std::abs(c.B.beta.to_complex() - r) <= 1e-12);
    CHECK(c.B.f.is_zero());
    CHECK(c.B.gamma.abs() <= 1e-12);
  }
  const MapLimit lim = compare_base_points_limit(a, b);
  CHECK(lim.cauchy);
  CHECK(std::abs(lim.limit.beta.to_complex() - r) <= 1e-12);

  const ScalingRun a2 = run_for(omega2(), phi2(), base1(), 1, 20);
  const ScalingRun b2 = run_for(omega2(), phi2(), pt(ex(-2), ex(0)), 1, 20);
  for (long j : {1L, 5L, 20L}) {
    const TriangularPolyMap x = compare_base_points(a, b, j).B;
    const TriangularPolyMap y = compare_base_points(a2, b2, j).B;
    CHECK(std::abs(x.alpha.to_complex() - y.alpha.to_complex()) <= 1e-12);
    CHECK(std::abs(x.beta.to_complex() - y.beta.to_complex()) <= 1e-12);
    for (std::size_t d = 0; d <= 4; ++d) {
      CHECK((x.f.coeff(d) - y.f.coeff(d)).abs() <= 1e-12);
    }
    CHECK((x.gamma - y.gamma).abs() <= 1e-12);
  }
  CHECK_THROWS_AS(compare_base_points(a, b, 99), Error);
}

TEST_CASE("property: the delta normalization has max norm one") {
  Gen g(502);
  int exact = 0;
  for (int k = 0; k < 150; ++k) {
    RealPoly P = g.real_poly(3, 3, false);
    P = P - harmonic_sum(harmonic_extract(P, 6));
    P = P.filter([](const Exponent &e) { return e.total() > 0; });
    if (P.is_zero()) {
      P = mono(1, 1, 0, 0);
    }
    // A perfect power of a rational keeps every root exact.
    const Scalar t = ex(1, g.integer(1, 4));
    const Scalar eps = g.coin() ? pow(t, 12) : Scalar(Rational(abs(g.nonzero_rational())));
    const Scalar delta = delta_select(P, eps);
    const Scalar m = normalization_max(P, eps, delta);
    CHECK(m.real_part() == doctest::Approx(1.0).epsilon(1e-12));
    if (m.is_exact()) {
      CHECK(m == ex(1));
      ++exact;
    }
  }
  CHECK(exact > 0);
}

TEST_CASE("property: epsilon dominates C delta^2k on finite type fixtures") {
  Gen g(503);
  struct Fixture {
    ModelDomain D;
    MapFamily fam;
  };
  MapFamily two = phi1();
  two.alpha = pr(1) / pow(mu(), 2);
  MapFamily six = phi1();
  six.alpha = pr(1) / pow(mu(), 6);
  const std::vector<Fixture> fixtures = {{omega1(), phi1()},
                                         {ModelDomain(u_var() + mono(1, 1, 0, 0), 2), two},
                                         {ModelDomain(u_var() + mono(3, 3, 0, 0), 6), six}};
  for (int k = 0; k < 120; ++k) {
    const Fixture &fx = fixtures[static_cast<std::size_t>(k) % fixtures.size()];
    const Point z = pt(ex(0), Scalar(g.gauss(1)));
    const Point p = pt(-evaluate(fx.D.rho(), z) - ex(g.integer(1, 6), g.integer(1, 3)), z.z);
    const ScalingRun run = run_for(fx.D, fx.fam, p, 1, 8);
    REQUIRE(run.steps.size() == 8);
    const Scalar C = fit_C(run);
    CHECK(C.real_part() > 0.0);
    for (const auto &s : run.steps) {
      const Scalar bound = C * pow(s.delta, static_cast<unsigned>(run.order_r));
      CHECK(s.epsilon.real_part() >= bound.real_part() * (1 - 1e-12));
      CHECK(distance(scal::apply(s.sigma, run.base_original), base1()) <= 1e-9);
      CHECK(has_centering_shape(s.centering.psi_word));
      REQUIRE(!s.Lambda.maps.empty());
      CHECK(is_diagonal_linear(s.Lambda.maps.back()));
    }
  }
}

} // TEST_SUITE
