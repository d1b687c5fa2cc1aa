#include <doctest.h>

#include "support.hpp"

using namespace testing;

TEST_SUITE("domains") {

TEST_CASE("domain validation") {
  CHECK_THROWS_AS(ModelDomain(mono(0, 0, 1, 0, ex(2)) + mono(1, 1, 0, 0), 2), InvalidDomain);
  CHECK_THROWS_AS(ModelDomain(rho1(), 1), InvalidDomain);
  CHECK(omega1().rigid());
  CHECK_FALSE(ModelDomain(rho1() + v_var() * mono(1, 1, 0, 0), 4).rigid());
}

TEST_CASE("boundary_hit on rigid domains is exact") {
  for (long t0 : {1L, 3L, 7L}) {
    const BoundaryHit h = boundary_hit(omega1(), pt(ex(-t0), ex(0)));
    CHECK(h.q == pt(ex(0), ex(0)));
    CHECK(h.epsilon == ex(t0));
  }
  const BoundaryHit h2 = boundary_hit(omega2(), base1());
  CHECK(h2.q == pt(ex(0), ex(0)));
  CHECK(h2.epsilon == ex(1));
}

TEST_CASE("boundary_hit errors") {
  HitOptions opts;
  opts.radius = 10.0;
  const ModelDomain flat(u_var() - RealPoly::constant(ex(1)), 2);
  CHECK_THROWS_AS(boundary_hit(flat, pt(ex(-12), ex(0)), opts), NoIntersection);
  CHECK_THROWS_AS(boundary_hit(omega1(), pt(ex(1), ex(0))), NotInterior);
  CHECK_THROWS_AS(boundary_hit(omega1(), pt(ex(0), ex(0))), NotInterior);
}

TEST_CASE("boundary_hit on a nonrigid domain uses bisection") {
  // u + v^2 + |z|^2: along the ray from (-1, 0) the root is t = 1.
  const ModelDomain D(u_var() + v_var() * v_var() + mono(1, 1, 0, 0), 2);
  const BoundaryHit h = boundary_hit(D, pt(ci(-1, 0), ex(0)));
  CHECK(h.epsilon.real_part() == doctest::Approx(1.0).epsilon(1e-10));
  // A ray with Im w = 1/2 meets u = -1/4.
  const BoundaryHit k = boundary_hit(D, pt(Scalar(Gauss(q(-1), q(1, 2))), ex(0)));
  CHECK(k.epsilon.real_part() == doctest::Approx(0.75).epsilon(1e-10));
}

TEST_CASE("dangelo_type") {
  const Point o = pt(ex(0), ex(0));
  CHECK(dangelo_type(omega1(), o) == 4);
  CHECK(dangelo_type(omega3(), o) == 4);
  CHECK(dangelo_type(ModelDomain(u_var() + mono(1, 1, 0, 0), 2), o) == 2);
  CHECK(dangelo_type(omega2(), o) == 4);
  CHECK_THROWS_AS(dangelo_type(ModelDomain(u_var(), 4), o), InfiniteType);
}

TEST_CASE("subharmonic_check") {
  const SubharmonicResult a = subharmonic_check(mono(2, 2, 0, 0));
  CHECK(a.pass);
  CHECK(a.density == mono(1, 1, 0, 0, ex(4)));
  const SubharmonicResult b = subharmonic_check(P3());
  CHECK(b.pass);
  const RealPoly s = mono(1, 0, 0, 0) + mono(0, 1, 0, 0);
  CHECK(b.density == s * s * ex(12));
  const SubharmonicResult c = subharmonic_check(mono(1, 1, 0, 0, ex(-1)));
  CHECK_FALSE(c.pass);
  CHECK(c.min_value == doctest::Approx(-1.0));
}

TEST_CASE("verify_automorphism") {
  const AutomorphismVerdict v1 = verify_automorphism(omega1(), phi1());
  CHECK(v1.is_automorphism);
  CHECK(v1.lambda == pr(1) / pow(mu(), 4));

  const AutomorphismVerdict v3 = verify_automorphism(omega3(), phi3());
  CHECK(v3.is_automorphism);
  CHECK(v3.lambda == pr(1) / pow(mu(), 8));

  const AutomorphismVerdict bad = verify_automorphism(omega1(), lift(shear_map(ex(-2), 2)));
  CHECK_FALSE(bad.is_automorphism);
  REQUIRE(bad.witness);
  CHECK(*bad.witness == Exponent{2, 0, 0, 0});

  CHECK(verify_automorphism(omega2(), phi2()).is_automorphism);
}

TEST_CASE("property: boundary_hit epsilon equals -rho(p) on rigid domains") {
  Gen g(301);
  const std::vector<ModelDomain> ds = {omega1(), omega2(), omega3()};
  for (int k = 0; k < 100; ++k) {
    const ModelDomain &D = ds[static_cast<std::size_t>(k % 3)];
    const Scalar z(g.gauss(2));
    const Scalar depth = ex(g.integer(1, 8), g.integer(1, 3));
    const Scalar w = -evaluate(D.rho(), pt(ex(0), z)) - depth + Scalar(Gauss(q(0), g.rational()));
    const Point p = pt(w, z);
    const Scalar r = evaluate(D.rho(), p);
    REQUIRE(r == -depth);
    const BoundaryHit h = boundary_hit(D, p);
    CHECK(h.epsilon == -r);
    CHECK(evaluate(D.rho(), h.q) == ex(0));
  }
}

TEST_CASE("property: type is invariant under shear pullbacks") {
  Gen g(302);
  const std::vector<RealPoly> rhos = {rho1(), rho3(), u_var() + mono(1, 1, 0, 0), u_var() + mono(3, 3, 0, 0)};
  const std::vector<int> types = {4, 4, 2, 6};
  for (int k = 0; k < 100; ++k) {
    const std::size_t i = static_cast<std::size_t>(k) % rhos.size();
    const HoloPoly h = g.holo(6, false);
    const RealPoly pulled = pullback(rhos[i], MapWord{{ShearW{h}}});
    CHECK(dangelo_type(ModelDomain(pulled, types[i]), pt(ex(0), ex(0))) == types[i]);
  }
}

TEST_CASE("property: certified automorphisms preserve membership") {
  Gen g(303);
  const std::vector<std::pair<ModelDomain, MapFamily>> cases = {
      {omega1(), phi1()}, {omega2(), phi2()}, {omega3(), phi3()}};
  for (const auto &[D, fam] : cases) {
    REQUIRE(verify_automorphism(D, fam).is_automorphism);
    for (int k = 0; k < 40; ++k) {
      const Point z = pt(ex(0), Scalar(g.gauss(2)));
      const Point p = pt(-evaluate(D.rho(), z) - ex(g.integer(1, 8), g.integer(1, 3)), z.z);
      REQUIRE(real_less(evaluate(D.rho(), p), ex(0)));
      const Scalar mu0 = ex(g.integer(1, 50), g.integer(1, 3));
      CHECK(real_less(evaluate(D.rho(), instantiate(fam, mu0)(p)), ex(0)));
    }
  }
}

TEST_CASE("property: subharmonic harmonic-free polynomials have even type") {
  const std::vector<RealPoly> battery = {
      mono(1, 1, 0, 0), mono(2, 2, 0, 0), P3(), mono(3, 3, 0, 0) + mono(2, 2, 0, 0) * ex(5),
      mono(1, 1, 0, 0) + mono(2, 2, 0, 0),
      mono(2, 2, 0, 0) + mono(3, 1, 0, 0, ex(1, 2)) + mono(1, 3, 0, 0, ex(1, 2))};
  for (const auto &P : battery) {
    REQUIRE(subharmonic_check(P).pass);
    REQUIRE(harmonic_extract(P, 6).is_zero());
    const int t = dangelo_type(ModelDomain(u_var() + P, 6), pt(ex(0), ex(0)));
    CHECK(t % 2 == 0);
  }
}

} // TEST_SUITE
