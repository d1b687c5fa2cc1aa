#include "scal/frankel.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace scal {

namespace {

template <typename K> TriangularMap<K> frankel_core(const TriangularMap<K> &phi, const PointOf<K> &b) {
  if (detail::coeff_is_zero(phi.alpha * phi.beta)) {
    throw SingularJacobian("differential of the family is singular at the base point");
  }
  const Matrix2Of<K> inv = phi.jacobian(b).inverse();
  const PointOf<K> img = phi(b);
  const UniPoly<K> second(std::vector<K>{phi.gamma - img.z, phi.beta});
  TriangularMap<K> out;
  out.alpha = inv.m[0] * phi.alpha;
  out.f = (phi.f - UniPoly<K>::constant(img.w)) * inv.m[0] + second * inv.m[1];
  out.beta = inv.m[3] * phi.beta;
  out.gamma = inv.m[3] * (phi.gamma - img.z);
  return out;
}

PointOf<ParamRational> lift(const Point &p) {
  return {ParamRational::from_scalar(p.w), ParamRational::from_scalar(p.z)};
}

MapFamily lift_linear(const Matrix2 &L) {
  if (!L.upper_triangular()) {
    throw NotTriangular("differential is not upper triangular");
  }
  return lift(TriangularPolyMap{L.m[0], HoloPoly::monomial(L.m[1], 1), L.m[3], Scalar(0)});
}

template <typename K> std::vector<MapTerm> mismatching_terms(const TriangularMap<K> &x, const TriangularMap<K> &y) {
  std::set<MapTerm> slots;
  for (const auto &[t, v] : coefficients(x)) {
    slots.insert(t);
  }
  for (const auto &[t, v] : coefficients(y)) {
    slots.insert(t);
  }
  std::vector<MapTerm> out;
  for (const auto &t : slots) {
    if (!(coefficient(x, t) == coefficient(y, t))) {
      out.push_back(t);
    }
  }
  return out;
}

bool all_exact(const TriangularPolyMap &m) {
  const auto slots = coefficients(m);
  return std::all_of(slots.begin(), slots.end(), [](const auto &slot) { return slot.second.is_exact(); });
}

Matrix2 linear_part(const TriangularPolyMap &m) { return {{m.alpha, m.f.coeff(1), Scalar(0), m.beta}}; }

double max_abs_diff(const Matrix2 &x, const Matrix2 &y) {
  double out = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    out = std::max(out, (x.m[k] - y.m[k]).abs());
  }
  return out;
}

} // namespace

FrankelFamily frankel_map(const MapFamily &fam, const PointOf<ParamRational> &base) {
  FrankelFamily out;
  out.source = fam;
  out.base = base;
  out.singular_locus = (fam.alpha * fam.beta).num();
  out.omega = frankel_core(fam, base);
  const PointOf<ParamRational> zero = out.omega(base);
  if (!zero.w.is_zero() || !zero.z.is_zero() ||
      !(out.omega.jacobian(base) == Matrix2Of<ParamRational>::identity())) {
    throw Error("Frankel normalization failed: omega(p) = 0 and d omega = I do not hold");
  }
  return out;
}

FrankelFamily frankel_map(const MapFamily &fam, const Point &p) { return frankel_map(fam, lift(p)); }

TriangularPolyMap frankel_at(const TriangularPolyMap &phi, const Point &p) { return frankel_core(phi, p); }

FrankelLimit frankel_limit(const FrankelFamily &F) {
  FrankelLimit out;
  for (const auto &[term, value] : coefficients(F.omega)) {
    if (!rational_limit(value).finite) {
      out.divergent.emplace_back(term, value);
    }
  }
  out.converged = out.divergent.empty();
  if (out.converged) {
    out.limit = F.omega.map([](const ParamRational &c) { return Scalar(rational_limit(c).value); });
  }
  return out;
}

ConjugateCheck affine_conjugate_check(const MapFamily &fam, const Point &p, const TriangularPolyMap &psi) {
  const MapFamily Psi = lift(psi);
  const MapFamily Psi_inv = lift(psi.inverse());
  const PointOf<ParamRational> base = lift(p);

  ConjugateCheck out;
  out.lhs = frankel_core(Psi.compose(fam.compose(Psi_inv)), Psi(base));
  const MapFamily omega = frankel_core(fam, base);
  out.rhs = lift_linear(psi.jacobian(p)).compose(omega.compose(Psi_inv));
  out.mismatches = mismatching_terms(out.lhs, out.rhs);
  if (!out.mismatches.empty()) {
    out.witness = out.mismatches.front();
  }
  out.holds = out.mismatches.empty();
  return out;
}

FrankelFamily modified_frankel(const MapFamily &fam, const Point &p, const MapFamily &psi_seq) {
  std::string bad;
  for (const auto &[term, value] : coefficients(psi_seq)) {
    if (!rational_limit(value).finite) {
      bad += (bad.empty() ? "" : ", ") + to_string(term) + " -> " + to_string(value);
    }
  }
  if (!bad.empty()) {
    throw DivergentModifier("modifier coefficients diverge: " + bad);
  }
  if (rational_limit(psi_seq.alpha).value.is_zero() || rational_limit(psi_seq.beta).value.is_zero()) {
    throw DivergentModifier("modifier converges to a singular map");
  }
  const MapFamily conj = psi_seq.compose(fam.compose(psi_seq.inverse()));
  return frankel_map(conj, psi_seq(lift(p)));
}

std::vector<TriangularPolyMap> centering_sequence(const ScalingRun &run) {
  std::vector<TriangularPolyMap> out;
  for (const auto &s : run.steps) {
    out.push_back(normal_form(run.premap.then(s.centering.psi_word)));
  }
  return out;
}

std::vector<TriangularPolyMap> sigma_sequence(const ScalingRun &run) {
  std::vector<TriangularPolyMap> out;
  for (const auto &s : run.steps) {
    out.push_back(normal_form(s.sigma));
  }
  return out;
}

std::vector<TriangularPolyMap> modified_frankel_sequence(const ScalingRun &run) {
  std::vector<TriangularPolyMap> out;
  for (const auto &s : run.steps) {
    const TriangularPolyMap Psi = normal_form(s.centering.psi_word);
    const TriangularPolyMap conj = Psi.compose(s.phi.compose(Psi.inverse()));
    out.push_back(frankel_at(conj, Psi(run.base)));
  }
  return out;
}

BridgeAffine bridge_affine(const ScalingRun &run, std::size_t tail, double tol) {
  if (run.steps.empty()) {
    throw Error("bridge needs a nonempty run");
  }
  BridgeAffine out;
  for (const auto &s : run.steps) {
    const TriangularPolyMap Psi = normal_form(s.centering.psi_word);
    const TriangularPolyMap conj = Psi.compose(s.phi.compose(Psi.inverse()));
    const Matrix2 inv = conj.jacobian(Psi(run.base)).inverse();
    const Matrix2 L = inv * Matrix2::diagonal(s.epsilon, s.delta);
    const Point y0 = Psi(s.p_j);
    const Scalar tw = -(inv.m[0] * y0.w + inv.m[1] * y0.z);
    const Scalar tz = -(inv.m[2] * y0.w + inv.m[3] * y0.z);
    if (!L.upper_triangular()) {
      throw NotTriangular("bridge map is not triangular");
    }
    TriangularPolyMap A{L.m[0], HoloPoly(std::vector<Scalar>{tw, L.m[1]}), L.m[3], tz};

    const Point at_base = A(apply(s.sigma, run.base_original));
    const double residual =
        at_base.w.is_zero() && at_base.z.is_zero() ? 0.0 : std::hypot(at_base.w.abs(), at_base.z.abs());
    out.js.push_back(s.j);
    out.A.push_back(std::move(A));
    out.base_residual.push_back(residual);
    out.vanishes_at_base = out.vanishes_at_base && residual <= 1e-9;
  }
  out.limit = map_sequence_limit(out.A, std::min(tail, out.A.size()), tol);
  if (!out.limit.cauchy) {
    return out;
  }
  out.nonsingular = (out.limit.limit.alpha * out.limit.limit.beta).abs() > tol;

  const MapLimit psi = map_sequence_limit(centering_sequence(run), std::min(tail, run.steps.size()), tol);
  const MapLimit sigma = map_sequence_limit(sigma_sequence(run), std::min(tail, run.steps.size()), tol);
  if (psi.cauchy && sigma.cauchy) {
    const Matrix2 expected =
        psi.limit.jacobian(run.base_original) * sigma.limit.jacobian(run.base_original).inverse();
    out.matches_expected = max_abs_diff(expected, linear_part(out.limit.limit)) <= tol;
  }
  return out;
}

EquivalenceReport equivalence_check(const TriangularPolyMap &omega_hat, const TriangularPolyMap &sigma_hat,
                                    const TriangularPolyMap &psi_hat, const TriangularPolyMap &A_hat,
                                    const CompactBox &box, const GridSpec &grid) {
  EquivalenceReport out;
  const TriangularPolyMap psi_inv = psi_hat.inverse();
  out.symbolic = all_exact(omega_hat) && all_exact(sigma_hat) && all_exact(psi_hat) && all_exact(A_hat);
  if (out.symbolic) {
    const TriangularPolyMap composed = A_hat.compose(sigma_hat.compose(psi_inv));
    out.mismatches = mismatching_terms(omega_hat, composed);
    out.symbolic_equal = out.mismatches.empty();
  }
  const NumericTriangular w(omega_hat), A(A_hat), s(sigma_hat), pi(psi_inv);
  out.deviation = sup_deviation([&](const NumericPoint &x) { return w(x); },
                                [&](const NumericPoint &x) { return A(s(pi(x))); }, box, grid);
  return out;
}

PipelineResult equivalence_pipeline(const ScalingRun &run, const CompactBox &box, const GridSpec &grid,
                                    std::size_t tail, double tol) {
  if (run.steps.empty()) {
    throw Error("equivalence pipeline needs a nonempty run");
  }
  const std::size_t t = std::min(tail, run.steps.size());
  PipelineResult out;
  out.omega = map_sequence_limit(modified_frankel_sequence(run), t, tol);
  out.sigma = map_sequence_limit(sigma_sequence(run), t, tol);
  out.psi = map_sequence_limit(centering_sequence(run), t, tol);
  out.bridge = bridge_affine(run, tail, tol);
  if (out.omega.cauchy && out.sigma.cauchy && out.psi.cauchy && out.bridge.limit.cauchy) {
    out.report = equivalence_check(out.omega.limit, out.sigma.limit, out.psi.limit, out.bridge.limit.limit, box,
                                   grid);
  }
  return out;
}

} // namespace scal
