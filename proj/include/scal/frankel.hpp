#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "scal/convergence.hpp"
#include "scal/holomaps.hpp"
#include "scal/pinchuk.hpp"

namespace scal {

SCAL_DECLARE_ERROR(SingularJacobian)
SCAL_DECLARE_ERROR(DivergentModifier)

struct FrankelFamily {
  MapFamily omega;
  /// Point where omega vanishes with identity differential.
  PointOf<ParamRational> base;
  /// The family that was scaled (conjugated by the modifier when modified).
  MapFamily source;
  /// Numerator of det d(source) at the base; its real roots are the
  /// parameters where the construction breaks down.
  MuPoly singular_locus;
};

/// omega = [d phi|_p]^-1 (phi - phi(p)).
FrankelFamily frankel_map(const MapFamily &fam, const Point &p);
/// Same construction at a parameter-dependent base point.
FrankelFamily frankel_map(const MapFamily &fam, const PointOf<ParamRational> &base);
/// Single-index version with Scalar coefficients.
TriangularPolyMap frankel_at(const TriangularPolyMap &phi, const Point &p);

struct FrankelLimit {
  bool converged = false;
  TriangularPolyMap limit;
  /// Every coefficient slot whose rational function diverges.
  std::vector<std::pair<MapTerm, ParamRational>> divergent;
};

FrankelLimit frankel_limit(const FrankelFamily &F);

struct ConjugateCheck {
  bool holds = false;
  std::vector<MapTerm> mismatches;
  std::optional<MapTerm> witness;
  MapFamily lhs; ///< Frankel map of psi phi psi^-1 at psi(p)
  MapFamily rhs; ///< d psi_p o omega o psi^-1
};

/// Compares both sides of the affine covariance identity. psi must be
/// triangular; a nonaffine psi is accepted and generally violates it.
ConjugateCheck affine_conjugate_check(const MapFamily &fam, const Point &p, const TriangularPolyMap &psi);

/// Frankel map of psi phi psi^-1 at psi(p). Rejects modifiers with a
/// divergent coefficient or a singular limit.
FrankelFamily modified_frankel(const MapFamily &fam, const Point &p, const MapFamily &psi_seq);

/// Modified Frankel maps of a scaling run, the modifier at index j being the
/// run's full centering map.
std::vector<TriangularPolyMap> modified_frankel_sequence(const ScalingRun &run);

/// Normal forms of the centering maps premap then Psi_j.
std::vector<TriangularPolyMap> centering_sequence(const ScalingRun &run);
std::vector<TriangularPolyMap> sigma_sequence(const ScalingRun &run);

struct BridgeAffine {
  std::vector<long> js;
  std::vector<TriangularPolyMap> A;
  /// |A_j(sigma_j(p))| per index; exactly zero on the exact path.
  std::vector<double> base_residual;
  bool vanishes_at_base = true;
  MapLimit limit;
  bool nonsingular = false;
  /// Limit linear part agrees with d psi_hat|_p (d sigma_hat|_p)^-1.
  bool matches_expected = false;
};

BridgeAffine bridge_affine(const ScalingRun &run, std::size_t tail = 10, double tol = 1e-8);

struct EquivalenceReport {
  bool symbolic = false;       ///< all four maps exact
  bool symbolic_equal = false;
  std::vector<MapTerm> mismatches;
  double deviation = 0.0;      ///< sampled sup |omega - A sigma psi^-1|
};

EquivalenceReport equivalence_check(const TriangularPolyMap &omega_hat, const TriangularPolyMap &sigma_hat,
                                    const TriangularPolyMap &psi_hat, const TriangularPolyMap &A_hat,
                                    const CompactBox &box = {}, const GridSpec &grid = {});

/// Limits of the four sequences of a run and the resulting equivalence.
struct PipelineResult {
  MapLimit omega;
  MapLimit sigma;
  MapLimit psi;
  BridgeAffine bridge;
  std::optional<EquivalenceReport> report; ///< present when all limits exist
};

PipelineResult equivalence_pipeline(const ScalingRun &run, const CompactBox &box = {}, const GridSpec &grid = {},
                                    std::size_t tail = 10, double tol = 1e-8);

} // namespace scal
