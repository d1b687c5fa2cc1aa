#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scal/centering.hpp"
#include "scal/convergence.hpp"
#include "scal/domains.hpp"

namespace scal {

SCAL_DECLARE_ERROR(ZeroPolynomial)
SCAL_DECLARE_ERROR(TypeExceeded)

/// delta = min over nonzero homogeneous parts P_n of (eps / |P_n|_inf)^(1/n).
/// Exact when the winning root is a perfect power.
Scalar delta_select(const RealPoly &P, const Scalar &epsilon);

/// max_n |eps^-1 P_n(delta z, delta zbar)|_inf.
Scalar normalization_max(const RealPoly &P, const Scalar &epsilon, const Scalar &delta);

/// eps^-1 rho(eps w, delta z) for real positive eps and delta.
RealPoly dilation_pullback(const RealPoly &rho, const Scalar &epsilon, const Scalar &delta);

struct ScalingStep {
  long j = 0;
  TriangularPolyMap phi;
  Point p_j;
  Point q_j;
  Scalar epsilon;
  Scalar delta;
  Scalar c;
  int type_at_q = 0;
  CenteringResult centering;
  MapWord Lambda;
  MapWord sigma;
  RealPoly rho_tilde;
};

struct ExcludedIndex {
  long j = 0;
  std::string kind;
  std::string message;
};

struct ScalingRun {
  int order_r = 0;
  Point base;          ///< p in the centered coordinates the run works in
  Point base_original; ///< p before the premap
  MapWord premap;
  std::vector<ScalingStep> steps;
  std::vector<ExcludedIndex> excluded;

  const ScalingStep *find(long j) const;
};

struct PinchukOptions {
  /// Coordinate change already applied to the domain and family (unitary
  /// premap followed by the centering at the accumulation point).
  MapWord premap;
  HitOptions hit;
  CenterOptions center;
};

std::vector<long> index_range(long first, long last);

/// The scaling construction on a domain already centered at the
/// accumulation point of fam(p).
ScalingRun pinchuk_run(const ModelDomain &D, const MapFamily &fam, const Point &p, const std::vector<long> &js,
                       const PinchukOptions &opts = {});

struct Precentered {
  ModelDomain domain;
  MapFamily family;
  Point base;
  MapWord premap;
  Point accumulation;
};

/// Applies the domain's optional linear premap, locates lim fam(p) and
/// centers the domain there; the family is conjugated accordingly.
Precentered precenter(const ModelDomain &D, const MapFamily &fam, const Point &p);

/// min_j eps_j / delta_j^(order_r).
Scalar fit_C(const ScalingRun &run);

struct LimitChecks {
  bool subharmonic = false;
  bool nonzero = false;
  bool degree_ok = false;
  bool harmonic_free = false;

  bool all() const { return subharmonic && nonzero && degree_ok && harmonic_free; }
};

enum class LimitKind { Converged, SubsequenceSelected, Divergent };

std::string to_string(LimitKind k);

struct LimitOptions {
  double tol = 1e-8;
  std::size_t tail = 10;
  /// Trace flagged unbounded when it exceeds this factor times its first
  /// tail value (or 1, whichever is larger).
  double unbounded_factor = 1e6;
  SubharmonicGrid grid;
};

struct LimitVerdict {
  LimitKind kind = LimitKind::Divergent;
  RealPoly rho_hat;
  RealPoly P_hat;
  LimitChecks checks;
  std::vector<long> indices; ///< indices realizing the limit
  std::optional<Exponent> witness;
  std::vector<Scalar> witness_trace;
};

LimitVerdict limit_defining(const ScalingRun &run, const LimitOptions &opts = {});

struct InverseDiagnostics {
  std::vector<long> js;
  std::vector<double> min_abs_det;
  std::vector<std::size_t> injectivity_violations;
  /// min |det| shrinks by more than a factor 10 over the run, monotonically.
  bool decay = false;
};

InverseDiagnostics inverse_diagnostics(const ScalingRun &run, const CompactBox &box, const GridSpec &grid);

struct BaseComparison {
  TriangularPolyMap B;
  int degree = 0;
  bool degree_ok = false;
};

/// B_j = sigma_j^A o (sigma_j^B)^-1 in normal form.
BaseComparison compare_base_points(const ScalingRun &a, const ScalingRun &b, long j);

/// Coefficientwise limit of B_j over the indices both runs share.
MapLimit compare_base_points_limit(const ScalingRun &a, const ScalingRun &b, std::size_t tail = 10,
                                   double tol = 1e-8);

} // namespace scal
