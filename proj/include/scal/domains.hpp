#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "scal/holomaps.hpp"

namespace scal {

SCAL_DECLARE_ERROR(InvalidDomain)
SCAL_DECLARE_ERROR(NotInterior)
SCAL_DECLARE_ERROR(NoIntersection)
SCAL_DECLARE_ERROR(InfiniteType)

/// True when rho = u + P(z, zbar): the only monomial involving u or v is u.
bool is_rigid(const RealPoly &rho);

/// Domain {rho < 0}. The coefficient of u is 1; order_r is the intended type
/// 2k at the accumulation point.
class ModelDomain {
public:
  /// Validates the reality invariant (RealityViolation naming the offending
  /// exponent pair) and the normalization of the u-coefficient.
  ModelDomain(RealPoly rho, int order_r, std::optional<MapWord> premap = std::nullopt);

  const RealPoly &rho() const { return rho_; }
  int order_r() const { return order_r_; }
  bool rigid() const { return rigid_; }
  /// Optional linear change of coordinates supplied with the domain file,
  /// applied before anything else.
  const std::optional<MapWord> &premap() const { return premap_; }

private:
  RealPoly rho_;
  int order_r_;
  bool rigid_;
  std::optional<MapWord> premap_;
};

struct HitOptions {
  double radius = 1e6;
  double tol = 1e-12;
};

struct BoundaryHit {
  Point q;
  Scalar epsilon;
};

/// First boundary point on the ray p + (t, 0), t > 0. Exact when rho is
/// affine in Re w along the ray with unit slope and p is exact.
BoundaryHit boundary_hit(const ModelDomain &D, const Point &p, const HitOptions &opts = {});

/// Vanishing order of the harmonic-free centered P at q, computed with
/// r = D.order_r(). Requires a rigid domain.
int dangelo_type(const ModelDomain &D, const Point &q);

struct SubharmonicGrid {
  int samples = 101;
  double half_width = 2.0;
  double tol = 1e-9;
};

struct SubharmonicResult {
  bool pass = false;
  double min_value = 0.0;
  std::complex<double> witness;   ///< grid point attaining min_value
  RealPoly density;               ///< d^2 P / dz dzbar
};

SubharmonicResult subharmonic_check(const RealPoly &P, const SubharmonicGrid &grid = {});

struct AutomorphismVerdict {
  bool is_automorphism = false;
  ParamRational lambda;                ///< multiplier when certified
  std::optional<Exponent> witness;     ///< first offending monomial otherwise
  std::vector<Exponent> mismatches;
  std::string warning;
};

/// Certifies rho o Fam = lambda(mu) rho with lambda real and eventually
/// positive.
AutomorphismVerdict verify_automorphism(const ModelDomain &D, const MapFamily &fam);

} // namespace scal
