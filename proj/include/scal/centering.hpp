#pragma once

#include <string>
#include <vector>

#include "scal/domains.hpp"

namespace scal {

SCAL_DECLARE_ERROR(DegenerateNormal)
SCAL_DECLARE_ERROR(NotOnBoundary)
SCAL_DECLARE_ERROR(UnsupportedDefining)

/// An error raised while processing one index of a sequence. kind() reports
/// the underlying error kind.
class IndexedError : public Error {
public:
  IndexedError(long index, const Error &inner)
      : Error("index " + std::to_string(index) + ": " + inner.what()), index_(index), inner_kind_(inner.kind()) {}
  long index() const { return index_; }
  std::string kind() const override { return inner_kind_; }

private:
  long index_;
  std::string inner_kind_;
};

struct TiltResult {
  Scalar b;
  ElementaryMap S;
  Scalar c;
};

/// Reads the coefficient b of v and returns S = Linear(diag(1 - i b, 1)).
TiltResult tilt(const RealPoly &rho_translated);

/// State between sweep steps. R depends on (t, z, zbar) and Q on (t, z,
/// zbar) where the v-slot stands for t = Im(w / c).
struct SweepState {
  RealPoly R;
  RealPoly Q;
  Scalar c;
};

struct SweepStep {
  HoloPoly h;
  ElementaryMap psi;
  RealPoly P_j;
  RealPoly R;
  RealPoly Q;
};

SweepStep harmonic_sweep_step(const SweepState &state, int j, int r);

struct CenteringResult {
  MapWord psi_word;
  RealPoly P;
  RealPoly R;
  /// Q in the variables (t, z, zbar); the v-slot holds t = Im(w / c).
  RealPoly Q;
  Scalar c{1};
  Scalar b{0};
  /// Positive factor divided out of rho after translation.
  Scalar scale{1};
  std::vector<HoloPoly> h;

  /// t = Im(w / c) as a real linear form in (u, v).
  RealPoly t_form() const;
  RealPoly Q_materialized() const;
  /// u + P + R + t Q as a polynomial in (z, zbar, u, v).
  RealPoly reconstruct() const;
};

struct CenterOptions {
  /// Largest |rho(q)| accepted for numeric q; exact q must satisfy rho(q) = 0.
  double boundary_tol = 1e-8;
  /// Numeric coefficients at or below this modulus are treated as rounding
  /// noise and dropped.
  double chop_tol = 1e-12;
};

CenteringResult center_defining(const RealPoly &rho, const Point &q, int r, const CenterOptions &opts = {});
CenteringResult center(const ModelDomain &D, const Point &q, int r, const CenterOptions &opts = {});

/// Centers at each point in turn; failures are rethrown as IndexedError.
std::vector<CenteringResult> centering_family(const ModelDomain &D, const std::vector<Point> &q_seq, int r,
                                              const CenterOptions &opts = {});

/// True when the word is Translate, Linear(diag), ShearW... in that order.
bool has_centering_shape(const MapWord &word);

} // namespace scal
