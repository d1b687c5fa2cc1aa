#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "scal/holomaps.hpp"

namespace scal {

/// Product of intervals center_k +- half_widths[k] along the real axes
/// (Re w, Im w, Re z, Im z).
struct CompactBox {
  Point center{Scalar(-1), Scalar(0)};
  std::array<double, 4> half_widths{1.0, 1.0, 1.0, 1.0};

  void validate() const;
};

struct GridSpec {
  int samples = 21;
  double tolerance = 1e-9;

  void validate() const;
};

/// Visits the samples^4 grid points of the box in a fixed order.
void for_each_grid_point(const CompactBox &box, const GridSpec &grid,
                         const std::function<void(const NumericPoint &)> &fn);

using PointMap = std::function<NumericPoint(const NumericPoint &)>;

/// Double-precision evaluator for a triangular map.
class NumericTriangular {
public:
  explicit NumericTriangular(const TriangularPolyMap &m);
  NumericPoint operator()(const NumericPoint &p) const;

private:
  std::complex<double> alpha_, beta_, gamma_;
  std::vector<std::complex<double>> f_;
};

struct NormalConvergenceVerdict {
  bool pass = true;
  int failed_condition = 0; ///< 1 or 2 when pass is false
  NumericPoint witness{};
  long witness_index = -1;  ///< offending sequence index for condition 2
  double witness_value = 0.0;
  double tolerance = 0.0;
  std::size_t points_checked = 0;
};

/// Sampled check of the two normal-convergence conditions for {rho_j < 0}
/// against {rho_hat < 0} over the last `tail` elements of the sequence.
NormalConvergenceVerdict normal_convergence_check(const std::vector<RealPoly> &rho_seq, const RealPoly &rho_hat,
                                                  const std::vector<CompactBox> &boxes, const GridSpec &grid,
                                                  std::size_t tail = 10);

struct MapLimit {
  bool cauchy = false;
  TriangularPolyMap limit;     ///< last element of the tail when cauchy
  double bound = 0.0;          ///< largest tail oscillation over all coefficients
  std::vector<MapTerm> divergent;
  std::optional<MapTerm> witness;
  std::vector<Scalar> trace;   ///< tail values of the witness coefficient
};

MapLimit map_sequence_limit(const std::vector<TriangularPolyMap> &maps, std::size_t tail = 10, double tol = 1e-8);

/// max over grid points of |f(x) - g(x)| in the Euclidean norm of C^2.
double sup_deviation(const PointMap &f, const PointMap &g, const CompactBox &box = {}, const GridSpec &grid = {});

} // namespace scal
