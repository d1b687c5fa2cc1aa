#pragma once

#include <exception>
#include <string>
#include <vector>

#include "scal/centering.hpp"
#include "scal/frankel.hpp"
#include "scal/io.hpp"
#include "scal/pinchuk.hpp"

namespace scal {

Json error_report(const std::exception &e);

Json centering_report(const CenteringResult &c);
Json automorphism_report(const AutomorphismVerdict &v);
Json frankel_report(const FrankelFamily &F, const FrankelLimit &limit);
Json limit_report(const LimitVerdict &v);
Json map_limit_report(const MapLimit &m);
Json bridge_report(const BridgeAffine &b);
Json pipeline_report(const PipelineResult &p);
Json normal_convergence_report(const NormalConvergenceVerdict &v);
Json excluded_report(const std::vector<ExcludedIndex> &excluded);

/// One row per retained index: j, p_j, q_j, epsilon, delta, c, type.
std::string pinchuk_csv(const ScalingRun &run);

/// rho_tilde_j and sigma_j per retained index.
Json rho_tilde_report(const ScalingRun &run);

struct SliceView {
  double re_z_min = -2.0, re_z_max = 2.0;
  double re_w_min = -3.0, re_w_max = 1.0;
  int cells = 160;
};

/// Zero contours of rho_tilde_j on the real slice Im w = Im z = 0.
std::string slice_svg(const ScalingRun &run, const std::vector<long> &js, const SliceView &view = {});

/// Text cell of a CSV table: "p/q" for exact rationals, shortest decimal
/// otherwise.
std::string csv_real(const Scalar &s);

/// Serializes with sorted keys and a trailing newline.
std::string dump(const Json &j);

} // namespace scal
