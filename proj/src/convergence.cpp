#include "scal/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace scal {

void CompactBox::validate() const {
  for (double h : half_widths) {
    if (!(h > 0.0)) {
      throw Error("box half-widths must be positive");
    }
  }
}

void GridSpec::validate() const {
  if (samples < 2) {
    throw Error("grid needs at least 2 samples per axis");
  }
  if (!(tolerance > 0.0)) {
    throw Error("grid tolerance must be positive");
  }
}

void for_each_grid_point(const CompactBox &box, const GridSpec &grid,
                         const std::function<void(const NumericPoint &)> &fn) {
  box.validate();
  grid.validate();
  const NumericPoint c = to_numeric(box.center);
  const double mid[4] = {c[0].real(), c[0].imag(), c[1].real(), c[1].imag()};
  std::array<std::vector<double>, 4> axes;
  for (int k = 0; k < 4; ++k) {
    for (int i = 0; i < grid.samples; ++i) {
      axes[k].push_back(mid[k] - box.half_widths[k] + 2.0 * box.half_widths[k] * i / (grid.samples - 1));
    }
  }
  for (double a : axes[0]) {
    for (double b : axes[1]) {
      for (double x : axes[2]) {
        for (double y : axes[3]) {
          fn({std::complex<double>(a, b), std::complex<double>(x, y)});
        }
      }
    }
  }
}

NumericTriangular::NumericTriangular(const TriangularPolyMap &m)
    : alpha_(m.alpha.to_complex()), beta_(m.beta.to_complex()), gamma_(m.gamma.to_complex()) {
  for (const auto &c : m.f.coeffs()) {
    f_.push_back(c.to_complex());
  }
}

NumericPoint NumericTriangular::operator()(const NumericPoint &p) const {
  std::complex<double> f = 0.0;
  for (auto it = f_.rbegin(); it != f_.rend(); ++it) {
    f = f * p[1] + *it;
  }
  return {alpha_ * p[0] + f, beta_ * p[1] + gamma_};
}

NormalConvergenceVerdict normal_convergence_check(const std::vector<RealPoly> &rho_seq, const RealPoly &rho_hat,
                                                  const std::vector<CompactBox> &boxes, const GridSpec &grid,
                                                  std::size_t tail) {
  if (rho_seq.empty()) {
    throw Error("normal convergence check needs a nonempty sequence");
  }
  const std::size_t start = rho_seq.size() > tail ? rho_seq.size() - tail : 0;
  std::vector<NumericPoly> seq;
  for (std::size_t j = start; j < rho_seq.size(); ++j) {
    seq.emplace_back(rho_seq[j]);
  }
  const NumericPoly hat(rho_hat);
  const double tol = grid.tolerance;

  NormalConvergenceVerdict out;
  out.tolerance = tol;
  for (const auto &box : boxes) {
    for_each_grid_point(box, grid, [&](const NumericPoint &x) {
      if (!out.pass) {
        return;
      }
      ++out.points_checked;
      const double h = hat(x);
      bool inside_all = true;
      for (std::size_t k = 0; k < seq.size(); ++k) {
        const double value = seq[k](x);
        inside_all = inside_all && value < -tol;
        if (h < -tol && !(value < 0.0)) {
          out = {false, 2, x, static_cast<long>(start + k), value, tol, out.points_checked};
          return;
        }
      }
      if (inside_all && !(h < tol)) {
        out = {false, 1, x, -1, h, tol, out.points_checked};
      }
    });
  }
  return out;
}

MapLimit map_sequence_limit(const std::vector<TriangularPolyMap> &maps, std::size_t tail, double tol) {
  if (tail == 0 || maps.size() < tail) {
    throw Error("map sequence shorter than the Cauchy tail");
  }
  const std::size_t start = maps.size() - tail;
  std::set<MapTerm> slots;
  for (std::size_t k = start; k < maps.size(); ++k) {
    for (const auto &[term, value] : coefficients(maps[k])) {
      slots.insert(term);
    }
  }
  MapLimit out;
  out.limit = maps.back();
  for (const auto &term : slots) {
    std::vector<Scalar> values;
    for (std::size_t k = start; k < maps.size(); ++k) {
      values.push_back(coefficient(maps[k], term));
    }
    const bool constant = std::all_of(values.begin(), values.end(), [&](const Scalar &v) {
      return v.is_exact() && v == values.front();
    });
    double diam = 0.0;
    if (!constant) {
      for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t k = i + 1; k < values.size(); ++k) {
          diam = std::max(diam, std::abs(values[i].to_complex() - values[k].to_complex()));
        }
      }
    }
    out.bound = std::max(out.bound, diam);
    if (diam > tol) {
      out.divergent.push_back(term);
      if (!out.witness) {
        out.witness = term;
        out.trace = values;
      }
    }
  }
  out.cauchy = out.divergent.empty();
  return out;
}

double sup_deviation(const PointMap &f, const PointMap &g, const CompactBox &box, const GridSpec &grid) {
  double best = 0.0;
  for_each_grid_point(box, grid, [&](const NumericPoint &x) {
    const NumericPoint a = f(x);
    const NumericPoint b = g(x);
    best = std::max(best, std::sqrt(std::norm(a[0] - b[0]) + std::norm(a[1] - b[1])));
  });
  return best;
}

} // namespace scal
